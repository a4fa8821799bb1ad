#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sgp/corpus.hpp"

namespace sgp {

// Class order used everywhere a relevance label becomes an integer.
enum class NspLabel { Next = 0, Random = 1, Related = 2 };

std::string nsp_label_name(NspLabel label);
NspLabel nsp_label_from_name(const std::string& name);

struct NspExample {
  std::string group_id;  // ties all candidates of one context together
  std::array<std::vector<std::string>, 3> context;  // token sequences
  std::array<std::string, 3> context_keys;
  std::vector<std::string> candidate;
  std::string candidate_key;
  NspLabel label = NspLabel::Next;
};

struct PPredExample {
  std::vector<std::string> prev2;   // d_{i-2}
  std::vector<std::string> prev1;   // d_{i-1}
  std::vector<std::string> masked;  // d_i' with exactly one [MASK]
  std::array<std::string, 3> keys;
  std::string gold_particle;
  int mask_position = 0;
};

struct SubstitutionGroup {
  std::string group_id;
  std::vector<std::vector<std::string>> candidates;  // size 3
  int gold_index = 0;        // position of the unmodified original
  int particle_position = 0; // token index the candidates differ at
};

struct NspBuildStats {
  std::size_t windows = 0;
  std::size_t contexts_used = 0;
  std::size_t skipped_no_next = 0;
  std::size_t skipped_collisions = 0;
};

// Training set: per usable context exactly one positive (the true next
// utterance) and one negative, the negative related-or-random with equal
// chance. Windows whose dialogue ends at the window are dropped. A corpus
// with a single dialogue has no random pool and is an error.
std::vector<NspExample> build_nsp_train(const Corpus& corpus,
                                        const ParticleInventory& inventory,
                                        std::uint64_t seed,
                                        NspBuildStats* stats = nullptr);

// Test set: per group one positive plus nine negatives, each negative
// independently related-or-random, no duplicate candidate token sequence
// within a group. Contexts that cannot fill a group after bounded
// resampling are skipped and counted; all-skipped is an error.
std::vector<NspExample> build_nsp_test(const Corpus& corpus,
                                       const ParticleInventory& inventory,
                                       std::uint64_t seed,
                                       NspBuildStats* stats = nullptr);

// One example per balanced window: (d_{i-2}, d_{i-1}, d_i' with the particle
// masked), gold classes exactly balanced via balance_by_particle.
std::vector<PPredExample> build_ppred(const Corpus& corpus,
                                      const ParticleInventory& inventory,
                                      std::uint64_t seed);

struct SubstitutionStats {
  std::size_t positives = 0;
  std::size_t skipped_no_particle = 0;
};

// For every test positive whose candidate carries a sentence-final particle,
// a 3-candidate group: the original plus the two other-particle
// substitutions, differing only at the particle token.
std::vector<SubstitutionGroup> build_nsp_on_ppred_test(
    const std::vector<NspExample>& nsp_test, const ParticleInventory& inventory,
    std::uint64_t seed, SubstitutionStats* stats = nullptr);

// JSONL serialization; one example (or one substitution group) per line,
// bit-stable across runs for a fixed seed.
std::string nsp_to_jsonl(const std::vector<NspExample>& examples);
std::vector<NspExample> nsp_from_jsonl(const std::string& content);
std::string ppred_to_jsonl(const std::vector<PPredExample>& examples);
std::vector<PPredExample> ppred_from_jsonl(const std::string& content);
std::string substitutions_to_jsonl(const std::vector<SubstitutionGroup>& groups);
std::vector<SubstitutionGroup> substitutions_from_jsonl(
    const std::string& content);

}  // namespace sgp
