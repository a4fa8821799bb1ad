#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sgp {

struct Utterance {
  std::string dialogue_id;
  int turn_index = 0;
  std::string speaker_id;  // empty when absent
  std::string text;
  std::vector<std::string> tokens;  // tokenize(text)

  std::string key() const {
    return dialogue_id + ":" + std::to_string(turn_index);
  }
};

// Canonical sentence-final particles plus spelling aliases. Matching is exact
// on the canonical forms and on declared aliases; the alias table ships empty
// by default.
class ParticleInventory {
 public:
  ParticleInventory();  // lah, meh, hor
  explicit ParticleInventory(std::vector<std::string> canonical);

  void add_alias(const std::string& variant, const std::string& canonical);
  void load_aliases(const std::string& path);  // TSV: variant \t canonical

  const std::vector<std::string>& canonical() const { return canonical_; }
  int index_of(const std::string& canonical) const;

  // Canonical particle for a token, resolving aliases; empty if none.
  std::optional<std::string> resolve(const std::string& token) const;

 private:
  std::vector<std::string> canonical_;
  std::map<std::string, std::string> aliases_;
};

struct ParticleOccurrence {
  std::string dialogue_id;
  int turn_index = 0;
  std::string particle;     // canonical form
  int token_position = 0;   // last non-punctuation token index

  std::string utterance_key() const {
    return dialogue_id + ":" + std::to_string(turn_index);
  }
};

struct DialogueWindow {
  Utterance turns[3];  // strictly consecutive, same dialogue
  ParticleOccurrence final_occurrence;  // on turns[2]
};

enum class CorpusFormat { JsonlDialogue, TsvLines };

CorpusFormat parse_corpus_format(const std::string& name);

class Corpus {
 public:
  void add(Utterance u);  // throws on duplicate (dialogue_id, turn_index)

  const std::vector<Utterance>& utterances() const { return utterances_; }
  std::size_t size() const { return utterances_.size(); }

  const Utterance* find(const std::string& dialogue_id, int turn_index) const;
  const Utterance* find(const std::string& key) const;

  // Dialogue ids in first-seen order; turns of one dialogue sorted by index.
  std::vector<std::string> dialogue_ids() const;
  std::vector<const Utterance*> dialogue(const std::string& dialogue_id) const;

 private:
  std::vector<Utterance> utterances_;
  std::map<std::string, std::size_t> by_key_;
  std::vector<std::string> dialogue_order_;
  std::map<std::string, std::vector<std::size_t>> by_dialogue_;
};

// Parse a corpus file. jsonl-dialogue: one object per line with keys
// dialogue_id, turn, optional speaker, text. tsv-lines: one utterance text
// per line, dialogue_id = 1-based line number, turn = 0. Malformed records
// and duplicate (dialogue_id, turn) raise errors naming the line.
Corpus ingest_corpus(const std::string& path, CorpusFormat format);

// Re-emit a corpus in jsonl-dialogue form (normalized interchange artifact).
std::string corpus_to_jsonl(const Corpus& corpus);

std::optional<ParticleOccurrence> detect_final_particle(
    const Utterance& utterance, const ParticleInventory& inventory);

// Replace the token at occ.token_position with [MASK]; the input is copied.
Utterance mask_particle(const Utterance& utterance,
                        const ParticleOccurrence& occ);

// Every position where three consecutive turns exist and the third carries a
// sentence-final particle, ordered by (dialogue_id first-seen order, turn).
std::vector<DialogueWindow> extract_windows(const Corpus& corpus,
                                            const ParticleInventory& inventory);

// Down-sample so every canonical particle keeps exactly the minimum
// per-particle count. Sampling is without replacement and deterministic
// under the seed. A canonical particle with zero windows is an error.
std::vector<DialogueWindow> balance_by_particle(
    const std::vector<DialogueWindow>& windows,
    const ParticleInventory& inventory, std::uint64_t seed);

}  // namespace sgp
