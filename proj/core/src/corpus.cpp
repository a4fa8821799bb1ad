#include "sgp/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sgp/io.hpp"
#include "sgp/rng.hpp"
#include "sgp/text.hpp"

namespace sgp {

using nlohmann::json;

ParticleInventory::ParticleInventory()
    : ParticleInventory(std::vector<std::string>{"lah", "meh", "hor"}) {}

ParticleInventory::ParticleInventory(std::vector<std::string> canonical)
    : canonical_(std::move(canonical)) {
  for (std::size_t i = 0; i < canonical_.size(); ++i) {
    for (std::size_t j = i + 1; j < canonical_.size(); ++j) {
      if (canonical_[i] == canonical_[j]) {
        throw std::invalid_argument("duplicate canonical particle: " +
                                    canonical_[i]);
      }
    }
  }
}

void ParticleInventory::add_alias(const std::string& variant,
                                  const std::string& canonical) {
  if (index_of(canonical) < 0) {
    throw std::invalid_argument("alias target is not a canonical particle: " +
                                canonical);
  }
  aliases_[variant] = canonical;
}

void ParticleInventory::load_aliases(const std::string& path) {
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto parts = split_on(lines[i], '\t');
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": expected 'variant<TAB>canonical'");
    }
    add_alias(parts[0], parts[1]);
  }
}

int ParticleInventory::index_of(const std::string& canonical) const {
  for (std::size_t i = 0; i < canonical_.size(); ++i) {
    if (canonical_[i] == canonical) return static_cast<int>(i);
  }
  return -1;
}

std::optional<std::string> ParticleInventory::resolve(
    const std::string& token) const {
  if (index_of(token) >= 0) return token;
  auto it = aliases_.find(token);
  if (it != aliases_.end()) return it->second;
  return std::nullopt;
}

CorpusFormat parse_corpus_format(const std::string& name) {
  if (name == "jsonl-dialogue") return CorpusFormat::JsonlDialogue;
  if (name == "tsv-lines") return CorpusFormat::TsvLines;
  throw std::invalid_argument("unknown corpus format: " + name);
}

void Corpus::add(Utterance u) {
  const std::string key = u.key();
  if (by_key_.count(key)) {
    throw std::runtime_error("duplicate utterance key: " + key);
  }
  if (!by_dialogue_.count(u.dialogue_id)) {
    dialogue_order_.push_back(u.dialogue_id);
  }
  by_key_[key] = utterances_.size();
  by_dialogue_[u.dialogue_id].push_back(utterances_.size());
  utterances_.push_back(std::move(u));
}

const Utterance* Corpus::find(const std::string& dialogue_id,
                              int turn_index) const {
  return find(dialogue_id + ":" + std::to_string(turn_index));
}

const Utterance* Corpus::find(const std::string& key) const {
  auto it = by_key_.find(key);
  return it == by_key_.end() ? nullptr : &utterances_[it->second];
}

std::vector<std::string> Corpus::dialogue_ids() const {
  return dialogue_order_;
}

std::vector<const Utterance*> Corpus::dialogue(
    const std::string& dialogue_id) const {
  std::vector<const Utterance*> out;
  auto it = by_dialogue_.find(dialogue_id);
  if (it == by_dialogue_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t idx : it->second) out.push_back(&utterances_[idx]);
  std::sort(out.begin(), out.end(), [](const Utterance* a, const Utterance* b) {
    return a->turn_index < b->turn_index;
  });
  return out;
}

Corpus ingest_corpus(const std::string& path, CorpusFormat format) {
  Corpus corpus;
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(i + 1);
    Utterance u;
    if (format == CorpusFormat::JsonlDialogue) {
      json rec = json::parse(line, nullptr, false);
      if (rec.is_discarded() || !rec.is_object()) {
        throw std::runtime_error(where + ": malformed JSON record");
      }
      if (!rec.contains("dialogue_id") || !rec["dialogue_id"].is_string() ||
          !rec.contains("turn") || !rec["turn"].is_number_integer() ||
          !rec.contains("text") || !rec["text"].is_string()) {
        throw std::runtime_error(
            where + ": record needs dialogue_id (string), turn (int), "
                    "text (string)");
      }
      u.dialogue_id = rec["dialogue_id"].get<std::string>();
      u.turn_index = rec["turn"].get<int>();
      if (u.turn_index < 0) {
        throw std::runtime_error(where + ": negative turn index");
      }
      if (rec.contains("speaker") && rec["speaker"].is_string()) {
        u.speaker_id = rec["speaker"].get<std::string>();
      }
      u.text = rec["text"].get<std::string>();
    } else {
      u.dialogue_id = std::to_string(i + 1);
      u.turn_index = 0;
      u.text = line;
    }
    u.tokens = tokenize(u.text);
    try {
      corpus.add(std::move(u));
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(where + ": " + e.what());
    }
  }
  return corpus;
}

std::string corpus_to_jsonl(const Corpus& corpus) {
  std::ostringstream out;
  for (const std::string& did : corpus.dialogue_ids()) {
    for (const Utterance* u : corpus.dialogue(did)) {
      json rec;
      rec["dialogue_id"] = u->dialogue_id;
      rec["turn"] = u->turn_index;
      if (!u->speaker_id.empty()) rec["speaker"] = u->speaker_id;
      rec["text"] = u->text;
      out << rec.dump() << "\n";
    }
  }
  return out.str();
}

std::optional<ParticleOccurrence> detect_final_particle(
    const Utterance& utterance, const ParticleInventory& inventory) {
  for (int i = static_cast<int>(utterance.tokens.size()) - 1; i >= 0; --i) {
    if (is_punctuation_token(utterance.tokens[i])) continue;
    auto canonical = inventory.resolve(utterance.tokens[i]);
    if (!canonical) return std::nullopt;
    ParticleOccurrence occ;
    occ.dialogue_id = utterance.dialogue_id;
    occ.turn_index = utterance.turn_index;
    occ.particle = *canonical;
    occ.token_position = i;
    return occ;
  }
  return std::nullopt;
}

Utterance mask_particle(const Utterance& utterance,
                        const ParticleOccurrence& occ) {
  if (occ.dialogue_id != utterance.dialogue_id ||
      occ.turn_index != utterance.turn_index) {
    throw std::invalid_argument("occurrence does not belong to utterance " +
                                utterance.key());
  }
  if (occ.token_position < 0 ||
      occ.token_position >= static_cast<int>(utterance.tokens.size())) {
    throw std::invalid_argument(
        "occurrence position " + std::to_string(occ.token_position) +
        " out of range for utterance " + utterance.key() + " with " +
        std::to_string(utterance.tokens.size()) + " tokens");
  }
  Utterance masked = utterance;
  masked.tokens[occ.token_position] = kMaskToken;
  masked.text = join_tokens(masked.tokens);
  return masked;
}

std::vector<DialogueWindow> extract_windows(
    const Corpus& corpus, const ParticleInventory& inventory) {
  std::vector<DialogueWindow> windows;
  for (const std::string& did : corpus.dialogue_ids()) {
    const auto turns = corpus.dialogue(did);
    for (std::size_t i = 2; i < turns.size(); ++i) {
      if (turns[i]->turn_index != turns[i - 1]->turn_index + 1 ||
          turns[i - 1]->turn_index != turns[i - 2]->turn_index + 1) {
        continue;
      }
      auto occ = detect_final_particle(*turns[i], inventory);
      if (!occ) continue;
      DialogueWindow w;
      w.turns[0] = *turns[i - 2];
      w.turns[1] = *turns[i - 1];
      w.turns[2] = *turns[i];
      w.final_occurrence = *occ;
      windows.push_back(std::move(w));
    }
  }
  return windows;
}

std::vector<DialogueWindow> balance_by_particle(
    const std::vector<DialogueWindow>& windows,
    const ParticleInventory& inventory, std::uint64_t seed) {
  std::vector<std::vector<std::size_t>> per_particle(
      inventory.canonical().size());
  for (std::size_t i = 0; i < windows.size(); ++i) {
    const int p = inventory.index_of(windows[i].final_occurrence.particle);
    if (p < 0) {
      throw std::invalid_argument("window particle not in inventory: " +
                                  windows[i].final_occurrence.particle);
    }
    per_particle[p].push_back(i);
  }
  std::size_t min_count = windows.size();
  for (std::size_t p = 0; p < per_particle.size(); ++p) {
    if (per_particle[p].empty()) {
      throw std::runtime_error("no windows for particle: " +
                               inventory.canonical()[p]);
    }
    min_count = std::min(min_count, per_particle[p].size());
  }
  std::vector<std::size_t> kept;
  for (std::size_t p = 0; p < per_particle.size(); ++p) {
    Rng rng(Rng::mix(seed, p));
    auto pool = per_particle[p];
    rng.shuffle(pool);
    pool.resize(min_count);
    kept.insert(kept.end(), pool.begin(), pool.end());
  }
  std::sort(kept.begin(), kept.end());
  std::vector<DialogueWindow> out;
  out.reserve(kept.size());
  for (std::size_t idx : kept) out.push_back(windows[idx]);
  return out;
}

}  // namespace sgp
