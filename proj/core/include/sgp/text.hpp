#pragma once

#include <string>
#include <vector>

namespace sgp {

inline constexpr const char* kMaskToken = "[MASK]";
inline constexpr const char* kClsToken = "[CLS]";
inline constexpr const char* kSepToken = "[SEP]";
inline constexpr const char* kPadToken = "[PAD]";
inline constexpr const char* kUnkToken = "[UNK]";

// Normalization: ASCII-lowercase, split on whitespace, and break ASCII
// punctuation characters into standalone tokens. Bytes outside ASCII pass
// through untouched, so UTF-8 words stay whole. Blank input yields an
// empty sequence. Idempotent on its own space-joined output.
std::vector<std::string> tokenize(const std::string& text);

bool is_punctuation_token(const std::string& token);

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace sgp
