#include "sgp/text.hpp"

#include <cctype>

namespace sgp {

namespace {

bool is_ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_ascii_punct(unsigned char c) { return c < 128 && std::ispunct(c); }

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  };
  for (unsigned char c : text) {
    if (is_ascii_space(c)) {
      flush();
    } else if (is_ascii_punct(c)) {
      flush();
      tokens.emplace_back(1, static_cast<char>(c));
    } else {
      current.push_back(
          c < 128 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c));
    }
  }
  flush();
  return tokens;
}

bool is_punctuation_token(const std::string& token) {
  if (token.empty()) return false;
  for (unsigned char c : token) {
    if (!is_ascii_punct(c)) return false;
  }
  return true;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace sgp
