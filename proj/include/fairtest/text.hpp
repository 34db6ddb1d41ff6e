#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fairtest {

// Word characters for mention scanning and tokenization: ASCII letters,
// digits, hyphen and apostrophe ("African-American", "middle-class").
bool is_word_char(char c) noexcept;

std::string to_lower(std::string_view s);

// A word token with its byte span in the source text.
struct Token {
  std::string lower;
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<Token> tokenize(std::string_view text);

// Rule-based surface repair shared by template rendering and every MR:
//   - whitespace runs collapse to one space, ends trimmed
//   - no space before , . ? ! ; :  and no repeated commas
//   - a comma directly before terminal punctuation is dropped
//   - a/an agreement by vowel-letter heuristic on the following word
//   - first letter capitalized
std::string repair(std::string_view text);

enum class ListStyle { kAnd, kComma, kSpace };

// kAnd: "x", "x and y", "x, y, and z"; kComma: "x, y, z"; kSpace: "x y z".
std::string join_list(const std::vector<std::string>& items, ListStyle style);

std::string_view to_string(ListStyle style) noexcept;
ListStyle parse_list_style(std::string_view s);

}  // namespace fairtest
