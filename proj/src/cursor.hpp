#pragma once

// Whitespace-insensitive scanner shared by the ring, involution and element parsers.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "starlab/error.hpp"

namespace starlab::detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t base_offset = 0) : text_(text), base_(base_offset) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long long integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000LL) fail("integer too large");
      ++pos_;
    }
    return negative ? -value : value;
  }
  unsigned positive(const char* what) {
    const auto p = pos_;
    const auto v = integer();
    if (v < 0) throw ParseError(std::string(what) + " must be nonnegative", base_ + p);
    return static_cast<unsigned>(v);
  }
  /// Raw text up to (not including) the next top-level `stop` character, brackets balanced.
  std::string balanced_until(std::string_view stops) {
    skip_ws();
    int depth = 0;
    std::string out;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(' || c == '[' || c == '<') ++depth;
      if (c == ')' || c == ']' || c == '>') {
        if (depth == 0) break;
        --depth;
      }
      if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
      ++pos_;
    }
    return out;
  }
  std::size_t position() const noexcept { return base_ + pos_; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, base_ + pos_); }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace starlab::detail
