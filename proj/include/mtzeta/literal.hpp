#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mtzeta/indices.hpp"

namespace mtzeta {

// A product of single zeta factors zeta(e_1) * ... * zeta(e_r), written as
// the literal P(e_1,...,e_r).  Validity of the exponents (each >= 2 for
// convergence) is checked where the product is expanded, not here.
struct zeta_product_expr {
  std::vector<int> exponents;

  friend bool operator==(const zeta_product_expr&, const zeta_product_expr&) = default;
};

// Parse failure with the 1-based column of the offending character (one past
// the end for truncated input).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t column)
      : std::runtime_error(message + " (column " + std::to_string(column) + ")"),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

using term_literal = std::variant<mt_index, mzv_index, zeta_product_expr>;

namespace detail {

// Grammar (whitespace allowed between any two tokens):
//   literal  := 'T' '(' int-list ';' int ')'
//             | 'Z' '(' int-list ')'
//             | 'P' '(' int-list ')'
//   int-list := int (',' int)*
//   int      := positive decimal integer
class literal_parser {
 public:
  explicit literal_parser(std::string_view text) : text_(text) {}

  term_literal parse() {
    skip_space();
    const char head = next("expected one of 'T', 'Z', 'P'");
    if (head != 'T' && head != 'Z' && head != 'P') {
      fail_at(pos_ - 1, "expected one of 'T', 'Z', 'P'");
    }
    expect('(');
    std::vector<int> args = integer_list();
    if (head == 'T') {
      expect(';');
      const int last = positive_integer();
      expect(')');
      finish();
      return mt_index(std::move(args), last);
    }
    expect(')');
    finish();
    if (head == 'Z') return mzv_index(std::move(args));
    return zeta_product_expr{std::move(args)};
  }

 private:
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) {
    throw parse_error(message, pos + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char next(const char* expectation) {
    if (pos_ >= text_.size()) fail_at(pos_, std::string(expectation) + ", got end of input");
    return text_[pos_++];
  }

  void expect(char token) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != token) {
      fail_at(pos_, std::string("expected '") + token + "'");
    }
    ++pos_;
  }

  int positive_integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail_at(start, "expected a positive integer");
    long value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + (text_[i] - '0');
      if (value > 1000000) fail_at(start, "argument too large");
    }
    if (value < 1) fail_at(start, "arguments must be >= 1");
    return static_cast<int>(value);
  }

  std::vector<int> integer_list() {
    std::vector<int> values;
    values.push_back(positive_integer());
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        values.push_back(positive_integer());
      } else {
        return values;
      }
    }
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail_at(pos_, "unexpected trailing input");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string join_args(const std::vector<int>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(args[i]);
  }
  return out;
}

}  // namespace detail

inline term_literal parse_literal(std::string_view text) {
  return detail::literal_parser(text).parse();
}

// Canonical renderings; parse_literal(render(x)) == x for every index.
inline std::string render(const mt_index& t) {
  return "T(" + detail::join_args(t.args()) + ";" + std::to_string(t.last()) + ")";
}

inline std::string render(const mzv_index& z) {
  return "Z(" + detail::join_args(z.args()) + ")";
}

inline std::string render(const zeta_product_expr& p) {
  return "P(" + detail::join_args(p.exponents) + ")";
}

inline std::string render(const term_literal& literal) {
  return std::visit([](const auto& value) { return render(value); }, literal);
}

}  // namespace mtzeta
