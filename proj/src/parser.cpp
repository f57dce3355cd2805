#include <cctype>

#include "specdens/eqlogic.hpp"
#include "specdens/errors.hpp"

namespace specdens::eqlogic {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = formula();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return f;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!at(c)) {
      if (pos_ >= text_.size()) {
        throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      }
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  // A run of non-space, non-paren characters.
  std::string_view word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    }
    return text_.substr(start, pos_ - start);
  }

  Var var() {
    skip_space();
    std::size_t start = pos_;
    std::string_view w = word();
    if (!is_valid_var_name(w) || w == "true" || w == "false") {
      throw ParseError("expected a variable, got '" + std::string(w) + "'", start);
    }
    return Var::intern(w);
  }

  Formula formula() {
    skip_space();
    std::size_t start = pos_;
    if (!at('(')) {
      std::string_view w = word();
      if (w == "true") return Formula::truth();
      if (w == "false") return Formula::falsity();
      throw ParseError("unknown token '" + std::string(w) + "'", start);
    }
    ++pos_;
    skip_space();
    std::size_t op_pos = pos_;
    std::string_view op = word();
    Formula result = Formula::truth();
    if (op == "=") {
      Var x = var();
      Var y = var();
      result = Formula::eq(x, y);
    } else if (op == "not") {
      result = Formula::neg(formula());
    } else if (op == "and" || op == "or") {
      std::vector<Formula> parts;
      parts.push_back(formula());
      while (!at(')')) {
        if (pos_ >= text_.size()) break;
        parts.push_back(formula());
      }
      result = op == "and" ? Formula::conj(std::move(parts))
                           : Formula::disj(std::move(parts));
    } else if (op == "=>") {
      Formula a = formula();
      Formula b = formula();
      result = Formula::implies(std::move(a), std::move(b));
    } else if (op == "iff") {
      Formula a = formula();
      Formula b = formula();
      result = Formula::iff(std::move(a), std::move(b));
    } else if (op == "distinct") {
      std::vector<Var> vars;
      vars.push_back(var());
      vars.push_back(var());
      while (!at(')')) {
        if (pos_ >= text_.size()) break;
        vars.push_back(var());
      }
      result = Formula::distinct(vars);
    } else {
      throw ParseError("unknown operator '" + std::string(op) + "'", op_pos);
    }
    expect(')');
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace specdens::eqlogic
