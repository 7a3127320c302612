#include "hecke/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace hecke {

namespace {

class Parser {
 public:
  Parser(const std::string& text, int vars, const HeckeRelation& rel,
         const std::map<std::string, LaurentPoly>& constants)
      : s_(text), vars_(vars), rel_(rel), constants_(constants) {}

  HPrimeElement parse() {
    HPrimeElement r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad expression '" + s_ + "': " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  HPrimeElement expr() {
    HPrimeElement r = term();
    for (;;) {
      if (eat('+')) {
        r = hp_add(r, term());
      } else if (eat('-')) {
        r = hp_sub(r, term());
      } else {
        return r;
      }
    }
  }

  HPrimeElement term() {
    HPrimeElement r = unary();
    for (;;) {
      if (eat('*')) {
        r = hp_mul(rel_, r, unary());
      } else if (eat('/')) {
        r = hp_mul(rel_, r, scalar_inverse(unary()));
      } else {
        return r;
      }
    }
  }

  HPrimeElement unary() {
    if (eat('-')) return hp_neg(unary());
    return power();
  }

  HPrimeElement power() {
    HPrimeElement base = atom();
    if (!eat('^')) return base;
    int n = integer();
    if (n >= 0) return hp_pow(rel_, base, n);
    // Negative powers: the generator itself, or a scalar monomial unit.
    HPrimeElement inv;
    if (base == hp_sigma(rel_, vars_)) {
      inv = hp_sigma_inverse(rel_, vars_);
    } else {
      inv = scalar_inverse(base);
    }
    return hp_pow(rel_, inv, -n);
  }

  HPrimeElement atom() {
    skip_ws();
    if (eat('(')) {
      HPrimeElement r = expr();
      if (!eat(')')) fail("missing ')'");
      return r;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return hp_scalar(rel_, LaurentPoly::constant(vars_, integer()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = identifier();
      if (name == "s") return hp_sigma(rel_, vars_);
      if (name.size() >= 2 && name[0] == 'u') {
        int idx = std::stoi(name.substr(1)) - 1;
        if (idx < 0 || idx >= vars_) fail("unknown variable " + name);
        return hp_scalar(rel_, LaurentPoly::variable(vars_, idx));
      }
      auto it = constants_.find(name);
      if (it == constants_.end()) fail("unknown name " + name);
      return hp_scalar(rel_, it->second);
    }
    fail("unexpected character");
  }

  int integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) {
      fail("expected integer");
    }
    return std::stoi(s_.substr(start, pos_ - start));
  }

  std::string identifier() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  HPrimeElement scalar_inverse(const HPrimeElement& a) {
    for (size_t i = 1; i < a.coeffs.size(); ++i) {
      if (!a.coeffs[i].is_zero()) fail("division by a non-scalar");
    }
    auto inv = a.coeffs[0].unit_inverse();
    if (!inv) fail("division by a non-unit");
    return hp_scalar(rel_, *inv);
  }

  const std::string& s_;
  size_t pos_ = 0;
  int vars_;
  const HeckeRelation& rel_;
  const std::map<std::string, LaurentPoly>& constants_;
};

}  // namespace

HPrimeElement parse_hprime_expr(
    const std::string& text, int vars, const HeckeRelation& rel,
    const std::map<std::string, LaurentPoly>& constants) {
  return Parser(text, vars, rel, constants).parse();
}

LaurentPoly parse_scalar_expr(
    const std::string& text, int vars, const HeckeRelation& rel,
    const std::map<std::string, LaurentPoly>& constants) {
  HPrimeElement a = parse_hprime_expr(text, vars, rel, constants);
  for (size_t i = 1; i < a.coeffs.size(); ++i) {
    if (!a.coeffs[i].is_zero()) {
      throw std::invalid_argument("expected a scalar expression: " + text);
    }
  }
  return a.coeffs[0];
}

}  // namespace hecke
