#ifndef HECKE_RING_HPP
#define HECKE_RING_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hecke {

using Int = mpz_class;
using Rat = mpq_class;
using ExpVec = std::vector<int>;

// Graded lexicographic order on exponent vectors: total degree first,
// then lexicographic. Returns <0, 0, >0.
int cmp_graded_lex(const ExpVec& a, const ExpVec& b);

struct Term {
  ExpVec exp;
  Int coeff;
};

/*
 * Element of the Laurent polynomial ring Z[u1^+-, ..., uk^+-].
 *
 * Terms are kept sorted in descending graded-lex order with nonzero
 * coefficients, so equal values have identical term lists.
 */
class LaurentPoly {
 public:
  explicit LaurentPoly(int vars = 0) : vars_(vars) {}

  static LaurentPoly constant(int vars, Int c);
  static LaurentPoly variable(int vars, int index, int power = 1);
  static LaurentPoly monomial(int vars, ExpVec exp, Int coeff);
  // Canonicalizes: sorts, merges duplicates, drops zeros.
  static LaurentPoly from_terms(int vars, std::vector<Term> terms);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // If the value is a unit of R (a single term with coefficient +-1),
  // returns its inverse.
  std::optional<LaurentPoly> unit_inverse() const;
  bool is_unit() const { return unit_inverse().has_value(); }

  // gcd of the integer coefficients (positive; 0 for the zero polynomial).
  Int content() const;
  // Componentwise minimum of the exponent vectors over all terms.
  ExpVec exponent_floor() const;
  // Multiply by the monomial u^delta.
  LaurentPoly shifted(const ExpVec& delta) const;
  LaurentPoly scaled(const Int& c) const;
  // Divide every coefficient by c; c must divide each coefficient.
  LaurentPoly divided_by_int(const Int& c) const;

  std::string to_text() const;
  static LaurentPoly from_text(int vars, const std::string& s);
  nlohmann::json to_json() const;
  static LaurentPoly from_json(int vars, const nlohmann::json& j);

 private:
  int vars_ = 0;
  std::vector<Term> terms_;
};

// Exact quotient a / b, or nullopt if b does not divide a in R.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a,
                                     const LaurentPoly& b);

// Evaluate at a point with nonzero rational coordinates.
Rat specialize(const LaurentPoly& p, const std::vector<Rat>& point);

/*
 * Element of Frac(R), kept as num/den with den != 0.
 *
 * Normalization strips the monomial-unit factor of the denominator
 * (its trailing term is moved to exponent zero, leading coefficient
 * positive) and the common integer content, and collapses the fraction
 * to a polynomial whenever den divides num exactly. No multivariate gcd
 * is attempted; equality is decided by cross-multiplication.
 */
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(LaurentPoly num)
      : num_(std::move(num)), den_(LaurentPoly::constant(num_.vars(), 1)) {}
  RatFunc(LaurentPoly num, LaurentPoly den);

  static RatFunc zero(int vars) { return RatFunc(LaurentPoly(vars)); }
  static RatFunc one(int vars) {
    return RatFunc(LaurentPoly::constant(vars, 1));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  int vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  // Equality by cross-multiplication.
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // The value as an element of R, if den divides num exactly.
  std::optional<LaurentPoly> as_poly() const;
  bool in_R() const { return as_poly().has_value(); }

  std::string to_text() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly::constant(0, 1);
};

}  // namespace hecke

#endif
