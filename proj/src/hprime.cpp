#include "hecke/hprime.hpp"

#include <stdexcept>

namespace hecke {

namespace {

LaurentPoly elementary_symmetric(int vars, const std::vector<int>& params,
                                 int k) {
  // prod_j (1 + u_j t), coefficient of t^k, built incrementally.
  std::vector<LaurentPoly> coeff(params.size() + 1, LaurentPoly(vars));
  coeff[0] = LaurentPoly::constant(vars, 1);
  size_t used = 0;
  for (int p : params) {
    ++used;
    for (size_t d = used; d >= 1; --d) {
      coeff[d] += coeff[d - 1] * LaurentPoly::variable(vars, p);
    }
  }
  return coeff[k];
}

int hp_vars(const HPrimeElement& a) {
  if (a.coeffs.empty()) throw std::invalid_argument("empty H' element");
  return a.coeffs[0].vars();
}

}  // namespace

HeckeRelation HeckeRelation::from_parameters(int vars,
                                             const std::vector<int>& params) {
  HeckeRelation r;
  r.e = static_cast<int>(params.size());
  r.rel.assign(r.e, LaurentPoly(vars));
  for (int k = 1; k <= r.e; ++k) {
    LaurentPoly f = elementary_symmetric(vars, params, k);
    r.rel[r.e - k] = (k % 2 == 1) ? f : -f;
  }
  return r;
}

bool HPrimeElement::is_zero() const {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

HPrimeElement hp_zero(const HeckeRelation& rel, int vars) {
  return {std::vector<LaurentPoly>(rel.e, LaurentPoly(vars))};
}

HPrimeElement hp_one(const HeckeRelation& rel, int vars) {
  HPrimeElement a = hp_zero(rel, vars);
  a.coeffs[0] = LaurentPoly::constant(vars, 1);
  return a;
}

HPrimeElement hp_sigma(const HeckeRelation& rel, int vars) {
  if (rel.e < 2) throw std::invalid_argument("H' of rank < 2");
  HPrimeElement a = hp_zero(rel, vars);
  a.coeffs[1] = LaurentPoly::constant(vars, 1);
  return a;
}

HPrimeElement hp_scalar(const HeckeRelation& rel, const LaurentPoly& c) {
  HPrimeElement a = hp_zero(rel, c.vars());
  a.coeffs[0] = c;
  return a;
}

HPrimeElement hp_add(const HPrimeElement& a, const HPrimeElement& b) {
  if (a.coeffs.size() != b.coeffs.size()) {
    throw std::invalid_argument("H' elements of different rank");
  }
  HPrimeElement r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

HPrimeElement hp_sub(const HPrimeElement& a, const HPrimeElement& b) {
  return hp_add(a, hp_neg(b));
}

HPrimeElement hp_neg(const HPrimeElement& a) {
  HPrimeElement r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

HPrimeElement hp_mul(const HeckeRelation& rel, const HPrimeElement& a,
                     const HPrimeElement& b) {
  const int e = rel.e;
  const int vars = hp_vars(a);
  if (static_cast<int>(a.coeffs.size()) != e ||
      static_cast<int>(b.coeffs.size()) != e) {
    throw std::invalid_argument("H' rank mismatch");
  }
  std::vector<LaurentPoly> prod(2 * e - 1, LaurentPoly(vars));
  for (int i = 0; i < e; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (int j = 0; j < e; ++j) {
      if (b.coeffs[j].is_zero()) continue;
      prod[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  // Reduce sigma^d for d >= e via the positive Hecke relation.
  for (int d = 2 * e - 2; d >= e; --d) {
    if (prod[d].is_zero()) continue;
    for (int j = 0; j < e; ++j) {
      prod[d - e + j] += prod[d] * rel.rel[j];
    }
    prod[d] = LaurentPoly(vars);
  }
  prod.resize(e);
  return {std::move(prod)};
}

HPrimeElement hp_pow(const HeckeRelation& rel, const HPrimeElement& a,
                     int n) {
  const int vars = hp_vars(a);
  if (n < 0) throw std::invalid_argument("negative power");
  HPrimeElement r = hp_one(rel, vars);
  for (int i = 0; i < n; ++i) r = hp_mul(rel, r, a);
  return r;
}

HPrimeElement hp_sigma_inverse(const HeckeRelation& rel, int vars) {
  const int e = rel.e;
  auto a0_inv = rel.rel[0].unit_inverse();
  if (!a0_inv) {
    throw std::invalid_argument("constant Hecke coefficient is not a unit");
  }
  HPrimeElement inv = hp_zero(rel, vars);
  inv.coeffs[e - 1] = *a0_inv;
  for (int t = 1; t < e; ++t) {
    inv.coeffs[e - 1 - t] = -(*a0_inv * rel.rel[e - t]);
  }
  HPrimeElement check = hp_mul(rel, hp_sigma(rel, vars), inv);
  if (check != hp_one(rel, vars)) {
    throw std::logic_error("inverse Hecke relation failed verification");
  }
  return inv;
}

PolyMatrix hp_regular_matrix(const HeckeRelation& rel,
                             const HPrimeElement& a) {
  const int e = rel.e;
  const int vars = hp_vars(a);
  PolyMatrix m(e, e, LaurentPoly(vars));
  HPrimeElement col = a;
  HPrimeElement sigma = hp_sigma(rel, vars);
  for (int j = 0; j < e; ++j) {
    for (int i = 0; i < e; ++i) m.at(i, j) = col.coeffs[i];
    if (j + 1 < e) col = hp_mul(rel, col, sigma);
  }
  return m;
}

}  // namespace hecke
