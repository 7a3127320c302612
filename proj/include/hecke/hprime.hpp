#ifndef HECKE_HPRIME_HPP
#define HECKE_HPRIME_HPP

#include <vector>

#include "hecke/linalg.hpp"
#include "hecke/ring.hpp"

namespace hecke {

// Coefficients of the positive Hecke relation for one conjugacy family
// of generators: sigma^e = rel[e-1] sigma^{e-1} + ... + rel[0], with
// rel[e-k] = (-1)^{k-1} f_k(params) for f_k elementary symmetric.
struct HeckeRelation {
  int e = 0;
  std::vector<LaurentPoly> rel;  // size e, index = power of sigma

  // Builds the relation from the family's parameter indices in R.
  static HeckeRelation from_parameters(int vars,
                                       const std::vector<int>& params);
};

/*
 * Element of H' = R[sigma0] / (positive Hecke relation), as the length-e
 * coefficient vector of 1, sigma0, ..., sigma0^{e-1}. H' is commutative.
 */
struct HPrimeElement {
  std::vector<LaurentPoly> coeffs;

  bool is_zero() const;
  bool operator==(const HPrimeElement& o) const { return coeffs == o.coeffs; }
  bool operator!=(const HPrimeElement& o) const { return !(*this == o); }
};

HPrimeElement hp_zero(const HeckeRelation& rel, int vars);
HPrimeElement hp_one(const HeckeRelation& rel, int vars);
HPrimeElement hp_sigma(const HeckeRelation& rel, int vars);
HPrimeElement hp_scalar(const HeckeRelation& rel, const LaurentPoly& c);

HPrimeElement hp_add(const HPrimeElement& a, const HPrimeElement& b);
HPrimeElement hp_sub(const HPrimeElement& a, const HPrimeElement& b);
HPrimeElement hp_neg(const HPrimeElement& a);
HPrimeElement hp_mul(const HeckeRelation& rel, const HPrimeElement& a,
                     const HPrimeElement& b);
HPrimeElement hp_pow(const HeckeRelation& rel, const HPrimeElement& a, int n);

// sigma0^{-1} via the inverse Hecke relation; satisfies
// hp_mul(sigma0, result) == 1 (checked).
HPrimeElement hp_sigma_inverse(const HeckeRelation& rel, int vars);

// e x e matrix of the left-regular action of a on 1, sigma0, ...,
// sigma0^{e-1}: column j holds the coefficients of a * sigma0^j.
PolyMatrix hp_regular_matrix(const HeckeRelation& rel,
                             const HPrimeElement& a);

}  // namespace hecke

#endif
