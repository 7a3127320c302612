#ifndef HECKE_TRACE_HPP
#define HECKE_TRACE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hecke/hecke.hpp"

namespace hecke {

// A certification (symmetry, unit determinant, duality, ...) failed on
// otherwise well-formed data.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The symmetrising trace: the coefficient of b_1.
LaurentPoly tau(const HeckeElement& h);

struct GramData {
  PolyMatrix A;
  LaurentPoly det;
  LaurentPoly det_inverse;
};

// Gram matrix A[i][j] = tau(b_i b_j), certified symmetric with unit
// determinant; either failure throws CertificationError.
GramData gram(const GroupSpec& spec);

struct TracePropertyReport {
  bool ok = true;
  int samples = 0;
  std::string counterexample;  // empty when ok
};

// End-to-end guard on the multiplication pipeline: tau(h1 h2) =
// tau(h2 h1) on seeded random sparse pairs.
TracePropertyReport trace_property_check(const GroupSpec& spec, int samples,
                                         std::uint64_t seed);

struct DualBasis {
  std::vector<HeckeElement> vectors;  // b_1^dual, ..., b_|W|^dual over R
};

// Columns of A^-1, obtained by exact solves and denominator clearing;
// every coefficient must land in R and tau(b_i b_j^dual) = delta_ij is
// re-verified against the Gram pairing.
DualBasis dual_basis(const GroupSpec& spec, const GramData& gram);

struct MMConditionReport {
  bool ok = true;
  LaurentPoly tau_pi;            // reported, not asserted
  std::vector<int> violations;   // 1-based basis indices with nonzero value
};

// tau(T_{x^-1 pi}) = 0 for every basis word x != 1.
MMConditionReport mm_condition_check(const GroupSpec& spec);

}  // namespace hecke

#endif
