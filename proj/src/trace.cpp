#include "hecke/trace.hpp"

#include <random>

namespace hecke {

LaurentPoly tau(const HeckeElement& h) {
  if (h.empty()) throw std::invalid_argument("empty element");
  return h[0];
}

GramData gram(const GroupSpec& spec) {
  const int n = spec.group_order;
  PolyMatrix a(n, n, LaurentPoly(spec.vars));
  for (int i = 0; i < n; ++i) {
    std::vector<HPrimeElement> vi =
        element_to_hprime(spec, basis_element(spec, i));
    for (int j = 0; j < n; ++j) {
      a.at(i, j) = apply_word(spec, vi, spec.basis_word(j))[0].coeffs[0];
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a.at(i, j) != a.at(j, i)) {
        throw CertificationError(
            "Gram matrix not symmetric at (" + std::to_string(i + 1) + "," +
            std::to_string(j + 1) + "): trace is not symmetrising");
      }
    }
  }
  LaurentPoly det = bareiss_det(a);
  auto inv = det.unit_inverse();
  if (!inv) {
    throw CertificationError(
        "Gram determinant is not a unit in R: trace is not symmetrising");
  }
  return {std::move(a), std::move(det), std::move(*inv)};
}

namespace {

HeckeElement random_sparse_element(const GroupSpec& spec,
                                   std::mt19937_64& rng) {
  std::uniform_int_distribution<int> support(1, 3);
  std::uniform_int_distribution<int> index(0, spec.group_order - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(-1, 1);
  HeckeElement h = zero_element(spec);
  int terms = support(rng);
  for (int t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    ExpVec exp(spec.vars);
    for (int v = 0; v < spec.vars; ++v) exp[v] = expo(rng);
    h[index(rng)] += LaurentPoly::monomial(spec.vars, std::move(exp), c);
  }
  return h;
}

}  // namespace

TracePropertyReport trace_property_check(const GroupSpec& spec, int samples,
                                         std::uint64_t seed) {
  TracePropertyReport report;
  report.samples = samples;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    HeckeElement h1 = random_sparse_element(spec, rng);
    HeckeElement h2 = random_sparse_element(spec, rng);
    if (tau(multiply(spec, h1, h2)) != tau(multiply(spec, h2, h1))) {
      report.ok = false;
      report.counterexample = "h1 = " + element_to_text(spec, h1) +
                              "; h2 = " + element_to_text(spec, h2);
      return report;
    }
  }
  return report;
}

DualBasis dual_basis(const GroupSpec& spec, const GramData& gram) {
  const int n = spec.group_order;
  FracMatrix a = to_frac(gram.A);
  DualBasis duals;
  duals.vectors.reserve(n);
  for (int i = 0; i < n; ++i) {
    FracVec rhs(n, RatFunc::zero(spec.vars));
    rhs[i] = RatFunc::one(spec.vars);
    auto x = frac_solve(a, rhs);
    if (!x) throw CertificationError("Gram system inconsistent");
    HeckeElement v(n, LaurentPoly(spec.vars));
    for (int j = 0; j < n; ++j) {
      auto p = (*x)[j].as_poly();
      if (!p) {
        // Denominators divide det(A), a unit; a non-R entry means the
        // certification above was wrong.
        throw std::logic_error("dual basis coefficient not in R");
      }
      v[j] = std::move(*p);
    }
    duals.vectors.push_back(std::move(v));
  }
  // tau(b_i b_j^dual) = delta_ij through the pairing.
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      LaurentPoly pairing(spec.vars);
      for (int l = 0; l < n; ++l) {
        if (duals.vectors[j][l].is_zero()) continue;
        pairing += gram.A.at(i, l) * duals.vectors[j][l];
      }
      LaurentPoly expected =
          i == j ? LaurentPoly::constant(spec.vars, 1) : LaurentPoly(spec.vars);
      if (pairing != expected) {
        throw CertificationError("duality condition failed at (" +
                                 std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
      }
    }
  }
  return duals;
}

MMConditionReport mm_condition_check(const GroupSpec& spec) {
  if (spec.pi_word.empty()) {
    throw std::invalid_argument("group spec carries no pi word");
  }
  MMConditionReport report;
  report.tau_pi = tau(word_to_element(spec, spec.pi_word));
  for (int j = 1; j < spec.group_order; ++j) {
    BraidWord w =
        concat_words(inverse_word(spec.basis_word(j)), spec.pi_word);
    if (!tau(word_to_element(spec, w)).is_zero()) {
      report.ok = false;
      report.violations.push_back(j + 1);
    }
  }
  return report;
}

}  // namespace hecke
