#ifndef HECKE_CENTER_HPP
#define HECKE_CENTER_HPP

#include <string>
#include <vector>

#include "hecke/hecke.hpp"
#include "hecke/trace.hpp"

namespace hecke {

enum class Provenance { commutant, theorem_T1, theorem_T2, reference };
std::string provenance_name(Provenance p);

struct CenterBasis {
  std::vector<FracVec> vectors;  // coefficient vectors in the basis B
  Provenance provenance = Provenance::commutant;
  std::vector<bool> integral;  // per vector: every coefficient in R

  bool all_integral() const;
  // The vectors over R; requires all_integral().
  std::vector<HeckeElement> poly_vectors() const;
  static CenterBasis from_poly(std::vector<HeckeElement> vecs, Provenance p);
};

// True iff (L_sigma - R_sigma) h = 0 exactly for every generator.
bool centrality_check(const GroupSpec& spec, const HeckeElement& h);
bool centrality_check(const GroupSpec& spec, const FracVec& h);

// Stacks (L_sigma - R_sigma) over all generators, solves the nullspace
// over Frac(R) and clears denominators. The dimension must equal the
// declared class count and every vector must pass centrality_check.
CenterBasis commutant_center(const GroupSpec& spec);

struct Irrep {
  int dim = 0;
  std::vector<FracMatrix> gens;  // one matrix per generator
};

struct RepresentationData {
  std::vector<Irrep> irreps;
};

// The three irreducible representations of the A2 Hecke algebra over
// Frac(R): two linear characters and the two-dimensional reflection
// representation with eigenvalues u1, u2.
RepresentationData a2_representations(const GroupSpec& spec);

// Braid and Hecke relations per irrep, and sum of dim^2 = |W|.
void validate_representations(const GroupSpec& spec,
                              const RepresentationData& reps);

// Matrix of character values: rows indexed by irreps, columns by the
// given elements.
FracMatrix char_values(const GroupSpec& spec, const RepresentationData& reps,
                       const std::vector<FracVec>& elements);

enum class CoeffMode { f_on_basis, g_on_duals };

struct ClassCoeffs {
  FracMatrix m;  // rows w in W, columns classes C
  CoeffMode mode = CoeffMode::f_on_basis;
};

// Expands character columns of every basis element (mode f) or dual
// basis element (mode g) in terms of the class representatives' columns.
// The row of each representative must come out as its own indicator.
ClassCoeffs class_coeffs(const GroupSpec& spec, const RepresentationData& reps,
                         const std::vector<int>& class_rep_indices,
                         CoeffMode mode, const DualBasis* duals);

enum class CenterMode { y_from_duals, z_from_basis };

// y_C = sum_w f_{w,C} b_w^dual  or  z_C = sum_w g_{w,C} b_w; every
// output vector must pass centrality_check.
CenterBasis build_center(const GroupSpec& spec, const ClassCoeffs& coeffs,
                         CenterMode mode, const DualBasis* duals);

struct SpanReport {
  bool equal_F_span = false;
  bool x_in_R_span_of_y = false;
  bool y_in_R_span_of_x = false;
};

// Equality of F-spans by rank, and two-sided R-membership by exact
// change-of-basis solves.
SpanReport span_compare(const GroupSpec& spec, const CenterBasis& x,
                        const CenterBasis& y);

FracVec to_frac_vec(const HeckeElement& h);

}  // namespace hecke

#endif
