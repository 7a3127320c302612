#include "hecke/center.hpp"

#include <map>
#include <stdexcept>

namespace hecke {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::commutant:
      return "commutant";
    case Provenance::theorem_T1:
      return "theorem_T1";
    case Provenance::theorem_T2:
      return "theorem_T2";
    case Provenance::reference:
      return "reference";
  }
  return "unknown";
}

bool CenterBasis::all_integral() const {
  for (bool f : integral)
    if (!f) return false;
  return true;
}

std::vector<HeckeElement> CenterBasis::poly_vectors() const {
  std::vector<HeckeElement> out;
  for (const FracVec& v : vectors) {
    HeckeElement h;
    for (const RatFunc& c : v) {
      auto p = c.as_poly();
      if (!p) throw std::logic_error("poly_vectors on a non-integral basis");
      h.push_back(*p);
    }
    out.push_back(std::move(h));
  }
  return out;
}

CenterBasis CenterBasis::from_poly(std::vector<HeckeElement> vecs,
                                   Provenance p) {
  CenterBasis cb;
  cb.provenance = p;
  for (const HeckeElement& h : vecs) cb.vectors.push_back(to_frac_vec(h));
  cb.integral.assign(cb.vectors.size(), true);
  return cb;
}

FracVec to_frac_vec(const HeckeElement& h) {
  FracVec v;
  v.reserve(h.size());
  for (const LaurentPoly& p : h) v.emplace_back(p);
  return v;
}

namespace {

// L_sigma - R_sigma for one generator, over R.
PolyMatrix commutator_matrix(const GroupSpec& spec, int gen) {
  BraidWord w{{gen, 1}};
  PolyMatrix left = mul_matrix(spec, w, Side::left);
  PolyMatrix right = mul_matrix(spec, w, Side::right);
  PolyMatrix d(left.rows(), left.cols(), LaurentPoly(spec.vars));
  for (int i = 0; i < left.rows(); ++i)
    for (int j = 0; j < left.cols(); ++j)
      d.at(i, j) = left.at(i, j) - right.at(i, j);
  return d;
}

}  // namespace

bool centrality_check(const GroupSpec& spec, const FracVec& h) {
  const int n = spec.group_order;
  if (int(h.size()) != n) throw std::invalid_argument("wrong vector length");
  RatFunc zero = RatFunc::zero(spec.vars);
  for (int g = 1; g <= spec.generator_count; ++g) {
    PolyMatrix d = commutator_matrix(spec, g);
    for (int i = 0; i < n; ++i) {
      RatFunc acc = zero;
      for (int j = 0; j < n; ++j) {
        if (d.at(i, j).is_zero() || h[j].is_zero()) continue;
        acc += RatFunc(d.at(i, j)) * h[j];
      }
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

bool centrality_check(const GroupSpec& spec, const HeckeElement& h) {
  return centrality_check(spec, to_frac_vec(h));
}

CenterBasis commutant_center(const GroupSpec& spec) {
  const int n = spec.group_order;
  FracMatrix stacked(spec.generator_count * n, n, RatFunc::zero(spec.vars));
  for (int g = 1; g <= spec.generator_count; ++g) {
    PolyMatrix d = commutator_matrix(spec, g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        stacked.at((g - 1) * n + i, j) = RatFunc(d.at(i, j));
  }
  std::vector<FracVec> null = frac_nullspace(stacked);
  if (int(null.size()) != spec.class_count)
    throw std::logic_error("commutant dimension " +
                           std::to_string(null.size()) +
                           " does not match the declared class count " +
                           std::to_string(spec.class_count));
  std::vector<HeckeElement> vecs;
  for (const FracVec& v : null) vecs.push_back(clear_denominators(v).vec);
  for (const HeckeElement& h : vecs)
    if (!centrality_check(spec, h))
      throw std::logic_error("commutant vector fails the centrality check");
  return CenterBasis::from_poly(std::move(vecs), Provenance::commutant);
}

namespace {

FracMatrix rep_power(const Irrep& rep, int gen, int exp,
                     std::map<int, FracMatrix>& inv_cache, int vars) {
  FracMatrix base = rep.gens[gen - 1];
  if (exp < 0) {
    auto it = inv_cache.find(gen);
    if (it == inv_cache.end()) {
      auto inv = frac_inverse(base);
      if (!inv) throw std::logic_error("representation matrix not invertible");
      it = inv_cache.emplace(gen, *inv).first;
    }
    base = it->second;
    exp = -exp;
  }
  FracMatrix out = frac_identity(rep.dim, vars);
  for (int i = 0; i < exp; ++i) out = mat_mul(out, base);
  return out;
}

FracMatrix rep_word(const Irrep& rep, const BraidWord& w, int vars) {
  std::map<int, FracMatrix> inv_cache;
  FracMatrix out = frac_identity(rep.dim, vars);
  for (const BraidLetter& l : w)
    out = mat_mul(out, rep_power(rep, l.gen, l.exp, inv_cache, vars));
  return out;
}

RatFunc frac_trace(const FracMatrix& m) {
  RatFunc t = RatFunc::zero(0);
  bool first = true;
  for (int i = 0; i < m.rows(); ++i) {
    if (first) {
      t = m.at(i, i);
      first = false;
    } else {
      t += m.at(i, i);
    }
  }
  return t;
}

}  // namespace

RepresentationData a2_representations(const GroupSpec& spec) {
  if (spec.vars != 2 || spec.generator_count != 2 || spec.group_order != 6)
    throw std::invalid_argument("a2_representations needs the A2 spec");
  const int k = spec.vars;
  RatFunc u1{LaurentPoly::variable(k, 0)};
  RatFunc u2{LaurentPoly::variable(k, 1)};
  RatFunc one = RatFunc::one(k);
  RatFunc zero = RatFunc::zero(k);

  RepresentationData reps;
  for (const RatFunc& u : {u1, u2}) {
    Irrep lin;
    lin.dim = 1;
    FracMatrix m(1, 1, u);
    lin.gens = {m, m};
    reps.irreps.push_back(std::move(lin));
  }

  // Two-dimensional representation: both matrices have eigenvalues
  // u1, u2 and the off-diagonal corner is pinned by the braid relation.
  Irrep refl;
  refl.dim = 2;
  FracMatrix ms(2, 2, zero), mt(2, 2, zero);
  ms.at(0, 0) = u1;
  ms.at(0, 1) = one;
  ms.at(1, 1) = u2;
  mt.at(0, 0) = u2;
  mt.at(1, 0) = -(u1 * u2);
  mt.at(1, 1) = u1;
  refl.gens = {ms, mt};
  reps.irreps.push_back(std::move(refl));
  return reps;
}

void validate_representations(const GroupSpec& spec,
                              const RepresentationData& reps) {
  int dimsq = 0;
  for (const Irrep& rep : reps.irreps) {
    if (int(rep.gens.size()) != spec.generator_count)
      throw std::logic_error("representation has wrong generator count");
    dimsq += rep.dim * rep.dim;
    for (const auto& [lhs, rhs] : spec.braid_relations) {
      if (rep_word(rep, lhs, spec.vars) != rep_word(rep, rhs, spec.vars))
        throw std::logic_error("representation violates a braid relation");
    }
    for (int g = 1; g <= spec.generator_count; ++g) {
      const HeckeRelation& rel =
          spec.families[spec.generator_family[g - 1]].relation;
      FracMatrix lhs = rep_word(rep, {{g, rel.e}}, spec.vars);
      FracMatrix rhs(rep.dim, rep.dim, RatFunc::zero(spec.vars));
      FracMatrix pw = frac_identity(rep.dim, spec.vars);
      for (int j = 0; j < rel.e; ++j) {
        RatFunc cj{rel.rel[j]};
        for (int r = 0; r < rep.dim; ++r)
          for (int c = 0; c < rep.dim; ++c) rhs.at(r, c) += cj * pw.at(r, c);
        pw = mat_mul(pw, rep.gens[g - 1]);
      }
      if (lhs != rhs)
        throw std::logic_error("representation violates a Hecke relation");
    }
  }
  if (dimsq != spec.group_order)
    throw std::logic_error("squared dimensions do not sum to the group order");
}

FracMatrix char_values(const GroupSpec& spec, const RepresentationData& reps,
                       const std::vector<FracVec>& elements) {
  const int n = spec.group_order;
  FracMatrix out(int(reps.irreps.size()), int(elements.size()),
                 RatFunc::zero(spec.vars));
  for (size_t i = 0; i < reps.irreps.size(); ++i) {
    // Traces of all basis words, so elements share the table.
    std::vector<RatFunc> table;
    table.reserve(n);
    for (int j = 0; j < n; ++j)
      table.push_back(
          frac_trace(rep_word(reps.irreps[i], spec.basis_word(j), spec.vars)));
    for (size_t c = 0; c < elements.size(); ++c) {
      if (int(elements[c].size()) != n)
        throw std::invalid_argument("wrong element length");
      RatFunc acc = RatFunc::zero(spec.vars);
      for (int j = 0; j < n; ++j) {
        if (elements[c][j].is_zero()) continue;
        acc += elements[c][j] * table[j];
      }
      out.at(int(i), int(c)) = acc;
    }
  }
  return out;
}

ClassCoeffs class_coeffs(const GroupSpec& spec, const RepresentationData& reps,
                         const std::vector<int>& class_rep_indices,
                         CoeffMode mode, const DualBasis* duals) {
  const int n = spec.group_order;
  const int nc = int(class_rep_indices.size());
  if (mode == CoeffMode::g_on_duals && duals == nullptr)
    throw std::invalid_argument("mode g_on_duals needs the dual basis");

  auto element_of = [&](int j) -> FracVec {
    if (mode == CoeffMode::f_on_basis)
      return to_frac_vec(basis_element(spec, j));
    return to_frac_vec(duals->vectors[j]);
  };

  std::vector<FracVec> all;
  all.reserve(n);
  for (int j = 0; j < n; ++j) all.push_back(element_of(j));
  FracMatrix chi = char_values(spec, reps, all);

  FracMatrix m(int(reps.irreps.size()), nc, RatFunc::zero(spec.vars));
  for (int c = 0; c < nc; ++c) {
    int j = class_rep_indices[c] - 1;  // indices are 1-based spec data
    for (int i = 0; i < m.rows(); ++i) m.at(i, c) = chi.at(i, j);
  }
  if (frac_rank(m) != nc)
    throw std::runtime_error("chosen representatives do not separate classes");

  ClassCoeffs out;
  out.mode = mode;
  out.m = FracMatrix(n, nc, RatFunc::zero(spec.vars));
  for (int w = 0; w < n; ++w) {
    FracVec rhs(chi.rows(), RatFunc::zero(spec.vars));
    for (int i = 0; i < chi.rows(); ++i) rhs[i] = chi.at(i, w);
    auto sol = frac_solve(m, rhs);
    if (!sol)
      throw std::logic_error("character expansion system is inconsistent");
    for (int c = 0; c < nc; ++c) out.m.at(w, c) = (*sol)[c];
  }
  for (int c = 0; c < nc; ++c) {
    int w = class_rep_indices[c] - 1;
    for (int c2 = 0; c2 < nc; ++c2) {
      RatFunc want = c == c2 ? RatFunc::one(spec.vars) : RatFunc::zero(spec.vars);
      if (out.m.at(w, c2) != want)
        throw std::logic_error("class representative row is not an indicator");
    }
  }
  return out;
}

CenterBasis build_center(const GroupSpec& spec, const ClassCoeffs& coeffs,
                         CenterMode mode, const DualBasis* duals) {
  const int n = spec.group_order;
  if (mode == CenterMode::y_from_duals && duals == nullptr)
    throw std::invalid_argument("mode y_from_duals needs the dual basis");
  CenterBasis out;
  out.provenance = mode == CenterMode::y_from_duals ? Provenance::theorem_T1
                                                    : Provenance::theorem_T2;
  for (int c = 0; c < coeffs.m.cols(); ++c) {
    FracVec vec(n, RatFunc::zero(spec.vars));
    for (int w = 0; w < n; ++w) {
      const RatFunc& coeff = coeffs.m.at(w, c);
      if (coeff.is_zero()) continue;
      if (mode == CenterMode::y_from_duals) {
        const HeckeElement& dw = duals->vectors[w];
        for (int j = 0; j < n; ++j) {
          if (dw[j].is_zero()) continue;
          vec[j] += coeff * RatFunc(dw[j]);
        }
      } else {
        vec[w] += coeff;
      }
    }
    if (!centrality_check(spec, vec))
      throw std::logic_error("assembled center vector fails the centrality check");
    bool integral = true;
    for (const RatFunc& e : vec)
      if (!e.in_R()) integral = false;
    out.vectors.push_back(std::move(vec));
    out.integral.push_back(integral);
  }
  return out;
}

namespace {

FracMatrix rows_from(const std::vector<FracVec>& vs, int n, int vars) {
  FracMatrix m(int(vs.size()), n, RatFunc::zero(vars));
  for (size_t i = 0; i < vs.size(); ++i)
    for (int j = 0; j < n; ++j) m.at(int(i), j) = vs[i][j];
  return m;
}

// Every vector of xs an R-combination of the ys.
bool r_membership(const std::vector<FracVec>& xs, const std::vector<FracVec>& ys,
                  int n, int vars) {
  FracMatrix cols(n, int(ys.size()), RatFunc::zero(vars));
  for (size_t i = 0; i < ys.size(); ++i)
    for (int j = 0; j < n; ++j) cols.at(j, int(i)) = ys[i][j];
  for (const FracVec& x : xs) {
    auto sol = frac_solve(cols, x);
    if (!sol) return false;
    for (const RatFunc& c : *sol)
      if (!c.in_R()) return false;
  }
  return true;
}

}  // namespace

SpanReport span_compare(const GroupSpec& spec, const CenterBasis& x,
                        const CenterBasis& y) {
  const int n = spec.group_order;
  SpanReport rep;
  FracMatrix mx = rows_from(x.vectors, n, spec.vars);
  FracMatrix my = rows_from(y.vectors, n, spec.vars);
  std::vector<FracVec> both = x.vectors;
  both.insert(both.end(), y.vectors.begin(), y.vectors.end());
  FracMatrix stacked = rows_from(both, n, spec.vars);
  int rx = frac_rank(mx), ry = frac_rank(my), rs = frac_rank(stacked);
  rep.equal_F_span = rx == ry && ry == rs;
  rep.x_in_R_span_of_y = r_membership(x.vectors, y.vectors, n, spec.vars);
  rep.y_in_R_span_of_x = r_membership(y.vectors, x.vectors, n, spec.vars);
  return rep;
}

}  // namespace hecke
