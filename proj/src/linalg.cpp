#include "hecke/linalg.hpp"

#include <algorithm>
#include <utility>

namespace hecke {

namespace {

int frac_weight(const RatFunc& x) {
  return static_cast<int>(x.num().terms().size() + x.den().terms().size());
}

struct Rref {
  FracMatrix m;
  // (row, col) of each pivot, rows 0..rank-1.
  std::vector<int> pivot_cols;
};

Rref frac_rref(FracMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int best = -1, best_w = 0;
    for (int i = rank; i < rows; ++i) {
      if (m.at(i, col).is_zero()) continue;
      int w = frac_weight(m.at(i, col));
      if (best < 0 || w < best_w) {
        best = i;
        best_w = w;
      }
    }
    if (best < 0) continue;
    if (best != rank) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(rank, j), m.at(best, j));
    }
    RatFunc inv = RatFunc::one(m.at(rank, col).vars()) / m.at(rank, col);
    for (int j = col; j < cols; ++j) m.at(rank, j) = m.at(rank, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m.at(i, col).is_zero()) continue;
      RatFunc f = m.at(i, col);
      for (int j = col; j < cols; ++j) {
        m.at(i, j) -= f * m.at(rank, j);
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  int k = 0;
  if (a.rows() > 0 && a.cols() > 0) k = a.at(0, 0).vars();
  return mat_mul(a, b, LaurentPoly(k));
}

FracMatrix mat_mul(const FracMatrix& a, const FracMatrix& b) {
  int k = 0;
  if (a.rows() > 0 && a.cols() > 0) k = a.at(0, 0).vars();
  return mat_mul(a, b, RatFunc::zero(k));
}

PolyMatrix poly_identity(int n, int vars) {
  PolyMatrix m(n, n, LaurentPoly(vars));
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(vars, 1);
  return m;
}

FracMatrix frac_identity(int n, int vars) {
  FracMatrix m(n, n, RatFunc::zero(vars));
  for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc::one(vars);
  return m;
}

FracMatrix to_frac(const PolyMatrix& a) {
  int k = 0;
  if (a.rows() > 0 && a.cols() > 0) k = a.at(0, 0).vars();
  FracMatrix m(a.rows(), a.cols(), RatFunc::zero(k));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = RatFunc(a.at(i, j));
  }
  return m;
}

LaurentPoly bareiss_det(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("non-square matrix");
  const int n = a.rows();
  int k = n > 0 ? a.at(0, 0).vars() : 0;
  if (n == 0) return LaurentPoly::constant(k, 1);
  PolyMatrix m = a;
  LaurentPoly prev = LaurentPoly::constant(k, 1);
  int sign = 1;
  for (int step = 0; step + 1 < n; ++step) {
    int best = -1;
    size_t best_w = 0;
    for (int i = step; i < n; ++i) {
      if (m.at(i, step).is_zero()) continue;
      size_t w = m.at(i, step).terms().size();
      if (best < 0 || w < best_w) {
        best = i;
        best_w = w;
      }
    }
    if (best < 0) return LaurentPoly(k);
    if (best != step) {
      for (int j = 0; j < n; ++j) std::swap(m.at(step, j), m.at(best, j));
      sign = -sign;
    }
    for (int i = step + 1; i < n; ++i) {
      for (int j = step + 1; j < n; ++j) {
        LaurentPoly num =
            m.at(step, step) * m.at(i, j) - m.at(i, step) * m.at(step, j);
        auto q = exact_div(num, prev);
        if (!q) throw std::logic_error("Bareiss interior division not exact");
        m.at(i, j) = std::move(*q);
      }
      m.at(i, step) = LaurentPoly(k);
    }
    prev = m.at(step, step);
  }
  LaurentPoly det = m.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

std::vector<FracVec> frac_nullspace(const FracMatrix& a) {
  const int cols = a.cols();
  int k = (a.rows() > 0 && cols > 0) ? a.at(0, 0).vars() : 0;
  Rref r = frac_rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<FracVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    FracVec v(cols, RatFunc::zero(k));
    v[f] = RatFunc::one(k);
    for (size_t row = 0; row < r.pivot_cols.size(); ++row) {
      v[r.pivot_cols[row]] = -r.m.at(static_cast<int>(row), f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int frac_rank(const FracMatrix& a) {
  return static_cast<int>(frac_rref(a).pivot_cols.size());
}

std::optional<FracVec> frac_solve(const FracMatrix& a, const FracVec& b) {
  if (static_cast<int>(b.size()) != a.rows()) {
    throw std::invalid_argument("dimension mismatch");
  }
  if (a.rows() < a.cols()) {
    throw std::invalid_argument("underdetermined system: use frac_nullspace");
  }
  const int cols = a.cols();
  int k = (a.rows() > 0 && cols > 0) ? a.at(0, 0).vars()
                                     : (b.empty() ? 0 : b[0].vars());
  FracMatrix aug(a.rows(), cols + 1, RatFunc::zero(k));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, cols) = b[i];
  }
  Rref r = frac_rref(aug);
  for (int c : r.pivot_cols) {
    if (c == cols) return std::nullopt;  // pivot in the rhs column
  }
  if (static_cast<int>(r.pivot_cols.size()) < cols) {
    throw std::invalid_argument("underdetermined system: use frac_nullspace");
  }
  FracVec x(cols, RatFunc::zero(k));
  for (int row = 0; row < cols; ++row) {
    x[r.pivot_cols[row]] = r.m.at(row, cols);
  }
  // Elimination bookkeeping is never trusted: substitute back.
  for (int i = 0; i < a.rows(); ++i) {
    RatFunc s = RatFunc::zero(k);
    for (int j = 0; j < cols; ++j) s += a.at(i, j) * x[j];
    if (s != b[i]) throw std::logic_error("frac_solve verification failed");
  }
  return x;
}

std::optional<FracMatrix> frac_inverse(const FracMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("non-square matrix");
  const int n = a.rows();
  int k = n > 0 ? a.at(0, 0).vars() : 0;
  FracMatrix aug(n, 2 * n, RatFunc::zero(k));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = RatFunc::one(k);
  }
  Rref r = frac_rref(aug);
  if (static_cast<int>(r.pivot_cols.size()) != n) return std::nullopt;
  for (int row = 0; row < n; ++row) {
    if (r.pivot_cols[row] != row) return std::nullopt;
  }
  FracMatrix inv(n, n, RatFunc::zero(k));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
  }
  return inv;
}

ClearedColumn clear_denominators(const FracVec& v) {
  const int k = v.empty() ? 0 : v[0].vars();
  LaurentPoly s = LaurentPoly::constant(k, 1);
  for (const RatFunc& x : v) {
    const LaurentPoly& d = x.den();
    if (d.is_one() || exact_div(s, d)) continue;
    if (exact_div(d, s)) {
      s = d;
    } else {
      s *= d;
    }
  }
  PolyVec w;
  w.reserve(v.size());
  bool all_zero = true;
  for (const RatFunc& x : v) {
    auto q = exact_div(x.num() * s, x.den());
    if (!q) throw std::logic_error("denominator clearing failed");
    all_zero = all_zero && q->is_zero();
    w.push_back(std::move(*q));
  }
  if (all_zero) return {std::move(w), LaurentPoly::constant(k, 1)};

  // Fold the common monomial-unit factor into the scalar.
  ExpVec floor(k, 0);
  bool have = false;
  for (const LaurentPoly& p : w) {
    if (p.is_zero()) continue;
    ExpVec f = p.exponent_floor();
    if (!have) {
      floor = f;
      have = true;
    } else {
      for (int i = 0; i < k; ++i) floor[i] = std::min(floor[i], f[i]);
    }
  }
  ExpVec neg(k);
  bool shift = false;
  for (int i = 0; i < k; ++i) {
    neg[i] = -floor[i];
    shift = shift || floor[i] != 0;
  }
  if (shift) {
    for (LaurentPoly& p : w) p = p.shifted(neg);
    s = s.shifted(neg);
  }

  Int g = 0;
  for (const LaurentPoly& p : w) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.content().get_mpz_t());
  }
  if (g > 1) {
    for (LaurentPoly& p : w) p = p.divided_by_int(g);
    if (s.content() % g == 0) s = s.divided_by_int(g);
  }

  for (const LaurentPoly& p : w) {
    if (!p.is_zero()) {
      if (p.terms()[0].coeff < 0) {
        for (LaurentPoly& q : w) q = -q;
        s = -s;
      }
      break;
    }
  }
  return {std::move(w), std::move(s)};
}

}  // namespace hecke
