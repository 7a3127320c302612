#ifndef HECKE_LINALG_HPP
#define HECKE_LINALG_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hecke/ring.hpp"

namespace hecke {

// Dense row-major matrix over an exact coefficient type.
template <typename T>
class MatrixT {
 public:
  MatrixT() = default;
  MatrixT(int rows, int cols, T fill)
      : rows_(rows), cols_(cols), entries_(size_t(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int i, int j) { return entries_[size_t(i) * cols_ + j]; }
  const T& at(int i, int j) const { return entries_[size_t(i) * cols_ + j]; }

  bool operator==(const MatrixT& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }
  bool operator!=(const MatrixT& o) const { return !(*this == o); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> entries_;
};

using PolyMatrix = MatrixT<LaurentPoly>;
using FracMatrix = MatrixT<RatFunc>;
using PolyVec = std::vector<LaurentPoly>;
using FracVec = std::vector<RatFunc>;

template <typename T>
MatrixT<T> mat_mul(const MatrixT<T>& a, const MatrixT<T>& b, const T& zero) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  MatrixT<T> r(a.rows(), b.cols(), zero);
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a.at(i, k);
      if (aik == zero) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const T& bkj = b.at(k, j);
        if (bkj == zero) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
FracMatrix mat_mul(const FracMatrix& a, const FracMatrix& b);
PolyMatrix poly_identity(int n, int vars);
FracMatrix frac_identity(int n, int vars);
FracMatrix to_frac(const PolyMatrix& a);

// Determinant by fraction-free (Bareiss) elimination. Pivots are chosen
// with the fewest terms, ties broken by lowest row index; every interior
// division is checked exact.
LaurentPoly bareiss_det(const PolyMatrix& a);

// Basis of the right nullspace over Frac(R), in reduced echelon shape:
// each vector carries a pivot coordinate equal to 1 not shared with the
// others, and the list is sorted by that coordinate.
std::vector<FracVec> frac_nullspace(const FracMatrix& a);

int frac_rank(const FracMatrix& a);

// Exact solution of A x = b for square or overdetermined A with full
// column rank; nullopt when the system is certified inconsistent.
// Underdetermined systems (free columns) raise instead.
std::optional<FracVec> frac_solve(const FracMatrix& a, const FracVec& b);

// Inverse of a square matrix over Frac(R), nullopt if singular.
std::optional<FracMatrix> frac_inverse(const FracMatrix& a);

// Writes v = w/s with w over R of integer content 1 and s a common
// denominator, monomial-unit factors folded into s.
struct ClearedColumn {
  PolyVec vec;
  LaurentPoly scalar;
};
ClearedColumn clear_denominators(const FracVec& v);

}  // namespace hecke

#endif
