#pragma once

#include <bit>
#include <map>
#include <random>
#include <vector>

#include "brim/groebner.hpp"
#include "brim/ideal.hpp"
#include "brim/sampler.hpp"

namespace brim {

/// Dense matrix of polynomials in k[x,y], row-major.
template <class K>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), Polynomial<K>(2)) {
    if (rows < 0 || cols < 0) throw Error(ErrorCode::InvalidArgument, "negative matrix size");
  }
  explicit PolyMatrix(const std::vector<std::vector<Polynomial<K>>>& rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
      for (const auto& p : r) {
        if (p.nvars() != 2 || p.rank() != 1) throw Error(ErrorCode::ArityMismatch, "matrix entries live in k[x,y]");
        a_.push_back(p.reordered(MonomialOrder::grevlex(2)));
      }
    }
  }

  /// Matrix of constants.
  static PolyMatrix constant(const std::vector<std::vector<long>>& c) {
    std::vector<std::vector<Polynomial<K>>> rows;
    for (const auto& r : c) {
      rows.emplace_back();
      for (long v : r) rows.back().push_back(Polynomial<K>::constant(K(v)));
    }
    return PolyMatrix(rows);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Polynomial<K>& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  Polynomial<K>& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  FreeModuleElement<K> column(int j) const {
    FreeModuleElement<K> v;
    for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  PolyMatrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    PolyMatrix out(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) out(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i], cs[j]);
    return out;
  }
  PolyMatrix select_columns(const std::vector<int>& cs) const { return submatrix(range(0, rows_), cs); }
  /// The last nr rows and last nc columns.
  PolyMatrix trailing(int nr, int nc) const { return submatrix(range(rows_ - nr, rows_), range(cols_ - nc, cols_)); }
  /// The first nr rows and first nc columns.
  PolyMatrix leading(int nr, int nc) const { return submatrix(range(0, nr), range(0, nc)); }
  PolyMatrix transpose() const {
    PolyMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  /// Columns of a and then b.
  friend PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "row counts differ");
    PolyMatrix out(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
      for (int j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
    }
    return out;
  }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product size mismatch");
    PolyMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j)
        for (int k = 0; k < a.cols_; ++k)
          if (!a(i, k).is_zero() && !b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    return out;
  }
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  static std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i < hi; ++i) v.push_back(i);
    return v;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Polynomial<K>> a_;
};

namespace detail {

/// Laplace expansion along the first of the chosen rows, memoized on the set
/// of remaining columns.
template <class K>
class MinorCache {
 public:
  MinorCache(const PolyMatrix<K>& m, std::vector<int> rows) : m_(m), rows_(std::move(rows)) {}

  Polynomial<K> det(std::uint32_t cols) {
    const int depth = static_cast<int>(rows_.size()) - std::popcount(cols);
    if (depth == static_cast<int>(rows_.size())) return Polynomial<K>::constant(K(1));
    if (auto it = memo_.find(cols); it != memo_.end()) return it->second;
    const int row = rows_[static_cast<std::size_t>(depth)];
    Polynomial<K> out(2);
    int sign = 1;
    for (int c = 0; c < m_.cols(); ++c) {
      if (!(cols >> c & 1u)) continue;
      if (!m_(row, c).is_zero()) {
        Polynomial<K> sub = det(cols & ~(1u << c));
        if (!sub.is_zero()) out += sign > 0 ? m_(row, c) * sub : -(m_(row, c) * sub);
      }
      sign = -sign;
    }
    memo_.emplace(cols, out);
    return out;
  }

 private:
  const PolyMatrix<K>& m_;
  std::vector<int> rows_;
  std::map<std::uint32_t, Polynomial<K>> memo_;
};

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (k >= 0 && k <= n) detail::subsets(n, k, 0, cur, out);
  return out;
}

template <class K>
Polynomial<K> determinant(const PolyMatrix<K>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (m.cols() > 31) throw Error(ErrorCode::SizeCap, "matrix too large");
  detail::MinorCache<K> c(m, PolyMatrix<K>::range(0, m.rows()));
  return c.det(m.cols() == 0 ? 0u : (m.cols() == 32 ? ~0u : (1u << m.cols()) - 1));
}

/// All k x k minors, row subsets outer, column subsets inner (lexicographic).
template <class K>
std::vector<Polynomial<K>> minors(const PolyMatrix<K>& m, int k) {
  if (m.cols() > 31) throw Error(ErrorCode::SizeCap, "matrix too large");
  std::vector<Polynomial<K>> out;
  if (k == 0) return {Polynomial<K>::constant(K(1))};
  for (const auto& rs : subsets(m.rows(), k)) {
    detail::MinorCache<K> c(m, rs);
    for (const auto& cs : subsets(m.cols(), k)) {
      std::uint32_t mask = 0;
      for (int j : cs) mask |= 1u << j;
      out.push_back(c.det(mask));
    }
  }
  return out;
}

/// Fitt_j of the cokernel of a p x m matrix: the ideal of (p - j)-minors.
template <class K>
Ideal<K> fitting_ideal(const PolyMatrix<K>& m, int j) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "negative Fitting index");
  const int k = m.rows() - j;
  if (k <= 0) return Ideal<K>::unit();
  if (k > m.cols()) return Ideal<K>();
  return Ideal<K>(dedupe(minors(m, k)));
}

/// Ideal of maximal minors.
template <class K>
Ideal<K> maximal_minors(const PolyMatrix<K>& m) {
  const int k = std::min(m.rows(), m.cols());
  if (k == 0) return Ideal<K>::unit();
  return Ideal<K>(dedupe(minors(m, k)));
}

/// adj(m), so that adj(m) * m = det(m) * 1.
template <class K>
PolyMatrix<K> adjugate(const PolyMatrix<K>& m) {
  const int n = m.rows();
  PolyMatrix<K> out(n, n);
  if (n == 1) {
    out(0, 0) = Polynomial<K>::constant(K(1));
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rs, cs;
      for (int k = 0; k < n; ++k) {
        if (k != j) rs.push_back(k);
        if (k != i) cs.push_back(k);
      }
      auto c = determinant(m.submatrix(rs, cs));
      out(i, j) = (i + j) % 2 ? -c : c;
    }
  return out;
}

/// Random constant matrix with entries in [1, bound].
template <class K>
PolyMatrix<K> random_constant_matrix(int rows, int cols, std::mt19937_64& rng, long bound) {
  PolyMatrix<K> out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = Polynomial<K>::constant(K(draw(rng, bound)));
  return out;
}

}  // namespace brim
