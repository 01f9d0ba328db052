#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sympow {

/// Dense row-major matrix. Arithmetic goes through a field policy `F` with
/// `zero/one/is_zero/add/sub/mul/neg/inv` so the same code serves Q, F_p and
/// F_{p^k}.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class F>
Matrix<typename F::value_type> identity(const F& f, std::size_t n) {
  Matrix<typename F::value_type> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class F>
Matrix<typename F::value_type> from_rows(const F& f, const std::vector<std::vector<typename F::value_type>>& rows,
                                         std::size_t cols) {
  Matrix<typename F::value_type> m(rows.size(), cols, f.zero());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

template <class F>
Matrix<typename F::value_type> multiply(const F& f, const Matrix<typename F::value_type>& a,
                                        const Matrix<typename F::value_type>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch in product");
  Matrix<typename F::value_type> c(a.rows(), b.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!f.is_zero(b(k, j))) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  return c;
}

template <class F>
Matrix<typename F::value_type> add(const F& f, const Matrix<typename F::value_type>& a,
                                   const Matrix<typename F::value_type>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimension mismatch in sum");
  Matrix<typename F::value_type> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

template <class F>
Matrix<typename F::value_type> subtract(const F& f, const Matrix<typename F::value_type>& a,
                                        const Matrix<typename F::value_type>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimension mismatch in difference");
  Matrix<typename F::value_type> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
  return c;
}

template <class F>
Matrix<typename F::value_type> scale(const F& f, const typename F::value_type& s, const Matrix<typename F::value_type>& a) {
  Matrix<typename F::value_type> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(s, a(i, j));
  return c;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  if (a.rows() == 0 || a.cols() == 0) return Matrix<T>(a.cols(), a.rows(), T{});
  Matrix<T> t(a.cols(), a.rows(), a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class F>
std::vector<typename F::value_type> apply(const F& f, const Matrix<typename F::value_type>& a,
                                          const std::vector<typename F::value_type>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<typename F::value_type> out(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!f.is_zero(a(i, j)) && !f.is_zero(v[j])) out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
  return out;
}

/// Reduced row echelon form. Pivot = first nonzero entry in the column
/// (no magnitude pivoting, so the result is deterministic and exact).
template <class T>
struct Echelon {
  Matrix<T> form;                    // only the nonzero rows
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

template <class F>
Echelon<typename F::value_type> rref(const F& f, Matrix<typename F::value_type> m) {
  using T = typename F::value_type;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(inv, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      T factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!f.is_zero(m(r, j))) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<T> form(r, m.cols(), f.zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) form(i, j) = m(i, j);
  return {std::move(form), std::move(pivots)};
}

template <class F>
std::size_t rank(const F& f, const Matrix<typename F::value_type>& m) {
  return rref(f, m).rank();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class F>
std::vector<std::vector<typename F::value_type>> nullspace(const F& f, const Matrix<typename F::value_type>& m) {
  auto e = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.form(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Two-sided inverse of a square matrix, or nullopt when singular.
template <class F>
std::optional<Matrix<typename F::value_type>> inverse(const F& f, const Matrix<typename F::value_type>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix<typename F::value_type> aug(n, 2 * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto e = rref(f, aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<typename F::value_type> inv(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.form(i, n + j);
  return inv;
}

/// Canonical row basis (RREF) of the span of the given rows. Two subspaces are
/// equal exactly when their canonical bases are equal.
template <class F>
Matrix<typename F::value_type> row_space(const F& f, const Matrix<typename F::value_type>& m) {
  return rref(f, m).form;
}

}  // namespace sympow
