#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bzeta/symfield/ratfunc.hpp"

namespace bzeta {

/// Dense matrix of RatFunc, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
  RatMatrix(std::initializer_list<std::initializer_list<RatFunc>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc(1);
    return m;
  }
  static RatMatrix column(const std::vector<RatFunc>& v) {
    RatMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }
  static RatMatrix row(const std::vector<RatFunc>& v) { return column(v).transpose(); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  RatFunc& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  RatFunc& at(std::size_t i, std::size_t j) {
    check_index(i, j);
    return (*this)(i, j);
  }
  const RatFunc& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return (*this)(i, j);
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  RatFunc trace() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::trace: not square");
    RatFunc s;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  friend RatMatrix operator+(const RatMatrix& x, const RatMatrix& y) {
    same_shape(x, y);
    RatMatrix r(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }
  friend RatMatrix operator-(const RatMatrix& x, const RatMatrix& y) {
    same_shape(x, y);
    RatMatrix r(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
  }
  friend RatMatrix operator*(const RatFunc& c, const RatMatrix& x) {
    RatMatrix r(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = c * x.a_[k];
    return r;
  }
  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch in product");
    RatMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < y.cols_; ++j) {
        RatFunc s;
        for (std::size_t k = 0; k < x.cols_; ++k) {
          if (x(i, k).is_zero() || y(k, j).is_zero()) continue;
          s += x(i, k) * y(k, j);
        }
        r(i, j) = s;
      }
    return r;
  }
  friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  RatMatrix map(const std::function<RatFunc(const RatFunc&)>& f) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = f(a_[k]);
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<RatFunc> a_;

  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("RatMatrix: index out of range");
  }
  static void same_shape(const RatMatrix& x, const RatMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("RatMatrix: shape mismatch");
  }
};

inline RatMatrix subst(const RatMatrix& m, const std::map<Var, RatFunc>& b) {
  return m.map([&](const RatFunc& f) { return subst(f, b); });
}

/// Inverse of a square matrix. Rows are first cleared to polynomials, then
/// Bareiss elimination, then back substitution.
inline RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: not square");
  // augmented [P | D] where row i of P is D_i * row i of m
  std::vector<std::vector<RatFunc>> a(n, std::vector<RatFunc>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    RatFunc d(1);
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_polynomial()) {
        const ZPoly& dj = m(i, j).den_prim();
        const ZPoly& dc = d.num_prim();
        ZPoly g = detail::gcd_prim(dc, dj);
        d *= RatFunc(to_laurent(divide_or_throw(dj, g)));
      }
    for (std::size_t j = 0; j < n; ++j) a[i][j] = d * m(i, j);
    a[i][n + i] = d;
  }
  RatFunc prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    // pivot: fewest terms
    std::size_t p = n;
    std::size_t best = 0;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const std::size_t len = a[i][k].num_prim().size();
      if (p == n || len < best) {
        p = i;
        best = len;
      }
    }
    if (p == n) throw std::domain_error("inverse: singular matrix");
    std::swap(a[k], a[p]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < 2 * n; ++j) {
        RatFunc v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = prev.is_one() ? v : v / prev;
      }
      a[i][k] = RatFunc();
    }
    prev = a[k][k];
  }
  RatMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      RatFunc s = a[ii][n + c];
      for (std::size_t j = ii + 1; j < n; ++j)
        if (!a[ii][j].is_zero()) s -= a[ii][j] * inv(j, c);
      inv(ii, c) = s / a[ii][ii];
    }
  }
  return inv;
}

/// (I - X M)^{-1}, the closed form of sum_{l>=0} M^l X^l.
inline RatMatrix geom_resolvent(const RatMatrix& M, const RatFunc& X) {
  if (M.rows() != M.cols()) throw std::invalid_argument("geom_resolvent: matrix not square");
  return inverse(RatMatrix::identity(M.rows()) - X * M);
}

}  // namespace bzeta
