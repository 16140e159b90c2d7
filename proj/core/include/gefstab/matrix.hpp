#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gefstab/error.hpp"
#include "gefstab/fraction.hpp"
#include "gefstab/local.hpp"
#include "gefstab/polynomial.hpp"

namespace gefstab {

// Dense row-major matrix over a single scalar kind.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<T>& data() const { return a_; }

  Mat transpose() const {
    std::vector<T> d;
    d.reserve(a_.size());
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) d.push_back((*this)(i, j));
    return from(cols_, rows_, std::move(d));
  }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    std::vector<std::size_t> rs(nr), cs(nc);
    for (std::size_t i = 0; i < nr; ++i) rs[i] = r0 + i;
    for (std::size_t j = 0; j < nc; ++j) cs[j] = c0 + j;
    return pick(rs, cs);
  }

  // Rows and columns picked by 0-based index lists.
  Mat pick(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    std::vector<T> d;
    d.reserve(rs.size() * cs.size());
    for (auto i : rs)
      for (auto j : cs) d.push_back((*this)(i, j));
    return from(rs.size(), cs.size(), std::move(d));
  }

  template <class F>
  auto map(F&& f) const -> Mat<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(a_.size());
    for (const auto& x : a_) out.push_back(f(x));
    return Mat<U>::from(rows_, cols_, std::move(out));
  }

  static Mat from(std::size_t rows, std::size_t cols, std::vector<T> data) {
    if (data.size() != rows * cols) throw InternalError("matrix data size mismatch");
    Mat m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.a_ = std::move(data);
    return m;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t k = 0; k < x.a_.size(); ++k)
      if (!(x.a_[k] == y.a_[k])) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using PolyMat = Mat<Polynomial>;
using FracMat = Mat<Fraction>;
using LocalMat = Mat<LocalElem>;

// ---- scalar helpers ----

inline Polynomial zero_like(const Polynomial& p) { return Polynomial(p.var_list()); }
inline Polynomial one_like(const Polynomial& p) { return Polynomial(p.var_list(), 1); }
inline Fraction zero_like(const Fraction& x) { return Fraction(Polynomial(x.num().var_list())); }
inline Fraction one_like(const Fraction& x) { return Fraction(Polynomial(x.num().var_list(), 1)); }
inline LocalElem zero_like(const LocalElem& x) { return LocalElem(zero_like(x.num()), 0, x.f(), x.ring()); }
inline LocalElem one_like(const LocalElem& x) { return LocalElem(one_like(x.num()), 0, x.f(), x.ring()); }

inline Polynomial exact_div(const Polynomial& a, const Polynomial& b) { return divide_exact(a, b); }
inline Fraction exact_div(const Fraction& a, const Fraction& b) { return a / b; }

template <class T>
bool is_zero_scalar(const T& x) { return x.is_zero(); }

// ---- construction ----

template <class T>
Mat<T> identity_like(std::size_t n, const T& proto) {
  Mat<T> e(n, n, zero_like(proto));
  for (std::size_t i = 0; i < n; ++i) e(i, i) = one_like(proto);
  return e;
}

template <class T>
Mat<T> zeros_like(std::size_t r, std::size_t c, const T& proto) { return Mat<T>(r, c, zero_like(proto)); }

PolyMat poly_matrix(const std::vector<std::vector<Polynomial>>& rows);

// Stack a above b.
template <class T>
Mat<T> vstack(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.cols()) throw InternalError("vstack: column mismatch");
  std::vector<T> d = a.data();
  d.insert(d.end(), b.data().begin(), b.data().end());
  return Mat<T>::from(a.rows() + b.rows(), a.cols(), std::move(d));
}

template <class T>
Mat<T> hstack(const Mat<T>& a, const Mat<T>& b) { return vstack(a.transpose(), b.transpose()).transpose(); }

// ---- arithmetic ----

template <class T>
Mat<T> operator+(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InternalError("matrix sum: shape mismatch");
  Mat<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <class T>
Mat<T> operator-(const Mat<T>& a) {
  return a.map([](const T& x) { return -x; });
}

template <class T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) { return a + (-b); }

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows() || a.cols() == 0) throw InternalError("matrix product: shape mismatch");
  std::vector<T> d;
  d.reserve(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T s = a(i, 0) * b(0, j);
      for (std::size_t k = 1; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      d.push_back(std::move(s));
    }
  }
  return Mat<T>::from(a.rows(), b.cols(), std::move(d));
}

template <class T>
Mat<T> scale(const T& s, const Mat<T>& a) {
  return a.map([&](const T& x) { return s * x; });
}

// ---- determinants ----

template <class T>
T det_laplace(const Mat<T>& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T sum = zero_like(m(0, 0));
  std::vector<std::size_t> rest(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) rest[i] = i + 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero_scalar(m(0, j))) continue;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    T term = m(0, j) * det_laplace(m.pick(rest, cols));
    if (j % 2) sum = sum - term;
    else sum = sum + term;
  }
  return sum;
}

// Fraction-free elimination; every division is exact.
template <class T>
T det_bareiss(Mat<T> m) {
  const std::size_t n = m.rows();
  T prev = one_like(m(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero_scalar(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero_scalar(m(p, k))) ++p;
      if (p == n) return zero_like(m(0, 0));
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? -d : d;
}

template <class T>
T det(const Mat<T>& m) {
  if (!m.square() || m.rows() == 0) throw InternalError("det of a non-square or empty matrix");
  if constexpr (requires(const T& a) { exact_div(a, a); }) {
    if (m.rows() > 4) return det_bareiss(m);
  }
  return det_laplace(m);
}

template <class T>
Mat<T> adjugate(const Mat<T>& m) {
  if (!m.square() || m.rows() == 0) throw InternalError("adjugate of a non-square or empty matrix");
  const std::size_t n = m.rows();
  if (n == 1) return Mat<T>(1, 1, one_like(m(0, 0)));
  Mat<T> adj(n, n, zero_like(m(0, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rs, cs;
      for (std::size_t r = 0; r < n; ++r)
        if (r != j) rs.push_back(r);
      for (std::size_t c = 0; c < n; ++c)
        if (c != i) cs.push_back(c);
      T minor = det(m.pick(rs, cs));
      adj(i, j) = (i + j) % 2 ? -minor : minor;
    }
  }
  return adj;
}

// ---- index sets ----

// Strictly ascending, 1-based row indices.
using IndexSet = std::vector<std::size_t>;

// All C(m+n, m) index sets in lexicographic order.
std::vector<IndexSet> enumerate_index_sets(std::size_t m, std::size_t n);

// All k-subsets of {0..total-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t total, std::size_t k);

// Complement of I in 1..total, ascending.
IndexSet complement(const IndexSet& I, std::size_t total);

std::string format_index_set(const IndexSet& I);

struct Selection {
  PolyMat delta;  // m x (m+n), 1 at (k, i_k)
  PolyMat x;      // (m+n) x n, 1 at (ibar_k, k)
};

Selection selection(const IndexSet& I, std::size_t m, std::size_t n, const VarList& vars);

// (-1)^(sum_k (i_k - k)).
int laplace_sign(const IndexSet& I);

// Every size-k minor, row subsets outer and column subsets inner, both
// lexicographic.
template <class T>
std::vector<T> minors(const Mat<T>& m, std::size_t k) {
  std::vector<T> out;
  for (const auto& rs : combinations(m.rows(), k))
    for (const auto& cs : combinations(m.cols(), k)) out.push_back(det(m.pick(rs, cs)));
  return out;
}

// Rows of m at the 1-based indices of I.
template <class T>
Mat<T> rows_of(const Mat<T>& m, const IndexSet& I) {
  std::vector<std::size_t> rs, cs;
  for (auto i : I) rs.push_back(i - 1);
  for (std::size_t j = 0; j < m.cols(); ++j) cs.push_back(j);
  return m.pick(rs, cs);
}

// ---- fraction matrices ----

FracMat to_fractions(const PolyMat& m);

// Throws IllPosed when m is singular.
FracMat inverse(const FracMat& m);

bool z_nonsingular(const PolyMat& m, const RingModel& ring);

std::vector<std::vector<std::string>> format_matrix(const PolyMat& m);
std::vector<std::vector<std::string>> format_matrix(const FracMat& m);

}  // namespace gefstab
