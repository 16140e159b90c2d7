#include "gefstab/matrix.hpp"

#include <numeric>
#include <sstream>

namespace gefstab {

PolyMat poly_matrix(const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.empty() || rows[0].empty()) throw InternalError("empty matrix");
  std::vector<Polynomial> d;
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw InternalError("ragged matrix");
    d.insert(d.end(), r.begin(), r.end());
  }
  return PolyMat::from(rows.size(), rows[0].size(), std::move(d));
}

std::vector<std::vector<std::size_t>> combinations(std::size_t total, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > total) return out;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == total - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::vector<IndexSet> enumerate_index_sets(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InputError("index sets need m, n >= 1");
  std::vector<IndexSet> out;
  for (auto c : combinations(m + n, m)) {
    for (auto& i : c) ++i;
    out.push_back(std::move(c));
  }
  return out;
}

IndexSet complement(const IndexSet& I, std::size_t total) {
  IndexSet out;
  std::size_t k = 0;
  for (std::size_t i = 1; i <= total; ++i) {
    if (k < I.size() && I[k] == i) ++k;
    else out.push_back(i);
  }
  return out;
}

std::string format_index_set(const IndexSet& I) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < I.size(); ++k) os << (k ? "," : "") << I[k];
  os << '}';
  return os.str();
}

Selection selection(const IndexSet& I, std::size_t m, std::size_t n, const VarList& vars) {
  if (I.size() != m) throw InputError("index set size must equal m");
  for (std::size_t k = 0; k < m; ++k) {
    if (I[k] < 1 || I[k] > m + n || (k && I[k] <= I[k - 1])) throw InputError("invalid index set");
  }
  const Polynomial zero(vars), one(vars, 1);
  Selection s{PolyMat(m, m + n, zero), PolyMat(m + n, n, zero)};
  for (std::size_t k = 0; k < m; ++k) s.delta(k, I[k] - 1) = one;
  const IndexSet bar = complement(I, m + n);
  for (std::size_t k = 0; k < n; ++k) s.x(bar[k] - 1, k) = one;
  return s;
}

int laplace_sign(const IndexSet& I) {
  std::size_t s = 0;
  for (std::size_t k = 0; k < I.size(); ++k) s += I[k] - (k + 1);
  return s % 2 ? -1 : 1;
}

FracMat to_fractions(const PolyMat& m) {
  return m.map([](const Polynomial& p) { return Fraction(p); });
}

FracMat inverse(const FracMat& m) {
  Fraction d = det(m);
  if (d.is_zero()) throw IllPosed("matrix is singular");
  Fraction inv = Fraction(Polynomial(d.num().var_list(), 1)) / d;
  return adjugate(m).map([&](const Fraction& x) { return x * inv; });
}

bool z_nonsingular(const PolyMat& m, const RingModel& ring) { return in_A_minus_Z(det(m), ring); }

std::vector<std::vector<std::string>> format_matrix(const PolyMat& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(format_canonical(m(i, j)));
  return out;
}

std::vector<std::vector<std::string>> format_matrix(const FracMat& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(format_fraction(m(i, j)));
  return out;
}

}  // namespace gefstab
