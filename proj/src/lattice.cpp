#include "mvlift/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "mvlift/error.hpp"

namespace mvlift {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t inner = b.size();
  std::size_t cols = inner ? b[0].size() : 0;
  IntMatrix c(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
    }
  return c;
}

IntVector multiply(const IntMatrix& a, const IntVector& v) {
  IntVector r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
  return r;
}

Integer determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return Integer(1);
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  // Bareiss fraction-free elimination.
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return Integer(0);
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_unimodular(const IntMatrix& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) return false;
  Integer d = determinant(a);
  return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!is_unimodular(a)) throw PreconditionError("unimodular", "matrix does not have determinant +-1");
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    Rational pivot = m[c][c];
    for (auto& x : m[c]) x /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  IntMatrix inv(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = numerator(m[i][n + j]).convert_to<Int>();
  return inv;
}

namespace {

void column_axpy(IntMatrix& m, std::size_t target, std::size_t source, Int factor) {
  if (factor == 0) return;
  for (auto& row : m) row[target] = checked_add(row[target], -checked_mul(factor, row[source]));
}

void column_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

ColumnReduction column_reduce(const IntMatrix& a, std::size_t columns) {
  ColumnReduction out;
  out.reduced = a;
  out.transform = identity_matrix(columns);
  std::size_t next = 0;
  for (std::size_t i = 0; i < a.size() && next < columns; ++i) {
    auto& row = out.reduced[i];
    while (true) {
      std::size_t best = columns;
      std::size_t nonzero = 0;
      for (std::size_t j = next; j < columns; ++j) {
        if (row[j] == 0) continue;
        ++nonzero;
        if (best == columns || std::llabs(row[j]) < std::llabs(row[best])) best = j;
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        column_swap(out.reduced, best, next);
        column_swap(out.transform, best, next);
        ++next;
        break;
      }
      for (std::size_t j = next; j < columns; ++j) {
        if (j == best || row[j] == 0) continue;
        Int q = row[j] / row[best];
        column_axpy(out.reduced, j, best, q);
        column_axpy(out.transform, j, best, q);
      }
    }
  }
  out.rank = next;
  return out;
}

std::vector<IntVector> integer_kernel_lattice(const IntMatrix& a, std::size_t columns) {
  ColumnReduction cr = column_reduce(a, columns);
  std::vector<IntVector> basis;
  for (std::size_t j = cr.rank; j < columns; ++j) {
    IntVector v(columns);
    for (std::size_t i = 0; i < columns; ++i) v[i] = cr.transform[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

RankInfo rank_info(const std::vector<IntVector>& rows, std::size_t columns) {
  std::vector<IntVector> m = rows;
  RankInfo info;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Int g = gcd(m[r][c], m[i][c]);
      Int fr = m[i][c] / g, fi = m[r][c] / g;
      for (std::size_t j = c; j < columns; ++j) m[i][j] = checked_add(checked_mul(fi, m[i][j]), -checked_mul(fr, m[r][j]));
      m[i] = primitive(m[i]);
    }
    info.pivots.push_back(c);
    ++r;
  }
  info.rank = r;
  return info;
}

std::vector<IntVector> rational_kernel(const std::vector<IntVector>& rows, std::size_t columns) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : rows) m.emplace_back(row.begin(), row.end());
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational pivot = m[r][c];
    for (auto& x : m[r]) x /= pivot;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < columns; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m[k][free];
    Integer lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, Integer(denominator(x)));
    IntVector iv(columns);
    for (std::size_t j = 0; j < columns; ++j) iv[j] = (numerator(v[j]) * (lcm / denominator(v[j]))).convert_to<Int>();
    basis.push_back(primitive(iv));
  }
  return basis;
}

namespace {

Int l1(const IntVector& v) {
  Int s = 0;
  for (Int x : v) s = checked_add(s, std::llabs(x));
  return s;
}

// Integer t minimising |a - t b|_1 (smallest |t| among ties).
Int best_multiple(const IntVector& a, const IntVector& b) {
  std::vector<Int> candidates{0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] == 0) continue;
    Int q = a[i] / b[i];
    candidates.insert(candidates.end(), {q - 1, q, q + 1});
  }
  Int best = 0, best_cost = l1(a);
  for (Int t : candidates) {
    Int cost = l1(a - scaled(b, t));
    if (cost < best_cost || (cost == best_cost && std::llabs(t) < std::llabs(best))) {
      best = t;
      best_cost = cost;
    }
  }
  return best;
}

}  // namespace

IntMatrix complete_to_unimodular(const IntVector& row) {
  const std::size_t n = row.size();
  if (n == 0 || is_zero(row) || gcd(row) != 1)
    throw PreconditionError("primitive_direction", "vector must be nonzero and primitive");
  // row * C = (g, 0, ..., 0) with g = +-1; move that column last.
  ColumnReduction cr = column_reduce(IntMatrix{row}, n);
  Int g = cr.reduced[0][0];
  IntMatrix c(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) c[i][j - 1] = cr.transform[i][j];
    c[i][n - 1] = g * cr.transform[i][0];
  }
  IntMatrix u = unimodular_inverse(c);
  // Size-reduce the free rows against each other and against the fixed last row.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        Int t = best_multiple(u[j], u[k]);
        if (t != 0 && l1(u[j] - scaled(u[k], t)) < l1(u[j])) {
          u[j] = u[j] - scaled(u[k], t);
          changed = true;
        }
      }
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    auto first = std::find_if(u[j].begin(), u[j].end(), [](Int x) { return x != 0; });
    if (first != u[j].end() && *first < 0) u[j] = scaled(u[j], -1);
  }
  std::sort(u.begin(), u.end() - 1, std::greater<>());
  return u;
}

std::vector<IntVector> orthogonal_lattice_basis(const IntVector& row) {
  return integer_kernel_lattice(IntMatrix{row}, row.size());
}

}  // namespace mvlift
