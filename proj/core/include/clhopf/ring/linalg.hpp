#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "clhopf/ring/matrix.hpp"

namespace clhopf {

enum class SolveStatus { Unique, NonUnique, NoSolution };

const char* to_string(SolveStatus s);

// M * solution = denominator * b. For NonUnique, `solution` is one particular
// solution (free variables zero) and `nullspace` spans the kernel. For
// NoSolution the rank data certifies the inconsistency.
template <Scalar R>
struct SolveResult {
  SolveStatus status = SolveStatus::NoSolution;
  std::vector<R> solution;
  R denominator{1};
  std::vector<std::vector<R>> nullspace;
  std::size_t rank = 0;
  std::size_t augmented_rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::optional<std::size_t> inconsistent_row;
};

template <Scalar R>
R det(RingMatrix<R> m) {
  if (!m.is_square()) throw DimensionError("det of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  bool negate = false;
  R prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i)
      if (!m(i, k).is_zero() && (p == n || scalar_weight(m(i, k)) < scalar_weight(m(p, k)))) p = i;
    if (p == n) return R(0);
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(p, j), m(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = R(0);
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

namespace detail {

// Fraction-free Gauss-Jordan on [M | b]. Every pivot entry ends equal to the
// last pivot value d, so pivot row i reads d*x_{c_i} + sum_free A(i,f) x_f = b'_i.
template <Scalar R>
SolveResult<R> bareiss_solve_dense(RingMatrix<R> a, std::vector<R> b) {
  const std::size_t m = a.rows(), n = a.cols();
  SolveResult<R> res;
  R prev(1);
  bool negate = false;
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = m;
    for (std::size_t i = r; i < m; ++i)
      if (!a(i, c).is_zero() && (p == m || scalar_weight(a(i, c)) < scalar_weight(a(p, c)))) p = i;
    if (p == m) continue;
    if (p != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
      std::swap(b[p], b[r]);
      negate = !negate;
    }
    const R piv = a(r, c);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      const R f = a(i, c);
      if (f.is_zero()) {
        if (!(piv == prev)) {
          for (std::size_t j = 0; j < n; ++j)
            if (!a(i, j).is_zero()) a(i, j) = exact_quotient(piv * a(i, j), prev);
          if (!b[i].is_zero()) b[i] = exact_quotient(piv * b[i], prev);
        }
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        if (a(i, j).is_zero() && a(r, j).is_zero()) continue;
        a(i, j) = exact_quotient(piv * a(i, j) - f * a(r, j), prev);
      }
      b[i] = exact_quotient(piv * b[i] - f * b[r], prev);
      a(i, c) = R(0);
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.pivot_columns = pivots;
  res.augmented_rank = r;
  for (std::size_t i = r; i < m; ++i)
    if (!b[i].is_zero()) {
      res.augmented_rank = r + 1;
      res.inconsistent_row = i;
      res.status = SolveStatus::NoSolution;
      res.denominator = prev;
      return res;
    }
  const R d = negate ? -prev : prev;
  res.denominator = d;
  res.solution.assign(n, R(0));
  for (std::size_t i = 0; i < r; ++i) res.solution[pivots[i]] = negate ? -b[i] : b[i];
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<R> v(n, R(0));
    v[f] = prev;
    for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = -a(i, f);
    res.nullspace.push_back(std::move(v));
  }
  res.status = res.nullspace.empty() ? SolveStatus::Unique : SolveStatus::NonUnique;
  return res;
}

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

struct Components {
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<std::size_t>> cols;
};

template <Scalar R>
Components connected_components(const RingMatrix<R>& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> parent(m + n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) parent[find(i)] = find(m + j);
  std::map<std::size_t, std::size_t> index;
  Components out;
  auto slot = [&](std::size_t root) {
    auto [it, inserted] = index.try_emplace(root, out.rows.size());
    if (inserted) {
      out.rows.emplace_back();
      out.cols.emplace_back();
    }
    return it->second;
  };
  for (std::size_t i = 0; i < m; ++i) out.rows[slot(find(i))].push_back(i);
  for (std::size_t j = 0; j < n; ++j) out.cols[slot(find(m + j))].push_back(j);
  return out;
}

}  // namespace detail

// Fraction-free (Bareiss) solve. The system is split into the connected
// components of its sparsity pattern first; each block is eliminated on its
// own and the results are recombined over a common denominator. When M is
// square and nonsingular the denominator equals det(M).
template <Scalar R>
SolveResult<R> solve_linear(const RingMatrix<R>& a, const std::vector<R>& b) {
  if (a.rows() != b.size()) throw DimensionError("right-hand side length mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  const auto comps = detail::connected_components(a);
  const std::size_t k = comps.rows.size();

  std::vector<SolveResult<R>> parts(k);
  SolveResult<R> res;
  for (std::size_t c = 0; c < k; ++c) {
    const auto& rs = comps.rows[c];
    const auto& cs = comps.cols[c];
    RingMatrix<R> sub(rs.size(), cs.size());
    std::vector<R> sb(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      sb[i] = b[rs[i]];
      for (std::size_t j = 0; j < cs.size(); ++j) sub(i, j) = a(rs[i], cs[j]);
    }
    parts[c] = detail::bareiss_solve_dense(std::move(sub), std::move(sb));
    res.rank += parts[c].rank;
    for (auto pc : parts[c].pivot_columns) res.pivot_columns.push_back(cs[pc]);
    if (parts[c].status == SolveStatus::NoSolution && !res.inconsistent_row)
      res.inconsistent_row = rs[*parts[c].inconsistent_row];
  }
  std::sort(res.pivot_columns.begin(), res.pivot_columns.end());
  if (res.inconsistent_row) {
    res.augmented_rank = res.rank + 1;
    res.status = SolveStatus::NoSolution;
    return res;
  }
  res.augmented_rank = res.rank;

  R d(1);
  for (const auto& p : parts) d = d * p.denominator;
  bool negate = false;
  if (m == n && res.rank == n) {
    std::vector<std::size_t> row_perm, col_perm;
    for (std::size_t c = 0; c < k; ++c) {
      row_perm.insert(row_perm.end(), comps.rows[c].begin(), comps.rows[c].end());
      col_perm.insert(col_perm.end(), comps.cols[c].begin(), comps.cols[c].end());
    }
    negate = detail::permutation_sign(row_perm) * detail::permutation_sign(col_perm) < 0;
  }
  res.denominator = negate ? -d : d;
  res.solution.assign(n, R(0));
  for (std::size_t c = 0; c < k; ++c) {
    R others(negate ? -1 : 1);
    for (std::size_t o = 0; o < k; ++o)
      if (o != c) others = others * parts[o].denominator;
    const auto& cs = comps.cols[c];
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (!parts[c].solution[j].is_zero()) res.solution[cs[j]] = parts[c].solution[j] * others;
    for (const auto& v : parts[c].nullspace) {
      std::vector<R> full(n, R(0));
      for (std::size_t j = 0; j < cs.size(); ++j) full[cs[j]] = v[j];
      res.nullspace.push_back(std::move(full));
    }
  }
  res.status = res.nullspace.empty() ? SolveStatus::Unique : SolveStatus::NonUnique;
  return res;
}

// Sparse Gauss-Jordan over Q for the large systems (crossing, weak antipode).
// Rows are given as column->value maps; the denominator is always 1.
using SparseRow = std::map<std::size_t, Rational>;

struct SparseSystem {
  std::size_t unknowns = 0;
  std::vector<SparseRow> rows;
  std::vector<Rational> rhs;

  void add_row(SparseRow row, Rational value);
};

SolveResult<Rational> solve_sparse(const SparseSystem& system);

template <Scalar R>
struct CharPoly2 {
  R trace;
  R det;
  std::vector<R> coefficients() const { return {R(1), -trace, det}; }
};

template <Scalar R>
CharPoly2<R> char_poly_2x2(const RingMatrix<R>& a) {
  if (a.rows() != 2 || a.cols() != 2) throw DimensionError("char_poly_2x2 needs a 2x2 matrix");
  return {a(0, 0) + a(1, 1), a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)};
}

template <Scalar R>
RingMatrix<R> matrix_pow(const RingMatrix<R>& a, unsigned e) {
  RingMatrix<R> out = RingMatrix<R>::identity(a.rows());
  for (unsigned i = 0; i < e; ++i) out = out * a;
  return out;
}

// Column space basis via elimination on the transpose; used for image/kernel
// containment checks.
RingMatrix<Rational> kernel_basis(const RingMatrix<Rational>& a);
std::size_t rank(const RingMatrix<Rational>& a);

}  // namespace clhopf
