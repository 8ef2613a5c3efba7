#include "clhopf/ring/linalg.hpp"

namespace clhopf {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unique: return "unique";
    case SolveStatus::NonUnique: return "non-unique";
    case SolveStatus::NoSolution: return "no-solution";
  }
  return "?";
}

void SparseSystem::add_row(SparseRow row, Rational value) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= unknowns) throw DimensionError("sparse row references an unknown out of range");
    it = it->second.is_zero() ? row.erase(it) : std::next(it);
  }
  rows.push_back(std::move(row));
  rhs.push_back(std::move(value));
}

SolveResult<Rational> solve_sparse(const SparseSystem& system) {
  const std::size_t n = system.unknowns;
  struct Pivot {
    std::size_t col;
    SparseRow row;  // includes the pivot entry, normalized to 1
    Rational rhs;
  };
  std::vector<Pivot> pivots;
  std::vector<std::size_t> pivot_at(n, SIZE_MAX);
  // For each column, the pivot rows whose entry there is nonzero; keeps the
  // back-substitution step proportional to the fill instead of the rank.
  std::vector<std::vector<std::size_t>> users(n);

  SolveResult<Rational> res;
  res.denominator = Rational(1);
  for (std::size_t ri = 0; ri < system.rows.size(); ++ri) {
    SparseRow row = system.rows[ri];
    Rational rhs = system.rhs[ri];
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [c, v] : row)
      if (pivot_at[c] != SIZE_MAX) hits.emplace_back(c, v);
    for (const auto& [c, v] : hits) {
      const Pivot& p = pivots[pivot_at[c]];
      for (const auto& [pc, pv] : p.row) {
        auto [it, inserted] = row.try_emplace(pc, -(v * pv));
        if (!inserted) {
          it->second -= v * pv;
          if (it->second.is_zero()) row.erase(it);
        }
      }
      rhs -= v * p.rhs;
    }
    if (row.empty()) {
      // Keep eliminating so that rank covers every row, not just the prefix.
      if (!rhs.is_zero() && !res.inconsistent_row) res.inconsistent_row = ri;
      continue;
    }
    const std::size_t col = row.begin()->first;
    const Rational inv = row.begin()->second.inverse();
    for (auto& [c, v] : row) v *= inv;
    rhs *= inv;
    const std::size_t idx = pivots.size();
    // Clear the new pivot column from earlier pivot rows.
    for (std::size_t u : users[col]) {
      Pivot& q = pivots[u];
      auto it = q.row.find(col);
      if (it == q.row.end()) continue;
      const Rational f = it->second;
      for (const auto& [c, v] : row) {
        auto [jt, inserted] = q.row.try_emplace(c, -(f * v));
        if (!inserted) {
          jt->second -= f * v;
          if (jt->second.is_zero()) q.row.erase(jt);
        } else if (c != col) {
          users[c].push_back(u);
        }
      }
      q.rhs -= f * rhs;
    }
    users[col].clear();
    for (const auto& [c, v] : row)
      if (c != col) users[c].push_back(idx);
    pivot_at[col] = idx;
    pivots.push_back({col, std::move(row), std::move(rhs)});
  }

  res.rank = res.augmented_rank = pivots.size();
  if (res.inconsistent_row) {
    res.status = SolveStatus::NoSolution;
    res.augmented_rank = res.rank + 1;
    for (const auto& p : pivots) res.pivot_columns.push_back(p.col);
    std::sort(res.pivot_columns.begin(), res.pivot_columns.end());
    return res;
  }
  res.solution.assign(n, Rational(0));
  for (const auto& p : pivots) {
    res.solution[p.col] = p.rhs;
    res.pivot_columns.push_back(p.col);
  }
  std::sort(res.pivot_columns.begin(), res.pivot_columns.end());
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot_at[f] != SIZE_MAX) continue;
    std::vector<Rational> v(n, Rational(0));
    v[f] = Rational(1);
    for (const auto& p : pivots)
      if (auto it = p.row.find(f); it != p.row.end()) v[p.col] = -it->second;
    res.nullspace.push_back(std::move(v));
  }
  res.status = res.nullspace.empty() ? SolveStatus::Unique : SolveStatus::NonUnique;
  return res;
}

namespace {

SparseSystem homogeneous(const RingMatrix<Rational>& a) {
  SparseSystem sys;
  sys.unknowns = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) row.emplace(j, a(i, j));
    sys.add_row(std::move(row), Rational(0));
  }
  return sys;
}

}  // namespace

RingMatrix<Rational> kernel_basis(const RingMatrix<Rational>& a) {
  const auto res = solve_sparse(homogeneous(a));
  RingMatrix<Rational> out(a.cols(), res.nullspace.size());
  for (std::size_t k = 0; k < res.nullspace.size(); ++k)
    for (std::size_t i = 0; i < a.cols(); ++i) out(i, k) = res.nullspace[k][i];
  return out;
}

std::size_t rank(const RingMatrix<Rational>& a) { return solve_sparse(homogeneous(a)).rank; }

}  // namespace clhopf
