#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "maxcone/matrix.hpp"
#include "maxcone/spectral.hpp"

namespace maxcone {

struct TypeCover {
  std::vector<IndexSet> col_type;  // T_j, one per column
  std::vector<IndexSet> row_type;  // S_i, one per row
};

template <Semiring S>
TypeCover type_of(const Vector<S>& y, const Matrix<S>& a) {
  if (y.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "type_of: length mismatch");
  if (!y.is_positive()) throw Error(ErrorCode::Precondition, "type_of: y must be positive");
  if (a.has_zero_row() || a.has_zero_column())
    throw Error(ErrorCode::Precondition, "type_of: matrix has a zero row or column");
  const S& s = a.semiring();
  TypeCover t;
  t.col_type.resize(a.cols());
  t.row_type.resize(a.rows());
  for (Index j = 0; j < a.cols(); ++j) {
    auto best = s.zero();
    for (Index i = 0; i < a.rows(); ++i) best = s.add(best, s.div(a(i, j), y[i]));
    for (Index i = 0; i < a.rows(); ++i)
      if (s.compare(s.div(a(i, j), y[i]), best) == 0) {
        t.col_type[j].push_back(i);
        t.row_type[i].push_back(j);
      }
  }
  return t;
}

template <Semiring S>
struct Membership {
  bool member = false;
  Vector<S> x;           // principal solution
  IndexSet uncovered;    // coordinates of supp(y) with no column <=_j y
};

// Columns v with v_j != 0 and v <=_j y, for j in supp(y).
template <Semiring S>
IndexSet uncovered_coordinates(const Vector<S>& y, const std::vector<Vector<S>>& gens) {
  IndexSet out;
  for (Index j : y.support()) {
    bool covered = false;
    for (const auto& v : gens)
      if (!v.semiring().is_zero(v[j]) && preorder_le(v, y, j)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(j);
  }
  return out;
}

template <Semiring S>
Membership<S> is_member(const Vector<S>& y, const Matrix<S>& a) {
  if (y.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "is_member: length mismatch");
  Membership<S> r;
  r.x = principal_solution(a, y);
  r.member = vec_eq(apply(a, r.x), y);
  if (!r.member) r.uncovered = uncovered_coordinates(y, a.columns());
  return r;
}

template <Semiring S>
struct Witness {
  std::vector<Index> indices;
  std::vector<typename S::value_type> coefficients;
};

template <Semiring S>
Witness<S> caratheodory_witness(const Vector<S>& y, const std::vector<Vector<S>>& gens) {
  const S& s = y.semiring();
  Witness<S> w;
  Vector<S> acc(y.size(), s);
  for (Index j : y.support()) {
    std::optional<Index> pick;
    for (Index g = 0; g < gens.size() && !pick; ++g) {
      if (gens[g].size() != y.size())
        throw Error(ErrorCode::DimensionMismatch, "caratheodory_witness: length mismatch");
      if (!s.is_zero(gens[g][j]) && preorder_le(gens[g], y, j)) pick = g;
    }
    if (!pick) throw Error(ErrorCode::NotMember, "caratheodory_witness: y is not in the span");
    if (std::find(w.indices.begin(), w.indices.end(), *pick) != w.indices.end()) continue;
    auto c = residual(y, gens[*pick]);
    w.indices.push_back(*pick);
    w.coefficients.push_back(c);
    acc = vec_max(acc, scale(gens[*pick], c));
  }
  if (!vec_eq(acc, y)) throw Error(ErrorCode::NotMember, "caratheodory_witness: y is not in the span");
  return w;
}

// v is <=_j-minimal among the vectors with nonzero j-th coordinate.
template <Semiring S>
bool is_minimal_at(const Vector<S>& v, const std::vector<Vector<S>>& gens, Index j) {
  const S& s = v.semiring();
  if (s.is_zero(v[j])) return false;
  for (const auto& w : gens) {
    if (s.is_zero(w[j])) continue;
    if (preorder_le(w, v, j) && !preorder_le(v, w, j)) return false;
  }
  return true;
}

template <Semiring S>
ConeBasis<S> extremals_and_basis(const std::vector<Vector<S>>& gens) {
  ConeBasis<S> b;
  b.kind = BasisKind::Span;
  std::vector<Vector<S>> nonzero;
  for (const auto& v : gens)
    if (!v.is_zero()) nonzero.push_back(v);
  for (const auto& v : nonzero) {
    bool extremal = false;
    for (Index j : v.support())
      if (is_minimal_at(v, nonzero, j)) {
        extremal = true;
        break;
      }
    if (!extremal) continue;
    Vector<S> sv = scaled(v);
    bool dup = std::any_of(b.generators.begin(), b.generators.end(),
                           [&](const Vector<S>& g) { return vec_eq(g, sv); });
    if (!dup) b.generators.push_back(sv);
  }
  b.max_dimension = b.generators.size();
  return b;
}

template <Semiring S>
struct Cell {
  std::vector<IndexSet> row_type;
  Matrix<S> region;
  std::optional<Matrix<S>> star;
  bool feasible = false;
  std::size_t dimension = 0;         // components of G_S
  std::size_t region_dimension = 0;  // components of the critical graph of A^S
  std::vector<std::pair<Index, Index>> gs_edges;
};

namespace detail {

inline bool intersects(const IndexSet& a, const IndexSet& b) {
  for (Index x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  return false;
}

}  // namespace detail

template <Semiring S>
std::vector<std::pair<Index, Index>> gs_graph(const std::vector<IndexSet>& row_type) {
  std::vector<std::pair<Index, Index>> e;
  for (Index i = 0; i < row_type.size(); ++i)
    for (Index j = i + 1; j < row_type.size(); ++j)
      if (detail::intersects(row_type[i], row_type[j])) e.emplace_back(i, j);
  return e;
}

template <Semiring S>
Cell<S> region_star(const std::vector<IndexSet>& row_type, const Matrix<S>& a) {
  const std::size_t n = a.rows();
  if (row_type.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "region_star: row type needs one set per row");
  const S& s = a.semiring();
  Cell<S> c;
  c.row_type = row_type;
  c.region = Matrix<S>(n, n, s);
  bool finite = true;
  for (Index j = 0; j < n; ++j) {
    if (row_type[j].empty()) {
      c.region(j, j) = s.one();
      continue;
    }
    for (Index k : row_type[j]) {
      if (k >= a.cols()) throw Error(ErrorCode::Precondition, "region_star: column index out of range");
      if (s.is_zero(a(j, k))) finite = false;
    }
    if (!finite) break;
    for (Index i = 0; i < n; ++i) {
      auto v = s.zero();
      for (Index k : row_type[j]) v = s.add(v, s.div(a(i, k), a(j, k)));
      c.region(i, j) = v;
    }
  }
  c.gs_edges = gs_graph<S>(row_type);
  detail::DisjointSets ds(n);
  for (auto [i, j] : c.gs_edges) ds.unite(i, j);
  c.dimension = ds.count();
  if (!finite) return c;
  c.feasible = compare_to_one(s, lambda(c.region)) == 0;
  if (c.feasible) {
    c.star = closure_unchecked(c.region);
    c.region_dimension = critical_components(n, critical_graph(c.region));
  }
  return c;
}

// span(inner) is contained in span(outer), both Kleene stars.
template <Semiring S>
bool star_contains(const Matrix<S>& outer, const Matrix<S>& inner) {
  return mat_eq(mat_mul(outer, inner), inner);
}

template <Semiring S>
std::vector<Cell<S>> enumerate_cells(const Matrix<S>& a, bool include_all = false,
                                     double cap = 1e6) {
  if (a.has_zero_row() || a.has_zero_column())
    throw Error(ErrorCode::Precondition, "enumerate_cells: matrix has a zero row or column");
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  const S& s = a.semiring();
  if (m >= 63 || std::pow(std::pow(2.0, m) - 1.0, static_cast<double>(n)) > cap)
    throw Error(ErrorCode::CapExceeded, "enumerate_cells: candidate count exceeds the cap");

  // Per row, the nonempty subsets of columns where that row is nonzero.
  std::vector<std::vector<unsigned long>> choices(n);
  for (Index i = 0; i < n; ++i) {
    unsigned long allowed = 0;
    for (Index k = 0; k < m; ++k)
      if (!s.is_zero(a(i, k))) allowed |= 1ul << k;
    for (unsigned long mask = 1; mask < (1ul << m); ++mask)
      if ((mask & ~allowed) == 0) choices[i].push_back(mask);
  }
  auto to_sets = [&](const std::vector<unsigned long>& masks) {
    std::vector<IndexSet> t(n);
    for (Index i = 0; i < n; ++i)
      for (Index k = 0; k < m; ++k)
        if (masks[i] >> k & 1ul) t[i].push_back(k);
    return t;
  };

  struct Group {
    std::vector<unsigned long> masks;
    Matrix<S> star;
  };
  std::vector<Group> groups;
  std::vector<std::size_t> pos(n, 0);
  while (true) {
    std::vector<unsigned long> masks(n);
    unsigned long covered = 0;
    for (Index i = 0; i < n; ++i) {
      masks[i] = choices[i][pos[i]];
      covered |= masks[i];
    }
    // every column has a nonempty type, so a genuine row type covers all columns
    Cell<S> c;
    if (covered == (1ul << m) - 1) c = region_star(to_sets(masks), a);
    if (c.feasible) {
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const Group& g) { return mat_eq(g.star, *c.star); });
      if (it == groups.end()) {
        groups.push_back({masks, *c.star});
      } else {
        for (Index i = 0; i < n; ++i) it->masks[i] |= masks[i];
      }
    }
    Index i = 0;
    while (i < n && ++pos[i] == choices[i].size()) pos[i++] = 0;
    if (i == n) break;
  }

  std::vector<Cell<S>> cells;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (!include_all) {
      bool inside = false;
      for (std::size_t h = 0; h < groups.size() && !inside; ++h)
        if (h != g && star_contains(groups[h].star, groups[g].star) &&
            !star_contains(groups[g].star, groups[h].star))
          inside = true;
      if (inside) continue;
    }
    cells.push_back(region_star(to_sets(groups[g].masks), a));
  }
  std::sort(cells.begin(), cells.end(),
            [](const Cell<S>& x, const Cell<S>& y) { return x.row_type < y.row_type; });
  return cells;
}

template <Semiring S>
bool in_cell_union(const Vector<S>& y, const std::vector<Cell<S>>& cells) {
  for (const auto& c : cells)
    if (c.star && vec_eq(apply(*c.star, y), y)) return true;
  return false;
}

}  // namespace maxcone
