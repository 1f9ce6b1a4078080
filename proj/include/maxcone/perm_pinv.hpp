#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "maxcone/cones.hpp"
#include "maxcone/matrix.hpp"
#include "maxcone/spectral.hpp"

namespace maxcone {

template <Semiring S>
struct PermanentResult {
  typename S::value_type value;
  std::optional<std::vector<Index>> sigma;  // sigma[i] = column assigned to row i
};

namespace detail {

// Hungarian method on costs c_ij = a_ij^{-1}, written with semiring mul/div so
// it works in the log domain and over exact rationals alike. Returns nullopt
// when no permutation has nonzero weight.
template <Semiring S>
std::optional<std::vector<Index>> max_assignment(const Matrix<S>& a) {
  const S& s = a.semiring();
  const std::size_t n = a.rows();
  if (n == 0) return std::vector<Index>{};
  using V = typename S::value_type;
  auto cost = [&](Index i, Index j) { return s.inv(a(i - 1, j - 1)); };
  std::vector<V> u(n + 1, s.one()), v(n + 1, s.one());
  std::vector<Index> p(n + 1, 0), way(n + 1, 0);
  for (Index i = 1; i <= n; ++i) {
    p[0] = i;
    Index j0 = 0;
    std::vector<V> minv(n + 1, s.top());
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      Index i0 = p[j0];
      Index j1 = 0;
      V delta = s.top();
      for (Index j = 1; j <= n; ++j) {
        if (used[j]) continue;
        V cur = s.div(s.div(cost(i0, j), u[i0]), v[j]);
        if (s.compare(cur, minv[j]) < 0) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (j1 == 0 || s.compare(minv[j], delta) < 0) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (s.is_top(delta)) return std::nullopt;
      for (Index j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] = s.mul(u[p[j]], delta);
          v[j] = s.div(v[j], delta);
        } else {
          minv[j] = s.div(minv[j], delta);
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      Index j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<Index> sigma(n);
  for (Index j = 1; j <= n; ++j) sigma[p[j] - 1] = j - 1;
  return sigma;
}

template <Semiring S>
Matrix<S> submatrix(const Matrix<S>& a, const std::vector<bool>& drop_row, const std::vector<bool>& drop_col) {
  std::size_t r = std::count(drop_row.begin(), drop_row.end(), false);
  std::size_t c = std::count(drop_col.begin(), drop_col.end(), false);
  Matrix<S> m(r, c, a.semiring());
  Index ii = 0;
  for (Index i = 0; i < a.rows(); ++i) {
    if (drop_row[i]) continue;
    Index jj = 0;
    for (Index j = 0; j < a.cols(); ++j) {
      if (drop_col[j]) continue;
      m(ii, jj++) = a(i, j);
    }
    ++ii;
  }
  return m;
}

template <Semiring S>
typename S::value_type permutation_weight(const Matrix<S>& a, const std::vector<Index>& sigma) {
  const S& s = a.semiring();
  auto w = s.one();
  for (Index i = 0; i < sigma.size(); ++i) w = s.mul(w, a(i, sigma[i]));
  return w;
}

template <Semiring S>
typename S::value_type permanent_value(const Matrix<S>& a) {
  auto sigma = max_assignment(a);
  if (!sigma) return a.semiring().zero();
  return permutation_weight(a, *sigma);
}

}  // namespace detail

// Permanent together with the lexicographically smallest maximal permutation.
template <Semiring S>
PermanentResult<S> permanent(const Matrix<S>& a) {
  detail::require_square(a, "permanent");
  const S& s = a.semiring();
  const std::size_t n = a.rows();
  PermanentResult<S> r{detail::permanent_value(a), std::nullopt};
  if (s.is_zero(r.value)) return r;

  std::vector<bool> row_used(n, false), col_used(n, false);
  std::vector<Index> sigma(n);
  auto fixed = s.one();
  for (Index i = 0; i < n; ++i) {
    row_used[i] = true;
    bool placed = false;
    for (Index j = 0; j < n && !placed; ++j) {
      if (col_used[j] || s.is_zero(a(i, j))) continue;
      col_used[j] = true;
      auto rest = detail::permanent_value(detail::submatrix(a, row_used, col_used));
      auto total = s.mul(s.mul(fixed, a(i, j)), rest);
      if (s.compare(total, r.value) == 0) {
        sigma[i] = j;
        fixed = s.mul(fixed, a(i, j));
        placed = true;
      } else {
        col_used[j] = false;
      }
    }
    if (!placed) throw Error(ErrorCode::Internal, "permanent: greedy reconstruction failed");
  }
  r.sigma = sigma;
  return r;
}

template <Semiring S>
struct Pseudoinverse {
  Matrix<S> adjugate;
  std::optional<Matrix<S>> nabla;
  typename S::value_type per;
};

template <Semiring S>
Matrix<S> pseudoadjugate(const Matrix<S>& a) {
  detail::require_square(a, "pseudoadjugate");
  const std::size_t n = a.rows();
  Matrix<S> adj(n, n, a.semiring());
  if (n == 1) {
    adj(0, 0) = a.semiring().one();
    return adj;
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      std::vector<bool> dr(n, false), dc(n, false);
      dr[j] = true;
      dc[i] = true;
      adj(i, j) = detail::permanent_value(detail::submatrix(a, dr, dc));
    }
  return adj;
}

template <Semiring S>
Pseudoinverse<S> pseudoinverse(const Matrix<S>& a) {
  Pseudoinverse<S> r{pseudoadjugate(a), std::nullopt, detail::permanent_value(a)};
  if (!a.semiring().is_zero(r.per)) r.nabla = scale(r.adjugate, a.semiring().inv(r.per));
  return r;
}

template <Semiring S>
struct RowColStars {
  Matrix<S> col_star;
  Matrix<S> row_star;
  std::vector<Index> sigma;
  Matrix<S> col_normalized;  // A^{c sigma}
  Matrix<S> row_normalized;  // A^{r sigma}
};

template <Semiring S>
Matrix<S> column_normalized(const Matrix<S>& a, const std::vector<Index>& sigma) {
  const S& s = a.semiring();
  Matrix<S> c(a.rows(), a.rows(), s);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.rows(); ++j) c(i, j) = s.div(a(i, sigma[j]), a(j, sigma[j]));
  return c;
}

template <Semiring S>
Matrix<S> row_normalized(const Matrix<S>& a, const std::vector<Index>& sigma) {
  const S& s = a.semiring();
  std::vector<Index> inv(sigma.size());
  for (Index i = 0; i < sigma.size(); ++i) inv[sigma[i]] = i;
  Matrix<S> r(a.rows(), a.rows(), s);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.rows(); ++j) r(i, j) = s.div(a(inv[i], j), a(inv[i], i));
  return r;
}

template <Semiring S>
RowColStars<S> row_col_kleene_stars(const Matrix<S>& a, std::optional<std::vector<Index>> sigma = std::nullopt) {
  if (!sigma) {
    auto p = permanent(a);
    if (!p.sigma) throw Error(ErrorCode::ZeroPermanent, "row_col_kleene_stars: permanent is zero");
    sigma = p.sigma;
  }
  Matrix<S> c = column_normalized(a, *sigma);
  Matrix<S> r = row_normalized(a, *sigma);
  return {kleene_star(c), kleene_star(r), *sigma, c, r};
}

template <Semiring S>
struct EssentialSpan {
  ConeBasis<S> basis;
  std::size_t dimension = 0;
  std::vector<Index> sigma;
  Matrix<S> col_star;
};

template <Semiring S>
EssentialSpan<S> essential_span(const Matrix<S>& a) {
  RowColStars<S> st = row_col_kleene_stars(a);
  EssentialSpan<S> e;
  e.sigma = st.sigma;
  e.col_star = st.col_star;
  for (const auto& c : st.col_star.columns()) {
    Vector<S> v = scaled(c);
    if (std::none_of(e.basis.generators.begin(), e.basis.generators.end(),
                     [&](const Vector<S>& g) { return vec_eq(g, v); }))
      e.basis.generators.push_back(v);
  }
  e.basis.max_dimension = e.basis.generators.size();
  e.dimension = critical_components(a.rows(), critical_graph(st.col_normalized));
  e.basis.linear_dimension = e.dimension;
  return e;
}

template <Semiring S>
struct ColorfulWitness {
  std::vector<Vector<S>> extremals;  // one per cone, in cone order
  Vector<S> u;
  std::vector<Index> sigma;
};

template <Semiring S>
ColorfulWitness<S> colorful_witness(const Matrix<S>& u_gens, const std::vector<Matrix<S>>& cones,
                                    const std::vector<Vector<S>>& ys) {
  const std::size_t n = ys.size();
  if (cones.size() != n) throw Error(ErrorCode::DimensionMismatch, "colorful_witness: need one cone per vector");
  if (n == 0 || ys.front().size() != n)
    throw Error(ErrorCode::DimensionMismatch, "colorful_witness: need n vectors of length n");
  for (Index t = 0; t < n; ++t) {
    if (ys[t].is_zero()) throw Error(ErrorCode::Precondition, "colorful_witness: zero vector");
    if (!is_member(ys[t], cones[t]).member)
      throw Error(ErrorCode::NotMember, "colorful_witness: y" + std::to_string(t + 1) + " is not in its cone");
    if (!is_member(ys[t], u_gens).member)
      throw Error(ErrorCode::NotMember, "colorful_witness: y" + std::to_string(t + 1) + " is not in U");
  }
  Matrix<S> y = Matrix<S>::from_columns(ys, ys.front().semiring());
  auto per = permanent(y);
  if (!per.sigma) throw Error(ErrorCode::Unsupported, "colorful_witness: degenerate case (zero permanent)");
  RowColStars<S> st = row_col_kleene_stars(y, per.sigma);

  const S& s = y.semiring();
  ColorfulWitness<S> w{std::vector<Vector<S>>(n), Vector<S>(n, s), *per.sigma};
  for (const auto& c : st.col_star.columns()) w.u = vec_max(w.u, c);
  if (!is_member(w.u, u_gens).member)
    throw Error(ErrorCode::Indeterminate, "colorful_witness: no point of the essential span found in U");

  for (Index i = 0; i < n; ++i) {
    Index cone = w.sigma[i];
    ConeBasis<S> b = extremals_and_basis(cones[cone].columns());
    for (const auto& v : b.generators)
      if (!s.is_zero(v[i]) && preorder_le(v, ys[cone], i)) {
        w.extremals[cone] = v;
        break;
      }
    if (w.extremals[cone].empty())
      throw Error(ErrorCode::Internal, "colorful_witness: no extremal below y in the multiorder");
  }
  if (!is_member(w.u, Matrix<S>::from_columns(w.extremals, s)).member)
    throw Error(ErrorCode::Internal, "colorful_witness: u is not in the span of the extremals");
  return w;
}

}  // namespace maxcone
