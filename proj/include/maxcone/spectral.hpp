#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxcone/matrix.hpp"

namespace maxcone {

// A cycle geometric mean kept as (weight, length) so that irrational roots
// stay exact. length == 0 encodes "no cycle", i.e. the value zero.
template <Semiring S>
struct CycleMean {
  typename S::value_type weight;
  unsigned length = 0;

  bool is_zero() const { return length == 0; }
};

template <Semiring S>
int compare_means(const S& s, const CycleMean<S>& a, const CycleMean<S>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero() ? 0 : (a.is_zero() ? -1 : 1);
  return s.compare(s.pow(a.weight, b.length), s.pow(b.weight, a.length));
}

// Compare a mean with the unit.
template <Semiring S>
int compare_to_one(const S& s, const CycleMean<S>& m) {
  if (m.is_zero()) return -1;
  return s.compare(m.weight, s.one());
}

template <Semiring S>
double mean_log(const S& s, const CycleMean<S>& m) {
  if (m.is_zero()) return s.to_log(s.zero());
  return s.to_log(m.weight) / m.length;
}

template <Semiring S>
std::optional<typename S::value_type> mean_value(const S& s, const CycleMean<S>& m) {
  if (m.is_zero()) return s.zero();
  return s.root(m.weight, m.length);
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  std::size_t count() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) c += find(i) == i;
    return c;
  }

 private:
  std::vector<std::size_t> parent_;
};

template <Semiring S>
void require_square(const Matrix<S>& a, const char* what) {
  if (!a.square())
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": matrix must be square, got " + shape(a.rows(), a.cols()));
}

}  // namespace detail

// Maximum cycle geometric mean by Karp's algorithm, all nodes as sources.
template <Semiring S>
CycleMean<S> lambda(const Matrix<S>& a) {
  detail::require_square(a, "lambda");
  const S& s = a.semiring();
  const std::size_t n = a.rows();
  std::vector<std::vector<typename S::value_type>> d(n + 1, std::vector<typename S::value_type>(n, s.zero()));
  for (Index v = 0; v < n; ++v) d[0][v] = s.one();
  for (std::size_t k = 1; k <= n; ++k)
    for (Index u = 0; u < n; ++u) {
      if (s.is_zero(d[k - 1][u])) continue;
      for (Index v = 0; v < n; ++v)
        if (!s.is_zero(a(u, v))) d[k][v] = s.add(d[k][v], s.mul(d[k - 1][u], a(u, v)));
    }

  CycleMean<S> best{s.zero(), 0};
  for (Index v = 0; v < n; ++v) {
    if (s.is_zero(d[n][v])) continue;
    std::optional<CycleMean<S>> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (s.is_zero(d[k][v])) continue;
      CycleMean<S> m{s.div(d[n][v], d[k][v]), static_cast<unsigned>(n - k)};
      if (!worst || compare_means(s, m, *worst) < 0) worst = m;
    }
    if (worst && compare_means(s, *worst, best) > 0) best = *worst;
  }
  return best;
}

// A / lambda(A); needs lambda to be representable in the backend.
template <Semiring S>
Matrix<S> normalize_by_lambda(const Matrix<S>& a) {
  const S& s = a.semiring();
  auto m = lambda(a);
  if (m.is_zero()) throw Error(ErrorCode::Precondition, "normalize: lambda(A) is zero");
  auto v = mean_value(s, m);
  if (!v) throw Error(ErrorCode::Unsupported, "normalize: lambda(A) is irrational in this backend");
  return scale(a, s.inv(*v));
}

template <Semiring S>
std::vector<std::vector<bool>> reachability(const Matrix<S>& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) r[i][j] = !a.semiring().is_zero(a(i, j));
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      if (r[i][k])
        for (Index j = 0; j < n; ++j) r[i][j] = r[i][j] || r[k][j];
  return r;
}

template <Semiring S>
bool is_irreducible(const Matrix<S>& a) {
  detail::require_square(a, "is_irreducible");
  auto r = reachability(a);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.rows(); ++j)
      if (i != j && !r[i][j]) return false;
  return a.rows() > 1 || r[0][0];
}

// Floyd-Warshall closure; valid when lambda(A) <= 1.
template <Semiring S>
Matrix<S> closure_unchecked(const Matrix<S>& a) {
  const S& s = a.semiring();
  const std::size_t n = a.rows();
  Matrix<S> c = mat_add(a, identity<S>(n, s));
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i) {
      if (s.is_zero(c(i, k))) continue;
      auto cik = c(i, k);
      for (Index j = 0; j < n; ++j) c(i, j) = s.add(c(i, j), s.mul(cik, c(k, j)));
    }
  for (Index i = 0; i < n; ++i) c(i, i) = s.one();
  return c;
}

template <Semiring S>
Matrix<S> kleene_star(const Matrix<S>& a) {
  detail::require_square(a, "kleene_star");
  const S& s = a.semiring();
  auto m = lambda(a);
  if (compare_to_one(s, m) > 0)
    throw Error(ErrorCode::Divergent, "divergent: lambda(A) > 1 (log lambda = " +
                                          std::to_string(mean_log(s, m)) + ")");
  return closure_unchecked(a);
}

template <Semiring S>
bool is_kleene_star(const Matrix<S>& a) {
  if (!a.square()) return false;
  const S& s = a.semiring();
  for (Index i = 0; i < a.rows(); ++i)
    if (s.compare(a(i, i), s.one()) != 0) return false;
  return mat_eq(mat_mul(a, a), a);
}

struct CriticalGraph {
  IndexSet nodes;
  std::vector<std::pair<Index, Index>> edges;
  std::vector<IndexSet> sccs;
  IndexSet representatives;
  IndexSet non_critical;

  std::size_t n_c() const { return sccs.size(); }
};

template <Semiring S>
bool is_definite(const Matrix<S>& a) {
  return a.square() && compare_to_one(a.semiring(), lambda(a)) == 0;
}

template <Semiring S>
CriticalGraph critical_graph(const Matrix<S>& a) {
  detail::require_square(a, "critical_graph");
  const S& s = a.semiring();
  const std::size_t n = a.rows();
  if (compare_to_one(s, lambda(a)) != 0)
    throw Error(ErrorCode::NotDefinite, "critical_graph: matrix is not definite");
  Matrix<S> star = closure_unchecked(a);

  CriticalGraph g;
  std::vector<bool> on(n, false);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (s.is_zero(a(i, j))) continue;
      if (s.compare(s.mul(a(i, j), star(j, i)), s.one()) == 0) {
        g.edges.emplace_back(i, j);
        adj[i][j] = true;
        on[i] = on[j] = true;
      }
    }
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      if (adj[i][k])
        for (Index j = 0; j < n; ++j) adj[i][j] = adj[i][j] || adj[k][j];

  std::vector<bool> placed(n, false);
  for (Index i = 0; i < n; ++i) {
    if (!on[i]) {
      g.non_critical.push_back(i);
      continue;
    }
    g.nodes.push_back(i);
    if (placed[i]) continue;
    IndexSet comp{i};
    placed[i] = true;
    for (Index j = i + 1; j < n; ++j)
      if (on[j] && !placed[j] && adj[i][j] && adj[j][i]) {
        comp.push_back(j);
        placed[j] = true;
      }
    g.representatives.push_back(i);
    g.sccs.push_back(std::move(comp));
  }
  return g;
}

// Components of the undirected graph on [n] spanned by the critical edges.
inline std::size_t critical_components(std::size_t n, const CriticalGraph& g) {
  detail::DisjointSets ds(n);
  for (auto [i, j] : g.edges) ds.unite(i, j);
  return ds.count();
}

enum class BasisKind { Eigencone, Subeigencone, Span };

inline const char* basis_kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::Eigencone: return "eigencone";
    case BasisKind::Subeigencone: return "subeigencone";
    case BasisKind::Span: return "span";
  }
  return "span";
}

template <Semiring S>
struct ConeBasis {
  std::vector<Vector<S>> generators;
  BasisKind kind = BasisKind::Span;
  std::size_t max_dimension = 0;
  std::optional<std::size_t> linear_dimension;
};

template <Semiring S>
struct EigenconeBases {
  ConeBasis<S> eigencone;
  ConeBasis<S> subeigencone;
  CriticalGraph critical;
  Matrix<S> star;
};

template <Semiring S>
EigenconeBases<S> eigencone_bases(const Matrix<S>& a) {
  CriticalGraph g = critical_graph(a);
  Matrix<S> star = closure_unchecked(a);
  EigenconeBases<S> out{{}, {}, g, star};
  out.eigencone.kind = BasisKind::Eigencone;
  out.subeigencone.kind = BasisKind::Subeigencone;
  for (Index i : g.representatives) {
    out.eigencone.generators.push_back(scaled(star.column(i)));
    out.subeigencone.generators.push_back(scaled(star.column(i)));
  }
  for (Index j : g.non_critical) out.subeigencone.generators.push_back(scaled(star.column(j)));
  out.eigencone.max_dimension = out.eigencone.generators.size();
  out.subeigencone.max_dimension = out.subeigencone.generators.size();
  out.eigencone.linear_dimension = g.n_c();
  out.subeigencone.linear_dimension = critical_components(a.rows(), g);
  return out;
}

template <Semiring S>
struct IntersectionResult {
  bool trivial = false;
  CycleMean<S> lambda;
  std::optional<Matrix<S>> star;
};

template <Semiring S>
IntersectionResult<S> kleene_intersection(const std::vector<Matrix<S>>& stars) {
  if (stars.empty()) throw Error(ErrorCode::Precondition, "kleene_intersection: no matrices");
  Matrix<S> sum = stars.front();
  for (std::size_t t = 0; t < stars.size(); ++t) {
    if (!is_kleene_star(stars[t]))
      throw Error(ErrorCode::Precondition,
                  "kleene_intersection: input " + std::to_string(t) + " is not a Kleene star");
    if (t > 0) sum = mat_add(sum, stars[t]);
  }
  IntersectionResult<S> r;
  r.lambda = lambda(sum);
  if (compare_to_one(sum.semiring(), r.lambda) == 0) {
    r.star = closure_unchecked(sum);
  } else {
    r.trivial = true;
  }
  return r;
}

// lambda of A^(order[0]) (x) ... (x) A^(order[k-1]).
template <Semiring S>
CycleMean<S> product_lambda(const std::vector<Matrix<S>>& as, const std::vector<Index>& order) {
  Matrix<S> p = as.at(order.at(0));
  for (std::size_t t = 1; t < order.size(); ++t) p = mat_mul(p, as.at(order[t]));
  return lambda(p);
}

}  // namespace maxcone
