#pragma once

// Builders, random instance generators and brute-force oracles shared by the
// unit tests and the acceptance suite. Oracles avoid the production
// algorithms on purpose: cycles are enumerated, stars are summed as series,
// permanents run over all permutations.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "maxcone/maxcone.hpp"

namespace tsupport {

using namespace maxcone;
using MT = MaxTimesExact;
using MP = MaxPlusExact;
using FL = MaxPlusFloat;

inline ExtRational q(const char* s) {
  std::string t(s);
  mpq_class v(t, 10);
  v.canonicalize();
  return ExtRational(v);
}
inline ExtRational q(long n) { return ExtRational(mpq_class(n)); }
inline ExtRational q(int n) { return q(static_cast<long>(n)); }
inline ExtRational q(long n, long d) {
  mpq_class v(n, d);
  v.canonicalize();
  return ExtRational(v);
}

// Exact max-times matrix from rational literals ("1/2", "3").
inline Matrix<MT> mt(std::vector<std::vector<std::string>> rows) {
  Matrix<MT> m(rows.size(), rows.front().size());
  for (Index i = 0; i < rows.size(); ++i)
    for (Index j = 0; j < rows[i].size(); ++j) m(i, j) = q(rows[i][j].c_str());
  return m;
}
inline Vector<MT> mtv(std::vector<std::string> xs) {
  Vector<MT> v(xs.size());
  for (Index i = 0; i < xs.size(); ++i) v[i] = q(xs[i].c_str());
  return v;
}

// Float backend from max-times values (stored as logs).
inline Matrix<FL> fl(std::vector<std::vector<double>> rows, double tol = kDefaultTolerance) {
  FL s(tol);
  Matrix<FL> m(rows.size(), rows.front().size(), s);
  for (Index i = 0; i < rows.size(); ++i)
    for (Index j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j] == 0 ? s.zero() : std::log(rows[i][j]);
  return m;
}
inline Vector<FL> flv(std::vector<double> xs, double tol = kDefaultTolerance) {
  FL s(tol);
  Vector<FL> v(xs.size(), s);
  for (Index i = 0; i < xs.size(); ++i) v[i] = xs[i] == 0 ? s.zero() : std::log(xs[i]);
  return v;
}

// Max-plus exact from integers; use a sentinel below -1e8 for -inf.
inline Matrix<MP> mp(std::vector<std::vector<long>> rows) {
  Matrix<MP> m(rows.size(), rows.front().size());
  for (Index i = 0; i < rows.size(); ++i)
    for (Index j = 0; j < rows[i].size(); ++j)
      m(i, j) = rows[i][j] < -100000000 ? ExtRational::neg_inf() : q(rows[i][j]);
  return m;
}
inline Vector<MP> mpv(std::vector<long> xs) {
  Vector<MP> v(xs.size());
  for (Index i = 0; i < xs.size(); ++i) v[i] = q(xs[i]);
  return v;
}

inline double val(const FL& s, double v) { return s.is_zero(v) ? 0.0 : std::exp(v); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g_); }
  bool chance(double p) { return uniform(0, 1) < p; }
  std::mt19937_64& engine() { return g_; }

  // Small positive rational p/q with p in [1,pmax], q in [1,qmax].
  ExtRational rational(long pmax = 6, long qmax = 4) { return q(integer(1, pmax), integer(1, qmax)); }

 private:
  std::mt19937_64 g_;
};

inline Matrix<MT> random_mt(Rng& r, std::size_t n, std::size_t m, double zero_p = 0.0) {
  Matrix<MT> a(n, m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j) a(i, j) = r.chance(zero_p) ? a.semiring().zero() : r.rational();
  return a;
}

inline Vector<MT> random_mt_vec(Rng& r, std::size_t n, double zero_p = 0.0) {
  Vector<MT> v(n);
  for (Index i = 0; i < n; ++i) v[i] = r.chance(zero_p) ? v.semiring().zero() : r.rational();
  return v;
}

inline Matrix<FL> random_fl(Rng& r, std::size_t n, std::size_t m, double zero_p = 0.0) {
  Matrix<FL> a(n, m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j) a(i, j) = r.chance(zero_p) ? a.semiring().zero() : r.uniform(-2, 2);
  return a;
}

inline Vector<FL> random_fl_vec(Rng& r, std::size_t n) {
  Vector<FL> v(n);
  for (Index i = 0; i < n; ++i) v[i] = r.uniform(-2, 2);
  return v;
}

inline Matrix<MP> random_mp_int(Rng& r, std::size_t n, std::size_t m, long lo, long hi) {
  Matrix<MP> a(n, m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j) a(i, j) = q(r.integer(lo, hi));
  return a;
}

// ---- oracles -------------------------------------------------------------

// Maximum cycle geometric mean by enumerating simple cycles (smallest node first).
template <Semiring S>
CycleMean<S> brute_lambda(const Matrix<S>& a) {
  const S& s = a.semiring();
  const std::size_t n = a.rows();
  CycleMean<S> best{s.zero(), 0};
  std::vector<bool> used(n, false);
  std::function<void(Index, Index, typename S::value_type, unsigned)> dfs =
      [&](Index start, Index v, typename S::value_type w, unsigned len) {
        for (Index u = start; u < n; ++u) {
          if (s.is_zero(a(v, u))) continue;
          auto w2 = s.mul(w, a(v, u));
          if (u == start) {
            CycleMean<S> m{w2, len + 1};
            if (compare_means(s, m, best) > 0) best = m;
          } else if (!used[u]) {
            used[u] = true;
            dfs(start, u, w2, len + 1);
            used[u] = false;
          }
        }
      };
  for (Index st = 0; st < n; ++st) {
    used[st] = true;
    dfs(st, st, s.one(), 0);
    used[st] = false;
  }
  return best;
}

// I + A + ... + A^{n-1} by naive powering.
template <Semiring S>
Matrix<S> series_star(const Matrix<S>& a) {
  const std::size_t n = a.rows();
  Matrix<S> sum = identity<S>(n, a.semiring());
  Matrix<S> p = identity<S>(n, a.semiring());
  for (std::size_t k = 1; k < n; ++k) {
    p = mat_mul(p, a);
    sum = mat_add(sum, p);
  }
  return sum;
}

// Least fixpoint of X = I + A X by iteration from I.
template <Semiring S>
Matrix<S> fixpoint_star(const Matrix<S>& a) {
  const std::size_t n = a.rows();
  Matrix<S> x = identity<S>(n, a.semiring());
  for (std::size_t it = 0; it < 4 * n + 4; ++it) {
    Matrix<S> nx = mat_add(identity<S>(n, a.semiring()), mat_mul(a, x));
    if (mat_eq(nx, x)) return x;
    x = nx;
  }
  return x;
}

template <Semiring S>
typename S::value_type brute_permanent(const Matrix<S>& a, std::vector<std::vector<Index>>* maximal = nullptr) {
  const S& s = a.semiring();
  std::vector<Index> p(a.rows());
  std::iota(p.begin(), p.end(), 0);
  auto best = s.zero();
  std::vector<std::vector<Index>> all;
  do {
    auto w = s.one();
    for (Index i = 0; i < p.size(); ++i) w = s.mul(w, a(i, p[i]));
    int c = s.compare(w, best);
    if (c > 0) {
      best = w;
      all.clear();
    }
    if (c >= 0 && !s.is_zero(w)) all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  if (maximal) *maximal = all;
  return best;
}

// Random definite matrix: random entries, then divided by lambda; the exact
// backend needs a rational lambda, so retry until one shows up.
inline Matrix<MT> random_definite_mt(Rng& r, std::size_t n, double zero_p = 0.2) {
  for (;;) {
    Matrix<MT> a = random_mt(r, n, n, zero_p);
    auto m = lambda(a);
    if (m.is_zero()) continue;
    auto v = mean_value(a.semiring(), m);
    if (!v) continue;
    return scale(a, a.semiring().inv(*v));
  }
}

// Random Kleene star whose span contains the positive vector y: b_ij <= y_i / y_j.
inline Matrix<MT> random_star_containing(Rng& r, const Vector<MT>& y, double zero_p = 0.3) {
  const MT& s = y.semiring();
  const std::size_t n = y.size();
  Matrix<MT> b(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (i != j && r.chance(zero_p)) continue;
      auto f = r.chance(0.4) ? s.one() : q(r.integer(1, 4), 4);
      b(i, j) = s.mul(s.div(y[i], y[j]), f);
    }
  return kleene_star(b);
}

inline Matrix<MT> random_star(Rng& r, std::size_t n) {
  return random_star_containing(r, random_mt_vec(r, n), 0.3);
}

}  // namespace tsupport
