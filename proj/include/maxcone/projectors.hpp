#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "maxcone/cones.hpp"
#include "maxcone/matrix.hpp"
#include "maxcone/spectral.hpp"

namespace maxcone {

template <Semiring S>
struct Projection {
  Vector<S> point;
  IndexSet sleepers;
};

template <Semiring S>
Projection<S> project(const Matrix<S>& a, const Vector<S>& y) {
  Projection<S> p{apply(a, principal_solution(a, y)), {}};
  for (Index i = 0; i < y.size(); ++i)
    if (y.semiring().compare(p.point[i], y[i]) == 0) p.sleepers.push_back(i);
  return p;
}

template <Semiring S>
struct MinSets {
  std::vector<std::vector<Vector<S>>> sets;  // E_i, scaled by max-norm
  bool min_linear = false;
  std::optional<Matrix<S>> kleene_form;      // column i = E_i element with coordinate i equal to one
};

template <Semiring S>
MinSets<S> min_sets(const Matrix<S>& a) {
  const S& s = a.semiring();
  ConeBasis<S> basis = extremals_and_basis(a.columns());
  if (basis.generators.empty()) throw Error(ErrorCode::Precondition, "min_sets: matrix is zero");
  MinSets<S> r;
  r.sets.resize(a.rows());
  r.min_linear = true;
  for (Index i = 0; i < a.rows(); ++i) {
    for (const auto& v : basis.generators)
      if (is_minimal_at(v, basis.generators, i)) r.sets[i].push_back(v);
    if (r.sets[i].size() != 1) r.min_linear = false;
  }
  if (r.min_linear) {
    Matrix<S> k(a.rows(), a.rows(), s);
    for (Index i = 0; i < a.rows(); ++i) {
      const auto& v = r.sets[i].front();
      auto c = s.inv(v[i]);
      for (Index t = 0; t < a.rows(); ++t) k(t, i) = s.mul(v[t], c);
    }
    r.kleene_form = k;
  }
  return r;
}

// Projection through the minimal-set formula: P(y)_i = max_{v in E_i} (y/v) v_i.
template <Semiring S>
Vector<S> project_by_min_sets(const MinSets<S>& ms, const Vector<S>& y) {
  const S& s = y.semiring();
  Vector<S> p(y.size(), s);
  for (Index i = 0; i < y.size(); ++i)
    for (const auto& v : ms.sets[i]) p[i] = s.add(p[i], s.mul(residual(y, v), v[i]));
  return p;
}

template <Semiring S>
struct Halfspace {
  Vector<S> u1;
  Vector<S> u2;
  IndexSet sleeper_sectors;
};

// {v : max u1_i v_i >= max u2_i v_i}
template <Semiring S>
bool halfspace_contains(const Halfspace<S>& h, const Vector<S>& v) {
  const S& s = v.semiring();
  auto l = s.zero();
  auto r = s.zero();
  for (Index i = 0; i < v.size(); ++i) {
    l = s.add(l, s.mul(h.u1[i], v[i]));
    r = s.add(r, s.mul(h.u2[i], v[i]));
  }
  return s.compare(l, r) >= 0;
}

// Union of the sectors Delta_i(apex), i in sleeper_sectors, apex = u2^{-1}; zero counts as inside.
template <Semiring S>
bool sectors_contain(const Halfspace<S>& h, const Vector<S>& v) {
  const S& s = v.semiring();
  if (v.is_zero()) return true;
  auto best = s.zero();
  for (Index i = 0; i < v.size(); ++i) best = s.add(best, s.mul(h.u2[i], v[i]));
  for (Index i : h.sleeper_sectors)
    if (s.compare(s.mul(h.u2[i], v[i]), best) == 0) return true;
  return false;
}

template <Semiring S>
Halfspace<S> halfspace_from_chain(const Vector<S>& y, const Vector<S>& p) {
  const S& s = y.semiring();
  Halfspace<S> h{Vector<S>(y.size(), s), Vector<S>(y.size(), s), {}};
  for (Index i = 0; i < y.size(); ++i) {
    h.u1[i] = s.inv(y[i]);
    h.u2[i] = s.inv(p[i]);
    if (s.compare(p[i], y[i]) == 0) h.sleeper_sectors.push_back(i);
  }
  return h;
}

template <Semiring S>
Halfspace<S> separating_halfspace(const Matrix<S>& a, const Vector<S>& y) {
  if (!y.is_positive())
    throw Error(ErrorCode::Unsupported, "separating_halfspace: y must be positive");
  if (a.has_zero_row())
    throw Error(ErrorCode::Precondition, "separating_halfspace: span(A) has no positive vector");
  Projection<S> p = project(a, y);
  if (vec_eq(p.point, y)) throw Error(ErrorCode::Precondition, "separating_halfspace: y lies in span(A)");
  return halfspace_from_chain(y, p.point);
}

template <Semiring S>
Vector<S> cyclic_project(const std::vector<Matrix<S>>& as, const Vector<S>& y) {
  Vector<S> z = y;
  for (const auto& a : as) z = project(a, z).point;
  return z;
}

enum class RadiusStatus { Certified, Indeterminate };

template <Semiring S>
struct RadiusReport {
  RadiusStatus status = RadiusStatus::Indeterminate;
  CycleMean<S> radius;          // r = weight^(1/length) when certified
  double log_radius = 0;        // log r (estimate when indeterminate)
  double lower_log = 0;         // Collatz-Wielandt bracket on log r
  double upper_log = 0;
  std::size_t sweeps = 0;
  std::optional<Vector<S>> fixed_point;   // r = 1: common vector of all cones
  std::optional<Vector<S>> certificate;   // r < 1: F(w) <= lambda w
  std::optional<typename S::value_type> certificate_lambda;

  double rho_h() const { return -log_radius; }
};

template <Semiring S>
RadiusReport<S> cyclic_spectral_radius(const std::vector<Matrix<S>>& as, std::size_t budget = 0) {
  if (as.empty()) throw Error(ErrorCode::Precondition, "cyclic_spectral_radius: no cones");
  const std::size_t n = as.front().rows();
  for (const auto& a : as) {
    if (a.rows() != n) throw Error(ErrorCode::DimensionMismatch, "cones must share the row count");
    if (a.has_zero_row())
      throw Error(ErrorCode::Precondition, "cyclic_spectral_radius: a span has no positive vector");
  }
  const S& s = as.front().semiring();
  if (budget == 0) budget = std::max<std::size_t>(100 * n, 100);

  RadiusReport<S> rep;
  rep.lower_log = -std::numeric_limits<double>::infinity();
  rep.upper_log = std::numeric_limits<double>::infinity();
  std::vector<Vector<S>> hist{ones<S>(n, s)};
  std::vector<typename S::value_type> growth;

  for (std::size_t t = 0; t < budget; ++t) {
    const Vector<S>& z = hist.back();
    Vector<S> fz = cyclic_project(as, z);
    auto hi = s.zero();
    auto lo = s.top();
    for (Index i = 0; i < n; ++i) {
      auto ratio = s.div(fz[i], z[i]);
      hi = s.add(hi, ratio);
      lo = s.min(lo, ratio);
    }
    rep.upper_log = std::min(rep.upper_log, s.to_log(hi));
    rep.lower_log = std::max(rep.lower_log, s.to_log(lo));
    auto c = max_entry(fz);
    growth.push_back(c);
    Vector<S> next = scale(fz, s.inv(c));
    rep.sweeps = t + 1;

    for (std::size_t u = hist.size(); u-- > 0;) {
      if (!vec_eq(hist[u], next)) continue;
      const unsigned p = static_cast<unsigned>(hist.size() - u);
      auto prod = s.one();
      for (std::size_t v = u; v < growth.size(); ++v) prod = s.mul(prod, growth[v]);
      rep.status = RadiusStatus::Certified;
      rep.radius = CycleMean<S>{prod, p};
      rep.log_radius = mean_log(s, rep.radius);
      rep.lower_log = std::max(rep.lower_log, rep.log_radius);
      rep.upper_log = std::min(rep.upper_log, rep.log_radius);
      if (s.compare(prod, s.one()) >= 0) {
        rep.fixed_point = hist[u];
      } else {
        auto lam = s.upper_root(prod, p);
        Vector<S> w = hist[u];
        Vector<S> f = hist[u];
        auto lam_inv_pow = s.one();
        for (unsigned j = 1; j < p; ++j) {
          f = cyclic_project(as, f);
          lam_inv_pow = s.mul(lam_inv_pow, s.inv(lam));
          w = vec_min(w, scale(f, lam_inv_pow));
        }
        if (!vec_le(cyclic_project(as, w), scale(w, lam)))
          throw Error(ErrorCode::Internal, "cyclic_spectral_radius: certificate check failed");
        rep.certificate = w;
        rep.certificate_lambda = lam;
      }
      return rep;
    }
    hist.push_back(std::move(next));
  }
  rep.log_radius = rep.upper_log;
  return rep;
}

enum class DistanceKind { Cyclic, Total };

template <Semiring S>
struct DistanceReport {
  double value = 0;
  bool exact = true;                 // false when an uncertified power-iteration estimate was used
  std::vector<Vector<S>> witnesses;
};

namespace detail {

// log max_i a_i / b_i over a common support.
template <Semiring S>
double log_max_ratio(const Vector<S>& a, const Vector<S>& b) {
  const S& s = a.semiring();
  auto best = s.zero();
  for (Index i = 0; i < a.size(); ++i)
    if (!s.is_zero(a[i])) best = s.add(best, s.div(a[i], b[i]));
  return s.to_log(best);
}

template <Semiring S>
bool same_support(const std::vector<Vector<S>>& ys) {
  auto sup = ys.front().support();
  for (const auto& y : ys)
    if (y.support() != sup) return false;
  return true;
}

}  // namespace detail

template <Semiring S>
double hilbert_cyclic(const std::vector<Vector<S>>& ys) {
  const std::size_t k = ys.size();
  double sum = 0;
  for (std::size_t t = 0; t < k; ++t) sum += detail::log_max_ratio(ys[t], ys[(t + 1) % k]);
  return sum;
}

template <Semiring S>
DistanceReport<S> distance_points(const std::vector<Vector<S>>& ys, DistanceKind kind) {
  if (ys.size() < 2) throw Error(ErrorCode::Precondition, "distance_points: need at least two vectors");
  for (const auto& y : ys)
    if (y.size() != ys.front().size())
      throw Error(ErrorCode::DimensionMismatch, "distance_points: length mismatch");
  DistanceReport<S> r;
  r.witnesses = ys;
  if (!detail::same_support(ys) || ys.front().is_zero()) {
    r.value = std::numeric_limits<double>::infinity();
    return r;
  }
  r.value = hilbert_cyclic(ys);
  if (kind == DistanceKind::Total) {
    std::vector<Vector<S>> rev(ys.rbegin(), ys.rend());
    r.value += hilbert_cyclic(rev);
  }
  if (r.value < 0) r.value = 0;
  return r;
}

template <Semiring S>
DistanceReport<S> distance_cones(const std::vector<Matrix<S>>& as, DistanceKind kind,
                                 std::size_t budget = 0) {
  if (as.size() < 2) throw Error(ErrorCode::Precondition, "distance_cones: need at least two cones");
  DistanceReport<S> r;
  auto run = [&](const std::vector<Matrix<S>>& cones) {
    RadiusReport<S> rep = cyclic_spectral_radius(cones, budget);
    if (rep.status != RadiusStatus::Certified) r.exact = false;
    double v = -rep.log_radius;
    return std::max(v, 0.0);
  };
  r.value = run(as);
  {
    RadiusReport<S> rep = cyclic_spectral_radius(as, budget);
    Vector<S> y0 = rep.fixed_point ? *rep.fixed_point
                                   : (rep.certificate ? *rep.certificate : ones<S>(as.front().rows(), as.front().semiring()));
    for (const auto& a : as) {
      y0 = project(a, y0).point;
      r.witnesses.push_back(y0);
    }
  }
  if (kind == DistanceKind::Total) {
    std::vector<Matrix<S>> rev(as.rbegin(), as.rend());
    r.value += run(rev);
  }
  return r;
}

template <Semiring S>
struct Separation {
  bool separated = false;
  std::vector<Halfspace<S>> halfspaces;
  std::optional<Vector<S>> witness;
  RadiusReport<S> radius;
};

template <Semiring S>
Separation<S> separate_cones(const std::vector<Matrix<S>>& as, std::size_t budget = 0) {
  if (as.empty()) throw Error(ErrorCode::Precondition, "separate_cones: no cones");
  Separation<S> out;
  if (as.size() == 1) {
    if (as.front().has_zero_row())
      throw Error(ErrorCode::Precondition, "separate_cones: a span has no positive vector");
    out.witness = project(as.front(), ones<S>(as.front().rows(), as.front().semiring())).point;
    return out;
  }
  out.radius = cyclic_spectral_radius(as, budget);
  if (out.radius.status != RadiusStatus::Certified)
    throw Error(ErrorCode::Indeterminate,
                "separate_cones: no certificate within budget, log r in [" +
                    std::to_string(out.radius.lower_log) + ", " + std::to_string(out.radius.upper_log) + "]");
  if (out.radius.fixed_point) {
    out.witness = out.radius.fixed_point;
    return out;
  }
  out.separated = true;
  Vector<S> prev = *out.radius.certificate;
  for (const auto& a : as) {
    Vector<S> next = project(a, prev).point;
    out.halfspaces.push_back(halfspace_from_chain(prev, next));
    prev = next;
  }
  return out;
}

}  // namespace maxcone
