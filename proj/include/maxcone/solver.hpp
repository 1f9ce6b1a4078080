#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "maxcone/matrix.hpp"
#include "maxcone/projectors.hpp"

namespace maxcone {

enum class StopReason { Solved, NoSolution, BudgetExceeded };

inline const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::Solved: return "solved";
    case StopReason::NoSolution: return "no_solution";
    case StopReason::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

template <Semiring S>
struct SweepRecord {
  std::size_t l = 0;
  std::vector<Vector<S>> x;  // x^{(l)s}
  std::vector<Vector<S>> y;  // y^{(l)s}
};

template <Semiring S>
struct SolverTrace {
  Vector<S> y0;
  std::vector<SweepRecord<S>> iterations;
  StopReason stop = StopReason::BudgetExceeded;
  // per side s: coordinates of the y- and x-sequences that never moved
  std::vector<IndexSet> temporary_y, temporary_x;
  std::vector<IndexSet> eternal_y, eternal_x;

  std::size_t sweeps() const { return iterations.size(); }
  const std::vector<Vector<S>>& solution() const { return iterations.back().x; }
  const Vector<S>& common() const { return iterations.back().y.back(); }
};

template <Semiring S>
void validate_system(const std::vector<Matrix<S>>& as) {
  if (as.size() < 2) throw Error(ErrorCode::Precondition, "solve: need at least two matrices");
  for (std::size_t s = 0; s < as.size(); ++s) {
    if (as[s].rows() != as.front().rows())
      throw Error(ErrorCode::DimensionMismatch, "solve: matrices must share the row count");
    if (as[s].has_zero_row())
      throw Error(ErrorCode::Precondition, "solve: matrix " + std::to_string(s + 1) + " has a zero row");
  }
}

inline std::size_t default_max_iter(std::size_t n, std::size_t k) {
  double v = 10.0 * std::pow(static_cast<double>(n), static_cast<double>(k));
  return static_cast<std::size_t>(std::min(v, 1e6));
}

namespace detail {

template <Semiring S>
IndexSet constant_coords(const std::vector<const Vector<S>*>& seq) {
  IndexSet out;
  if (seq.empty()) return out;
  for (Index i = 0; i < seq.front()->size(); ++i) {
    bool same = true;
    for (const auto* v : seq) same = same && seq.front()->semiring().compare((*v)[i], (*seq.front())[i]) == 0;
    if (same) out.push_back(i);
  }
  return out;
}

}  // namespace detail

template <Semiring S>
SolverTrace<S> solve(const std::vector<Matrix<S>>& as, std::optional<Vector<S>> y0 = std::nullopt,
                     std::size_t max_iter = 0) {
  validate_system(as);
  const std::size_t n = as.front().rows();
  const std::size_t k = as.size();
  const S& s = as.front().semiring();
  SolverTrace<S> tr;
  tr.y0 = y0 ? *y0 : ones<S>(n, s);
  if (tr.y0.size() != n) throw Error(ErrorCode::DimensionMismatch, "solve: y0 has the wrong length");
  if (!tr.y0.is_positive()) throw Error(ErrorCode::Precondition, "solve: y0 must be positive");
  if (max_iter == 0) max_iter = default_max_iter(n, k);

  Vector<S> prev = tr.y0;
  for (std::size_t l = 1; l <= max_iter; ++l) {
    SweepRecord<S> rec;
    rec.l = l;
    Vector<S> cur = prev;
    for (const auto& a : as) {
      Vector<S> x = principal_solution(a, cur);
      cur = apply(a, x);
      rec.x.push_back(std::move(x));
      rec.y.push_back(cur);
    }
    tr.iterations.push_back(std::move(rec));
    if (vec_eq(cur, prev)) {
      tr.stop = StopReason::Solved;
      break;
    }
    bool all_down = true;
    for (Index i = 0; i < n && all_down; ++i) all_down = s.compare(cur[i], tr.y0[i]) < 0;
    if (all_down) {
      tr.stop = StopReason::NoSolution;
      break;
    }
    prev = std::move(cur);
  }

  const std::size_t last = tr.iterations.size();
  const std::size_t upto = last > 1 ? last - 1 : last;
  for (std::size_t side = 0; side < k; ++side) {
    std::vector<const Vector<S>*> ys, xs;
    for (std::size_t l = 0; l < upto; ++l) {
      ys.push_back(&tr.iterations[l].y[side]);
      xs.push_back(&tr.iterations[l].x[side]);
    }
    tr.temporary_y.push_back(detail::constant_coords(ys));
    tr.temporary_x.push_back(detail::constant_coords(xs));
    if (tr.stop == StopReason::Solved) {
      ys.clear();
      xs.clear();
      for (std::size_t l = 0; l < last; ++l) {
        ys.push_back(&tr.iterations[l].y[side]);
        xs.push_back(&tr.iterations[l].x[side]);
      }
      tr.eternal_y.push_back(detail::constant_coords(ys));
      tr.eternal_x.push_back(detail::constant_coords(xs));
    }
  }
  return tr;
}

template <Semiring S>
SolverTrace<S> solve(const std::vector<Matrix<S>>& as, const Vector<S>& y0, std::size_t max_iter = 0) {
  return solve(as, std::optional<Vector<S>>(y0), max_iter);
}

enum class BoundKind { Estimate1, Estimate2, Integer };

struct BoundReport {
  double value = 0;
  bool estimate_based = false;  // rho_sigma came from an uncertified power iteration
  double rho_sigma = 0;
};

template <Semiring S>
double transpose_norm(const Matrix<S>& a) {
  return proj_norm(transpose(a));
}

template <Semiring S>
BoundReport iteration_bound(const std::vector<Matrix<S>>& as, BoundKind which,
                            std::optional<double> rho_sigma = std::nullopt,
                            std::vector<Index> positive_subset = {}) {
  validate_system(as);
  const double n = static_cast<double>(as.front().rows());
  const double k = static_cast<double>(as.size());
  BoundReport r;

  if (which == BoundKind::Integer) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : as) {
      for (const auto& v : a.values())
        if (!a.semiring().is_integral(v))
          throw Error(ErrorCode::Precondition, "iteration_bound: integer bound needs finite integer entries");
      double m = static_cast<double>(a.cols());
      best = std::min(best, std::min((n - 1) * (k - 1) / k * proj_norm(a), (m - 1) * transpose_norm(a)));
    }
    r.value = 2 * best;
    return r;
  }

  if (which == BoundKind::Estimate1) {
    if (!as.back().is_positive())
      throw Error(ErrorCode::Precondition, "iteration_bound: estimate1 needs the last matrix positive");
    positive_subset = {as.size() - 1};
  } else {
    if (positive_subset.empty())
      for (Index t = 0; t < as.size(); ++t)
        if (as[t].is_positive()) positive_subset.push_back(t);
    if (positive_subset.empty())
      throw Error(ErrorCode::Precondition, "iteration_bound: estimate2 needs a positive matrix");
    for (Index t : positive_subset)
      if (t >= as.size() || !as[t].is_positive())
        throw Error(ErrorCode::Precondition, "iteration_bound: declared matrix is not positive");
  }

  if (rho_sigma) {
    r.rho_sigma = *rho_sigma;
  } else {
    DistanceReport<S> d = distance_cones(as, DistanceKind::Total);
    r.rho_sigma = d.value;
    r.estimate_based = !d.exact;
  }
  if (!(r.rho_sigma > 0))
    throw Error(ErrorCode::Precondition, "iteration_bound: rho_sigma is zero, the cones intersect");

  double best = std::numeric_limits<double>::infinity();
  for (Index t : positive_subset) {
    double m = static_cast<double>(as[t].cols());
    best = std::min(best, std::min(proj_norm(as[t]), (m - 1) * transpose_norm(as[t])));
  }
  r.value = 2 * (n - 1) * best / r.rho_sigma;
  return r;
}

}  // namespace maxcone
