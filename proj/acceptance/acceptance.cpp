// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace tsupport;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// counts failed checks and keeps the first message
struct Tally {
  long checks = 0, failed = 0;
  std::string first;
  void check(bool c, const std::string& what) {
    ++checks;
    if (!c && failed++ == 0) first = what;
  }
  Outcome done(const std::string& extra) const {
    std::ostringstream o;
    o << checks << " checks, " << failed << " failed";
    if (!extra.empty()) o << "; " << extra;
    if (failed) o << "; first: " << first;
    return {failed == 0, o.str()};
  }
};

bool spans_equal(const Matrix<MT>& a, const Matrix<MT>& b) {
  for (const auto& c : a.columns())
    if (!is_member(c, b).member) return false;
  for (const auto& c : b.columns())
    if (!is_member(c, a).member) return false;
  return true;
}

// rank over the rationals, plain Gaussian elimination
std::size_t linear_rank(const std::vector<Vector<MT>>& vs) {
  if (vs.empty()) return 0;
  const std::size_t n = vs.front().size();
  std::vector<std::vector<mpq_class>> m;
  for (const auto& v : vs) {
    std::vector<mpq_class> row(n);
    for (Index i = 0; i < n; ++i) row[i] = v[i].q;
    m.push_back(row);
  }
  std::size_t rank = 0;
  for (Index c = 0; c < n && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (Index k = c; k < n; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// the columns plus random max combinations of them; most combinations fall in
// low-dimensional cells, so the columns are kept
std::vector<Vector<MT>> sample_span(Rng& r, const Matrix<MT>& a, std::size_t count) {
  std::vector<Vector<MT>> out = a.columns();
  for (std::size_t t = 0; t < count; ++t) {
    Vector<MT> x(a.cols());
    for (Index j = 0; j < a.cols(); ++j) x[j] = r.rational(97, 89);
    out.push_back(apply(a, x));
  }
  return out;
}

// no generator lies in the span of the generators not proportional to it
bool non_redundant(const std::vector<Vector<MT>>& gens) {
  for (Index i = 0; i < gens.size(); ++i) {
    std::vector<Vector<MT>> rest;
    for (Index j = 0; j < gens.size(); ++j)
      if (!proportional(gens[i], gens[j])) rest.push_back(gens[j]);
    if (rest.empty()) continue;
    if (is_member(gens[i], Matrix<MT>::from_columns(rest, MT())).member) return false;
  }
  return true;
}

double bisect_factor(const Vector<FL>& y, const Vector<FL>& z) {
  double lo = -50, hi = 50;
  for (int it = 0; it < 200; ++it) {
    double mid = (lo + hi) / 2;
    bool le = true;
    for (Index i = 0; i < y.size(); ++i) le = le && y[i] <= z[i] + mid;
    (le ? hi : lo) = mid;
  }
  return hi;
}

Matrix<FL> to_float(const Matrix<MP>& a) {
  Matrix<FL> f(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) f(i, j) = a.semiring().to_log(a(i, j));
  return f;
}

// a common positive vector exists iff one maximal cell per cone gives stars
// whose sum has lambda = 1
template <Semiring S>
bool cells_oracle(const std::vector<Matrix<S>>& as) {
  std::vector<std::vector<Matrix<S>>> stars;
  for (const auto& a : as) {
    std::vector<Matrix<S>> st;
    for (const auto& c : enumerate_cells(a)) st.push_back(*c.star);
    if (st.empty()) return false;
    stars.push_back(st);
  }
  std::vector<std::size_t> pick(as.size(), 0);
  for (;;) {
    Matrix<S> sum = stars[0][pick[0]];
    for (std::size_t t = 1; t < as.size(); ++t) sum = mat_add(sum, stars[t][pick[t]]);
    if (compare_to_one(sum.semiring(), lambda(sum)) == 0) return true;
    std::size_t p = 0;
    while (p < as.size() && ++pick[p] == stars[p].size()) pick[p++] = 0;
    if (p == as.size()) return false;
  }
}

std::string str(std::size_t v) { return std::to_string(v); }

// ---------------------------------------------------------------------------

Outcome kleene_star_correctness() {
  Rng r(101);
  Tally t;
  for (int it = 0; it < 500; ++it) {
    auto a = random_definite_mt(r, r.integer(1, 6), r.uniform(0, 0.5));
    auto st = kleene_star(a);
    t.check(mat_eq(st, series_star(a)), "star != series");
    t.check(mat_eq(mat_mul(st, st), st), "star^2 != star");
    t.check(mat_eq(kleene_star(st), st), "star(star) != star");
  }
  return t.done("500 definite matrices");
}

Outcome lambda_oracle() {
  Rng r(102);
  MT s;
  Tally t;
  std::size_t reducible = 0, acyclic = 0;
  for (int it = 0; it < 200; ++it) {
    std::size_t n = r.integer(1, 6);
    Matrix<MT> a;
    if (it % 10 == 0) {
      // strictly upper triangular: no cycles at all
      a = random_mt(r, n, n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j <= i; ++j) a(i, j) = s.zero();
    } else {
      a = random_mt(r, n, n, r.uniform(0, 0.8));
    }
    reducible += !is_irreducible(a);
    auto want = brute_lambda(a);
    acyclic += want.is_zero();
    t.check(compare_means(s, lambda(a), want) == 0, "Karp differs from cycle enumeration");
  }
  return t.done("200 matrices, " + str(reducible) + " reducible, " + str(acyclic) + " without cycles");
}

Outcome spectral_structure() {
  Rng r(103);
  Tally t;
  for (int it = 0; it < 100; ++it) {
    std::size_t n = r.integer(1, 6);
    auto a = random_definite_mt(r, n, r.uniform(0, 0.5));
    auto g = critical_graph(a);
    auto st = kleene_star(a);
    auto tr = transpose(st);
    std::vector<long> comp(n, -1);
    for (Index c = 0; c < g.sccs.size(); ++c)
      for (Index i : g.sccs[c]) comp[i] = static_cast<long>(c);
    for (Index i : g.nodes)
      for (Index j : g.nodes) {
        bool same = comp[i] == comp[j];
        t.check(proportional(st.column(i), st.column(j)) == same, "column proportionality");
        t.check(proportional(tr.column(i), tr.column(j)) == same, "row proportionality");
      }
    t.check(non_redundant(st.columns()), "a column of A* is not extremal");

    auto eb = eigencone_bases(a);
    const auto& sub = eb.subeigencone.generators;
    const auto& eig = eb.eigencone.generators;
    t.check(eig.size() == g.n_c(), "eigencone generator count");
    t.check(sub.size() == g.n_c() + g.non_critical.size(), "subeigencone generator count");
    t.check(eb.eigencone.max_dimension == g.n_c(), "eigencone dimension");
    t.check(eb.subeigencone.max_dimension == g.n_c() + g.non_critical.size(), "subeigencone dimension");
    t.check(non_redundant(sub) && non_redundant(eig), "redundant generator");
    for (const auto& v : eig) t.check(vec_eq(apply(a, v), v), "eigen generator not fixed");
    for (const auto& v : sub) t.check(vec_le(apply(a, v), v), "subeigen generator not sub");
    auto subm = Matrix<MT>::from_columns(sub, MT());
    t.check(spans_equal(subm, st), "subeigencone span differs from span(A*)");
    if (!eig.empty()) {
      auto eigm = Matrix<MT>::from_columns(eig, MT());
      for (Index i : g.nodes) t.check(is_member(st.column(i), eigm).member, "critical column outside eigencone");
    }
    auto samples = sample_span(r, st, 3 * n);
    std::size_t lin = linear_rank(samples);
    t.check(lin == sub.size(), "linear dimension of V*(A) differs from its max dimension");
    t.check(eb.subeigencone.linear_dimension && *eb.subeigencone.linear_dimension == lin, "reported linear dimension");
  }
  return t.done("100 definite matrices");
}

Outcome intersection_identity() {
  Rng r(104);
  MT s;
  Tally t;
  int done = 0, triples = 0;
  while (done < 100) {
    std::size_t n = r.integer(2, 5), k = r.integer(2, 3);
    auto y = random_mt_vec(r, n);
    std::vector<Matrix<MT>> as;
    for (std::size_t i = 0; i < k; ++i) as.push_back(random_star_containing(r, y));
    auto res = kleene_intersection(as);
    if (res.trivial) continue;
    ++done;
    triples += k == 3;
    auto sum = as[0];
    for (const auto& m : as) sum = mat_add(sum, m);
    t.check(compare_to_one(s, lambda(sum)) == 0, "lambda of the sum");
    t.check(mat_eq(*res.star, kleene_star(sum)), "reported star");
    std::vector<Index> order(k);
    std::iota(order.begin(), order.end(), 0);
    do {
      Matrix<MT> p = as[order[0]];
      for (std::size_t i = 1; i < k; ++i) p = mat_mul(p, as[order[i]]);
      t.check(mat_eq(kleene_star(p), *res.star), "permutation-product star differs");
    } while (std::next_permutation(order.begin(), order.end()));
    // points of span(star) are in every cone
    for (const auto& v : sample_span(r, *res.star, 5))
      for (const auto& a : as) t.check(is_member(v, a).member, "star point outside a cone");
    // points in every cone are in span(star)
    std::vector<Vector<MT>> probes{y};
    for (int p = 0; p < 5; ++p) probes.push_back(random_mt_vec(r, n));
    for (const auto& a : as)
      for (const auto& c : a.columns()) probes.push_back(c);
    for (const auto& v : probes) {
      bool all = true;
      for (const auto& a : as) all = all && is_member(v, a).member;
      t.check(all == is_member(v, *res.star).member, "intersection membership differs");
    }
  }
  return t.done("100 systems, " + std::to_string(triples) + " triples");
}

Outcome projector_laws() {
  Rng r(105);
  Tally t;
  int linear = 0;
  for (int it = 0; it < 500; ++it) {
    std::size_t n = r.integer(1, 5), m = r.integer(1, 5);
    Matrix<MT> a;
    if (it % 2 == 0 && n >= 2) {
      auto k = random_star(r, n);
      std::vector<Vector<MT>> cols = k.columns();
      cols.push_back(apply(k, random_mt_vec(r, n, 0.3)));
      std::shuffle(cols.begin(), cols.end(), r.engine());
      a = Matrix<MT>::from_columns(cols, MT());
    } else {
      a = random_mt(r, n, m, 0.2);
    }
    bool nonzero = false;
    for (const auto& v : a.values()) nonzero = nonzero || !a.semiring().is_zero(v);
    if (!nonzero) a(0, 0) = q(1);
    auto y = random_mt_vec(r, n, 0.2);
    auto p = project(a, y).point;
    t.check(is_member(p, a).member && vec_le(p, y), "P(y) not a member below y");
    t.check(vec_eq(project(a, p).point, p), "idempotency");
    auto c = r.rational();
    t.check(vec_eq(project(a, scale(y, c)).point, scale(p, c)), "homogeneity");
    auto z = vec_max(y, random_mt_vec(r, n, 0.5));
    t.check(vec_le(p, project(a, z).point), "isotonicity");
    auto w = apply(a, random_mt_vec(r, a.cols(), 0.3));
    if (!w.is_zero()) t.check(vec_le(scale(w, residual(y, w)), p), "maximality");

    auto ms = min_sets(a);
    for (int s = 0; s < 3; ++s) {
      auto v = random_mt_vec(r, n, 0.2);
      t.check(vec_eq(project_by_min_sets(ms, v), project(a, v).point), "minimal-set formula");
    }
    if (ms.min_linear) {
      ++linear;
      t.check(is_kleene_star(*ms.kleene_form) && spans_equal(*ms.kleene_form, a), "min_linear without Kleene form");
    } else {
      // no scaled extremal matrix is a Kleene star with the same span
      auto b = extremals_and_basis(a.columns());
      if (b.generators.size() == n) {
        std::vector<Index> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        bool found = false;
        do {
          Matrix<MT> k(n, n);
          bool ok = true;
          for (Index i = 0; i < n && ok; ++i) {
            const auto& v = b.generators[perm[i]];
            if (MT().is_zero(v[i])) ok = false;
            else
              for (Index j = 0; j < n; ++j) k(j, i) = MT().div(v[j], v[i]);
          }
          found = found || (ok && is_kleene_star(k) && spans_equal(k, a));
        } while (!found && std::next_permutation(perm.begin(), perm.end()));
        t.check(!found, "Kleene form exists but min_linear is false");
      }
    }
  }
  return t.done("500 instances, " + std::to_string(linear) + " min-linear");
}

Outcome separation() {
  Rng r(106);
  Tally t;
  int done = 0;
  while (done < 100) {
    std::size_t n = r.integer(2, 5), m = r.integer(1, 4);
    auto a = random_mt(r, n, m, 0.2);
    auto y = random_mt_vec(r, n);
    Vector<MT> all(n);
    for (const auto& c : a.columns()) all = vec_max(all, c);
    if (!all.is_positive() || is_member(y, a).member) continue;
    ++done;
    auto h = separating_halfspace(a, y);
    for (const auto& c : a.columns()) t.check(halfspace_contains(h, c), "column outside halfspace");
    t.check(!halfspace_contains(h, y), "y inside halfspace");
    for (int p = 0; p < 10; ++p) {
      auto v = p < 5 ? random_mt_vec(r, n, 0.2) : apply(a, random_mt_vec(r, m, 0.3));
      t.check(halfspace_contains(h, v) == sectors_contain(h, v), "sector form disagrees");
    }
  }
  return t.done("100 (A, y), 1000 sampled points");
}

Outcome cellular_decomposition() {
  Rng r(107);
  Tally t;
  std::size_t points = 0, cells_seen = 0;
  for (int it = 0; it < 40; ++it) {
    std::size_t n = r.integer(2, 3), m = r.integer(1, 4);
    auto a = random_mt(r, n, m);
    auto cells = enumerate_cells(a);
    for (int p = 0; p < 50; ++p, ++points) {
      Vector<MT> y(n);
      if (p < 20) {
        for (Index i = 0; i < n; ++i) y[i] = q(r.integer(1, 8), 4);
      } else if (p < 35) {
        y = apply(a, random_mt_vec(r, m, 0.3));
      } else {
        y = random_mt_vec(r, n);
      }
      t.check(is_member(y, a).member == in_cell_union(y, cells), "membership differs from cell union");
    }
    for (const auto& c : enumerate_cells(a, true)) {
      ++cells_seen;
      auto g = critical_graph(c.region);
      std::set<std::pair<Index, Index>> crit, gs(c.gs_edges.begin(), c.gs_edges.end());
      for (auto [i, j] : g.edges)
        if (i != j) crit.insert({std::min(i, j), std::max(i, j)});
      t.check(gs == crit, "G_S differs from critical support");
      std::size_t maxdim = extremals_and_basis(c.star->columns()).generators.size();
      std::size_t lin = linear_rank(sample_span(r, *c.star, 3 * n));
      t.check(c.dimension == maxdim, "max dimension differs from G_S components");
      t.check(c.dimension == lin, "linear dimension differs from G_S components");
    }
  }
  return t.done(str(points) + " points, " + str(cells_seen) + " cells");
}

Outcome permanent_pseudoinverse() {
  Tally t;
  MT s;
  {
    Rng r(108);
    for (int it = 0; it < 150; ++it) {
      std::size_t n = it < 30 ? 7 : r.integer(1, 6);
      auto a = random_mt(r, n, n, r.uniform(0, 0.6));
      t.check(s.compare(permanent(a).value, brute_permanent(a)) == 0, "permanent differs from brute force");
    }
  }
  {
    Rng r(109);
    int done = 0;
    while (done < 200) {
      std::size_t n = r.integer(1, 5);
      auto a = random_mt(r, n, n, 0.3);
      auto pi = pseudoinverse(a);
      if (!pi.nabla) continue;
      ++done;
      auto st = row_col_kleene_stars(a);
      t.check(mat_eq(mat_mul(a, *pi.nabla), st.col_star), "A A^nabla != column star");
      t.check(mat_eq(mat_mul(*pi.nabla, a), st.row_star), "A^nabla A != row star");
    }
  }
  {
    Rng r(110);
    for (int it = 0; it < 200; ++it) {
      std::size_t n = r.integer(2, 5);
      Matrix<MT> a(n, n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) a(i, j) = r.chance(0.2) ? s.zero() : q(r.integer(1, 2));
      std::vector<std::vector<Index>> maximal;
      if (s.is_zero(brute_permanent(a, &maximal))) continue;
      auto ref = row_col_kleene_stars(a, maximal.front());
      for (const auto& sg : maximal) {
        auto st = row_col_kleene_stars(a, sg);
        t.check(mat_eq(st.col_star, ref.col_star) && mat_eq(st.row_star, ref.row_star), "stars depend on sigma");
      }
    }
  }
  {
    Rng r(111);
    for (int it = 0; it < 100; ++it) {
      std::size_t n = r.integer(1, 5);
      auto a = random_definite_mt(r, n, 0.3);
      for (Index i = 0; i < n; ++i) a(i, i) = s.one();
      Matrix<MT> p = identity<MT>(n), prev = p;
      for (std::size_t k = 1; k <= n; ++k) {
        p = mat_mul(p, a);
        bool up = true;
        for (Index i = 0; i < n; ++i) up = up && vec_le(prev.column(i), p.column(i));
        t.check(up, "powers not increasing");
        prev = p;
      }
      auto pn1 = identity<MT>(n);
      for (std::size_t k = 1; k < n; ++k) pn1 = mat_mul(pn1, a);
      t.check(mat_eq(pn1, p), "A^(n-1) != A^n");
      auto pi = pseudoinverse(a);
      t.check(mat_eq(kleene_star(a), pn1), "A* != A^(n-1)");
      t.check(mat_eq(kleene_star(a), pi.adjugate) && mat_eq(*pi.nabla, pi.adjugate), "A* != adj != nabla");
    }
  }
  return t.done("brute force n<=7, 200 pseudoinverses, sigma invariance n<=5, 100 strongly definite");
}

Outcome kleene_solver() {
  Rng r(112);
  Tally t;
  std::size_t literal = 0;
  for (int it = 0; it < 100; ++it) {
    std::size_t n = r.integer(2, 5), k = r.integer(2, 3);
    auto y = random_mt_vec(r, n);
    std::vector<Matrix<MT>> as;
    for (std::size_t s = 0; s < k; ++s) as.push_back(random_star_containing(r, y));
    t.check(!kleene_intersection(as).trivial, "intersection not certified");
    auto tr = solve(as, random_mt_vec(r, n));
    t.check(tr.stop == StopReason::Solved, "not solved");
    if (tr.stop != StopReason::Solved) continue;
    t.check(tr.sweeps() - 1 <= n, "too many sweeps");
    literal += tr.sweeps() <= n;
    for (std::size_t s = 0; s < k; ++s) t.check(vec_eq(apply(as[s], tr.solution()[s]), tr.common()), "x does not solve");
  }
  return t.done("100 systems; " + str(literal) + "/100 also within n counting the stopping sweep");
}

Outcome integer_solver() {
  Rng r(113);
  Tally t;
  std::size_t literal_violations = 0, nosol = 0, confirmed = 0;
  for (int it = 0; it < 100; ++it) {
    std::size_t n = r.integer(1, 4), k = r.integer(2, 3);
    std::vector<Matrix<MP>> as;
    for (std::size_t s = 0; s < k; ++s) as.push_back(random_mp_int(r, n, r.integer(1, 4), -5, 5));
    auto tr = solve(as);
    double bound = iteration_bound(as, BoundKind::Integer).value;
    t.check(tr.stop != StopReason::BudgetExceeded, "did not terminate");
    t.check(static_cast<double>(tr.sweeps()) <= bound + 2, "bound exceeded");
    literal_violations += static_cast<double>(tr.sweeps()) > bound;
    if (tr.stop == StopReason::NoSolution) {
      ++nosol;
      std::vector<Matrix<FL>> fs;
      for (const auto& a : as) fs.push_back(to_float(a));
      bool exists = cells_oracle(fs);
      confirmed += !exists;
      t.check(!exists, "oracle finds a solution after NoSolution");
    }
  }
  std::size_t false_neg = 0;
  for (int it = 0; it < 100; ++it) {
    std::size_t n = r.integer(1, 4), k = r.integer(2, 3);
    Vector<MP> y(n);
    for (Index i = 0; i < n; ++i) y[i] = q(r.integer(-3, 3));
    std::vector<Matrix<MP>> as;
    for (std::size_t s = 0; s < k; ++s) {
      auto cols = random_mp_int(r, n, r.integer(1, 3), -5, 5).columns();
      cols.push_back(scale(y, q(r.integer(-2, 2))));
      std::shuffle(cols.begin(), cols.end(), r.engine());
      as.push_back(Matrix<MP>::from_columns(cols, MP()));
    }
    auto tr = solve(as);
    t.check(static_cast<double>(tr.sweeps()) <= iteration_bound(as, BoundKind::Integer).value + 2, "bound exceeded");
    false_neg += tr.stop != StopReason::Solved;
  }
  t.check(false_neg == 0, "false negative on a seeded system");
  std::ostringstream o;
  o << "100 random (" << nosol << " NoSolution, " << confirmed << " confirmed by cells), 100 seeded, " << false_neg
    << " false negatives; " << literal_violations << " random runs have sweeps > bound when every sweep is counted";
  return t.done(o.str());
}

Outcome distances() {
  Tally t;
  {
    Rng r(114);
    for (int it = 0; it < 200; ++it) {
      std::size_t n = r.integer(1, 5), k = r.integer(2, 4);
      std::vector<Vector<FL>> ys;
      for (std::size_t i = 0; i < k; ++i) ys.push_back(random_fl_vec(r, n));
      double cyc = 0, tot = 0;
      for (std::size_t i = 0; i < k; ++i) {
        double lam = bisect_factor(ys[i], ys[(i + 1) % k]);
        double mu = bisect_factor(ys[(i + 1) % k], ys[i]);
        cyc += lam;
        tot += lam + mu;
      }
      t.check(std::abs(distance_points(ys, DistanceKind::Cyclic).value - cyc) <= 1e-9 * std::max(1.0, cyc), "cyclic inf form");
      t.check(std::abs(distance_points(ys, DistanceKind::Total).value - tot) <= 1e-9 * std::max(1.0, tot), "total inf form");
    }
  }
  {
    Rng r(115);
    for (int it = 0; it < 100; ++it) {
      std::size_t n = r.integer(2, 5);
      auto u = random_mt_vec(r, n), v = random_mt_vec(r, n);
      std::vector<Matrix<MT>> as{Matrix<MT>::from_columns({u}, MT()), Matrix<MT>::from_columns({v}, MT())};
      auto rep = cyclic_spectral_radius(as);
      // Hilbert distance in closed form: log max(u/v) + log max(v/u)
      double up = -1e300, dn = -1e300;
      for (Index i = 0; i < n; ++i) {
        double lu = std::log(u[i].q.get_d()), lv = std::log(v[i].q.get_d());
        up = std::max(up, lu - lv);
        dn = std::max(dn, lv - lu);
      }
      t.check(rep.status == RadiusStatus::Certified, "radius not certified");
      t.check(std::abs(-rep.log_radius - (up + dn)) <= 1e-6, "radius differs from Hilbert distance");
    }
  }
  int sep = 0;
  {
    Rng r(116);
    MT s;
    for (int it = 0; it < 100; ++it) {
      std::size_t n = r.integer(2, 4), k = r.integer(2, 3);
      auto y = random_mt_vec(r, n);
      std::vector<Matrix<MT>> as;
      for (std::size_t i = 0; i < k; ++i) as.push_back(r.chance(0.6) ? random_star_containing(r, y) : random_star(r, n));
      auto rep = cyclic_spectral_radius(as);
      t.check(rep.status == RadiusStatus::Certified, "radius not certified");
      bool trivial = kleene_intersection(as).trivial;
      sep += trivial;
      t.check((compare_to_one(s, rep.radius) < 0) == trivial, "r < 1 disagrees with trivial intersection");
    }
  }
  return t.done("200 tuples, 100 ray pairs, 100 Kleene systems (" + std::to_string(sep) + " trivial)");
}

Outcome sleepers() {
  Rng r(117);
  Tally t;
  std::size_t traces = 0;
  auto temporary = [&](const auto& tr, std::size_t k) {
    ++traces;
    for (std::size_t s = 0; s < k; ++s)
      t.check(!tr.temporary_y[s].empty() && !tr.temporary_x[s].empty(), "side without temporary sleepers");
  };
  for (int it = 0; it < 100; ++it) {
    std::size_t n = r.integer(1, 4), k = r.integer(2, 3);
    std::vector<Matrix<MP>> as;
    for (std::size_t s = 0; s < k; ++s) as.push_back(random_mp_int(r, n, r.integer(1, 4), -5, 5));
    temporary(solve(as), k);
    std::vector<Matrix<MT>> ms;
    for (std::size_t s = 0; s < k; ++s) ms.push_back(random_mt(r, n, r.integer(1, 4), 0.2));
    try {
      temporary(solve(ms, random_mt_vec(r, n)), k);
    } catch (const Error&) {
      // a zero row makes the system ill-posed
    }
  }
  for (int it = 0; it < 100; ++it) {
    std::size_t n = r.integer(1, 4), k = r.integer(2, 3);
    Vector<MP> y(n);
    for (Index i = 0; i < n; ++i) y[i] = q(r.integer(-3, 3));
    std::vector<Matrix<MP>> as;
    for (std::size_t s = 0; s < k; ++s) {
      auto cols = random_mp_int(r, n, r.integer(1, 3), -5, 5).columns();
      cols.push_back(scale(y, q(r.integer(-2, 2))));
      as.push_back(Matrix<MP>::from_columns(cols, MP()));
    }
    auto tr = solve(as);
    temporary(tr, k);
    t.check(tr.stop == StopReason::Solved, "seeded system not solved");
    for (std::size_t s = 0; s < k; ++s)
      t.check(!tr.eternal_y[s].empty() && !tr.eternal_x[s].empty(), "seeded side without eternal sleepers");
  }
  return t.done(str(traces) + " traces, 100 seeded");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion all[] = {
      {"kleene-star", kleene_star_correctness},
      {"lambda-oracle", lambda_oracle},
      {"spectral-structure", spectral_structure},
      {"intersection-identity", intersection_identity},
      {"projector-laws", projector_laws},
      {"separation", separation},
      {"cells", cellular_decomposition},
      {"permanent-pseudoinverse", permanent_pseudoinverse},
      {"solver-kleene", kleene_solver},
      {"solver-integer", integer_solver},
      {"distances", distances},
      {"sleepers", sleepers},
  };
  int failed = 0, idx = 0;
  for (const auto& c : all) {
    ++idx;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %-24s %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", idx, c.name, o.detail.c_str(), sec);
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d/%d criteria passed\n", idx - failed, idx);
  return failed;
}
