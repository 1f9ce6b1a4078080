#include "doctest.h"
#include "support.hpp"

using namespace tsupport;

namespace {

bool mean_is(const MT& s, const CycleMean<MT>& m, const ExtRational& v) {
  auto x = mean_value(s, m);
  return x && s.compare(*x, v) == 0;
}

}  // namespace

TEST_CASE("lambda examples") {
  MT s;
  CHECK(mean_is(s, lambda(identity<MT>(3)), q(1)));
  CHECK(lambda(mt({{"0", "1", "2"}, {"0", "0", "3"}, {"0", "0", "0"}})).is_zero());
  CHECK(mean_is(s, lambda(mt({{"1/2", "2"}, {"1/2", "1/2"}})), q(1)));
  auto irr = lambda(mt({{"1", "2"}, {"1", "1"}}));
  CHECK_FALSE(mean_value(s, irr).has_value());
  CHECK(mean_log(s, irr) == doctest::Approx(std::log(2.0) / 2));
}

TEST_CASE("is_irreducible") {
  CHECK_FALSE(is_irreducible(identity<MT>(2)));
  CHECK(is_irreducible(mt({{"1", "2"}, {"3", "4"}})));
  CHECK(is_irreducible(mt({{"0", "1"}, {"1", "0"}})));
}

TEST_CASE("kleene_star examples") {
  CHECK(mat_eq(kleene_star(Matrix<MT>(3, 3)), identity<MT>(3)));
  auto a = mt({{"1", "2"}, {"2/5", "1"}});
  CHECK(mat_eq(kleene_star(a), a));
  try {
    kleene_star(mt({{"2"}}));
    FAIL("expected divergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Divergent);
  }
}

TEST_CASE("is_kleene_star examples") {
  CHECK(is_kleene_star(identity<MT>(2)));
  CHECK(is_kleene_star(mt({{"1", "2"}, {"2/5", "1"}})));
  CHECK_FALSE(is_kleene_star(mt({{"1", "2"}, {"1", "1"}})));
}

TEST_CASE("critical_graph examples") {
  auto gi = critical_graph(identity<MT>(3));
  CHECK(gi.nodes.size() == 3);
  CHECK(gi.n_c() == 3);
  CHECK(gi.representatives == IndexSet{0, 1, 2});

  auto g = critical_graph(mt({{"1/2", "2"}, {"1/2", "1/2"}}));
  CHECK(g.nodes == IndexSet{0, 1});
  CHECK(g.edges == std::vector<std::pair<Index, Index>>{{0, 1}, {1, 0}});
  CHECK(g.n_c() == 1);
  CHECK(g.representatives == IndexSet{0});

  auto h = critical_graph(mt({{"1", "0"}, {"0", "1/2"}}));
  CHECK(h.nodes == IndexSet{0});
  CHECK(h.non_critical == IndexSet{1});
  CHECK(h.n_c() == 1);

  CHECK_THROWS_AS(critical_graph(mt({{"2"}})), Error);
}

TEST_CASE("eigencone_bases examples") {
  auto e = eigencone_bases(identity<MT>(2));
  CHECK(e.eigencone.generators.size() == 2);
  CHECK(e.subeigencone.generators.size() == 2);

  auto f = eigencone_bases(mt({{"1/2", "2"}, {"1/2", "1/2"}}));
  CHECK(mat_eq(f.star, mt({{"1", "2"}, {"1/2", "1"}})));
  REQUIRE(f.eigencone.generators.size() == 1);
  CHECK(vec_eq(f.eigencone.generators[0], mtv({"1", "1/2"})));
  CHECK(f.subeigencone.generators.size() == 1);
  CHECK(f.subeigencone.linear_dimension == 1u);

  auto g = eigencone_bases(mt({{"1", "0"}, {"0", "1/2"}}));
  REQUIRE(g.eigencone.generators.size() == 1);
  CHECK(vec_eq(g.eigencone.generators[0], mtv({"1", "0"})));
  REQUIRE(g.subeigencone.generators.size() == 2);
  CHECK(vec_eq(g.subeigencone.generators[1], mtv({"0", "1"})));
}

TEST_CASE("kleene_intersection examples") {
  auto a1 = mt({{"1", "1/2"}, {"0", "1"}});
  auto a2 = mt({{"1", "0"}, {"1/2", "1"}});
  auto r = kleene_intersection(std::vector<Matrix<MT>>{a1, a2});
  REQUIRE_FALSE(r.trivial);
  CHECK(mat_eq(*r.star, mt({{"1", "1/2"}, {"1/2", "1"}})));

  auto one = kleene_intersection(std::vector<Matrix<MT>>{a1});
  CHECK(mat_eq(*one.star, a1));

  auto t = kleene_intersection(std::vector<Matrix<MT>>{mt({{"1", "1"}, {"1", "1"}}), mt({{"1", "2"}, {"1/2", "1"}})});
  CHECK(t.trivial);
  CHECK(mean_log(MT(), t.lambda) == doctest::Approx(std::log(2.0) / 2));

  CHECK_THROWS_AS(kleene_intersection(std::vector<Matrix<MT>>{mt({{"1", "2"}, {"1", "1"}})}), Error);
}

TEST_CASE("Karp lambda equals cycle enumeration") {
  Rng r(21);
  MT s;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = r.integer(1, 6);
    auto a = random_mt(r, n, n, r.uniform(0, 0.7));
    CHECK(compare_means(s, lambda(a), brute_lambda(a)) == 0);
  }
  Rng rf(22);
  FL f;
  for (int t = 0; t < 100; ++t) {
    std::size_t n = rf.integer(1, 6);
    auto a = random_fl(rf, n, n, 0.4);
    double got = mean_log(f, lambda(a)), want = mean_log(f, brute_lambda(a));
    if (std::isinf(want))
      CHECK(got == want);
    else
      CHECK(got == doctest::Approx(want));
  }
}

TEST_CASE("Kleene star equals the least fixpoint of X = I + AX") {
  Rng r(23);
  for (int t = 0; t < 100; ++t) {
    auto a = random_definite_mt(r, r.integer(1, 5));
    auto st = kleene_star(a);
    CHECK(mat_eq(st, fixpoint_star(a)));
    CHECK(mat_eq(st, series_star(a)));
    CHECK(is_kleene_star(st));
    CHECK(mat_eq(kleene_star(st), st));
  }
}

TEST_CASE("columns of A* are subeigenvectors and fixed by A*") {
  Rng r(24);
  for (int t = 0; t < 100; ++t) {
    auto a = random_definite_mt(r, r.integer(1, 5));
    auto st = kleene_star(a);
    for (const auto& c : st.columns()) {
      CHECK(vec_le(apply(a, c), c));
      CHECK(vec_eq(apply(st, c), c));
    }
  }
}

TEST_CASE("irreducible definite matrices have positive eigenvectors") {
  Rng r(25);
  int seen = 0;
  while (seen < 40) {
    auto a = random_definite_mt(r, r.integer(1, 5), 0.3);
    if (!is_irreducible(a)) continue;
    ++seen;
    for (const auto& v : eigencone_bases(a).eigencone.generators) {
      CHECK(v.is_positive());
      CHECK(vec_eq(apply(a, v), v));
    }
  }
}

TEST_CASE("unit diagonal: V*(A) has a positive vector iff lambda = 1") {
  Rng r(26);
  MT s;
  int pos = 0, neg = 0;
  for (int t = 0; t < 300; ++t) {
    std::size_t n = r.integer(2, 4);
    auto a = random_mt(r, n, n, 0.3);
    for (Index i = 0; i < n; ++i) a(i, i) = s.one();
    bool definite = compare_to_one(s, lambda(a)) == 0;
    // a positive subeigenvector exists iff the principal-solution iteration from ones stays positive
    bool has_pos = false;
    if (definite) {
      auto st = kleene_star(a);
      Vector<MT> u(n);
      for (const auto& c : st.columns()) u = vec_max(u, c);
      has_pos = u.is_positive() && vec_le(apply(a, u), u);
    } else {
      // lambda > 1: any positive y with Ay <= y would force every cycle weight <= 1
      auto y = ones<MT>(n);
      for (int it = 0; it < 50 && !has_pos; ++it) {
        auto ay = apply(a, y);
        has_pos = vec_le(ay, y);
        y = random_mt_vec(r, n);
      }
    }
    CHECK(has_pos == definite);
    (definite ? pos : neg)++;
  }
  CHECK(pos > 20);
  CHECK(neg > 20);
}

TEST_CASE("columns of A* proportional iff same critical SCC") {
  Rng r(27);
  for (int t = 0; t < 100; ++t) {
    auto a = random_definite_mt(r, r.integer(1, 5));
    auto g = critical_graph(a);
    auto st = kleene_star(a);
    std::vector<long> comp(a.rows(), -1);
    for (Index c = 0; c < g.sccs.size(); ++c)
      for (Index i : g.sccs[c]) comp[i] = static_cast<long>(c);
    for (Index i : g.nodes)
      for (Index j : g.nodes) CHECK(proportional(st.column(i), st.column(j)) == (comp[i] == comp[j]));
    CHECK(g.n_c() + g.non_critical.size() == critical_components(a.rows(), g));
  }
}

TEST_CASE("distinct Kleene stars have distinct spans") {
  Rng r(28);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = r.integer(2, 4);
    auto a = random_star(r, n);
    auto b = random_star(r, n);
    if (mat_eq(a, b)) continue;
    bool separated = false;
    for (const auto& c : a.columns()) separated = separated || !is_member(c, b).member;
    for (const auto& c : b.columns()) separated = separated || !is_member(c, a).member;
    CHECK(separated);
  }
}

TEST_CASE("intersection definite iff permutation products definite") {
  Rng r(29);
  MT s;
  for (int t = 0; t < 100; ++t) {
    std::size_t n = r.integer(2, 4);
    std::size_t k = r.integer(2, 3);
    auto y = random_mt_vec(r, n);
    std::vector<Matrix<MT>> as;
    for (std::size_t i = 0; i < k; ++i) as.push_back(r.chance(0.5) ? random_star_containing(r, y) : random_star(r, n));
    auto res = kleene_intersection(as);
    std::vector<Index> order(k);
    std::iota(order.begin(), order.end(), 0);
    do {
      CHECK((compare_to_one(s, product_lambda(as, order)) == 0) == !res.trivial);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}
