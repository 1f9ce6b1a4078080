#include "doctest.h"
#include "support.hpp"

using namespace tsupport;

TEST_CASE("type_of examples") {
  auto a = mt({{"1", "1"}, {"1", "2"}});
  auto t = type_of(mtv({"1", "3/2"}), a);
  CHECK(t.col_type == std::vector<IndexSet>{{0}, {1}});
  CHECK(t.row_type == std::vector<IndexSet>{{0}, {1}});

  auto ti = type_of(mtv({"2", "7"}), identity<MT>(2));
  CHECK(ti.col_type == std::vector<IndexSet>{{0}, {1}});

  auto col = mt({{"2", "1"}, {"1", "3"}});
  auto ts = type_of(col.column(0), col);
  CHECK(ts.col_type[0] == IndexSet{0, 1});
  CHECK(ts.row_type[0] == IndexSet{0});
  CHECK(ts.row_type[1] == IndexSet{0, 1});

  CHECK_THROWS_AS(type_of(mtv({"1", "0"}), a), Error);
  CHECK_THROWS_AS(type_of(mtv({"1", "1"}), mt({{"1", "0"}, {"1", "0"}})), Error);
}

TEST_CASE("is_member examples") {
  auto a = mt({{"1", "1"}, {"1", "2"}});
  auto z = is_member(mtv({"0", "0"}), a);
  CHECK(z.member);
  CHECK(z.x.is_zero());

  auto no = is_member(mtv({"2", "1"}), a);
  CHECK_FALSE(no.member);
  CHECK(vec_eq(no.x, mtv({"1", "1/2"})));
  CHECK(no.uncovered == IndexSet{0});

  auto yes = is_member(mtv({"1", "3/2"}), a);
  CHECK(yes.member);
  CHECK(vec_eq(yes.x, mtv({"1", "3/4"})));
}

TEST_CASE("caratheodory_witness examples") {
  auto w = caratheodory_witness(mtv({"1", "1"}), {mtv({"2", "1"}), mtv({"1", "2"})});
  CHECK(w.indices == std::vector<Index>{0, 1});
  MT s;
  CHECK(s.compare(w.coefficients[0], q(1, 2)) == 0);
  CHECK(s.compare(w.coefficients[1], q(1, 2)) == 0);

  auto w2 = caratheodory_witness(mtv({"1", "0"}), {mtv({"1", "0"}), mtv({"1", "1"})});
  CHECK(w2.indices == std::vector<Index>{0});

  auto self = caratheodory_witness(mtv({"3", "2"}), {mtv({"3", "2"})});
  CHECK(self.indices.size() == 1);
  CHECK(s.compare(self.coefficients[0], q(1)) == 0);

  CHECK_THROWS_AS(caratheodory_witness(mtv({"2", "1"}), {mtv({"1", "1"}), mtv({"1", "2"})}), Error);
}

TEST_CASE("extremals_and_basis examples") {
  auto b = extremals_and_basis<MT>({mtv({"1", "0"}), mtv({"0", "1"})});
  CHECK(b.generators.size() == 2);

  auto c = extremals_and_basis<MT>({mtv({"1", "1"}), mtv({"2", "1"}), mtv({"1", "2"})});
  REQUIRE(c.generators.size() == 2);
  CHECK(vec_eq(c.generators[0], mtv({"1", "1/2"})));
  CHECK(vec_eq(c.generators[1], mtv({"1/2", "1"})));

  auto d = extremals_and_basis<MT>({mtv({"1", "3"}), mtv({"2", "6"})});
  REQUIRE(d.generators.size() == 1);
  CHECK(vec_eq(d.generators[0], mtv({"1/3", "1"})));
}

TEST_CASE("region_star examples") {
  auto ci = region_star<MT>({{0}, {1}}, identity<MT>(2));
  CHECK(ci.feasible);
  CHECK(mat_eq(ci.region, identity<MT>(2)));
  CHECK(ci.dimension == 2);

  auto a = mt({{"1", "1"}, {"1", "2"}});
  auto c = region_star<MT>({{0}, {1}}, a);
  CHECK(c.feasible);
  CHECK(mat_eq(c.region, mt({{"1", "1/2"}, {"1", "1"}})));
  CHECK(mat_eq(*c.star, mt({{"1", "1/2"}, {"1", "1"}})));
  CHECK(c.dimension == 2);

  auto d = region_star<MT>({{0, 1}, {1}}, a);
  CHECK(d.feasible);
  CHECK(mat_eq(d.region, mt({{"1", "1/2"}, {"2", "1"}})));
  CHECK(d.dimension == 1);
  CHECK(d.region_dimension == 1);

  auto bad = region_star<MT>({{1}, {1}}, mt({{"1", "0"}, {"1", "1"}}));
  CHECK_FALSE(bad.feasible);
}

TEST_CASE("enumerate_cells examples") {
  auto ci = enumerate_cells(identity<MT>(2));
  REQUIRE(ci.size() == 1);
  CHECK(mat_eq(*ci[0].star, identity<MT>(2)));

  auto c = enumerate_cells(mt({{"1", "1"}, {"1", "2"}}));
  REQUIRE(c.size() == 1);
  CHECK(mat_eq(*c[0].star, mt({{"1", "1/2"}, {"1", "1"}})));
  CHECK(c[0].dimension == 2);

  auto d = enumerate_cells(mt({{"1", "1", "1"}, {"1/2", "1", "2"}}));
  REQUIRE(d.size() == 2);
  std::vector<Matrix<MT>> stars{*d[0].star, *d[1].star};
  auto has = [&](const Matrix<MT>& m) {
    return std::any_of(stars.begin(), stars.end(), [&](const Matrix<MT>& s) { return mat_eq(s, m); });
  };
  CHECK(has(mt({{"1", "1"}, {"1/2", "1"}})));
  CHECK(has(mt({{"1", "1/2"}, {"1", "1"}})));
  for (const auto& cell : d) CHECK(cell.dimension == 2);

  auto all = enumerate_cells(mt({{"1", "1", "1"}, {"1/2", "1", "2"}}), true);
  CHECK(all.size() > d.size());

  Rng rng(1);
  CHECK_THROWS_AS(enumerate_cells(random_mt(rng, 6, 6), false, 1000), Error);
}

TEST_CASE("multiorder membership agrees with principal-solution membership") {
  Rng r(31);
  int members = 0;
  for (int t = 0; t < 500; ++t) {
    std::size_t n = r.integer(1, 5), m = r.integer(1, 5);
    auto a = random_mt(r, n, m, 0.2);
    Vector<MT> y;
    if (r.chance(0.5)) {
      Vector<MT> x = random_mt_vec(r, m, 0.3);
      y = apply(a, x);
    } else {
      y = random_mt_vec(r, n, 0.2);
    }
    auto res = is_member(y, a);
    bool multi = uncovered_coordinates(y, a.columns()).empty();
    CHECK(res.member == multi);
    members += res.member;
  }
  CHECK(members > 100);
}

TEST_CASE("membership oracle: combinations accepted, outward perturbations rejected") {
  Rng r(32);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = r.integer(2, 4), m = r.integer(1, 4);
    auto a = random_mt(r, n, m);
    Vector<MT> x(m);
    for (Index j = 0; j < m; ++j) x[j] = q(r.integer(1, 4), r.integer(1, 4));
    auto y = apply(a, x);
    CHECK(is_member(y, a).member);
    // brute-force grid search over coefficients in {k/4}, k = 0..16
    auto z = y;
    Index i = r.integer(0, n - 1);
    z[i] = MT().mul(z[i], q(r.integer(5, 9), 4));
    bool grid_hit = false;
    std::vector<long> c(m, 0);
    auto principal = is_member(z, a).member;
    if (m <= 2) {
      std::function<void(Index)> rec = [&](Index j) {
        if (grid_hit) return;
        if (j == m) {
          Vector<MT> xx(m);
          for (Index k = 0; k < m; ++k) xx[k] = q(c[k], 16);
          if (vec_eq(apply(a, xx), z)) grid_hit = true;
          return;
        }
        for (long k = 0; k <= 64; ++k) {
          c[j] = k;
          rec(j + 1);
        }
      };
      rec(0);
      if (grid_hit) CHECK(principal);
    }
    if (!principal) CHECK_FALSE(grid_hit);
  }
}

TEST_CASE("Caratheodory witness size and exact recombination") {
  Rng r(33);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = r.integer(1, 5), m = r.integer(1, 6);
    auto a = random_mt(r, n, m, 0.2);
    auto y = apply(a, random_mt_vec(r, m, 0.3));
    auto gens = a.columns();
    auto w = caratheodory_witness(y, gens);
    CHECK(w.indices.size() <= y.support().size());
    Vector<MT> acc(n);
    for (Index k = 0; k < w.indices.size(); ++k) acc = vec_max(acc, scale(gens[w.indices[k]], w.coefficients[k]));
    CHECK(vec_eq(acc, y));
  }
}

TEST_CASE("basis is invariant under shuffling and duplication") {
  Rng r(34);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = r.integer(2, 4), m = r.integer(1, 6);
    auto a = random_mt(r, n, m, 0.2);
    auto gens = a.columns();
    auto b1 = extremals_and_basis(gens);
    auto more = gens;
    for (const auto& g : gens)
      if (r.chance(0.5)) more.push_back(scale(g, r.rational()));
    std::shuffle(more.begin(), more.end(), r.engine());
    auto b2 = extremals_and_basis(more);
    REQUIRE(b1.generators.size() == b2.generators.size());
    for (const auto& g : b1.generators)
      CHECK(std::any_of(b2.generators.begin(), b2.generators.end(), [&](const Vector<MT>& h) { return vec_eq(g, h); }));
    // the basis generates the same cone
    if (!b1.generators.empty()) {
      auto bm = Matrix<MT>::from_columns(b1.generators, MT());
      for (const auto& g : gens) CHECK(is_member(g, bm).member);
    }
  }
}

TEST_CASE("G_S equals the undirected support of the critical graph of A^S") {
  Rng r(35);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = r.integer(1, 5), m = r.integer(1, 5);
    auto a = random_mt(r, n, m);
    auto y = random_mt_vec(r, n);
    auto tc = type_of(y, a);
    auto cell = region_star(tc.row_type, a);
    REQUIRE(cell.feasible);
    auto g = critical_graph(cell.region);
    std::set<std::pair<Index, Index>> crit;
    for (auto [i, j] : g.edges)
      if (i != j) crit.insert({std::min(i, j), std::max(i, j)});
    std::set<std::pair<Index, Index>> gs(cell.gs_edges.begin(), cell.gs_edges.end());
    CHECK(gs == crit);
    CHECK(cell.dimension == cell.region_dimension);
    CHECK(cell.dimension == g.n_c() + g.non_critical.size());
  }
}

TEST_CASE("cells cover exactly the members") {
  Rng r(36);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = r.integer(2, 3), m = r.integer(1, 4);
    auto a = random_mt(r, n, m);
    auto cells = enumerate_cells(a);
    for (int p = 0; p < 60; ++p) {
      Vector<MT> y = r.chance(0.5) ? apply(a, random_mt_vec(r, m)) : random_mt_vec(r, n);
      CHECK(is_member(y, a).member == in_cell_union(y, cells));
    }
  }
}
