#include "doctest.h"
#include "support.hpp"

using namespace tsupport;

TEST_CASE("permanent examples") {
  MT s;
  auto i = permanent(identity<MT>(3));
  CHECK(s.compare(i.value, s.one()) == 0);
  CHECK(*i.sigma == std::vector<Index>{0, 1, 2});

  auto a = permanent(mt({{"2", "1"}, {"1", "3"}}));
  CHECK(s.compare(a.value, q(6)) == 0);
  CHECK(*a.sigma == std::vector<Index>{0, 1});

  auto z = permanent(mt({{"0", "1"}, {"0", "1"}}));
  CHECK(s.is_zero(z.value));
  CHECK_FALSE(z.sigma.has_value());

  auto sw = permanent(mt({{"1", "2"}, {"1", "1"}}));
  CHECK(*sw.sigma == std::vector<Index>{1, 0});
}

TEST_CASE("pseudoinverse examples") {
  auto i = pseudoinverse(identity<MT>(2));
  CHECK(mat_eq(i.adjugate, identity<MT>(2)));
  CHECK(mat_eq(*i.nabla, identity<MT>(2)));

  auto p = pseudoinverse(mt({{"2", "1"}, {"1", "3"}}));
  CHECK(mat_eq(p.adjugate, mt({{"3", "1"}, {"1", "2"}})));
  CHECK(mat_eq(*p.nabla, mt({{"1/2", "1/6"}, {"1/6", "1/3"}})));

  auto z = pseudoinverse(mt({{"0", "1"}, {"0", "1"}}));
  CHECK_FALSE(z.nabla.has_value());
}

TEST_CASE("row and column Kleene stars examples") {
  auto i = row_col_kleene_stars(identity<MT>(2));
  CHECK(mat_eq(i.col_star, identity<MT>(2)));
  CHECK(mat_eq(i.row_star, identity<MT>(2)));

  auto a = mt({{"2", "1"}, {"1", "3"}});
  auto st = row_col_kleene_stars(a);
  CHECK(mat_eq(st.col_star, mt({{"1", "1/3"}, {"1/2", "1"}})));
  CHECK(mat_eq(st.row_star, mt({{"1", "1/2"}, {"1/3", "1"}})));

  auto k = mt({{"1", "2"}, {"2/5", "1"}});
  auto ks = row_col_kleene_stars(k);
  CHECK(mat_eq(ks.col_star, k));
  CHECK(mat_eq(ks.row_star, k));

  CHECK_THROWS_AS(row_col_kleene_stars(mt({{"0", "1"}, {"0", "1"}})), Error);
}

TEST_CASE("essential_span examples") {
  auto i = essential_span(identity<MT>(3));
  CHECK(i.dimension == 3);
  CHECK(i.basis.generators.size() == 3);

  CHECK(essential_span(mt({{"2", "1"}, {"1", "3"}})).dimension == 2);

  auto one = essential_span(mt({{"1", "1"}, {"1", "1"}}));
  CHECK(one.dimension == 1);
  CHECK(mat_eq(one.col_star, mt({{"1", "1"}, {"1", "1"}})));
  CHECK(one.basis.generators.size() == 1);
}

TEST_CASE("colorful_witness examples") {
  auto id = identity<MT>(2);
  auto w = colorful_witness(id, {id, id}, {mtv({"1", "0"}), mtv({"0", "1"})});
  CHECK(vec_eq(w.extremals[0], mtv({"1", "0"})));
  CHECK(vec_eq(w.extremals[1], mtv({"0", "1"})));
  CHECK(w.u.is_positive());

  auto v1 = mt({{"1"}, {"1"}}), v2 = mt({{"2"}, {"1"}});
  auto c = colorful_witness(id, {v1, v2}, {mtv({"1", "1"}), mtv({"2", "1"})});
  CHECK(c.sigma == std::vector<Index>{1, 0});
  CHECK(vec_eq(c.extremals[0], mtv({"1", "1"})));
  CHECK(vec_eq(c.extremals[1], mtv({"1", "1/2"})));
  CHECK(is_member(c.u, Matrix<MT>::from_columns({mtv({"1", "1"}), mtv({"2", "1"})}, MT())).member);

  try {
    colorful_witness(id, {id, id}, {mtv({"1", "0"}), mtv({"1", "0"})});
    FAIL("expected degenerate error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unsupported);
  }
}

TEST_CASE("assignment permanent equals the brute-force permanent") {
  Rng r(51);
  MT s;
  for (int t = 0; t < 120; ++t) {
    std::size_t n = t < 20 ? 7 : r.integer(1, 6);
    auto a = random_mt(r, n, n, r.uniform(0, 0.6));
    std::vector<std::vector<Index>> maximal;
    auto brute = brute_permanent(a, &maximal);
    auto p = permanent(a);
    CHECK(s.compare(p.value, brute) == 0);
    if (s.is_zero(brute)) {
      CHECK_FALSE(p.sigma);
    } else {
      REQUIRE(p.sigma);
      CHECK(*p.sigma == *std::min_element(maximal.begin(), maximal.end()));
    }
  }
  Rng rf(52);
  FL f;
  for (int t = 0; t < 50; ++t) {
    std::size_t n = rf.integer(1, 6);
    auto a = random_fl(rf, n, n, 0.2);
    CHECK(f.compare(permanent(a).value, brute_permanent(a)) == 0);
  }
}

TEST_CASE("A times its pseudoinverse gives the column and row Kleene stars") {
  Rng r(53);
  int done = 0;
  while (done < 200) {
    std::size_t n = r.integer(1, 5);
    auto a = random_mt(r, n, n, 0.3);
    auto pi = pseudoinverse(a);
    if (!pi.nabla) continue;
    ++done;
    auto st = row_col_kleene_stars(a);
    CHECK(mat_eq(mat_mul(a, *pi.nabla), st.col_star));
    CHECK(mat_eq(mat_mul(*pi.nabla, a), st.row_star));
    CHECK(is_kleene_star(st.col_star));
    CHECK(is_kleene_star(st.row_star));
  }
}

TEST_CASE("column Kleene star does not depend on the maximal permutation") {
  Rng r(54);
  int multi = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = r.integer(2, 5);
    Matrix<MT> a(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) a(i, j) = r.chance(0.2) ? a.semiring().zero() : q(r.integer(1, 2));
    std::vector<std::vector<Index>> maximal;
    if (a.semiring().is_zero(brute_permanent(a, &maximal))) continue;
    multi += maximal.size() > 1;
    auto ref = row_col_kleene_stars(a, maximal.front());
    for (const auto& sg : maximal) {
      auto st = row_col_kleene_stars(a, sg);
      CHECK(mat_eq(st.col_star, ref.col_star));
      CHECK(mat_eq(st.row_star, ref.row_star));
    }
  }
  CHECK(multi > 30);
}

TEST_CASE("strongly definite: star, adjugate and pseudoinverse coincide") {
  Rng r(55);
  MT s;
  for (int t = 0; t < 100; ++t) {
    std::size_t n = r.integer(1, 5);
    auto a = random_definite_mt(r, n, 0.3);
    // keep lambda = 1 while forcing a unit diagonal: raise the diagonal only up to one
    auto st = kleene_star(a);
    for (Index i = 0; i < n; ++i) a(i, i) = s.one();
    REQUIRE(compare_to_one(s, lambda(a)) == 0);
    auto pi = pseudoinverse(a);
    CHECK(s.compare(pi.per, s.one()) == 0);
    CHECK(mat_eq(kleene_star(a), pi.adjugate));
    CHECK(mat_eq(*pi.nabla, pi.adjugate));
    CHECK(mat_eq(kleene_star(a), st));
  }
}

TEST_CASE("essential span dimension counts critical components of the normalised matrix") {
  Rng r(56);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = r.integer(1, 5);
    auto a = random_mt(r, n, n, 0.2);
    if (a.semiring().is_zero(brute_permanent(a))) continue;
    auto e = essential_span(a);
    CHECK(e.dimension >= 1);
    CHECK(e.dimension <= n);
    CHECK(e.dimension <= e.basis.generators.size());
    // every column of the column star lies in span(A)
    for (const auto& c : e.col_star.columns()) CHECK(is_member(c, a).member);
  }
}
