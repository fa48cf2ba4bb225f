#include "doctest.h"

#include <vector>

#include "plabic/bap.hpp"
#include "plabic/cyclic.hpp"
#include "plabic/error.hpp"

using namespace plabic;

TEST_CASE("make_bap accepts the top cell window") {
  auto f = make_bap({3, 4, 5, 6});
  CHECK(f.n() == 4);
  CHECK(f.k() == 2);
  CHECK(f.to_string() == "(3, 4, 5, 6)");
  CHECK_FALSE(f.is_lollipop());
  // Periodicity f(i + n) = f(i) + n.
  CHECK(f(5) == 7);
  CHECK(f(0) == 2);
  CHECK(f(-3) == -1);
}

TEST_CASE("make_bap rejects malformed windows") {
  // Residues (1, 4, 1, 4) are not a bijection mod 4.
  CHECK_THROWS_AS(make_bap({1, 4, 5, 8}), ValidationError);
  // Displacement sum 6 is not divisible by n = 4.
  CHECK_THROWS_AS(make_bap({2, 3, 6, 5}), ValidationError);
  // f(1) = 0 < 1 violates boundedness.
  CHECK_THROWS_AS(make_bap({0, 2, 3, 4}), ValidationError);
  // f(4) = 9 > 4 + 4 violates boundedness.
  CHECK_THROWS_AS(make_bap({2, 3, 4, 9}), ValidationError);
  CHECK_THROWS_AS(make_bap({}), ValidationError);
}

TEST_CASE("fixed points and lollipops") {
  auto f = make_bap({1, 6, 3, 8});
  CHECK(f.k() == 2);
  CHECK(f.is_black_fixed_point(1));
  CHECK(f.is_white_fixed_point(2));
  CHECK(f.is_black_fixed_point(3));
  CHECK(f.is_white_fixed_point(4));
  CHECK(f.is_lollipop());
  CHECK(f.white_fixed_set() == KSubset(4, {2, 4}));

  auto top = make_bap({3, 4, 5, 6});
  CHECK_FALSE(top.is_lollipop());
  CHECK(top.white_fixed_set() == KSubset(4, {}));
}

TEST_CASE("residues") {
  auto f = make_bap({3, 4, 5, 6});
  CHECK(f.residue(1) == 3);
  CHECK(f.residue(3) == 1);
  CHECK(f.residue_inverse(3) == 1);
  CHECK(f.residue_inverse(1) == 3);
}

TEST_CASE("bridges of the top cell") {
  auto f = make_bap({3, 4, 5, 6});
  CHECK(has_bridge(f, 1));
  CHECK(has_bridge(f, 2));
  CHECK(has_bridge(f, 3));
  // Site n wraps: 4 < f(4) = 6 < f(5) = 7 < 9.
  CHECK(has_bridge(f, 4));
  CHECK_THROWS_AS(has_bridge(f, 0), ValidationError);
  CHECK_THROWS_AS(has_bridge(f, 5), ValidationError);

  auto g = make_bap({2, 4, 5, 7});
  // 1 < g(1) = 2 < g(2) = 4 < 6, so site 1 still carries a bridge.
  CHECK(has_bridge(g, 1));
  CHECK(has_bridge(g, 2));
  CHECK(has_bridge(g, 3));
  CHECK_FALSE(has_bridge(g, 4));
}

TEST_CASE("multiply_simple swaps window entries") {
  auto f = make_bap({3, 4, 5, 6});
  CHECK(multiply_simple(f, 1) == make_bap({4, 3, 5, 6}));
  CHECK(multiply_simple(f, 2) == make_bap({3, 5, 4, 6}));
  // The wrap site swaps f(n) and f(n + 1) across the period.
  CHECK(multiply_simple(f, 4) == make_bap({2, 4, 5, 7}));
  // Swapping (1, 2) in (1, 2) would give f(2) = 1 < 2.
  CHECK_THROWS_AS(multiply_simple(make_bap({1, 2}), 1), MathError);
  CHECK_THROWS_AS(multiply_simple(f, 0), ValidationError);
}

TEST_CASE("can_add_bridge detects literal descents") {
  auto f = make_bap({4, 3, 5, 6});
  CHECK(can_add_bridge(f, 1));
  CHECK_FALSE(can_add_bridge(f, 2));
  CHECK_FALSE(can_add_bridge(f, 3));
  auto top = make_bap({3, 4, 5, 6});
  CHECK_FALSE(can_add_bridge(top, 1));
  // Sites run over [1, n - 1] only, no wrap.
  CHECK_THROWS_AS(can_add_bridge(top, 4), ValidationError);
  CHECK_THROWS_AS(can_add_bridge(top, 0), ValidationError);
}

TEST_CASE("bridge moves invert each other") {
  auto f = make_bap({4, 3, 5, 6});
  auto g = multiply_simple(f, 1);
  CHECK(g == make_bap({3, 4, 5, 6}));
  CHECK(multiply_simple(g, 1) == f);
}

TEST_CASE("symmetry predicate on windows") {
  CHECK(is_symmetric_bap(make_bap({3, 4, 5, 6})));
  CHECK(is_symmetric_bap(make_bap({1, 6, 3, 8})));
  CHECK(is_symmetric_bap(make_bap({2, 4, 5, 7})));
  CHECK_FALSE(is_symmetric_bap(make_bap({2, 3, 5, 8})));
  CHECK(is_symmetric_bap(make_bap({1, 4, 5, 8, 9, 12})));
  CHECK(is_symmetric_bap(make_bap({5, 6, 3, 10, 7, 8})));
  // Reflection symmetry is defined only for type (n, 2n).
  CHECK_THROWS_AS(is_symmetric_bap(make_bap({2, 3, 4, 5})), MathError);
  CHECK_THROWS_AS(is_symmetric_bap(make_bap({2, 3, 4})), MathError);
}

TEST_CASE("window inversions") {
  CHECK(window_inversions(make_bap({3, 4, 5, 6})) == 0);
  CHECK(window_inversions(make_bap({4, 3, 5, 6})) == 1);
  CHECK(window_inversions(make_bap({5, 6, 3, 4})) == 4);
}

TEST_CASE("inversions drop by one per bridge move") {
  for (const auto& f : enumerate_baps(2, 4)) {
    for (int i = 1; i < f.n(); ++i) {
      if (!can_add_bridge(f, i)) continue;
      auto g = multiply_simple(f, i);
      CHECK(window_inversions(g) == window_inversions(f) - 1);
    }
  }
}

TEST_CASE("enumerate_baps") {
  auto tiny = enumerate_baps(1, 2);
  REQUIRE(tiny.size() == 3);
  CHECK(tiny[0] == make_bap({1, 4}));
  CHECK(tiny[1] == make_bap({2, 3}));
  CHECK(tiny[2] == make_bap({3, 2}));

  CHECK(enumerate_baps(0, 1).size() == 1);
  CHECK(enumerate_baps(1, 1).size() == 1);
  // Cell count of the full (2, 4) ambient family.
  CHECK(enumerate_baps(2, 4).size() == 33);
  CHECK_THROWS_AS(enumerate_baps(3, 2), ValidationError);
  CHECK_THROWS_AS(enumerate_baps(-1, 2), ValidationError);
}
