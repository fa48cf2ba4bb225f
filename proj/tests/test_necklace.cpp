#include "doctest.h"

#include <vector>

#include "plabic/bap.hpp"
#include "plabic/cyclic.hpp"
#include "plabic/error.hpp"
#include "plabic/necklace.hpp"

using namespace plabic;

TEST_CASE("necklace of the top cell") {
  auto f = make_bap({3, 4, 5, 6});
  auto necklace = necklace_from_bap(f);
  CHECK(necklace.n() == 4);
  CHECK(necklace.k() == 2);
  CHECK(necklace.term(1) == KSubset(4, {1, 2}));
  CHECK(necklace.term(2) == KSubset(4, {2, 3}));
  CHECK(necklace.term(3) == KSubset(4, {3, 4}));
  CHECK(necklace.term(4) == KSubset(4, {1, 4}));
  // term index is cyclic.
  CHECK(necklace.term(5) == necklace.term(1));
  CHECK(bap_from_necklace(necklace) == f);
}

TEST_CASE("dual necklace of the top cell") {
  auto f = make_bap({3, 4, 5, 6});
  auto dual = dual_necklace_from_bap(f);
  CHECK(dual.term(1) == KSubset(4, {3, 4}));
  CHECK(dual.term(2) == KSubset(4, {1, 4}));
  CHECK(dual.term(3) == KSubset(4, {1, 2}));
  CHECK(dual.term(4) == KSubset(4, {2, 3}));
  CHECK(bap_from_dual_necklace(dual) == f);
}

TEST_CASE("necklace handles loops and coloops") {
  // Black lollipop at 1 and 3, white at 2 and 4.
  auto f = make_bap({1, 6, 3, 8});
  auto necklace = necklace_from_bap(f);
  CHECK(necklace.term(1) == KSubset(4, {2, 4}));
  CHECK(necklace.term(2) == KSubset(4, {2, 4}));
  CHECK(necklace.term(3) == KSubset(4, {4, 2}));
  CHECK(bap_from_necklace(necklace) == f);

  // Mixed lollipop pair on n = 2: coloop at 1, loop at 2.
  auto g = make_bap({3, 2});
  auto small = necklace_from_bap(g);
  CHECK(small.term(1) == KSubset(2, {1}));
  CHECK(small.term(2) == KSubset(2, {1}));
  CHECK(bap_from_necklace(small) == g);
}

TEST_CASE("necklace round trip is exhaustive on (2, 4)") {
  for (const auto& f : enumerate_baps(2, 4)) {
    CHECK(bap_from_necklace(necklace_from_bap(f)) == f);
    CHECK(bap_from_dual_necklace(dual_necklace_from_bap(f)) == f);
  }
}

TEST_CASE("invalid necklaces are rejected") {
  // 1 is absent from I_1, so 1 must be a loop and I_2 must equal I_1.
  CHECK_THROWS_AS(
      bap_from_necklace(GrassmannNecklace(2, 1, {KSubset(2, {2}), KSubset(2, {1})})),
      ValidationError);
  CHECK_THROWS_AS(GrassmannNecklace(2, 1, {KSubset(2, {1})}), ValidationError);
  CHECK_THROWS_AS(GrassmannNecklace(2, 2, {KSubset(2, {1}), KSubset(2, {2})}),
                  ValidationError);
}

TEST_CASE("positroid of the top cell is the full matroid") {
  auto positroid = positroid_from_necklace(necklace_from_bap(make_bap({3, 4, 5, 6})));
  CHECK(positroid.members() == all_ksubsets(4, 2));
  CHECK(positroid.contains(KSubset(4, {1, 3})));
  CHECK(is_positroid(positroid));
  CHECK(necklace_from_positroid(positroid) == necklace_from_bap(make_bap({3, 4, 5, 6})));
}

TEST_CASE("positroid of a lollipop cell") {
  auto positroid = positroid_from_necklace(necklace_from_bap(make_bap({1, 6, 3, 8})));
  CHECK(positroid.members() == std::vector<KSubset>{KSubset(4, {2, 4})});
  CHECK(is_positroid(positroid));
}

TEST_CASE("positroid round trip is exhaustive on (2, 4)") {
  for (const auto& f : enumerate_baps(2, 4)) {
    auto necklace = necklace_from_bap(f);
    auto positroid = positroid_from_necklace(necklace);
    CHECK(is_positroid(positroid));
    CHECK(necklace_from_positroid(positroid) == necklace);
  }
}

TEST_CASE("is_positroid rejects a punctured top matroid") {
  // Dropping one basis from the rank-2 uniform matroid leaves its necklace
  // unchanged, so Oh's reconstruction disagrees with the member list.
  std::vector<KSubset> members;
  for (const auto& s : all_ksubsets(4, 2)) {
    if (s == KSubset(4, {1, 3})) continue;
    members.push_back(s);
  }
  Positroid punctured(4, 2, members);
  CHECK_FALSE(is_positroid(punctured));
  CHECK_FALSE(is_positroid(Positroid(4, 2, {})));
  CHECK_THROWS_AS(necklace_from_positroid(Positroid(4, 2, {})), ValidationError);
}

TEST_CASE("symmetric predicates agree with the window condition") {
  for (const auto& f : enumerate_baps(2, 4)) {
    bool expected = is_symmetric_bap(f);
    CHECK(is_symmetric_necklace(necklace_from_bap(f)) == expected);
    CHECK(is_symmetric_dual_necklace(dual_necklace_from_bap(f)) == expected);
    CHECK(is_symmetric_positroid(positroid_from_necklace(necklace_from_bap(f))) ==
          expected);
  }
}

TEST_CASE("symmetric predicates require type (n, 2n)") {
  auto f = make_bap({2, 3, 4, 5});
  CHECK_THROWS_AS(is_symmetric_necklace(necklace_from_bap(f)), MathError);
  CHECK_THROWS_AS(is_symmetric_dual_necklace(dual_necklace_from_bap(f)), MathError);
  CHECK_THROWS_AS(is_symmetric_positroid(positroid_from_necklace(necklace_from_bap(f))),
                  MathError);
}
