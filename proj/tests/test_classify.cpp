// semigaps - gap-structure analytics for numerical semigroups

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semigaps/classify.hpp"
#include "semigaps/errors.hpp"
#include "semigaps/oracle.hpp"
#include "test_util.hpp"

using namespace semigaps;
using V = std::vector<int>;

namespace {
  NumericalSemigroup gens(std::initializer_list<int> g) {
    return NumericalSemigroup::from_generators(g);
  }
}  // namespace

TEST_CASE("pseudo_frobenius") {
  auto const s14 = remove_element(gens({7, 8, 9, 10, 11, 12}), 10);
  auto const s18 = remove_element(gens({8, 9, 10, 11, 12, 13, 15}), 10);
  CHECK(pseudo_frobenius(s14).values == V{10, 13});
  CHECK(pseudo_frobenius(s18).values == V{4, 7, 10, 14});
  CHECK(pseudo_frobenius(s18).type_count() == 4);
  CHECK(pseudo_frobenius(gens({2, 3})).values == V{1});
  CHECK(pseudo_frobenius(NumericalSemigroup()).values == V{-1});
}

TEST_CASE("classify") {
  auto r = classify(gens({5, 7, 9, 11}));
  CHECK(r.symmetric);
  CHECK(r.irreducible);
  CHECK_FALSE(r.pseudo_symmetric);
  CHECK(r.l_count == 0);

  r = classify(gens({5, 8, 11, 12}));
  CHECK(r.pseudo_symmetric);
  CHECK(r.irreducible);
  CHECK(r.l_count == 1);

  r = classify(remove_element(remove_element(gens({5, 7, 9, 11}), 7), 12));
  CHECK(r.l_count == 4);
  CHECK_FALSE(r.irreducible);
  CHECK_FALSE(r.symmetric);
}

TEST_CASE("URSY and URPSY witnesses") {
  auto w = ursy_witness(gens({2, 7}));
  REQUIRE(w.has_value());
  CHECK(w->parent == gens({2, 5}));
  CHECK(w->removed == 5);

  CHECK(is_ursy(remove_element(gens({7, 8, 9, 10, 11, 12}), 10)));
  CHECK_FALSE(is_ursy(gens({3, 5, 7})));

  w = urpsy_witness(gens({3, 5, 7}));
  REQUIRE(w.has_value());
  CHECK(w->parent == gens({3, 4, 5}));
  CHECK(w->removed == 4);

  CHECK(is_urpsy(remove_element(gens({8, 9, 10, 11, 12, 13, 15}), 10)));
  CHECK_FALSE(is_urpsy(gens({2, 3})));
}

TEST_CASE("family U") {
  CHECK(in_family_U(gens({3, 5, 7})));
  CHECK(in_family_U(gens({4, 5, 6, 7})));
  CHECK(in_family_U(gens({4, 5, 11})));
  CHECK(in_family_U(gens({3, 4})));
  CHECK(in_family_U(gens({3, 11})));
  CHECK(in_family_U(gens({5, 6, 7})));
  CHECK(in_family_U(gens({7, 8, 9, 10, 11})));
  CHECK_FALSE(in_family_U(gens({5, 7, 9, 11})));
  CHECK_FALSE(in_family_U(gens({5, 6, 7, 8})));
  CHECK_FALSE(in_family_U(gens({4, 6, 9})));
  CHECK(in_family_U(gens({3, 5})));  // <3, 2 + 3>
  CHECK_FALSE(in_family_U(NumericalSemigroup()));
}

TEST_CASE("pf_fast_2sg") {
  auto const s = remove_element(gens({7, 8, 9, 10, 11, 12}), 10);
  CHECK(pf_fast_2sg(s).values == V{10, 13});
  CHECK_THROWS_AS(pf_fast_2sg(gens({2, 3})), NotTwoSemigroup);
}

TEST_CASE("pf_fast_3sg") {
  auto const s = remove_element(gens({8, 9, 10, 11, 12, 13, 15}), 10);
  CHECK(pf_fast_3sg(s).values == V{4, 7, 10, 14});
  CHECK(pf_fast_3sg(s).type_count() == 4);
  CHECK_THROWS_AS(pf_fast_3sg(gens({3, 5, 7})), NotThreeSemigroup);
}

TEST_CASE("sweep F <= 15: fast paths, biconditionals and parity") {
  int                             seen_t2_of_3sg = 0;
  std::vector<NumericalSemigroup> ursy_exceptions, urpsy_exceptions;
  for (int f = 1; f <= 15; ++f) {
    for (auto const& b : oracle::all_with_frobenius(f)) {
      auto const s  = test::to_fast(b);
      auto const r  = classify(s);
      auto const pf = pseudo_frobenius(s);
      CAPTURE(to_string(s));

      CHECK(pf.values == oracle::brute_pf(b));
      CHECK(r.irreducible == (r.symmetric || r.pseudo_symmetric));
      CHECK_FALSE((r.symmetric && r.pseudo_symmetric));

      CHECK(r.symmetric == (pf.values == V{f}));
      CHECK(r.symmetric == (pf.type_count() == 1));
      CHECK(r.pseudo_symmetric == (f % 2 == 0 && pf.values == V{f / 2, f}));

      if ((r.l_count == 2) != (r.ursy && s.multiplicity() >= 3)) {
        ursy_exceptions.push_back(s);
      }
      if ((r.l_count == 3) != (r.urpsy && !r.in_family_U)) {
        urpsy_exceptions.push_back(s);
      }

      if (r.l_count % 2 == 0) {
        CHECK(f % 2 == 1);
      } else {
        CHECK(f % 2 == 0);
      }

      if (r.l_count == 2) {
        CHECK(pf_fast_2sg(s) == pf);
        CHECK((pf.type_count() == 2 || pf.type_count() == 3));
      }
      if (r.l_count == 3) {
        CHECK(pf_fast_3sg(s) == pf);
        CHECK((pf.type_count() >= 2 && pf.type_count() <= 4));
        int const h = h_value(s);
        if (s.contains(h - f / 2)) {
          CHECK(pf.type_count() == 2);
          ++seen_t2_of_3sg;
        }
      }
    }
  }
  CHECK(seen_t2_of_3sg > 0);

  // l = 2 <=> URSY and m >= 3, and l = 3 <=> URPSY outside U, hold
  // everywhere except when the removed generator lies above the parent's
  // Frobenius number: <2,3> \ {2} = <3,4,5> has l = 1, and
  // <3,5,7> \ {5} = <3,7,8> has l = 2 yet is not in U.
  CHECK(ursy_exceptions == std::vector{gens({3, 4, 5})});
  CHECK(urpsy_exceptions == std::vector{gens({3, 7, 8})});
  for (auto const& s : ursy_exceptions) {
    auto const b = oracle::from_gaps(s.gaps());
    CHECK(oracle::brute_ursy(b));
    CHECK(oracle::brute_l(b) == 1);
  }
  for (auto const& s : urpsy_exceptions) {
    auto const b = oracle::from_gaps(s.gaps());
    CHECK(oracle::brute_urpsy(b));
    CHECK(oracle::brute_l(b) == 2);
  }
}
