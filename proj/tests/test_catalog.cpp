#include <catch_amalgamated.hpp>

#include <set>

#include "rankforge/abelian.hpp"
#include "rankforge/analyzer.hpp"
#include "rankforge/catalog.hpp"
#include "rankforge/error.hpp"
#include "rankforge/free_group.hpp"

using namespace rankforge;
using namespace rankforge::literals;

TEST_CASE("ranks and infinity", "[catalog]") {
  CHECK(Rank(3).value() == 3);
  CHECK(Rank::infinite().is_infinite());
  CHECK(Rank::infinite().to_string() == "inf");
  CHECK(Rank(2) < Rank::infinite());
  CHECK_THROWS_AS(Rank::infinite().value(), InvalidInput);
}

TEST_CASE("monoid and semigroup rank conversions", "[catalog]") {
  CHECK(monoid_rank_from_semigroup(1, true) == 0);
  CHECK(monoid_rank_from_semigroup(3, false) == 3);
  CHECK_THROWS_AS(monoid_rank_from_semigroup(0, false), InvalidInput);

  CHECK(monoid_semigroup_conversion(2, true, true) == Rank(2));
  CHECK(monoid_semigroup_conversion(2, false, true) == Rank(3));
  CHECK(monoid_semigroup_conversion(0, false, true) == Rank(1));
  CHECK(monoid_semigroup_conversion(Rank::infinite(), false, false).is_infinite());
  CHECK_THROWS_AS(monoid_semigroup_conversion(Rank::infinite(), false, true), InvalidInput);
}

TEST_CASE("relatively free groups", "[catalog]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(variety_rank(VarietyKind::periodic, n) == RankTriple{n, n, n});
    CHECK(variety_rank(VarietyKind::contains_z, n) == RankTriple{n, n + 1, n + 1});
  }
  CHECK(variety_rank(VarietyKind::periodic, 0) == RankTriple{0, 1, 0});
  CHECK(variety_rank(VarietyKind::contains_z, 0) == RankTriple{0, 1, 0});
}

TEST_CASE("variety ranks match the abelian representatives", "[catalog][property]") {
  // Z^n is relatively free in the abelian variety; Z_k^n in the variety of
  // abelian groups of exponent k.
  for (std::size_t n = 0; n <= 5; ++n) {
    auto zn = AbelianGroup::free(n);
    auto t  = variety_rank(VarietyKind::contains_z, n);
    CHECK(t.group_rank == Rank(group_rank_abelian(zn)));
    CHECK(t.semigroup_rank == Rank(semigroup_rank_abelian(zn)));
    for (long long k : {2, 3, 5}) {
      AbelianGroup p(0, std::vector<BigInt>(n, BigInt(k)));
      auto         tp = variety_rank(VarietyKind::periodic, n);
      CHECK(tp.group_rank == Rank(group_rank_abelian(p)));
      CHECK(tp.semigroup_rank == Rank(semigroup_rank_abelian(p)));
      CHECK(tp.monoid_rank
            == Rank(monoid_rank_from_semigroup(semigroup_rank_abelian(p), p.is_trivial())));
    }
  }
  // free groups themselves lie in the variety of all groups
  CHECK_FALSE(decide_semigroup_generates_free(free_basis(2), 2));
  CHECK(decide_semigroup_generates_free(augment_to_semigroup_gens(2).generating_set, 2));
}

TEST_CASE("surface presentations", "[catalog]") {
  CHECK(surface_presentation({2, true}) == Presentation{4, {"abABcdCD"_w}});
  CHECK(surface_presentation({0, true}) == Presentation{0, {}});
  CHECK(surface_presentation({2, false}) == Presentation{2, {"aabb"_w}});
  CHECK_THROWS_AS(surface_presentation({0, false}), InvalidInput);
}

TEST_CASE("surface group ranks", "[catalog]") {
  for (std::size_t g = 1; g <= 4; ++g) {
    auto o = surface_info({g, true});
    CHECK(o.ranks == RankTriple{2 * g, 2 * g + 1, 2 * g + 1});
    REQUIRE(o.augmented);
    CHECK(o.augmented->generating_set.size() == 2 * g + 1);
    CHECK(verify_free_reduction(o.augmented->witnesses, free_basis(2 * g),
                                o.augmented->generating_set));
    CHECK(abelianization(o.presentation) == AbelianGroup::free(2 * g));

    auto n = surface_info({g, false});
    CHECK(n.ranks == RankTriple{g, g, g});
    REQUIRE(n.witnesses);
    CHECK(verify_conjugate_of_relator(n.presentation, *n.witnesses));
    CHECK(abelianization(n.presentation) == AbelianGroup(g - 1, {BigInt(2)}));
  }
  CHECK(surface_info({0, true}).ranks == RankTriple{0, 1, 0});
  CHECK(surface_info({2, false}).ranks == RankTriple{2, 2, 2});  // Klein bottle
  CHECK(surface_info({1, false}).ranks == RankTriple{1, 1, 1});  // projective plane
}

TEST_CASE("worked example fixtures", "[catalog]") {
  auto               fixtures = worked_examples();
  std::set<std::string> ids;
  for (auto const& f : fixtures) {
    CHECK(ids.insert(f.id).second);
    CHECK_FALSE(f.claim.empty());
    CHECK((f.group.has_value() || f.presentation.has_value()));
    if (f.group) {
      for (auto const& x : f.elements) {
        CHECK_NOTHROW(f.group->validate(x));
      }
    }
    if (f.presentation) {
      CHECK_NOTHROW(f.presentation->validate());
    }
    if (f.group_rank && f.semigroup_rank) {
      CHECK((*f.semigroup_rank == *f.group_rank || *f.semigroup_rank == *f.group_rank + 1));
    }
  }
  for (auto const* id : {"z-basis-2-3", "z-no-subset-basis", "nilpotent-amalgam", "commutator-square", "z-x-z2-basis", "nilpotent-amalgam-basis", "klein-bottle"}) {
    CHECK(find_fixture(fixtures, id).id == id);
  }
  CHECK_THROWS_AS(find_fixture(fixtures, "nope"), InvalidInput);
  CHECK_FALSE(open_questions().empty());

  auto const& amalgam = find_fixture(fixtures, "nilpotent-amalgam");
  CHECK_FALSE(amalgam.verified);
  CHECK(abelianization(*amalgam.presentation) == *amalgam.abelianization);
}

TEST_CASE("abelian images of the nilpotent amalgam witness sets", "[catalog]") {
  // In the abelianization Z^2 x Z_2 (a, b free, d of order 2, c = 1) the
  // witness set {a, b, a^-1 b^-1 d^-1} semigroup-generates while {a, b, d}
  // does not. Only the abelian shadow is checkable here.
  auto const  fixtures = worked_examples();
  auto const& P        = *find_fixture(fixtures, "nilpotent-amalgam").presentation;
  auto        G        = abelianization(P);
  REQUIRE(G == AbelianGroup(2, {BigInt(2)}));
  std::vector<AbelianElement> images{G.from_coordinates({1, 0, 0}),
                                     G.from_coordinates({0, 1, 0}),
                                     G.zero(),
                                     G.from_coordinates({0, 0, 1})};
  // the images satisfy every relator
  for (auto const& r : P.relators) {
    CHECK(evaluate(r, images, G) == G.zero());
  }
  auto image_of = [&](std::vector<Word> const& ws) {
    std::vector<AbelianElement> out;
    for (auto const& w : ws) {
      out.push_back(evaluate(w, images, G));
    }
    return out;
  };
  CHECK(decide_semigroup_generates_abelian(
      image_of(find_fixture(fixtures, "nilpotent-amalgam").witness_set), G));
  CHECK_FALSE(decide_semigroup_generates_abelian(
      image_of(find_fixture(fixtures, "nilpotent-amalgam-basis").witness_set), G));
}
