#include <catch_amalgamated.hpp>

#include "rankforge/abelian.hpp"
#include "rankforge/catalog.hpp"
#include "rankforge/constructions.hpp"
#include "rankforge/error.hpp"
#include "rankforge/free_group.hpp"
#include "support.hpp"

using namespace rankforge;
using namespace rankforge::literals;

TEST_CASE("augmentation with the inverse product", "[constructions]") {
  auto r1 = augment_to_semigroup_gens(1);
  CHECK(r1.added == "A"_w);
  CHECK(r1.witnesses.at(inv(0)).word == "b"_w);  // the added element, symbol 1

  auto r2 = augment_to_semigroup_gens(2);
  CHECK(r2.added == "BA"_w);
  CHECK(r2.generating_set == std::vector<Word>{"a"_w, "b"_w, "BA"_w});
  // a^-1 -> b . (b^-1 a^-1), b^-1 -> (b^-1 a^-1) . a over symbols a, b, c
  CHECK(r2.witnesses.at(inv(0)).word == "bc"_w);
  CHECK(r2.witnesses.at(inv(1)).word == "ca"_w);

  auto r3 = augment_to_semigroup_gens(3);
  auto w  = r3.witnesses.at(inv(1));
  CHECK(w.word == "cda"_w);
  CHECK(to_string(expand(w.word, r3.generating_set)) == "cCBAa");
  CHECK(freely_equal(expand(w.word, r3.generating_set), "B"_w));

  CHECK_THROWS_AS(augment_to_semigroup_gens(0), InvalidInput);
}

TEST_CASE("augmentation witnesses verify for n <= 8", "[constructions][property]") {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto r = augment_to_semigroup_gens(n);
    REQUIRE(r.witnesses.size() == n);
    for (auto const& w : r.witnesses) {
      REQUIRE(is_positive(w.word));
    }
    REQUIRE(verify_free_reduction(r.witnesses, free_basis(n), r.generating_set));
  }
  // arbitrary input words
  for (int t = 0; t < 50; ++t) {
    std::vector<Word> gens;
    for (int i = 0; i < testing::uniform(1, 4); ++i) {
      gens.push_back(testing::random_reduced_word(3, 1, 5));
    }
    auto r = augment_to_semigroup_gens(gens);
    REQUIRE(verify_free_reduction(r.witnesses, gens, r.generating_set));
  }
}

TEST_CASE("verifier rejects bad witnesses", "[constructions]") {
  auto r = augment_to_semigroup_gens(2);
  WitnessTable bad;
  bad.add({inv(0), "cb"_w, {}, std::nullopt});
  CHECK_FALSE(verify_free_reduction(bad, free_basis(2), r.generating_set));
  WitnessTable negative;
  negative.add({inv(0), "A"_w, {}, std::nullopt});
  CHECK_FALSE(verify_free_reduction(negative, free_basis(2), r.generating_set));
}

TEST_CASE("augmented free bases semigroup-generate", "[constructions][free_group]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = augment_to_semigroup_gens(n);
    CHECK(decide_semigroup_generates_free(r.generating_set, n));
    CHECK_FALSE(decide_semigroup_generates_free(free_basis(n), n));
  }
}

TEST_CASE("dropping a generator of finite order", "[constructions]") {
  auto r = torsion_shrink(2, 2);
  CHECK(r.generating_set == std::vector<Word>{"a"_w, "BA"_w});
  CHECK(r.order == std::vector<std::size_t>{0, 1});

  AbelianGroup zz2(1, {BigInt(2)});
  std::vector<AbelianElement> images{zz2.from_coordinates({1, 0}),
                                     zz2.from_coordinates({0, 1})};
  CHECK(verify_in_abelian_group(r.witnesses, free_basis(2), r.generating_set, images, zz2));
  // (-1,1) + (1,0) = (0,1) = b^-1
  CHECK(r.witnesses.at(inv(1)).word == "ba"_w);

  auto one = torsion_shrink(1, 2);
  CHECK(one.generating_set == std::vector<Word>{"A"_w});
  CHECK(one.witnesses.at(gen(0)).word == "a"_w);

  auto five = torsion_shrink(1, 5);
  CHECK(five.witnesses.at(gen(0)).word == "aaaa"_w);
  AbelianGroup z5(0, {BigInt(5)});
  std::vector<AbelianElement> g5{z5.from_coordinates({1})};
  CHECK(verify_in_abelian_group(five.witnesses, free_basis(1), five.generating_set, g5, z5));

  CHECK_THROWS_AS(torsion_shrink(2, 1), InvalidInput);
  CHECK_THROWS_AS(torsion_shrink(0, 2), InvalidInput);
  CHECK_THROWS_AS(torsion_shrink(free_basis(2), 2, 2), InvalidInput);
}

TEST_CASE("torsion index is moved last", "[constructions]") {
  // Z_3 x Z: the finite-order generator is given first
  AbelianGroup G(1, {BigInt(3)});
  std::vector<AbelianElement> images{G.from_coordinates({0, 1}), G.from_coordinates({1, 0})};
  auto r = torsion_shrink(free_basis(2), 0, 3);
  CHECK(r.order == std::vector<std::size_t>{1, 0});
  CHECK(r.generating_set.size() == 2);
  CHECK(verify_in_abelian_group(r.witnesses, free_basis(2), r.generating_set, images, G));

  std::vector<AbelianElement> S;
  for (auto const& s : r.generating_set) {
    S.push_back(evaluate(s, images, G));
  }
  CHECK(decide_semigroup_basis_abelian(S, G));
}

TEST_CASE("torsion shrink witnesses hold in random finite abelian models",
          "[constructions][property]") {
  for (int t = 0; t < 60; ++t) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(1, 4));
    std::size_t m = static_cast<std::size_t>(testing::uniform(2, 6));
    std::size_t k = static_cast<std::size_t>(testing::uniform(0, static_cast<long long>(n) - 1));
    // generator k has order dividing m; the others are free
    AbelianGroup G(n - 1, {BigInt(m)});
    std::vector<AbelianElement> images;
    std::size_t                 next_free = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<BigInt> coords(n, 0);
      if (i == k) {
        coords[n - 1] = 1;
      } else {
        coords[next_free++] = 1;
      }
      images.push_back(G.from_coordinates(coords));
    }
    auto r = torsion_shrink(free_basis(n), k, m);
    REQUIRE(verify_in_abelian_group(r.witnesses, free_basis(n), r.generating_set, images, G));
    for (auto const& w : r.witnesses) {
      REQUIRE(is_positive(w.word));
    }
  }
}

TEST_CASE("positive inverse witnesses from relators", "[constructions]") {
  Presentation klein{2, {"aabb"_w}};
  auto         t = positive_inverse_witnesses(klein);
  CHECK(t.at(inv(0)).word == "abb"_w);
  CHECK(t.at(inv(1)).word == "baa"_w);
  CHECK(verify_conjugate_of_relator(klein, t));

  // the other occurrences give valid witnesses too
  WitnessTable alt;
  alt.add({inv(0), "bba"_w, {{0, "a"_w}}, std::pair{"a"_w, "bb"_w}});
  alt.add({inv(1), "aab"_w, {{0, "aab"_w}}, std::pair{"aab"_w, Word()}});
  CHECK(verify_conjugate_of_relator(klein, alt));

  Presentation g3 = surface_presentation({3, false});
  CHECK(positive_inverse_witnesses(g3).at(inv(0)).word == "abbcc"_w);

  Presentation uncovered{3, {"aabb"_w, "cAC"_w}};
  try {
    (void) positive_inverse_witnesses(uncovered);
    FAIL("expected a coverage violation");
  } catch (CoverageViolation const& e) {
    CHECK(e.generator() == 2);
    CHECK(std::string(e.what()).find('c') != std::string::npos);
  }

  // a relator equal to a single generator
  Presentation trivial{1, {"a"_w}};
  auto         tt = positive_inverse_witnesses(trivial);
  CHECK(tt.at(inv(0)).word == "a"_w);
  CHECK(verify_conjugate_of_relator(trivial, tt));
}

TEST_CASE("conjugate-of-relator verifier", "[constructions][property]") {
  for (std::size_t g = 1; g <= 4; ++g) {
    auto P = surface_presentation({g, false});
    REQUIRE(verify_conjugate_of_relator(P, positive_inverse_witnesses(P)));
  }
  Presentation klein{2, {"aabb"_w}};
  WitnessTable wrong;
  wrong.add({inv(0), "ab"_w, {{0, Word()}}, std::nullopt});
  CHECK_FALSE(verify_conjugate_of_relator(klein, wrong));

  // random positive relators covering every generator
  for (int t = 0; t < 50; ++t) {
    std::size_t       n = static_cast<std::size_t>(testing::uniform(1, 4));
    std::vector<Word> rels;
    std::vector<Letter> cover;
    for (std::size_t i = 0; i < n; ++i) {
      cover.push_back(gen(i));
    }
    for (int k = 0; k < testing::uniform(0, 4); ++k) {
      cover.push_back(gen(static_cast<std::size_t>(testing::uniform(0, static_cast<long long>(n) - 1))));
    }
    std::shuffle(cover.begin(), cover.end(), testing::rng());
    rels.emplace_back(cover);
    rels.push_back(testing::random_reduced_word(n, 0, 4));
    Presentation P{n, rels};
    REQUIRE(verify_conjugate_of_relator(P, positive_inverse_witnesses(P)));
  }
}
