#include <catch_amalgamated.hpp>

#include "rankforge/abelian.hpp"
#include "rankforge/constructions.hpp"
#include "rankforge/error.hpp"
#include "support.hpp"

using namespace rankforge;
using namespace rankforge::literals;

namespace {
  AbelianElement z(long long v) {
    return {{BigInt(v)}, {}};
  }

  std::vector<AbelianElement> integers(std::vector<long long> const& vs) {
    std::vector<AbelianElement> out;
    for (auto v : vs) {
      out.push_back(z(v));
    }
    return out;
  }

  std::vector<AbelianElement> all_elements(AbelianGroup const& G) {
    REQUIRE(G.is_finite());
    std::vector<AbelianElement> out{G.zero()};
    for (std::size_t i = 0; i < G.torsion_count(); ++i) {
      std::vector<AbelianElement> next;
      for (auto const& x : out) {
        for (BigInt k = 0; k < G.invariant_factors()[i]; ++k) {
          auto y            = x;
          y.torsion_part[i] = k;
          next.push_back(y);
        }
      }
      out = std::move(next);
    }
    return out;
  }

  // Smallest size of a subset whose semigroup closure is all of a finite G.
  std::size_t brute_force_semigroup_rank(AbelianGroup const& G) {
    auto        elems = all_elements(G);
    std::size_t n     = elems.size();
    std::size_t best  = n;
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      std::vector<AbelianElement> X;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t(1) << i)) {
          X.push_back(elems[i]);
        }
      }
      if (X.size() < best && bfs_closure_oracle(X, G, 1).size() == n) {
        best = X.size();
      }
    }
    return best;
  }
}  // namespace

TEST_CASE("invariant factor normal form", "[abelian]") {
  AbelianGroup z6(0, {BigInt(2), BigInt(3)});
  CHECK(z6.free_rank() == 0);
  CHECK(z6.invariant_factors() == std::vector<BigInt>{6});
  CHECK(z6.to_string() == "Z_6");

  AbelianGroup g(1, {BigInt(4), BigInt(6), BigInt(1)});
  CHECK(g.invariant_factors() == std::vector<BigInt>{2, 12});
  CHECK(g.to_string() == "Z x Z_2 x Z_12");
  CHECK(AbelianGroup::free(2).to_string() == "Z^2");
  CHECK(AbelianGroup().to_string() == "1");
  CHECK(AbelianGroup().is_trivial());
  CHECK(AbelianGroup(0, {BigInt(1)}).is_trivial());
  CHECK_THROWS_AS(AbelianGroup(0, {BigInt(0)}), InvalidInput);
  CHECK_THROWS_AS(AbelianGroup(0, {BigInt(-2)}), InvalidInput);
}

TEST_CASE("group arithmetic", "[abelian]") {
  AbelianGroup G(1, {BigInt(4)});
  auto         x = G.from_coordinates({2, 3});
  auto         y = G.from_coordinates({-1, 3});
  CHECK(G.add(x, y) == G.from_coordinates({1, 2}));
  CHECK(G.add(x, G.negate(x)) == G.zero());
  CHECK(G.element({BigInt(0)}, {BigInt(-1)}) == G.from_coordinates({0, 3}));
  CHECK_THROWS_AS(G.from_coordinates({1}), InvalidInput);

  std::vector<AbelianElement> images{G.from_coordinates({1, 0}), G.from_coordinates({0, 1})};
  CHECK(evaluate("abbB"_w, images, G) == G.from_coordinates({1, 1}));
  CHECK(evaluate("BBBBB"_w, images, G) == G.from_coordinates({0, 3}));
}

TEST_CASE("parsing groups and elements", "[abelian]") {
  auto d = parse_group("Z^2xZ_4");
  CHECK(d.group() == AbelianGroup(2, {BigInt(4)}));
  CHECK(parse_group("Z x Z_2 x Z_3").group() == AbelianGroup(1, {BigInt(6)}));
  CHECK(parse_group("1").group().is_trivial());
  CHECK(parse_group("Z").group() == AbelianGroup::free(1));
  CHECK_THROWS_AS(parse_group("Q"), InvalidInput);
  CHECK_THROWS_AS(parse_group("Z_0"), InvalidInput);
  CHECK_THROWS_AS(parse_group(""), InvalidInput);

  auto list = parse_element_list("(1,0,0);(0,1,1)");
  REQUIRE(list.size() == 2);
  CHECK(list[1] == std::vector<BigInt>{0, 1, 1});
  CHECK(parse_element_list("2;-3") == std::vector<std::vector<BigInt>>{{2}, {-3}});
  CHECK_THROWS_AS(parse_element_list("(1,2"), InvalidInput);
  CHECK_THROWS_AS(parse_element_list("1,x"), InvalidInput);

  // Z_2 x Z_3 written by the user maps onto Z_6; (1,1) has order 6
  auto d6 = parse_group("Z_2xZ_3");
  auto g  = d6.to_group({BigInt(1), BigInt(1)});
  auto x  = g;
  int  order = 1;
  while (x != d6.group().zero()) {
    x = d6.group().add(x, g);
    ++order;
  }
  CHECK(order == 6);
  CHECK_THROWS_AS(d6.to_group({BigInt(1)}), InvalidInput);
}

TEST_CASE("abelianization from relations", "[abelian]") {
  CHECK(abelian_from_relations(IntMatrix{{2}, {2}}) == AbelianGroup(1, {BigInt(2)}));
  CHECK(abelian_from_relations(IntMatrix(2, 0)) == AbelianGroup::free(2));
  CHECK(abelian_from_relations(IntMatrix{{1, 0}, {0, 1}}).is_trivial());
}

TEST_CASE("ranks of abelian groups", "[abelian]") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto G = AbelianGroup::free(n);
    CHECK(group_rank_abelian(G) == n);
    CHECK(semigroup_rank_abelian(G) == n + 1);
  }
  AbelianGroup zz2(1, {BigInt(2)});
  CHECK(group_rank_abelian(zz2) == 2);
  CHECK(semigroup_rank_abelian(zz2) == 2);
  CHECK(semigroup_rank_abelian(AbelianGroup(0, {BigInt(5)})) == 1);
}

TEST_CASE("semigroup rank gap", "[abelian][property]") {
  for (int t = 0; t < 200; ++t) {
    std::vector<BigInt> factors;
    for (int i = 0; i < testing::uniform(0, 3); ++i) {
      factors.emplace_back(testing::uniform(1, 12));
    }
    AbelianGroup G(static_cast<std::size_t>(testing::uniform(0, 4)), factors);
    auto         g = group_rank_abelian(G);
    auto         s = semigroup_rank_abelian(G);
    REQUIRE((s == g || s == g + 1));
    REQUIRE((s == g + 1) == G.is_torsion_free());
  }
}

TEST_CASE("semigroup rank of small finite groups by exhaustion", "[abelian][property]") {
  for (auto factors : std::vector<std::vector<BigInt>>{
           {2}, {3}, {4}, {6}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}}) {
    AbelianGroup G(0, factors);
    INFO(G.to_string());
    REQUIRE(brute_force_semigroup_rank(G) == semigroup_rank_abelian(G));
  }
}

TEST_CASE("semigroup generation of subsets", "[abelian]") {
  auto Z = AbelianGroup::free(1);
  auto v = analyze_abelian_subset(integers({2, -3}), Z);
  CHECK(v.group_generates);
  CHECK(v.generates);
  CHECK(v.basis);
  REQUIRE(v.certificate);
  // certificate refers to the sorted elements -3, 2
  CHECK(v.elements == integers({-3, 2}));
  CHECK(v.certificate->coefficients == std::vector<BigInt>{2, 3});

  CHECK(decide_semigroup_generates_abelian(integers({-6, 2, 3}), Z));
  CHECK_FALSE(decide_semigroup_basis_abelian(integers({-6, 2, 3}), Z));
  CHECK_FALSE(decide_semigroup_generates_abelian(integers({-6, 2}), Z));
  CHECK_FALSE(decide_semigroup_generates_abelian(integers({-6, 3}), Z));
  CHECK_FALSE(decide_semigroup_generates_abelian(integers({2, 3}), Z));
  CHECK_FALSE(decide_semigroup_generates_abelian(integers({}), Z));
  CHECK_FALSE(decide_semigroup_generates_abelian(integers({1}), Z));
  CHECK(decide_semigroup_basis_abelian(integers({1, -1}), Z));

  AbelianGroup zz2(1, {BigInt(2)});
  std::vector<AbelianElement> X{zz2.from_coordinates({1, 0}), zz2.from_coordinates({0, 1})};
  auto w = analyze_abelian_subset(X, zz2);
  CHECK(w.group_generates);
  CHECK_FALSE(w.generates);

  auto ts = torsion_shrink(free_basis(2), 1, 2);
  std::vector<AbelianElement> S;
  for (auto const& s : ts.generating_set) {
    S.push_back(evaluate(s, X, zz2));
  }
  CHECK(S == std::vector<AbelianElement>{zz2.from_coordinates({1, 0}),
                                         zz2.from_coordinates({-1, 1})});
  CHECK(decide_semigroup_basis_abelian(S, zz2));

  // trivial group: the identity alone is a semigroup basis
  AbelianGroup one;
  CHECK(decide_semigroup_basis_abelian(std::vector<AbelianElement>{one.zero()}, one));
  CHECK_FALSE(decide_semigroup_generates_abelian(std::vector<AbelianElement>{}, one));

  CHECK_THROWS_AS(analyze_abelian_subset(std::vector<AbelianElement>{zz2.zero()}, Z),
                  InvalidInput);
}

TEST_CASE("decision agrees with the box-closure oracle", "[abelian][property]") {
  std::vector<AbelianGroup> groups{AbelianGroup::free(1), AbelianGroup::free(2),
                                   AbelianGroup(1, {BigInt(4)})};
  int disagreements = 0;
  for (int t = 0; t < 200; ++t) {
    auto const& G = groups[static_cast<std::size_t>(t) % groups.size()];
    std::vector<AbelianElement> X;
    for (int i = 0; i < testing::uniform(1, 4); ++i) {
      X.push_back(testing::random_element(G, -3, 3));
    }
    bool decided = decide_semigroup_generates_abelian(X, G);
    bool oracle  = bfs_box_generates(X, G, 12);
    disagreements += decided == oracle ? 0 : 1;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("pruning at the box boundary loses corners", "[abelian]") {
  // 4 x1 + x2 + 3 x3 = 0 and det(x1, x3) = -1, yet (-12, 12) has every
  // predecessor outside the box of radius 12.
  auto                        Z2 = AbelianGroup::free(2);
  std::vector<AbelianElement> X{Z2.from_coordinates({-1, -2}), Z2.from_coordinates({1, -1}),
                                Z2.from_coordinates({1, 3})};
  REQUIRE(decide_semigroup_generates_abelian(X, Z2));
  CHECK_FALSE(bfs_closure_oracle(X, Z2, 12).contains(Z2.from_coordinates({-12, 12})));
  CHECK_FALSE(bfs_box_generates(X, Z2, 12, 0));
  CHECK(bfs_box_generates(X, Z2, 12, 3));
  CHECK(bfs_box_generates(X, Z2, 12));
}

TEST_CASE("box-closure oracle is exact on finite groups", "[abelian][property]") {
  AbelianGroup G(0, {BigInt(2), BigInt(6)});
  CHECK(box_size(G, 5) == 12);
  for (int t = 0; t < 100; ++t) {
    std::vector<AbelianElement> X;
    for (int i = 0; i < testing::uniform(1, 3); ++i) {
      X.push_back(testing::random_element(G, 0, 5));
    }
    REQUIRE(decide_semigroup_generates_abelian(X, G) == bfs_box_generates(X, G, 1));
    REQUIRE(decide_group_generates_abelian(X, G) == bfs_box_generates(X, G, 1));
  }
}
