#ifndef RANKFORGE_CATALOG_HPP_
#define RANKFORGE_CATALOG_HPP_

// Closed-form group, semigroup and monoid ranks for relatively free groups
// and surface groups, the monoid/semigroup rank conversions, and a table of
// worked examples used as regression fixtures.

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "words.hpp"

namespace rankforge {

  // A natural number or infinity.
  class Rank {
   public:
    constexpr Rank(std::size_t value) noexcept : _value(value) {}  // NOLINT

    [[nodiscard]] static constexpr Rank infinite() noexcept {
      return Rank(std::numeric_limits<std::size_t>::max());
    }
    [[nodiscard]] constexpr bool is_infinite() const noexcept {
      return _value == std::numeric_limits<std::size_t>::max();
    }
    [[nodiscard]] constexpr std::size_t value() const {
      if (is_infinite()) {
        throw InvalidInput("infinite rank has no finite value");
      }
      return _value;
    }
    [[nodiscard]] std::string to_string() const {
      return is_infinite() ? "inf" : std::to_string(_value);
    }

    constexpr auto operator<=>(Rank const&) const = default;

   private:
    std::size_t _value;
  };

  struct RankTriple {
    Rank group_rank;
    Rank semigroup_rank;
    Rank monoid_rank;

    bool operator==(RankTriple const&) const = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Monoid and semigroup ranks
  ////////////////////////////////////////////////////////////////////////

  // Monoid rank of a group from its semigroup rank: one less for the trivial
  // group (whose only semigroup basis is {1}), equal otherwise.
  [[nodiscard]] inline std::size_t monoid_rank_from_semigroup(std::size_t semigroup_rank,
                                                              bool is_trivial_group) {
    if (semigroup_rank == 0) {
      throw InvalidInput("a group has semigroup rank at least 1");
    }
    return is_trivial_group ? semigroup_rank - 1 : semigroup_rank;
  }

  // Semigroup rank of a monoid M from its monoid rank. `one_decomposable`
  // says whether 1 lies in (M \ {1})^+, which the caller must supply.
  [[nodiscard]] inline Rank monoid_semigroup_conversion(Rank monoid_rank,
                                                        bool one_decomposable,
                                                        bool finitely_generated) {
    if (!finitely_generated) {
      return Rank::infinite();
    }
    if (monoid_rank.is_infinite()) {
      throw InvalidInput("a finitely generated monoid has finite monoid rank");
    }
    return one_decomposable ? monoid_rank : Rank(monoid_rank.value() + 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Relatively free groups
  ////////////////////////////////////////////////////////////////////////

  // A nontrivial variety either satisfies x^k = 1 for some k (periodic) or
  // contains the infinite cyclic group.
  enum class VarietyKind { periodic, contains_z };

  [[nodiscard]] inline RankTriple variety_rank(VarietyKind kind, std::size_t n) {
    if (n == 0) {
      return {0, 1, 0};  // the trivial group
    }
    std::size_t s = kind == VarietyKind::periodic ? n : n + 1;
    return {n, s, s};
  }

  ////////////////////////////////////////////////////////////////////////
  // Surface groups
  ////////////////////////////////////////////////////////////////////////

  struct SurfaceDescriptor {
    std::size_t genus      = 0;
    bool        orientable = true;
  };

  struct SurfaceInfo {
    Presentation presentation;
    RankTriple   ranks{0, 1, 0};
    // Non-orientable: positive-word witnesses from the relator a_1^2 ... a_g^2.
    std::optional<WitnessTable> witnesses;
    // Orientable, genus >= 1: the 2g+1 element semigroup generating set.
    std::optional<AugmentResult> augmented;
  };

  // Orientable genus g: generators a_1, b_1, ..., a_g, b_g are letters
  // 0, 1, ..., 2g-1 and the relator is [a_1,b_1] ... [a_g,b_g].
  [[nodiscard]] inline Presentation surface_presentation(SurfaceDescriptor s) {
    Presentation p;
    if (s.orientable) {
      p.rank = 2 * s.genus;
      if (s.genus > 0) {
        Word r;
        for (std::size_t i = 0; i < s.genus; ++i) {
          r = concat(r, commutator(Word{gen(2 * i)}, Word{gen(2 * i + 1)}));
        }
        p.relators.push_back(r);
      }
    } else {
      if (s.genus == 0) {
        throw InvalidInput("a non-orientable surface has genus at least 1");
      }
      p.rank = s.genus;
      std::vector<Letter> r;
      for (std::size_t i = 0; i < s.genus; ++i) {
        r.push_back(gen(i));
        r.push_back(gen(i));
      }
      p.relators.emplace_back(std::move(r));
    }
    return p;
  }

  [[nodiscard]] inline SurfaceInfo surface_info(SurfaceDescriptor s) {
    SurfaceInfo info;
    info.presentation = surface_presentation(s);
    std::size_t const g = s.genus;
    if (s.orientable) {
      if (g == 0) {
        info.ranks = {0, 1, 0};  // sphere
      } else {
        info.ranks     = {2 * g, 2 * g + 1, 2 * g + 1};
        info.augmented = augment_to_semigroup_gens(2 * g);
      }
    } else {
      info.ranks     = {g, g, g};
      info.witnesses = positive_inverse_witnesses(info.presentation);
    }
    return info;
  }

  ////////////////////////////////////////////////////////////////////////
  // Worked examples
  ////////////////////////////////////////////////////////////////////////

  struct Fixture {
    std::string id;
    std::string claim;

    // A finite subset of an abelian group, and when the group is Z the same
    // subset as powers of one free generator.
    std::optional<AbelianGroup> group;
    std::vector<AbelianElement> elements;
    std::vector<Word>           free_words;
    std::size_t                 free_rank = 0;

    std::optional<Presentation> presentation;
    bool                        nilpotent = false;
    std::optional<AbelianGroup> abelianization;

    std::optional<std::size_t> group_rank;
    std::optional<std::size_t> semigroup_rank;
    std::optional<bool>        group_generates;
    std::optional<bool>        semigroup_generates;
    std::optional<bool>        semigroup_basis;
    // true: no proper subset of `elements` generates as a semigroup
    std::optional<bool>        no_subset_basis;

    // A claimed semigroup generating set over the presentation generators.
    std::vector<Word> witness_set;
    // false when the claim rests on relations this library cannot check
    bool verified = true;
  };

  namespace detail {
    inline AbelianElement integer(long long v) {
      return {{BigInt(v)}, {}};
    }
  }  // namespace detail

  // Word a^k for k != 0 over one generator.
  [[nodiscard]] inline Word power_of_generator(long long k) {
    Letter l = k < 0 ? inv(0) : gen(0);
    return power(Word{l}, static_cast<std::size_t>(k < 0 ? -k : k));
  }

  // Group G = < a, b, c, d | c [b,a], [a,c], [b,c], c^{-1} d^2 >: the free
  // class-2 nilpotent group on a, b amalgamated with <d> along [a,b] = d^2.
  [[nodiscard]] inline Presentation nilpotent_amalgam_presentation() {
    using namespace literals;
    return {4, {"cbaBA"_w, "acAC"_w, "bcBC"_w, "Cdd"_w}};
  }

  [[nodiscard]] inline std::vector<Fixture> worked_examples() {
    using namespace literals;
    std::vector<Fixture> out;
    AbelianGroup const   Z = AbelianGroup::free(1);

    {
      Fixture f;
      f.id    = "z-basis-2-3";
      f.claim = "{2, -3} is a semigroup basis of Z containing no group basis";
      f.group = Z;
      f.elements = {detail::integer(2), detail::integer(-3)};
      f.free_words = {power_of_generator(2), power_of_generator(-3)};
      f.free_rank  = 1;
      f.group_rank = 1;
      f.semigroup_rank      = 2;
      f.group_generates     = true;
      f.semigroup_generates = true;
      f.semigroup_basis     = true;
      out.push_back(std::move(f));
    }
    {
      Fixture f;
      f.id    = "z-no-subset-basis";
      f.claim = "{-6, 2, 3} semigroup-generates Z but contains no semigroup basis";
      f.group = Z;
      f.elements   = {detail::integer(-6), detail::integer(2), detail::integer(3)};
      f.free_words = {power_of_generator(-6), power_of_generator(2),
                      power_of_generator(3)};
      f.free_rank  = 1;
      f.group_rank = 1;
      f.semigroup_rank      = 2;
      f.group_generates     = true;
      f.semigroup_generates = true;
      f.semigroup_basis     = false;
      f.no_subset_basis     = true;
      out.push_back(std::move(f));
    }
    {
      Fixture f;
      f.id    = "nilpotent-amalgam";
      f.claim = "torsion-free nilpotent group with abelianization Z^2 x Z_2 and "
                "equal group and semigroup rank 3";
      f.presentation   = nilpotent_amalgam_presentation();
      f.nilpotent      = true;
      f.abelianization = AbelianGroup(2, {BigInt(2)});
      f.group_rank     = 3;
      f.semigroup_rank = 3;
      f.witness_set    = {"a"_w, "b"_w, "ABD"_w};
      f.verified       = false;  // needs d^2 = [a,b] in G
      out.push_back(std::move(f));
    }
    {
      Fixture f;
      f.id    = "commutator-square";
      f.claim = "Gp<a,b | [a,b]^2> has torsion and semigroup rank = group rank + 1";
      f.presentation   = Presentation{2, {power("abAB"_w, 2)}};
      f.abelianization = AbelianGroup::free(2);
      f.group_rank     = 2;
      f.semigroup_rank = 3;
      out.push_back(std::move(f));
    }
    {
      Fixture f;
      f.id    = "z-x-z2-basis";
      f.claim = "{(1,0), (0,1)} is a group basis of Z x Z_2 but not a "
                "semigroup basis, although the two ranks agree";
      f.group               = AbelianGroup(1, {BigInt(2)});
      f.elements            = {f.group->from_coordinates({1, 0}),
                            f.group->from_coordinates({0, 1})};
      f.group_rank          = 2;
      f.semigroup_rank      = 2;
      f.group_generates     = true;
      f.semigroup_generates = false;
      f.semigroup_basis     = false;
      out.push_back(std::move(f));
    }
    {
      Fixture f;
      f.id    = "nilpotent-amalgam-basis";
      f.claim = "{a, b, d} is a group basis of the nilpotent amalgam but not a "
                "semigroup basis";
      f.presentation   = nilpotent_amalgam_presentation();
      f.nilpotent      = true;
      f.abelianization = AbelianGroup(2, {BigInt(2)});
      f.group_rank     = 3;
      f.semigroup_rank = 3;
      f.witness_set    = {"a"_w, "b"_w, "d"_w};
      f.verified       = false;  // non-generation in G is not decidable here
      out.push_back(std::move(f));
    }
    {
      Fixture f;
      f.id    = "klein-bottle";
      f.claim = "the Klein bottle group Gp<a,b | a^2 b^2> has equal group and "
                "semigroup rank 2";
      f.presentation   = Presentation{2, {"aabb"_w}};
      f.abelianization = AbelianGroup(1, {BigInt(2)});
      f.group_rank     = 2;
      f.semigroup_rank = 2;
      f.witness_set    = {"a"_w, "b"_w};
      out.push_back(std::move(f));
    }
    return out;
  }

  [[nodiscard]] inline Fixture const& find_fixture(std::vector<Fixture> const& fixtures,
                                                   std::string const&          id) {
    for (auto const& f : fixtures) {
      if (f.id == id) {
        return f;
      }
    }
    throw InvalidInput("unknown fixture \"" + id + "\"");
  }

  // Claims recorded as open rather than computed.
  [[nodiscard]] inline std::vector<std::string> open_questions() {
    return {"whether every finitely generated nilpotent group whose "
            "abelianization has torsion has equal group and semigroup rank"};
  }

}  // namespace rankforge

#endif  // RANKFORGE_CATALOG_HPP_
