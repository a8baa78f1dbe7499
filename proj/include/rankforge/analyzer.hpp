#ifndef RANKFORGE_ANALYZER_HPP_
#define RANKFORGE_ANALYZER_HPP_

// Rank bounds for the group defined by a finite presentation. Each rule
// whose hypothesis holds tightens the bounds (lowers combine by max, uppers
// by min) and is listed in the report with a short justification.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "constructions.hpp"
#include "int_matrix.hpp"

namespace rankforge {

  struct StructuralFlags {
    bool nilpotent = false;  // asserted by the caller, never checked
  };

  struct FiredRule {
    std::string name;
    std::string justification;
    bool        conditional = false;  // depends on a caller assertion

    bool operator==(FiredRule const&) const = default;
  };

  struct RankReport {
    std::size_t group_rank_lower     = 0;
    std::size_t group_rank_upper     = 0;
    std::size_t semigroup_rank_lower = 0;
    std::size_t semigroup_rank_upper = 0;
    bool        group_rank_decided     = false;
    bool        semigroup_rank_decided = false;
    AbelianGroup           abelianization;
    StructuralFlags        flags;
    std::vector<FiredRule> rules_fired;

    [[nodiscard]] bool fired(std::string const& name) const {
      return std::any_of(rules_fired.begin(), rules_fired.end(), [&](auto& r) {
        return r.name == name;
      });
    }

    bool operator==(RankReport const& other) const {
      return group_rank_lower == other.group_rank_lower
             && group_rank_upper == other.group_rank_upper
             && semigroup_rank_lower == other.semigroup_rank_lower
             && semigroup_rank_upper == other.semigroup_rank_upper
             && group_rank_decided == other.group_rank_decided
             && semigroup_rank_decided == other.semigroup_rank_decided
             && abelianization == other.abelianization
             && flags.nilpotent == other.flags.nilpotent
             && rules_fired == other.rules_fired;
    }
  };

  // rank x |relators| matrix of exponent sums.
  [[nodiscard]] inline IntMatrix exponent_sum_matrix(Presentation const& P) {
    P.validate();
    IntMatrix m(P.rank, P.relators.size());
    for (std::size_t j = 0; j < P.relators.size(); ++j) {
      for (auto l : P.relators[j]) {
        m(l.generator, j) += l.sign();
      }
    }
    return m;
  }

  [[nodiscard]] inline AbelianGroup abelianization(Presentation const& P) {
    return abelian_from_relations(exponent_sum_matrix(P));
  }

  // Every generator occurs in some relator that is a positive word.
  [[nodiscard]] inline bool positive_relators_cover(Presentation const& P) {
    std::vector<bool> seen(P.rank, false);
    for (auto const& r : P.relators) {
      if (is_positive(r)) {
        for (auto l : r) {
          seen[l.generator] = true;
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  [[nodiscard]] inline RankReport rank_bounds(Presentation const& P,
                                              StructuralFlags     flags = {}) {
    constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();
    RankReport            rep;
    rep.flags          = flags;
    rep.abelianization = abelianization(P);
    rep.group_rank_upper     = unbounded;
    rep.semigroup_rank_upper = unbounded;

    auto& gl = rep.group_rank_lower;
    auto& gu = rep.group_rank_upper;
    auto& sl = rep.semigroup_rank_lower;
    auto& su = rep.semigroup_rank_upper;

    // rk_G <= rk_S <= rk_G + 1, and rk_S >= 1 for any group
    auto propagate = [&] {
      sl = std::max({sl, gl, std::size_t(1)});
      if (gu != unbounded) {
        su = std::min(su, gu + 1);
      }
      gu = std::min(gu, su);
      if (sl > 0) {
        gl = std::max(gl, sl - 1);
      }
    };
    auto fire = [&](std::string name, std::string why, bool conditional = false) {
      rep.rules_fired.push_back({std::move(name), std::move(why), conditional});
      propagate();
    };
    auto decide_group = [&](std::size_t v) {
      gl = std::max(gl, v);
      gu = std::min(gu, v);
    };
    auto decide_semigroup = [&](std::size_t v) {
      sl = std::max(sl, v);
      su = std::min(su, v);
    };

    std::size_t const n  = P.rank;
    auto const&       ab = rep.abelianization;

    gu = std::min(gu, n);
    fire("R1",
         "group rank is at most the number of generators; semigroup rank is "
         "at most group rank + 1 (append the inverse of the product of a "
         "group generating set)");

    gl = std::max(gl, group_rank_abelian(ab));
    fire("R2",
         "group rank is at least the group rank of the abelianization "
         "(images of generators generate any quotient)");

    if (ab.free_rank() == n && ab.is_torsion_free()) {
      decide_group(n);
      decide_semigroup(n + 1);
      fire("R3",
           "the abelianization is free abelian of rank n = number of "
           "generators, so group rank n and semigroup rank n + 1 (a free "
           "abelian quotient of rank n needs n + 1 semigroup generators)");
    }

    if (n >= 1 && positive_relators_cover(P)) {
      su = std::min(su, n);
      fire("R4",
           "every generator occurs in a positive relator u a v, so "
           "a^{-1} = v u is a positive word and semigroup rank is at most n");
    }

    if (flags.nilpotent) {
      decide_group(group_rank_abelian(ab));
      fire("R5",
           "nilpotent (asserted): the derived subgroup consists of "
           "non-generators, so group rank equals that of the abelianization",
           true);
      if (ab.is_torsion_free()) {
        decide_semigroup(gl + 1);
        fire("R6",
             "nilpotent (asserted) with torsion-free abelianization: "
             "semigroup rank = group rank + 1",
             true);
      }
    }

    rep.group_rank_decided     = gl == gu;
    rep.semigroup_rank_decided = sl == su;
    return rep;
  }

}  // namespace rankforge

#endif  // RANKFORGE_ANALYZER_HPP_
