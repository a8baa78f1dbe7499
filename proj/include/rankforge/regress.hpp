#ifndef RANKFORGE_REGRESS_HPP_
#define RANKFORGE_REGRESS_HPP_

// Recomputes every worked example with the live decision procedures and
// compares against the recorded values. Fixtures whose witness sets rest on
// relations that cannot be checked here only get bound-consistency checks.

#include <cstddef>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "analyzer.hpp"
#include "catalog.hpp"
#include "constructions.hpp"
#include "free_group.hpp"

namespace rankforge {

  struct RegressRow {
    std::string fixture;
    std::string check;
    std::string expected;
    std::string computed;
    bool        pass = false;
  };

  namespace detail {
    inline std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    template <typename T>
    std::vector<std::vector<T>> proper_nonempty_subsets(std::vector<T> const& v) {
      std::vector<std::vector<T>> out;
      std::size_t const           n = v.size();
      for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
        std::vector<T> s;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (std::size_t(1) << i)) {
            s.push_back(v[i]);
          }
        }
        out.push_back(std::move(s));
      }
      return out;
    }

    inline void check_subset_fixture(Fixture const& f, std::vector<RegressRow>& rows) {
      auto add = [&](std::string check, std::string expected, std::string computed) {
        bool pass = expected == computed;
        rows.push_back({f.id, std::move(check), std::move(expected),
                        std::move(computed), pass});
      };
      auto const& G = *f.group;
      auto        v = analyze_abelian_subset(f.elements, G);
      if (f.group_generates) {
        add("group generates (abelian)", yes_no(*f.group_generates),
            yes_no(v.group_generates));
      }
      if (f.semigroup_generates) {
        add("semigroup generates (abelian)", yes_no(*f.semigroup_generates),
            yes_no(v.generates));
      }
      if (f.semigroup_basis) {
        add("semigroup basis (abelian)", yes_no(*f.semigroup_basis), yes_no(v.basis));
      }
      if (f.group_rank) {
        add("group rank", std::to_string(*f.group_rank),
            std::to_string(group_rank_abelian(G)));
      }
      if (f.semigroup_rank) {
        add("semigroup rank", std::to_string(*f.semigroup_rank),
            std::to_string(semigroup_rank_abelian(G)));
      }
      if (!f.free_words.empty()) {
        auto fv = analyze_free_subset(f.free_words, f.free_rank);
        if (f.semigroup_generates) {
          add("semigroup generates (automata)", yes_no(*f.semigroup_generates),
              yes_no(fv.generates));
        }
        if (f.semigroup_basis) {
          add("semigroup basis (automata)", yes_no(*f.semigroup_basis),
              yes_no(fv.basis));
        }
      }
      if (f.no_subset_basis && *f.no_subset_basis) {
        std::size_t accepted = 0;
        for (auto const& s : proper_nonempty_subsets(f.elements)) {
          accepted += decide_semigroup_generates_abelian(s, G) ? 1 : 0;
        }
        if (!f.free_words.empty()) {
          for (auto const& s : proper_nonempty_subsets(f.free_words)) {
            accepted += decide_semigroup_generates_free(s, f.free_rank) ? 1 : 0;
          }
        }
        add("proper subsets that generate", "0", std::to_string(accepted));
      }
    }

    inline void check_presentation_fixture(Fixture const&           f,
                                           std::vector<RegressRow>& rows) {
      auto const& P   = *f.presentation;
      auto        rep = rank_bounds(P, StructuralFlags{f.nilpotent});
      auto bounds = [](std::size_t lo, std::size_t hi) {
        return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
      };
      if (f.abelianization) {
        rows.push_back({f.id, "abelianization", f.abelianization->to_string(),
                        rep.abelianization.to_string(),
                        *f.abelianization == rep.abelianization});
      }
      if (f.group_rank) {
        auto r = *f.group_rank;
        rows.push_back({f.id, "group rank within bounds", std::to_string(r),
                        bounds(rep.group_rank_lower, rep.group_rank_upper),
                        rep.group_rank_lower <= r && r <= rep.group_rank_upper});
      }
      if (f.semigroup_rank) {
        auto r = *f.semigroup_rank;
        rows.push_back({f.id, "semigroup rank within bounds", std::to_string(r),
                        bounds(rep.semigroup_rank_lower, rep.semigroup_rank_upper),
                        rep.semigroup_rank_lower <= r
                            && r <= rep.semigroup_rank_upper});
      }
      if (f.witness_set.empty()) {
        return;
      }
      if (!f.verified) {
        rows.push_back({f.id, "witness set", "unchecked",
                        "bound-consistency only", true});
        return;
      }
      // Witness sets of verified fixtures are the presentation generators;
      // their inverses must be positive words modulo the relators.
      bool ok = false;
      try {
        ok = verify_conjugate_of_relator(P, positive_inverse_witnesses(P));
      } catch (InvalidInput const&) {
        ok = false;
      }
      rows.push_back({f.id, "positive inverse witnesses verify", "true", yes_no(ok), ok});
    }
  }  // namespace detail

  [[nodiscard]] inline std::vector<RegressRow> regress() {
    std::vector<RegressRow> rows;
    for (auto const& f : worked_examples()) {
      if (f.group) {
        detail::check_subset_fixture(f, rows);
      }
      if (f.presentation) {
        detail::check_presentation_fixture(f, rows);
      }
    }
    return rows;
  }

}  // namespace rankforge

#endif  // RANKFORGE_REGRESS_HPP_
