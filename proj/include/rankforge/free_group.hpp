#ifndef RANKFORGE_FREE_GROUP_HPP_
#define RANKFORGE_FREE_GROUP_HPP_

// Decision procedures for finite subsets S of the free group F_n:
//
//   * semigroup generation, S^+ = F_n, by comparing the reduced forms of S^+
//     (a rational language after Benois saturation) with all reduced words;
//   * semigroup basis, generation plus |S| = n + 1;
//   * group generation, by Stallings folding of the wedge of loops spelled
//     by S.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "automata.hpp"
#include "words.hpp"

namespace rankforge {

  struct AutomatonStats {
    std::size_t flower_states        = 0;
    std::size_t flower_transitions   = 0;
    std::size_t saturation_epsilons  = 0;
    std::size_t restricted_states    = 0;
    std::size_t dfa_states           = 0;
  };

  struct FreeSubsetVerdict {
    bool           generates = false;
    bool           basis     = false;
    AutomatonStats stats;
  };

  namespace detail {
    // Distinct reduced forms, in first-occurrence order.
    inline std::vector<Word> distinct_reduced(std::span<Word const> S) {
      std::vector<Word> out;
      std::set<Word>    seen;
      for (auto const& w : S) {
        auto r = reduce(w).word();
        if (seen.insert(r).second) {
          out.push_back(std::move(r));
        }
      }
      return out;
    }
  }  // namespace detail

  // Runs the whole pipeline and reports the intermediate automaton sizes.
  [[nodiscard]] inline FreeSubsetVerdict
  analyze_free_subset(std::span<Word const> S, std::size_t rank) {
    detail::check_words(S, rank);
    auto const        distinct = detail::distinct_reduced(S);
    FreeSubsetVerdict v;

    if (rank == 0) {
      v.generates = !distinct.empty();
      v.basis     = distinct.size() == 1;  // only the empty word exists
      return v;
    }

    std::vector<Word> petals;
    std::copy_if(distinct.begin(),
                 distinct.end(),
                 std::back_inserter(petals),
                 [](Word const& w) { return !w.empty(); });
    if (petals.empty()) {
      return v;
    }

    Nfa flower                = flower_automaton(petals, rank);
    v.stats.flower_states      = flower.state_count();
    v.stats.flower_transitions = flower.transition_count();
    Nfa saturated              = benois_saturate(flower);
    v.stats.saturation_epsilons = saturated.epsilon_count();
    Nfa reduced                = restrict_to_reduced(saturated);
    v.stats.restricted_states  = reduced.state_count();
    Dfa d                      = determinize(reduced);
    v.stats.dfa_states         = d.state_count();

    v.generates = equivalent(d, all_reduced_words(rank));
    v.basis     = v.generates && distinct.size() == rank + 1;
    return v;
  }

  // S^+ = F_n. The empty word is ignored for n >= 1.
  [[nodiscard]] inline bool
  decide_semigroup_generates_free(std::span<Word const> S, std::size_t rank) {
    return analyze_free_subset(S, rank).generates;
  }

  // S^+ = F_n and S has the minimum size n + 1 (for n = 0, S = {1}).
  [[nodiscard]] inline bool
  decide_semigroup_basis_free(std::span<Word const> S, std::size_t rank) {
    return analyze_free_subset(S, rank).basis;
  }

  ////////////////////////////////////////////////////////////////////////
  // Stallings folding
  ////////////////////////////////////////////////////////////////////////

  // Folded graph of a subgroup; edges are labelled by positive generators and
  // vertex 0 is the basepoint.
  struct CoreGraph {
    struct Edge {
      std::size_t from;
      std::size_t generator;
      std::size_t to;
      auto operator<=>(Edge const&) const = default;
    };

    std::size_t       vertex_count = 1;
    std::size_t       basepoint    = 0;
    std::vector<Edge> edges;

    // The bouquet of all n generators at a single vertex.
    [[nodiscard]] bool is_rose(std::size_t rank) const {
      if (vertex_count != 1) {
        return false;
      }
      std::set<std::size_t> labels;
      for (auto const& e : edges) {
        labels.insert(e.generator);
      }
      return labels.size() == rank;
    }
  };

  [[nodiscard]] inline CoreGraph stallings_fold(std::span<Word const> S,
                                                std::size_t           rank) {
    detail::check_words(S, rank);

    std::vector<std::size_t>                        parent{0};
    std::vector<std::map<std::size_t, std::size_t>> adj(1);
    std::vector<std::pair<std::size_t, std::size_t>> merges;

    auto find = [&](std::size_t v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v         = parent[v];
      }
      return v;
    };
    auto new_vertex = [&] {
      parent.push_back(parent.size());
      adj.emplace_back();
      return parent.size() - 1;
    };
    // records x -c-> y, queueing a fold if x already has a c-edge
    auto attach = [&](std::size_t x, std::size_t c, std::size_t y) {
      auto [it, inserted] = adj[x].try_emplace(c, y);
      if (!inserted) {
        merges.emplace_back(it->second, y);
      }
    };
    auto add_edge = [&](std::size_t u, Letter l, std::size_t v) {
      attach(find(u), l.code(), find(v));
      attach(find(v), l.inverse().code(), find(u));
    };

    for (auto const& w : S) {
      auto r = reduce(w).word();
      if (r.empty()) {
        continue;
      }
      std::size_t from = 0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::size_t to = (i + 1 == r.size()) ? 0 : new_vertex();
        add_edge(from, r[i], to);
        from = to;
      }
    }

    while (!merges.empty()) {
      auto [a, b] = merges.back();
      merges.pop_back();
      a = find(a);
      b = find(b);
      if (a == b) {
        continue;
      }
      if (b == find(0)) {
        std::swap(a, b);  // keep the basepoint as a root
      }
      parent[b] = a;
      auto moved = std::move(adj[b]);
      adj[b].clear();
      for (auto [c, t] : moved) {
        attach(a, c, t);
      }
    }

    std::map<std::size_t, std::size_t> relabel{{find(0), 0}};
    for (std::size_t v = 0; v < parent.size(); ++v) {
      if (find(v) == v) {
        relabel.try_emplace(v, relabel.size());
      }
    }
    CoreGraph             g;
    std::set<CoreGraph::Edge> edges;
    g.vertex_count = relabel.size();
    for (auto [v, id] : relabel) {
      for (auto [c, t] : adj[v]) {
        auto l = Letter::from_code(c);
        if (!l.inverted) {
          edges.insert({id, l.generator, relabel.at(find(t))});
        }
      }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
  }

  // <S> = F_n.
  [[nodiscard]] inline bool decide_group_generates_free(std::span<Word const> S,
                                                        std::size_t rank) {
    return stallings_fold(S, rank).is_rose(rank);
  }

}  // namespace rankforge

#endif  // RANKFORGE_FREE_GROUP_HPP_
