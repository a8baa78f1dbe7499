#ifndef RANKFORGE_CONSTRUCTIONS_HPP_
#define RANKFORGE_CONSTRUCTIONS_HPP_

// Constructions that turn a group generating set into a semigroup generating
// set, each with a table expressing inverse generators as positive words.
//
// A witness word is a positive word over the *output* generating set: its
// letter k stands for output element k. expand() rewrites it over the input
// generators so it can be checked.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "error.hpp"
#include "words.hpp"

namespace rankforge {

  // Gp< a_0, ..., a_{rank-1} | relators >
  struct Presentation {
    std::size_t       rank = 0;
    std::vector<Word> relators;

    void validate() const {
      for (auto const& r : relators) {
        if (r.min_rank() > rank) {
          throw InvalidInput("relator \"" + to_string(r)
                             + "\" uses a generator outside rank "
                             + std::to_string(rank));
        }
      }
    }

    bool operator==(Presentation const&) const = default;
  };

  // u^{-1} r u for relator index `relator`.
  struct RelatorConjugate {
    std::size_t relator;
    Word        conjugator;
  };

  struct Witness {
    Letter target;  // over the input generators
    Word   word;    // positive, over the output generating set
    // Present for witnesses that hold modulo relators: the target times the
    // product of these conjugates is freely equal to the expanded word.
    std::vector<RelatorConjugate> relator_factors;
    // The occurrence r = prefix . target^{-1} . suffix the witness came from.
    std::optional<std::pair<Word, Word>> occurrence;
  };

  class WitnessTable {
   public:
    void add(Witness w) {
      _entries.push_back(std::move(w));
    }
    [[nodiscard]] std::vector<Witness> const& entries() const noexcept {
      return _entries;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _entries.size();
    }
    [[nodiscard]] auto begin() const noexcept {
      return _entries.begin();
    }
    [[nodiscard]] auto end() const noexcept {
      return _entries.end();
    }
    [[nodiscard]] Witness const& at(Letter target) const {
      auto it = std::find_if(_entries.begin(), _entries.end(), [&](auto& e) {
        return e.target == target;
      });
      if (it == _entries.end()) {
        throw InvalidInput("no witness for " + to_string(target));
      }
      return *it;
    }

   private:
    std::vector<Witness> _entries;
  };

  // Rewrites a word over the output set into the input generators.
  [[nodiscard]] inline Word expand(Word const& w, std::span<Word const> output_set) {
    std::vector<Letter> out;
    for (auto l : w) {
      if (l.generator >= output_set.size()) {
        throw InvalidInput("witness letter " + to_string(l)
                           + " outside the output generating set");
      }
      Word piece = l.inverted ? invert(output_set[l.generator])
                              : output_set[l.generator];
      out.insert(out.end(), piece.begin(), piece.end());
    }
    return Word(std::move(out));
  }

  // The element a target letter denotes, written over the abstract input
  // generators.
  [[nodiscard]] inline Word target_word(Letter target) {
    return Word{target};
  }

  ////////////////////////////////////////////////////////////////////////
  // Appending the inverse of the product of all generators
  ////////////////////////////////////////////////////////////////////////

  struct AugmentResult {
    std::vector<Word> generating_set;  // a_1, ..., a_n, added
    Word              added;           // a_n^{-1} ... a_1^{-1}
    WitnessTable      witnesses;       // a_i^{-1} for every i
  };

  // Witness for a_i^{-1} is a_{i+1} ... a_n . added . a_1 ... a_{i-1}. The
  // inputs may be arbitrary words; witnesses expand to words freely equal to
  // invert(gens[i]).
  [[nodiscard]] inline AugmentResult
  augment_to_semigroup_gens(std::span<Word const> gens) {
    std::size_t const n = gens.size();
    if (n == 0) {
      throw InvalidInput("augmentation needs at least one generator");
    }
    AugmentResult out;
    out.generating_set.assign(gens.begin(), gens.end());
    Word product;
    for (auto const& g : gens) {
      product = concat(product, g);
    }
    out.added = invert(product);
    out.generating_set.push_back(out.added);

    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Letter> w;
      for (std::size_t j = i + 1; j < n; ++j) {
        w.push_back(gen(j));
      }
      w.push_back(gen(n));
      for (std::size_t j = 0; j < i; ++j) {
        w.push_back(gen(j));
      }
      out.witnesses.add({inv(i), Word(std::move(w)), {}, std::nullopt});
    }
    return out;
  }

  // Abstract generators a_0, ..., a_{n-1} of F_n.
  [[nodiscard]] inline std::vector<Word> free_basis(std::size_t n) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(Word{gen(i)});
    }
    return out;
  }

  [[nodiscard]] inline AugmentResult augment_to_semigroup_gens(std::size_t n) {
    return augment_to_semigroup_gens(free_basis(n));
  }

  // Every witness is positive and freely reduces to its target.
  [[nodiscard]] inline bool
  verify_free_reduction(WitnessTable const&   table,
                        std::span<Word const> inputs,
                        std::span<Word const> output_set) {
    return std::all_of(table.begin(), table.end(), [&](Witness const& w) {
      if (!is_positive(w.word) || w.target.generator >= inputs.size()) {
        return false;
      }
      Word const& g      = inputs[w.target.generator];
      Word        target = w.target.inverted ? invert(g) : g;
      return freely_equal(expand(w.word, output_set), target);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Dropping the generator of finite order
  ////////////////////////////////////////////////////////////////////////

  struct TorsionShrinkResult {
    // order[p] is the input index placed at position p; the finite-order
    // generator is last.
    std::vector<std::size_t> order;
    // a_{order[0]}, ..., a_{order[n-2]}, w with
    // w = a_{order[n-1]}^{-1} ... a_{order[0]}^{-1}.
    std::vector<Word> generating_set;
    WitnessTable      witnesses;
    std::size_t       torsion_order;
  };

  // Witnesses: t^{-1} -> w . s_0 ... s_{n-2} (free), t -> (t^{-1})^{m-1}
  // (needs t^m = 1), and the remaining inverses as in the augmentation
  // construction with t replaced by its witness. Generators are taken in
  // input order except that `torsion_index` moves to the end.
  [[nodiscard]] inline TorsionShrinkResult
  torsion_shrink(std::span<Word const> gens,
                 std::size_t           torsion_index,
                 std::size_t           order_of_torsion) {
    std::size_t const n = gens.size();
    if (n == 0) {
      throw InvalidInput("torsion shrink needs at least one generator");
    }
    if (order_of_torsion < 2) {
      throw InvalidInput("the finite-order generator must have order >= 2, got "
                         + std::to_string(order_of_torsion));
    }
    if (torsion_index >= n) {
      throw InvalidInput("torsion index " + std::to_string(torsion_index)
                         + " out of range");
    }
    TorsionShrinkResult out;
    out.torsion_order = order_of_torsion;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != torsion_index) {
        out.order.push_back(i);
      }
    }
    out.order.push_back(torsion_index);

    Word product;
    for (auto i : out.order) {
      product = concat(product, gens[i]);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      out.generating_set.push_back(gens[out.order[p]]);
    }
    out.generating_set.push_back(invert(product));

    // over output symbols s_0 .. s_{n-1}; s_{n-1} = w
    std::vector<Letter> t_inv{gen(n - 1)};
    for (std::size_t p = 0; p + 1 < n; ++p) {
      t_inv.push_back(gen(p));
    }
    Word const t_inv_word(t_inv);
    Word const t_word = power(t_inv_word, order_of_torsion - 1);

    for (std::size_t p = 0; p + 1 < n; ++p) {
      std::vector<Letter> w;
      for (std::size_t q = p + 1; q + 1 < n; ++q) {
        w.push_back(gen(q));
      }
      w.insert(w.end(), t_word.begin(), t_word.end());
      w.push_back(gen(n - 1));
      for (std::size_t q = 0; q < p; ++q) {
        w.push_back(gen(q));
      }
      out.witnesses.add({inv(out.order[p]), Word(std::move(w)), {}, std::nullopt});
    }
    out.witnesses.add({inv(torsion_index), t_inv_word, {}, std::nullopt});
    out.witnesses.add({gen(torsion_index), t_word, {}, std::nullopt});
    return out;
  }

  [[nodiscard]] inline TorsionShrinkResult
  torsion_shrink(std::size_t n, std::size_t order_of_last) {
    return torsion_shrink(free_basis(n), n == 0 ? 0 : n - 1, order_of_last);
  }

  // Checks each witness by evaluating both sides in a concrete group.
  // `eval` maps a word over the input generators to a comparable value.
  template <typename Eval>
  [[nodiscard]] bool verify_by_evaluation(WitnessTable const&   table,
                                          std::span<Word const> inputs,
                                          std::span<Word const> output_set,
                                          Eval&&                eval) {
    return std::all_of(table.begin(), table.end(), [&](Witness const& w) {
      if (!is_positive(w.word) || w.target.generator >= inputs.size()) {
        return false;
      }
      Word const& g      = inputs[w.target.generator];
      Word        target = w.target.inverted ? invert(g) : g;
      return eval(expand(w.word, output_set)) == eval(target);
    });
  }

  // Evaluation in a finitely generated abelian group, input generator k
  // mapped to images[k].
  [[nodiscard]] inline bool
  verify_in_abelian_group(WitnessTable const&             table,
                          std::span<Word const>           inputs,
                          std::span<Word const>           output_set,
                          std::span<AbelianElement const> images,
                          AbelianGroup const&             G) {
    return verify_by_evaluation(table, inputs, output_set, [&](Word const& w) {
      return evaluate(w, images, G);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations with positive relators
  ////////////////////////////////////////////////////////////////////////

  // For each generator a, the first positive relator containing a is split
  // at the leftmost occurrence as r = u a v, and a^{-1} -> v u. When v u is
  // empty (r = a) the witness is r itself, which equals 1 = a^{-1} in G.
  [[nodiscard]] inline WitnessTable
  positive_inverse_witnesses(Presentation const& P) {
    P.validate();
    WitnessTable table;
    for (std::size_t a = 0; a < P.rank; ++a) {
      bool found = false;
      for (std::size_t ri = 0; ri < P.relators.size() && !found; ++ri) {
        Word const& r = P.relators[ri];
        if (!is_positive(r)) {
          continue;
        }
        auto it = std::find(r.begin(), r.end(), gen(a));
        if (it == r.end()) {
          continue;
        }
        found = true;
        Word u(std::vector<Letter>(r.begin(), it));
        Word v(std::vector<Letter>(it + 1, r.end()));
        Witness w{inv(a), concat(v, u), {{ri, u}}, std::pair{u, v}};
        if (w.word.empty()) {
          w.word = r;
          w.relator_factors.push_back({ri, Word()});
        }
        table.add(std::move(w));
      }
      if (!found) {
        throw CoverageViolation(a, generator_name(a));
      }
    }
    return table;
  }

  // For each entry: the witness is positive, u^{-1} r u freely reduces to
  // a v u, and target . prod(u_i^{-1} r_i u_i) freely equals the witness.
  [[nodiscard]] inline bool verify_conjugate_of_relator(Presentation const& P,
                                                        WitnessTable const& table) {
    for (auto const& w : table) {
      if (!is_positive(w.word) || w.relator_factors.empty()) {
        return false;
      }
      Word lhs = target_word(w.target);
      for (auto const& f : w.relator_factors) {
        if (f.relator >= P.relators.size()) {
          return false;
        }
        lhs = concat(lhs, invert(f.conjugator), P.relators[f.relator], f.conjugator);
      }
      if (!freely_equal(lhs, w.word)) {
        return false;
      }
      if (w.occurrence) {
        auto const& [u, v] = *w.occurrence;
        auto const& r      = P.relators[w.relator_factors.front().relator];
        Letter      a      = w.target.inverse();
        if (concat(u, Word{a}, v) != r
            || !freely_equal(concat(invert(u), r, u), concat(Word{a}, v, u))) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace rankforge

#endif  // RANKFORGE_CONSTRUCTIONS_HPP_
