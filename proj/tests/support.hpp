#ifndef RANKFORGE_TESTS_SUPPORT_HPP_
#define RANKFORGE_TESTS_SUPPORT_HPP_

// Deterministic generators and brute-force oracles shared by the tests.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "rankforge/abelian.hpp"
#include "rankforge/words.hpp"

namespace rankforge::testing {

  inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed'0f'2026ULL);
    return gen;
  }

  inline long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng());
  }

  inline Letter random_letter(std::size_t rank) {
    return {static_cast<std::size_t>(uniform(0, static_cast<long long>(rank) - 1)),
            uniform(0, 1) == 1};
  }

  // Arbitrary (not necessarily reduced) word.
  inline Word random_word(std::size_t rank, std::size_t max_len) {
    std::vector<Letter> w;
    auto                len = static_cast<std::size_t>(uniform(0, static_cast<long long>(max_len)));
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(random_letter(rank));
    }
    return Word(std::move(w));
  }

  inline Word random_reduced_word(std::size_t rank, std::size_t min_len, std::size_t max_len) {
    auto len = static_cast<std::size_t>(
        uniform(static_cast<long long>(min_len), static_cast<long long>(max_len)));
    std::vector<Letter> w;
    while (w.size() < len) {
      Letter l = random_letter(rank);
      if (w.empty() || w.back() != l.inverse()) {
        w.push_back(l);
      }
    }
    return Word(std::move(w));
  }

  // Deletes the leftmost cancelling pair until none is left; quadratic and
  // deliberately unlike the stack-based reduction.
  inline Word naive_reduce(Word const& w) {
    std::vector<Letter> v = w.letters();
    bool                changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].generator == v[i + 1].generator && v[i].inverted != v[i + 1].inverted) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i),
                  v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          changed = true;
          break;
        }
      }
    }
    return Word(std::move(v));
  }

  // All reduced words of length <= max_len over the given rank.
  inline std::vector<Word> reduced_words_up_to(std::size_t rank, std::size_t max_len) {
    std::vector<Word> out{Word()};
    std::vector<Word> layer{Word()};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (std::size_t c = 0; c < 2 * rank; ++c) {
          Letter l = Letter::from_code(c);
          if (!w.empty() && w.letters().back() == l.inverse()) {
            continue;
          }
          next.push_back(concat(w, Word{l}));
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  // Reduced forms of all products of 1..k factors of S (no pruning).
  inline std::set<Word> products_up_to(std::vector<Word> const& S, std::size_t k) {
    std::set<Word> all, layer;
    for (auto const& s : S) {
      layer.insert(naive_reduce(s));
    }
    all = layer;
    for (std::size_t i = 1; i < k; ++i) {
      std::set<Word> next;
      for (auto const& p : layer) {
        for (auto const& s : S) {
          next.insert(naive_reduce(concat(p, s)));
        }
      }
      all.insert(next.begin(), next.end());
      layer = std::move(next);
    }
    return all;
  }

  // Reduced forms of length <= target_len reachable as products of at most
  // `factors` elements of S. Intermediate forms too long to shrink back to
  // target_len with the remaining factors are pruned.
  inline std::set<Word> short_products(std::vector<Word> const& S,
                                       std::size_t              factors,
                                       std::size_t              target_len) {
    std::size_t longest = 0;
    for (auto const& s : S) {
      longest = std::max(longest, s.size());
    }
    auto key = [](Word const& w) {
      std::string k;
      for (auto l : w) {
        k.push_back(static_cast<char>(l.code()));
      }
      return k;
    };
    std::set<Word>                  found;
    std::unordered_set<std::string> seen;
    std::vector<Word>               layer{Word()};
    for (std::size_t k = 1; k <= factors; ++k) {
      std::size_t const budget = target_len + longest * (factors - k);
      std::vector<Word> next;
      for (auto const& p : layer) {
        for (auto const& s : S) {
          Word w = reduce(concat(p, s)).word();
          if (w.size() > budget || !seen.insert(key(w)).second) {
            continue;
          }
          if (w.size() <= target_len) {
            found.insert(w);
          }
          next.push_back(std::move(w));
        }
      }
      layer = std::move(next);
    }
    return found;
  }

  // One Nielsen move on a basis: invert an element, or multiply one element
  // by another (or its inverse) on either side.
  inline void nielsen_move(std::vector<Word>& basis) {
    auto const n = static_cast<long long>(basis.size());
    auto       i = static_cast<std::size_t>(uniform(0, n - 1));
    if (n == 1 || uniform(0, 3) == 0) {
      basis[i] = invert(basis[i]);
      return;
    }
    std::size_t j;
    do {
      j = static_cast<std::size_t>(uniform(0, n - 1));
    } while (j == i);
    Word other = uniform(0, 1) ? basis[j] : invert(basis[j]);
    basis[i]   = uniform(0, 1) ? reduce(concat(basis[i], other)).word()
                               : reduce(concat(other, basis[i])).word();
  }

  inline AbelianElement random_element(AbelianGroup const& G, long long lo, long long hi) {
    std::vector<BigInt> f, t;
    for (std::size_t i = 0; i < G.free_rank(); ++i) {
      f.emplace_back(uniform(lo, hi));
    }
    for (std::size_t i = 0; i < G.torsion_count(); ++i) {
      t.emplace_back(uniform(lo, hi));
    }
    return G.element(std::move(f), std::move(t));
  }

}  // namespace rankforge::testing

#endif  // RANKFORGE_TESTS_SUPPORT_HPP_
