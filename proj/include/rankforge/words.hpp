#ifndef RANKFORGE_WORDS_HPP_
#define RANKFORGE_WORDS_HPP_

// Words over a finite alphabet a_0, ..., a_{n-1} and their inverses, i.e.
// elements of the free group F_n before and after free reduction.
//
// Text syntax: 'a'..'z' are generators 0..25, 'A'..'Z' their inverses, and
// "g<k>" / "G<k>" name generator k (or its inverse) for any k. The empty word
// is written "" or "1".

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace rankforge {

  // A generator or the inverse of a generator.
  struct Letter {
    std::size_t generator = 0;
    bool        inverted  = false;

    [[nodiscard]] constexpr Letter inverse() const noexcept {
      return {generator, !inverted};
    }

    [[nodiscard]] constexpr int sign() const noexcept {
      return inverted ? -1 : 1;
    }

    // Dense index in [0, 2n): 2k for a_k, 2k+1 for a_k^{-1}.
    [[nodiscard]] constexpr std::size_t code() const noexcept {
      return 2 * generator + (inverted ? 1 : 0);
    }

    [[nodiscard]] static constexpr Letter from_code(std::size_t c) noexcept {
      return {c / 2, (c % 2) == 1};
    }

    constexpr auto operator<=>(Letter const&) const = default;
  };

  [[nodiscard]] constexpr Letter gen(std::size_t k) noexcept {
    return {k, false};
  }

  [[nodiscard]] constexpr Letter inv(std::size_t k) noexcept {
    return {k, true};
  }

  class Word {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    [[nodiscard]] const_iterator begin() const noexcept {
      return _letters.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return _letters.end();
    }
    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }

    // Largest generator index used plus one; 0 for the empty word.
    [[nodiscard]] std::size_t min_rank() const noexcept {
      std::size_t r = 0;
      for (auto l : _letters) {
        r = std::max(r, l.generator + 1);
      }
      return r;
    }

    bool operator==(Word const&) const = default;
    auto operator<=>(Word const&) const = default;

   private:
    std::vector<Letter> _letters;
  };

  // A freely reduced word: no factor a a^{-1} or a^{-1} a. Only obtainable
  // from reduce(), so the invariant holds by construction.
  class ReducedWord {
   public:
    ReducedWord() = default;

    [[nodiscard]] Word const& word() const noexcept {
      return _word;
    }
    operator Word const&() const noexcept {  // NOLINT
      return _word;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _word.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _word.empty();
    }

    bool operator==(ReducedWord const&) const = default;
    auto operator<=>(ReducedWord const&) const = default;

   private:
    explicit ReducedWord(Word w) : _word(std::move(w)) {}
    friend ReducedWord reduce(Word const& w);

    Word _word;
  };

  // Single left-to-right pass with the output used as a stack.
  [[nodiscard]] inline ReducedWord reduce(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto l : w) {
      if (!out.empty() && out.back() == l.inverse()) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return ReducedWord(Word(std::move(out)));
  }

  [[nodiscard]] inline bool is_reduced(Word const& w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1].inverse()) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] inline Word invert(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(std::move(out));
  }

  [[nodiscard]] inline Word concat(Word const& u, Word const& v) {
    std::vector<Letter> out(u.letters());
    out.insert(out.end(), v.begin(), v.end());
    return Word(std::move(out));
  }

  template <typename... Ws>
  [[nodiscard]] Word concat(Word const& u, Word const& v, Ws const&... rest) {
    return concat(concat(u, v), rest...);
  }

  // [u, v] = u v u^{-1} v^{-1}
  [[nodiscard]] inline Word commutator(Word const& u, Word const& v) {
    return concat(u, v, invert(u), invert(v));
  }

  [[nodiscard]] inline Word power(Word const& w, std::size_t k) {
    std::vector<Letter> out;
    out.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      out.insert(out.end(), w.begin(), w.end());
    }
    return Word(std::move(out));
  }

  // Membership in the free semigroup A^+: nonempty, all letters positive.
  [[nodiscard]] inline bool is_positive(Word const& w) noexcept {
    return !w.empty()
           && std::none_of(
               w.begin(), w.end(), [](Letter l) { return l.inverted; });
  }

  [[nodiscard]] inline bool freely_equal(Word const& u, Word const& v) {
    return reduce(u) == reduce(v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text syntax
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline std::string to_string(Letter l) {
    if (l.generator < 26) {
      auto base = l.inverted ? 'A' : 'a';
      return std::string(1, static_cast<char>(base + l.generator));
    }
    return (l.inverted ? "G" : "g") + std::to_string(l.generator);
  }

  [[nodiscard]] inline std::string to_string(Word const& w) {
    std::string out;
    for (auto l : w) {
      out += to_string(l);
    }
    return out;
  }

  [[nodiscard]] inline std::string generator_name(std::size_t k) {
    return to_string(gen(k));
  }

  // Parses the text syntax. When `rank` is given every generator index must be
  // below it.
  [[nodiscard]] inline Word parse_word(std::string_view text,
                                       std::optional<std::size_t> rank = {}) {
    std::vector<Letter> out;
    if (text == "1") {
      return Word();
    }
    std::size_t i = 0;
    while (i < text.size()) {
      char   c = text[i];
      Letter l;
      bool   numeric = (c == 'g' || c == 'G') && i + 1 < text.size()
                     && text[i + 1] >= '0' && text[i + 1] <= '9';
      if (numeric) {
        std::size_t j = i + 1;
        std::size_t k = 0;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') {
          if (k > (SIZE_MAX - 9) / 10) {
            throw InvalidInput("generator index too large in word \""
                               + std::string(text) + "\"");
          }
          k = 10 * k + static_cast<std::size_t>(text[j] - '0');
          ++j;
        }
        l = {k, c == 'G'};
        i = j;
      } else if (c >= 'a' && c <= 'z') {
        l = {static_cast<std::size_t>(c - 'a'), false};
        ++i;
      } else if (c >= 'A' && c <= 'Z') {
        l = {static_cast<std::size_t>(c - 'A'), true};
        ++i;
      } else {
        throw InvalidInput("malformed word \"" + std::string(text)
                           + "\": unexpected character '" + std::string(1, c)
                           + "'");
      }
      if (rank && l.generator >= *rank) {
        throw InvalidInput("word \"" + std::string(text) + "\" uses generator "
                           + to_string(gen(l.generator))
                           + " outside rank " + std::to_string(*rank));
      }
      out.push_back(l);
    }
    return Word(std::move(out));
  }

  inline namespace literals {
    [[nodiscard]] inline Word operator""_w(char const* s, std::size_t n) {
      return parse_word(std::string_view(s, n));
    }
  }  // namespace literals

}  // namespace rankforge

#endif  // RANKFORGE_WORDS_HPP_
