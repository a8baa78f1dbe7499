#ifndef RANKFORGE_ABELIAN_HPP_
#define RANKFORGE_ABELIAN_HPP_

// Finitely generated abelian groups Z^r x Z_{d_1} x ... x Z_{d_k} in
// invariant-factor form (d_1 | d_2 | ... , every d_i >= 2), and decision
// procedures for group and semigroup generation of finite subsets.
//
// Semigroup generation criterion: X^+ = G iff X generates G as a group and
// the free parts of X admit a strictly positive integer relation
// sum c_j x_j = 0 (c_j >= 1). Sufficiency: sum c_j x_j is then a torsion
// element t of order m, so m * sum c_j x_j = 0 is a positive combination in
// which every x_j occurs, and -x_j is obtained by dropping one occurrence.
// Necessity: -(x_1 + ... + x_n) lies in X^+.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "int_matrix.hpp"
#include "positive_kernel.hpp"
#include "words.hpp"

namespace rankforge {

  struct AbelianElement {
    std::vector<BigInt> free_part;
    std::vector<BigInt> torsion_part;

    auto operator<=>(AbelianElement const&) const = default;
  };

  namespace detail {
    inline BigInt mod(BigInt const& a, BigInt const& d) {
      BigInt r = a % d;
      return r < 0 ? r + d : r;
    }
  }  // namespace detail

  class AbelianGroup {
   public:
    // The trivial group.
    AbelianGroup() = default;

    // Z^free_rank x Z_{f_1} x ... for arbitrary factors f_i >= 1; normalized
    // to invariant-factor form.
    AbelianGroup(std::size_t free_rank, std::vector<BigInt> const& factors)
        : _free_rank(free_rank) {
      for (auto const& f : factors) {
        if (f < 1) {
          throw InvalidInput("cyclic factor " + f.str()
                             + " must be a positive integer");
        }
      }
      IntMatrix diag(factors.size(), factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i) {
        diag(i, i) = factors[i];
      }
      for (auto const& d : snf(diag).diagonal()) {
        if (d > 1) {
          _factors.push_back(d);
        }
      }
    }

    [[nodiscard]] static AbelianGroup free(std::size_t r) {
      return AbelianGroup(r, {});
    }

    [[nodiscard]] std::size_t free_rank() const noexcept {
      return _free_rank;
    }
    [[nodiscard]] std::vector<BigInt> const& invariant_factors() const noexcept {
      return _factors;
    }
    [[nodiscard]] std::size_t torsion_count() const noexcept {
      return _factors.size();
    }
    // Coordinates of an element: free part then torsion part.
    [[nodiscard]] std::size_t dimension() const noexcept {
      return _free_rank + _factors.size();
    }
    [[nodiscard]] bool is_torsion_free() const noexcept {
      return _factors.empty();
    }
    [[nodiscard]] bool is_trivial() const noexcept {
      return dimension() == 0;
    }
    [[nodiscard]] bool is_finite() const noexcept {
      return _free_rank == 0;
    }

    // Builds an element, reducing torsion coordinates.
    [[nodiscard]] AbelianElement element(std::vector<BigInt> free_part,
                                         std::vector<BigInt> torsion_part
                                         = {}) const {
      if (free_part.size() != _free_rank
          || torsion_part.size() != _factors.size()) {
        throw InvalidInput("element has " + std::to_string(free_part.size())
                           + "+" + std::to_string(torsion_part.size())
                           + " coordinates, group " + to_string() + " needs "
                           + std::to_string(_free_rank) + "+"
                           + std::to_string(_factors.size()));
      }
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        torsion_part[i] = detail::mod(torsion_part[i], _factors[i]);
      }
      return {std::move(free_part), std::move(torsion_part)};
    }

    // Coordinates listed free part first.
    [[nodiscard]] AbelianElement
    from_coordinates(std::vector<BigInt> const& coords) const {
      if (coords.size() != dimension()) {
        throw InvalidInput("element has " + std::to_string(coords.size())
                           + " coordinates, group " + to_string() + " needs "
                           + std::to_string(dimension()));
      }
      return element({coords.begin(), coords.begin() + _free_rank},
                     {coords.begin() + _free_rank, coords.end()});
    }

    [[nodiscard]] AbelianElement zero() const {
      return {std::vector<BigInt>(_free_rank),
              std::vector<BigInt>(_factors.size())};
    }

    void validate(AbelianElement const& x) const {
      if (x.free_part.size() != _free_rank
          || x.torsion_part.size() != _factors.size()) {
        throw InvalidInput("element does not belong to " + to_string());
      }
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        if (x.torsion_part[i] < 0 || x.torsion_part[i] >= _factors[i]) {
          throw InvalidInput("torsion coordinate " + x.torsion_part[i].str()
                             + " out of range for Z_" + _factors[i].str());
        }
      }
    }

    [[nodiscard]] AbelianElement add(AbelianElement const& x,
                                     AbelianElement const& y) const {
      AbelianElement z = x;
      for (std::size_t i = 0; i < _free_rank; ++i) {
        z.free_part[i] += y.free_part[i];
      }
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        z.torsion_part[i]
            = detail::mod(z.torsion_part[i] + y.torsion_part[i], _factors[i]);
      }
      return z;
    }

    [[nodiscard]] AbelianElement negate(AbelianElement const& x) const {
      AbelianElement z = x;
      for (auto& v : z.free_part) {
        v = -v;
      }
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        z.torsion_part[i] = detail::mod(-z.torsion_part[i], _factors[i]);
      }
      return z;
    }

    // "Z^2 x Z_4", "Z", "1" for the trivial group.
    [[nodiscard]] std::string to_string() const {
      std::vector<std::string> parts;
      if (_free_rank == 1) {
        parts.emplace_back("Z");
      } else if (_free_rank > 1) {
        parts.push_back("Z^" + std::to_string(_free_rank));
      }
      for (auto const& d : _factors) {
        parts.push_back("Z_" + d.str());
      }
      if (parts.empty()) {
        return "1";
      }
      std::string out = parts[0];
      for (std::size_t i = 1; i < parts.size(); ++i) {
        out += " x " + parts[i];
      }
      return out;
    }

    bool operator==(AbelianGroup const&) const = default;

   private:
    std::size_t         _free_rank = 0;
    std::vector<BigInt> _factors;
  };

  // Z^r x Z_{m_1} x ... x Z_{m_k} with arbitrary moduli m_i >= 1, as written
  // by a user, together with the isomorphism onto invariant-factor form.
  class CyclicDecomposition {
   public:
    CyclicDecomposition(std::size_t free_rank, std::vector<BigInt> moduli)
        : _free_rank(free_rank), _moduli(std::move(moduli)), _group(free_rank, _moduli) {
      IntMatrix diag(_moduli.size(), _moduli.size());
      for (std::size_t i = 0; i < _moduli.size(); ++i) {
        diag(i, i) = _moduli[i];
      }
      auto s = snf(diag);
      _map   = std::move(s.U);
      for (std::size_t i = 0; i < _moduli.size(); ++i) {
        if (s.D(i, i) != 1) {
          _kept.push_back(i);
        }
      }
    }

    [[nodiscard]] std::size_t free_rank() const noexcept {
      return _free_rank;
    }
    [[nodiscard]] std::vector<BigInt> const& moduli() const noexcept {
      return _moduli;
    }
    [[nodiscard]] std::size_t dimension() const noexcept {
      return _free_rank + _moduli.size();
    }
    [[nodiscard]] AbelianGroup const& group() const noexcept {
      return _group;
    }

    // Image of an element given in the user's coordinates, free part first.
    [[nodiscard]] AbelianElement to_group(std::vector<BigInt> const& coords) const {
      if (coords.size() != dimension()) {
        throw InvalidInput("element has " + std::to_string(coords.size())
                           + " coordinates, expected "
                           + std::to_string(dimension()));
      }
      std::vector<BigInt> free(coords.begin(), coords.begin() + _free_rank);
      std::vector<BigInt> torsion;
      for (auto i : _kept) {
        BigInt v = 0;
        for (std::size_t j = 0; j < _moduli.size(); ++j) {
          v += _map(i, j) * coords[_free_rank + j];
        }
        torsion.push_back(std::move(v));
      }
      return _group.element(std::move(free), std::move(torsion));
    }

   private:
    std::size_t              _free_rank;
    std::vector<BigInt>      _moduli;
    AbelianGroup             _group;
    IntMatrix                _map;
    std::vector<std::size_t> _kept;
  };

  ////////////////////////////////////////////////////////////////////////
  // Ranks
  ////////////////////////////////////////////////////////////////////////

  // Z^g modulo the lattice spanned by the columns of `relations`.
  [[nodiscard]] inline AbelianGroup abelian_from_relations(IntMatrix const& relations) {
    std::size_t const   g = relations.rows();
    std::size_t         nonzero = 0;
    std::vector<BigInt> factors;
    for (auto const& d : snf(relations).diagonal()) {
      if (d != 0) {
        ++nonzero;
        factors.push_back(d);
      }
    }
    return AbelianGroup(g - nonzero, factors);
  }

  [[nodiscard]] inline std::size_t group_rank_abelian(AbelianGroup const& G) {
    return G.dimension();
  }

  [[nodiscard]] inline std::size_t semigroup_rank_abelian(AbelianGroup const& G) {
    return G.is_torsion_free() ? G.dimension() + 1 : G.dimension();
  }

  ////////////////////////////////////////////////////////////////////////
  // Generation
  ////////////////////////////////////////////////////////////////////////

  // Subgroup generated by X is G: the elements of X together with the
  // relation columns d_i e_{r+i} span Z^{r+k}.
  [[nodiscard]] inline bool
  decide_group_generates_abelian(std::span<AbelianElement const> X,
                                 AbelianGroup const&             G) {
    std::size_t const dim = G.dimension();
    std::size_t const r   = G.free_rank();
    std::vector<std::vector<BigInt>> columns;
    for (auto const& x : X) {
      G.validate(x);
      std::vector<BigInt> c(x.free_part);
      c.insert(c.end(), x.torsion_part.begin(), x.torsion_part.end());
      columns.push_back(std::move(c));
    }
    if (dim == 0) {
      return true;
    }
    for (std::size_t i = 0; i < G.torsion_count(); ++i) {
      std::vector<BigInt> c(dim);
      c[r + i] = G.invariant_factors()[i];
      columns.push_back(std::move(c));
    }
    if (columns.size() < dim) {
      return false;
    }
    auto diag = snf(IntMatrix::from_columns(dim, columns)).diagonal();
    return std::all_of(
        diag.begin(), diag.begin() + static_cast<std::ptrdiff_t>(dim), [](auto& d) {
          return d == 1;
        });
  }

  // r x |X| matrix of free parts.
  [[nodiscard]] inline IntMatrix free_part_matrix(std::span<AbelianElement const> X,
                                                  AbelianGroup const& G) {
    std::vector<std::vector<BigInt>> cols;
    for (auto const& x : X) {
      cols.push_back(x.free_part);
    }
    return IntMatrix::from_columns(G.free_rank(), cols);
  }

  struct AbelianSubsetVerdict {
    bool group_generates = false;
    bool generates       = false;
    bool basis           = false;
    // Distinct elements of X in sorted order; certificate coefficient i
    // belongs to elements[i].
    std::vector<AbelianElement>              elements;
    std::optional<PositiveKernelCertificate> certificate;
  };

  [[nodiscard]] inline AbelianSubsetVerdict
  analyze_abelian_subset(std::span<AbelianElement const> X, AbelianGroup const& G) {
    AbelianSubsetVerdict v;
    for (auto const& x : X) {
      G.validate(x);
    }
    std::set<AbelianElement> distinct(X.begin(), X.end());
    if (distinct.empty()) {
      return v;
    }
    v.elements.assign(distinct.begin(), distinct.end());
    v.group_generates = decide_group_generates_abelian(v.elements, G);
    v.certificate     = positive_kernel_exists(free_part_matrix(v.elements, G));
    v.generates       = v.group_generates && v.certificate.has_value();
    v.basis = v.generates && v.elements.size() == semigroup_rank_abelian(G);
    return v;
  }

  [[nodiscard]] inline bool
  decide_semigroup_generates_abelian(std::span<AbelianElement const> X,
                                     AbelianGroup const&             G) {
    return analyze_abelian_subset(X, G).generates;
  }

  [[nodiscard]] inline bool
  decide_semigroup_basis_abelian(std::span<AbelianElement const> X,
                                 AbelianGroup const&             G) {
    return analyze_abelian_subset(X, G).basis;
  }

  ////////////////////////////////////////////////////////////////////////
  // Brute-force oracle
  ////////////////////////////////////////////////////////////////////////

  // Elements of X^+ reachable without leaving the box |free coordinate| <= B.
  // Exact when G is finite.
  [[nodiscard]] inline std::set<AbelianElement>
  bfs_closure_oracle(std::span<AbelianElement const> X,
                     AbelianGroup const&             G,
                     long long                       bound) {
    if (bound < 1) {
      throw InvalidInput("box bound must be at least 1");
    }
    auto in_box = [bound](AbelianElement const& x) {
      return std::all_of(x.free_part.begin(), x.free_part.end(), [bound](auto& v) {
        return abs(v) <= bound;
      });
    };
    std::set<AbelianElement>   seen;
    std::deque<AbelianElement> todo;
    for (auto const& x : X) {
      G.validate(x);
      if (in_box(x) && seen.insert(x).second) {
        todo.push_back(x);
      }
    }
    while (!todo.empty()) {
      auto s = std::move(todo.front());
      todo.pop_front();
      for (auto const& x : X) {
        auto t = G.add(s, x);
        if (in_box(t) && seen.find(t) == seen.end()) {
          seen.insert(t);
          todo.push_back(std::move(t));
        }
      }
    }
    return seen;
  }

  // Number of elements with free coordinates in [-B, B].
  [[nodiscard]] inline BigInt box_size(AbelianGroup const& G, long long bound) {
    BigInt n = 1;
    for (std::size_t i = 0; i < G.free_rank(); ++i) {
      n *= 2 * bound + 1;
    }
    for (auto const& d : G.invariant_factors()) {
      n *= d;
    }
    return n;
  }

  // The closure pruned at bound + margin covers every element of the box
  // [-bound, bound]. Pruning exactly at the box boundary loses corners whose
  // predecessors all lie outside it, so the default margin equals the bound.
  // A non-generating set misses some +-e_i, so the check is sound for any
  // margin.
  [[nodiscard]] inline bool bfs_box_generates(std::span<AbelianElement const> X,
                                              AbelianGroup const&             G,
                                              long long                       bound,
                                              std::optional<long long> margin = {}) {
    auto        closure = bfs_closure_oracle(X, G, bound + margin.value_or(bound));
    std::size_t inside  = 0;
    for (auto const& x : closure) {
      inside += std::all_of(x.free_part.begin(), x.free_part.end(),
                            [bound](auto const& v) { return abs(v) <= bound; })
                    ? 1
                    : 0;
    }
    return BigInt(inside) == box_size(G, bound);
  }

  // Image of a word under a_k -> images[k].
  [[nodiscard]] inline AbelianElement
  evaluate(Word const& w, std::span<AbelianElement const> images, AbelianGroup const& G) {
    AbelianElement acc = G.zero();
    for (auto l : w) {
      if (l.generator >= images.size()) {
        throw InvalidInput("word " + to_string(w) + " uses generator "
                           + to_string(gen(l.generator)) + " without an image");
      }
      auto const& x = images[l.generator];
      acc           = G.add(acc, l.inverted ? G.negate(x) : x);
    }
    return acc;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text syntax
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    inline std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
          return out;
        }
        start = pos + 1;
      }
    }

    inline BigInt parse_integer(std::string_view s) {
      s = trim(s);
      std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (i == s.size()
          || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char c) {
               return c >= '0' && c <= '9';
             })) {
        throw InvalidInput("malformed integer \"" + std::string(s) + "\"");
      }
      BigInt v(std::string(s.substr(s[0] == '+' ? 1 : 0)));
      return v;
    }

    inline std::size_t parse_count(std::string_view s) {
      auto v = parse_integer(s);
      if (v < 0 || v > 1'000'000) {
        throw InvalidInput("malformed count \"" + std::string(s) + "\"");
      }
      return static_cast<std::size_t>(v);
    }
  }  // namespace detail

  // "Z^2xZ_4", "Z x Z_2 x Z_3", "Z_6", "1" (trivial).
  [[nodiscard]] inline CyclicDecomposition parse_group(std::string_view text) {
    std::string compact;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        compact += c;
      }
    }
    std::size_t         free_rank = 0;
    std::vector<BigInt> moduli;
    if (compact.empty()) {
      throw InvalidInput("empty group description");
    }
    if (compact == "1" || compact == "0" || compact == "trivial") {
      return {0, {}};
    }
    for (auto term : detail::split(compact, 'x')) {
      if (term.empty() || term[0] != 'Z') {
        throw InvalidInput("malformed group term \"" + std::string(term)
                           + "\" in \"" + std::string(text) + "\"");
      }
      term.remove_prefix(1);
      if (term.empty()) {
        ++free_rank;
      } else if (term[0] == '^') {
        free_rank += detail::parse_count(term.substr(1));
      } else if (term[0] == '_') {
        auto d = detail::parse_integer(term.substr(1));
        if (d < 1) {
          throw InvalidInput("cyclic factor Z_" + d.str()
                             + " must have positive order");
        }
        moduli.push_back(d);
      } else {
        throw InvalidInput("malformed group term \"Z" + std::string(term) + "\"");
      }
    }
    return {free_rank, std::move(moduli)};
  }

  // "(1,0,0);(0,1,1)" or, for one coordinate, "2;-3".
  [[nodiscard]] inline std::vector<std::vector<BigInt>>
  parse_element_list(std::string_view text) {
    std::vector<std::vector<BigInt>> out;
    for (auto item : detail::split(text, ';')) {
      if (item.empty()) {
        continue;
      }
      if (item.front() == '(') {
        if (item.back() != ')') {
          throw InvalidInput("unbalanced parenthesis in \"" + std::string(item)
                             + "\"");
        }
        item = item.substr(1, item.size() - 2);
      }
      std::vector<BigInt> coords;
      if (!detail::trim(item).empty()) {
        for (auto c : detail::split(item, ',')) {
          coords.push_back(detail::parse_integer(c));
        }
      }
      out.push_back(std::move(coords));
    }
    return out;
  }

}  // namespace rankforge

#endif  // RANKFORGE_ABELIAN_HPP_
