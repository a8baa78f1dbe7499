#ifndef RANKFORGE_SERIALIZE_HPP_
#define RANKFORGE_SERIALIZE_HPP_

// JSON encodings. Words use the textual word syntax, exact integers are
// decimal strings, abelian elements are coordinate lists with the free part
// first. Conversions are found by nlohmann::json through ADL.

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "abelian.hpp"
#include "analyzer.hpp"
#include "catalog.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "free_group.hpp"
#include "int_matrix.hpp"
#include "words.hpp"

namespace rankforge {

  using Json = nlohmann::json;

  ////////////////////////////////////////////////////////////////////////
  // Scalars
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline Json big_to_json(BigInt const& v) {
    return v.str();
  }

  [[nodiscard]] inline BigInt big_from_json(Json const& j) {
    if (j.is_number_integer()) {
      return BigInt(j.get<long long>());
    }
    if (!j.is_string()) {
      throw InvalidInput("expected an integer or a decimal string, got " + j.dump());
    }
    auto const s = j.get<std::string>();
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos) {
      throw InvalidInput("\"" + s + "\" is not a decimal integer");
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  }

  [[nodiscard]] inline Json big_vector_to_json(std::vector<BigInt> const& v) {
    Json out = Json::array();
    for (auto const& x : v) {
      out.push_back(big_to_json(x));
    }
    return out;
  }

  [[nodiscard]] inline std::vector<BigInt> big_vector_from_json(Json const& j) {
    if (!j.is_array()) {
      throw InvalidInput("expected an array of integers, got " + j.dump());
    }
    std::vector<BigInt> out;
    for (auto const& x : j) {
      out.push_back(big_from_json(x));
    }
    return out;
  }

  [[nodiscard]] inline std::size_t count_from_json(Json const& j, char const* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
      throw InvalidInput(std::string(what) + " must be a non-negative integer, got "
                         + j.dump());
    }
    return j.get<std::size_t>();
  }

  [[nodiscard]] inline Json const& field(Json const& j, char const* key) {
    if (!j.is_object()) {
      throw InvalidInput("expected a JSON object, got " + j.dump());
    }
    auto it = j.find(key);
    if (it == j.end()) {
      throw InvalidInput(std::string("missing field \"") + key + "\"");
    }
    return *it;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  inline void to_json(Json& j, Word const& w) {
    j = to_string(w);
  }

  inline void from_json(Json const& j, Word& w) {
    if (!j.is_string()) {
      throw InvalidInput("expected a word string, got " + j.dump());
    }
    w = parse_word(j.get<std::string>());
  }

  inline void to_json(Json& j, Letter const& l) {
    j = to_string(l);
  }

  inline void from_json(Json const& j, Letter& l) {
    Word w = j.get<Word>();
    if (w.size() != 1) {
      throw InvalidInput("expected a single letter, got " + j.dump());
    }
    l = w[0];
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrices and abelian groups
  ////////////////////////////////////////////////////////////////////////

  inline void to_json(Json& j, IntMatrix const& m) {
    j = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row.push_back(big_to_json(m(r, c)));
      }
      j.push_back(std::move(row));
    }
  }

  // Rows of equal length; an empty array is the 0 x 0 matrix.
  inline void from_json(Json const& j, IntMatrix& m) {
    if (!j.is_array()) {
      throw InvalidInput("a matrix is an array of rows, got " + j.dump());
    }
    std::size_t const rows = j.size();
    std::size_t const cols = rows == 0 ? 0 : j[0].size();
    IntMatrix         out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!j[r].is_array() || j[r].size() != cols) {
        throw InvalidInput("matrix rows must be arrays of equal length");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        out(r, c) = big_from_json(j[r][c]);
      }
    }
    m = std::move(out);
  }

  inline void to_json(Json& j, AbelianGroup const& G) {
    j = Json{{"free_rank", G.free_rank()},
             {"invariant_factors", big_vector_to_json(G.invariant_factors())},
             {"name", G.to_string()}};
  }

  inline void from_json(Json const& j, AbelianGroup& G) {
    G = AbelianGroup(count_from_json(field(j, "free_rank"), "free_rank"),
                     big_vector_from_json(field(j, "invariant_factors")));
  }

  [[nodiscard]] inline Json element_to_json(AbelianElement const& x) {
    auto v = x.free_part;
    v.insert(v.end(), x.torsion_part.begin(), x.torsion_part.end());
    return big_vector_to_json(v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations and witnesses
  ////////////////////////////////////////////////////////////////////////

  inline void to_json(Json& j, Presentation const& P) {
    j = Json{{"rank", P.rank}, {"relators", P.relators}};
  }

  inline void from_json(Json const& j, Presentation& P) {
    Presentation out;
    out.rank = count_from_json(field(j, "rank"), "rank");
    auto const& rel = field(j, "relators");
    if (!rel.is_array()) {
      throw InvalidInput("\"relators\" must be an array of word strings");
    }
    for (auto const& r : rel) {
      if (!r.is_string()) {
        throw InvalidInput("expected a word string, got " + r.dump());
      }
      out.relators.push_back(parse_word(r.get<std::string>(), out.rank));
    }
    P = std::move(out);
  }

  inline void to_json(Json& j, Witness const& w) {
    j = Json{{"target", w.target}, {"word", w.word}};
    if (!w.relator_factors.empty()) {
      Json f = Json::array();
      for (auto const& rc : w.relator_factors) {
        f.push_back({{"relator", rc.relator}, {"conjugator", rc.conjugator}});
      }
      j["relator_conjugates"] = std::move(f);
    }
    if (w.occurrence) {
      j["occurrence"] = {{"prefix", w.occurrence->first},
                         {"suffix", w.occurrence->second}};
    }
  }

  inline void from_json(Json const& j, Witness& w) {
    Witness out{field(j, "target").get<Letter>(), field(j, "word").get<Word>(), {}, {}};
    if (auto it = j.find("relator_conjugates"); it != j.end()) {
      for (auto const& f : *it) {
        out.relator_factors.push_back(
            {count_from_json(field(f, "relator"), "relator"),
             field(f, "conjugator").get<Word>()});
      }
    }
    if (auto it = j.find("occurrence"); it != j.end()) {
      out.occurrence = std::pair{field(*it, "prefix").get<Word>(),
                                 field(*it, "suffix").get<Word>()};
    }
    w = std::move(out);
  }

  inline void to_json(Json& j, WitnessTable const& t) {
    j = t.entries();
  }

  inline void from_json(Json const& j, WitnessTable& t) {
    WitnessTable out;
    for (auto const& w : j) {
      out.add(w.get<Witness>());
    }
    t = std::move(out);
  }

  ////////////////////////////////////////////////////////////////////////
  // Verdicts and reports
  ////////////////////////////////////////////////////////////////////////

  inline void to_json(Json& j, AutomatonStats const& s) {
    j = Json{{"flower_states", s.flower_states},
             {"flower_transitions", s.flower_transitions},
             {"saturation_epsilons", s.saturation_epsilons},
             {"restricted_states", s.restricted_states},
             {"dfa_states", s.dfa_states}};
  }

  inline void to_json(Json& j, FiredRule const& r) {
    j = Json{{"rule", r.name},
             {"justification", r.justification},
             {"conditional", r.conditional}};
  }

  inline void from_json(Json const& j, FiredRule& r) {
    r = FiredRule{field(j, "rule").get<std::string>(),
                  field(j, "justification").get<std::string>(),
                  field(j, "conditional").get<bool>()};
  }

  inline void to_json(Json& j, RankReport const& r) {
    j = Json{{"group_rank_lower", r.group_rank_lower},
             {"group_rank_upper", r.group_rank_upper},
             {"semigroup_rank_lower", r.semigroup_rank_lower},
             {"semigroup_rank_upper", r.semigroup_rank_upper},
             {"group_rank_decided", r.group_rank_decided},
             {"semigroup_rank_decided", r.semigroup_rank_decided},
             {"abelianization", r.abelianization},
             {"flags", {{"nilpotent", r.flags.nilpotent}}},
             {"rules_fired", r.rules_fired}};
  }

  inline void from_json(Json const& j, RankReport& r) {
    RankReport out;
    out.group_rank_lower = count_from_json(field(j, "group_rank_lower"), "bound");
    out.group_rank_upper = count_from_json(field(j, "group_rank_upper"), "bound");
    out.semigroup_rank_lower =
        count_from_json(field(j, "semigroup_rank_lower"), "bound");
    out.semigroup_rank_upper =
        count_from_json(field(j, "semigroup_rank_upper"), "bound");
    out.group_rank_decided     = field(j, "group_rank_decided").get<bool>();
    out.semigroup_rank_decided = field(j, "semigroup_rank_decided").get<bool>();
    out.abelianization = field(j, "abelianization").get<AbelianGroup>();
    out.flags.nilpotent = field(field(j, "flags"), "nilpotent").get<bool>();
    out.rules_fired     = field(j, "rules_fired").get<std::vector<FiredRule>>();
    r = std::move(out);
  }

  inline void to_json(Json& j, Rank const& r) {
    if (r.is_infinite()) {
      j = "inf";
    } else {
      j = r.value();
    }
  }

  inline void to_json(Json& j, RankTriple const& t) {
    j = Json{{"group_rank", t.group_rank},
             {"semigroup_rank", t.semigroup_rank},
             {"monoid_rank", t.monoid_rank}};
  }

}  // namespace rankforge

#endif  // RANKFORGE_SERIALIZE_HPP_
