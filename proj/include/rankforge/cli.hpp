#ifndef RANKFORGE_CLI_HPP_
#define RANKFORGE_CLI_HPP_

// The rank-forge command line. run() parses arguments, dispatches to the
// library and writes one JSON report to `out`. Exit codes: 0 success,
// 2 invalid input, 1 internal error.

#include <chrono>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "abelian.hpp"
#include "analyzer.hpp"
#include "catalog.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "free_group.hpp"
#include "int_matrix.hpp"
#include "regress.hpp"
#include "serialize.hpp"
#include "words.hpp"

namespace rankforge::cli {

  inline constexpr int exit_ok       = 0;
  inline constexpr int exit_internal = 1;
  inline constexpr int exit_invalid  = 2;

  class UnknownSubcommand : public InvalidInput {
    using InvalidInput::InvalidInput;
  };
  class MalformedWord : public InvalidInput {
    using InvalidInput::InvalidInput;
  };
  class MalformedJson : public InvalidInput {
    using InvalidInput::InvalidInput;
  };

  namespace detail {

    inline std::map<std::string, std::vector<std::string>> const& command_tree() {
      static std::map<std::string, std::vector<std::string>> const tree{
          {"fg", {"decide-sgen", "decide-sbasis", "group-gen"}},
          {"ab", {"rank", "decide-sgen", "decide-sbasis", "snf"}},
          {"witness", {"augment", "torsion", "qp"}},
          {"surface", {}},
          {"variety", {}},
          {"analyze", {}},
          {"examples", {}},
          {"regress", {}}};
      return tree;
    }

    inline bool is_help(std::string const& a) {
      return a == "-h" || a == "--help";
    }

    // Checks the first one or two non-option words against the command tree
    // so that a typo gets a clear message rather than a generic parse error.
    inline void check_subcommands(std::vector<std::string> const& args) {
      std::vector<std::string> words;
      for (auto const& a : args) {
        if (is_help(a)) {
          return;
        }
        if (a == "--pretty") {  // the only global flag
          continue;
        }
        if (!a.empty() && a[0] == '-') {
          break;
        }
        words.push_back(a);
        if (words.size() == 2) {
          break;
        }
      }
      if (words.empty()) {
        throw UnknownSubcommand("missing subcommand; expected one of fg, ab, witness, "
                                "surface, variety, analyze, examples, regress");
      }
      auto const& tree = command_tree();
      auto        it   = tree.find(words[0]);
      if (it == tree.end()) {
        throw UnknownSubcommand("unknown subcommand \"" + words[0] + "\"");
      }
      if (it->second.empty()) {
        return;
      }
      if (words.size() < 2) {
        throw UnknownSubcommand("\"" + words[0] + "\" needs a subcommand");
      }
      if (std::find(it->second.begin(), it->second.end(), words[1]) == it->second.end()) {
        throw UnknownSubcommand("unknown subcommand \"" + words[0] + " " + words[1]
                                + "\"");
      }
    }

    inline std::vector<Word> parse_words(std::vector<std::string> const& texts,
                                         std::optional<std::size_t>      rank) {
      std::vector<Word> out;
      for (auto const& t : texts) {
        try {
          out.push_back(parse_word(t, rank));
        } catch (InvalidInput const& e) {
          throw MalformedWord(e.what());
        }
      }
      return out;
    }

    inline Json parse_json_text(std::string const& text, std::string const& origin) {
      try {
        return Json::parse(text);
      } catch (Json::parse_error const& e) {
        throw MalformedJson(origin + ": " + e.what());
      }
    }

    inline Presentation load_presentation(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw InvalidInput("cannot open \"" + path + "\"");
      }
      std::stringstream buf;
      buf << in.rdbuf();
      Json                     j = parse_json_text(buf.str(), path);
      std::size_t              rank;
      std::vector<std::string> texts;
      try {
        rank = count_from_json(field(j, "rank"), "rank");
        texts = field(j, "relators").get<std::vector<std::string>>();
      } catch (Json::exception const& e) {
        throw MalformedJson(path + ": " + e.what());
      } catch (InvalidInput const& e) {
        throw MalformedJson(path + ": " + e.what());
      }
      return Presentation{rank, parse_words(texts, rank)};
    }

    inline std::vector<BigInt> parse_factor_list(std::string const& text) {
      std::vector<BigInt> out;
      if (rankforge::detail::trim(text).empty()) {
        return out;
      }
      for (auto item : rankforge::detail::split(text, ',')) {
        out.push_back(rankforge::detail::parse_integer(item));
      }
      return out;
    }

    inline std::vector<AbelianElement> parse_elements(CyclicDecomposition const& dec,
                                                      std::string const&         text) {
      std::vector<AbelianElement> out;
      for (auto const& coords : parse_element_list(text)) {
        out.push_back(dec.to_group(coords));
      }
      return out;
    }

    inline Json elements_to_json(std::vector<AbelianElement> const& xs) {
      Json out = Json::array();
      for (auto const& x : xs) {
        out.push_back(element_to_json(x));
      }
      return out;
    }

    // Witness entries plus the witness rewritten over the input generators
    // and freely reduced.
    inline Json witnesses_to_json(WitnessTable const& table, std::vector<Word> const& out_set) {
      Json out = Json::array();
      for (auto const& w : table) {
        Json e        = w;
        e["expanded"] = to_string(reduce(expand(w.word, out_set)).word());
        out.push_back(std::move(e));
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    inline Json fg_decide(std::string const&              name,
                          std::size_t                     rank,
                          std::vector<std::string> const& texts) {
      auto S = parse_words(texts, rank);
      if (name == "group-gen") {
        auto core = stallings_fold(S, rank);
        return {{"command", "fg group-gen"},
                {"rank", rank},
                {"words", S},
                {"group_generates", core.is_rose(rank)},
                {"core_graph",
                 {{"vertices", core.vertex_count}, {"edges", core.edges.size()}}},
                {"provenance",
                 {{"group_generates",
                   "decided: Stallings folding reaches the one-vertex rose"}}}};
      }
      auto v = analyze_free_subset(S, rank);
      return {{"command", "fg " + name},
              {"rank", rank},
              {"words", S},
              {"generates", v.generates},
              {"basis", v.basis},
              {"automaton_stats", v.stats},
              {"provenance",
               {{"generates",
                 "decided: flower automaton, Benois saturation, restriction to "
                 "reduced words, equivalence with the automaton of all reduced "
                 "words"},
                {"basis",
                 "decided: generates and exactly rank + 1 distinct elements "
                 "(semigroup rank of a free group)"}}}};
    }

    inline Json ab_rank(std::size_t free_rank, std::string const& factors) {
      AbelianGroup G(free_rank, parse_factor_list(factors));
      auto         s = semigroup_rank_abelian(G);
      return {{"command", "ab rank"},
              {"group", G},
              {"group_rank", group_rank_abelian(G)},
              {"semigroup_rank", s},
              {"monoid_rank", monoid_rank_from_semigroup(s, G.is_trivial())},
              {"provenance",
               {{"group_rank", "closed form: free rank + number of invariant factors"},
                {"semigroup_rank",
                 "closed form: group rank + 1 when torsion-free, else group rank"},
                {"monoid_rank",
                 "semigroup rank, minus 1 for the trivial group"}}}};
    }

    inline Json ab_decide(std::string const& name,
                          std::string const& group,
                          std::string const& elems) {
      auto dec = parse_group(group);
      auto X   = parse_elements(dec, elems);
      auto const& G = dec.group();
      auto        v = analyze_abelian_subset(X, G);
      Json        cert = nullptr;
      if (v.certificate) {
        cert = {{"elements", elements_to_json(v.elements)},
                {"coefficients", big_vector_to_json(v.certificate->coefficients)}};
      }
      return {{"command", "ab " + name},
              {"group", G},
              {"elements", elements_to_json(X)},
              {"group_rank", group_rank_abelian(G)},
              {"semigroup_rank", semigroup_rank_abelian(G)},
              {"group_generates", v.group_generates},
              {"generates", v.generates},
              {"basis", v.basis},
              {"certificate", cert},
              {"provenance",
               {{"group_generates", "decided: Smith normal form of the elements "
                                    "together with the torsion relations"},
                {"generates", "decided: group generation and a strictly positive "
                              "integer kernel vector of the free parts (exact "
                              "Fourier-Motzkin elimination)"},
                {"basis", "decided: generates and size equals the semigroup rank"}}}};
    }

    inline Json ab_snf(std::string const& text) {
      Json      j = parse_json_text(text, "--matrix");
      IntMatrix A;
      try {
        A = j.get<IntMatrix>();
      } catch (Json::exception const& e) {
        throw MalformedJson(std::string("--matrix: ") + e.what());
      }
      auto s = snf(A);
      return {{"command", "ab snf"},
              {"matrix", A},
              {"U", s.U},
              {"D", s.D},
              {"V", s.V},
              {"diagonal", big_vector_to_json(s.diagonal())},
              {"verified", s.U * A * s.V == s.D},
              {"provenance",
               {{"diagonal", "computed: unimodular row and column operations, "
                             "U A V = D checked exactly"}}}};
    }

    inline Json witness_augment(std::optional<std::size_t>      rank,
                                std::vector<std::string> const& texts) {
      auto gens = parse_words(texts, rank);
      auto aug  = augment_to_semigroup_gens(gens);
      return {{"command", "witness augment"},
              {"inputs", gens},
              {"generating_set", aug.generating_set},
              {"added", aug.added},
              {"witnesses", witnesses_to_json(aug.witnesses, aug.generating_set)},
              {"verified", verify_free_reduction(aug.witnesses, gens, aug.generating_set)},
              {"provenance",
               {{"verified", "checked: each witness is positive over the "
                             "generating set and freely reduces to its target"}}}};
    }

    inline Json witness_torsion(std::size_t                     order,
                                std::size_t                     torsion_index,
                                std::string const&              group,
                                std::string const&              elems,
                                std::vector<std::string> const& texts) {
      auto gens = parse_words(texts, std::nullopt);
      auto res  = torsion_shrink(gens, torsion_index, order);
      Json out{{"command", "witness torsion"},
               {"inputs", gens},
               {"torsion_index", torsion_index},
               {"torsion_order", order},
               {"order", res.order},
               {"generating_set", res.generating_set},
               {"witnesses", witnesses_to_json(res.witnesses, res.generating_set)}};
      if (group.empty() != elems.empty()) {
        throw InvalidInput("--group and --elems must be given together");
      }
      if (!group.empty()) {
        auto dec    = parse_group(group);
        auto images = parse_elements(dec, elems);
        out["verified_in"] = dec.group();
        out["verified"] =
            verify_in_abelian_group(res.witnesses, gens, res.generating_set, images,
                                    dec.group());
        out["provenance"] = {{"verified", "checked: both sides of every witness "
                                          "evaluated in the given abelian group"}};
      } else {
        out["verified"]   = nullptr;
        out["provenance"] = {{"verified", "not checked: witnesses hold modulo the "
                                          "relation t^m = 1; pass --group and "
                                          "--elems to evaluate them"}};
      }
      return out;
    }

    inline Json witness_qp(std::string const& path) {
      auto P     = load_presentation(path);
      auto table = positive_inverse_witnesses(P);
      auto gens  = free_basis(P.rank);
      return {{"command", "witness qp"},
              {"presentation", P},
              {"witnesses", witnesses_to_json(table, gens)},
              {"verified", verify_conjugate_of_relator(P, table)},
              {"provenance",
               {{"verified", "checked: target times the listed relator conjugates "
                             "freely equals the witness"}}}};
    }

    inline Json surface(std::size_t genus, bool non_orientable) {
      SurfaceDescriptor d{genus, !non_orientable};
      auto              info = surface_info(d);
      Json out{{"command", "surface"},
               {"genus", genus},
               {"orientable", d.orientable},
               {"presentation", info.presentation},
               {"abelianization", abelianization(info.presentation)},
               {"group_rank", info.ranks.group_rank},
               {"semigroup_rank", info.ranks.semigroup_rank},
               {"monoid_rank", info.ranks.monoid_rank}};
      auto gens = free_basis(info.presentation.rank);
      if (info.augmented) {
        out["semigroup_generating_set"] = info.augmented->generating_set;
        out["witnesses"] =
            witnesses_to_json(info.augmented->witnesses, info.augmented->generating_set);
        out["verified"] = verify_free_reduction(info.augmented->witnesses, gens,
                                                info.augmented->generating_set);
      } else if (info.witnesses) {
        out["semigroup_generating_set"] = gens;
        out["witnesses"] = witnesses_to_json(*info.witnesses, gens);
        out["verified"]  = verify_conjugate_of_relator(info.presentation, *info.witnesses);
      }
      out["provenance"] = {
          {"ranks", d.orientable
                        ? "closed form: 2g generators, 2g + 1 semigroup generators "
                          "(torsion-free abelianization of full rank)"
                        : "closed form: g generators; the positive relator makes "
                          "every inverse a positive word"}};
      return out;
    }

    inline Json variety(bool periodic, std::size_t n) {
      auto t = variety_rank(periodic ? VarietyKind::periodic : VarietyKind::contains_z, n);
      return {{"command", "variety"},
              {"kind", periodic ? "periodic" : "contains-z"},
              {"n", n},
              {"group_rank", t.group_rank},
              {"semigroup_rank", t.semigroup_rank},
              {"monoid_rank", t.monoid_rank},
              {"provenance",
               {{"ranks", periodic ? "closed form: inverses are positive powers"
                                   : "closed form: the free abelian quotient Z^n "
                                     "forces n + 1 semigroup generators"}}}};
    }

    inline Json analyze(std::string const& path, bool nilpotent) {
      auto P   = load_presentation(path);
      auto rep = rank_bounds(P, StructuralFlags{nilpotent});
      Json out = rep;
      out["command"]      = "analyze";
      out["presentation"] = P;
      out["provenance"]   = {{"bounds", "each bound comes from the rules listed in "
                                        "rules_fired; conditional rules rely on "
                                        "the asserted flags"}};
      return out;
    }

    inline Json examples() {
      Json list = Json::array();
      for (auto const& f : worked_examples()) {
        Json e{{"id", f.id}, {"claim", f.claim}, {"verified", f.verified}};
        if (f.group) {
          e["group"]    = *f.group;
          e["elements"] = elements_to_json(f.elements);
        }
        if (f.presentation) {
          e["presentation"] = *f.presentation;
          e["nilpotent"]    = f.nilpotent;
        }
        if (f.group_rank) {
          e["group_rank"] = *f.group_rank;
        }
        if (f.semigroup_rank) {
          e["semigroup_rank"] = *f.semigroup_rank;
        }
        if (f.semigroup_generates) {
          e["semigroup_generates"] = *f.semigroup_generates;
        }
        if (f.semigroup_basis) {
          e["semigroup_basis"] = *f.semigroup_basis;
        }
        if (!f.witness_set.empty()) {
          e["witness_set"] = f.witness_set;
        }
        list.push_back(std::move(e));
      }
      return {{"command", "examples"},
              {"fixtures", list},
              {"open_questions", open_questions()}};
    }

    inline Json regress_report() {
      auto rows   = regress();
      Json table  = Json::array();
      std::size_t failed = 0;
      for (auto const& r : rows) {
        failed += r.pass ? 0 : 1;
        table.push_back({{"fixture", r.fixture},
                         {"check", r.check},
                         {"expected", r.expected},
                         {"computed", r.computed},
                         {"pass", r.pass}});
      }
      return {{"command", "regress"},
              {"rows", table},
              {"passed", rows.size() - failed},
              {"failed", failed}};
    }

    ////////////////////////////////////////////////////////////////////////
    // Output
    ////////////////////////////////////////////////////////////////////////

    inline std::string scalar_text(Json const& j) {
      return j.is_string() ? j.get<std::string>() : j.dump();
    }

    inline void flatten(Json const&                                       j,
                        std::string const&                                prefix,
                        std::vector<std::pair<std::string, std::string>>& rows) {
      if (j.is_object()) {
        for (auto const& [k, v] : j.items()) {
          flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
        }
      } else if (j.is_array()) {
        bool scalars = std::all_of(j.begin(), j.end(), [](auto const& e) {
          return e.is_primitive();
        });
        if (scalars) {
          std::string s;
          for (auto const& e : j) {
            s += (s.empty() ? "" : ", ") + scalar_text(e);
          }
          rows.emplace_back(prefix, s);
        } else {
          for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
          }
        }
      } else {
        rows.emplace_back(prefix, scalar_text(j));
      }
    }

    // Two-column key/value table.
    inline void print_pretty(Json const& j, std::ostream& out) {
      std::vector<std::pair<std::string, std::string>> rows;
      flatten(j, "", rows);
      std::size_t width = 0;
      for (auto const& [k, v] : rows) {
        width = std::max(width, k.size());
      }
      for (auto const& [k, v] : rows) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
      }
    }

  }  // namespace detail

  // `args` excludes the program name.
  [[nodiscard]] inline int run(std::vector<std::string> const& args,
                               std::ostream&                   out,
                               std::ostream&                   err) {
    CLI::App app{"Semigroup generation and rank computations for groups", "rank-forge"};
    bool     pretty = false;
    app.add_flag("--pretty", pretty, "Print a key/value table instead of JSON");
    app.require_subcommand(1);

    std::size_t                rank = 0;
    std::optional<std::size_t> opt_rank;
    std::vector<std::string>   words;
    std::size_t                free_rank = 0, order = 0, torsion_index = 0, genus = 0,
                variety_n = 0;
    std::string factors, group, elems, matrix, path;
    bool        non_orientable = false, periodic = false, contains_z = false,
         nilpotent = false;
    bool torsion_index_given = false;

    auto* fg = app.add_subcommand("fg", "Finite subsets of a free group");
    fg->require_subcommand(1);
    for (auto const* name : {"decide-sgen", "decide-sbasis", "group-gen"}) {
      auto* s = fg->add_subcommand(name);
      s->add_option("--rank", rank, "Rank of the free group")->required();
      s->add_option("words", words, "Words in the letter syntax");
      s->fallthrough();
    }
    fg->fallthrough();
    fg->get_subcommand("decide-sgen")->description("Does S generate F_n as a semigroup?");
    fg->get_subcommand("decide-sbasis")->description("Is S a semigroup basis of F_n?");
    fg->get_subcommand("group-gen")->description("Does S generate F_n as a group?");

    auto* ab = app.add_subcommand("ab", "Finitely generated abelian groups");
    ab->require_subcommand(1);
    ab->fallthrough();
    auto* ab_rank = ab->add_subcommand("rank", "Group, semigroup and monoid rank");
    ab_rank->add_option("--free-rank", free_rank);
    ab_rank->add_option("--factors", factors, "Comma-separated cyclic orders");
    ab_rank->fallthrough();
    for (auto const* name : {"decide-sgen", "decide-sbasis"}) {
      auto* s = ab->add_subcommand(name, "Decide semigroup generation of a subset");
      s->add_option("--group", group, "e.g. Z^2xZ_4")->required();
      s->add_option("--elems", elems, "e.g. (1,0,0);(0,1,1)")->required();
      s->fallthrough();
    }
    auto* ab_snf = ab->add_subcommand("snf", "Smith normal form");
    ab_snf->add_option("--matrix", matrix, "JSON rows, e.g. [[2,4],[6,8]]")->required();
    ab_snf->fallthrough();

    auto* wt = app.add_subcommand("witness", "Generating-set constructions");
    wt->require_subcommand(1);
    wt->fallthrough();
    auto* w_aug = wt->add_subcommand("augment", "Append the inverse of the product");
    w_aug->add_option("--rank", opt_rank);
    w_aug->add_option("words", words)->required();
    w_aug->fallthrough();
    auto* w_tor = wt->add_subcommand("torsion", "Drop a generator of finite order");
    w_tor->add_option("--order", order, "Order m >= 2 of the finite-order generator")
        ->required();
    w_tor->add_option("--torsion-index", torsion_index)->each([&](std::string const&) {
      torsion_index_given = true;
    });
    w_tor->add_option("--group", group, "Abelian group used to check the witnesses");
    w_tor->add_option("--elems", elems, "Images of the letters a, b, ... in --group");
    w_tor->add_option("words", words)->required();
    w_tor->fallthrough();
    auto* w_qp = wt->add_subcommand("qp", "Positive words for inverses from relators");
    w_qp->add_option("--presentation", path, "JSON file {rank, relators}")->required();
    w_qp->fallthrough();

    auto* sf = app.add_subcommand("surface", "Ranks of a surface group");
    sf->add_option("--genus", genus)->required();
    sf->add_flag("--non-orientable", non_orientable);
    sf->fallthrough();

    auto* vr = app.add_subcommand("variety", "Ranks of a relatively free group");
    auto* o_per = vr->add_flag("--periodic", periodic);
    auto* o_cz  = vr->add_flag("--contains-z", contains_z);
    o_per->excludes(o_cz);
    vr->add_option("--n", variety_n)->required();
    vr->fallthrough();

    auto* an = app.add_subcommand("analyze", "Rank bounds for a presentation");
    an->add_option("presentation", path, "JSON file {rank, relators}")->required();
    an->add_flag("--nilpotent", nilpotent, "Assert that the group is nilpotent");
    an->fallthrough();

    auto* ex = app.add_subcommand("examples", "List the worked examples");
    auto* rg = app.add_subcommand("regress", "Recompute the worked examples");
    ex->fallthrough();
    rg->fallthrough();

    auto const start = std::chrono::steady_clock::now();
    try {
      if (std::none_of(args.begin(), args.end(), detail::is_help)) {
        detail::check_subcommands(args);
      }
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);

      Json report;
      if (fg->parsed()) {
        for (auto* s : fg->get_subcommands()) {
          report = detail::fg_decide(s->get_name(), rank, words);
        }
      } else if (ab->parsed()) {
        if (ab_rank->parsed()) {
          report = detail::ab_rank(free_rank, factors);
        } else if (ab_snf->parsed()) {
          report = detail::ab_snf(matrix);
        } else {
          report = detail::ab_decide(ab->get_subcommands().front()->get_name(), group,
                                     elems);
        }
      } else if (w_aug->parsed()) {
        report = detail::witness_augment(opt_rank, words);
      } else if (w_tor->parsed()) {
        std::size_t idx = torsion_index_given ? torsion_index
                                              : (words.empty() ? 0 : words.size() - 1);
        report = detail::witness_torsion(order, idx, group, elems, words);
      } else if (w_qp->parsed()) {
        report = detail::witness_qp(path);
      } else if (sf->parsed()) {
        report = detail::surface(genus, non_orientable);
      } else if (vr->parsed()) {
        if (periodic == contains_z) {
          throw InvalidInput("variety needs exactly one of --periodic, --contains-z");
        }
        report = detail::variety(periodic, variety_n);
      } else if (an->parsed()) {
        report = detail::analyze(path, nilpotent);
      } else if (ex->parsed()) {
        report = detail::examples();
      } else {
        report = detail::regress_report();
      }
      auto const elapsed = std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start);
      report["elapsed_ms"] = elapsed.count();

      if (pretty) {
        detail::print_pretty(report, out);
      } else {
        out << report.dump(2) << '\n';
      }
      if (rg->parsed() && report["failed"].get<std::size_t>() > 0) {
        return exit_internal;
      }
      return exit_ok;
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: invalid arguments: " << e.what() << '\n';
      return exit_invalid;
    } catch (UnknownSubcommand const& e) {
      err << "error: " << e.what() << '\n';
      return exit_invalid;
    } catch (MalformedWord const& e) {
      err << "error: malformed word: " << e.what() << '\n';
      return exit_invalid;
    } catch (MalformedJson const& e) {
      err << "error: malformed JSON: " << e.what() << '\n';
      return exit_invalid;
    } catch (CoverageViolation const& e) {
      err << "error: coverage violation: " << e.what() << '\n';
      return exit_invalid;
    } catch (InvalidInput const& e) {
      err << "error: invalid input: " << e.what() << '\n';
      return exit_invalid;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << '\n';
      return exit_internal;
    }
  }

  [[nodiscard]] inline int run(int argc, char const* const* argv, std::ostream& out,
                               std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
      args.emplace_back(argv[i]);
    }
    return run(args, out, err);
  }

}  // namespace rankforge::cli

#endif  // RANKFORGE_CLI_HPP_
