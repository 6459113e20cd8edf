#pragma once

// Command-line front end. execute() is what the hopfcomb binary runs; it is
// kept in the library so the dispatch can be tested without a process.

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfcomb/axioms.hpp"
#include "hopfcomb/congruence.hpp"
#include "hopfcomb/dual.hpp"
#include "hopfcomb/json.hpp"
#include "hopfcomb/quotient.hpp"
#include "hopfcomb/realization.hpp"
#include "hopfcomb/series.hpp"
#include "hopfcomb/trees.hpp"
#include "hopfcomb/word.hpp"

namespace hopfcomb::cli {

  enum ExitCode : int { success = 0, failure = 1, usage = 2 };

  inline constexpr std::size_t maxlen_ceiling       = 7;
  inline constexpr std::size_t fiber_ceiling        = 9;
  inline constexpr std::size_t default_series_limit = 64;
  inline constexpr std::size_t series_ceiling       = 512;

  namespace detail {
    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    //! HOPFCOMB_MAX_LEN if set, else the library default.
    inline std::size_t default_maxlen() {
      char const* env = std::getenv("HOPFCOMB_MAX_LEN");
      if (env == nullptr || *env == '\0') {
        return default_exhaustive_maxlen;
      }
      std::size_t        value = 0;
      std::istringstream in(env);
      if (!(in >> value) || !in.eof()) {
        throw UsageError(std::string("HOPFCOMB_MAX_LEN is not a non-negative integer: ") + env);
      }
      return value;
    }

    inline void require_at_most(std::size_t value, std::size_t bound, char const* what) {
      if (value > bound) {
        throw Error(ErrorKind::bound_exceeded, std::string(what) + " " + std::to_string(value)
                                                   + " exceeds the limit "
                                                   + std::to_string(bound));
      }
    }

    inline bool looks_like_tree(std::string const& s) {
      auto p = s.find_first_not_of(" \t");
      return p != std::string::npos && (s[p] == '(' || s[p] == '.');
    }

    //! A tree literal, or a packed word standing for the tree of its P-symbol.
    inline Btm tree_operand(std::string const& s) {
      if (looks_like_tree(s)) {
        return parse_btm(s);
      }
      auto const w = parse_word(s);
      if (!is_canonical(PhiMap::packing, w)) {
        throw Error(ErrorKind::invalid_index, to_string(w) + " is not a packed word");
      }
      return btm_of_word(w);
    }

    struct Output {
      std::ostream& out;
      bool          as_json;

      template <typename T>
      void emit(json const& j, T const& text) const {
        if (as_json) {
          out << j.dump() << '\n';
        } else {
          out << text << '\n';
        }
      }

      void emit_lines(json const& j, std::vector<std::string> const& lines) const {
        if (as_json) {
          out << j.dump() << '\n';
        } else {
          for (auto const& l : lines) {
            out << l << '\n';
          }
        }
      }
    };

    struct AlgebraChoice {
      std::string name = "wqsym";
      std::string congruence;
      std::string phi = "pack";
      bool        verify = false;
    };

    inline void add_algebra_options(CLI::App* cmd, AlgebraChoice& a) {
      cmd->add_option("--algebra,-a", a.name,
                      "fqsym | wqsym | wqsym-dual | stal | quotient | pbtm | pbtm-dual")
          ->capture_default_str();
      cmd->add_option("--congruence,-c", a.congruence, "congruence of a quotient");
      cmd->add_option("--phi", a.phi, "std | pack, for a quotient")->capture_default_str();
      cmd->add_flag("--verify", a.verify,
                    "recompute quotient operations on every representative");
    }

    // Calls f(algebra, parse) where parse turns an operand string into an
    // index of that algebra.
    template <typename F>
    void with_algebra(AlgebraChoice const& a, F&& f) {
      auto word_index = [](auto wrap) {
        return [wrap](std::string const& s) { return wrap(parse_word(s)); };
      };
      if (a.name == "fqsym") {
        f(Fqsym{}, word_index([](Word w) { return PermutationIndex{std::move(w)}; }));
      } else if (a.name == "wqsym") {
        f(Wqsym{}, word_index([](Word w) { return PackedWordIndex{std::move(w)}; }));
      } else if (a.name == "wqsym-dual") {
        f(WqsymDual{},
          word_index([](Word w) { return Dual<PackedWordIndex>{PackedWordIndex{std::move(w)}}; }));
      } else if (a.name == "pbtm") {
        f(Pbtm(a.verify), [](std::string const& s) { return BtmIndex{tree_operand(s)}; });
      } else if (a.name == "pbtm-dual") {
        f(PbtmDual{},
          [](std::string const& s) { return Dual<BtmIndex>{BtmIndex{tree_operand(s)}}; });
      } else if (a.name == "stal" || a.name == "quotient") {
        auto const c = a.name == "stal" ? CongruenceExpr::stalactic()
                       : a.congruence.empty()
                           ? throw UsageError("--algebra quotient needs --congruence")
                           : parse_congruence(a.congruence);
        auto const phi = a.name == "stal" ? PhiMap::packing : parse_phi(a.phi);
        auto dispatch  = [&](auto const& alg) {
          f(alg, [&alg](std::string const& s) { return alg.index_of(parse_word(s)); });
        };
        if (phi == PhiMap::standardization) {
          dispatch(QuotientAlgebra<PhiMap::standardization>(c, a.verify));
        } else {
          dispatch(QuotientAlgebra<PhiMap::packing>(c, a.verify));
        }
      } else {
        throw Error(ErrorKind::parse_error, "unknown algebra '" + a.name + "'");
      }
    }

    inline std::string join(std::vector<std::string> const& parts, char const* sep) {
      std::string out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
      }
      return out;
    }
  }  // namespace detail

  //! Runs one command; args excludes the program name. Returns the exit
  //! status: 0 success, 1 domain error or failed check, 2 usage error.
  inline int execute(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    using detail::Output;

    CLI::App app("Combinatorial Hopf algebras on words and trees with multiplicities",
                 "hopfcomb");
    app.require_subcommand(1, 1);
    bool as_json = false;
    app.add_flag("--json", as_json, "print JSON instead of text");

    std::function<void()> run;
    auto                  sub = [&](char const* name, char const* help) {
      auto* cmd = app.add_subcommand(name, help);
      cmd->add_flag("--json", as_json, "print JSON instead of text");
      return cmd;
    };

    // phi
    std::string word_text, phi_text = "pack", congruence_text, tree_text;
    {
      auto* cmd = sub("phi", "apply std or pack to a word");
      cmd->add_option("--phi", phi_text, "std | pack")->capture_default_str();
      cmd->add_option("--word,-w", word_text, "word, e.g. 45142234212 or 7,2,14")->required();
      cmd->callback([&] {
        run = [&] {
          auto const w = apply_phi(parse_phi(phi_text), parse_word(word_text));
          Output{out, as_json}.emit(json(w), to_string(w));
        };
      });
    }
    // canon
    {
      auto* cmd = sub("canon", "least word of the congruence class of a word");
      cmd->add_option("--congruence,-c", congruence_text, "sylv | sylv# | stal | taiga | union(e,e) | inter(e,e)")
          ->required();
      cmd->add_option("--word,-w", word_text, "word")->required();
      cmd->callback([&] {
        run = [&] {
          auto const w = canonical_form(parse_congruence(congruence_text), parse_word(word_text));
          Output{out, as_json}.emit(json(w), to_string(w));
        };
      });
    }
    // class
    {
      auto* cmd = sub("class", "all words congruent to a word, one per line");
      cmd->add_option("--congruence,-c", congruence_text, "congruence")->required();
      cmd->add_option("--word,-w", word_text, "word")->required();
      cmd->callback([&] {
        run = [&] {
          auto const               cls = class_of(parse_congruence(congruence_text),
                                    parse_word(word_text));
          std::vector<std::string> lines;
          for (auto const& m : cls.members) {
            lines.push_back(to_string(m));
          }
          Output{out, as_json}.emit_lines(json(cls), lines);
        };
      });
    }
    // insert
    {
      auto* cmd = sub("insert", "P-symbol and Q-symbol of a word (two lines)");
      cmd->add_option("--word,-w", word_text, "word")->required();
      cmd->callback([&] {
        run = [&] {
          auto const [p, q] = rs_pair(parse_word(word_text));
          Output{out, as_json}.emit_lines(json{{"p", json(p)},
                                               {"q", json(q)},
                                               {"p_text", to_string(p)},
                                               {"q_text", to_string(q)}},
                                          {to_string(p), to_string(q)});
        };
      });
    }
    // btm
    std::optional<std::size_t> size_opt;
    bool                       count_only = false;
    {
      auto* cmd = sub("btm", "tree with multiplicities of a word, or all trees of a size");
      auto* w   = cmd->add_option("--word,-w", word_text, "word");
      auto* s   = cmd->add_option("--size,-n", size_opt, "list every tree of this size");
      w->excludes(s);
      cmd->add_flag("--count", count_only, "with --size, print only the number of trees");
      cmd->callback([&, w] {
        run = [&, w] {
          Output const o{out, as_json};
          if (size_opt) {
            detail::require_at_most(*size_opt, 12, "size");
            auto const trees = enumerate_btm(*size_opt);
            if (count_only) {
              o.emit(json(trees.size()), trees.size());
              return;
            }
            std::vector<std::string> lines;
            json                     j = json::array();
            for (auto const& t : trees) {
              lines.push_back(to_string(t));
              j.push_back(json(t));
            }
            o.emit_lines(j, lines);
          } else if (w->count() > 0) {
            auto const t = btm_of_word(parse_word(word_text));
            o.emit(json(t), to_string(t));
          } else {
            throw detail::UsageError("btm needs --word or --size");
          }
        };
      });
    }
    // hook
    {
      auto* cmd = sub("hook", "hook length count of a tree");
      cmd->add_option("--tree,-t", tree_text, "tree, e.g. \"(2 (1 . .) (2 . .))\"")->required();
      cmd->callback([&] {
        run = [&] {
          auto const n = hook_count(detail::tree_operand(tree_text));
          Output{out, as_json}.emit(json(n), n.str());
        };
      });
    }
    // fiber
    std::size_t fiber_limit = default_fiber_cap;
    {
      auto* cmd = sub("fiber", "packed words whose tree is the given one, one per line");
      cmd->add_option("--tree,-t", tree_text, "tree")->required();
      cmd->add_option("--limit", fiber_limit,
                      "largest tree size accepted (hard ceiling "
                          + std::to_string(fiber_ceiling) + ")")
          ->capture_default_str();
      cmd->callback([&] {
        run = [&] {
          detail::require_at_most(fiber_limit, fiber_ceiling, "fiber limit");
          auto const               words = fiber(detail::tree_operand(tree_text), fiber_limit);
          std::vector<std::string> lines;
          for (auto const& w : words) {
            lines.push_back(to_string(w));
          }
          Output{out, as_json}.emit_lines(json(words), lines);
        };
      });
    }
    // product / coproduct
    detail::AlgebraChoice algebra;
    std::string           left_text, right_text;
    {
      auto* cmd = sub("product", "product of two basis elements");
      detail::add_algebra_options(cmd, algebra);
      cmd->add_option("--left,-l", left_text, "left operand (word or tree)")->required();
      cmd->add_option("--right,-r", right_text, "right operand (word or tree)")->required();
      cmd->callback([&] {
        run = [&] {
          detail::with_algebra(algebra, [&](auto const& alg, auto const& parse) {
            auto const x = alg.product(parse(left_text), parse(right_text));
            Output{out, as_json}.emit(json(x), to_string(x));
          });
        };
      });
    }
    {
      auto* cmd = sub("coproduct", "coproduct of a basis element");
      detail::add_algebra_options(cmd, algebra);
      cmd->add_option("--element,-e", left_text, "operand (word or tree)")->required();
      cmd->callback([&] {
        run = [&] {
          detail::with_algebra(algebra, [&](auto const& alg, auto const& parse) {
            auto const x = alg.coproduct(parse(left_text));
            Output{out, as_json}.emit(json(x), to_string(x));
          });
        };
      });
    }
    // series
    bool        series_btm = false, series_exp = false;
    std::size_t order = 7, operators = 0, series_limit = default_series_limit;
    {
      auto* cmd = sub("series", "power series coefficients");
      auto* b   = cmd->add_flag("--btm", series_btm, "trees with multiplicities counted by size");
      auto* e   = cmd->add_flag("--exp", series_exp,
                                "solution of x = 1 + int e^s x(s)^2 ds, exact rationals");
      auto* t   = cmd->add_option("--tree,-t", tree_text, "evaluate B_T(1) as a monomial");
      b->excludes(e)->excludes(t);
      e->excludes(t);
      cmd->add_option("--order,-n", order, "truncation order")->capture_default_str();
      cmd->add_option("--operators,-k", operators,
                      "number of B_k operators kept with --exp (default: the order)");
      cmd->add_option("--limit", series_limit,
                      "largest order accepted (hard ceiling " + std::to_string(series_ceiling)
                          + ")")
          ->capture_default_str();
      cmd->callback([&] {
        run = [&] {
          Output const o{out, as_json};
          detail::require_at_most(series_limit, series_ceiling, "series limit");
          detail::require_at_most(order, series_limit, "order");
          if (!tree_text.empty()) {
            auto const [c, d] = b_tree_eval(detail::tree_operand(tree_text));
            auto const mono   = TruncatedSeries::monomial(c, d, d);
            o.emit(json{{"coefficient", json(c)}, {"degree", d}}, to_string(mono));
          } else if (series_exp) {
            auto const s = solve_exp_fixed_point(order, operators == 0 ? order : operators);
            o.emit(json(s), to_string(s));
          } else if (series_btm) {
            auto const               s = solve_btm_series(order);
            std::vector<std::string> parts;
            for (auto const& c : s.coefficients()) {
              parts.push_back(to_string(c));
            }
            o.emit(json(s), detail::join(parts, ", "));
          } else {
            throw detail::UsageError("series needs --btm, --exp or --tree");
          }
        };
      });
    }
    // check-good
    std::optional<std::size_t> maxlen_opt;
    {
      auto* cmd = sub("check-good", "exhaustive good-monoid certification");
      cmd->add_option("--congruence,-c", congruence_text, "congruence")->required();
      cmd->add_option("--phi", phi_text, "std | pack")->capture_default_str();
      cmd->add_option("--maxlen", maxlen_opt,
                      "word length and alphabet bound (default 6 or HOPFCOMB_MAX_LEN, hard "
                      "ceiling "
                          + std::to_string(maxlen_ceiling) + ")");
      cmd->callback([&] {
        run = [&] {
          auto const maxlen = maxlen_opt ? *maxlen_opt : detail::default_maxlen();
          detail::require_at_most(maxlen, maxlen_ceiling, "maxlen");
          auto const c      = parse_congruence(congruence_text);
          auto const phi    = parse_phi(phi_text);
          auto const report = check_good(c, phi, maxlen);
          json       j      = report;
          j["congruence"]   = to_string(c);
          j["phi"]          = std::string(to_string(phi));
          std::vector<std::string> lines{
              std::string(report.good() ? "good" : "not good") + ": " + to_string(c) + " with "
              + std::string(to_string(phi)) + " up to length " + std::to_string(maxlen)};
          if (report.counterexample) {
            lines.push_back("counterexample: " + to_string(report.counterexample->first) + " "
                            + to_string(report.counterexample->second) + " (" + report.failure
                            + ")");
          }
          Output{out, as_json}.emit_lines(j, lines);
          if (!report.good()) {
            throw ExitCode::failure;
          }
        };
      });
    }
    // check-hopf
    std::optional<std::size_t> degree_opt;
    {
      auto* cmd = sub("check-hopf", "exhaustive check of the bialgebra identities");
      detail::add_algebra_options(cmd, algebra);
      cmd->add_option("--degree,-n", degree_opt,
                      "total degree bound (default 4, at most the exhaustive bound)");
      cmd->callback([&] {
        run = [&] {
          auto const degree = degree_opt ? *degree_opt : std::size_t(4);
          detail::require_at_most(degree, std::min(detail::default_maxlen(), maxlen_ceiling),
                                  "degree");
          detail::with_algebra(algebra, [&](auto const& alg, auto const&) {
            auto const               report = check_hopf_axioms(alg, degree);
            std::vector<std::string> lines{std::string(report.ok() ? "ok" : "failed") + ": "
                                           + report.algebra + " through degree "
                                           + std::to_string(degree) + ", "
                                           + std::to_string(report.checks) + " identities"};
            for (auto const& v : report.violations) {
              lines.push_back(v);
            }
            Output{out, as_json}.emit_lines(json(report), lines);
            if (!report.ok()) {
              throw ExitCode::failure;
            }
          });
        };
      });
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return success;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return success;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << '\n';
      return usage;
    }

    try {
      run();
    } catch (ExitCode code) {
      return code;
    } catch (detail::UsageError const& e) {
      err << "usage error: " << e.what() << '\n';
      return usage;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return failure;
    }
    return success;
  }

}  // namespace hopfcomb::cli
