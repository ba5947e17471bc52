//
// tropmat - exact matrix semigroups over idempotent semifields
// Copyright (C) 2026 tropmat contributors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

// Command-line front end.  Exit status: 0 on success, 1 when a check
// fails (a JSON witness is printed), 2 on a usage or input error.

#ifndef TROPMAT_CLI_HPP_
#define TROPMAT_CLI_HPP_

#include <fstream>   // for ifstream, ofstream
#include <iostream>  // for istream, ostream
#include <iterator>  // for istreambuf_iterator
#include <optional>  // for optional
#include <sstream>   // for ostringstream
#include <string>    // for string
#include <vector>    // for vector

#include <CLI11.hpp>

#include "deficiency.hpp"
#include "factorization.hpp"
#include "finite_green.hpp"
#include "io.hpp"
#include "plusstar.hpp"
#include "verify.hpp"

namespace tropmat {

  enum class ExitCode : int { Ok = 0, Failed = 1, Usage = 2 };

  struct CliOptions {
    std::uint64_t              seed = 0;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> n;
    std::string                family;
    std::string                kind;
    std::string                g = "1";
    std::string                format = "text";
    std::string                input;
    std::string                path;
    std::string                mode = "anchored";
    std::string                relation;
    std::string                suite;
    std::string                witness;
    std::string                witness_file;
    bool                       list = false;
  };

  class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  namespace cli {

    struct Context {
      CliOptions    opt;
      std::istream& in;
      std::ostream& out;
      std::ostream& err;

      bool json_out() const {
        return opt.format == "json";
      }
    };

    inline std::vector<AnyMatrix> read_input(Context& c) {
      std::string text;
      if (c.opt.input.empty() || c.opt.input == "-") {
        text.assign(std::istreambuf_iterator<char>(c.in),
                    std::istreambuf_iterator<char>());
      } else {
        std::ifstream f(c.opt.input);
        if (!f) {
          throw UsageError("cannot open '" + c.opt.input + "'");
        }
        text.assign(std::istreambuf_iterator<char>(f),
                    std::istreambuf_iterator<char>());
      }
      auto ms = parse_matrices(text);
      if (ms.empty()) {
        throw UsageError("no matrix in input");
      }
      if (!c.opt.kind.empty()) {
        auto want = parse_kind(c.opt.kind);
        for (auto const& m : ms) {
          if (kind_of(m) != want) {
            throw UsageError(std::string("input matrix is not of kind ")
                             + kind_name(want));
          }
        }
      }
      return ms;
    }

    inline Rational scalar_g(Context const& c) {
      Rational g = Rational::parse(c.opt.g);
      if (!(Rational(0) < g)) {
        throw UsageError("--g must be positive");
      }
      return g;
    }

    inline ExitCode emit_proof(Context& c, Proof const& p) {
      if (c.json_out()) {
        c.out << p.to_json().dump(2) << "\n";
      } else {
        c.out << "claim: " << p.claim() << "\n";
        for (auto const& cert : p.to_json()["certificates"]) {
          c.out << (cert["holds"].get<bool>() ? "  holds  " : "  FAILS  ")
                << cert["name"].get<std::string>() << "\n";
        }
        c.out << "verdict: " << (p.verdict() ? "verified" : "refuted") << "\n";
      }
      if (!p.verdict() && !c.json_out()) {
        c.out << p.to_json().dump() << "\n";
      }
      return p.verdict() ? ExitCode::Ok : ExitCode::Failed;
    }

    // Applies a unary matrix map to every input matrix.
    template <typename F>
    ExitCode map_matrices(Context& c, F&& f) {
      json all = json::array();
      for (auto const& m : read_input(c)) {
        std::visit(
            [&](auto const& a) {
              auto r = f(a);
              if (c.json_out()) {
                all.push_back(to_json(r));
              } else {
                c.out << to_text(r);
              }
            },
            m);
      }
      if (c.json_out()) {
        c.out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
      }
      return ExitCode::Ok;
    }

    inline ExitCode cmd_idem(Context& c) {
      json all = json::array();
      for (auto const& m : read_input(c)) {
        bool e = std::visit([](auto const& a) { return is_idempotent(a); }, m);
        all.push_back({{"idempotent", e}});
        if (!c.json_out()) {
          c.out << "idempotent: " << (e ? "true" : "false") << "\n";
        }
      }
      if (c.json_out()) {
        c.out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
      }
      return ExitCode::Ok;
    }

    inline ExitCode cmd_regular(Context& c) {
      json all = json::array();
      for (auto const& m : read_input(c)) {
        std::visit(
            [&](auto const& a) {
              auto r = is_regular(a);
              json j{{"regular", r.regular}};
              if (r.witness) {
                j["witness"] = to_json(*r.witness);
              }
              all.push_back(j);
              if (!c.json_out()) {
                c.out << "regular: " << (r.regular ? "true" : "false") << "\n";
                if (r.witness) {
                  c.out << "# witness X with A X A = A\n" << to_text(*r.witness);
                }
              }
            },
            m);
      }
      if (c.json_out()) {
        c.out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
      }
      return ExitCode::Ok;
    }

    inline ExitCode cmd_factor(Context& c) {
      ExitCode code = ExitCode::Ok;
      json     all  = json::array();
      for (auto const& m : read_input(c)) {
        std::visit(
            [&](auto const& x) {
              auto        fs = idempotent_factorize(x).factors;
              std::size_t k  = 0;
              json        jf = json::array();
              auto        p  = std::decay_t<decltype(x)>::identity(x.dim());
              bool        ok = true;
              for (auto const& f : fs) {
                bool idem = is_idempotent(f);
                ok        = ok && idem;
                p         = mat_mul(p, f);
                ++k;
                jf.push_back({{"factor", to_json(f)}, {"idempotent", idem}});
                if (!c.json_out()) {
                  c.out << "# factor " << k << " of " << fs.size() << "\n"
                        << "# idempotent: " << (idem ? "true" : "false") << "\n"
                        << to_text(f);
                }
              }
              bool exact = p == x;
              if (!c.json_out()) {
                if (fs.empty()) {
                  c.out << "# no factors: n = 1\n";
                }
                c.out << "# product equals input: " << (exact ? "true" : "false")
                      << "\n";
              }
              all.push_back({{"factors", jf}, {"product_equals_input", exact}});
              if (!ok || !exact) {
                code = ExitCode::Failed;
                c.out << json{{"witness", {{"subcommand", "factor"},
                                           {"input", to_text(x)}}}}
                             .dump()
                      << "\n";
              }
            },
            m);
      }
      if (c.json_out()) {
        c.out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
      }
      return code;
    }

    inline DeficiencyMode parse_mode(std::string const& s) {
      if (s == "all") {
        return DeficiencyMode::AllPaths;
      }
      if (s == "length2") {
        return DeficiencyMode::Length2;
      }
      if (s == "anchored") {
        return DeficiencyMode::OneAnchored;
      }
      throw UsageError("--mode must be all, length2 or anchored");
    }

    inline ExitCode cmd_deficiency(Context& c) {
      if (c.opt.witness == "rtlt") {
        return emit_proof(c, rtilde_noncommute_witness(c.opt.n.value_or(4), scalar_g(c)));
      }
      if (!c.opt.witness.empty()) {
        throw UsageError("deficiency --witness accepts only 'rtlt'");
      }
      auto ms = read_input(c);
      if (ms.size() > 2) {
        throw UsageError("deficiency takes one or two matrices");
      }
      json out;
      std::visit(
          [&](auto const& a) {
            using M = std::decay_t<decltype(a)>;
            using S = typename M::semiring_type;
            if (ms.size() == 1) {
              std::vector<Path> paths;
              if (!c.opt.path.empty()) {
                paths.push_back(Path::parse(c.opt.path));
              } else {
                paths = simple_length2_paths(a.dim());
              }
              json rows = json::array();
              for (auto const& p : paths) {
                auto v = deficiency(a, p);
                rows.push_back({{"path", p.str()}, {"deficiency", S::to_string(v)}});
                if (!c.json_out()) {
                  c.out << "Def(" << p.str() << ") = " << S::to_string(v) << "\n";
                }
              }
              out = rows;
              return;
            }
            auto const* bp = std::get_if<M>(&ms[1]);
            if (!bp) {
              throw UsageError("matrices must be of the same kind");
            }
            auto const& b    = *bp;
            auto        mode = parse_mode(c.opt.mode);
            auto        w    = deficiency_witness(a, b, mode);
            out = {{"mode", deficiency_mode_name(mode)}, {"equal", !w}};
            if (!c.json_out()) {
              c.out << "deficiencies equal (" << deficiency_mode_name(mode)
                    << "): " << (w ? "false" : "true") << "\n";
            }
            if (w) {
              out["separating_path"] = w->str();
              out["values"] = {S::to_string(deficiency(a, *w)),
                               S::to_string(deficiency(b, *w))};
              if (!c.json_out()) {
                c.out << "separating path " << w->str() << ": "
                      << S::to_string(deficiency(a, *w)) << " vs "
                      << S::to_string(deficiency(b, *w)) << "\n";
              }
            }
            if (a.has_shape(Shape::Unitriangular)
                && b.has_shape(Shape::Unitriangular)) {
              auto d         = d_related_unitriangular(a, b);
              out["d_related"] = d.related;
              if (!c.json_out()) {
                c.out << "D-related: " << (d.related ? "true" : "false") << "\n";
              }
              if (d.conjugator) {
                out["conjugator"] = to_json(*d.conjugator);
                if (!c.json_out()) {
                  c.out << "# conjugator G with G A G^-1 = B\n"
                        << to_text(*d.conjugator);
                }
              }
            }
          },
          ms[0]);
      if (c.json_out()) {
        c.out << out.dump(2) << "\n";
      }
      return ExitCode::Ok;
    }

    inline ExitCode cmd_tightness(Context& c) {
      if (c.opt.list) {
        std::size_t n    = c.opt.n.value_or(4);
        auto        pats = realizable_patterns(n);
        json        all  = json::array();
        for (auto const& p : pats) {
          std::string id;
          try {
            id = ht_descriptor_for(p).case_id;
          } catch (Unsupported const&) {
            id = "-";
          }
          all.push_back({{"tight_paths", p.str()}, {"case", id}});
          if (!c.json_out()) {
            c.out << id << " " << p.str() << "\n";
          }
        }
        if (c.json_out()) {
          c.out << all.dump(2) << "\n";
        }
        return ExitCode::Ok;
      }
      json all = json::array();
      for (auto const& m : read_input(c)) {
        std::visit(
            [&](auto const& e) {
              auto p = TightnessPattern::of(e);
              json j = p.to_json();
              j["tight_paths"] = p.str();
              try {
                j["case"] = ht_descriptor_for(p).case_id;
              } catch (Unsupported const&) {
              }
              all.push_back(j);
              if (!c.json_out()) {
                for (auto const& q : simple_length2_paths(e.dim())) {
                  auto const& v = q.vertices;
                  c.out << q.str() << " "
                        << (p.is_tight(v[0], v[1], v[2]) ? "tight" : "loose")
                        << "\n";
                }
                if (j.contains("case")) {
                  c.out << "case: " << j["case"].get<std::string>() << "\n";
                }
              }
            },
            m);
      }
      if (c.json_out()) {
        c.out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
      }
      return ExitCode::Ok;
    }

    inline ExitCode cmd_htclass(Context& c) {
      if (c.opt.witness == "prop-ht") {
        return emit_proof(c, prop_ht_witness(c.opt.n.value_or(5), scalar_g(c)));
      }
      if (!c.opt.witness.empty()) {
        throw UsageError("htclass --witness accepts only 'prop-ht'");
      }
      auto     ms   = read_input(c);
      ExitCode code = ExitCode::Ok;
      json     out;
      std::visit(
          [&](auto const& e) {
            using M = std::decay_t<decltype(e)>;
            auto                             pat = TightnessPattern::of(e);
            std::optional<HtClassDescriptor> d;
            try {
              d = ht_descriptor_for(pat);
            } catch (Unsupported const&) {
            }
            if (d) {
              out = d->to_json();
            } else {
              out = {{"n", e.dim()}, {"tight_paths", pat.str()}, {"case", nullptr}};
            }
            if (!c.json_out()) {
              c.out << "case: " << (d ? d->case_id : std::string("not tabulated"))
                    << "\n"
                    << "tight paths: " << pat.str() << "\n";
              if (d) {
                c.out << "class: " << d->constraint << "\n";
              }
            }
            json mem = json::array();
            for (std::size_t k = 1; k < ms.size(); ++k) {
              auto const* ap = std::get_if<M>(&ms[k]);
              if (!ap) {
                throw UsageError("matrices must be of the same kind");
              }
              bool def = ht_definitional(e, *ap);
              json j{{"index", k}, {"definitional", def}};
              if (!c.json_out()) {
                c.out << "matrix " << k + 1 << ": definitional "
                      << (def ? "true" : "false");
              }
              if (d) {
                HtMembership r{ht_parametric(*d, e, *ap), def};
                j["parametric"] = r.parametric;
                j["agree"]      = r.agree();
                if (!c.json_out()) {
                  c.out << ", parametric " << (r.parametric ? "true" : "false");
                }
                if (!r.agree()) {
                  code = ExitCode::Failed;
                  c.out << "\n"
                        << json{{"witness",
                                 {{"subcommand", "htclass"},
                                  {"input", to_text(e) + to_text(*ap)}}}}
                               .dump();
                }
              }
              if (!c.json_out()) {
                c.out << "\n";
              }
              mem.push_back(j);
            }
            out["members"] = mem;
          },
          ms[0]);
      if (c.json_out()) {
        c.out << out.dump(2) << "\n";
      }
      return code;
    }

    inline FamilySpec family_spec(Context const& c) {
      if (c.opt.family.empty() || !c.opt.n) {
        throw UsageError("--family and --n are required");
      }
      return FamilySpec{parse_family(c.opt.family), *c.opt.n};
    }

    inline ExitCode cmd_classify(Context& c) {
      auto r = classify(family_spec(c));
      if (c.json_out()) {
        c.out << to_json(r).dump(2) << "\n";
        return ExitCode::Ok;
      }
      c.out << family_name(r.spec.family) << " n=" << r.spec.n << ": "
            << classification_label(r) << "\n"
            << "elements: " << r.elements << "\n"
            << "idempotents: " << r.idempotents << "\n"
            << "regular: " << (r.regular ? "true" : "false") << "\n"
            << "abundant: " << (r.abundant ? "true" : "false") << "\n"
            << "fountain: " << (r.fountain ? "true" : "false") << "\n"
            << "unit-fountain: " << (r.u_fountain ? "true" : "false") << "\n";
      for (auto const& s : r.summaries) {
        c.out << relation_name(s.relation) << ": " << s.class_count
              << " classes, " << s.idempotent_free_classes
              << " without idempotent\n";
      }
      return ExitCode::Ok;
    }

    inline ExitCode cmd_greens(Context& c) {
      auto              spec = family_spec(c);
      FiniteMonoidTable t(spec);
      std::vector<Relation> rels;
      if (c.opt.relation.empty()) {
        for (Relation r : all_relations()) {
          if (t.size() <= max_relation_size
              || r == Relation::Rtilde || r == Relation::Ltilde
              || r == Relation::RtildeU || r == Relation::LtildeU) {
            rels.push_back(r);
          }
        }
      } else {
        bool found = false;
        for (Relation r : all_relations()) {
          if (c.opt.relation == relation_name(r)) {
            rels.push_back(r);
            found = true;
          }
        }
        if (!found) {
          throw UsageError("unknown relation '" + c.opt.relation + "'");
        }
      }
      std::optional<std::uint32_t> elem;
      if (!c.opt.input.empty()) {
        auto ms = read_input(c);
        auto const* b = std::get_if<BoolMatrix>(&ms[0]);
        if (!b || b->dim() != spec.n) {
          throw UsageError("input must be a Boolean matrix of dimension --n");
        }
        elem = t.index(bmat::from_matrix(*b));
      }
      json out = json::array();
      for (Relation r : rels) {
        auto p    = compute_relation(t, r);
        auto free = idempotent_free_classes(p, t.idempotents());
        json j{{"relation", relation_name(r)},
               {"class_count", p.num_classes()},
               {"idempotent_free_classes", free.first}};
        std::string extra;
        if (elem) {
          std::size_t size = 0;
          json        idem = json::array();
          for (std::size_t x = 0; x < t.size(); ++x) {
            if (p.same(x, *elem)) {
              ++size;
              if (t.is_idempotent(x)) {
                idem.push_back(to_json(bmat::to_matrix(t.element(x), spec.n)));
              }
            }
          }
          j["class_size"]        = size;
          j["class_idempotents"] = idem;
          extra = ", class of input: " + std::to_string(size) + " elements, "
                  + std::to_string(idem.size()) + " idempotents";
        }
        out.push_back(j);
        if (!c.json_out()) {
          c.out << relation_name(r) << ": " << p.num_classes() << " classes, "
                << free.first << " without idempotent" << extra << "\n";
        }
      }
      if (c.json_out()) {
        c.out << out.dump(2) << "\n";
      }
      return ExitCode::Ok;
    }

    inline ExitCode cmd_verify(Context& c) {
      SuiteOptions so;
      so.seed   = c.opt.seed;
      so.trials = c.opt.trials;
      so.n      = c.opt.n;
      so.g      = scalar_g(c);
      SuiteReport rep = run_suite(c.opt.suite, so);
      if (c.json_out()) {
        c.out << rep.to_json().dump(2) << "\n";
      } else {
        c.out << "# suite " << rep.suite() << ", seed " << c.opt.seed << "\n";
        for (auto const& a : rep.assertions()) {
          c.out << (a.pass ? "PASS " : "FAIL ") << a.id << "\n";
        }
        c.out << "verdict: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
      }
      if (rep.passed()) {
        return ExitCode::Ok;
      }
      if (auto const& w = rep.failure_witness()) {
        std::string file = c.opt.witness_file.empty()
                               ? rep.suite() + ".witness.txt"
                               : c.opt.witness_file;
        std::ofstream f(file);
        f << "# replay with: tropmat " << w->subcommand << " " << file << "\n"
          << "# context: " << w->context.dump() << "\n"
          << w->input;
        json wj{{"witness",
                 {{"subcommand", w->subcommand},
                  {"file", file},
                  {"input", w->input},
                  {"context", w->context}}}};
        if (!c.json_out()) {
          c.out << wj.dump() << "\n";
        }
      }
      return ExitCode::Failed;
    }

  }  // namespace cli

  // Parses argv and runs the chosen subcommand.
  inline int run_cli(int           argc,
                     char const*   argv[],
                     std::istream& in,
                     std::ostream& out,
                     std::ostream& err) {
    CliOptions opt;
    CLI::App   app{"Exact computations with matrix semigroups over the "
                 "Boolean and max-plus semifields",
                 "tropmat"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sc, bool input) {
      sc->add_option("--seed", opt.seed, "PRNG seed")->capture_default_str();
      sc->add_option("--format", opt.format, "output format")
          ->check(CLI::IsMember({"text", "json"}))
          ->capture_default_str();
      if (input) {
        sc->add_option("input", opt.input, "matrix file (default: stdin)");
        sc->add_option("--kind", opt.kind, "required semifield of the input")
            ->check(CLI::IsMember({"bool", "maxplus"}));
      }
    };
    std::vector<std::pair<std::string, std::string>> unary{
        {"plus", "print A(+), the canonical idempotent left identity"},
        {"star", "print A(*), the canonical idempotent right identity"},
        {"idem", "test idempotency"},
        {"regular", "decide regularity by residuation"},
        {"factor", "factor a unitriangular matrix into idempotents"}};
    for (auto const& [name, help] : unary) {
      common(app.add_subcommand(name, help), true);
    }
    auto* def = app.add_subcommand("deficiency", "deficiencies of paths; D-relation of unitriangular matrices");
    common(def, true);
    def->add_option("--path", opt.path, "path such as 1->2->4");
    def->add_option("--mode", opt.mode, "paths compared for two matrices: all, length2, anchored")
        ->check(CLI::IsMember({"all", "length2", "anchored"}))
        ->capture_default_str();
    def->add_option("--witness", opt.witness, "certify a named witness: rtlt");
    def->add_option("--n", opt.n, "dimension of the witness");
    def->add_option("--g", opt.g, "witness scalar")->capture_default_str();

    auto* tig = app.add_subcommand("tightness", "tightness pattern of an idempotent");
    common(tig, true);
    tig->add_flag("--list", opt.list, "list the realizable patterns for --n");
    tig->add_option("--n", opt.n, "dimension for --list");

    auto* htc = app.add_subcommand("htclass", "tilde-H-class of an idempotent; membership of further matrices");
    common(htc, true);
    htc->add_option("--witness", opt.witness, "certify a named witness: prop-ht");
    htc->add_option("--n", opt.n, "dimension of the witness");
    htc->add_option("--g", opt.g, "witness scalar")->capture_default_str();

    auto* grn = app.add_subcommand("greens", "relation partitions of a finite Boolean matrix monoid");
    common(grn, true);
    grn->add_option("--family", opt.family, "M, UT, U, W, H or R")->required();
    grn->add_option("--n", opt.n, "dimension")->required();
    grn->add_option("--relation", opt.relation, "one relation, e.g. R~");

    auto* cls = app.add_subcommand("classify", "regular / abundant / Fountain flags of a finite Boolean matrix monoid");
    common(cls, false);
    cls->add_option("--family", opt.family, "M, UT, U, W, H or R")->required();
    cls->add_option("--n", opt.n, "dimension")->required();

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    common(ver, false);
    std::vector<std::string> names{"all"};
    for (auto const& s : suites()) {
      names.push_back(s.name);
    }
    ver->add_option("--suite", opt.suite, "suite name")
        ->required()
        ->check(CLI::IsMember(names));
    ver->add_option("--trials", opt.trials, "samples per configuration");
    ver->add_option("--n", opt.n, "restrict to one dimension");
    ver->add_option("--g", opt.g, "witness scalar")->capture_default_str();
    ver->add_option("--witness-file", opt.witness_file, "where to write a failure witness");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
    }

    cli::Context c{opt, in, out, err};
    std::string  sub = app.get_subcommands().front()->get_name();
    try {
      ExitCode code = ExitCode::Ok;
      if (sub == "plus") {
        code = cli::map_matrices(c, [](auto const& a) { return plus_of(a); });
      } else if (sub == "star") {
        code = cli::map_matrices(c, [](auto const& a) { return star_of(a); });
      } else if (sub == "idem") {
        code = cli::cmd_idem(c);
      } else if (sub == "regular") {
        code = cli::cmd_regular(c);
      } else if (sub == "factor") {
        code = cli::cmd_factor(c);
      } else if (sub == "deficiency") {
        code = cli::cmd_deficiency(c);
      } else if (sub == "tightness") {
        code = cli::cmd_tightness(c);
      } else if (sub == "htclass") {
        code = cli::cmd_htclass(c);
      } else if (sub == "greens") {
        code = cli::cmd_greens(c);
      } else if (sub == "classify") {
        code = cli::cmd_classify(c);
      } else if (sub == "verify") {
        code = cli::cmd_verify(c);
      }
      return static_cast<int>(code);
    } catch (ParseError const& e) {
      err << "tropmat: parse error: " << e.what() << "\n";
      return static_cast<int>(ExitCode::Usage);
    } catch (std::invalid_argument const& e) {
      err << "tropmat: " << e.what() << "\n";
      return static_cast<int>(ExitCode::Usage);
    } catch (std::domain_error const& e) {
      err << "tropmat: " << e.what() << "\n";
      return static_cast<int>(ExitCode::Usage);
    } catch (std::logic_error const& e) {
      err << "tropmat: internal check failed: " << e.what() << "\n";
      return static_cast<int>(ExitCode::Failed);
    }
  }

}  // namespace tropmat

#endif  // TROPMAT_CLI_HPP_
