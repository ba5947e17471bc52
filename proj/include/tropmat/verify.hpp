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

// Named verification suites.  Each suite runs a seeded battery of checks
// and records one assertion per check, together with a replayable witness
// for the first failure.

#ifndef TROPMAT_VERIFY_HPP_
#define TROPMAT_VERIFY_HPP_

#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "deficiency.hpp"
#include "factorization.hpp"
#include "finite_green.hpp"
#include "io.hpp"
#include "plusstar.hpp"
#include "random.hpp"

namespace tropmat {

  struct SuiteOptions {
    std::uint64_t              seed = 0;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> n;
    Rational                   g{1};
  };

  struct Assertion {
    std::string id;
    bool        pass = false;
    json        details;
  };

  // A failing input, replayable by `tropmat <subcommand>` on `input`.
  struct Witness {
    std::string subcommand;
    std::string input;
    json        context;
  };

  class SuiteReport {
   public:
    SuiteReport(std::string suite, std::uint64_t seed)
        : _suite(std::move(suite)), _seed(seed) {}

    bool add(std::string id, bool pass, json details = json::object()) {
      _assertions.push_back({std::move(id), pass, std::move(details)});
      return pass;
    }

    template <typename S>
    void witness(std::string subcommand,
                 Matrix<S> const& m,
                 json             context = json::object()) {
      if (!_witness) {
        _witness = Witness{std::move(subcommand), to_text(m), std::move(context)};
      }
    }

    void witness(Witness w) {
      if (!_witness) {
        _witness = std::move(w);
      }
    }

    bool passed() const {
      for (auto const& a : _assertions) {
        if (!a.pass) {
          return false;
        }
      }
      return true;
    }

    std::string const& suite() const noexcept {
      return _suite;
    }

    std::vector<Assertion> const& assertions() const noexcept {
      return _assertions;
    }

    std::optional<Witness> const& failure_witness() const noexcept {
      return _witness;
    }

    void append(SuiteReport const& other) {
      for (auto const& a : other._assertions) {
        _assertions.push_back({other._suite + "/" + a.id, a.pass, a.details});
      }
      if (other._witness) {
        witness(*other._witness);
      }
    }

    json to_json() const {
      json as = json::array();
      for (auto const& a : _assertions) {
        as.push_back({{"id", a.id}, {"pass", a.pass}, {"details", a.details}});
      }
      json j{{"suite", _suite},
             {"seed", _seed},
             {"passed", passed()},
             {"assertions", as}};
      if (_witness) {
        j["witness"] = {{"subcommand", _witness->subcommand},
                        {"input", _witness->input},
                        {"context", _witness->context}};
      }
      return j;
    }

   private:
    std::string            _suite;
    std::uint64_t          _seed;
    std::vector<Assertion> _assertions;
    std::optional<Witness> _witness;
  };

  namespace detail {

    inline std::vector<std::size_t> dims(SuiteOptions const& o,
                                         std::size_t         lo,
                                         std::size_t         hi) {
      if (o.n) {
        return {*o.n};
      }
      std::vector<std::size_t> r;
      for (std::size_t n = lo; n <= hi; ++n) {
        r.push_back(n);
      }
      return r;
    }

    inline RandomConfig sparse_config() {
      RandomConfig c;
      c.zero_prob = 0.3;
      return c;
    }

    inline std::string nstr(std::size_t n) {
      return "n=" + std::to_string(n);
    }

    ////////////////////////////////////////////////////////////////////////
    // Suites
    ////////////////////////////////////////////////////////////////////////

    inline SuiteReport suite_thmb(SuiteOptions const& o) {
      SuiteReport rep("thmB", o.seed);
      struct Row {
        Family                     family;
        std::vector<char const*>   labels;  // n = 1, 2, 3, 4
      };
      std::vector<Row> table{
          {Family::FullBool, {"Regular", "Regular", "Fountain", "Not Fountain"}},
          {Family::UpperBool, {"Regular", "Abundant", "Fountain", "Not Fountain"}},
          {Family::UniBool, {"Regular", "Regular", "Fountain", "Fountain"}}};
      for (std::size_t n : dims(o, 1, 3)) {
        if (n < 1 || n > 4) {
          throw std::invalid_argument("thmB: n must be in 1..4");
        }
        for (auto const& row : table) {
          auto r     = classify(FamilySpec{row.family, n});
          auto label = std::string(classification_label(r));
          bool ok    = label == row.labels[n - 1];
          rep.add(std::string(family_name(row.family)) + " " + nstr(n),
                  ok,
                  {{"expected", row.labels[n - 1]},
                   {"label", label},
                   {"elements", r.elements},
                   {"idempotents", r.idempotents}});
          if (!ok) {
            rep.witness({"classify",
                         "",
                         {{"family", family_name(row.family)}, {"n", n}}});
          }
          if (row.family == Family::UpperBool && n == 3) {
            rep.add("UT n=3 counts",
                    r.elements == 64 && r.idempotents == 41,
                    {{"elements", r.elements}, {"idempotents", r.idempotents}});
          }
        }
      }
      return rep;
    }

    inline SuiteReport suite_u_fountain(SuiteOptions const& o) {
      SuiteReport       rep("u-fountain", o.seed);
      std::size_t       n = o.n.value_or(4);
      FiniteMonoidTable t(FamilySpec{Family::UniBool, n});
      if (n == 4) {
        rep.add("64 elements", t.size() == 64, {{"elements", t.size()}});
      }
      for (Relation rel : {Relation::Rtilde, Relation::Ltilde}) {
        auto                       p = compute_relation(t, rel);
        std::vector<std::uint32_t> count(p.num_classes(), 0);
        std::vector<std::uint32_t> idem(p.num_classes(), 0);
        for (auto e : t.idempotents()) {
          ++count[p.class_of[e]];
          idem[p.class_of[e]] = e;
        }
        bool unique = true;
        for (auto c : count) {
          unique = unique && c == 1;
        }
        rep.add(std::string(relation_name(rel)) + " classes hold one idempotent",
                unique,
                {{"classes", p.num_classes()}});
        bool matches = true;
        for (std::size_t a = 0; a < t.size() && unique; ++a) {
          auto m = bmat::to_matrix(t.element(a), n);
          auto e = rel == Relation::Rtilde ? plus_of(m) : star_of(m);
          if (bmat::from_matrix(e) != t.element(idem[p.class_of[a]])) {
            matches = false;
            rep.witness(rel == Relation::Rtilde ? "plus" : "star", m);
            break;
          }
        }
        rep.add(std::string("idempotent of each ") + relation_name(rel)
                    + "-class is "
                    + (rel == Relation::Rtilde ? "plus_of" : "star_of"),
                unique && matches);
      }
      auto r = classify(t);
      rep.add("classified Fountain", r.fountain, {{"label", classification_label(r)}});
      return rep;
    }

    inline SuiteReport suite_not_fountain(SuiteOptions const& o) {
      SuiteReport rep("not-fountain", o.seed);
      std::size_t n  = o.n.value_or(4);
      auto        cb = not_fountain_boolean(n);
      rep.add("Boolean exhaustive scan " + nstr(n), cb.verdict, cb.details);
      auto cs = not_fountain_symbolic<MaxPlusSemifield>(n);
      rep.add("max-plus symbolic F1/F2 contradiction " + nstr(n),
              cs.verdict,
              cs.details);
      if (!cb.verdict || !cs.verdict) {
        rep.witness("greens", not_fountain_matrix<BooleanSemifield>(n));
      }
      return rep;
    }

    inline SuiteReport suite_idmpt(SuiteOptions const& o) {
      SuiteReport rep("idmpt", o.seed);
      Random      rng(o.seed, sparse_config());
      std::size_t trials = o.trials.value_or(1000);
      for (std::size_t n : dims(o, 2, 6)) {
        std::size_t bad_idem = 0, bad_left = 0, bad_max = 0, fixers = 0;
        for (std::size_t t = 0; t < trials; ++t) {
          auto a = rng.full_domain<MP>(n);
          auto e = plus_of(a);
          if (!is_idempotent(e)) {
            ++bad_idem;
            rep.witness("plus", a);
          }
          if (mat_mul(e, a) != a) {
            ++bad_left;
            rep.witness("plus", a);
          }
          // Raising any single entry of A(+) must break X A = A.
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              auto x = e;
              x.set(i,
                    j,
                    MP::is_zero(e(i, j))
                        ? rng.unit<MP>()
                        : mp(e(i, j).value() + rng.positive_rational()));
              if (mat_mul(x, a) == a) {
                ++bad_max;
                rep.witness("plus", a);
              }
            }
          }
          // Random fixers must lie below A(+): candidates keep the diagonal
          // of A(+), lower or clear the other entries, and half the time
          // raise one entry above A(+).
          for (std::size_t f = 0; f < 200; ++f) {
            Matrix<MP> x = e;
            for (std::size_t i = 0; i < n; ++i) {
              for (std::size_t j = 0; j < n; ++j) {
                if (i == j || MP::is_zero(e(i, j))) {
                  continue;
                }
                if (rng.coin(0.3)) {
                  x.set(i, j, MP::zero());
                } else {
                  x.set(i, j, mp(e(i, j).value() + rng.nonpositive_rational()));
                }
              }
            }
            if (rng.coin(0.5)) {
              auto i = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n) - 1));
              auto j = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n) - 1));
              x.set(i,
                    j,
                    MP::is_zero(e(i, j))
                        ? rng.unit<MP>()
                        : mp(e(i, j).value() + rng.positive_rational()));
            }
            if (mat_mul(x, a) == a) {
              ++fixers;
              if (!leq_entrywise(x, e)) {
                ++bad_max;
                rep.witness("plus", a);
              }
            }
          }
        }
        rep.add("plus_of idempotent " + nstr(n), bad_idem == 0, {{"violations", bad_idem}});
        rep.add("plus_of left identity " + nstr(n), bad_left == 0, {{"violations", bad_left}});
        rep.add("plus_of maximal fixer " + nstr(n),
                bad_max == 0,
                {{"violations", bad_max}, {"random_fixers_found", fixers}});
      }
      return rep;
    }

    inline SuiteReport suite_idmpgensmgp(SuiteOptions const& o) {
      SuiteReport rep("idmpgensmgp", o.seed);
      Random      rng(o.seed, sparse_config());
      std::size_t trials = o.trials.value_or(1000);
      for (std::size_t n : dims(o, 2, 8)) {
        for (bool positive : {false, true}) {
          std::size_t bad = 0;
          for (std::size_t t = 0; t < trials; ++t) {
            auto x  = rng.unitriangular<MP>(n, positive);
            auto fs = idempotent_factorize(x).factors;
            bool ok = fs.size() + 1 <= std::max<std::size_t>(n, 1);
            auto p  = Matrix<MP>::identity(n);
            for (auto const& f : fs) {
              ok = ok && is_idempotent(f);
              ok = ok && (!positive || f.has_shape(Shape::PositiveUpper));
              p  = mat_mul(p, f);
            }
            ok = ok && p == x;
            if (!ok) {
              ++bad;
              rep.witness("factor", x);
            }
          }
          rep.add(std::string(positive ? "positive " : "general ") + nstr(n),
                  bad == 0,
                  {{"trials", trials}, {"violations", bad}});
        }
      }
      return rep;
    }

    inline SuiteReport suite_ef_power(SuiteOptions const& o) {
      SuiteReport rep("ef-power", o.seed);
      Random      rng(o.seed, sparse_config());
      std::size_t trials = o.trials.value_or(500);
      for (std::size_t n : dims(o, 3, 6)) {
        std::size_t m   = (n + 2) / 2;
        std::size_t bad = 0;
        for (std::size_t t = 0; t < trials; ++t) {
          bool pos = t % 2 == 0;
          auto e   = plus_of(rng.unitriangular<MP>(n, pos));
          auto f   = plus_of(rng.unitriangular<MP>(n, !pos));
          auto r   = ef_power_identities(e, f, m);
          if (!is_idempotent(e) || !is_idempotent(f) || !r.all_equal) {
            ++bad;
            rep.witness("idem", e, {{"F", to_json(f)}, {"m", m}});
          }
        }
        rep.add("(EF)^m products equal " + nstr(n) + " m=" + std::to_string(m),
                bad == 0,
                {{"trials", trials}, {"violations", bad}});
      }
      return rep;
    }

    inline SuiteReport suite_deficiency(SuiteOptions const& o) {
      SuiteReport rep("deficiency", o.seed);
      Random      rng(o.seed);
      std::size_t trials = o.trials.value_or(500);
      auto        ns     = dims(o, 3, 6);
      std::size_t bad_agree = 0, bad_sep = 0, separated = 0;
      for (std::size_t t = 0; t < trials; ++t) {
        std::size_t n = ns[t % ns.size()];
        auto        a = rng.positive_upper<MP>(n);
        auto        g = rng.invertible_diagonal<MP>(n);
        auto        b = mat_mul(mat_mul(g, a), diagonal_inverse(g));
        bool        ok = !deficiency_witness(a, b, DeficiencyMode::OneAnchored);
        for (int k = 0; k < 50 && ok; ++k) {
          auto p = random_path(n, rng, n);
          ok     = deficiency(a, p) == deficiency(b, p);
        }
        if (!ok) {
          ++bad_agree;
          rep.witness("deficiency", a, {{"B", to_json(b)}});
        }
        auto c = rng.positive_upper<MP>(n);
        auto w = deficiency_witness(a, c, DeficiencyMode::OneAnchored);
        if (w) {
          ++separated;
          if (deficiency(a, *w) == deficiency(c, *w) || w->length() != 3) {
            ++bad_sep;
          }
        } else if (deficiency_witness(a, c, DeficiencyMode::AllPaths)) {
          ++bad_sep;
          rep.witness("deficiency", a, {{"B", to_json(c)}});
        }
      }
      rep.add("conjugated pairs agree on 50 random paths",
              bad_agree == 0,
              {{"trials", trials}, {"violations", bad_agree}});
      rep.add("independent pairs separated by a length-2 path",
              bad_sep == 0,
              {{"trials", trials}, {"separated", separated}, {"violations", bad_sep}});
      return rep;
    }

    inline SuiteReport suite_dclass(SuiteOptions const& o) {
      SuiteReport rep("dclass", o.seed);
      Random      rng(o.seed);
      std::size_t trials = o.trials.value_or(500);
      auto        ns     = dims(o, 3, 6);
      std::size_t bad = 0, bad_commute = 0;
      for (std::size_t t = 0; t < trials; ++t) {
        std::size_t n = ns[t % ns.size()];
        auto        a = rng.unitriangular<MP>(n, true);
        auto        g = rng.invertible_diagonal<MP>(n);
        auto        b = mat_mul(mat_mul(g, a), diagonal_inverse(g));
        bool        ok = false;
        try {
          auto r = d_related_unitriangular(a, b);
          ok     = r.related && r.conjugator
               && r.conjugator->has_shape(Shape::FullDiagonal)
               && mat_mul(mat_mul(*r.conjugator, a),
                          diagonal_inverse(*r.conjugator))
                      == b;
        } catch (std::logic_error const&) {
          ok = false;
        }
        if (!ok) {
          ++bad;
          rep.witness("deficiency", a, {{"B", to_json(b)}});
        }
        auto c = rng.positive_upper<MP>(3);
        if (!d_related_unitriangular(plus_of(c), star_of(c)).related) {
          ++bad_commute;
          rep.witness("plus", c);
        }
      }
      rep.add("conjugator recovered and verified",
              bad == 0,
              {{"trials", trials}, {"violations", bad}});
      rep.add("n=3: plus_of(A) D star_of(A)",
              bad_commute == 0,
              {{"trials", trials}, {"violations", bad_commute}});
      for (std::size_t n : {std::size_t(4), std::size_t(5)}) {
        auto pr = rtilde_noncommute_witness(n, o.g);
        rep.add("plus/star witness not D-related " + nstr(n),
                pr.verdict(),
                pr.to_json());
        if (!pr.verdict()) {
          rep.witness("deficiency", theta_lift(noncommute_matrices(o.g).a, n));
        }
      }
      return rep;
    }

    inline SuiteReport suite_htables(SuiteOptions const& o) {
      SuiteReport rep("htables", o.seed);
      Random      rng(o.seed);
      std::size_t trials = o.trials.value_or(200);
      for (std::size_t n : dims(o, 3, 4)) {
        for (auto const& pat : realizable_patterns(n)) {
          auto        e = idempotent_with_pattern(pat, rng);
          auto        d = ht_descriptor_for(pat);
          std::string id = d.case_id + " [" + pat.str() + "]";
          std::size_t members = 0, nonmembers = 0;
          bool        agree = TightnessPattern::of(e) == pat;
          try {
            for (std::size_t t = 0; t < trials; ++t) {
              auto a = sample_ht_member(d, e, rng);
              members += ht_membership(d, e, a).definitional;
              auto b = perturb(a, rng);
              for (int k = 0; k < 64 && ht_parametric(d, e, b); ++k) {
                b = perturb(b, rng);
              }
              nonmembers += !ht_membership(d, e, b).definitional;
            }
          } catch (std::logic_error const& ex) {
            agree = false;
            rep.witness("htclass", e, {{"error", ex.what()}});
          }
          auto cl = ht_closure_check(e, trials, rng);
          if (!cl.closed) {
            rep.witness("htclass", e, cl.to_json());
          }
          rep.add(id + " members",
                  agree && members == trials,
                  {{"sampled", trials}, {"members", members}});
          rep.add(id + " non-members",
                  agree && nonmembers == trials,
                  {{"sampled", trials}, {"non_members", nonmembers}});
          rep.add(id + " closure", cl.closed, cl.to_json());
        }
      }
      return rep;
    }

    inline SuiteReport suite_prop_ht(SuiteOptions const& o) {
      SuiteReport rep("prop-ht", o.seed);
      std::vector<std::size_t> ns = o.n ? std::vector<std::size_t>{*o.n}
                                        : std::vector<std::size_t>{5, 6};
      for (std::size_t n : ns) {
        auto pr = prop_ht_witness(n, o.g);
        rep.add("tilde-H-class not closed " + nstr(n), pr.verdict(), pr.to_json());
        if (!pr.verdict()) {
          rep.witness("htclass", theta_lift(prop_ht_matrices(o.g).e, n));
        }
      }
      return rep;
    }

    inline SuiteReport suite_leftcong(SuiteOptions const& o) {
      SuiteReport rep("leftcong", o.seed);
      Random      rng(o.seed);
      std::size_t trials = o.trials.value_or(100);
      auto        ns     = dims(o, 3, 5);
      std::size_t bad_rel = 0, bad_sep = 0;
      json        methods = json::object();
      for (std::size_t t = 0; t < trials; ++t) {
        std::size_t n = ns[t % ns.size()];
        auto        a = rng.positive_upper<MP>(n);
        auto b = mat_mul(normal_form(a).rnorm, rng.invertible_diagonal<MP>(n));
        auto r = leftcong_check(a, b, 100, rng);
        if (!r.r_related || !r.consistent) {
          ++bad_rel;
          rep.witness("plus", a, r.to_json());
        }
        auto [p, q] = shared_plus_pair(n, rng);
        auto s      = leftcong_check(p, q, 100, rng);
        methods[s.method] = methods.value(s.method, 0) + 1;
        bool ok = !s.r_related && s.separating
                  && (s.method == "meet" || s.method == "row-construction")
                  && plus_of(mat_mul(*s.separating, p))
                         != plus_of(mat_mul(*s.separating, q));
        if (!ok) {
          ++bad_sep;
          rep.witness("plus", p, {{"B", to_json(q)}});
        }
      }
      rep.add("R-related pairs: (CA)(+) = (CB)(+) for 100 random C",
              bad_rel == 0,
              {{"pairs", trials}, {"violations", bad_rel}});
      rep.add("non-R pairs sharing plus_of separated by the construction",
              bad_sep == 0,
              {{"pairs", trials}, {"violations", bad_sep}, {"methods", methods}});
      return rep;
    }

    inline SuiteReport suite_theta(SuiteOptions const& o) {
      SuiteReport rep("theta", o.seed);
      Random      rng(o.seed);
      std::size_t trials = o.trials.value_or(500);
      auto        ns     = dims(o, 2, 6);
      std::size_t bad_mul = 0, bad_plus = 0, bad_star = 0;
      auto gen = [&](std::size_t n) {
        auto a = rng.positive_upper<MP>(n);
        a.set(0, 0, MP::one());
        a.set(n - 1, n - 1, MP::one());
        return a;
      };
      for (std::size_t t = 0; t < trials; ++t) {
        std::size_t n = ns[t % ns.size()];
        auto        a = gen(n);
        auto        b = gen(n);
        if (theta_embed(mat_mul(a, b)) != mat_mul(theta_embed(a), theta_embed(b))) {
          ++bad_mul;
          rep.witness("plus", a, {{"B", to_json(b)}});
        }
        if (plus_of(theta_embed(a)) != theta_embed(plus_of(a))) {
          ++bad_plus;
          rep.witness("plus", a);
        }
        if (star_of(theta_embed(a)) != theta_embed(star_of(a))) {
          ++bad_star;
          rep.witness("star", a);
        }
      }
      rep.add("theta(AB) = theta(A) theta(B)", bad_mul == 0, {{"trials", trials}, {"violations", bad_mul}});
      rep.add("theta(A)(+) = theta(A(+))", bad_plus == 0, {{"trials", trials}, {"violations", bad_plus}});
      rep.add("theta(A)(*) = theta(A(*))", bad_star == 0, {{"trials", trials}, {"violations", bad_star}});
      return rep;
    }

    inline SuiteReport suite_regular(SuiteOptions const& o) {
      SuiteReport rep("regular", o.seed);
      Random      rng(o.seed, sparse_config());
      std::size_t trials = o.trials.value_or(500);
      std::size_t bad_b = 0, bad_q = 0;
      for (bmat::code_t c = 0; c < 16; ++c) {
        auto a = bmat::to_matrix(c, 2);
        auto r = is_regular(a);
        if (!r.regular || !r.witness || mat_mul(mat_mul(a, *r.witness), a) != a) {
          ++bad_b;
          rep.witness("regular", a);
        }
      }
      for (std::size_t t = 0; t < trials; ++t) {
        auto a = rng.general<MP>(2);
        auto r = is_regular(a);
        if (!r.regular || !r.witness || mat_mul(mat_mul(a, *r.witness), a) != a) {
          ++bad_q;
          rep.witness("regular", a);
        }
      }
      rep.add("every element of M_2(B) regular", bad_b == 0, {{"elements", 16}, {"violations", bad_b}});
      rep.add("sampled M_2(Qmax) regular", bad_q == 0, {{"trials", trials}, {"violations", bad_q}});
      Matrix<MP> u = Matrix<MP>::identity(3);
      u.set(0, 1, mp(o.g));
      u.set(0, 2, mp(o.g));
      u.set(1, 2, mp(o.g));
      bool nonreg = !is_regular(u).regular;
      rep.add("unitriangular all-g 3x3 not regular", nonreg, {{"A", to_json(u)}});
      if (!nonreg) {
        rep.witness("regular", u);
      }
      return rep;
    }

    inline SuiteReport suite_exact(SuiteOptions const& o) {
      SuiteReport rep("exact", o.seed);
      for (std::size_t n : dims(o, 1, 3)) {
        auto r = bool_exactness_check(n);
        rep.add("F1 " + nstr(n), r.f1, {{"pairs", r.pairs}});
        rep.add("F2 " + nstr(n), r.f2, {{"pairs", r.pairs}});
        if (r.counterexample) {
          rep.witness("regular", bmat::to_matrix(r.counterexample->first, n));
        }
      }
      FiniteMonoidTable t(FamilySpec{Family::FullBool, 3});
      auto              pr  = compute_relation(t, Relation::R);
      auto              prs = compute_relation(t, Relation::Rstar);
      auto              pl  = compute_relation(t, Relation::L);
      auto              pls = compute_relation(t, Relation::Lstar);
      rep.add("R = R* on M_3(B)", pr == prs, {{"classes", pr.num_classes()}});
      rep.add("L = L* on M_3(B)", pl == pls, {{"classes", pl.num_classes()}});
      return rep;
    }

  }  // namespace detail

  struct SuiteInfo {
    std::string                                   name;
    std::string                                   summary;
    std::function<SuiteReport(SuiteOptions const&)> run;
  };

  inline std::vector<SuiteInfo> const& suites() {
    static std::vector<SuiteInfo> const all{
        {"thmB", "regularity table of M_n(B), UT_n(B), U_n(B), n <= 3", detail::suite_thmb},
        {"u-fountain", "every tilde class of U_4(B) holds one idempotent", detail::suite_u_fountain},
        {"not-fountain", "no idempotent is R~-related to the n = 4 witness", detail::suite_not_fountain},
        {"idmpt", "plus_of is an idempotent maximal left identity", detail::suite_idmpt},
        {"idmpgensmgp", "idempotent factorization of unitriangular matrices", detail::suite_idmpgensmgp},
        {"ef-power", "(EF)^m law for unitriangular idempotents", detail::suite_ef_power},
        {"deficiency", "anchored length-2 deficiencies determine all", detail::suite_deficiency},
        {"dclass", "D-classes of unitriangular matrices", detail::suite_dclass},
        {"htables", "tilde-H-classes of idempotents for n = 3, 4", detail::suite_htables},
        {"prop-ht", "a tilde-H-class at n = 5 that is not closed", detail::suite_prop_ht},
        {"leftcong", "R~ is not left compatible", detail::suite_leftcong},
        {"theta", "theta preserves products, plus and star", detail::suite_theta},
        {"regular", "regularity via residuation", detail::suite_regular},
        {"exact", "Boolean exactness and R = R* on M_3(B)", detail::suite_exact}};
    return all;
  }

  // Runs one suite, or every suite for "all".  Throws std::invalid_argument
  // for an unknown name.
  inline SuiteReport run_suite(std::string const& name, SuiteOptions const& o) {
    if (name == "all") {
      SuiteReport rep("all", o.seed);
      for (auto const& s : suites()) {
        rep.append(s.run(o));
      }
      return rep;
    }
    for (auto const& s : suites()) {
      if (s.name == name) {
        return s.run(o);
      }
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
  }

}  // namespace tropmat

#endif  // TROPMAT_VERIFY_HPP_
