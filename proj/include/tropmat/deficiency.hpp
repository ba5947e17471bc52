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

// Deficiency of paths, tightness patterns of idempotents, descriptions of
// the tilde-H-classes of idempotents of small upper triangular matrix
// monoids, the embedding theta and the witnesses built on them.
//
// Path vertices are 1-based, matrix indices 0-based.

#ifndef TROPMAT_DEFICIENCY_HPP_
#define TROPMAT_DEFICIENCY_HPP_

#include <array>      // for array
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <set>        // for set
#include <sstream>    // for ostringstream
#include <stdexcept>  // for invalid_argument, logic_error
#include <string>     // for string
#include <vector>     // for vector

#include "factorization.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "plusstar.hpp"
#include "proof.hpp"
#include "random.hpp"

namespace tropmat {

  using MP = MaxPlusSemifield;

  inline MaxPlusValue mp(Rational const& q) {
    return MaxPlusValue(q);
  }

  ////////////////////////////////////////////////////////////////////////
  // Paths and deficiency
  ////////////////////////////////////////////////////////////////////////

  struct Path {
    std::vector<std::size_t> vertices;

    Path() = default;
    Path(std::initializer_list<std::size_t> v) : vertices(v) {}
    explicit Path(std::vector<std::size_t> v) : vertices(std::move(v)) {}

    std::size_t length() const noexcept {
      return vertices.size();
    }

    bool simple() const {
      for (std::size_t t = 1; t < vertices.size(); ++t) {
        if (vertices[t - 1] >= vertices[t]) {
          return false;
        }
      }
      return true;
    }

    void validate(std::size_t n) const {
      if (vertices.size() < 2) {
        throw std::invalid_argument("a path needs at least two vertices");
      }
      for (std::size_t t = 0; t < vertices.size(); ++t) {
        if (vertices[t] < 1 || vertices[t] > n) {
          throw std::invalid_argument("path vertex out of range");
        }
        if (t > 0 && vertices[t - 1] > vertices[t]) {
          throw std::invalid_argument("path vertices must be nondecreasing");
        }
      }
    }

    std::string str() const {
      std::string s;
      for (std::size_t t = 0; t < vertices.size(); ++t) {
        s += (t ? "->" : "") + std::to_string(vertices[t]);
      }
      return s;
    }

    // Accepts "1->2->4", "1,2,4" or "1 2 4".
    static Path parse(std::string const& text) {
      std::string clean;
      for (char c : text) {
        clean += (c == '-' || c == '>' || c == ',') ? ' ' : c;
      }
      std::istringstream in(clean);
      Path               p;
      std::string        tok;
      while (in >> tok) {
        std::size_t pos = 0;
        long        v   = 0;
        try {
          v = std::stol(tok, &pos);
        } catch (std::exception const&) {
          pos = 0;
        }
        if (pos != tok.size() || v < 1) {
          throw std::invalid_argument("bad path vertex '" + tok + "'");
        }
        p.vertices.push_back(static_cast<std::size_t>(v));
      }
      return p;
    }

    friend bool operator==(Path const& a, Path const& b) {
      return a.vertices == b.vertices;
    }
  };

  // Def_A(i_1 -> ... -> i_k) = A_{i_1,i_k} (prod A_{i_{t-1},i_t})^{-1}.
  template <typename S>
  typename S::value_type deficiency(Matrix<S> const& a, Path const& p) {
    p.validate(a.dim());
    auto direct = a(p.vertices.front() - 1, p.vertices.back() - 1);
    auto prod   = S::one();
    for (std::size_t t = 1; t < p.length(); ++t) {
      prod = S::mul(prod, a(p.vertices[t - 1] - 1, p.vertices[t] - 1));
    }
    if (S::is_zero(direct) || S::is_zero(prod)) {
      throw std::invalid_argument("deficiency: zero entry on path "
                                  + p.str());
    }
    return div<S>(direct, prod);
  }

  // All paths i -> k -> j with i <= k <= j.
  inline std::vector<Path> length2_paths(std::size_t n) {
    std::vector<Path> r;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = i; k <= n; ++k) {
        for (std::size_t j = k; j <= n; ++j) {
          r.push_back({i, k, j});
        }
      }
    }
    return r;
  }

  // All paths 1 -> i -> j with 1 <= i <= j.
  inline std::vector<Path> anchored_paths(std::size_t n) {
    std::vector<Path> r;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        r.push_back({1, i, j});
      }
    }
    return r;
  }

  // All nondecreasing paths with 2 to n + 2 vertices.
  inline std::vector<Path> all_paths(std::size_t n) {
    std::vector<Path>        r;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t lo) -> void {
      if (cur.size() >= 2) {
        r.emplace_back(cur);
      }
      if (cur.size() == n + 2) {
        return;
      }
      for (std::size_t v = lo; v <= n; ++v) {
        cur.push_back(v);
        self(self, v);
        cur.pop_back();
      }
    };
    rec(rec, 1);
    return r;
  }

  // Simple paths i -> k -> j with i < k < j.
  inline std::vector<Path> simple_length2_paths(std::size_t n) {
    std::vector<Path> r;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = i + 1; k <= n; ++k) {
        for (std::size_t j = k + 1; j <= n; ++j) {
          r.push_back({i, k, j});
        }
      }
    }
    return r;
  }

  // A uniformly random nondecreasing path with 2 to max_len vertices.
  inline Path random_path(std::size_t n, Random& rng, std::size_t max_len) {
    auto len = static_cast<std::size_t>(
        rng.integer(2, static_cast<std::int64_t>(std::max<std::size_t>(2, max_len))));
    std::vector<std::size_t> v;
    for (std::size_t t = 0; t < len; ++t) {
      v.push_back(static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(n))));
    }
    std::sort(v.begin(), v.end());
    return Path(v);
  }

  enum class DeficiencyMode { AllPaths, Length2, OneAnchored };

  inline char const* deficiency_mode_name(DeficiencyMode m) {
    switch (m) {
      case DeficiencyMode::AllPaths:
        return "all";
      case DeficiencyMode::Length2:
        return "length2";
      case DeficiencyMode::OneAnchored:
        return "anchored";
    }
    return "?";
  }

  inline std::vector<Path> paths_for_mode(std::size_t n, DeficiencyMode m) {
    switch (m) {
      case DeficiencyMode::AllPaths:
        return all_paths(n);
      case DeficiencyMode::Length2:
        return length2_paths(n);
      case DeficiencyMode::OneAnchored:
        return anchored_paths(n);
    }
    return {};
  }

  // The first path of the mode on which the deficiencies of M and N differ.
  template <typename S>
  std::optional<Path> deficiency_witness(Matrix<S> const& m,
                                         Matrix<S> const& nn,
                                         DeficiencyMode   mode) {
    if (m.dim() != nn.dim()) {
      throw DimensionMismatch();
    }
    m.require_shape(Shape::PositiveUpper, "deficiency_equal");
    nn.require_shape(Shape::PositiveUpper, "deficiency_equal");
    for (auto const& p : paths_for_mode(m.dim(), mode)) {
      if (!(deficiency(m, p) == deficiency(nn, p))) {
        return p;
      }
    }
    return std::nullopt;
  }

  template <typename S>
  bool deficiency_equal(Matrix<S> const& m,
                        Matrix<S> const& nn,
                        DeficiencyMode   mode) {
    return !deficiency_witness(m, nn, mode);
  }

  template <typename S>
  struct DRelation {
    bool                     related = false;
    std::optional<Matrix<S>> conjugator;  // G with G A G^{-1} = B
    std::optional<Path>      separating;  // length-2 path with unequal Def
  };

  // D-relation between unitriangular matrices with no zero entries above
  // the diagonal, decided by length-2 deficiencies.
  template <typename S>
  DRelation<S> d_related_unitriangular(Matrix<S> const& a, Matrix<S> const& b) {
    a.require_shape(Shape::Unitriangular, "d_related_unitriangular");
    b.require_shape(Shape::Unitriangular, "d_related_unitriangular");
    DRelation<S> r;
    r.separating = deficiency_witness(a, b, DeficiencyMode::Length2);
    if (r.separating) {
      return r;
    }
    std::vector<typename S::value_type> g;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      g.push_back(div<S>(a(0, i), b(0, i)));
    }
    auto gm = Matrix<S>::diagonal(g);
    if (mat_mul(mat_mul(gm, a), diagonal_inverse(gm)) != b) {
      throw std::logic_error("d_related_unitriangular: conjugator check failed");
    }
    r.related    = true;
    r.conjugator = gm;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tightness patterns
  ////////////////////////////////////////////////////////////////////////

  using Triple = std::array<std::size_t, 3>;  // 1-based i < k < j

  class TightnessPattern {
   public:
    TightnessPattern() = default;

    // Throws if the closure rules for idempotents are violated.
    TightnessPattern(std::size_t n, std::set<Triple> tight)
        : _n(n), _tight(std::move(tight)) {
      for (auto const& t : _tight) {
        if (!(1 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] <= n)) {
          throw std::invalid_argument("tightness pattern: bad path");
        }
      }
      if (auto v = closure_violation()) {
        throw std::invalid_argument("unrealizable tightness pattern "
                                    + str() + ": " + *v);
      }
    }

    // The pattern of an idempotent with no zero entries on or above the
    // diagonal.
    template <typename S>
    static TightnessPattern of(Matrix<S> const& e) {
      e.require_shape(Shape::PositiveUpper, "tightness_pattern");
      if (!is_idempotent(e)) {
        throw std::invalid_argument("tightness_pattern: not idempotent");
      }
      std::set<Triple> t;
      for (auto const& p : simple_length2_paths(e.dim())) {
        if (deficiency(e, p) == S::one()) {
          t.insert({p.vertices[0], p.vertices[1], p.vertices[2]});
        }
      }
      TightnessPattern r;
      r._n     = e.dim();
      r._tight = t;
      if (auto v = r.closure_violation()) {
        throw std::logic_error("idempotent violates tightness closure: " + *v);
      }
      return r;
    }

    std::size_t n() const noexcept {
      return _n;
    }

    std::set<Triple> const& tight() const noexcept {
      return _tight;
    }

    bool is_tight(std::size_t i, std::size_t k, std::size_t j) const {
      return _tight.count({i, k, j}) > 0;
    }

    bool all_tight() const {
      return _tight.size() == simple_length2_paths(_n).size();
    }

    bool all_loose() const {
      return _tight.empty();
    }

    // The first closure rule that fails, if any.  For i < u < v < j:
    //   T(iuj), T(uvj) => T(ivj), T(iuv)
    //   T(iuv), T(ivj) => T(uvj), T(iuj)
    //   three of T(iuv), T(iuj), T(ivj), T(uvj) => the fourth.
    std::optional<std::string> closure_violation() const {
      for (std::size_t i = 1; i <= _n; ++i) {
        for (std::size_t u = i + 1; u <= _n; ++u) {
          for (std::size_t v = u + 1; v <= _n; ++v) {
            for (std::size_t j = v + 1; j <= _n; ++j) {
              bool iuv = is_tight(i, u, v), iuj = is_tight(i, u, j);
              bool ivj = is_tight(i, v, j), uvj = is_tight(u, v, j);
              std::string q = std::to_string(i) + std::to_string(u)
                              + std::to_string(v) + std::to_string(j);
              if (iuj && uvj && !(ivj && iuv)) {
                return "rule T(iuj),T(uvj) at " + q;
              }
              if (iuv && ivj && !(uvj && iuj)) {
                return "rule T(iuv),T(ivj) at " + q;
              }
              int c = iuv + iuj + ivj + uvj;
              if (c == 3) {
                return "three-of-four rule at " + q;
              }
            }
          }
        }
      }
      return std::nullopt;
    }

    // Tight paths as "123,124"; "none" if all loose.
    std::string str() const {
      if (_tight.empty()) {
        return "none";
      }
      std::string s;
      for (auto const& t : _tight) {
        s += (s.empty() ? "" : ",") + std::to_string(t[0]) + "-"
             + std::to_string(t[1]) + "-" + std::to_string(t[2]);
      }
      return s;
    }

    json to_json() const {
      json t = json::array();
      for (auto const& p : simple_length2_paths(_n)) {
        t.push_back({{"path", p.str()},
                     {"tight",
                      is_tight(p.vertices[0], p.vertices[1], p.vertices[2])}});
      }
      return json{{"n", _n}, {"paths", t}};
    }

    friend bool operator==(TightnessPattern const& a,
                           TightnessPattern const& b) {
      return a._n == b._n && a._tight == b._tight;
    }

   private:
    std::size_t      _n = 0;
    std::set<Triple> _tight;
  };

  template <typename S>
  TightnessPattern tightness_pattern(Matrix<S> const& e) {
    return TightnessPattern::of(e);
  }

  // All subsets of simple length-2 paths passing the closure rules.
  inline std::vector<TightnessPattern> realizable_patterns(std::size_t n) {
    auto paths = simple_length2_paths(n);
    if (paths.size() > 16) {
      throw std::invalid_argument("realizable_patterns: n must be at most 5");
    }
    std::vector<TightnessPattern> r;
    for (std::uint32_t mask = 0; mask < (1U << paths.size()); ++mask) {
      std::set<Triple> t;
      for (std::size_t b = 0; b < paths.size(); ++b) {
        if (mask & (1U << b)) {
          auto const& v = paths[b].vertices;
          t.insert({v[0], v[1], v[2]});
        }
      }
      try {
        r.emplace_back(n, t);
      } catch (std::invalid_argument const&) {
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Descriptions of tilde-H-classes
  ////////////////////////////////////////////////////////////////////////

  // Shape of the parameter matrix M with A = lambda (M o E):
  //   Group      M is all one
  //   Corner     a single entry mu <= 1 at (p, p)
  //   Diagonal3  mu <= 1 at (2,2), (2,3), (3,3) (1-based), n = 4
  //   Ordered    the block on rows and columns 2..n-1 lies in O_{n-2}
  enum class HtForm { Group, Corner, Diagonal3, Ordered };

  struct HtClassDescriptor {
    std::size_t      n = 0;
    std::string      case_id;
    TightnessPattern pattern;
    HtForm           form   = HtForm::Group;
    std::size_t      corner = 0;  // 0-based diagonal index for Corner
    std::string      constraint;

    json to_json() const {
      static char const* forms[] = {"group", "corner", "diagonal3", "ordered"};
      return json{{"n", n},
                  {"case", case_id},
                  {"tight_paths", pattern.str()},
                  {"form", forms[static_cast<int>(form)]},
                  {"constraint", constraint}};
    }
  };

  inline HtClassDescriptor ht_descriptor_for(TightnessPattern const& p) {
    HtClassDescriptor d;
    d.n       = p.n();
    d.pattern = p;
    auto set_group = [&](std::string id) {
      d.case_id    = std::move(id);
      d.form       = HtForm::Group;
      d.constraint = "A = lambda E";
    };
    if (p.n() >= 3 && p.all_tight()) {
      d.case_id = p.n() == 3 ? "n3-tight" : (p.n() == 4 ? "case7" : "tight-all");
      d.form    = HtForm::Ordered;
      d.constraint
          = p.n() == 3
                ? "A = lambda([mu]_{2,2} o E), mu <= 1"
                : (p.n() == 4
                       ? "A = lambda([a]_{2,2} o [b]_{2,3} o [c]_{3,3} o E), "
                         "a v c <= b <= 1"
                       : "A = lambda(Gbar o E), G in O_{n-2}([0,1])");
      return d;
    }
    if (p.n() >= 3 && p.all_loose()) {
      set_group(p.n() == 3 ? "n3-loose" : (p.n() == 4 ? "case1" : "loose-all"));
      return d;
    }
    if (p.n() <= 2) {
      set_group("trivial");
      return d;
    }
    if (p.n() != 4) {
      throw Unsupported("tilde-H descriptors are tabulated for n <= 4, and "
                        "for tight-all or loose-all idempotents");
    }
    bool t123 = p.is_tight(1, 2, 3), t124 = p.is_tight(1, 2, 4);
    bool t134 = p.is_tight(1, 3, 4), t234 = p.is_tight(2, 3, 4);
    int  code = t123 * 8 + t124 * 4 + t134 * 2 + t234;
    switch (code) {
      case 8:
        set_group("case2");
        break;
      case 1:
        set_group("case2-dual");
        break;
      case 4:
        set_group("case3");
        break;
      case 2:
        set_group("case3-dual");
        break;
      case 9:
        set_group("case5");
        break;
      case 3:
        d.case_id    = "case4";
        d.form       = HtForm::Corner;
        d.corner     = 2;
        d.constraint = "A = lambda([mu]_{3,3} o E), mu <= 1";
        break;
      case 12:
        d.case_id    = "case4-dual";
        d.form       = HtForm::Corner;
        d.corner     = 1;
        d.constraint = "A = lambda([mu]_{2,2} o E), mu <= 1";
        break;
      case 6:
        d.case_id = "case6";
        d.form    = HtForm::Diagonal3;
        d.constraint
            = "A = lambda([mu]_{2,2} o [mu]_{2,3} o [mu]_{3,3} o E), mu <= 1";
        break;
      default:
        throw std::invalid_argument("unrealizable tightness pattern "
                                    + p.str());
    }
    return d;
  }

  template <typename S>
  HtClassDescriptor ht_class_descriptor(Matrix<S> const& e) {
    return ht_descriptor_for(TightnessPattern::of(e));
  }

  namespace detail {
    // Whether the block m[lo..hi][lo..hi] (0-based, upper part) lies in
    // O: rows nondecreasing to the right, columns nonincreasing downwards,
    // all entries at most one.
    template <typename S>
    bool in_ordered_block(Matrix<S> const& m, std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i <= hi; ++i) {
        for (std::size_t j = i; j <= hi; ++j) {
          if (S::less(S::one(), m(i, j))) {
            return false;
          }
          if (j > i && S::less(m(i, j), m(i, j - 1))) {
            return false;
          }
          if (i > lo && S::less(m(i - 1, j), m(i, j))) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  // The descriptor's parametric membership test: A = lambda (M o E) with M
  // of the prescribed form.
  template <typename S>
  bool ht_parametric(HtClassDescriptor const& d,
                     Matrix<S> const&         e,
                     Matrix<S> const&         a) {
    std::size_t n = e.dim();
    if (a.dim() != n || !a.has_shape(Shape::PositiveUpper)) {
      return false;
    }
    auto      lambda = a(0, 0);
    Matrix<S> m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        m.set(i, j, div<S>(a(i, j), S::mul(lambda, e(i, j))));
      }
    }
    auto free_at = [&](std::size_t i, std::size_t j) {
      switch (d.form) {
        case HtForm::Group:
          return false;
        case HtForm::Corner:
          return i == d.corner && j == d.corner;
        case HtForm::Diagonal3:
          return (i == 1 || i == 2) && (j == 1 || j == 2) && i <= j;
        case HtForm::Ordered:
          return i >= 1 && j + 2 <= n && i <= j;
      }
      return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (!free_at(i, j) && !(m(i, j) == S::one())) {
          return false;
        }
      }
    }
    switch (d.form) {
      case HtForm::Group:
        return true;
      case HtForm::Corner:
        return leq<S>(m(d.corner, d.corner), S::one());
      case HtForm::Diagonal3:
        return m(1, 1) == m(1, 2) && m(1, 1) == m(2, 2)
               && leq<S>(m(1, 1), S::one());
      case HtForm::Ordered:
        return detail::in_ordered_block(m, 1, n - 2);
    }
    return false;
  }

  // The definition: A(+) = E = A(*).
  template <typename S>
  bool ht_definitional(Matrix<S> const& e, Matrix<S> const& a) {
    if (a.dim() != e.dim() || !a.has_shape(Shape::UpperTriangular)) {
      return false;
    }
    return plus_of(a) == e && star_of(a) == e;
  }

  struct HtMembership {
    bool parametric   = false;
    bool definitional = false;
    bool agree() const noexcept {
      return parametric == definitional;
    }
  };

  // Both evaluations; throws std::logic_error when they disagree.
  template <typename S>
  HtMembership ht_membership(HtClassDescriptor const& d,
                             Matrix<S> const&         e,
                             Matrix<S> const&         a) {
    HtMembership r{ht_parametric(d, e, a), ht_definitional(e, a)};
    if (!r.agree()) {
      throw std::logic_error(
          "tilde-H membership: parametric and definitional tests disagree "
          "for case "
          + d.case_id);
    }
    return r;
  }

  template <typename S>
  HtMembership ht_membership(Matrix<S> const& e, Matrix<S> const& a) {
    return ht_membership(ht_class_descriptor(e), e, a);
  }

  ////////////////////////////////////////////////////////////////////////
  // Generators (max-plus)
  ////////////////////////////////////////////////////////////////////////

  // Idempotent with E_{i,j} = s_i + ... + s_{j-1}, tight in every path.
  inline Matrix<MP> tight_all_idempotent(std::size_t n, Random& rng) {
    std::vector<Rational> s;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      s.push_back(rng.rational());
    }
    Matrix<MP> e(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational acc = 0;
      e.set(i, i, mp(acc));
      for (std::size_t j = i + 1; j < n; ++j) {
        acc += s[j - 1];
        e.set(i, j, mp(acc));
      }
    }
    return e;
  }

  // A random idempotent of UT_n(Q) (n = 3 or 4) with the requested tightness
  // pattern.  Off-path slacks are drawn from {0, positive}; the result is
  // re-checked for idempotency and pattern.
  inline Matrix<MP> idempotent_with_pattern(TightnessPattern const& target,
                                            Random&                 rng) {
    std::size_t n = target.n();
    if (n < 2 || n > 4) {
      throw Unsupported("pattern generators are provided for n <= 4");
    }
    for (int attempt = 0; attempt < 10000; ++attempt) {
      Matrix<MP> e = tight_all_idempotent(n, rng);
      auto slack   = [&](bool zero) {
        return zero ? Rational(0) : rng.positive_rational();
      };
      if (n == 3) {
        Rational x = slack(target.is_tight(1, 2, 3));
        e.set(0, 2, mp(e(0, 2).value() + x));
      } else if (n == 4) {
        Rational x13 = slack(rng.coin(0.5));
        Rational x24 = rng.coin(0.3) ? x13 : slack(rng.coin(0.5));
        Rational hi  = std::max(x13, x24);
        Rational x14;
        switch (rng.integer(0, 3)) {
          case 0:
            x14 = x13;
            break;
          case 1:
            x14 = x24;
            break;
          case 2:
            x14 = hi;
            break;
          default:
            x14 = hi + rng.positive_rational();
            break;
        }
        if (x14 < hi) {
          continue;
        }
        e.set(0, 2, mp(e(0, 2).value() + x13));
        e.set(1, 3, mp(e(1, 3).value() + x24));
        e.set(0, 3, mp(e(0, 3).value() + x14));
      }
      if (!is_idempotent(e)) {
        throw std::logic_error("pattern generator produced a non-idempotent");
      }
      if (TightnessPattern::of(e) == target) {
        return e;
      }
    }
    throw std::logic_error("no idempotent found for pattern " + target.str());
  }

  namespace detail {
    // A value in [lo, hi] (hi finite; lo may be -inf meaning unbounded).
    inline Rational between(std::optional<Rational> const& lo,
                            Rational const&                hi,
                            Random&                        rng) {
      Rational c = rng.coin(0.25) ? hi : hi - rng.positive_rational();
      if (lo && c < *lo) {
        return rng.coin(0.5) ? *lo : hi;
      }
      return c;
    }
  }  // namespace detail

  // A random member lambda (M o E) of the class described by d.
  inline Matrix<MP> sample_ht_member(HtClassDescriptor const& d,
                                     Matrix<MP> const&        e,
                                     Random&                  rng) {
    std::size_t n = e.dim();
    Matrix<MP>  m = Matrix<MP>::all_ones(n);
    switch (d.form) {
      case HtForm::Group:
        break;
      case HtForm::Corner:
        m.set(d.corner,
              d.corner,
              rng.coin(0.2) ? MP::one() : mp(-rng.positive_rational()));
        break;
      case HtForm::Diagonal3: {
        auto mu = rng.coin(0.2) ? MP::one() : mp(-rng.positive_rational());
        m.set(1, 1, mu);
        m.set(1, 2, mu);
        m.set(2, 2, mu);
        break;
      }
      case HtForm::Ordered: {
        for (std::size_t i = 1; i + 2 <= n; ++i) {
          for (std::size_t j = i; j + 2 <= n; ++j) {
            Rational hi = 0;
            if (i > 1) {
              hi = std::min(hi, m(i - 1, j).value());
            }
            std::optional<Rational> lo;
            if (j > i) {
              lo = m(i, j - 1).value();
            }
            m.set(i, j, mp(detail::between(lo, hi, rng)));
          }
        }
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        m.set(i, j, MP::zero());
      }
    }
    return scale(rng.unit<MP>(), hadamard(m, e));
  }

  // Multiply one entry on or above the diagonal by a nonzero factor != 1.
  inline Matrix<MP> perturb(Matrix<MP> const& a, Random& rng) {
    std::size_t n = a.dim();
    auto i = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(rng.integer(static_cast<std::int64_t>(i), static_cast<std::int64_t>(n) - 1));
    Rational f = rng.positive_rational();
    if (rng.coin(0.5)) {
      f = -f;
    }
    Matrix<MP> b = a;
    b.set(i, j, mp(a(i, j).value() + f));
    return b;
  }

  struct HtClosureReport {
    std::size_t                              samples = 0;
    bool                                     closed  = true;
    std::optional<std::array<Matrix<MP>, 3>> witness;  // A, B, AB

    json to_json() const {
      json j{{"samples", samples}, {"closed", closed}};
      if (witness) {
        j["witness"] = {{"A", tropmat::to_json((*witness)[0])},
                        {"B", tropmat::to_json((*witness)[1])},
                        {"AB", tropmat::to_json((*witness)[2])}};
      }
      return j;
    }
  };

  // Samples pairs of members of the tilde-H-class of E and tests their
  // products by the definition.
  inline HtClosureReport
  ht_closure_check(Matrix<MP> const& e, std::size_t samples, Random& rng) {
    auto            d = ht_class_descriptor(e);
    HtClosureReport r;
    for (std::size_t s = 0; s < samples; ++s) {
      auto a = sample_ht_member(d, e, rng);
      auto b = sample_ht_member(d, e, rng);
      ++r.samples;
      auto ab = mat_mul(a, b);
      if (!ht_definitional(e, ab)) {
        r.closed  = false;
        r.witness = std::array<Matrix<MP>, 3>{a, b, ab};
        break;
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // The embedding theta
  ////////////////////////////////////////////////////////////////////////

  // theta(A) = [[A, A_{*,n}], [0, 1]] for A upper triangular with
  // A_{1,1} = A_{n,n} = 1.
  template <typename S>
  Matrix<S> theta_embed(Matrix<S> const& a) {
    std::size_t n = a.dim();
    a.require_shape(Shape::UpperTriangular, "theta_embed");
    if (n == 0 || !(a(0, 0) == S::one()) || !(a(n - 1, n - 1) == S::one())) {
      throw std::invalid_argument(
          "theta_embed: corner entries (1,1) and (n,n) must be one");
    }
    Matrix<S> r(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        r.set(i, j, a(i, j));
      }
      r.set(i, n, a(i, n - 1));
    }
    r.set(n, n, S::one());
    return r;
  }

  // theta applied until the dimension reaches m.
  template <typename S>
  Matrix<S> theta_lift(Matrix<S> const& a, std::size_t m) {
    if (m < a.dim()) {
      throw DimensionMismatch();
    }
    Matrix<S> r = a;
    while (r.dim() < m) {
      r = theta_embed(r);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Witnesses
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Max-plus matrix from additive entries, nullopt meaning -inf.
    inline Matrix<MP> mp_matrix(
        std::vector<std::vector<std::optional<Rational>>> const& rows) {
      Matrix<MP> m(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
          if (rows[i][j]) {
            m.set(i, j, mp(*rows[i][j]));
          }
        }
      }
      return m;
    }
  }  // namespace detail

  struct NoncommuteMatrices {
    Matrix<MP> a, plus, star;
  };

  // The 4 x 4 matrix whose A(+) and A(*) are not D-related, with the
  // expected values of A(+) and A(*), for the scalar g > 0.
  inline NoncommuteMatrices noncommute_matrices(Rational const& g) {
    std::nullopt_t           z = std::nullopt;
    Rational                 o = 0;
    using R                    = std::optional<Rational>;
    auto a = detail::mp_matrix({{R(o), R(g), R(o), R(2 * g)},
                                {z, R(o), R(g), R(g)},
                                {z, z, R(o), R(o)},
                                {z, z, z, R(o)}});
    auto p = a;
    p.set(0, 1, mp(-g));
    auto s = a;
    s.set(1, 2, mp(-g));
    return {a, p, s};
  }

  inline Proof rtilde_noncommute_witness(std::size_t n, Rational const& g) {
    if (n < 4) {
      throw std::invalid_argument("the witness needs n >= 4");
    }
    if (!(Rational(0) < g)) {
      throw std::invalid_argument("the witness needs g > 0");
    }
    Proof pr("A(+) and A(*) are not D-related in UT_" + std::to_string(n)
             + "(Q), so R~ and L~ do not commute");
    auto w    = noncommute_matrices(g);
    auto a    = theta_lift(w.a, n);
    auto plus = plus_of(a);
    auto star = star_of(a);
    pr.input("n", n).input("g", g.str()).input("A", to_json(a));
    pr.check_equal("A(+) matches the expected matrix", plus, theta_lift(w.plus, n));
    pr.check_equal("A(*) matches the expected matrix", star, theta_lift(w.star, n));
    pr.check("A(+) idempotent", is_idempotent(plus));
    pr.check("A(*) idempotent", is_idempotent(star));
    Path p{1, 2, 4};
    auto dp = deficiency(plus, p);
    auto ds = deficiency(star, p);
    pr.check("Def_{A(+)}(1->2->4) = 2g",
             dp == mp(2 * g),
             json{{"value", MP::to_string(dp)}});
    pr.check("Def_{A(*)}(1->2->4) = 0",
             ds == MP::one(),
             json{{"value", MP::to_string(ds)}});
    auto d = d_related_unitriangular(plus, star);
    pr.check("A(+) and A(*) not D-related",
             !d.related,
             json{{"separating_path",
                   d.separating ? d.separating->str() : std::string("none")}});
    return pr;
  }

  struct PropHtMatrices {
    Matrix<MP> e, a, a2, a2plus;
  };

  // The 5 x 5 idempotent E and A in its tilde-H-class with A^2 outside it.
  inline PropHtMatrices prop_ht_matrices(Rational const& g) {
    using R = std::optional<Rational>;
    R z     = std::nullopt;
    auto q  = [&](std::int64_t k) { return R(k * g); };
    auto e  = detail::mp_matrix({{q(0), q(0), q(2), q(2), q(2)},
                                {z, q(0), q(1), q(2), q(2)},
                                {z, z, q(0), q(0), q(0)},
                                {z, z, z, q(0), q(0)},
                                {z, z, z, z, q(0)}});
    auto a  = detail::mp_matrix({{q(0), q(0), q(2), q(2), q(2)},
                                {z, q(-2), q(-1), q(1), q(2)},
                                {z, z, q(-3), q(0), q(0)},
                                {z, z, z, q(-3), q(0)},
                                {z, z, z, z, q(0)}});
    auto a2 = detail::mp_matrix({{q(0), q(0), q(2), q(2), q(2)},
                                 {z, q(-4), q(-3), q(-1), q(2)},
                                 {z, z, q(-6), q(-3), q(0)},
                                 {z, z, z, q(-6), q(0)},
                                 {z, z, z, z, q(0)}});
    auto ap = detail::mp_matrix({{q(0), q(0), q(2), q(2), q(2)},
                                 {z, q(0), q(2), q(2), q(2)},
                                 {z, z, q(0), q(0), q(0)},
                                 {z, z, z, q(0), q(0)},
                                 {z, z, z, z, q(0)}});
    return {e, a, a2, ap};
  }

  inline Proof prop_ht_witness(std::size_t n, Rational const& g) {
    if (n < 5) {
      throw std::invalid_argument("the witness needs n >= 5");
    }
    if (!(Rational(0) < g)) {
      throw std::invalid_argument("the witness needs g > 0");
    }
    Proof pr("the tilde-H-class of E in UT_" + std::to_string(n)
             + "(Q) is not a subsemigroup");
    auto w  = prop_ht_matrices(g);
    auto e  = theta_lift(w.e, n);
    auto a  = theta_lift(w.a, n);
    auto a2 = mat_mul(a, a);
    pr.input("n", n).input("g", g.str()).input("E", to_json(e)).input("A", to_json(a));
    pr.check("E idempotent", is_idempotent(e));
    pr.check_equal("A(+) = E", plus_of(a), e);
    pr.check_equal("A(*) = E", star_of(a), e);
    pr.check_equal("A^2 matches the expected matrix", a2, theta_lift(w.a2, n));
    auto a2p = plus_of(a2);
    pr.check_equal("(A^2)(+) matches the expected matrix",
                   a2p,
                   theta_lift(w.a2plus, n));
    pr.check_equal("(A^2)(+) != E", a2p, e, false);
    pr.check("A^2 not in the tilde-H-class of E", !ht_definitional(e, a2));
    return pr;
  }

  ////////////////////////////////////////////////////////////////////////
  // Left compatibility of R~
  ////////////////////////////////////////////////////////////////////////

  // A R B in UT_n(Q) iff rnorm(A) = rnorm(B).
  template <typename S>
  bool r_related_upper(Matrix<S> const& a, Matrix<S> const& b) {
    return normal_form(a).rnorm == normal_form(b).rnorm;
  }

  namespace detail {
    // Row i of C as in the left-compatibility argument: E_{i,j} g^{-1} for
    // j < l, E_{i,l} g^{-1} alpha_{i,l} at l, E_{i,j} gamma_{i,l}...gamma_{i,j}
    // for j > l, where g = gamma_{i,l} > alpha_{i,l}.  Other rows of C are
    // those of E.
    template <typename S>
    Matrix<S> leftcong_matrix(Matrix<S> const& e,
                              Matrix<S> const& alpha,
                              Matrix<S> const& gamma,
                              std::size_t      i,
                              std::size_t      l) {
      std::size_t n  = e.dim();
      Matrix<S>   c  = e;
      auto        gi = S::inv(gamma(i, l));
      for (std::size_t j = i; j < l; ++j) {
        c.set(i, j, S::mul(e(i, j), gi));
      }
      c.set(i, l, S::mul(S::mul(e(i, l), gi), alpha(i, l)));
      auto prod = gamma(i, l);
      for (std::size_t j = l + 1; j < n; ++j) {
        prod = S::mul(prod, gamma(i, j));
        c.set(i, j, S::mul(e(i, j), prod));
      }
      return c;
    }
  }  // namespace detail

  struct LeftCongReport {
    bool                      r_related = false;
    std::size_t               trials    = 0;
    bool                      consistent = false;  // claim confirmed
    std::string               method;
    std::optional<Matrix<MP>> separating;

    json to_json() const {
      json j{{"r_related", r_related},
             {"trials", trials},
             {"consistent", consistent},
             {"method", method}};
      if (separating) {
        j["C"] = tropmat::to_json(*separating);
      }
      return j;
    }
  };

  // If A R B, every sampled C has (CA)(+) = (CB)(+).  Otherwise searches
  // for C with (CA)(+) != (CB)(+): first the meet of A(+) and B(+), then
  // the row construction, then random matrices.
  inline LeftCongReport leftcong_check(Matrix<MP> const& a,
                                       Matrix<MP> const& b,
                                       std::size_t       trials,
                                       Random&           rng) {
    a.require_shape(Shape::PositiveUpper, "leftcong_check");
    b.require_shape(Shape::PositiveUpper, "leftcong_check");
    std::size_t    n = a.dim();
    LeftCongReport r;
    r.r_related = r_related_upper(a, b);
    auto separates = [&](Matrix<MP> const& c) {
      return plus_of(mat_mul(c, a)) != plus_of(mat_mul(c, b));
    };
    if (r.r_related) {
      r.method     = "random";
      r.consistent = true;
      for (std::size_t t = 0; t < trials; ++t) {
        auto c = rng.positive_upper<MP>(n);
        ++r.trials;
        if (separates(c)) {
          r.consistent = false;
          r.separating = c;
          break;
        }
      }
      return r;
    }
    auto pa = plus_of(a), pb = plus_of(b);
    auto c0 = entrywise_meet(pa, pb);
    ++r.trials;
    if (separates(c0)) {
      r.consistent = true;
      r.method     = "meet";
      r.separating = c0;
      return r;
    }
    auto al = alpha_matrix(a, pa);
    auto ga = alpha_matrix(b, pa);
    for (std::size_t i = 0; i < n; ++i) {
      std::optional<std::size_t> l;
      for (std::size_t j = n; j-- > i;) {
        if (!(al(i, j) == ga(i, j))) {
          l = j;
          break;
        }
      }
      if (!l) {
        continue;
      }
      bool gamma_larger = MP::less(al(i, *l), ga(i, *l));
      auto c = gamma_larger ? detail::leftcong_matrix(pa, al, ga, i, *l)
                            : detail::leftcong_matrix(pa, ga, al, i, *l);
      ++r.trials;
      if (separates(c)) {
        r.consistent = true;
        r.method     = "row-construction";
        r.separating = c;
        return r;
      }
    }
    for (std::size_t t = 0; t < trials; ++t) {
      auto c = rng.positive_upper<MP>(n);
      ++r.trials;
      if (separates(c)) {
        r.consistent = true;
        r.method     = "random";
        r.separating = c;
        return r;
      }
    }
    r.method = "inconclusive";
    return r;
  }

  // A pair of matrices with the same A(+) that are not R-related: B is A
  // with one entry above the diagonal raised, kept only if B(+) = A(+).
  inline std::pair<Matrix<MP>, Matrix<MP>> shared_plus_pair(std::size_t n,
                                                            Random&     rng) {
    if (n < 3) {
      throw std::invalid_argument("shared_plus_pair needs n >= 3");
    }
    for (int attempt = 0; attempt < 100000; ++attempt) {
      auto a = rng.positive_upper<MP>(n);
      auto e = plus_of(a);
      auto b = a;
      auto i = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n) - 3));
      auto j = static_cast<std::size_t>(rng.integer(static_cast<std::int64_t>(i) + 1, static_cast<std::int64_t>(n) - 2));
      b.set(i, j, mp(a(i, j).value() + rng.positive_rational()));
      if (plus_of(b) == e && !r_related_upper(a, b)) {
        return {a, b};
      }
    }
    throw std::logic_error("shared_plus_pair: no pair found");
  }

}  // namespace tropmat

#endif  // TROPMAT_DEFICIENCY_HPP_
