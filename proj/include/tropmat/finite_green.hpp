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

// Exhaustive enumeration of finite monoids of Boolean matrices, Green's
// relations and their starred and tilde generalisations as partitions, and
// the classification of a family as regular, abundant or Fountain.

#ifndef TROPMAT_FINITE_GREEN_HPP_
#define TROPMAT_FINITE_GREEN_HPP_

#include <algorithm>  // for lower_bound, sort
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t, uint64_t
#include <map>        // for map
#include <numeric>    // for iota
#include <optional>   // for optional
#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <vector>     // for vector

#include "bmat.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "plusstar.hpp"

namespace tropmat {

  class TooLarge : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  ////////////////////////////////////////////////////////////////////////
  // Families
  ////////////////////////////////////////////////////////////////////////

  enum class Family { FullBool, UpperBool, UniBool, WellBehaved, Hall, Reflexive };

  inline char const* family_name(Family f) {
    switch (f) {
      case Family::FullBool:
        return "M";
      case Family::UpperBool:
        return "UT";
      case Family::UniBool:
        return "U";
      case Family::WellBehaved:
        return "W";
      case Family::Hall:
        return "H";
      case Family::Reflexive:
        return "R";
    }
    return "?";
  }

  inline Family parse_family(std::string const& s) {
    if (s == "M" || s == "full" || s == "FullBool") {
      return Family::FullBool;
    }
    if (s == "UT" || s == "upper" || s == "UpperBool") {
      return Family::UpperBool;
    }
    if (s == "U" || s == "uni" || s == "UniBool") {
      return Family::UniBool;
    }
    if (s == "W" || s == "wellbehaved" || s == "WellBehaved") {
      return Family::WellBehaved;
    }
    if (s == "H" || s == "hall" || s == "Hall") {
      return Family::Hall;
    }
    if (s == "R" || s == "reflexive" || s == "Reflexive") {
      return Family::Reflexive;
    }
    throw std::invalid_argument("unknown family '" + s + "'");
  }

  struct FamilySpec {
    Family      family = Family::FullBool;
    std::size_t n      = 1;
  };

  // Elements are capped at 2^20.
  constexpr std::size_t max_family_size = std::size_t(1) << 20;

  // R, L, H, D, R* and L* materialise per-element signatures of size |T|;
  // above this size only the tilde relations are computed.
  constexpr std::size_t max_relation_size = 8192;

  // The tilde relations only need one bit per idempotent.
  constexpr std::size_t max_tilde_size = std::size_t(1) << 16;

  class FiniteMonoidTable {
   public:
    using code_t = bmat::code_t;

    explicit FiniteMonoidTable(FamilySpec spec) : _spec(spec), _n(spec.n) {
      if (_n < 1 || _n > bmat::max_dim) {
        throw TooLarge("family dimension must be in 1..5");
      }
      enumerate();
      build_tables();
    }

    FamilySpec const& spec() const noexcept {
      return _spec;
    }
    std::size_t n() const noexcept {
      return _n;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    code_t element(std::size_t i) const {
      return _elements[i];
    }
    std::vector<code_t> const& elements() const noexcept {
      return _elements;
    }
    std::vector<std::uint32_t> const& idempotents() const noexcept {
      return _idempotents;
    }
    std::vector<std::uint32_t> const& unit_idempotents() const noexcept {
      return _unit_idempotents;
    }
    bool is_idempotent(std::size_t i) const {
      return _is_idem[i];
    }
    bool is_unit_idempotent(std::size_t i) const {
      return _is_idem[i] && bmat::unit_diagonal(_elements[i], _n);
    }

    bool contains(code_t c) const {
      return std::binary_search(_elements.begin(), _elements.end(), c);
    }

    std::uint32_t index(code_t c) const {
      auto it = std::lower_bound(_elements.begin(), _elements.end(), c);
      if (it == _elements.end() || *it != c) {
        throw std::invalid_argument("matrix is not in the family");
      }
      return static_cast<std::uint32_t>(it - _elements.begin());
    }

    std::uint32_t product(std::size_t i, std::size_t j) const {
      if (!_table.empty()) {
        return _table[i * size() + j];
      }
      return index(bmat::mul(_elements[i], _elements[j], _n));
    }

    // Image under the family's involutary anti-automorphism (transpose, or
    // reflection in the anti-diagonal for the triangular families).
    std::uint32_t anti(std::size_t i) const {
      return _anti[i];
    }

    bool uses_delta() const noexcept {
      return _spec.family == Family::UpperBool
             || _spec.family == Family::UniBool;
    }

   private:
    void enumerate() {
      code_t forced = 0, free = 0;
      for (std::size_t i = 0; i < _n; ++i) {
        for (std::size_t j = 0; j < _n; ++j) {
          code_t b = bmat::bit(_n, i, j);
          switch (_spec.family) {
            case Family::FullBool:
            case Family::WellBehaved:
            case Family::Hall:
              free |= b;
              break;
            case Family::UpperBool:
              if (i <= j) {
                free |= b;
              }
              break;
            case Family::UniBool:
            case Family::Reflexive:
              if (i == j) {
                forced |= b;
              } else if (i < j || _spec.family == Family::Reflexive) {
                free |= b;
              }
              break;
          }
        }
      }
      std::size_t count = std::size_t(1) << __builtin_popcount(free);
      if (count > max_family_size) {
        throw TooLarge(std::string("family ") + family_name(_spec.family)
                       + " of dimension " + std::to_string(_n)
                       + " exceeds the element cap");
      }
      code_t s = 0;
      do {
        code_t c  = forced | s;
        bool   ok = true;
        if (_spec.family == Family::WellBehaved) {
          ok = bmat::total(c, _n);
        } else if (_spec.family == Family::Hall) {
          ok = bmat::has_permutation(c, _n);
        }
        if (ok) {
          _elements.push_back(c);
        }
        s = (s - free) & free;
      } while (s != 0);
    }

    void build_tables() {
      std::size_t m = size();
      if (m <= 1024) {
        _table.resize(m * m);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            _table[i * m + j] = index(bmat::mul(_elements[i], _elements[j], _n));
          }
        }
      }
      _is_idem.resize(m);
      _anti.resize(m);
      for (std::size_t i = 0; i < m; ++i) {
        code_t c    = _elements[i];
        _is_idem[i] = bmat::mul(c, c, _n) == c;
        if (_is_idem[i]) {
          _idempotents.push_back(static_cast<std::uint32_t>(i));
          if (bmat::unit_diagonal(c, _n)) {
            _unit_idempotents.push_back(static_cast<std::uint32_t>(i));
          }
        }
        _anti[i] = index(uses_delta() ? bmat::delta(c, _n)
                                      : bmat::transpose(c, _n));
      }
    }

    FamilySpec                 _spec;
    std::size_t                _n;
    std::vector<code_t>        _elements;
    std::vector<std::uint32_t> _table;
    std::vector<bool>          _is_idem;
    std::vector<std::uint32_t> _idempotents;
    std::vector<std::uint32_t> _unit_idempotents;
    std::vector<std::uint32_t> _anti;
  };

  ////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////

  enum class Relation {
    R,
    L,
    H,
    D,
    Rstar,
    Lstar,
    Rtilde,
    Ltilde,
    RtildeU,
    LtildeU
  };

  inline char const* relation_name(Relation r) {
    switch (r) {
      case Relation::R:
        return "R";
      case Relation::L:
        return "L";
      case Relation::H:
        return "H";
      case Relation::D:
        return "D";
      case Relation::Rstar:
        return "R*";
      case Relation::Lstar:
        return "L*";
      case Relation::Rtilde:
        return "R~";
      case Relation::Ltilde:
        return "L~";
      case Relation::RtildeU:
        return "R~U";
      case Relation::LtildeU:
        return "L~U";
    }
    return "?";
  }

  inline std::vector<Relation> all_relations() {
    return {Relation::R,
            Relation::L,
            Relation::H,
            Relation::D,
            Relation::Rstar,
            Relation::Lstar,
            Relation::Rtilde,
            Relation::Ltilde,
            Relation::RtildeU,
            Relation::LtildeU};
  }

  // A partition of the elements of a table.  Classes are numbered in order
  // of their least element, which is also the class representative.
  struct RelationPartition {
    Relation                   relation = Relation::R;
    std::vector<std::uint32_t> class_of;
    std::vector<std::uint32_t> reps;

    std::size_t num_classes() const {
      return reps.size();
    }

    bool same(std::size_t a, std::size_t b) const {
      return class_of[a] == class_of[b];
    }

    // Every class of *this lies inside a class of other.
    bool refines(RelationPartition const& other) const {
      std::vector<std::int64_t> img(num_classes(), -1);
      for (std::size_t a = 0; a < class_of.size(); ++a) {
        auto& x = img[class_of[a]];
        if (x == -1) {
          x = other.class_of[a];
        } else if (x != other.class_of[a]) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(RelationPartition const& a,
                           RelationPartition const& b) {
      return a.class_of == b.class_of;
    }
  };

  namespace detail {

    template <typename Key>
    RelationPartition partition_by_key(Relation r, std::vector<Key> const& keys) {
      RelationPartition    p;
      std::map<Key, std::uint32_t> ids;
      p.relation = r;
      p.class_of.resize(keys.size());
      for (std::size_t a = 0; a < keys.size(); ++a) {
        auto [it, fresh] = ids.emplace(keys[a],
                                       static_cast<std::uint32_t>(p.reps.size()));
        if (fresh) {
          p.reps.push_back(static_cast<std::uint32_t>(a));
        }
        p.class_of[a] = it->second;
      }
      return p;
    }

    using Bits = std::vector<std::uint64_t>;

    inline void set_bit(Bits& b, std::size_t i) {
      b[i / 64] |= std::uint64_t(1) << (i % 64);
    }

    inline RelationPartition right_green(FiniteMonoidTable const& t) {
      std::size_t       m = t.size();
      std::vector<Bits> keys(m, Bits((m + 63) / 64, 0));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t x = 0; x < m; ++x) {
          set_bit(keys[a], t.product(a, x));
        }
      }
      return partition_by_key(Relation::R, keys);
    }

    // Kernel fingerprint of x -> x a: label[x] is the least x' with
    // x' a = x a.
    inline RelationPartition right_star(FiniteMonoidTable const& t) {
      std::size_t                        m = t.size();
      std::vector<std::vector<std::uint32_t>> keys(m);
      std::vector<std::int64_t>          first(m, -1);
      for (std::size_t a = 0; a < m; ++a) {
        std::fill(first.begin(), first.end(), -1);
        auto& lab = keys[a];
        lab.resize(m);
        for (std::size_t x = 0; x < m; ++x) {
          auto p = t.product(x, a);
          if (first[p] == -1) {
            first[p] = static_cast<std::int64_t>(x);
          }
          lab[x] = static_cast<std::uint32_t>(first[p]);
        }
      }
      return partition_by_key(Relation::Rstar, keys);
    }

    // Signature {e in idems : e a = a}.
    inline RelationPartition right_tilde(FiniteMonoidTable const&          t,
                                         std::vector<std::uint32_t> const& idems,
                                         Relation                          r) {
      std::size_t       m = t.size();
      std::vector<Bits> keys(m, Bits((idems.size() + 63) / 64 + 1, 0));
      std::vector<bmat::code_t> ecodes;
      for (auto e : idems) {
        ecodes.push_back(t.element(e));
      }
      for (std::size_t a = 0; a < m; ++a) {
        bmat::code_t ca = t.element(a);
        for (std::size_t k = 0; k < ecodes.size(); ++k) {
          if (bmat::mul(ecodes[k], ca, t.n()) == ca) {
            set_bit(keys[a], k);
          }
        }
      }
      return partition_by_key(r, keys);
    }

    inline RelationPartition mirror(FiniteMonoidTable const& t,
                                    RelationPartition const& p,
                                    Relation                 r) {
      std::vector<std::uint32_t> keys(t.size());
      for (std::size_t a = 0; a < t.size(); ++a) {
        keys[a] = p.class_of[t.anti(a)];
      }
      return partition_by_key(r, keys);
    }

    struct UnionFind {
      std::vector<std::uint32_t> parent;
      explicit UnionFind(std::size_t m) : parent(m) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    };
  }  // namespace detail

  inline RelationPartition compute_relation(FiniteMonoidTable const& t,
                                            Relation                 rel) {
    bool tilde = rel == Relation::Rtilde || rel == Relation::Ltilde
                 || rel == Relation::RtildeU || rel == Relation::LtildeU;
    std::size_t cap = tilde ? max_tilde_size : max_relation_size;
    if (t.size() > cap) {
      throw TooLarge(std::string("relation ") + relation_name(rel)
                     + " is limited to " + std::to_string(cap)
                     + " elements; use the targeted witness checks");
    }
    switch (rel) {
      case Relation::R:
        return detail::right_green(t);
      case Relation::Rstar:
        return detail::right_star(t);
      case Relation::Rtilde:
        return detail::right_tilde(t, t.idempotents(), Relation::Rtilde);
      case Relation::RtildeU:
        return detail::right_tilde(t, t.unit_idempotents(), Relation::RtildeU);
      case Relation::L:
        return detail::mirror(t, detail::right_green(t), Relation::L);
      case Relation::Lstar:
        return detail::mirror(t, detail::right_star(t), Relation::Lstar);
      case Relation::Ltilde:
        return detail::mirror(
            t, detail::right_tilde(t, t.idempotents(), Relation::Rtilde),
            Relation::Ltilde);
      case Relation::LtildeU:
        return detail::mirror(
            t,
            detail::right_tilde(t, t.unit_idempotents(), Relation::RtildeU),
            Relation::LtildeU);
      case Relation::H: {
        auto                       r = compute_relation(t, Relation::R);
        auto                       l = compute_relation(t, Relation::L);
        std::vector<std::uint64_t> keys(t.size());
        for (std::size_t a = 0; a < t.size(); ++a) {
          keys[a] = (std::uint64_t(r.class_of[a]) << 32) | l.class_of[a];
        }
        return detail::partition_by_key(Relation::H, keys);
      }
      case Relation::D: {
        auto              r = compute_relation(t, Relation::R);
        auto              l = compute_relation(t, Relation::L);
        detail::UnionFind uf(t.size());
        for (std::uint32_t a = 0; a < t.size(); ++a) {
          uf.unite(a, r.reps[r.class_of[a]]);
          uf.unite(a, l.reps[l.class_of[a]]);
        }
        std::vector<std::uint32_t> keys(t.size());
        for (std::uint32_t a = 0; a < t.size(); ++a) {
          keys[a] = uf.find(a);
        }
        return detail::partition_by_key(Relation::D, keys);
      }
    }
    throw std::invalid_argument("unknown relation");
  }

  // The right-hand relation whose mirror image is r, if r is a left one.
  inline std::optional<Relation> mirrored_relation(Relation r) {
    switch (r) {
      case Relation::L:
        return Relation::R;
      case Relation::Lstar:
        return Relation::Rstar;
      case Relation::Ltilde:
        return Relation::Rtilde;
      case Relation::LtildeU:
        return Relation::RtildeU;
      default:
        return std::nullopt;
    }
  }

  // Number of classes of p containing no element of the given idempotent
  // set, and the representative of the first such class.
  inline std::pair<std::size_t, std::optional<std::uint32_t>>
  idempotent_free_classes(RelationPartition const&          p,
                          std::vector<std::uint32_t> const& idems) {
    std::vector<bool> has(p.num_classes(), false);
    for (auto e : idems) {
      has[p.class_of[e]] = true;
    }
    std::size_t                  count = 0;
    std::optional<std::uint32_t> first;
    for (std::size_t c = 0; c < has.size(); ++c) {
      if (!has[c]) {
        ++count;
        if (!first) {
          first = p.reps[c];
        }
      }
    }
    return {count, first};
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  struct RelationSummary {
    Relation    relation;
    std::size_t class_count;
    std::size_t idempotent_free_classes;
  };

  struct ClassificationReport {
    FamilySpec  spec;
    bool        regular    = false;
    bool        abundant   = false;
    bool        fountain   = false;
    bool        u_fountain = false;
    std::size_t elements   = 0;
    std::size_t idempotents      = 0;
    std::size_t unit_idempotents = 0;
    std::vector<RelationSummary> summaries;
    std::optional<bmat::code_t> non_regular;
    std::optional<bmat::code_t> non_abundant;
    std::optional<bmat::code_t> non_fountain;
    std::optional<bmat::code_t> non_u_fountain;
  };

  // Least element a with no x such that a x a = a.
  inline std::optional<std::uint32_t> first_non_regular(FiniteMonoidTable const& t) {
    for (std::uint32_t a = 0; a < t.size(); ++a) {
      bool found = false;
      for (std::uint32_t x = 0; x < t.size() && !found; ++x) {
        found = t.product(t.product(a, x), a) == a;
      }
      if (!found) {
        return a;
      }
    }
    return std::nullopt;
  }

  inline ClassificationReport classify(FiniteMonoidTable const& t) {
    ClassificationReport rep;
    rep.spec             = t.spec();
    rep.elements         = t.size();
    rep.idempotents      = t.idempotents().size();
    rep.unit_idempotents = t.unit_idempotents().size();

    bool large = t.size() > max_relation_size;
    std::map<Relation, RelationPartition> parts;
    for (Relation r : all_relations()) {
      bool tilde = r == Relation::Rtilde || r == Relation::Ltilde
                   || r == Relation::RtildeU || r == Relation::LtildeU;
      if (large && !tilde) {
        continue;
      }
      auto right = mirrored_relation(r);
      auto it    = right ? parts.find(*right) : parts.end();
      if (it != parts.end()) {
        parts.emplace(r, detail::mirror(t, it->second, r));
      } else {
        parts.emplace(r, compute_relation(t, r));
      }
    }
    std::map<Relation, std::pair<std::size_t, std::optional<std::uint32_t>>>
        free;
    for (auto const& [r, p] : parts) {
      bool unit = r == Relation::RtildeU || r == Relation::LtildeU;
      free[r]   = idempotent_free_classes(p, unit ? t.unit_idempotents()
                                                  : t.idempotents());
      rep.summaries.push_back({r, p.num_classes(), free[r].first});
    }

    auto flag = [&](Relation a,
                    Relation b,
                    bool&    out,
                    std::optional<bmat::code_t>& witness) {
      out = free[a].first == 0 && free[b].first == 0;
      if (!out) {
        witness = t.element(free[a].second ? *free[a].second : *free[b].second);
      }
    };
    flag(Relation::Rtilde, Relation::Ltilde, rep.fountain, rep.non_fountain);
    flag(Relation::RtildeU,
         Relation::LtildeU,
         rep.u_fountain,
         rep.non_u_fountain);
    if (large) {
      // Regular implies abundant implies Fountain, and an element with no
      // idempotent in its tilde classes has none in its starred classes.
      if (rep.fountain) {
        throw TooLarge("family is Fountain but too large to decide the "
                       "regular and abundant flags");
      }
      rep.regular      = false;
      rep.abundant     = false;
      rep.non_abundant = rep.non_fountain;
      rep.non_regular  = rep.non_fountain;
      return rep;
    }
    flag(Relation::Rstar, Relation::Lstar, rep.abundant, rep.non_abundant);

    auto nr     = first_non_regular(t);
    rep.regular = !nr;
    if (nr) {
      rep.non_regular = t.element(*nr);
    }
    if ((rep.regular && !rep.abundant) || (rep.abundant && !rep.fountain)) {
      throw std::logic_error("classification flags are not monotone");
    }
    return rep;
  }

  inline ClassificationReport classify(FamilySpec spec) {
    return classify(FiniteMonoidTable(spec));
  }

  // The strongest of the three properties, as a table label.
  inline char const* classification_label(ClassificationReport const& r) {
    if (r.regular) {
      return "Regular";
    }
    if (r.abundant) {
      return "Abundant";
    }
    if (r.fountain) {
      return "Fountain";
    }
    return "Not Fountain";
  }

  inline json to_json(ClassificationReport const& r) {
    json sums = json::array();
    for (auto const& s : r.summaries) {
      sums.push_back({{"relation", relation_name(s.relation)},
                      {"class_count", s.class_count},
                      {"idempotent_free_classes", s.idempotent_free_classes}});
    }
    json wit = json::object();
    auto put = [&](char const* k, std::optional<bmat::code_t> const& c) {
      if (c) {
        wit[k] = to_json(bmat::to_matrix(*c, r.spec.n));
      }
    };
    put("non_regular", r.non_regular);
    put("non_abundant", r.non_abundant);
    put("non_fountain", r.non_fountain);
    put("non_u_fountain", r.non_u_fountain);
    return json{{"family", family_name(r.spec.family)},
                {"n", r.spec.n},
                {"flags",
                 {{"regular", r.regular},
                  {"abundant", r.abundant},
                  {"fountain", r.fountain},
                  {"u_fountain", r.u_fountain}}},
                {"counts",
                 {{"elements", r.elements},
                  {"idempotents", r.idempotents},
                  {"unit_idempotents", r.unit_idempotents}}},
                {"relation_summaries", sums},
                {"witnesses", wit}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Column stabilisers and exactness
  ////////////////////////////////////////////////////////////////////////

  struct ColStabResult {
    std::vector<bmat::code_t>   colstab;  // idempotents E with EA = A
    BoolSpace                   colfix;   // intersection of their Col(E)
    std::optional<bmat::code_t> realising_idempotent;  // Col(E) = ColFix
  };

  inline BoolSpace intersect(BoolSpace const& a, BoolSpace const& b) {
    BoolSpace r{a.n, {}};
    std::set_intersection(a.elements.begin(),
                          a.elements.end(),
                          b.elements.begin(),
                          b.elements.end(),
                          std::back_inserter(r.elements));
    return r;
  }

  inline ColStabResult colstab_colfix(BoolMatrix const& a) {
    std::size_t n = a.dim();
    if (n > 3) {
      throw TooLarge("colstab_colfix is limited to n <= 3");
    }
    bmat::code_t  ca = bmat::from_matrix(a);
    ColStabResult r;
    std::vector<bmat::code_t> idems;
    bmat::code_t              total = bmat::code_t(1) << (n * n);
    for (bmat::code_t e = 0; e < total; ++e) {
      if (bmat::mul(e, e, n) == e) {
        idems.push_back(e);
        if (bmat::mul(e, ca, n) == ca) {
          r.colstab.push_back(e);
        }
      }
    }
    std::vector<BoolVec> all;
    for (BoolVec v = 0; v < (BoolVec(1) << n); ++v) {
      all.push_back(v);
    }
    r.colfix = BoolSpace{n, all};
    for (auto e : r.colstab) {
      r.colfix = intersect(r.colfix, bool_col_space(bmat::to_matrix(e, n)));
    }
    for (auto e : idems) {
      if (bool_col_space(bmat::to_matrix(e, n)) == r.colfix) {
        r.realising_idempotent = e;
        break;
      }
    }
    return r;
  }

  struct ExactnessReport {
    std::size_t n            = 0;
    std::size_t pairs        = 0;
    bool        f1           = true;
    bool        f2           = true;
    std::optional<std::pair<bmat::code_t, bmat::code_t>> counterexample;
  };

  namespace detail {
    // Row vector v (bitmask over rows) times the matrix a.
    inline BoolVec vec_times(BoolVec v, bmat::code_t a, std::size_t n) {
      BoolVec r = 0;
      while (v != 0) {
        unsigned k = static_cast<unsigned>(__builtin_ctz(v));
        r |= bmat::row(a, n, k);
        v &= v - 1;
      }
      return r;
    }

    // Ker(Col(A)) is contained in Ker(Col(B)): v A = w A implies v B = w B.
    inline bool col_kernel_contained(bmat::code_t a,
                                     bmat::code_t b,
                                     std::size_t  n) {
      std::size_t              m = std::size_t(1) << n;
      std::vector<std::int64_t> rep(m, -1);
      for (BoolVec v = 0; v < m; ++v) {
        BoolVec va = vec_times(v, a, n);
        if (rep[va] == -1) {
          rep[va] = v;
        } else if (vec_times(static_cast<BoolVec>(rep[va]), b, n)
                   != vec_times(v, b, n)) {
          return false;
        }
      }
      return true;
    }

    inline BoolSpace col_space_code(bmat::code_t a, std::size_t n) {
      std::vector<BoolVec> cols;
      for (std::size_t j = 0; j < n; ++j) {
        cols.push_back(bmat::column(a, n, j));
      }
      return bool_span(n, cols);
    }
  }  // namespace detail

  // Exhaustively checks (F1) and (F2) for all pairs of n x n Boolean
  // matrices.  Row spaces and row kernels are handled by transposition.
  inline ExactnessReport bool_exactness_check(std::size_t n) {
    if (n < 1 || n > 3) {
      throw TooLarge("exactness check is limited to n <= 3");
    }
    ExactnessReport r;
    r.n                  = n;
    bmat::code_t total   = bmat::code_t(1) << (n * n);
    std::vector<BoolSpace> col(total), row(total);
    for (bmat::code_t a = 0; a < total; ++a) {
      col[a] = detail::col_space_code(a, n);
      row[a] = detail::col_space_code(bmat::transpose(a, n), n);
    }
    for (bmat::code_t a = 0; a < total; ++a) {
      bmat::code_t at = bmat::transpose(a, n);
      for (bmat::code_t b = 0; b < total; ++b) {
        ++r.pairs;
        bool k2 = detail::col_kernel_contained(a, b, n);
        bool c2 = col[b].subset_of(col[a]);
        bool k1 = detail::col_kernel_contained(at, bmat::transpose(b, n), n);
        bool c1 = row[b].subset_of(row[a]);
        if (k2 != c2) {
          r.f2 = false;
        }
        if (k1 != c1) {
          r.f1 = false;
        }
        if ((k2 != c2 || k1 != c1) && !r.counterexample) {
          r.counterexample = std::make_pair(a, b);
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Witnesses for the negative results
  ////////////////////////////////////////////////////////////////////////

  // The 4 x 4 matrix that is tilde-related to no idempotent, and the two
  // idempotents fixing it used to refute any candidate.
  template <typename S>
  Matrix<S> not_fountain_matrix(std::size_t n) {
    auto a = from_bits<S>(
        4, {{0, 1, 1, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
    return embed_corner(a, n, false);
  }

  template <typename S>
  Matrix<S> not_fountain_f1(std::size_t n) {
    auto f = from_bits<S>(
        4, {{0, 1, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    return embed_corner(f, n, false);
  }

  template <typename S>
  Matrix<S> not_fountain_f2(std::size_t n) {
    auto f = from_bits<S>(
        4, {{0, 1, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    return embed_corner(f, n, false);
  }

  // The 3 x 3 block that is starred-related to no idempotent of the upper
  // triangular monoid.
  template <typename S>
  Matrix<S> not_abundant_matrix(std::size_t n) {
    auto a = from_bits<S>(3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    return embed_corner(a, n, false);
  }

  // Equation solving over an idempotent anti-negative semiring for
  // matrices whose known entries are zero or one.  Terms are either the
  // constants zero and one or named unknowns.
  namespace symbolic {

    struct Term {
      int  var = -1;     // unknown id, or -1 for a constant
      bool one = false;  // constant value when var == -1

      static Term zero() {
        return {};
      }
      static Term unit() {
        return {-1, true};
      }
      static Term variable(int v) {
        return {v, false};
      }
    };

    // Matrix whose entries are terms.
    struct SymMatrix {
      std::size_t       n = 0;
      std::vector<Term> t;
      Term const& operator()(std::size_t i, std::size_t j) const {
        return t[i * n + j];
      }
    };

    class System {
     public:
      explicit System(std::vector<std::string> names)
          : _names(std::move(names)), _parent(_names.size() + 2) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      // Node ids: unknowns 0..k-1, then zero = k, one = k+1.
      int node(Term const& t) const {
        if (t.var >= 0) {
          return t.var;
        }
        return static_cast<int>(_names.size()) + (t.one ? 1 : 0);
      }

      std::string name(Term const& t) const {
        if (t.var >= 0) {
          return _names[t.var];
        }
        return t.one ? "1" : "0";
      }

      int find(int x) {
        while (_parent[x] != x) {
          x = _parent[x] = _parent[_parent[x]];
        }
        return x;
      }

      // Record a = b; returns false when this identifies zero with one.
      bool equate(Term const& a, Term const& b, std::string const& why) {
        int ra = find(node(a)), rb = find(node(b));
        if (ra != rb) {
          _parent[std::max(ra, rb)] = std::min(ra, rb);
          _log.push_back(name(a) + " = " + name(b) + "  (" + why + ")");
        }
        return !contradiction();
      }

      bool contradiction() {
        int k = static_cast<int>(_names.size());
        return find(k) == find(k + 1);
      }

      bool is_const(Term const& t, bool one) {
        int k = static_cast<int>(_names.size());
        return find(node(t)) == find(k + (one ? 1 : 0));
      }

      std::vector<std::string> const& log() const {
        return _log;
      }

     private:
      std::vector<std::string> _names;
      std::vector<int>         _parent;
      std::vector<std::string> _log;
    };

    // Impose F X = X where F has constant entries and X symbolic.  Each
    // entry of F X is the join of X_{k,j} over the k with F_{i,k} = 1; the
    // equation is resolved when that join is a single term after removing
    // known zeros.  Returns the unresolved equations as strings.
    template <typename S>
    std::vector<std::string> impose_left_fix(System&          sys,
                                             Matrix<S> const& f,
                                             SymMatrix const& x,
                                             std::string const& label) {
      std::vector<std::string> open;
      for (std::size_t i = 0; i < x.n; ++i) {
        for (std::size_t j = 0; j < x.n; ++j) {
          std::vector<Term> terms;
          for (std::size_t k = 0; k < x.n; ++k) {
            if (S::is_zero(f(i, k))) {
              continue;
            }
            if (!(f(i, k) == S::one())) {
              throw std::invalid_argument("symbolic: constants must be 0/1");
            }
            if (!sys.is_const(x(k, j), false)) {
              terms.push_back(x(k, j));
            }
          }
          std::string where = label + " at (" + std::to_string(i + 1) + ","
                              + std::to_string(j + 1) + ")";
          if (terms.empty()) {
            sys.equate(x(i, j), Term::zero(), where);
          } else if (terms.size() == 1) {
            sys.equate(x(i, j), terms[0], where);
          } else {
            std::string s;
            for (auto const& t : terms) {
              s += (s.empty() ? "" : " + ") + sys.name(t);
            }
            open.push_back(s + " = " + sys.name(x(i, j)) + "  (" + where
                           + ")");
          }
        }
      }
      return open;
    }

    // Impose X A = A for symbolic X and constant A: each entry is the join
    // of X_{i,k} over k with A_{k,j} = 1.  A zero right hand side forces
    // every term to zero (anti-negativity); a one with a single live term
    // forces that term to one.  Iterated to a fixed point; the remaining
    // equations are returned.
    template <typename S>
    std::vector<std::string> impose_fixes(System&          sys,
                                          SymMatrix const& x,
                                          Matrix<S> const& a) {
      bool changed = true;
      std::vector<std::string> open;
      while (changed) {
        changed = false;
        open.clear();
        for (std::size_t i = 0; i < x.n; ++i) {
          for (std::size_t j = 0; j < x.n; ++j) {
            std::vector<Term> live;
            bool              has_one = false;
            for (std::size_t k = 0; k < x.n; ++k) {
              if (S::is_zero(a(k, j))) {
                continue;
              }
              if (sys.is_const(x(i, k), false)) {
                continue;
              }
              if (sys.is_const(x(i, k), true)) {
                has_one = true;
              }
              live.push_back(x(i, k));
            }
            std::string where = "XA = A at (" + std::to_string(i + 1) + ","
                                + std::to_string(j + 1) + ")";
            bool rhs_one = !S::is_zero(a(i, j));
            if (!rhs_one) {
              for (auto const& t : live) {
                sys.equate(t, Term::zero(), where);
                changed = true;
              }
            } else if (has_one) {
              continue;
            } else if (live.size() == 1) {
              sys.equate(live[0], Term::unit(), where);
              changed = true;
            } else if (live.empty()) {
              sys.equate(Term::zero(), Term::unit(), where);
            } else {
              std::string s;
              for (auto const& t : live) {
                s += (s.empty() ? "" : " + ") + sys.name(t);
              }
              open.push_back(s + " = 1");
            }
          }
        }
      }
      return open;
    }
  }  // namespace symbolic

  struct NotFountainCertificate {
    std::size_t n = 0;
    bool        verdict = false;  // true: A is tilde-related to no idempotent
    json        details;
  };

  // Boolean: exhaustive scan over the idempotents of M_n(B), n <= 5.
  inline NotFountainCertificate not_fountain_boolean(std::size_t n) {
    if (n < 4 || n > 5) {
      throw TooLarge("exhaustive scan needs 4 <= n <= 5");
    }
    using S             = BooleanSemifield;
    bmat::code_t a      = bmat::from_matrix(not_fountain_matrix<S>(n));
    bmat::code_t f1     = bmat::from_matrix(not_fountain_f1<S>(n));
    bmat::code_t f2     = bmat::from_matrix(not_fountain_f2<S>(n));
    NotFountainCertificate c;
    c.n = n;
    bool premises = bmat::mul(f1, a, n) == a && bmat::mul(f2, a, n) == a
                    && bmat::mul(f1, f1, n) == f1 && bmat::mul(f2, f2, n) == f2;
    std::uint64_t idems = 0, fixing = 0, upper_fixing = 0, survivors = 0;
    std::uint64_t by_f1 = 0, by_f2 = 0;
    bmat::code_t  upper_mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        upper_mask |= bmat::bit(n, i, j);
      }
    }
    std::uint64_t total = std::uint64_t(1) << (n * n);
    for (std::uint64_t x = 0; x < total; ++x) {
      auto e = static_cast<bmat::code_t>(x);
      if (bmat::mul(e, a, n) != a) {
        continue;
      }
      if (bmat::mul(e, e, n) != e) {
        continue;
      }
      ++fixing;
      if ((e & ~upper_mask) == 0) {
        ++upper_fixing;
      }
      bool s1 = bmat::mul(f1, e, n) != e;
      bool s2 = bmat::mul(f2, e, n) != e;
      by_f1 += s1;
      by_f2 += s2 && !s1;
      if (!s1 && !s2) {
        ++survivors;
      }
    }
    // Idempotents that do not fix A are separated from A by themselves.
    for (std::uint64_t x = 0; x < total; ++x) {
      auto e = static_cast<bmat::code_t>(x);
      idems += bmat::mul(e, e, n) == e;
    }
    c.verdict = premises && survivors == 0;
    c.details = json{{"kind", "bool"},
                     {"A", to_json(bmat::to_matrix(a, n))},
                     {"F1", to_json(bmat::to_matrix(f1, n))},
                     {"F2", to_json(bmat::to_matrix(f2, n))},
                     {"premises_F1A=F2A=A_and_idempotent", premises},
                     {"idempotents_scanned", idems},
                     {"idempotents_fixing_A", fixing},
                     {"upper_idempotents_fixing_A", upper_fixing},
                     {"separated_by_F1", by_f1},
                     {"separated_by_F2_only", by_f2},
                     {"unseparated", survivors}};
    return c;
  }

  // Any idempotent semiring: solve XA = A symbolically, then add F1 E = E
  // and F2 E = E and derive zero = one.
  template <typename S>
  NotFountainCertificate not_fountain_symbolic(std::size_t n) {
    using namespace symbolic;
    auto a  = not_fountain_matrix<S>(n);
    auto f1 = not_fountain_f1<S>(n);
    auto f2 = not_fountain_f2<S>(n);
    NotFountainCertificate c;
    c.n = n;
    bool premises = mat_mul(f1, a) == a && mat_mul(f2, a) == a
                    && is_idempotent(f1) && is_idempotent(f2);

    std::vector<std::string> names;
    SymMatrix                x{n, {}};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        x.t.push_back(Term::variable(static_cast<int>(names.size())));
        names.push_back("X" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    }
    System sys(names);
    auto   open = impose_fixes(sys, x, a);
    // Entries of rows beyond the corner are unconstrained by A in general;
    // in the corner the solution has the shape with free a, b, c, d, e.
    std::vector<std::string> form;
    for (std::size_t i = 0; i < std::min<std::size_t>(n, 4); ++i) {
      std::string row;
      for (std::size_t j = 0; j < std::min<std::size_t>(n, 4); ++j) {
        Term t = x(i, j);
        row += (j ? " " : "")
               + (sys.is_const(t, false)  ? std::string("0")
                  : sys.is_const(t, true) ? std::string("1")
                                          : names[t.var]);
      }
      form.push_back(row);
    }
    auto open1 = impose_left_fix(sys, f1, x, "F1 E = E");
    auto open2 = impose_left_fix(sys, f2, x, "F2 E = E");
    bool contra = sys.contradiction();
    c.verdict   = premises && contra;
    c.details   = json{{"kind", S::name},
                     {"A", to_json(a)},
                     {"F1", to_json(f1)},
                     {"F2", to_json(f2)},
                     {"premises_F1A=F2A=A_and_idempotent", premises},
                     {"fixer_form", form},
                     {"fixer_conditions", open},
                     {"derivation", sys.log()},
                     {"unresolved_F1", open1},
                     {"unresolved_F2", open2},
                     {"contradiction_zero_equals_one", contra}};
    return c;
  }

  struct NotAbundantCertificate {
    std::size_t n       = 0;
    bool        verdict = false;
    json        details;
  };

  // Boolean, 3 <= n <= 4: the witness has no idempotent in its R*-class in
  // UT_n(B), read off the partition.
  inline NotAbundantCertificate not_abundant_boolean(std::size_t n) {
    if (n < 3 || n > 4) {
      throw TooLarge("partition inspection needs 3 <= n <= 4");
    }
    FiniteMonoidTable t({Family::UpperBool, n});
    auto              p = compute_relation(t, Relation::Rstar);
    auto a   = bmat::from_matrix(not_abundant_matrix<BooleanSemifield>(n));
    auto ai  = t.index(a);
    std::size_t cls_size = 0, idems = 0;
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (p.same(x, ai)) {
        ++cls_size;
        idems += t.is_idempotent(x);
      }
    }
    NotAbundantCertificate c;
    c.n       = n;
    c.verdict = idems == 0;
    c.details = json{{"kind", "bool"},
                     {"A", to_json(bmat::to_matrix(a, n))},
                     {"family", "UT"},
                     {"rstar_class_size", cls_size},
                     {"idempotents_in_class", idems}};
    return c;
  }

  // Any semifield, n = 3: the pairs (P, Q) lie in K(A), (I, V) does not,
  // and every idempotent E of UT_3 with unit diagonal and (P, Q) in K(E)
  // for both pairs also has (I, V) in K(E).  The last claim is checked
  // over a grid of values for the entries E_12, E_23, E_13.
  template <typename S>
  NotAbundantCertificate not_abundant_replay(std::vector<typename S::value_type> const& grid) {
    std::size_t n  = 3;
    auto        a  = not_abundant_matrix<S>(n);
    auto        p1 = from_bits<S>(3, {{1, 1, 0}, {0, 0, 0}, {0, 0, 0}});
    auto        q1 = from_bits<S>(3, {{1, 0, 1}, {0, 0, 0}, {0, 0, 0}});
    auto        p2 = from_bits<S>(3, {{0, 0, 1}, {0, 1, 1}, {0, 0, 0}});
    auto        q2 = from_bits<S>(3, {{0, 0, 1}, {0, 1, 0}, {0, 0, 0}});
    auto        v  = from_bits<S>(3, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
    auto        id = Matrix<S>::identity(3);
    bool in_k1   = mat_mul(p1, a) == mat_mul(q1, a);
    bool in_k2   = mat_mul(p2, a) == mat_mul(q2, a);
    bool v_out   = mat_mul(v, a) != mat_mul(id, a);
    std::size_t candidates = 0, constrained = 0, failures = 0;
    for (auto const& e12 : grid) {
      for (auto const& e23 : grid) {
        for (auto const& e13 : grid) {
          Matrix<S> e = Matrix<S>::identity(3);
          e.set(0, 1, e12);
          e.set(1, 2, e23);
          e.set(0, 2, e13);
          if (!is_idempotent(e)) {
            continue;
          }
          ++candidates;
          if (mat_mul(p1, e) != mat_mul(q1, e)
              || mat_mul(p2, e) != mat_mul(q2, e)) {
            continue;
          }
          ++constrained;
          if (mat_mul(v, e) != e) {
            ++failures;
          }
        }
      }
    }
    NotAbundantCertificate c;
    c.n       = n;
    c.verdict = in_k1 && in_k2 && v_out && failures == 0 && constrained > 0;
    c.details = json{{"kind", S::name},
                     {"A", to_json(a)},
                     {"(P1,Q1)_in_K(A)", in_k1},
                     {"(P2,Q2)_in_K(A)", in_k2},
                     {"(I,V)_not_in_K(A)", v_out},
                     {"idempotents_on_grid", candidates},
                     {"idempotents_satisfying_both_pairs", constrained},
                     {"of_which_VE!=E", failures}};
    return c;
  }

}  // namespace tropmat

#endif  // TROPMAT_FINITE_GREEN_HPP_
