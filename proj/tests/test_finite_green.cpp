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

#include <algorithm>  // for next_permutation
#include <cstdint>    // for uint32_t
#include <numeric>    // for iota
#include <string>     // for string
#include <vector>     // for vector

#include "catch_amalgamated.hpp"

#include "tropmat/finite_green.hpp"
#include "tropmat/plusstar.hpp"

using namespace tropmat;

namespace {
  using B  = BooleanSemifield;
  using MP = MaxPlusSemifield;

  std::vector<BoolMatrix> members(FiniteMonoidTable const& t) {
    std::vector<BoolMatrix> r;
    for (auto c : t.elements()) {
      r.push_back(bmat::to_matrix(c, t.n()));
    }
    return r;
  }

  bool has_permutation_naive(BoolMatrix const& a) {
    std::vector<std::size_t> p(a.dim());
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < a.dim() && ok; ++i) {
        ok = a(i, p[i]);
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  std::size_t count_all(std::size_t n, bool (*pred)(BoolMatrix const&)) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < (std::size_t(1) << (n * n)); ++k) {
      BoolMatrix m(n);
      for (std::size_t e = 0; e < n * n; ++e) {
        m.set(e / n, e % n, (k >> e) & 1);
      }
      c += pred(m);
    }
    return c;
  }

  // a R* b: xa = ya iff xb = yb for all x, y in the monoid.
  bool rstar_naive(std::vector<BoolMatrix> const& el,
                   BoolMatrix const&              a,
                   BoolMatrix const&              b) {
    std::vector<BoolMatrix> xa, xb;
    for (auto const& x : el) {
      xa.push_back(mat_mul(x, a));
      xb.push_back(mat_mul(x, b));
    }
    for (std::size_t i = 0; i < el.size(); ++i) {
      for (std::size_t j = i + 1; j < el.size(); ++j) {
        if ((xa[i] == xa[j]) != (xb[i] == xb[j])) {
          return false;
        }
      }
    }
    return true;
  }

  std::string label(Family f, std::size_t n) {
    return classification_label(classify(FamilySpec{f, n}));
  }
}  // namespace

TEST_CASE("family sizes", "[finite_green]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(FiniteMonoidTable({Family::FullBool, n}).size() == std::size_t(1) << (n * n));
    CHECK(FiniteMonoidTable({Family::Reflexive, n}).size()
          == std::size_t(1) << (n * n - n));
    CHECK(FiniteMonoidTable({Family::Hall, n}).size()
          == count_all(n, has_permutation_naive));
    CHECK(FiniteMonoidTable({Family::WellBehaved, n}).size()
          == count_all(n, [](BoolMatrix const& m) {
               auto [d, i] = dom_im(m);
               return d.size() == m.dim() && i.size() == m.dim();
             }));
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(FiniteMonoidTable({Family::UpperBool, n}).size()
          == std::size_t(1) << (n * (n + 1) / 2));
    CHECK(FiniteMonoidTable({Family::UniBool, n}).size()
          == std::size_t(1) << (n * (n - 1) / 2));
  }
  CHECK(FiniteMonoidTable({Family::UniBool, 3}).size() == 8);
  CHECK(FiniteMonoidTable({Family::UpperBool, 3}).size() == 64);
  CHECK(FiniteMonoidTable({Family::FullBool, 2}).size() == 16);
  CHECK_THROWS_AS(FiniteMonoidTable({Family::FullBool, 5}), TooLarge);
  CHECK_THROWS_AS(FiniteMonoidTable({Family::FullBool, 6}), TooLarge);

  FiniteMonoidTable t({Family::UpperBool, 3});
  CHECK(std::is_sorted(t.elements().begin(), t.elements().end()));
  CHECK(t.contains(bmat::identity(3)));
}

TEST_CASE("idempotent counts", "[finite_green]") {
  for (auto f : {Family::FullBool, Family::UpperBool, Family::UniBool, Family::Hall}) {
    FiniteMonoidTable t({f, 3});
    std::size_t       c = 0;
    for (auto const& m : members(t)) {
      c += mat_mul(m, m) == m;
    }
    CHECK(t.idempotents().size() == c);
  }
  CHECK(FiniteMonoidTable({Family::UpperBool, 3}).idempotents().size() == 41);
  for (std::size_t n = 1; n <= 3; ++n) {
    FiniteMonoidTable t({Family::Hall, n});
    for (auto e : t.idempotents()) {
      CHECK(t.is_unit_idempotent(e));
    }
  }
}

TEST_CASE("R is column space equality and L row space equality", "[finite_green]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    FiniteMonoidTable t({Family::FullBool, n});
    auto              r  = compute_relation(t, Relation::R);
    auto              l  = compute_relation(t, Relation::L);
    auto              el = members(t);
    for (std::size_t a = 0; a < el.size(); ++a) {
      for (std::size_t b = 0; b < el.size(); b += 1 + a % 3) {
        CHECK(r.same(a, b) == (bool_col_space(el[a]) == bool_col_space(el[b])));
        CHECK(l.same(a, b) == (bool_row_space(el[a]) == bool_row_space(el[b])));
      }
    }
  }
}

TEST_CASE("H and D from R and L", "[finite_green]") {
  for (auto f : {Family::FullBool, Family::UpperBool}) {
    FiniteMonoidTable t({f, f == Family::FullBool ? std::size_t(2) : std::size_t(3)});
    auto              r = compute_relation(t, Relation::R);
    auto              l = compute_relation(t, Relation::L);
    auto              h = compute_relation(t, Relation::H);
    auto              d = compute_relation(t, Relation::D);
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        CHECK(h.same(a, b) == (r.same(a, b) && l.same(a, b)));
        bool composed = false;
        for (std::size_t c = 0; c < t.size() && !composed; ++c) {
          composed = r.same(a, c) && l.same(c, b);
        }
        CHECK(d.same(a, b) == composed);
      }
    }
  }
}

TEST_CASE("starred relations against the definition", "[finite_green]") {
  for (auto spec : {FamilySpec{Family::FullBool, 2},
                    FamilySpec{Family::UpperBool, 3},
                    FamilySpec{Family::UniBool, 4}}) {
    FiniteMonoidTable t(spec);
    auto              rs = compute_relation(t, Relation::Rstar);
    auto              ls = compute_relation(t, Relation::Lstar);
    auto              el = members(t);
    std::vector<BoolMatrix> tr;
    for (auto const& m : el) {
      tr.push_back(transpose(m));
    }
    for (std::size_t a = 0; a < el.size(); ++a) {
      for (std::size_t b = a; b < el.size(); ++b) {
        CHECK(rs.same(a, b) == rstar_naive(el, el[a], el[b]));
        CHECK(ls.same(a, b) == rstar_naive(tr, tr[a], tr[b]));
      }
    }
  }
  // Upper triangular R* is the restriction of R* on the full monoid.
  FiniteMonoidTable full({Family::FullBool, 3});
  FiniteMonoidTable up({Family::UpperBool, 3});
  auto              rf = compute_relation(full, Relation::Rstar);
  auto              ru = compute_relation(up, Relation::Rstar);
  for (std::size_t a = 0; a < up.size(); ++a) {
    for (std::size_t b = 0; b < up.size(); ++b) {
      CHECK(ru.same(a, b)
            == rf.same(full.index(up.element(a)), full.index(up.element(b))));
    }
  }
  // The Boolean semiring is exact, so R = R* on M_n(B).
  CHECK(compute_relation(full, Relation::R).class_of == rf.class_of);
}

TEST_CASE("tilde relations against fixing idempotents", "[finite_green]") {
  for (auto spec : {FamilySpec{Family::FullBool, 2},
                    FamilySpec{Family::UpperBool, 3},
                    FamilySpec{Family::Reflexive, 3}}) {
    FiniteMonoidTable t(spec);
    auto              rt = compute_relation(t, Relation::Rtilde);
    auto              ru = compute_relation(t, Relation::RtildeU);
    auto              el = members(t);
    for (std::size_t a = 0; a < el.size(); ++a) {
      for (std::size_t b = 0; b < el.size(); ++b) {
        bool same = true, same_u = true;
        for (auto const& e : el) {
          if (mat_mul(e, e) != e) {
            continue;
          }
          bool differs = (mat_mul(e, el[a]) == el[a]) != (mat_mul(e, el[b]) == el[b]);
          same         = same && !differs;
          bool unit = true;
          for (std::size_t i = 0; i < e.dim(); ++i) {
            unit = unit && e(i, i);
          }
          if (unit) {
            same_u = same_u && !differs;
          }
        }
        CHECK(rt.same(a, b) == same);
        CHECK(ru.same(a, b) == same_u);
      }
    }
  }
}

TEST_CASE("refinement chain and idempotent classes", "[finite_green]") {
  for (auto spec : {FamilySpec{Family::FullBool, 3},
                    FamilySpec{Family::UpperBool, 3},
                    FamilySpec{Family::UniBool, 4},
                    FamilySpec{Family::Hall, 3},
                    FamilySpec{Family::WellBehaved, 3},
                    FamilySpec{Family::Reflexive, 3}}) {
    FiniteMonoidTable t(spec);
    auto              r  = compute_relation(t, Relation::R);
    auto              rs = compute_relation(t, Relation::Rstar);
    auto              rt = compute_relation(t, Relation::Rtilde);
    auto              ru = compute_relation(t, Relation::RtildeU);
    CHECK(r.refines(rs));
    CHECK(rs.refines(rt));
    CHECK(rt.refines(ru));
    auto l  = compute_relation(t, Relation::L);
    auto ls = compute_relation(t, Relation::Lstar);
    auto lt = compute_relation(t, Relation::Ltilde);
    CHECK(l.refines(ls));
    CHECK(ls.refines(lt));
    for (auto e : t.idempotents()) {
      for (auto f : t.idempotents()) {
        CHECK(rt.same(e, f) == r.same(e, f));
        CHECK(lt.same(e, f) == l.same(e, f));
      }
    }
  }
}

TEST_CASE("unit idempotent per class on the full-domain families", "[finite_green]") {
  for (auto f : {Family::WellBehaved, Family::Hall, Family::Reflexive}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      FiniteMonoidTable t({f, n});
      auto              ru = compute_relation(t, Relation::RtildeU);
      std::vector<int>  units(ru.num_classes(), 0);
      for (auto e : t.unit_idempotents()) {
        ++units[ru.class_of[e]];
      }
      for (int u : units) {
        CHECK(u == 1);
      }
      for (std::size_t a = 0; a < t.size(); ++a) {
        auto p = bmat::from_matrix(plus_of(bmat::to_matrix(t.element(a), n)));
        REQUIRE(t.contains(p));
        CHECK(t.is_unit_idempotent(t.index(p)));
        CHECK(ru.same(a, t.index(p)));
      }
      CHECK(classify(FamilySpec{f, n}).u_fountain);
    }
  }
}

TEST_CASE("rows in the basis give a tilde-related plus", "[finite_green]") {
  FiniteMonoidTable t({Family::FullBool, 3});
  auto              rt      = compute_relation(t, Relation::Rtilde);
  std::size_t       checked = 0;
  for (std::size_t a = 0; a < t.size(); ++a) {
    auto m     = bmat::to_matrix(t.element(a), 3);
    auto basis = bool_unique_basis(3, bool_rows(m));
    bool basic = true;
    for (auto r : bool_rows(m)) {
      basic = basic
              && (r == 0 || std::find(basis.begin(), basis.end(), r) != basis.end());
    }
    if (basic) {
      ++checked;
      CHECK(rt.same(a, t.index(bmat::from_matrix(plus_of(m)))));
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("classification table", "[finite_green]") {
  CHECK(label(Family::FullBool, 1) == std::string("Regular"));
  CHECK(label(Family::FullBool, 2) == std::string("Regular"));
  CHECK(label(Family::FullBool, 3) == std::string("Fountain"));
  CHECK(label(Family::UpperBool, 1) == std::string("Regular"));
  CHECK(label(Family::UpperBool, 2) == std::string("Abundant"));
  CHECK(label(Family::UpperBool, 3) == std::string("Fountain"));
  CHECK(label(Family::UniBool, 1) == std::string("Regular"));
  CHECK(label(Family::UniBool, 2) == std::string("Regular"));
  CHECK(label(Family::UniBool, 3) == std::string("Fountain"));
  CHECK(label(Family::UniBool, 4) == std::string("Fountain"));

  auto ut3 = classify(FamilySpec{Family::UpperBool, 3});
  CHECK(ut3.idempotents == 41);
  CHECK(ut3.fountain);
  CHECK_FALSE(ut3.abundant);
  REQUIRE(ut3.non_abundant);
  auto js = to_json(ut3);
  CHECK(js["counts"]["elements"] == 64);
  CHECK(js["witnesses"].contains("non_abundant"));
  CHECK_FALSE(js["witnesses"].contains("non_fountain"));

  // The starred classes of the witness block contain no idempotent.
  FiniteMonoidTable up({Family::UpperBool, 3});
  auto              w  = up.index(bmat::from_matrix(not_abundant_matrix<B>(3)));
  auto              rs = compute_relation(up, Relation::Rstar);
  auto              ls = compute_relation(up, Relation::Lstar);
  bool              rfree = true, lfree = true;
  for (auto e : up.idempotents()) {
    rfree = rfree && !rs.same(e, w);
    lfree = lfree && !ls.same(e, w);
  }
  CHECK((rfree || lfree));
}

TEST_CASE("large families use the tilde relations only", "[finite_green]") {
  FiniteMonoidTable m4({Family::FullBool, 4});
  CHECK(m4.size() == 65536);
  CHECK_THROWS_AS(compute_relation(m4, Relation::R), TooLarge);
  auto rep = classify(m4);
  CHECK_FALSE(rep.fountain);
  CHECK_FALSE(rep.abundant);
  CHECK_FALSE(rep.regular);
  REQUIRE(rep.non_fountain);
}

TEST_CASE("non-Fountain witness", "[finite_green]") {
  auto c4 = not_fountain_boolean(4);
  CHECK(c4.verdict);
  CHECK(c4.details["unseparated"] == 0);
  CHECK(not_fountain_symbolic<MP>(4).verdict);
  CHECK(not_fountain_symbolic<MP>(5).verdict);
  CHECK(not_fountain_symbolic<B>(4).verdict);
  CHECK_THROWS_AS(not_fountain_boolean(3), TooLarge);
  auto a  = not_fountain_matrix<B>(4);
  auto f1 = not_fountain_f1<B>(4);
  auto f2 = not_fountain_f2<B>(4);
  CHECK(mat_mul(f1, a) == a);
  CHECK(mat_mul(f2, a) == a);
  CHECK(mat_mul(f1, f1) == f1);
  CHECK(mat_mul(f2, f2) == f2);
}

TEST_CASE("column stabilisers", "[finite_green]") {
  auto id = colstab_colfix(BoolMatrix::identity(3));
  CHECK(std::find(id.colstab.begin(), id.colstab.end(), bmat::identity(3))
        != id.colstab.end());
  CHECK(id.colfix.elements.size() == 8);
  auto z = colstab_colfix(BoolMatrix(3));
  CHECK(z.colfix.elements == std::vector<BoolVec>{0});
  for (std::uint32_t c = 0; c < 512; ++c) {
    auto m = bmat::to_matrix(c, 3);
    auto r = colstab_colfix(m);
    REQUIRE(r.realising_idempotent);
    CHECK(bool_col_space(m).subset_of(r.colfix));
  }
  CHECK_THROWS_AS(colstab_colfix(BoolMatrix(4)), TooLarge);
}

TEST_CASE("Boolean exactness", "[finite_green]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = bool_exactness_check(n);
    CHECK(r.f1);
    CHECK(r.f2);
    CHECK_FALSE(r.counterexample);
    CHECK(r.pairs == (std::size_t(1) << (2 * n * n)));
  }
}
