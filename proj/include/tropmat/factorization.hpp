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

// Triangular normal forms and the factorisation of unitriangular matrices
// into idempotents.

#ifndef TROPMAT_FACTORIZATION_HPP_
#define TROPMAT_FACTORIZATION_HPP_

#include <array>    // for array
#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "matrix.hpp"
#include "plusstar.hpp"

namespace tropmat {

  template <typename S>
  struct TriangularNormalForm {
    Matrix<S> d;      // diagonal part D_A
    Matrix<S> rnorm;  // A = rnorm * D_A
    Matrix<S> lnorm;  // A = D_A * lnorm
  };

  template <typename S>
  TriangularNormalForm<S> normal_form(Matrix<S> const& a) {
    a.require_shape(Shape::FullDiagonal, "normal_form");
    std::size_t n = a.dim();
    Matrix<S>   r(n), l(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        r.set(i, j, div<S>(a(i, j), a(j, j)));
        l.set(i, j, S::mul(S::inv(a(i, i)), a(i, j)));
      }
    }
    return {diagonal_part(a), r, l};
  }

  // The entrywise meet of X(+) and X(*).
  template <typename S>
  Matrix<S> meet_idempotent(Matrix<S> const& x) {
    x.require_shape(Shape::Unitriangular, "meet_idempotent");
    return entrywise_meet(plus_of(x), star_of(x));
  }

  template <typename S>
  struct FactorizationResult {
    // Factors in product order X(n), X(n-1), ..., X(2).
    std::vector<Matrix<S>> factors;
    Matrix<S>              meet_idempotent;
  };

  // X(h)_{i,j} = X_{i,j} if i < h <= j, and the meet idempotent entry
  // otherwise (1-based i, j, h).
  template <typename S>
  Matrix<S> factor_at(Matrix<S> const& x, Matrix<S> const& m, std::size_t h) {
    std::size_t n = x.dim();
    Matrix<S>   f(n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        f.set(i - 1, j - 1, (i < h && h <= j) ? x(i - 1, j - 1)
                                              : m(i - 1, j - 1));
      }
    }
    return f;
  }

  template <typename S>
  FactorizationResult<S> idempotent_factorize(Matrix<S> const& x) {
    x.require_shape(Shape::Unitriangular, "idempotent_factorize");
    FactorizationResult<S> res;
    res.meet_idempotent = meet_idempotent(x);
    for (std::size_t h = x.dim(); h >= 2; --h) {
      res.factors.push_back(factor_at(x, res.meet_idempotent, h));
    }
    return res;
  }

  template <typename S>
  Matrix<S> product_of(std::vector<Matrix<S>> const& fs, std::size_t n) {
    Matrix<S> p = Matrix<S>::identity(n);
    for (auto const& f : fs) {
      p = mat_mul(p, f);
    }
    return p;
  }

  // Column vectors of the factorisation argument (1-based j, h):
  //   x(j,h) = X_{1..h-1, j} stacked on M_{h..n, j}
  //   y(j,h) = M_{1..h-1, j} stacked on zeros
  template <typename S>
  std::vector<typename S::value_type> column_x(Matrix<S> const& x,
                                               Matrix<S> const& m,
                                               std::size_t      j,
                                               std::size_t      h) {
    std::vector<typename S::value_type> v;
    for (std::size_t i = 1; i <= x.dim(); ++i) {
      v.push_back(i < h ? x(i - 1, j - 1) : m(i - 1, j - 1));
    }
    return v;
  }

  template <typename S>
  std::vector<typename S::value_type>
  column_y(Matrix<S> const& m, std::size_t j, std::size_t h) {
    std::vector<typename S::value_type> v;
    for (std::size_t i = 1; i <= m.dim(); ++i) {
      v.push_back(i < h ? m(i - 1, j - 1) : S::zero());
    }
    return v;
  }

  // Checks X(h) y(j,h) = y(j,h) for j <= h-1, X(h) x(j,h) = x(j,h) for
  // j >= h, and X(h) x(j,h-1) = x(j,h), for all 2 <= h <= n.
  template <typename S>
  bool column_recurrences_hold(Matrix<S> const& x) {
    std::size_t n = x.dim();
    Matrix<S>   m = meet_idempotent(x);
    for (std::size_t h = 2; h <= n; ++h) {
      Matrix<S> xh = factor_at(x, m, h);
      for (std::size_t j = 1; j <= n; ++j) {
        if (j <= h - 1) {
          auto y = column_y(m, j, h);
          if (mat_vec(xh, y) != y) {
            return false;
          }
        } else {
          auto v = column_x(x, m, j, h);
          if (mat_vec(xh, v) != v) {
            return false;
          }
        }
        if (mat_vec(xh, column_x(x, m, j, h - 1)) != column_x(x, m, j, h)) {
          return false;
        }
      }
    }
    return true;
  }

  template <typename S>
  struct FullDecomposition {
    Matrix<S>              diagonal;
    std::vector<Matrix<S>> factors;  // product equals rnorm(A)
  };

  // A = X(n) ... X(2) D_A, with the factors taken from rnorm(A).
  template <typename S>
  FullDecomposition<S> full_decompose(Matrix<S> const& a) {
    auto nf = normal_form(a);
    return {nf.d, idempotent_factorize(nf.rnorm).factors};
  }

  // AB = (A' D_A B' D_A^{-1})(D_A D_B) where A' = rnorm(A), B' = rnorm(B).
  template <typename S>
  bool semidirect_law_check(Matrix<S> const& a, Matrix<S> const& b) {
    auto na  = normal_form(a);
    auto nb  = normal_form(b);
    auto lhs = mat_mul(a, b);
    auto u   = mat_mul(mat_mul(mat_mul(na.rnorm, na.d), nb.rnorm),
                     diagonal_inverse(na.d));
    auto rhs = mat_mul(u, mat_mul(na.d, nb.d));
    return lhs == rhs && u.has_shape(Shape::Unitriangular);
  }

  struct EfPowerReport {
    bool threshold_met = false;  // 2m >= n+1
    // Whether (EF)^m equals, in order: (EF)^m E, E (FE)^m, (FE)^m F,
    // F (EF)^m, (FE)^m.
    std::array<bool, 5> equal{};
    bool                all_equal = false;
  };

  template <typename S>
  EfPowerReport
  ef_power_identities(Matrix<S> const& e, Matrix<S> const& f, std::size_t m) {
    std::size_t   n = e.dim();
    EfPowerReport r;
    r.threshold_met = 2 * m >= n + 1;
    auto efm        = power(mat_mul(e, f), m);
    auto fem        = power(mat_mul(f, e), m);
    std::array<Matrix<S>, 5> others{mat_mul(efm, e),
                                    mat_mul(e, fem),
                                    mat_mul(fem, f),
                                    mat_mul(f, efm),
                                    fem};
    r.all_equal = true;
    for (std::size_t i = 0; i < 5; ++i) {
      r.equal[i]  = others[i] == efm;
      r.all_equal = r.all_equal && r.equal[i];
    }
    return r;
  }

  // Least k with X^k = X^{k+1}; also checks X <= X^2 <= ... along the way.
  // Returns 0 if the chain is not increasing or does not stabilise by n.
  template <typename S>
  std::size_t aperiodicity_check(Matrix<S> const& x) {
    x.require_shape(Shape::Unitriangular, "aperiodicity_check");
    Matrix<S> cur = x;
    for (std::size_t k = 1; k <= x.dim(); ++k) {
      Matrix<S> next = mat_mul(cur, x);
      if (!leq_entrywise(cur, next)) {
        return 0;
      }
      if (next == cur) {
        return k;
      }
      cur = next;
    }
    return 0;
  }

}  // namespace tropmat

#endif  // TROPMAT_FACTORIZATION_HPP_
