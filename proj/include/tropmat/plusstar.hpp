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

// The scalar product <x|y>, the idempotents A(+) and A(*), matrix
// residuals over the top-extension, regularity and the tilde relations on
// triangular matrices.

#ifndef TROPMAT_PLUSSTAR_HPP_
#define TROPMAT_PLUSSTAR_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace tropmat {

  class Unsupported : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // <x|y> is the meet of y_i x_i^{-1} over the support of x, provided the
  // support of x is nonempty and contained in the support of y; zero
  // otherwise.
  template <typename S>
  typename S::value_type
  scalar_product(std::vector<typename S::value_type> const& x,
                 std::vector<typename S::value_type> const& y) {
    if (x.size() != y.size()) {
      throw DimensionMismatch();
    }
    bool                   first = true;
    typename S::value_type acc   = S::zero();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (S::is_zero(x[i])) {
        continue;
      }
      if (S::is_zero(y[i])) {
        return S::zero();
      }
      auto r = div<S>(y[i], x[i]);
      acc    = first ? r : S::meet(acc, r);
      first  = false;
    }
    return first ? S::zero() : acc;
  }

  // (A(+))_{i,j} = <A_{j,*} | A_{i,*}>
  template <typename S>
  Matrix<S> plus_of(Matrix<S> const& a) {
    std::size_t n = a.dim();
    Matrix<S>   p(n);
    std::vector<std::vector<typename S::value_type>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back(a.row(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        p.set(i, j, scalar_product<S>(rows[j], rows[i]));
      }
    }
    return p;
  }

  // A(*) = D(D(A)(+)), defined for upper triangular A.
  template <typename S>
  Matrix<S> star_of(Matrix<S> const& a) {
    a.require_shape(Shape::UpperTriangular, "star_of");
    return delta(plus_of(delta(a)));
  }

  // The dual of plus_of under transposition, (A^T)(+)^T, defined for every
  // square matrix.
  template <typename S>
  Matrix<S> plus_of_transpose_dual(Matrix<S> const& a) {
    return transpose(plus_of(transpose(a)));
  }

  // Closed forms for upper triangular matrices with no zero entry on or
  // above the diagonal:
  //   A(+)_{i,j} = meet of A_{i,k} A_{j,k}^{-1} over j <= k <= n
  //   A(*)_{i,j} = meet of A_{k,j} A_{k,i}^{-1} over 1 <= k <= i
  // for i <= j, and zero below the diagonal.
  template <typename S>
  Matrix<S> plus_of_positive_upper(Matrix<S> const& a) {
    a.require_shape(Shape::PositiveUpper, "plus_of_positive_upper");
    std::size_t n = a.dim();
    Matrix<S>   p(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        auto acc = div<S>(a(i, j), a(j, j));
        for (std::size_t k = j + 1; k < n; ++k) {
          acc = S::meet(acc, div<S>(a(i, k), a(j, k)));
        }
        p.set(i, j, acc);
      }
    }
    return p;
  }

  template <typename S>
  Matrix<S> star_of_positive_upper(Matrix<S> const& a) {
    a.require_shape(Shape::PositiveUpper, "star_of_positive_upper");
    std::size_t n = a.dim();
    Matrix<S>   p(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        auto acc = div<S>(a(0, j), a(0, i));
        for (std::size_t k = 1; k <= i; ++k) {
          acc = S::meet(acc, div<S>(a(k, j), a(k, i)));
        }
        p.set(i, j, acc);
      }
    }
    return p;
  }

  template <typename S>
  bool is_idempotent(Matrix<S> const& a) {
    return mat_mul(a, a) == a;
  }

  // For E upper triangular with unit diagonal and no zero entries above the
  // diagonal: E is idempotent iff E_{i,k} E_{k,j} <= E_{i,j} for i<k<j.
  template <typename S>
  bool is_idempotent_unitriangular_criterion(Matrix<S> const& e) {
    e.require_shape(Shape::Unitriangular, "idempotent criterion");
    std::size_t n = e.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = i + 1; k < n; ++k) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (S::less(e(i, j), S::mul(e(i, k), e(k, j)))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Residuation
  ////////////////////////////////////////////////////////////////////////

  template <typename S>
  Matrix<Extended<S>> lift(Matrix<S> const& a) {
    std::size_t         n = a.dim();
    Matrix<Extended<S>> r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        r.set(i, j, ExtendedValue<S>(a(i, j)));
      }
    }
    return r;
  }

  // Replace every top entry by `fill`, leaving a matrix over S.
  template <typename S>
  Matrix<S> lower_top(Matrix<Extended<S>> const& a,
                      typename S::value_type const& fill) {
    std::size_t n = a.dim();
    Matrix<S>   r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        r.set(i, j, a(i, j).is_top() ? fill : a(i, j).base());
      }
    }
    return r;
  }

  // (A\X)_{i,j} = meet over k of A_{k,i} \ X_{k,j}
  template <typename S>
  Matrix<Extended<S>> residual_left(Matrix<S> const& a, Matrix<S> const& x) {
    using E       = Extended<S>;
    std::size_t n = a.dim();
    if (x.dim() != n) {
      throw DimensionMismatch();
    }
    Matrix<E> r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto acc = E::top();
        for (std::size_t k = 0; k < n; ++k) {
          acc = E::meet(acc, E::residual(a(k, i), x(k, j)));
        }
        r.set(i, j, acc);
      }
    }
    return r;
  }

  // (X/A)_{i,j} = meet over l of A_{j,l} \ X_{i,l}
  template <typename S>
  Matrix<Extended<S>> residual_right(Matrix<S> const& x, Matrix<S> const& a) {
    using E       = Extended<S>;
    std::size_t n = a.dim();
    if (x.dim() != n) {
      throw DimensionMismatch();
    }
    Matrix<E> r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto acc = E::top();
        for (std::size_t l = 0; l < n; ++l) {
          acc = E::meet(acc, E::residual(a(j, l), x(i, l)));
        }
        r.set(i, j, acc);
      }
    }
    return r;
  }

  // (X\A/Y)_{i,j} = meet over k, l of Y_{j,l} \ (X_{k,i} \ A_{k,l})
  template <typename S>
  Matrix<Extended<S>> residual_two_sided(Matrix<S> const& x,
                                         Matrix<S> const& a,
                                         Matrix<S> const& y) {
    using E       = Extended<S>;
    std::size_t n = a.dim();
    if (x.dim() != n || y.dim() != n) {
      throw DimensionMismatch();
    }
    Matrix<E> r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto acc = E::top();
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            acc = E::meet(acc,
                          E::residual(y(j, l), E::residual(x(k, i), a(k, l))));
          }
        }
        r.set(i, j, acc);
      }
    }
    return r;
  }

  // A \ A / A, the greatest X over the top-extension with AXA <= A.
  template <typename S>
  Matrix<Extended<S>> sandwich(Matrix<S> const& a) {
    return residual_two_sided(a, a, a);
  }

  template <typename S>
  struct RegularityResult {
    bool                     regular = false;
    Matrix<Extended<S>>      sandwich;
    std::optional<Matrix<S>> witness;
  };

  // A is regular iff A (A\A/A) A = A.  The witness is the sandwich matrix
  // with every top entry replaced by one, and is checked to satisfy AXA = A
  // before it is returned.
  template <typename S>
  RegularityResult<S> is_regular(Matrix<S> const& a) {
    RegularityResult<S> res;
    res.sandwich = sandwich(a);
    auto la      = lift(a);
    if (mat_mul(mat_mul(la, res.sandwich), la) != la) {
      return res;
    }
    Matrix<S> x = lower_top(res.sandwich, S::one());
    if (mat_mul(mat_mul(a, x), a) != a) {
      throw std::logic_error("regularity witness failed re-verification");
    }
    res.regular = true;
    res.witness = x;
    return res;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tilde relations on triangular matrices
  ////////////////////////////////////////////////////////////////////////

  enum class TildeScope {
    // Both operands upper triangular with nonzero diagonal.
    FullDiagonal,
    // Both operands with every row nonzero, relation taken with respect to
    // the idempotents with unit diagonal.
    UnitIdempotents
  };

  template <typename S>
  bool rtilde_related(Matrix<S> const& a,
                      Matrix<S> const& b,
                      TildeScope       scope = TildeScope::FullDiagonal) {
    if (scope == TildeScope::FullDiagonal) {
      if (!a.has_shape(Shape::FullDiagonal) || !b.has_shape(Shape::FullDiagonal)) {
        throw Unsupported("rtilde_related: operands must be upper triangular "
                          "with nonzero diagonal");
      }
    } else if (!full_domain(a) || !full_domain(b)) {
      throw Unsupported("rtilde_related: operands must have no zero row");
    }
    return plus_of(a) == plus_of(b);
  }

  template <typename S>
  bool ltilde_related(Matrix<S> const& a,
                      Matrix<S> const& b,
                      TildeScope       scope = TildeScope::FullDiagonal) {
    if (scope == TildeScope::FullDiagonal) {
      if (!a.has_shape(Shape::FullDiagonal) || !b.has_shape(Shape::FullDiagonal)) {
        throw Unsupported("ltilde_related: operands must be upper triangular "
                          "with nonzero diagonal");
      }
      return star_of(a) == star_of(b);
    }
    if (!full_domain(transpose(a)) || !full_domain(transpose(b))) {
      throw Unsupported("ltilde_related: operands must have no zero column");
    }
    return plus_of_transpose_dual(a) == plus_of_transpose_dual(b);
  }

  ////////////////////////////////////////////////////////////////////////
  // Alpha / beta decomposition
  ////////////////////////////////////////////////////////////////////////

  // For A upper triangular with no zero entries on or above the diagonal,
  //   A_{i,j} = E_{i,j} A_{j,j} alpha_{i,j}   with E = A(+)
  //   A_{i,j} = A_{i,i} F_{i,j} beta_{i,j}    with F = A(*)
  // alpha and beta are returned as upper triangular matrices.
  template <typename S>
  struct AlphaBeta {
    std::optional<Matrix<S>> alpha;
    std::optional<Matrix<S>> beta;
  };

  template <typename S>
  Matrix<S> alpha_matrix(Matrix<S> const& a, Matrix<S> const& e) {
    std::size_t n = a.dim();
    Matrix<S>   al(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        al.set(i, j, div<S>(a(i, j), S::mul(e(i, j), a(j, j))));
      }
    }
    return al;
  }

  template <typename S>
  Matrix<S> beta_matrix(Matrix<S> const& a, Matrix<S> const& e) {
    std::size_t n = a.dim();
    Matrix<S>   be(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        be.set(i, j, div<S>(a(i, j), S::mul(a(i, i), e(i, j))));
      }
    }
    return be;
  }

  // Checks alpha_{i,j} >= 1, alpha_{i,i} = alpha_{i,n} = 1.
  template <typename S>
  bool alpha_valid(Matrix<S> const& al) {
    std::size_t n = al.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (S::less(al(i, j), S::one())) {
          return false;
        }
      }
      if (!(al(i, i) == S::one()) || !(al(i, n - 1) == S::one())) {
        return false;
      }
    }
    return true;
  }

  // Checks beta_{i,j} >= 1, beta_{i,i} = beta_{1,i} = 1.
  template <typename S>
  bool beta_valid(Matrix<S> const& be) {
    std::size_t n = be.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (S::less(be(i, j), S::one())) {
          return false;
        }
      }
      if (!(be(i, i) == S::one()) || !(be(0, i) == S::one())) {
        return false;
      }
    }
    return true;
  }

  // Decompose A relative to the idempotent E.  The alpha part is present
  // when A(+) = E and the beta part when A(*) = E; if neither holds an
  // exception is thrown.
  template <typename S>
  AlphaBeta<S> alpha_beta_decompose(Matrix<S> const& a, Matrix<S> const& e) {
    a.require_shape(Shape::PositiveUpper, "alpha_beta_decompose");
    AlphaBeta<S> r;
    if (plus_of(a) == e) {
      r.alpha = alpha_matrix(a, e);
      if (!alpha_valid(*r.alpha)) {
        throw std::logic_error("alpha decomposition out of range");
      }
    }
    if (star_of(a) == e) {
      r.beta = beta_matrix(a, e);
      if (!beta_valid(*r.beta)) {
        throw std::logic_error("beta decomposition out of range");
      }
    }
    if (!r.alpha && !r.beta) {
      throw std::invalid_argument(
          "alpha_beta_decompose: E is neither A(+) nor A(*)");
    }
    return r;
  }

}  // namespace tropmat

#endif  // TROPMAT_PLUSSTAR_HPP_
