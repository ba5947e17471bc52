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

#ifndef TROPMAT_MATRIX_HPP_
#define TROPMAT_MATRIX_HPP_

#include <algorithm>         // for sort, unique
#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t
#include <initializer_list>  // for initializer_list
#include <set>               // for set
#include <stdexcept>         // for invalid_argument
#include <string>            // for string
#include <type_traits>       // for conditional_t
#include <utility>           // for pair
#include <vector>            // for vector

#include "semiring.hpp"

namespace tropmat {

  class DimensionMismatch : public std::invalid_argument {
   public:
    DimensionMismatch()
        : std::invalid_argument("matrix dimensions do not agree") {}
  };

  class ShapeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  ////////////////////////////////////////////////////////////////////////
  // Shape classes
  ////////////////////////////////////////////////////////////////////////

  enum class Shape {
    General,
    UpperTriangular,
    FullDiagonal,
    Unitriangular,
    PositiveUpper
  };

  inline char const* shape_name(Shape s) {
    switch (s) {
      case Shape::General:
        return "general";
      case Shape::UpperTriangular:
        return "upper";
      case Shape::FullDiagonal:
        return "full-diagonal";
      case Shape::Unitriangular:
        return "unitriangular";
      case Shape::PositiveUpper:
        return "positive-upper";
    }
    return "general";
  }

  inline Shape parse_shape(std::string const& s) {
    for (Shape x : {Shape::General,
                    Shape::UpperTriangular,
                    Shape::FullDiagonal,
                    Shape::Unitriangular,
                    Shape::PositiveUpper}) {
      if (s == shape_name(x)) {
        return x;
      }
    }
    throw std::invalid_argument("unknown shape '" + s + "'");
  }

  // The set of shape classes a matrix belongs to.  Membership is a
  // property of the entries, so it is always the strongest description
  // available, and products automatically land in the intersection of the
  // classes of their operands (every class is a monoid and the semifield
  // has no zero divisors).
  struct ShapeFlags {
    bool upper         = false;
    bool full_diagonal = false;
    bool unitriangular = false;
    bool positive      = false;

    bool has(Shape s) const {
      switch (s) {
        case Shape::General:
          return true;
        case Shape::UpperTriangular:
          return upper;
        case Shape::FullDiagonal:
          return full_diagonal;
        case Shape::Unitriangular:
          return unitriangular;
        case Shape::PositiveUpper:
          return positive;
      }
      return false;
    }

    // A single representative name, preferring the most specific class.
    Shape strongest() const {
      if (unitriangular) {
        return Shape::Unitriangular;
      }
      if (positive) {
        return Shape::PositiveUpper;
      }
      if (full_diagonal) {
        return Shape::FullDiagonal;
      }
      if (upper) {
        return Shape::UpperTriangular;
      }
      return Shape::General;
    }

    std::vector<std::string> names() const {
      std::vector<std::string> out;
      for (Shape x : {Shape::UpperTriangular,
                      Shape::FullDiagonal,
                      Shape::Unitriangular,
                      Shape::PositiveUpper}) {
        if (has(x)) {
          out.emplace_back(shape_name(x));
        }
      }
      if (out.empty()) {
        out.emplace_back(shape_name(Shape::General));
      }
      return out;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Matrix
  ////////////////////////////////////////////////////////////////////////

  // Dense square matrix over the semiring S.  Indices are 0-based.
  template <typename S>
  class Matrix {
   public:
    using semiring_type = S;
    using value_type    = typename S::value_type;
    using storage_type  = std::conditional_t<std::is_same_v<value_type, bool>,
                                            std::uint8_t,
                                            value_type>;
    using const_reference
        = std::conditional_t<std::is_same_v<value_type, bool>,
                             value_type,
                             value_type const&>;

    Matrix() : _n(0) {}

    explicit Matrix(std::size_t n) : _n(n), _data(n * n, S::zero()) {}

    Matrix(std::initializer_list<std::initializer_list<value_type>> rows)
        : _n(rows.size()) {
      _data.reserve(_n * _n);
      for (auto const& r : rows) {
        if (r.size() != _n) {
          throw DimensionMismatch();
        }
        _data.insert(_data.end(), r.begin(), r.end());
      }
    }

    explicit Matrix(std::vector<std::vector<value_type>> const& rows)
        : _n(rows.size()) {
      _data.reserve(_n * _n);
      for (auto const& r : rows) {
        if (r.size() != _n) {
          throw DimensionMismatch();
        }
        _data.insert(_data.end(), r.begin(), r.end());
      }
    }

    static Matrix zeros(std::size_t n) {
      return Matrix(n);
    }

    static Matrix identity(std::size_t n) {
      Matrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, S::one());
      }
      return m;
    }

    // Every entry equal to one.
    static Matrix all_ones(std::size_t n) {
      Matrix m(n);
      std::fill(m._data.begin(), m._data.end(), S::one());
      return m;
    }

    static Matrix diagonal(std::vector<value_type> const& d) {
      Matrix m(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) {
        m.set(i, i, d[i]);
      }
      return m;
    }

    std::size_t dim() const noexcept {
      return _n;
    }

    const_reference operator()(std::size_t i, std::size_t j) const {
      return _data[i * _n + j];
    }

    const_reference at(std::size_t i, std::size_t j) const {
      if (i >= _n || j >= _n) {
        throw std::out_of_range("matrix index out of range");
      }
      return _data[i * _n + j];
    }

    void set(std::size_t i, std::size_t j, value_type const& v) {
      _data[i * _n + j] = v;
    }

    std::vector<value_type> row(std::size_t i) const {
      return std::vector<value_type>(_data.begin() + i * _n,
                                     _data.begin() + (i + 1) * _n);
    }

    std::vector<value_type> col(std::size_t j) const {
      std::vector<value_type> c;
      c.reserve(_n);
      for (std::size_t i = 0; i < _n; ++i) {
        c.push_back((*this)(i, j));
      }
      return c;
    }

    std::vector<storage_type> const& data() const noexcept {
      return _data;
    }

    friend bool operator==(Matrix const& a, Matrix const& b) {
      return a._n == b._n && a._data == b._data;
    }

    friend bool operator!=(Matrix const& a, Matrix const& b) {
      return !(a == b);
    }

    ShapeFlags shape() const {
      ShapeFlags f;
      f.upper = true;
      for (std::size_t i = 0; i < _n && f.upper; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (!S::is_zero((*this)(i, j))) {
            f.upper = false;
            break;
          }
        }
      }
      if (!f.upper) {
        return f;
      }
      f.full_diagonal = true;
      f.unitriangular = true;
      for (std::size_t i = 0; i < _n; ++i) {
        if (S::is_zero((*this)(i, i))) {
          f.full_diagonal = false;
        }
        if (!((*this)(i, i) == S::one())) {
          f.unitriangular = false;
        }
      }
      f.positive = true;
      for (std::size_t i = 0; i < _n && f.positive; ++i) {
        for (std::size_t j = i; j < _n; ++j) {
          if (S::is_zero((*this)(i, j))) {
            f.positive = false;
            break;
          }
        }
      }
      return f;
    }

    bool has_shape(Shape s) const {
      return shape().has(s);
    }

    void require_shape(Shape s, char const* what) const {
      if (!has_shape(s)) {
        throw ShapeError(std::string(what) + ": matrix is not "
                         + shape_name(s));
      }
    }

   private:
    std::size_t               _n;
    std::vector<storage_type> _data;
  };

  using BoolMatrix    = Matrix<BooleanSemifield>;
  using MaxPlusMatrix = Matrix<MaxPlusSemifield>;

  ////////////////////////////////////////////////////////////////////////
  // Arithmetic
  ////////////////////////////////////////////////////////////////////////

  template <typename S>
  Matrix<S> mat_mul(Matrix<S> const& a, Matrix<S> const& b) {
    std::size_t n = a.dim();
    if (b.dim() != n) {
      throw DimensionMismatch();
    }
    Matrix<S> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        auto const& aik = a(i, k);
        if (S::is_zero(aik)) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          auto const& bkj = b(k, j);
          if (S::is_zero(bkj)) {
            continue;
          }
          auto p = S::mul(aik, bkj);
          if (S::less(c(i, j), p)) {
            c.set(i, j, p);
          }
        }
      }
    }
    return c;
  }

  template <typename S>
  Matrix<S> operator*(Matrix<S> const& a, Matrix<S> const& b) {
    return mat_mul(a, b);
  }

  template <typename S>
  Matrix<S> power(Matrix<S> const& a, std::size_t k) {
    Matrix<S> r = Matrix<S>::identity(a.dim());
    for (std::size_t i = 0; i < k; ++i) {
      r = mat_mul(r, a);
    }
    return r;
  }

  // Matrix-vector product A x for a column vector x.
  template <typename S>
  std::vector<typename S::value_type>
  mat_vec(Matrix<S> const& a, std::vector<typename S::value_type> const& x) {
    std::size_t n = a.dim();
    if (x.size() != n) {
      throw DimensionMismatch();
    }
    std::vector<typename S::value_type> y(n, S::zero());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        y[i] = S::add(y[i], S::mul(a(i, k), x[k]));
      }
    }
    return y;
  }

  // Row vector times matrix, x A.
  template <typename S>
  std::vector<typename S::value_type>
  vec_mat(std::vector<typename S::value_type> const& x, Matrix<S> const& a) {
    std::size_t n = a.dim();
    if (x.size() != n) {
      throw DimensionMismatch();
    }
    std::vector<typename S::value_type> y(n, S::zero());
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        y[j] = S::add(y[j], S::mul(x[k], a(k, j)));
      }
    }
    return y;
  }

  template <typename S>
  Matrix<S> transpose(Matrix<S> const& a) {
    std::size_t n = a.dim();
    Matrix<S>   t(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t.set(i, j, a(j, i));
      }
    }
    return t;
  }

  // Reflection in the anti-diagonal, D(A)_{i,j} = A_{n-j+1,n-i+1}.  Only
  // defined on upper triangular matrices, where it is an involutary
  // anti-automorphism.
  template <typename S>
  Matrix<S> delta(Matrix<S> const& a) {
    a.require_shape(Shape::UpperTriangular, "delta");
    std::size_t n = a.dim();
    Matrix<S>   d(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d.set(i, j, a(n - 1 - j, n - 1 - i));
      }
    }
    return d;
  }

  template <typename S>
  Matrix<S> hadamard(Matrix<S> const& a, Matrix<S> const& b) {
    std::size_t n = a.dim();
    if (b.dim() != n) {
      throw DimensionMismatch();
    }
    Matrix<S> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        c.set(i, j, S::mul(a(i, j), b(i, j)));
      }
    }
    return c;
  }

  template <typename S>
  Matrix<S> entrywise_meet(Matrix<S> const& a, Matrix<S> const& b) {
    std::size_t n = a.dim();
    if (b.dim() != n) {
      throw DimensionMismatch();
    }
    Matrix<S> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        c.set(i, j, S::meet(a(i, j), b(i, j)));
      }
    }
    return c;
  }

  template <typename S>
  Matrix<S> entrywise_join(Matrix<S> const& a, Matrix<S> const& b) {
    std::size_t n = a.dim();
    if (b.dim() != n) {
      throw DimensionMismatch();
    }
    Matrix<S> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        c.set(i, j, S::add(a(i, j), b(i, j)));
      }
    }
    return c;
  }

  template <typename S>
  Matrix<S> scale(typename S::value_type const& lambda, Matrix<S> const& a) {
    std::size_t n = a.dim();
    Matrix<S>   c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        c.set(i, j, S::mul(lambda, a(i, j)));
      }
    }
    return c;
  }

  // A <= B entrywise.
  template <typename S>
  bool leq_entrywise(Matrix<S> const& a, Matrix<S> const& b) {
    if (a.dim() != b.dim()) {
      throw DimensionMismatch();
    }
    for (std::size_t i = 0; i < a.data().size(); ++i) {
      if (S::less(b.data()[i], a.data()[i])) {
        return false;
      }
    }
    return true;
  }

  // The matrix with every entry one except value alpha at (i, j).
  template <typename S>
  Matrix<S> single_entry(std::size_t n,
                         std::size_t i,
                         std::size_t j,
                         typename S::value_type const& alpha) {
    Matrix<S> m = Matrix<S>::all_ones(n);
    m.set(i, j, alpha);
    return m;
  }

  // Indices (0-based) of the nonzero rows and nonzero columns.
  template <typename S>
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
  dom_im(Matrix<S> const& a) {
    std::size_t              n = a.dim();
    std::vector<std::size_t> dom, im;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!S::is_zero(a(i, j))) {
          dom.push_back(i);
          break;
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!S::is_zero(a(i, j))) {
          im.push_back(j);
          break;
        }
      }
    }
    return {dom, im};
  }

  template <typename S>
  bool full_domain(Matrix<S> const& a) {
    return dom_im(a).first.size() == a.dim();
  }

  // Diagonal part D_A of a matrix.
  template <typename S>
  Matrix<S> diagonal_part(Matrix<S> const& a) {
    std::vector<typename S::value_type> d;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      d.push_back(a(i, i));
    }
    return Matrix<S>::diagonal(d);
  }

  // Inverse of a diagonal matrix with nonzero diagonal.
  template <typename S>
  Matrix<S> diagonal_inverse(Matrix<S> const& d) {
    std::vector<typename S::value_type> v;
    for (std::size_t i = 0; i < d.dim(); ++i) {
      v.push_back(S::inv(d(i, i)));
    }
    return Matrix<S>::diagonal(v);
  }

  // Place a in the top left corner of an m x m matrix; the remaining
  // entries are zero, or one on the diagonal when unit_diagonal holds.
  template <typename S>
  Matrix<S> embed_corner(Matrix<S> const& a, std::size_t m, bool unit_diagonal) {
    if (m < a.dim()) {
      throw DimensionMismatch();
    }
    Matrix<S> r(m);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        r.set(i, j, a(i, j));
      }
    }
    if (unit_diagonal) {
      for (std::size_t i = a.dim(); i < m; ++i) {
        r.set(i, i, S::one());
      }
    }
    return r;
  }

  template <typename S>
  Matrix<S> from_bits(std::size_t n, std::vector<std::vector<int>> const& b) {
    Matrix<S> m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m.set(i, j, b.at(i).at(j) ? S::one() : S::zero());
      }
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Boolean row and column spaces
  ////////////////////////////////////////////////////////////////////////

  // Boolean vectors of length n are bit masks, bit k holding entry k.
  using BoolVec = std::uint32_t;

  // A join-closed set of Boolean vectors containing zero, sorted.
  struct BoolSpace {
    std::size_t          n = 0;
    std::vector<BoolVec> elements;

    bool contains(BoolVec v) const {
      return std::binary_search(elements.begin(), elements.end(), v);
    }

    bool subset_of(BoolSpace const& other) const {
      return std::includes(other.elements.begin(),
                           other.elements.end(),
                           elements.begin(),
                           elements.end());
    }

    friend bool operator==(BoolSpace const& a, BoolSpace const& b) {
      return a.n == b.n && a.elements == b.elements;
    }
  };

  inline BoolSpace bool_span(std::size_t n, std::vector<BoolVec> const& gens) {
    std::set<BoolVec> s{0};
    for (BoolVec g : gens) {
      std::vector<BoolVec> add;
      for (BoolVec x : s) {
        add.push_back(x | g);
      }
      s.insert(add.begin(), add.end());
    }
    return BoolSpace{n, std::vector<BoolVec>(s.begin(), s.end())};
  }

  inline std::vector<BoolVec> bool_columns(BoolMatrix const& a) {
    std::vector<BoolVec> cols;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      BoolVec v = 0;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a(i, j)) {
          v |= BoolVec(1) << i;
        }
      }
      cols.push_back(v);
    }
    return cols;
  }

  inline std::vector<BoolVec> bool_rows(BoolMatrix const& a) {
    return bool_columns(transpose(a));
  }

  inline BoolSpace bool_col_space(BoolMatrix const& a) {
    return bool_span(a.dim(), bool_columns(a));
  }

  inline BoolSpace bool_row_space(BoolMatrix const& a) {
    return bool_span(a.dim(), bool_rows(a));
  }

  // The unique minimal generating set of the join-closure of the given
  // vectors: the nonzero members not equal to the join of the members
  // strictly below them.
  inline std::vector<BoolVec> bool_unique_basis(std::size_t          n,
                                                std::vector<BoolVec> gens) {
    BoolSpace            sp = bool_span(n, gens);
    std::vector<BoolVec> basis;
    for (BoolVec v : sp.elements) {
      if (v == 0) {
        continue;
      }
      BoolVec below = 0;
      for (BoolVec w : sp.elements) {
        if (w != v && (w & ~v) == 0) {
          below |= w;
        }
      }
      if (below != v) {
        basis.push_back(v);
      }
    }
    return basis;
  }

}  // namespace tropmat

#endif  // TROPMAT_MATRIX_HPP_
