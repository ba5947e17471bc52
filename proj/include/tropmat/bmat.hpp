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

// Bit-packed Boolean matrices of dimension at most 5.  Entry (i, j) is bit
// i*n + j of a 32-bit word, so row i occupies bits [i*n, (i+1)*n).

#ifndef TROPMAT_BMAT_HPP_
#define TROPMAT_BMAT_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t
#include <stdexcept>

#include "matrix.hpp"

namespace tropmat::bmat {

  using code_t = std::uint32_t;

  constexpr std::size_t max_dim = 5;

  inline code_t row_mask(std::size_t n) {
    return (code_t(1) << n) - 1;
  }

  inline code_t row(code_t a, std::size_t n, std::size_t i) {
    return (a >> (i * n)) & row_mask(n);
  }

  inline bool get(code_t a, std::size_t n, std::size_t i, std::size_t j) {
    return (a >> (i * n + j)) & 1U;
  }

  inline code_t bit(std::size_t n, std::size_t i, std::size_t j) {
    return code_t(1) << (i * n + j);
  }

  inline code_t mul(code_t a, code_t b, std::size_t n) {
    code_t      res  = 0;
    code_t      mask = row_mask(n);
    for (std::size_t i = 0; i < n; ++i) {
      code_t ra = (a >> (i * n)) & mask;
      code_t r  = 0;
      while (ra != 0) {
        unsigned k = static_cast<unsigned>(__builtin_ctz(ra));
        r |= (b >> (k * n)) & mask;
        ra &= ra - 1;
      }
      res |= r << (i * n);
    }
    return res;
  }

  inline code_t identity(std::size_t n) {
    code_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      r |= bit(n, i, i);
    }
    return r;
  }

  inline code_t transpose(code_t a, std::size_t n) {
    code_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (get(a, n, i, j)) {
          r |= bit(n, j, i);
        }
      }
    }
    return r;
  }

  // Reflection in the anti-diagonal.
  inline code_t delta(code_t a, std::size_t n) {
    code_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (get(a, n, n - 1 - j, n - 1 - i)) {
          r |= bit(n, i, j);
        }
      }
    }
    return r;
  }

  inline bool unit_diagonal(code_t a, std::size_t n) {
    code_t id = identity(n);
    return (a & id) == id;
  }

  // Every row and every column nonzero.
  inline bool total(code_t a, std::size_t n) {
    code_t cols = 0;
    for (std::size_t i = 0; i < n; ++i) {
      code_t r = row(a, n, i);
      if (r == 0) {
        return false;
      }
      cols |= r;
    }
    return cols == row_mask(n);
  }

  // Whether some permutation sigma has a_{i, sigma(i)} = 1 for all i.
  inline bool has_permutation(code_t a, std::size_t n) {
    // Dynamic programming over subsets of used columns.
    std::uint32_t reach = 1;  // bit s set: column subset s reachable
    std::uint32_t full  = (std::uint32_t(1) << n) - 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t next = 0;
      code_t        r    = row(a, n, i);
      for (std::uint32_t s = 0; s <= full; ++s) {
        if (!((reach >> s) & 1U)) {
          continue;
        }
        code_t avail = r & ~s;
        while (avail != 0) {
          unsigned k = static_cast<unsigned>(__builtin_ctz(avail));
          next |= std::uint64_t(1) << (s | (1U << k));
          avail &= avail - 1;
        }
      }
      reach = static_cast<std::uint32_t>(next);
      if (reach == 0) {
        return false;
      }
    }
    return (reach >> full) & 1U;
  }

  inline code_t from_matrix(BoolMatrix const& m) {
    std::size_t n = m.dim();
    if (n > max_dim) {
      throw std::invalid_argument("bit-packed matrices need n <= 5");
    }
    code_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m(i, j)) {
          r |= bit(n, i, j);
        }
      }
    }
    return r;
  }

  inline BoolMatrix to_matrix(code_t a, std::size_t n) {
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m.set(i, j, get(a, n, i, j));
      }
    }
    return m;
  }

  // Column j as a BoolVec (bit i holds entry (i, j)).
  inline BoolVec column(code_t a, std::size_t n, std::size_t j) {
    BoolVec v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (get(a, n, i, j)) {
        v |= BoolVec(1) << i;
      }
    }
    return v;
  }

}  // namespace tropmat::bmat

#endif  // TROPMAT_BMAT_HPP_
