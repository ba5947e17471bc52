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

// Seeded random generators for values and matrices of each shape class.
// Finite entries are rationals k/d with k uniform in [-bound, bound] and d
// uniform in [1, max_den]; zero entries (where the shape allows them)
// appear with probability zero_prob.

#ifndef TROPMAT_RANDOM_HPP_
#define TROPMAT_RANDOM_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <random>   // for mt19937_64, uniform_int_distribution

#include "matrix.hpp"

namespace tropmat {

  struct RandomConfig {
    std::int64_t bound     = 10;
    std::int64_t max_den   = 4;
    double       zero_prob = 0.0;
  };

  class Random {
   public:
    explicit Random(std::uint64_t seed, RandomConfig cfg = {})
        : _rng(seed), _cfg(cfg) {}

    std::mt19937_64& engine() noexcept {
      return _rng;
    }

    RandomConfig const& config() const noexcept {
      return _cfg;
    }

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
      return std::uniform_int_distribution<std::int64_t>(lo, hi)(_rng);
    }

    bool coin(double p) {
      return std::bernoulli_distribution(p)(_rng);
    }

    Rational rational() {
      std::int64_t k = integer(-_cfg.bound, _cfg.bound);
      std::int64_t d = integer(1, _cfg.max_den);
      return Rational(k, d);
    }

    // Strictly positive rational.
    Rational positive_rational() {
      std::int64_t k = integer(1, _cfg.bound);
      std::int64_t d = integer(1, _cfg.max_den);
      return Rational(k, d);
    }

    // Rational <= 0.
    Rational nonpositive_rational() {
      return -Rational(integer(0, _cfg.bound), integer(1, _cfg.max_den));
    }

    // A nonzero element of S.
    template <typename S>
    typename S::value_type unit() {
      if constexpr (S::kind == SemifieldKind::Boolean) {
        return S::one();
      } else {
        return S::from_group(rational());
      }
    }

    // An arbitrary element of S, zero with probability zero_prob (Boolean:
    // one half when zero_prob is 0).
    template <typename S>
    typename S::value_type value() {
      if constexpr (S::kind == SemifieldKind::Boolean) {
        double p = _cfg.zero_prob > 0 ? _cfg.zero_prob : 0.5;
        return coin(p) ? S::zero() : S::one();
      } else {
        if (_cfg.zero_prob > 0 && coin(_cfg.zero_prob)) {
          return S::zero();
        }
        return unit<S>();
      }
    }

    template <typename S>
    Matrix<S> general(std::size_t n) {
      Matrix<S> m(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          m.set(i, j, value<S>());
        }
      }
      return m;
    }

    // General matrix in which every row has a nonzero entry.
    template <typename S>
    Matrix<S> full_domain(std::size_t n) {
      Matrix<S> m = general<S>(n);
      for (std::size_t i = 0; i < n; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
          any = any || !S::is_zero(m(i, j));
        }
        if (!any) {
          m.set(i, static_cast<std::size_t>(integer(0, n - 1)), unit<S>());
        }
      }
      return m;
    }

    template <typename S>
    Matrix<S> upper(std::size_t n) {
      Matrix<S> m(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          m.set(i, j, value<S>());
        }
      }
      return m;
    }

    template <typename S>
    Matrix<S> full_diagonal(std::size_t n) {
      Matrix<S> m = upper<S>(n);
      for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, unit<S>());
      }
      return m;
    }

    template <typename S>
    Matrix<S> positive_upper(std::size_t n) {
      Matrix<S> m(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          m.set(i, j, unit<S>());
        }
      }
      return m;
    }

    // Unitriangular; with positive set every entry above the diagonal is
    // nonzero, otherwise zeros appear with the configured probability.
    template <typename S>
    Matrix<S> unitriangular(std::size_t n, bool positive) {
      Matrix<S> m(n);
      for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, S::one());
        for (std::size_t j = i + 1; j < n; ++j) {
          m.set(i, j, positive ? unit<S>() : value<S>());
        }
      }
      return m;
    }

    template <typename S>
    Matrix<S> invertible_diagonal(std::size_t n) {
      Matrix<S> m(n);
      for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, unit<S>());
      }
      return m;
    }

   private:
    std::mt19937_64 _rng;
    RandomConfig    _cfg;
  };

}  // namespace tropmat

#endif  // TROPMAT_RANDOM_HPP_
