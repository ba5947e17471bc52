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

// Machine-checkable certificates: a claim, its inputs, a list of named
// comparisons, and the conjunction of their outcomes as the verdict.

#ifndef TROPMAT_PROOF_HPP_
#define TROPMAT_PROOF_HPP_

#include <string>   // for string
#include <utility>  // for move

#include "io.hpp"

namespace tropmat {

  class Proof {
   public:
    explicit Proof(std::string claim) : _claim(std::move(claim)) {}

    Proof& input(std::string const& name, json value) {
      _inputs[name] = std::move(value);
      return *this;
    }

    // Record a check; the proof holds only if every check holds.
    bool check(std::string const& name, bool holds, json details = nullptr) {
      json c{{"name", name}, {"holds", holds}};
      if (!details.is_null()) {
        c["details"] = std::move(details);
      }
      _certs.push_back(std::move(c));
      _verdict = _verdict && holds;
      return holds;
    }

    // Record that two matrices are (or are not) equal.
    template <typename S>
    bool check_equal(std::string const& name,
                     Matrix<S> const&   lhs,
                     Matrix<S> const&   rhs,
                     bool               expect_equal = true) {
      bool eq = lhs == rhs;
      return check(name,
                   eq == expect_equal,
                   json{{"lhs", tropmat::to_json(lhs)},
                        {"rhs", tropmat::to_json(rhs)},
                        {"expected", expect_equal ? "equal" : "different"}});
    }

    bool verdict() const noexcept {
      return _verdict;
    }

    std::string const& claim() const noexcept {
      return _claim;
    }

    json to_json() const {
      return json{{"claim", _claim},
                  {"inputs", _inputs},
                  {"certificates", _certs},
                  {"verdict", _verdict}};
    }

   private:
    std::string _claim;
    json        _inputs = json::object();
    json        _certs  = json::array();
    bool        _verdict = true;
  };

}  // namespace tropmat

#endif  // TROPMAT_PROOF_HPP_
