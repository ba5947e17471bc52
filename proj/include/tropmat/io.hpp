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

// Matrix text and JSON formats.
//
// Text:
//
//   n 3 maxplus shape=unitriangular
//   0 1   -inf
//   -inf 0 1/2
//   -inf -inf 0
//
// Blank lines are ignored and '#' starts a comment.  Several matrices may
// follow one another.  JSON: {"n": 3, "kind": "bool", "rows": [[...]]},
// optionally with "shape", or an array of such objects.  Entries in JSON
// may be strings (value tokens) or integers.

#ifndef TROPMAT_IO_HPP_
#define TROPMAT_IO_HPP_

#include <algorithm>  // for max
#include <cstddef>    // for size_t
#include <sstream>    // for ostringstream, istringstream
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <variant>    // for variant
#include <vector>     // for vector

#include <json.hpp>

#include "matrix.hpp"

namespace tropmat {

  using json = nlohmann::ordered_json;

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column "
                             + std::to_string(column) + ": " + msg),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  using AnyMatrix = std::variant<BoolMatrix, MaxPlusMatrix>;

  inline SemifieldKind kind_of(AnyMatrix const& m) {
    return m.index() == 0 ? SemifieldKind::Boolean
                          : SemifieldKind::MaxPlusRational;
  }

  ////////////////////////////////////////////////////////////////////////
  // Printing
  ////////////////////////////////////////////////////////////////////////

  template <typename S>
  std::string to_text(Matrix<S> const& a, std::string const& attrs = "") {
    std::size_t                           n = a.dim();
    std::vector<std::vector<std::string>> tok(n);
    std::vector<std::size_t>              width(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        tok[i].push_back(S::to_string(a(i, j)));
        width[j] = std::max(width[j], tok[i][j].size());
      }
    }
    std::ostringstream os;
    os << "n " << n << " " << S::name;
    if (!attrs.empty()) {
      os << " " << attrs;
    }
    os << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) {
          os << " ";
        }
        os << std::string(width[j] - tok[i][j].size(), ' ') << tok[i][j];
      }
      os << "\n";
    }
    return os.str();
  }

  inline std::string to_text(AnyMatrix const& a) {
    return std::visit([](auto const& m) { return to_text(m); }, a);
  }

  template <typename S>
  json to_json(Matrix<S> const& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      json r = json::array();
      for (std::size_t j = 0; j < a.dim(); ++j) {
        r.push_back(S::to_string(a(i, j)));
      }
      rows.push_back(r);
    }
    return json{{"n", a.dim()}, {"kind", S::name}, {"rows", rows}};
  }

  inline json to_json(AnyMatrix const& a) {
    return std::visit([](auto const& m) { return to_json(m); }, a);
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    struct Token {
      std::string text;
      std::size_t line;
      std::size_t column;
    };

    // Whitespace separated tokens of a line, comments removed.
    inline std::vector<Token> tokenize_line(std::string const& line,
                                            std::size_t        lineno) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        char c = line[i];
        if (c == '#') {
          break;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
          ++i;
          continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t'
               && line[i] != '\r' && line[i] != '#') {
          ++i;
        }
        out.push_back({line.substr(start, i - start), lineno, start + 1});
      }
      return out;
    }

    template <typename S>
    Matrix<S> read_rows(std::vector<std::vector<Token>> const& rows,
                        std::size_t                            n) {
      Matrix<S> m(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Token const& t = rows[i][j];
          try {
            m.set(i, j, S::parse(t.text));
          } catch (std::exception const& e) {
            throw ParseError(t.line, t.column, e.what());
          }
        }
      }
      return m;
    }

    inline void check_shape(AnyMatrix const&   m,
                            std::string const& shape,
                            std::size_t        line,
                            std::size_t        column) {
      Shape s;
      try {
        s = parse_shape(shape);
      } catch (std::exception const& e) {
        throw ParseError(line, column, e.what());
      }
      bool ok = std::visit([&](auto const& a) { return a.has_shape(s); }, m);
      if (!ok) {
        throw ParseError(
            line, column, "matrix violates declared shape '" + shape + "'");
      }
    }

    inline std::pair<std::size_t, std::size_t>
    offset_to_line_col(std::string const& text, std::size_t offset) {
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return {line, col};
    }

    template <typename S>
    Matrix<S> json_rows(json const& rows, std::size_t n) {
      if (!rows.is_array() || rows.size() != n) {
        throw std::invalid_argument("\"rows\" must be an array of " +
                                    std::to_string(n) + " rows");
      }
      Matrix<S> m(n);
      for (std::size_t i = 0; i < n; ++i) {
        auto const& r = rows[i];
        if (!r.is_array() || r.size() != n) {
          throw std::invalid_argument("row " + std::to_string(i + 1)
                                      + " must have " + std::to_string(n)
                                      + " entries");
        }
        for (std::size_t j = 0; j < n; ++j) {
          std::string tok;
          if (r[j].is_string()) {
            tok = r[j].get<std::string>();
          } else if (r[j].is_number_integer()) {
            tok = std::to_string(r[j].get<long long>());
          } else {
            throw std::invalid_argument("entry (" + std::to_string(i + 1) + ","
                                        + std::to_string(j + 1)
                                        + ") is not a value token");
          }
          m.set(i, j, S::parse(tok));
        }
      }
      return m;
    }

    inline AnyMatrix json_matrix(json const& obj) {
      if (!obj.is_object()) {
        throw std::invalid_argument("matrix must be a JSON object");
      }
      if (!obj.contains("n") || !obj["n"].is_number_unsigned()) {
        throw std::invalid_argument("missing or invalid \"n\"");
      }
      if (!obj.contains("kind") || !obj["kind"].is_string()) {
        throw std::invalid_argument("missing or invalid \"kind\"");
      }
      std::size_t   n    = obj["n"].get<std::size_t>();
      SemifieldKind kind = parse_kind(obj["kind"].get<std::string>());
      if (!obj.contains("rows")) {
        throw std::invalid_argument("missing \"rows\"");
      }
      AnyMatrix m;
      if (kind == SemifieldKind::Boolean) {
        m = json_rows<BooleanSemifield>(obj["rows"], n);
      } else {
        m = json_rows<MaxPlusSemifield>(obj["rows"], n);
      }
      if (obj.contains("shape")) {
        Shape s = parse_shape(obj["shape"].get<std::string>());
        bool  ok
            = std::visit([&](auto const& a) { return a.has_shape(s); }, m);
        if (!ok) {
          throw std::invalid_argument("matrix violates declared shape '"
                                      + obj["shape"].get<std::string>() + "'");
        }
      }
      return m;
    }

    inline std::vector<AnyMatrix> parse_json(std::string const& text) {
      json doc;
      try {
        doc = json::parse(text);
      } catch (json::parse_error const& e) {
        auto [l, c] = offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(l, c, "invalid JSON");
      }
      std::vector<AnyMatrix> out;
      auto                   one = [&](json const& obj, std::size_t idx) {
        try {
          out.push_back(json_matrix(obj));
        } catch (ParseError const&) {
          throw;
        } catch (std::exception const& e) {
          // JSON values carry no positions once parsed; report the matrix.
          throw ParseError(1, 1, "matrix " + std::to_string(idx + 1) + ": "
                                     + e.what());
        }
      };
      if (doc.is_array()) {
        for (std::size_t i = 0; i < doc.size(); ++i) {
          one(doc[i], i);
        }
      } else {
        one(doc, 0);
      }
      return out;
    }

    inline std::vector<AnyMatrix> parse_text(std::string const& text) {
      std::vector<std::vector<Token>> lines;
      {
        std::istringstream is(text);
        std::string        line;
        std::size_t        lineno = 0;
        while (std::getline(is, line)) {
          ++lineno;
          auto toks = tokenize_line(line, lineno);
          if (!toks.empty()) {
            lines.push_back(std::move(toks));
          }
        }
      }
      std::vector<AnyMatrix> out;
      std::size_t            k = 0;
      while (k < lines.size()) {
        auto const& hdr = lines[k];
        if (hdr[0].text != "n") {
          throw ParseError(hdr[0].line,
                           hdr[0].column,
                           "expected header 'n <dim> <kind>'");
        }
        if (hdr.size() < 3) {
          throw ParseError(hdr[0].line,
                           hdr.back().column + hdr.back().text.size(),
                           "header needs a dimension and a kind");
        }
        std::size_t n = 0;
        try {
          std::size_t pos = 0;
          long        v   = std::stol(hdr[1].text, &pos);
          if (pos != hdr[1].text.size() || v < 1 || v > 64) {
            throw std::invalid_argument("bad");
          }
          n = static_cast<std::size_t>(v);
        } catch (std::exception const&) {
          throw ParseError(
              hdr[1].line, hdr[1].column, "dimension must be in 1..64");
        }
        SemifieldKind kind;
        try {
          kind = parse_kind(hdr[2].text);
        } catch (std::exception const& e) {
          throw ParseError(hdr[2].line, hdr[2].column, e.what());
        }
        std::string shape;
        Token       shape_tok{};
        for (std::size_t t = 3; t < hdr.size(); ++t) {
          if (hdr[t].text.rfind("shape=", 0) == 0) {
            shape     = hdr[t].text.substr(6);
            shape_tok = hdr[t];
          } else {
            throw ParseError(hdr[t].line,
                             hdr[t].column,
                             "unknown header attribute '" + hdr[t].text + "'");
          }
        }
        std::vector<std::vector<Token>> rows;
        for (std::size_t i = 0; i < n; ++i) {
          if (k + 1 + i >= lines.size()) {
            std::size_t l = lines.back()[0].line + 1;
            throw ParseError(l, 1, "expected " + std::to_string(n)
                                       + " rows, found "
                                       + std::to_string(i));
          }
          auto const& r = lines[k + 1 + i];
          if (r.size() != n) {
            std::size_t col = r.size() > n ? r[n].column
                                           : r.back().column
                                                 + r.back().text.size();
            throw ParseError(r[0].line, col, "expected " + std::to_string(n)
                                                 + " entries, found "
                                                 + std::to_string(r.size()));
          }
          rows.push_back(r);
        }
        AnyMatrix m;
        if (kind == SemifieldKind::Boolean) {
          m = read_rows<BooleanSemifield>(rows, n);
        } else {
          m = read_rows<MaxPlusSemifield>(rows, n);
        }
        if (!shape.empty()) {
          check_shape(m, shape, shape_tok.line, shape_tok.column);
        }
        out.push_back(std::move(m));
        k += n + 1;
      }
      return out;
    }
  }  // namespace detail

  // Parse every matrix in a text or JSON document.
  inline std::vector<AnyMatrix> parse_matrices(std::string const& text) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && (text[i] == '{' || text[i] == '[')) {
      return detail::parse_json(text);
    }
    return detail::parse_text(text);
  }

  inline AnyMatrix parse_matrix(std::string const& text) {
    auto all = parse_matrices(text);
    if (all.size() != 1) {
      throw ParseError(1, 1, "expected exactly one matrix, found "
                                 + std::to_string(all.size()));
    }
    return all[0];
  }

  // Typed parse; throws KindMismatch if the document holds the other kind.
  template <typename S>
  Matrix<S> parse_matrix_as(std::string const& text) {
    AnyMatrix m = parse_matrix(text);
    if (auto p = std::get_if<Matrix<S>>(&m)) {
      return *p;
    }
    throw KindMismatch();
  }

}  // namespace tropmat

#endif  // TROPMAT_IO_HPP_
