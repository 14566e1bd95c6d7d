#pragma once

#include "stringy/polyhedra.hpp"

#include <cctype>
#include <sstream>
#include <string>

namespace stringy {

namespace detail {

struct TokenRow {
    int line = 0;          // 1-based source line
    std::vector<int> cols; // 1-based column of each token
    std::vector<Int> values;
};

// Split into rows of integer tokens, one row per nonempty source line.
// '#' starts a comment that runs to the end of the line.
inline std::vector<TokenRow> tokenize_rows(const std::string& text) {
    std::vector<TokenRow> rows;
    int line = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        ++line;
        std::string raw = text.substr(pos, eol - pos);
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        TokenRow row;
        row.line = line;
        size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::string tok = raw.substr(start, i - start);
            try {
                row.values.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw ParseError("'" + tok + "' is not an integer", line, int(start) + 1);
            }
            row.cols.push_back(int(start) + 1);
        }
        if (!row.values.empty()) rows.push_back(std::move(row));
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return rows;
}

} // namespace detail

// Reads a vertex list. The native layout puts "d k" on the first line and one
// vertex of d integers on each of the k following lines. A matrix whose
// header instead declares its own row and column counts is also accepted:
// vertices are the rows of a tall matrix and the columns of a wide one, and
// for a square matrix the orientation that yields a full-dimensional
// polytope wins, with a tie between genuinely different readings rejected.
inline Polytope parse_polytope(const std::string& text) {
    std::vector<detail::TokenRow> rows = detail::tokenize_rows(text);
    if (rows.empty()) throw ParseError("empty input");
    const detail::TokenRow& head = rows.front();
    if (head.values.size() != 2)
        throw ParseError("header must hold exactly two integers", head.line, head.cols[0]);
    if (head.values[0] < 1 || head.values[1] < 1 || !head.values[0].fits_ulong_p() ||
        !head.values[1].fits_ulong_p())
        throw ParseError("header entries must be positive machine-sized integers", head.line,
                         head.cols[0]);
    size_t x = head.values[0].get_ui();
    size_t y = head.values[1].get_ui();
    size_t body = rows.size() - 1;

    auto row_lengths_are = [&](size_t want, size_t count) {
        if (body != count) return false;
        for (size_t i = 1; i < rows.size(); ++i)
            if (rows[i].values.size() != want) return false;
        return true;
    };
    auto matrix = [&](size_t nrows, size_t ncols) {
        IMat m;
        m.reserve(nrows);
        for (size_t i = 0; i < nrows; ++i) m.push_back(rows[i + 1].values);
        (void)ncols;
        return m;
    };
    auto transposed = [](const IMat& m) {
        IMat t(m.empty() ? 0 : m[0].size(), IVec(m.size()));
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
        return t;
    };

    bool native_shape = row_lengths_are(x, y);   // y vertex rows of dimension x
    bool matrix_shape = row_lengths_are(y, x);   // x matrix rows of y entries
    if (!native_shape && !matrix_shape) {
        for (size_t i = 1; i < rows.size(); ++i)
            if (rows[i].values.size() != x)
                throw ParseError("row " + std::to_string(i) + " has " +
                                     std::to_string(rows[i].values.size()) + " entries, expected " +
                                     std::to_string(x),
                                 rows[i].line, rows[i].cols.empty() ? 1 : rows[i].cols[0]);
        throw ParseError("expected " + std::to_string(y) + " vertex rows, found " +
                         std::to_string(body));
    }

    if (x == y) {
        // Square body: vertex rows and matrix columns are both plausible.
        IMat as_rows = matrix(x, x);
        IMat as_cols = transposed(as_rows);
        std::optional<Polytope> row_poly, col_poly;
        try {
            row_poly = Polytope::hull(as_rows);
        } catch (const NotFullDimensional&) {
        }
        try {
            col_poly = Polytope::hull(as_cols);
        } catch (const NotFullDimensional&) {
        }
        if (row_poly && col_poly) {
            if (row_poly->vertices() != col_poly->vertices())
                throw AmbiguousOrientation(
                    "square vertex matrix is full dimensional in both orientations");
            return *row_poly;
        }
        if (row_poly) return *row_poly;
        if (col_poly) return *col_poly;
        throw NotFullDimensional("vertices span no full-dimensional polytope in either orientation");
    }
    if (native_shape) return Polytope::hull(matrix(y, x));
    // Matrix layout: rows of a tall matrix are vertices, columns of a wide one.
    IMat m = matrix(x, y);
    return Polytope::hull(x > y ? m : transposed(m));
}

// Writes the native layout; vertices must be lattice points.
inline std::string write_polytope(const Polytope& P, const std::string& name = "") {
    std::ostringstream out;
    if (!name.empty()) out << "# " << name << "\n";
    out << P.ambient() << " " << P.vertices().size() << "\n";
    for (const QVec& v : P.vertices()) {
        IVec w = to_ivec(v);
        for (size_t j = 0; j < w.size(); ++j) out << (j ? " " : "") << w[j];
        out << "\n";
    }
    return out.str();
}

} // namespace stringy
