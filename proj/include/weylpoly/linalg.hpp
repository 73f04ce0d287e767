#pragma once

#include <vector>

#include "mpoly.hpp"

namespace weylpoly {

// Dense exact-rational matrix in row-echelon workflows. Desk-scale sizes
// only; no pivot-growth concerns because arithmetic is exact.
struct RatMatrix {
    size_t rows = 0, cols = 0;
    std::vector<BigRat> a;

    RatMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, BigRat(0)) {}
    BigRat& at(size_t i, size_t j) { return a[i * cols + j]; }
    const BigRat& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

// Row-reduce in place; returns pivot column of each eliminated row.
inline std::vector<size_t> row_reduce(RatMatrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t sel = r;
        while (sel < m.rows && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows) continue;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        BigRat inv = m.at(r, c);
        for (size_t j = c; j < m.cols; ++j) m.at(r, j) /= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            BigRat f = m.at(i, c);
            for (size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(RatMatrix m) { return row_reduce(m).size(); }

// Incrementally maintained reduced row space. Rows are normalized to leading
// coefficient 1; insert returns true when the vector enlarged the span.
struct Echelon {
    std::vector<std::vector<BigRat>> rows;
    std::vector<size_t> pivots;

    size_t rank() const { return rows.size(); }

    void reduce(std::vector<BigRat>& v) const {
        for (size_t k = 0; k < rows.size(); ++k) {
            const BigRat& f = v[pivots[k]];
            if (f == 0) continue;
            BigRat c = f;
            const auto& row = rows[k];
            for (size_t j = pivots[k]; j < v.size(); ++j)
                if (row[j] != 0) v[j] -= c * row[j];
        }
    }

    bool contains(std::vector<BigRat> v) const {
        reduce(v);
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }

    bool insert(std::vector<BigRat> v) {
        reduce(v);
        size_t p = v.size();
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                p = j;
                break;
            }
        if (p == v.size()) return false;
        BigRat lead = v[p];
        for (size_t j = p; j < v.size(); ++j) v[j] /= lead;
        for (size_t k = 0; k < rows.size(); ++k) {
            BigRat f = rows[k][p];
            if (f == 0) continue;
            for (size_t j = p; j < v.size(); ++j)
                if (v[j] != 0) rows[k][j] -= f * v[j];
        }
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

} // namespace weylpoly
