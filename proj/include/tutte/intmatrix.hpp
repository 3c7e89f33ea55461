#pragma once

// Dense integer matrices with exact arithmetic and Smith normal form.
// Sizes here are tiny (presentation matrices of finitely generated abelian
// groups), so a straightforward elimination is plenty.

#include <cstdlib>
#include <utility>
#include <vector>

#include "coeff.hpp"
#include "errors.hpp"

namespace tutte {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows) {
        for (auto& r : a_) r.assign(cols, 0);
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& operator()(int i, int j) { return a_[i][j]; }
    const BigInt& operator()(int i, int j) const { return a_[i][j]; }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw Error("matrix dimension mismatch");
        IntMatrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k)
                if (a_[i][k] != 0)
                    for (int j = 0; j < o.cols_; ++j) out(i, j) += a_[i][k] * o(k, j);
        return out;
    }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<BigInt>> a_;
};

struct SmithResult {
    IntMatrix d;                     // diagonal, invariant factors d1 | d2 | ...
    IntMatrix u, v;                  // unimodular, u * m * v == d
    std::vector<BigInt> factors;     // nonzero invariant factors in order
};

// Smith normal form over the integers with transform tracking.
inline SmithResult smith_normal_form(const IntMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    SmithResult res;
    res.d = m;
    res.u = IntMatrix::identity(rows);
    res.v = IntMatrix::identity(cols);
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols; ++c) std::swap(d(i, c), d(j, c));
        for (int c = 0; c < rows; ++c) std::swap(u(i, c), u(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(d(r, i), d(r, j));
        for (int r = 0; r < cols; ++r) std::swap(v(r, i), v(r, j));
    };
    auto add_row = [&](int dst, int src, const BigInt& k) {  // row dst += k * row src
        for (int c = 0; c < cols; ++c) d(dst, c) += k * d(src, c);
        for (int c = 0; c < rows; ++c) u(dst, c) += k * u(src, c);
    };
    auto add_col = [&](int dst, int src, const BigInt& k) {
        for (int r = 0; r < rows; ++r) d(r, dst) += k * d(r, src);
        for (int r = 0; r < cols; ++r) v(r, dst) += k * v(r, src);
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < cols; ++c) d(i, c) = -d(i, c);
        for (int c = 0; c < rows; ++c) u(i, c) = -u(i, c);
    };

    int t = 0;
    int lim = std::min(rows, cols);
    while (t < lim) {
        // find a nonzero pivot in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < rows && pi < 0; ++i)
            for (int j = t; j < cols; ++j)
                if (d(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        // clear row and column t by euclidean steps
        for (bool dirty = true; dirty;) {
            dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                BigInt q = d(i, t) / d(t, t);
                add_row(i, t, -q);
                if (d(i, t) != 0) {  // remainder smaller than pivot: swap up
                    swap_rows(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                BigInt q = d(t, j) / d(t, t);
                add_col(j, t, -q);
                if (d(t, j) != 0) {
                    swap_cols(t, j);
                    dirty = true;
                }
            }
        }
        // pivot must divide the whole remaining block; if not, fold the
        // offending row in and redo
        bool redo = false;
        for (int i = t + 1; i < rows && !redo; ++i)
            for (int j = t + 1; j < cols; ++j)
                if (d(i, j) % d(t, t) != 0) {
                    add_row(t, i, 1);
                    redo = true;
                    break;
                }
        if (redo) continue;
        if (d(t, t) < 0) negate_row(t);
        ++t;
    }
    for (int i = 0; i < t; ++i) res.factors.push_back(d(i, i));
    return res;
}

}  // namespace tutte
