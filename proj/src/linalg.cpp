#include "comprelie/linalg.hpp"

#include "comprelie/error.hpp"

#include <algorithm>
#include <utility>

namespace comprelie {

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.reduced = m;
    Matrix& a = res.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t r = pivot_row; r < rows; ++r) {
            if (!a(r, col).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel == rows) {
            continue;
        }
        if (sel != pivot_row) {
            for (std::size_t c = 0; c < cols; ++c) {
                std::swap(a(sel, c), a(pivot_row, c));
            }
        }
        Rational inv = Rational(1) / a(pivot_row, col);
        for (std::size_t c = col; c < cols; ++c) {
            a(pivot_row, c) *= inv;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a(r, col).is_zero()) {
                continue;
            }
            Rational factor = a(r, col);
            for (std::size_t c = col; c < cols; ++c) {
                a(r, c) -= factor * a(pivot_row, c);
            }
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

SubspaceBasis kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t cols = m.cols();
    SubspaceBasis basis;
    basis.ambient_dim = cols;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : r.pivot_cols) {
        is_pivot[p] = true;
    }
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) {
            continue;
        }
        Vec v(cols);
        v[free_col] = 1;
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p) {
            v[r.pivot_cols[p]] = -r.reduced(p, free_col);
        }
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) {
        throw input_error("solve: right-hand side dimension mismatch");
    }
    Matrix aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    aug.set_col(m.cols(), b);
    RrefResult r = rref(aug);
    Vec x(m.cols());
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p) {
        if (r.pivot_cols[p] == m.cols()) {
            return std::nullopt;  // pivot in the augmented column
        }
        x[r.pivot_cols[p]] = r.reduced(p, m.cols());
    }
    return x;
}

SubspaceBasis column_space_basis(const Matrix& m) {
    RrefResult r = rref(m.transpose());
    SubspaceBasis basis;
    basis.ambient_dim = m.rows();
    for (std::size_t row = 0; row < r.rank; ++row) {
        basis.vectors.push_back(r.reduced.row(row));
    }
    return basis;
}

namespace {

Matrix basis_matrix(const SubspaceBasis& basis) {
    Matrix m(basis.vectors.size(), basis.ambient_dim);
    for (std::size_t r = 0; r < basis.vectors.size(); ++r) {
        if (basis.vectors[r].size() != basis.ambient_dim) {
            throw input_error("subspace basis vector has wrong ambient dimension");
        }
        m.set_row(r, basis.vectors[r]);
    }
    return m;
}

}  // namespace

bool is_independent(const SubspaceBasis& basis) {
    return rank(basis_matrix(basis)) == basis.dim();
}

bool in_span(const SubspaceBasis& basis, const Vec& v) {
    if (v.size() != basis.ambient_dim) {
        throw input_error("in_span: vector dimension mismatch");
    }
    if (vec_is_zero(v)) {
        return true;
    }
    Matrix m = basis_matrix(basis);
    Matrix with(m.rows() + 1, basis.ambient_dim);
    with.set_block(0, 0, m);
    with.set_row(m.rows(), v);
    return rank(with) == rank(m);
}

bool span_contained(const SubspaceBasis& sub, const SubspaceBasis& full) {
    if (sub.ambient_dim != full.ambient_dim) {
        throw input_error("span comparison across different ambient spaces");
    }
    Matrix f = basis_matrix(full);
    Matrix stacked = vstack(f, basis_matrix(sub));
    return rank(stacked) == rank(f);
}

SubspaceBasis complement_basis(const SubspaceBasis& sub, const SubspaceBasis& full) {
    if (sub.ambient_dim != full.ambient_dim) {
        throw input_error("complement_basis: ambient dimension mismatch");
    }
    if (!is_independent(sub)) {
        throw input_error("complement_basis: sub basis is not independent");
    }
    if (!span_contained(sub, full)) {
        throw input_error("complement_basis: sub is not contained in full");
    }
    SubspaceBasis out;
    out.ambient_dim = full.ambient_dim;
    std::vector<Vec> selected = sub.vectors;
    std::size_t current = sub.dim();
    for (const Vec& candidate : full.vectors) {
        std::vector<Vec> trial = selected;
        trial.push_back(candidate);
        SubspaceBasis trial_basis{full.ambient_dim, trial};
        if (rank(basis_matrix(trial_basis)) > current) {
            selected.push_back(candidate);
            out.vectors.push_back(candidate);
            ++current;
        }
    }
    return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw input_error("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return Matrix::identity(0);
    }
    // rank of [M | I] is always n; M is invertible iff all pivots land in
    // the left block.
    RrefResult r = rref(hstack(m, Matrix::identity(n)));
    if (r.pivot_cols.size() < n || r.pivot_cols.back() >= n) {
        return std::nullopt;
    }
    return r.reduced.block(0, n, n, n);
}

bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace comprelie
