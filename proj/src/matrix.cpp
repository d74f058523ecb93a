#include "comprelie/matrix.hpp"

#include "comprelie/error.hpp"

#include <ostream>

namespace comprelie {

Vec zero_vec(std::size_t dim) { return Vec(dim); }

Vec unit_vec(std::size_t dim, std::size_t index) {
    Vec v(dim);
    v[index] = 1;
    return v;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

namespace {

void require_same_dim(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw input_error("vector dimension mismatch");
    }
}

}  // namespace

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

Vec vec_scale(const Rational& c, const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = c * v[i];
    }
    return out;
}

void vec_add_scaled(Vec& target, const Rational& c, const Vec& v) {
    require_same_dim(target, v);
    if (c.is_zero()) {
        return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        target[i] += c * v[i];
    }
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            os << ", ";
        }
        os << v[i];
    }
    return os << ")";
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<Vec> rs;
    for (const auto& r : rows) {
        rs.emplace_back(r);
    }
    return from_rows(rs);
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) {
        return Matrix();
    }
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) {
            throw input_error("ragged rows in matrix literal");
        }
        m.set_row(r, rows[r]);
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols) {
    if (cols.empty()) {
        return Matrix();
    }
    Matrix m(cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != m.rows_) {
            throw input_error("ragged columns in matrix literal");
        }
        m.set_col(c, cols[c]);
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        v[c] = (*this)(r, c);
    }
    return v;
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) {
        throw input_error("row dimension mismatch");
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        (*this)(r, c) = v[c];
    }
}

void Matrix::set_col(std::size_t c, const Vec& v) {
    if (v.size() != rows_) {
        throw input_error("column dimension mismatch");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, c) = v[r];
    }
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m(c, r) = (*this)(r, c);
        }
    }
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) {
        throw input_error("block exceeds matrix bounds");
    }
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = (*this)(r0 + r, c0 + c);
        }
    }
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) {
        throw input_error("block exceeds matrix bounds");
    }
    for (std::size_t r = 0; r < m.rows_; ++r) {
        for (std::size_t c = 0; c < m.cols_; ++c) {
            (*this)(r0 + r, c0 + c) = m(r, c);
        }
    }
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if ((*this)(r, c) != Rational(r == c ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) {
        throw input_error("matrix-vector dimension mismatch");
    }
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& m = (*this)(r, c);
            if (!m.is_zero() && !x[c].is_zero()) {
                acc += m * x[c];
            }
        }
        out[r] = acc;
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) {
        throw input_error("matrix product dimension mismatch");
    }
    Matrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < o.cols_; ++c) {
                const Rational& b = o(k, c);
                if (!b.is_zero()) {
                    out(r, c) += a * b;
                }
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw input_error("matrix sum dimension mismatch");
    }
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = data_[k] + o.data_[k];
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw input_error("matrix difference dimension mismatch");
    }
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = data_[k] - o.data_[k];
    }
    return out;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = c * data_[k];
    }
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) {
        throw input_error("hstack row mismatch");
    }
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) {
        throw input_error("vstack column mismatch");
    }
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) {
            os << "; ";
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) {
                os << " ";
            }
            os << m(r, c);
        }
    }
    return os << "]";
}

}  // namespace comprelie
