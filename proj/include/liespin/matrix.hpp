#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liespin/scalar.hpp"

namespace liespin {

using Vector = std::vector<Scalar>;

inline bool vector_is_zero(const Vector& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

inline Vector vector_add(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vector_add: size mismatch");
    Vector out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] + y[k];
    return out;
}

inline Vector vector_sub(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vector_sub: size mismatch");
    Vector out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] - y[k];
    return out;
}

inline Vector vector_scale(const Scalar& a, const Vector& x) {
    Vector out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = a * x[k];
    return out;
}

inline Vector unit_vector(std::size_t dim, std::size_t index) {
    Vector out(dim, Scalar(0));
    out.at(index) = Scalar(1);
    return out;
}

/// Dense matrix over Q(i, sqrt2). Shapes are checked on every operation.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Scalar(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
        return m;
    }

    /// Row-major initializer for small literal matrices of integers.
    static Matrix from_int_rows(std::initializer_list<std::initializer_list<int>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        Matrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("Matrix::from_int_rows: ragged rows");
            std::size_t j = 0;
            for (int v : row) m(i, j++) = Scalar(v);
            ++i;
        }
        return m;
    }

    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("Matrix::from_columns: bad column length");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) {
        check_index(i, j);
        return e_[i * cols_ + j];
    }
    const Scalar& operator()(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return e_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o, "Matrix::operator+");
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
        return m;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o, "Matrix::operator-");
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
        return m;
    }
    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) {
            throw std::invalid_argument("Matrix::operator*: shape mismatch " + shape_str() + " vs " +
                                        o.shape_str());
        }
        Matrix m(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& aik = e_[i * cols_ + k];
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Scalar& bkj = o.e_[k * o.cols_ + j];
                    if (bkj.is_zero()) continue;
                    m.e_[i * o.cols_ + j] += aik * bkj;
                }
            }
        }
        return m;
    }

    Matrix operator*(const Scalar& a) const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = a * e_[k];
        return m;
    }

    Vector apply(const Vector& v) const {
        if (v.size() != cols_) {
            throw std::invalid_argument("Matrix::apply: vector length " + std::to_string(v.size()) +
                                        " vs " + shape_str());
        }
        Vector out(rows_, Scalar(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                const Scalar& a = e_[i * cols_ + j];
                if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
            }
        }
        return out;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = e_[i * cols_ + j];
        return m;
    }

    Matrix conj() const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].conj();
        return m;
    }

    Scalar trace() const {
        require_square("Matrix::trace");
        Scalar t(0);
        for (std::size_t k = 0; k < rows_; ++k) t += e_[k * cols_ + k];
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (e_[i * cols_ + j] != e_[j * cols_ + i]) return false;
        return true;
    }

    bool is_real() const {
        for (const auto& x : e_) {
            if (!x.is_real()) return false;
        }
        return true;
    }

    Vector row(std::size_t i) const {
        Vector out(cols_);
        for (std::size_t j = 0; j < cols_; ++j) out[j] = e_[i * cols_ + j];
        return out;
    }
    Vector column(std::size_t j) const {
        Vector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = e_[i * cols_ + j];
        return out;
    }
    void set_column(std::size_t j, const Vector& v) {
        if (v.size() != rows_) throw std::invalid_argument("Matrix::set_column: bad length");
        for (std::size_t i = 0; i < rows_; ++i) e_[i * cols_ + j] = v[i];
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
        if (r0 + h > rows_ || c0 + w > cols_) throw std::invalid_argument("Matrix::block: out of range");
        Matrix m(h, w);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j) m(i, j) = e_[(r0 + i) * cols_ + (c0 + j)];
        return m;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
            throw std::invalid_argument("Matrix::set_block: out of range");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) e_[(r0 + i) * cols_ + (c0 + j)] = b(i, j);
    }

    /// Kronecker product, left factor most significant.
    static Matrix kron(const Matrix& x, const Matrix& y) {
        Matrix m(x.rows_ * y.rows_, x.cols_ * y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) {
                const Scalar& a = x(i, j);
                if (a.is_zero()) continue;
                for (std::size_t k = 0; k < y.rows_; ++k)
                    for (std::size_t l = 0; l < y.cols_; ++l) {
                        if (y(k, l).is_zero()) continue;
                        m(i * y.rows_ + k, j * y.cols_ + l) = a * y(k, l);
                    }
            }
        return m;
    }

    Vector flatten() const { return e_; }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    std::string str() const {
        std::ostringstream out;
        out << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out << (i ? "; " : "");
            for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << e_[i * cols_ + j].str();
        }
        out << "]";
        return out.str();
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) {
            throw std::out_of_range("Matrix: index (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") out of " + shape_str());
        }
    }
    void check_same_shape(const Matrix& o, const char* who) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw std::invalid_argument(std::string(who) + ": shape mismatch " + shape_str() + " vs " +
                                        o.shape_str());
        }
    }
    void require_square(const char* who) const {
        if (!is_square()) throw std::invalid_argument(std::string(who) + ": matrix not square");
    }

    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

inline Matrix operator*(const Scalar& a, const Matrix& m) { return m * a; }

inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

/// x^T G y, the value of the bilinear form G on a pair of coordinate vectors.
inline Scalar form_value(const Matrix& g, const Vector& x, const Vector& y) {
    Vector gy = g.apply(y);
    if (x.size() != gy.size()) throw std::invalid_argument("form_value: size mismatch");
    Scalar out(0);
    for (std::size_t k = 0; k < x.size(); ++k) out += x[k] * gy[k];
    return out;
}

/// Block-diagonal assembly.
inline Matrix block_diag(const std::vector<Matrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(r, c);
    std::size_t i = 0, j = 0;
    for (const auto& b : blocks) {
        m.set_block(i, j, b);
        i += b.rows();
        j += b.cols();
    }
    return m;
}

}  // namespace liespin
