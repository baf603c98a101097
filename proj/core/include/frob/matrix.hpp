#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "frob/errors.hpp"
#include "frob/rational.hpp"

namespace frob {

// Dense matrix over an exact field K (Rational or QuadExt).  Row-major.
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw MathError("Matrix: negative dimension");
    }
    Matrix(std::initializer_list<std::initializer_list<K>> rows) {
        r_ = static_cast<int>(rows.size());
        c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
        d_.reserve(static_cast<size_t>(r_) * c_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c_) throw MathError("Matrix: ragged initializer");
            for (const auto& x : row) d_.push_back(x);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(Rational(1));
        return m;
    }
    // E_{ij}: single 1 in row i, column j (0-based).
    static Matrix unit(int rows, int cols, int i, int j) {
        Matrix m(rows, cols);
        m(i, j) = K(Rational(1));
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool is_square() const { return r_ == c_; }
    bool is_zero() const {
        for (const auto& x : d_)
            if (!x.is_zero()) return false;
        return true;
    }

    K& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
    const K& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix operator-() const {
        Matrix m(r_, c_);
        for (size_t k = 0; k < d_.size(); ++k) m.d_[k] = -d_[k];
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b, "+");
        Matrix m(a.r_, a.c_);
        for (size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = a.d_[k] + b.d_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b, "-");
        Matrix m(a.r_, a.c_);
        for (size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = a.d_[k] - b.d_[k];
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw MathError("Matrix: incompatible shapes for *");
        Matrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const K& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.c_; ++j) m(i, j) += aik * b(k, j);
            }
        return m;
    }
    Matrix operator*(const K& s) const {
        Matrix m(r_, c_);
        for (size_t k = 0; k < d_.size(); ++k) m.d_[k] = d_[k] * s;
        return m;
    }
    Matrix& operator+=(const Matrix& o) { *this = *this + o; return *this; }
    Matrix& operator-=(const Matrix& o) { *this = *this - o; return *this; }

    Matrix transpose() const {
        Matrix m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    K trace() const {
        if (!is_square()) throw MathError("trace: matrix is not square");
        K t{};
        for (int i = 0; i < r_; ++i) t += (*this)(i, i);
        return t;
    }

    // Matrix * column vector.
    std::vector<K> apply(const std::vector<K>& v) const {
        if (static_cast<int>(v.size()) != c_) throw MathError("Matrix::apply: size mismatch");
        std::vector<K> out(static_cast<size_t>(r_));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
        return out;
    }

    // Row-major flattening (used to treat gl(n) as an n^2-dim vector space).
    std::vector<K> vec() const { return d_; }
    static Matrix unvec(const std::vector<K>& v, int rows, int cols) {
        if (static_cast<int>(v.size()) != rows * cols) throw MathError("Matrix::unvec: size mismatch");
        Matrix m(rows, cols);
        m.d_ = v;
        return m;
    }

    Matrix submatrix(int i0, int j0, int nrows, int ncols) const {
        Matrix m(nrows, ncols);
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < r_; ++i) {
            os << (i ? "; " : "");
            for (int j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j).to_string();
        }
        os << "]";
        return os.str();
    }

private:
    void check_same_shape(const Matrix& o, const char* op) const {
        if (r_ != o.r_ || c_ != o.c_)
            throw MathError(std::string("Matrix: shape mismatch for ") + op);
    }
    int r_ = 0, c_ = 0;
    std::vector<K> d_;
};

template <class K>
Matrix<K> commutator(const Matrix<K>& a, const Matrix<K>& b) {
    return a * b - b * a;
}

template <class K>
Matrix<K> block_diag(const std::vector<Matrix<K>>& blocks) {
    int n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) throw MathError("block_diag: non-square block");
        n += b.rows();
    }
    Matrix<K> m(n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

using MatQ = Matrix<Rational>;
using VecQ = std::vector<Rational>;

} // namespace frob
