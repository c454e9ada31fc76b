#pragma once

#include <cmath>
#include <vector>

#include "mubkit/phase_ring.hpp"
#include "mubkit/types.hpp"

namespace mubkit {

inline Complex conj_of(const Complex& z) { return std::conj(z); }
inline ExactAmplitude conj_of(const ExactAmplitude& a) { return a.conj(); }

/// Small dense matrix over Complex or ExactAmplitude entries. Dimensions here
/// never exceed kMaxDimension, so everything is plain row-major storage with
/// cubic products.
template <typename T>
class DenseMatrix {
public:
    DenseMatrix(int rows, int cols, const T& init)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, init) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    DenseMatrix adjoint() const {
        DenseMatrix out(cols_, rows_, a_[0]);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out(c, r) = conj_of((*this)(r, c));
        return out;
    }

    DenseMatrix transpose() const {
        DenseMatrix out(cols_, rows_, a_[0]);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    DenseMatrix operator*(const DenseMatrix& other) const {
        DenseMatrix out(rows_, other.cols_, zero_like());
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                const T& v = (*this)(r, k);
                for (int c = 0; c < other.cols_; ++c) out(r, c) = out(r, c) + v * other(k, c);
            }
        return out;
    }

    DenseMatrix operator+(const DenseMatrix& other) const {
        DenseMatrix out(*this);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + other.a_[i];
        return out;
    }

    DenseMatrix operator-(const DenseMatrix& other) const {
        DenseMatrix out(*this);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - other.a_[i];
        return out;
    }

    template <typename S>
    DenseMatrix operator*(const S& scalar) const {
        DenseMatrix out(*this);
        for (auto& v : out.a_) v = v * scalar;
        return out;
    }

    DenseMatrix pow(int e) const {
        DenseMatrix result = identity_like();
        DenseMatrix base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        std::vector<T> y(static_cast<size_t>(rows_), zero_like());
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) y[r] = y[r] + (*this)(r, c) * x[c];
        return y;
    }

private:
    T zero_like() const {
        if constexpr (std::is_same_v<T, ExactAmplitude>) {
            return ExactAmplitude::zero(a_[0].d());
        } else {
            return T(0);
        }
    }

    DenseMatrix identity_like() const {
        T one = [&] {
            if constexpr (std::is_same_v<T, ExactAmplitude>) {
                return ExactAmplitude::one(a_[0].d());
            } else {
                return T(1);
            }
        }();
        DenseMatrix out(rows_, cols_, zero_like());
        for (int r = 0; r < rows_; ++r) out(r, r) = one;
        return out;
    }

    int rows_, cols_;
    std::vector<T> a_;
};

using ComplexMatrix = DenseMatrix<Complex>;
using ExactMatrix = DenseMatrix<ExactAmplitude>;

inline ComplexMatrix complex_zeros(int rows, int cols) { return {rows, cols, Complex(0.0)}; }

inline ComplexMatrix complex_identity(int n) {
    ComplexMatrix m = complex_zeros(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

inline ExactMatrix exact_zeros(int d, int rows, int cols) {
    return {rows, cols, ExactAmplitude::zero(d)};
}

inline ExactMatrix exact_identity(int d, int n) {
    ExactMatrix m = exact_zeros(d, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ExactAmplitude::one(d);
    return m;
}

inline double max_abs(const ComplexMatrix& m) {
    double mx = 0.0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) mx = std::max(mx, std::abs(m(r, c)));
    return mx;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return max_abs(a - b);
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out = complex_zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ra = 0; ra < a.rows(); ++ra)
        for (int ca = 0; ca < a.cols(); ++ca)
            for (int rb = 0; rb < b.rows(); ++rb)
                for (int cb = 0; cb < b.cols(); ++cb)
                    out(ra * b.rows() + rb, ca * b.cols() + cb) = a(ra, ca) * b(rb, cb);
    return out;
}

/// Exact entrywise equality of reduced forms.
inline bool exact_equal(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (!a(r, c).equals(b(r, c))) return false;
    return true;
}

inline bool exact_is_identity(const ExactMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m(r, c).equals_integer(r == c ? 1 : 0)) return false;
    return true;
}

inline bool exact_is_zero(const ExactMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) return false;
    return true;
}

inline ComplexMatrix to_complex(const ExactMatrix& m) {
    ComplexMatrix out = complex_zeros(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_complex();
    return out;
}

}  // namespace mubkit
