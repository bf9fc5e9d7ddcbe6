// Copyright 2026 The povmcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POVMCOH_LINALG_HPP
#define POVMCOH_LINALG_HPP

// Small dense complex matrices: the numeric carrier for POVM components,
// density matrices, Kraus operators and SDP blocks. Everything here is sized
// for desk-scale dimensions (d up to a few dozen), stored row-major.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace povmcoh {

using Complex = std::complex<double>;

/// Raised when an input violates a numerical invariant (hermiticity, PSD,
/// completeness, finiteness). Carries the offending location and magnitude.
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string &what, std::size_t index = 0, double magnitude = 0.0)
        : std::runtime_error(what), index_(index), magnitude_(magnitude) {}

    std::size_t index() const noexcept { return index_; }
    double magnitude() const noexcept { return magnitude_; }

private:
    std::size_t index_;
    double magnitude_;
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string describe(const std::string &msg, std::size_t i, std::size_t j, double mag) {
    std::ostringstream os;
    os << msg << " at (" << i << "," << j << "), magnitude " << mag;
    return os.str();
}

} // namespace detail

/// Square complex matrix with no symmetry invariant (Kraus operators,
/// unitaries, intermediate products).
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    Matrix(std::size_t dim, std::vector<Complex> row_major) : dim_(dim), data_(std::move(row_major)) {
        if (data_.size() != dim_ * dim_) {
            throw DimensionError("matrix data size does not match dim*dim");
        }
    }

    static Matrix identity(std::size_t dim) {
        Matrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static Matrix diagonal(const std::vector<Complex> &diag) {
        Matrix m(diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) {
            m(i, i) = diag[i];
        }
        return m;
    }

    /// |u><v|
    static Matrix outer(const std::vector<Complex> &u, const std::vector<Complex> &v) {
        if (u.size() != v.size()) {
            throw DimensionError("outer product of vectors with different lengths");
        }
        Matrix m(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            for (std::size_t j = 0; j < v.size(); ++j) {
                m(i, j) = u[i] * std::conj(v[j]);
            }
        }
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }
    Complex &operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    const std::vector<Complex> &data() const noexcept { return data_; }

    Matrix adjoint() const {
        Matrix r(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                r(j, i) = std::conj((*this)(i, j));
            }
        }
        return r;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto &z : data_) {
            m = std::max(m, std::abs(z));
        }
        return m;
    }

    bool all_finite() const {
        return std::all_of(data_.begin(), data_.end(),
                           [](const Complex &z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
    }

    Matrix &operator+=(const Matrix &o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] += o.data_[k];
        }
        return *this;
    }
    Matrix &operator-=(const Matrix &o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] -= o.data_[k];
        }
        return *this;
    }
    Matrix &operator*=(Complex s) {
        for (auto &z : data_) {
            z *= s;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) { return a *= -1.0; }

    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        a.check_same(b);
        const std::size_t d = a.dim_;
        Matrix r(d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex(0.0)) {
                    continue;
                }
                for (std::size_t j = 0; j < d; ++j) {
                    r(i, j) += aik * b(k, j);
                }
            }
        }
        return r;
    }

    std::vector<Complex> apply(const std::vector<Complex> &v) const {
        if (v.size() != dim_) {
            throw DimensionError("matrix-vector dimension mismatch");
        }
        std::vector<Complex> r(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                r[i] += (*this)(i, j) * v[j];
            }
        }
        return r;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    void check_same(const Matrix &o) const {
        if (o.dim_ != dim_) {
            throw DimensionError("matrix dimension mismatch: " + std::to_string(dim_) + " vs " +
                                 std::to_string(o.dim_));
        }
    }

    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

using GeneralMatrix = Matrix;

/// Scale-relative hermiticity tolerance: max |m_ij - conj(m_ji)| allowed.
inline double hermiticity_tolerance(const Matrix &m) { return 1e-9 * (1.0 + m.max_abs()); }

/// Complex Hermitian matrix. Construction from a general matrix checks the
/// asymmetry against `hermiticity_tolerance` and stores the exact Hermitian
/// part, so downstream code can rely on exact symmetry.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(std::size_t dim) : m_(dim) {
        if (dim == 0) {
            throw DimensionError("Hermitian matrix must have dim >= 1");
        }
    }
    explicit HermitianMatrix(const Matrix &m) : m_(checked(m)) {}

    /// Hermitian part (m + m^dagger)/2, no tolerance check.
    static HermitianMatrix hermitian_part(const Matrix &m) {
        HermitianMatrix h;
        h.m_ = Matrix(m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i) {
            h.m_(i, i) = m(i, i).real();
            for (std::size_t j = i + 1; j < m.dim(); ++j) {
                const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
                h.m_(i, j) = z;
                h.m_(j, i) = std::conj(z);
            }
        }
        return h;
    }

    static HermitianMatrix identity(std::size_t dim) { return HermitianMatrix(Matrix::identity(dim)); }

    static HermitianMatrix diagonal(const std::vector<double> &diag) {
        HermitianMatrix h(diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) {
            h.m_(i, i) = diag[i];
        }
        return h;
    }

    /// |v><v|
    static HermitianMatrix projector(const std::vector<Complex> &v) {
        return hermitian_part(Matrix::outer(v, v));
    }

    std::size_t dim() const noexcept { return m_.dim(); }
    const Complex &operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix &matrix() const noexcept { return m_; }
    operator const Matrix &() const noexcept { return m_; }

    double trace() const { return m_.trace().real(); }
    double max_abs() const { return m_.max_abs(); }

    std::vector<double> diagonal_values() const {
        std::vector<double> d(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            d[i] = m_(i, i).real();
        }
        return d;
    }

    /// Re Tr[this * o]; both Hermitian so the trace is real.
    double inner(const HermitianMatrix &o) const {
        if (o.dim() != dim()) {
            throw DimensionError("inner product dimension mismatch");
        }
        double s = 0.0;
        for (std::size_t i = 0; i < dim(); ++i) {
            for (std::size_t j = 0; j < dim(); ++j) {
                s += (m_(i, j) * o.m_(j, i)).real();
            }
        }
        return s;
    }

    /// <v| this |v>
    double expectation(const std::vector<Complex> &v) const {
        if (v.size() != dim()) {
            throw DimensionError("expectation dimension mismatch");
        }
        Complex s = 0.0;
        for (std::size_t i = 0; i < dim(); ++i) {
            Complex row = 0.0;
            for (std::size_t j = 0; j < dim(); ++j) {
                row += m_(i, j) * v[j];
            }
            s += std::conj(v[i]) * row;
        }
        return s.real();
    }

    HermitianMatrix &operator+=(const HermitianMatrix &o) {
        m_ += o.m_;
        return *this;
    }
    HermitianMatrix &operator-=(const HermitianMatrix &o) {
        m_ -= o.m_;
        return *this;
    }
    HermitianMatrix &operator*=(double s) {
        m_ *= s;
        return *this;
    }
    friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix &b) { return a += b; }
    friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix &b) { return a -= b; }
    friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }
    friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }
    friend HermitianMatrix operator-(HermitianMatrix a) { return a *= -1.0; }

    HermitianMatrix &add_to_diagonal(std::size_t i, double v) {
        m_(i, i) += v;
        return *this;
    }

    friend bool operator==(const HermitianMatrix &, const HermitianMatrix &) = default;

private:
    static Matrix checked(const Matrix &m) {
        if (m.dim() == 0) {
            throw DimensionError("Hermitian matrix must have dim >= 1");
        }
        for (std::size_t i = 0; i < m.dim(); ++i) {
            for (std::size_t j = 0; j < m.dim(); ++j) {
                const Complex z = m(i, j);
                if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                    throw ValidationError(detail::describe("non-finite entry", i, j, std::abs(z)), i * m.dim() + j,
                                          std::abs(z));
                }
            }
        }
        const double tol = hermiticity_tolerance(m);
        for (std::size_t i = 0; i < m.dim(); ++i) {
            for (std::size_t j = i; j < m.dim(); ++j) {
                const double asym = std::abs(m(i, j) - std::conj(m(j, i)));
                if (asym > tol) {
                    throw ValidationError(detail::describe("matrix is not Hermitian", i, j, asym), i * m.dim() + j,
                                          asym);
                }
            }
        }
        return hermitian_part(m).m_;
    }

    Matrix m_;
};

/// Eigenvalues in ascending order; column k of `vectors` is the eigenvector
/// for `values[k]`, so m = V diag(values) V^dagger.
struct EigenSystem {
    std::vector<double> values;
    Matrix vectors;

    std::vector<Complex> vector(std::size_t k) const {
        std::vector<Complex> v(vectors.dim());
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = vectors(i, k);
        }
        return v;
    }
};

/// Cyclic complex Jacobi. Each rotation first rotates the phase of the pivot
/// off-diagonal element to a real value, then applies a real plane rotation.
inline EigenSystem eigh(const HermitianMatrix &h) {
    const std::size_t d = h.dim();
    Matrix a = h.matrix();
    Matrix v = Matrix::identity(d);

    const double scale = std::max(h.max_abs(), 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                off += std::norm(a(p, q));
            }
        }
        if (std::sqrt(off) <= 1e-15 * scale) {
            break;
        }
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const double b = std::abs(a(p, q));
                if (b <= 1e-300 || b <= 1e-18 * scale) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const Complex phase = a(p, q) / b; // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * b);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) {
                    t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // Unitary U acting on the (p,q) plane:
                //   U e_p = c e_p - s conj(phase) e_q,  U e_q = s e_p + c conj(phase) e_q
                const Complex upp = c;
                const Complex uqp = -s * std::conj(phase);
                const Complex upq = s;
                const Complex uqq = c * std::conj(phase);
                // a <- a U (columns p, q)
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                // a <- U^dagger a (rows p, q)
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    EigenSystem es{std::vector<double>(d), Matrix(d)};
    for (std::size_t k = 0; k < d; ++k) {
        es.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < d; ++i) {
            es.vectors(i, k) = v(i, order[k]);
        }
    }
    return es;
}

inline double eig_min(const HermitianMatrix &m) { return eigh(m).values.front(); }
inline double eig_max(const HermitianMatrix &m) { return eigh(m).values.back(); }

inline bool is_psd(const HermitianMatrix &m, double tol) { return eig_min(m) >= -tol; }

/// Rebuild V diag(f(lambda)) V^dagger.
template <typename F>
HermitianMatrix spectral_map(const EigenSystem &es, F &&f) {
    const std::size_t d = es.vectors.dim();
    Matrix r(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double fk = f(es.values[k]);
        if (fk == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < d; ++i) {
            const Complex vik = es.vectors(i, k) * fk;
            for (std::size_t j = 0; j < d; ++j) {
                r(i, j) += vik * std::conj(es.vectors(j, k));
            }
        }
    }
    return HermitianMatrix::hermitian_part(r);
}

/// Nearest PSD matrix in Frobenius norm (negative eigenvalues clipped).
inline HermitianMatrix psd_part(const HermitianMatrix &m) {
    return spectral_map(eigh(m), [](double x) { return x > 0.0 ? x : 0.0; });
}

/// K^dagger m K, re-symmetrized.
inline HermitianMatrix conj_sandwich(const GeneralMatrix &k, const HermitianMatrix &m) {
    if (k.dim() != m.dim()) {
        throw DimensionError("conj_sandwich: Kraus operator dim " + std::to_string(k.dim()) +
                             " does not match matrix dim " + std::to_string(m.dim()));
    }
    return HermitianMatrix::hermitian_part(k.adjoint() * (m.matrix() * k));
}

/// K m K^dagger, re-symmetrized (Schrodinger-picture action on a state).
inline HermitianMatrix sandwich(const GeneralMatrix &k, const HermitianMatrix &m) {
    if (k.dim() != m.dim()) {
        throw DimensionError("sandwich: dimension mismatch");
    }
    return HermitianMatrix::hermitian_part(k * (m.matrix() * k.adjoint()));
}

/// Dense real square matrix, used by the tomography inversion and the SDP
/// normal equations.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RealMatrix transpose() const {
        RealMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    friend RealMatrix operator*(const RealMatrix &a, const RealMatrix &b) {
        if (a.cols_ != b.rows_) {
            throw DimensionError("real matrix product shape mismatch");
        }
        RealMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const double aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    r(i, j) += aik * b(k, j);
                }
            }
        }
        return r;
    }

    std::vector<double> apply(const std::vector<double> &x) const {
        if (x.size() != cols_) {
            throw DimensionError("real matrix-vector shape mismatch");
        }
        std::vector<double> y(rows_, 0.0);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                y[i] += (*this)(i, j) * x[j];
            }
        }
        return y;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// LU factorization with partial pivoting of a square real matrix.
class LuFactorization {
public:
    explicit LuFactorization(RealMatrix a) : lu_(std::move(a)), perm_(lu_.rows()) {
        if (lu_.rows() != lu_.cols()) {
            throw DimensionError("LU of non-square matrix");
        }
        const std::size_t n = lu_.rows();
        std::iota(perm_.begin(), perm_.end(), std::size_t{0});
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (std::abs(lu_(i, k)) > std::abs(lu_(piv, k))) {
                    piv = i;
                }
            }
            if (lu_(piv, k) == 0.0) {
                singular_ = true;
                continue;
            }
            if (piv != k) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(lu_(k, j), lu_(piv, j));
                }
                std::swap(perm_[k], perm_[piv]);
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                lu_(i, k) /= lu_(k, k);
                const double f = lu_(i, k);
                for (std::size_t j = k + 1; j < n; ++j) {
                    lu_(i, j) -= f * lu_(k, j);
                }
            }
        }
    }

    bool singular() const noexcept { return singular_; }

    std::vector<double> solve(const std::vector<double> &b) const {
        const std::size_t n = lu_.rows();
        if (b.size() != n) {
            throw DimensionError("LU solve shape mismatch");
        }
        if (singular_) {
            throw ValidationError("LU solve on a singular matrix");
        }
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = b[perm_[i]];
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                x[i] -= lu_(i, j) * x[j];
            }
        }
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j) {
                x[i] -= lu_(i, j) * x[j];
            }
            x[i] /= lu_(i, i);
        }
        return x;
    }

private:
    RealMatrix lu_;
    std::vector<std::size_t> perm_;
    bool singular_ = false;
};

/// Symmetric eigen-decomposition of a real symmetric matrix (reuses the
/// complex Jacobi on a real-valued Hermitian matrix).
inline EigenSystem eigh_real_symmetric(const RealMatrix &a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("eigh_real_symmetric: non-square");
    }
    Matrix m(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m(i, j) = 0.5 * (a(i, j) + a(j, i));
        }
    }
    return eigh(HermitianMatrix::hermitian_part(m));
}

} // namespace povmcoh

#endif // POVMCOH_LINALG_HPP
