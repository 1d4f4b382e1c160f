#include "seqhom/dense.hpp"

#include <algorithm>
#include <cmath>

namespace seqhom {

DenseMatrix DenseMatrix::identity(index_t n) {
    DenseMatrix m(n, n);
    for (index_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_csr(const CsrMatrix& a) {
    DenseMatrix m(a.nrows, a.ncols);
    for (index_t i = 0; i < a.nrows; ++i)
        for (index_t k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k)
            m(i, a.col_indices[k]) = a.values[k];
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(ncols, nrows);
    for (index_t i = 0; i < nrows; ++i)
        for (index_t j = 0; j < ncols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data) m = std::max(m, std::abs(v));
    return m;
}

double DenseMatrix::frobenius() const {
    double s = 0.0;
    for (double v : data) s += v * v;
    return std::sqrt(s);
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    require(a.ncols == b.nrows, "matmul: shape mismatch");
    DenseMatrix c(a.nrows, b.ncols);
    for (index_t i = 0; i < a.nrows; ++i) {
        for (index_t k = 0; k < a.ncols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (index_t j = 0; j < b.ncols; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Vec matvec(const DenseMatrix& a, const Vec& x) {
    require(static_cast<index_t>(x.size()) == a.ncols, "matvec: size mismatch");
    Vec y(static_cast<std::size_t>(a.nrows), 0.0);
    for (index_t i = 0; i < a.nrows; ++i) {
        double s = 0.0;
        for (index_t j = 0; j < a.ncols; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

DenseMatrix dense_add(double alpha, const DenseMatrix& a, double beta,
                      const DenseMatrix& b) {
    require(a.nrows == b.nrows && a.ncols == b.ncols, "dense_add: shape mismatch");
    DenseMatrix c(a.nrows, a.ncols);
    for (std::size_t i = 0; i < a.data.size(); ++i)
        c.data[i] = alpha * a.data[i] + beta * b.data[i];
    return c;
}

DenseFactorization dense_lu_factor(const DenseMatrix& a, index_t size_cap) {
    require(a.nrows == a.ncols, "dense_lu_factor: not square");
    if (a.nrows > size_cap)
        throw ContractError("dense_lu_factor: dimension exceeds size cap");
    const index_t n = a.nrows;

    double max_row_norm = 0.0;
    for (index_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (index_t j = 0; j < n; ++j) s += std::abs(a(i, j));
        max_row_norm = std::max(max_row_norm, s);
    }
    const double pivot_floor = 1e-14 * max_row_norm;

    DenseFactorization f;
    f.n_ = n;
    f.lu_ = a.data;
    f.piv_.resize(static_cast<std::size_t>(n));
    Vec& lu = f.lu_;

    for (index_t k = 0; k < n; ++k) {
        index_t p = k;
        double best = std::abs(lu[k * n + k]);
        for (index_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu[i * n + k]);
            if (v > best) {
                best = v;
                p = i;
            }
        }
        f.piv_[k] = p;
        if (best <= pivot_floor || best == 0.0)
            throw SingularMatrixError("dense_lu_factor: singular to tolerance");
        if (p != k)
            for (index_t j = 0; j < n; ++j)
                std::swap(lu[k * n + j], lu[p * n + j]);
        const double pivot = lu[k * n + k];
        for (index_t i = k + 1; i < n; ++i) {
            const double lik = lu[i * n + k] / pivot;
            lu[i * n + k] = lik;
            if (lik == 0.0) continue;
            const double* urow = &lu[k * n];
            double* irow = &lu[i * n];
            for (index_t j = k + 1; j < n; ++j) irow[j] -= lik * urow[j];
        }
    }
    return f;
}

DenseFactorization dense_lu_factor(const CsrMatrix& a, index_t size_cap) {
    require(a.nrows == a.ncols, "dense_lu_factor: not square");
    if (a.nrows > size_cap)
        throw ContractError("dense_lu_factor: dimension exceeds size cap");
    return dense_lu_factor(DenseMatrix::from_csr(a), size_cap);
}

Vec DenseFactorization::solve(const Vec& rhs) const {
    require(static_cast<index_t>(rhs.size()) == n_, "solve: size mismatch");
    Vec x = rhs;
    for (index_t k = 0; k < n_; ++k)
        if (piv_[k] != k) std::swap(x[k], x[piv_[k]]);
    for (index_t i = 1; i < n_; ++i) {
        double s = x[i];
        for (index_t j = 0; j < i; ++j) s -= lu_[i * n_ + j] * x[j];
        x[i] = s;
    }
    for (index_t i = n_ - 1; i >= 0; --i) {
        double s = x[i];
        for (index_t j = i + 1; j < n_; ++j) s -= lu_[i * n_ + j] * x[j];
        x[i] = s / lu_[i * n_ + i];
    }
    return x;
}

Vec DenseFactorization::solve_transpose(const Vec& rhs) const {
    require(static_cast<index_t>(rhs.size()) == n_, "solve_transpose: size mismatch");
    // A = P^T L U  =>  A^T z = r solved as U^T w = r, L^T v = w, z = P^T v
    Vec x = rhs;
    for (index_t i = 0; i < n_; ++i) {
        double s = x[i];
        for (index_t j = 0; j < i; ++j) s -= lu_[j * n_ + i] * x[j];
        x[i] = s / lu_[i * n_ + i];
    }
    for (index_t i = n_ - 1; i >= 0; --i) {
        double s = x[i];
        for (index_t j = i + 1; j < n_; ++j) s -= lu_[j * n_ + i] * x[j];
        x[i] = s;
    }
    for (index_t k = n_ - 1; k >= 0; --k)
        if (piv_[k] != k) std::swap(x[k], x[piv_[k]]);
    return x;
}

BandFactorization band_lu_factor(const CsrMatrix& a) {
    require(a.nrows == a.ncols, "band_lu_factor: not square");
    const index_t n = a.nrows;
    index_t kl = 0, ku = 0;
    double max_row_norm = 0.0;
    for (index_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (index_t k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k) {
            const index_t j = a.col_indices[k];
            kl = std::max(kl, i - j);
            ku = std::max(ku, j - i);
            s += std::abs(a.values[k]);
        }
        max_row_norm = std::max(max_row_norm, s);
    }
    const double pivot_floor = 1e-14 * max_row_norm;

    BandFactorization f;
    f.n_ = n;
    f.kl_ = kl;
    f.ku_ = ku;
    f.ldab_ = 2 * kl + ku + 1;
    f.ab_.assign(static_cast<std::size_t>(f.ldab_) * n, 0.0);
    f.piv_.resize(static_cast<std::size_t>(n));
    // entry (i,j) lives at ab[kl + ku + i - j + j*ldab]
    auto ab = [&](index_t i, index_t j) -> double& {
        return f.ab_[(kl + ku + i - j) + j * f.ldab_];
    };
    for (index_t i = 0; i < n; ++i)
        for (index_t k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k)
            ab(i, a.col_indices[k]) = a.values[k];

    const index_t kv = kl + ku;  // fill-extended upper bandwidth
    for (index_t k = 0; k < n; ++k) {
        const index_t im = std::min(kl, n - 1 - k);
        index_t p = k;
        double best = std::abs(ab(k, k));
        for (index_t i = 1; i <= im; ++i) {
            const double v = std::abs(ab(k + i, k));
            if (v > best) {
                best = v;
                p = k + i;
            }
        }
        f.piv_[k] = p;
        if (best <= pivot_floor || best == 0.0)
            throw SingularMatrixError("band_lu_factor: singular to tolerance");
        const index_t jmax = std::min(k + kv, n - 1);
        if (p != k)
            for (index_t j = k; j <= jmax; ++j) std::swap(ab(k, j), ab(p, j));
        const double pivot = ab(k, k);
        for (index_t i = 1; i <= im; ++i) {
            const double lik = ab(k + i, k) / pivot;
            ab(k + i, k) = lik;
            if (lik == 0.0) continue;
            for (index_t j = k + 1; j <= jmax; ++j)
                ab(k + i, j) -= lik * ab(k, j);
        }
    }
    return f;
}

Vec BandFactorization::solve(const Vec& rhs) const {
    require(static_cast<index_t>(rhs.size()) == n_, "band solve: size mismatch");
    auto ab = [&](index_t i, index_t j) -> double {
        return ab_[(kl_ + ku_ + i - j) + j * ldab_];
    };
    Vec x = rhs;
    for (index_t k = 0; k < n_; ++k) {
        if (piv_[k] != k) std::swap(x[k], x[piv_[k]]);
        const index_t im = std::min(kl_, n_ - 1 - k);
        for (index_t i = 1; i <= im; ++i) x[k + i] -= ab(k + i, k) * x[k];
    }
    for (index_t i = n_ - 1; i >= 0; --i) {
        double s = x[i];
        const index_t jmax = std::min(i + kl_ + ku_, n_ - 1);
        for (index_t j = i + 1; j <= jmax; ++j) s -= ab(i, j) * x[j];
        x[i] = s / ab(i, i);
    }
    return x;
}

Vec jacobi_eigensolver(const DenseMatrix& a, DenseMatrix* eigenvectors) {
    require(a.nrows == a.ncols, "jacobi_eigensolver: not square");
    const index_t n = a.nrows;
    require(n <= 2000, "jacobi_eigensolver: dimension exceeds cap");
    const double scale = std::max(1.0, a.max_abs());
    for (index_t i = 0; i < n; ++i)
        for (index_t j = i + 1; j < n; ++j)
            require(std::abs(a(i, j) - a(j, i)) <= 1e-12 * scale,
                    "jacobi_eigensolver: input not symmetric");

    DenseMatrix m = a;
    DenseMatrix q = DenseMatrix::identity(n);
    const double frob = std::max(a.frobenius(), 1e-300);
    const double target = 1e-13 * frob;

    auto offdiag = [&]() {
        double s = 0.0;
        for (index_t i = 0; i < n; ++i)
            for (index_t j = i + 1; j < n; ++j) s += 2.0 * m(i, j) * m(i, j);
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 60 && offdiag() > target; ++sweep) {
        for (index_t p = 0; p < n - 1; ++p) {
            for (index_t r = p + 1; r < n; ++r) {
                const double apq = m(p, r);
                if (std::abs(apq) <= 1e-300) continue;
                const double tau = (m(r, r) - m(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (index_t k = 0; k < n; ++k) {
                    const double mkp = m(k, p), mkr = m(k, r);
                    m(k, p) = c * mkp - s * mkr;
                    m(k, r) = s * mkp + c * mkr;
                }
                for (index_t k = 0; k < n; ++k) {
                    const double mpk = m(p, k), mrk = m(r, k);
                    m(p, k) = c * mpk - s * mrk;
                    m(r, k) = s * mpk + c * mrk;
                }
                for (index_t k = 0; k < n; ++k) {
                    const double qkp = q(k, p), qkr = q(k, r);
                    q(k, p) = c * qkp - s * qkr;
                    q(k, r) = s * qkp + c * qkr;
                }
            }
        }
    }

    std::vector<index_t> order(static_cast<std::size_t>(n));
    for (index_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](index_t x, index_t y) { return m(x, x) < m(y, y); });
    Vec eig(static_cast<std::size_t>(n));
    for (index_t i = 0; i < n; ++i) eig[i] = m(order[i], order[i]);
    if (eigenvectors) {
        *eigenvectors = DenseMatrix(n, n);
        for (index_t j = 0; j < n; ++j)
            for (index_t i = 0; i < n; ++i)
                (*eigenvectors)(i, j) = q(i, order[j]);
    }
    return eig;
}

DenseMatrix cholesky(const DenseMatrix& a) {
    require(a.nrows == a.ncols, "cholesky: not square");
    const index_t n = a.nrows;
    DenseMatrix l(n, n);
    for (index_t i = 0; i < n; ++i) {
        for (index_t j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (index_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (s <= 0.0)
                    throw IndefiniteOperatorError("cholesky: matrix not SPD");
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return l;
}

DenseMatrix symmetric_inverse_sqrt(const DenseMatrix& p) {
    DenseMatrix q;
    const Vec eig = jacobi_eigensolver(p, &q);
    const index_t n = p.nrows;
    for (double e : eig)
        if (e <= 0.0)
            throw IndefiniteOperatorError("symmetric_inverse_sqrt: matrix not SPD");
    DenseMatrix r(n, n);
    for (index_t i = 0; i < n; ++i)
        for (index_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (index_t k = 0; k < n; ++k)
                s += q(i, k) * q(j, k) / std::sqrt(eig[k]);
            r(i, j) = s;
        }
    return r;
}

}  // namespace seqhom
