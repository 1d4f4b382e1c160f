#ifndef SEQHOM_DENSE_HPP
#define SEQHOM_DENSE_HPP

#include "seqhom/common.hpp"
#include "seqhom/csr.hpp"

namespace seqhom {

/// Row-major dense matrix, used by the oracles, the spectral lab, and the
/// small direct solves inside the preconditioners.
struct DenseMatrix {
    index_t nrows = 0;
    index_t ncols = 0;
    Vec data;

    DenseMatrix() = default;
    DenseMatrix(index_t r, index_t c)
        : nrows(r), ncols(c), data(static_cast<std::size_t>(r * c), 0.0) {}

    double& operator()(index_t i, index_t j) { return data[i * ncols + j]; }
    double operator()(index_t i, index_t j) const { return data[i * ncols + j]; }

    static DenseMatrix identity(index_t n);
    static DenseMatrix from_csr(const CsrMatrix& a);

    DenseMatrix transposed() const;
    double max_abs() const;
    double frobenius() const;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
Vec matvec(const DenseMatrix& a, const Vec& x);
DenseMatrix dense_add(double alpha, const DenseMatrix& a, double beta,
                      const DenseMatrix& b);

/// Packed LU factors of a square matrix with partial (row) pivoting.
/// Factorization fails with SingularMatrixError when a pivot falls below
/// 1e-14 times the largest row magnitude of the input.
class DenseFactorization {
  public:
    static constexpr index_t kDefaultSizeCap = 20000;

    index_t dimension() const { return n_; }

    Vec solve(const Vec& rhs) const;            // A z = r
    Vec solve_transpose(const Vec& rhs) const;  // A^T z = r

    friend DenseFactorization dense_lu_factor(const DenseMatrix& a,
                                              index_t size_cap);

  private:
    index_t n_ = 0;
    Vec lu_;                     // packed L\U, row-major
    std::vector<index_t> piv_;   // row swaps, LAPACK style
};

DenseFactorization dense_lu_factor(const DenseMatrix& a,
                                   index_t size_cap = DenseFactorization::kDefaultSizeCap);
DenseFactorization dense_lu_factor(const CsrMatrix& a,
                                   index_t size_cap = DenseFactorization::kDefaultSizeCap);

/// LU factorization with partial pivoting in LAPACK band storage. Exact
/// solver for matrices whose bandwidth is small relative to the dimension,
/// which covers every mesh-ordered system in this project.
class BandFactorization {
  public:
    index_t dimension() const { return n_; }

    Vec solve(const Vec& rhs) const;

    friend BandFactorization band_lu_factor(const CsrMatrix& a);

  private:
    index_t n_ = 0;
    index_t kl_ = 0;  // lower bandwidth
    index_t ku_ = 0;  // upper bandwidth of the input (fill adds kl more)
    index_t ldab_ = 0;
    Vec ab_;  // column-major bands: ab_[row_in_band + j*ldab_]
    std::vector<index_t> piv_;
};

BandFactorization band_lu_factor(const CsrMatrix& a);

/// Eigenvalues (ascending) of a symmetric matrix by cyclic Jacobi rotations,
/// iterated until the off-diagonal Frobenius norm is below 1e-13 * ||A||_F.
/// If eigenvectors is non-null it receives the orthogonal matrix whose
/// columns match the returned eigenvalue order.
Vec jacobi_eigensolver(const DenseMatrix& a, DenseMatrix* eigenvectors = nullptr);

/// Lower-triangular Cholesky factor of an SPD matrix; independent reduction
/// route used to cross-check the Jacobi-based one.
DenseMatrix cholesky(const DenseMatrix& a);

/// P^{-1/2} for SPD P, via the Jacobi eigendecomposition.
DenseMatrix symmetric_inverse_sqrt(const DenseMatrix& p);

}  // namespace seqhom

#endif
