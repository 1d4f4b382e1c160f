#ifndef SEQHOM_CSR_HPP
#define SEQHOM_CSR_HPP

#include <tuple>

#include "seqhom/common.hpp"

namespace seqhom {

/// Compressed sparse row matrix. Column indices are strictly increasing
/// within each row and duplicates are never stored, so products have a
/// fixed, reproducible summation order (ascending column index).
struct CsrMatrix {
    index_t nrows = 0;
    index_t ncols = 0;
    std::vector<index_t> row_offsets;  // length nrows+1
    std::vector<index_t> col_indices;
    Vec values;

    index_t nnz() const { return static_cast<index_t>(values.size()); }
    double at(index_t i, index_t j) const;  // 0 if not stored
};

using Triplet = std::tuple<index_t, index_t, double>;

CsrMatrix csr_from_triplets(index_t nrows, index_t ncols,
                            std::vector<Triplet> triplets);

CsrMatrix csr_identity(index_t n);
CsrMatrix csr_diagonal(const Vec& d);

Vec spmv(const CsrMatrix& a, const Vec& x);
Vec spmv_transpose(const CsrMatrix& a, const Vec& x);
void spmv(const CsrMatrix& a, const Vec& x, Vec& y);
void spmv_transpose(const CsrMatrix& a, const Vec& x, Vec& y);

CsrMatrix csr_transpose(const CsrMatrix& a);

/// alpha*a + beta*b with identical shapes, merged sparsity.
CsrMatrix csr_add(double alpha, const CsrMatrix& a, double beta,
                  const CsrMatrix& b);

CsrMatrix csr_scale(const CsrMatrix& a, double alpha);

CsrMatrix csr_matmul(const CsrMatrix& a, const CsrMatrix& b);

/// Submatrix a(rows, cols) for sorted, duplicate-free index lists.
CsrMatrix csr_restrict(const CsrMatrix& a, const std::vector<index_t>& rows,
                       const std::vector<index_t>& cols);
CsrMatrix csr_restrict_cols(const CsrMatrix& a,
                            const std::vector<index_t>& cols);

Vec csr_diag(const CsrMatrix& a);

double csr_max_abs(const CsrMatrix& a);

/// max_ij |a_ij - a_ji|, for symmetry checks.
double csr_asymmetry(const CsrMatrix& a);

}  // namespace seqhom

#endif
