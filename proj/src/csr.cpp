#include "seqhom/csr.hpp"

#include <algorithm>
#include <cmath>

namespace seqhom {

double CsrMatrix::at(index_t i, index_t j) const {
    require(i >= 0 && i < nrows && j >= 0 && j < ncols, "at: index out of range");
    const index_t* begin = col_indices.data() + row_offsets[i];
    const index_t* end = col_indices.data() + row_offsets[i + 1];
    const index_t* it = std::lower_bound(begin, end, j);
    if (it != end && *it == j) return values[it - col_indices.data()];
    return 0.0;
}

CsrMatrix csr_from_triplets(index_t nrows, index_t ncols,
                            std::vector<Triplet> triplets) {
    for (const auto& [r, c, v] : triplets) {
        (void)v;
        require(r >= 0 && r < nrows && c >= 0 && c < ncols,
                "csr_from_triplets: index out of range");
    }
    // stable sort keeps duplicate accumulation order reproducible
    std::stable_sort(triplets.begin(), triplets.end(),
                     [](const Triplet& a, const Triplet& b) {
                         if (std::get<0>(a) != std::get<0>(b))
                             return std::get<0>(a) < std::get<0>(b);
                         return std::get<1>(a) < std::get<1>(b);
                     });
    CsrMatrix m;
    m.nrows = nrows;
    m.ncols = ncols;
    m.row_offsets.assign(static_cast<std::size_t>(nrows) + 1, 0);
    std::size_t k = 0;
    while (k < triplets.size()) {
        auto [r, c, v] = triplets[k];
        double sum = v;
        std::size_t j = k + 1;
        while (j < triplets.size() && std::get<0>(triplets[j]) == r &&
               std::get<1>(triplets[j]) == c) {
            sum += std::get<2>(triplets[j]);
            ++j;
        }
        m.col_indices.push_back(c);
        m.values.push_back(sum);
        m.row_offsets[static_cast<std::size_t>(r) + 1]++;
        k = j;
    }
    for (index_t i = 0; i < nrows; ++i)
        m.row_offsets[static_cast<std::size_t>(i) + 1] +=
            m.row_offsets[static_cast<std::size_t>(i)];
    return m;
}

CsrMatrix csr_identity(index_t n) {
    CsrMatrix m;
    m.nrows = m.ncols = n;
    m.row_offsets.resize(static_cast<std::size_t>(n) + 1);
    m.col_indices.resize(static_cast<std::size_t>(n));
    m.values.assign(static_cast<std::size_t>(n), 1.0);
    for (index_t i = 0; i <= n; ++i) m.row_offsets[i] = i;
    for (index_t i = 0; i < n; ++i) m.col_indices[i] = i;
    return m;
}

CsrMatrix csr_diagonal(const Vec& d) {
    CsrMatrix m = csr_identity(static_cast<index_t>(d.size()));
    m.values = d;
    return m;
}

void spmv(const CsrMatrix& a, const Vec& x, Vec& y) {
    require(static_cast<index_t>(x.size()) == a.ncols, "spmv: size mismatch");
    y.assign(static_cast<std::size_t>(a.nrows), 0.0);
    for (index_t i = 0; i < a.nrows; ++i) {
        double s = 0.0;
        for (index_t k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k)
            s += a.values[k] * x[a.col_indices[k]];
        y[i] = s;
    }
}

Vec spmv(const CsrMatrix& a, const Vec& x) {
    Vec y;
    spmv(a, x, y);
    return y;
}

void spmv_transpose(const CsrMatrix& a, const Vec& x, Vec& y) {
    require(static_cast<index_t>(x.size()) == a.nrows,
            "spmv_transpose: size mismatch");
    y.assign(static_cast<std::size_t>(a.ncols), 0.0);
    for (index_t i = 0; i < a.nrows; ++i) {
        const double xi = x[i];
        for (index_t k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k)
            y[a.col_indices[k]] += a.values[k] * xi;
    }
}

Vec spmv_transpose(const CsrMatrix& a, const Vec& x) {
    Vec y;
    spmv_transpose(a, x, y);
    return y;
}

CsrMatrix csr_transpose(const CsrMatrix& a) {
    CsrMatrix t;
    t.nrows = a.ncols;
    t.ncols = a.nrows;
    t.row_offsets.assign(static_cast<std::size_t>(a.ncols) + 1, 0);
    t.col_indices.resize(a.values.size());
    t.values.resize(a.values.size());
    for (index_t k = 0; k < a.nnz(); ++k)
        t.row_offsets[a.col_indices[k] + 1]++;
    for (index_t i = 0; i < a.ncols; ++i) t.row_offsets[i + 1] += t.row_offsets[i];
    std::vector<index_t> next(t.row_offsets.begin(), t.row_offsets.end() - 1);
    for (index_t i = 0; i < a.nrows; ++i) {
        for (index_t k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k) {
            const index_t pos = next[a.col_indices[k]]++;
            t.col_indices[pos] = i;
            t.values[pos] = a.values[k];
        }
    }
    return t;
}

CsrMatrix csr_add(double alpha, const CsrMatrix& a, double beta,
                  const CsrMatrix& b) {
    require(a.nrows == b.nrows && a.ncols == b.ncols, "csr_add: shape mismatch");
    CsrMatrix c;
    c.nrows = a.nrows;
    c.ncols = a.ncols;
    c.row_offsets.assign(static_cast<std::size_t>(a.nrows) + 1, 0);
    c.col_indices.reserve(a.values.size() + b.values.size());
    c.values.reserve(a.values.size() + b.values.size());
    for (index_t i = 0; i < a.nrows; ++i) {
        index_t ka = a.row_offsets[i], ea = a.row_offsets[i + 1];
        index_t kb = b.row_offsets[i], eb = b.row_offsets[i + 1];
        while (ka < ea || kb < eb) {
            index_t ca = ka < ea ? a.col_indices[ka] : a.ncols;
            index_t cb = kb < eb ? b.col_indices[kb] : b.ncols;
            if (ca < cb) {
                c.col_indices.push_back(ca);
                c.values.push_back(alpha * a.values[ka++]);
            } else if (cb < ca) {
                c.col_indices.push_back(cb);
                c.values.push_back(beta * b.values[kb++]);
            } else {
                c.col_indices.push_back(ca);
                c.values.push_back(alpha * a.values[ka++] + beta * b.values[kb++]);
            }
        }
        c.row_offsets[i + 1] = static_cast<index_t>(c.values.size());
    }
    return c;
}

CsrMatrix csr_scale(const CsrMatrix& a, double alpha) {
    CsrMatrix c = a;
    for (double& v : c.values) v *= alpha;
    return c;
}

CsrMatrix csr_matmul(const CsrMatrix& a, const CsrMatrix& b) {
    require(a.ncols == b.nrows, "csr_matmul: shape mismatch");
    CsrMatrix c;
    c.nrows = a.nrows;
    c.ncols = b.ncols;
    c.row_offsets.assign(static_cast<std::size_t>(a.nrows) + 1, 0);
    Vec accum(static_cast<std::size_t>(b.ncols), 0.0);
    std::vector<index_t> marker(static_cast<std::size_t>(b.ncols), -1);
    std::vector<index_t> cols_in_row;
    for (index_t i = 0; i < a.nrows; ++i) {
        cols_in_row.clear();
        for (index_t ka = a.row_offsets[i]; ka < a.row_offsets[i + 1]; ++ka) {
            const index_t j = a.col_indices[ka];
            const double av = a.values[ka];
            for (index_t kb = b.row_offsets[j]; kb < b.row_offsets[j + 1]; ++kb) {
                const index_t col = b.col_indices[kb];
                if (marker[col] != i) {
                    marker[col] = i;
                    accum[col] = 0.0;
                    cols_in_row.push_back(col);
                }
                accum[col] += av * b.values[kb];
            }
        }
        std::sort(cols_in_row.begin(), cols_in_row.end());
        for (index_t col : cols_in_row) {
            c.col_indices.push_back(col);
            c.values.push_back(accum[col]);
        }
        c.row_offsets[i + 1] = static_cast<index_t>(c.values.size());
    }
    return c;
}

CsrMatrix csr_restrict(const CsrMatrix& a, const std::vector<index_t>& rows,
                       const std::vector<index_t>& cols) {
    std::vector<index_t> colmap(static_cast<std::size_t>(a.ncols), -1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        require(cols[j] >= 0 && cols[j] < a.ncols, "csr_restrict: bad column");
        colmap[cols[j]] = static_cast<index_t>(j);
    }
    CsrMatrix c;
    c.nrows = static_cast<index_t>(rows.size());
    c.ncols = static_cast<index_t>(cols.size());
    c.row_offsets.assign(rows.size() + 1, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const index_t i = rows[r];
        require(i >= 0 && i < a.nrows, "csr_restrict: bad row");
        for (index_t k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k) {
            const index_t cj = colmap[a.col_indices[k]];
            if (cj >= 0) {
                c.col_indices.push_back(cj);
                c.values.push_back(a.values[k]);
            }
        }
        c.row_offsets[r + 1] = static_cast<index_t>(c.values.size());
    }
    return c;
}

CsrMatrix csr_restrict_cols(const CsrMatrix& a,
                            const std::vector<index_t>& cols) {
    std::vector<index_t> rows(static_cast<std::size_t>(a.nrows));
    for (index_t i = 0; i < a.nrows; ++i) rows[i] = i;
    return csr_restrict(a, rows, cols);
}

Vec csr_diag(const CsrMatrix& a) {
    require(a.nrows == a.ncols, "csr_diag: not square");
    Vec d(static_cast<std::size_t>(a.nrows), 0.0);
    for (index_t i = 0; i < a.nrows; ++i) d[i] = a.at(i, i);
    return d;
}

double csr_max_abs(const CsrMatrix& a) {
    double m = 0.0;
    for (double v : a.values) m = std::max(m, std::abs(v));
    return m;
}

double csr_asymmetry(const CsrMatrix& a) {
    require(a.nrows == a.ncols, "csr_asymmetry: not square");
    const CsrMatrix t = csr_transpose(a);
    const CsrMatrix d = csr_add(1.0, a, -1.0, t);
    return csr_max_abs(d);
}

}  // namespace seqhom
