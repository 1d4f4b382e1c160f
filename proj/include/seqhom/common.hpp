#ifndef SEQHOM_COMMON_HPP
#define SEQHOM_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqhom {

using index_t = std::int64_t;
using Vec = std::vector<double>;

// Thrown when a numerical factorization meets a pivot below its breakdown
// threshold. The homotopy driver converts this into a failed step.
struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an operator or preconditioner that must be (semi)definite
// produces a negative inner product. Also mapped to a failed step upstream.
struct IndefiniteOperatorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violations of an interface contract (dimension mismatch, out-of-range
// index, invalid configuration). These are programming or input errors,
// never recoverable by the solver.
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw ContractError(what);
}

// -- small dense-free vector kernels ----------------------------------------

inline double dot(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline void axpy(double alpha, const Vec& x, Vec& y) {
    require(x.size() == y.size(), "axpy: size mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(Vec& x, double alpha) {
    for (double& v : x) v *= alpha;
}

inline Vec zeros(index_t n) { return Vec(static_cast<std::size_t>(n), 0.0); }

}  // namespace seqhom

#endif
