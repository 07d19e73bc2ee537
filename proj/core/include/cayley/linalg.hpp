#pragma once

#include <complex>
#include <span>
#include <vector>

namespace cayley {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

// Dense complex matrix, row-major, value semantics.  Everything in this
// library is small (group order N <= a few hundred), so no cleverness.
class CMat {
public:
    CMat() = default;
    CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static CMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    cvec col(int c) const;
    void set_col(int c, std::span<const cplx> v);

    CMat adjoint() const;
    CMat transpose() const;

    double norm_fro() const;
    double max_abs() const;
    // max |M - M^*| entry; 0 for the empty matrix
    double hermiticity_defect() const;

    CMat& operator+=(const CMat& o);
    CMat& operator-=(const CMat& o);
    CMat& operator*=(cplx s);

    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
    friend CMat operator*(cplx s, CMat a) { return a *= s; }
    friend CMat operator*(const CMat& a, const CMat& b);

    cvec apply(std::span<const cplx> x) const;  // M x

private:
    int rows_ = 0, cols_ = 0;
    cvec a_;
};

// <a, b> = sum_i a_i * conj(b_i): linear in the first slot, conjugate-linear
// in the second.  All inner products in this library use this convention.
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm2(std::span<const cplx> a);
cvec scaled(std::span<const cplx> a, cplx s);
void axpy(cvec& y, cplx s, std::span<const cplx> x);  // y += s*x

struct HermitianEigen {
    std::vector<double> values;  // descending
    CMat vectors;                // columns, orthonormal, same order as values
};

// Deterministic Hermitian eigensolver (cyclic complex Jacobi).
//
// Contract:
//   - input must be Hermitian to 1e-10 (relative to max(1, ||M||_F)), else
//     ValidationError;
//   - eigenvalues returned in descending order;
//   - eigenvalues within 1e-8 * max(1, ||M||_F) of each other form a cluster:
//     members share the cluster mean value and their vectors are rebuilt by
//     modified Gram-Schmidt over the columns of the spectral projector, taken
//     in column order -- so the output depends only on the eigenspace, never
//     on iteration jitter;
//   - each vector is phased so its last component of magnitude > 1e-8 is
//     real and positive;
//   - residuals ||Mv - lambda v|| <= 1e-10 * (1 + ||M||_F) whenever clusters
//     are exactly degenerate (always true for the structured matrices here).
HermitianEigen hermitian_eig(const CMat& m);

}
