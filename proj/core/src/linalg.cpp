#include "cayley/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cayley/errors.hpp"

namespace cayley {

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

cvec CMat::col(int c) const {
    cvec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void CMat::set_col(int c, std::span<const cplx> v) {
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

CMat CMat::adjoint() const {
    CMat m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

CMat CMat::transpose() const {
    CMat m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

double CMat::norm_fro() const {
    double s = 0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double CMat::max_abs() const {
    double m = 0;
    for (const cplx& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double CMat::hermiticity_defect() const {
    double m = 0;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

CMat& CMat::operator+=(const CMat& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMat& CMat::operator-=(const CMat& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMat& CMat::operator*=(cplx s) {
    for (cplx& z : a_) z *= s;
    return *this;
}

CMat operator*(const CMat& a, const CMat& b) {
    CMat m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const cplx ark = a(r, k);
            if (ark == cplx{}) continue;
            for (int c = 0; c < b.cols_; ++c) m(r, c) += ark * b(k, c);
        }
    return m;
}

cvec CMat::apply(std::span<const cplx> x) const {
    cvec y(rows_);
    for (int r = 0; r < rows_; ++r) {
        cplx s = 0;
        for (int c = 0; c < cols_; ++c) s += (*this)(r, c) * x[c];
        y[r] = s;
    }
    return y;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    cplx s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

double norm2(std::span<const cplx> a) {
    double s = 0;
    for (const cplx& z : a) s += std::norm(z);
    return std::sqrt(s);
}

cvec scaled(std::span<const cplx> a, cplx s) {
    cvec v(a.begin(), a.end());
    for (cplx& z : v) z *= s;
    return v;
}

void axpy(cvec& y, cplx s, std::span<const cplx> x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

namespace {

double offdiag_fro(const CMat& a) {
    double s = 0;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// One two-sided rotation J^* A J annihilating A(p,q); J differs from the
// identity only at J(p,p)=c, J(p,q)=s*phase, J(q,p)=-s*conj(phase), J(q,q)=c.
void jacobi_rotate(CMat& a, CMat& v, int p, int q) {
    const cplx g = a(p, q);
    const double ag = std::abs(g);
    if (ag == 0.0) return;
    const double alpha = a(p, p).real();
    const double beta = a(q, q).real();
    const double zeta = (beta - alpha) / (2.0 * ag);
    double t = 1.0 / (std::abs(zeta) + std::hypot(1.0, zeta));
    if (zeta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const cplx phase = g / ag;

    const int n = a.rows();
    // columns: (AJ)_ip = c*A_ip - s*conj(phase)*A_iq, (AJ)_iq = s*phase*A_ip + c*A_iq
    for (int i = 0; i < n; ++i) {
        const cplx aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip - s * std::conj(phase) * aiq;
        a(i, q) = s * phase * aip + c * aiq;
    }
    // rows: (J^*A)_pj = c*A_pj - s*phase*A_qj, (J^*A)_qj = s*conj(phase)*A_pj + c*A_qj
    for (int j = 0; j < n; ++j) {
        const cplx apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj - s * phase * aqj;
        a(q, j) = s * std::conj(phase) * apj + c * aqj;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
    for (int i = 0; i < n; ++i) {
        const cplx vip = v(i, p), viq = v(i, q);
        v(i, p) = c * vip - s * std::conj(phase) * viq;
        v(i, q) = s * phase * vip + c * viq;
    }
}

void phase_normalize(cvec& v) {
    int last = -1;
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
        if (std::abs(v[i]) > 1e-8) { last = i; break; }
    }
    if (last < 0) return;
    const cplx f = std::conj(v[last]) / std::abs(v[last]);
    for (cplx& z : v) z *= f;
    v[last] = v[last].real();  // scrub the residual imaginary dust
}

}  // namespace

HermitianEigen hermitian_eig(const CMat& m) {
    if (m.rows() != m.cols())
        throw ValidationError("hermitian_eig: matrix is not square");
    const int n = m.rows();
    if (n == 0) return {};
    const double scale = std::max(1.0, m.norm_fro());
    if (m.hermiticity_defect() > 1e-10 * scale)
        throw ValidationError("hermitian_eig: input is not Hermitian within 1e-10");

    // work on the symmetrised copy so roundoff in the input cannot bias a sweep
    CMat a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    CMat v = CMat::identity(n);

    constexpr int kMaxSweeps = 60;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_fro(a) <= 1e-14 * scale) { converged = true; break; }
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > 1e-18 * scale) jacobi_rotate(a, v, p, q);
    }
    if (!converged && offdiag_fro(a) > 1e-12 * scale)
        throw NumericalError("hermitian_eig: Jacobi iteration did not converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return a(i, i).real() > a(j, j).real();
    });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors = CMat(n, n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        out.vectors.set_col(k, v.col(order[k]));
    }

    // Regularize degenerate clusters: rebuild each cluster's vectors from the
    // spectral projector so the result is independent of rotation history.
    const double ctol = 1e-8 * scale;
    int k = 0;
    while (k < n) {
        int e = k + 1;
        while (e < n && out.values[e - 1] - out.values[e] <= ctol) ++e;
        const int msz = e - k;
        if (msz > 1) {
            const double mean =
                std::accumulate(out.values.begin() + k, out.values.begin() + e, 0.0) / msz;
            CMat proj(n, n);
            for (int j = k; j < e; ++j) {
                const cvec u = out.vectors.col(j);
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) proj(r, c) += u[r] * std::conj(u[c]);
            }
            std::vector<cvec> basis;
            for (double drop : {1e-6, 1e-10}) {
                basis.clear();
                for (int j = 0; j < n && static_cast<int>(basis.size()) < msz; ++j) {
                    cvec u = proj.col(j);
                    for (const cvec& w : basis) axpy(u, -inner(u, w), w);
                    const double nu = norm2(u);
                    if (nu > drop) {
                        for (cplx& z : u) z /= nu;
                        basis.push_back(std::move(u));
                    }
                }
                if (static_cast<int>(basis.size()) == msz) break;
            }
            if (static_cast<int>(basis.size()) != msz)
                throw NumericalError("hermitian_eig: projector basis extraction failed");
            // second orthogonalization pass tightens roundoff
            for (size_t j = 0; j < basis.size(); ++j) {
                for (size_t w = 0; w < j; ++w) axpy(basis[j], -inner(basis[j], basis[w]), basis[w]);
                const double nu = norm2(basis[j]);
                for (cplx& z : basis[j]) z /= nu;
            }
            for (int j = 0; j < msz; ++j) {
                out.values[k + j] = mean;
                out.vectors.set_col(k + j, basis[j]);
            }
        }
        k = e;
    }

    for (int j = 0; j < n; ++j) {
        cvec u = out.vectors.col(j);
        phase_normalize(u);
        out.vectors.set_col(j, u);
    }
    return out;
}

}
