#include "cayley/gsp.hpp"

#include <algorithm>

#include "cayley/errors.hpp"

namespace cayley {

cvec gft(const GraphSignal& f, const PreferredEigenbasis& basis) {
    const int n = basis.vectors.rows();
    if (static_cast<int>(f.values.size()) != n)
        throw ValidationError("gft: signal length does not match the basis");
    cvec c(n);
    for (int j = 0; j < n; ++j) c[j] = inner(f.values, basis.vectors.col(j));
    return c;
}

GraphSignal igft(std::span<const cplx> coeffs, const PreferredEigenbasis& basis) {
    const int n = basis.vectors.rows();
    if (static_cast<int>(coeffs.size()) != n)
        throw ValidationError("igft: coefficient length does not match the basis");
    GraphSignal f;
    f.values.assign(n, cplx{});
    for (int j = 0; j < n; ++j) axpy(f.values, coeffs[j], basis.vectors.col(j));
    return f;
}

cvec frame_analyze(const GraphSignal& f, const Frame& fr) {
    if (static_cast<int>(f.values.size()) != fr.ambient)
        throw ValidationError("frame_analyze: signal length does not match the frame");
    cvec c(fr.atoms.size());
    for (size_t a = 0; a < fr.atoms.size(); ++a) c[a] = inner(f.values, fr.atoms[a]);
    return c;
}

GraphSignal frame_synthesize(std::span<const cplx> coeffs, const Frame& fr, SynthesisMode mode) {
    if (coeffs.size() != fr.atoms.size())
        throw ValidationError("frame_synthesize: coefficient count does not match the frame");
    const int n = fr.ambient;
    GraphSignal f;
    f.values.assign(n, cplx{});
    for (size_t a = 0; a < fr.atoms.size(); ++a) axpy(f.values, coeffs[a], fr.atoms[a]);
    if (mode == SynthesisMode::Direct) return f;

    // canonical dual: apply S^-1 through the eigendecomposition of the frame operator
    CMat s(n, n);
    for (const cvec& atom : fr.atoms)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) s(r, c) += atom[r] * std::conj(atom[c]);
    const HermitianEigen eig = hermitian_eig(s);
    if (eig.values.back() <= 1e-12 * std::max(1.0, eig.values.front()))
        throw ValidationError(
            "frame_synthesize: atoms do not span the space; canonical dual is undefined");
    cvec out(n, cplx{});
    for (int j = 0; j < n; ++j) {
        const cvec q = eig.vectors.col(j);
        axpy(out, inner(f.values, q) / eig.values[j], q);
    }
    f.values = std::move(out);
    return f;
}

}
