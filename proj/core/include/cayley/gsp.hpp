#pragma once

#include <span>

#include "cayley/frames.hpp"
#include "cayley/linalg.hpp"
#include "cayley/spectral.hpp"

namespace cayley {

struct GraphSignal {
    cvec values;
};

// Fourier coefficients <f, phi_j> against the preferred eigenbasis.
cvec gft(const GraphSignal& f, const PreferredEigenbasis& basis);

// f = sum_j c_j phi_j
GraphSignal igft(std::span<const cplx> coeffs, const PreferredEigenbasis& basis);

// Analysis coefficients <f, psi_a> per atom.
cvec frame_analyze(const GraphSignal& f, const Frame& fr);

enum class SynthesisMode {
    CanonicalDual,  // f = S^-1 sum_a c_a psi_a; exact for consistent coefficients
    Direct,         // f = sum_a c_a psi_a; inverse of analysis only for Parseval frames
};

GraphSignal frame_synthesize(std::span<const cplx> coeffs, const Frame& fr, SynthesisMode mode);

}
