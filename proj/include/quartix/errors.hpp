#pragma once

#include <stdexcept>

namespace quartix {

// The Cardano/Ferrari route could not produce four certified real extrema
// (complex roots, coincident extrema, or a degenerate resolvent).  Callers
// are expected to fall back to the bisection oracle.
struct ClosedFormUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A reconstructed quantity failed its a-posteriori check (e.g. a candidate
// fixed point whose image is not the point itself within tolerance).
struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace quartix
