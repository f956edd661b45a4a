#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "jamming/linalg.hpp"

namespace jamming {

struct UnsupportedDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A seed frame: n unit vectors in C^d, stored as the columns of a d x n
/// matrix. Immutable by convention after construction.
struct Frame {
    int n = 0;
    int d = 0;
    ComplexMatrix vectors;  // d x n, column c is the seed vector for channel c
    std::string label;

    const ComplexMatrix& matrix() const { return vectors; }
    ComplexVector vector(int c) const { return vectors.col(c); }
};

/// Rows of the n x n DFT matrix restricted to the first d coordinates:
/// (h_c)_j = exp(2 pi i c j / n) / sqrt(d).
Frame harmonic_frame(int n, int d);

/// Regular simplex of d+1 unit vectors in C^d with pairwise inner product
/// -1/d, re-expressed from the hyperplane 1^perp of R^{d+1} into d ambient
/// coordinates.
Frame simplex_frame(int d);

/// SIC frame of d^2 equiangular vectors with |<a|b>|^2 = 1/(d+1).
/// Built in for d in {2, 3}; other dimensions must be supplied via
/// load_frame.
Frame sic_frame(int d);

/// Union of d+1 mutually unbiased bases: n = d(d+1) vectors. Supported for
/// prime d and for d = 4.
Frame mub_frame(int d);

/// Cubic-phase frame (phi_c)_j = exp(2 pi i c j^3 / n) / sqrt(d) for prime
/// n >= 5 and 1 <= d <= n.
Frame alltop_frame(int n, int d);

/// n i.i.d. Haar-random unit vectors in C^d; vector c is drawn from the RNG
/// stream keyed by (seed, c), so the frame is reproducible.
Frame random_haar_frame(int n, int d, std::uint64_t seed);

/// Maximum |<phi_a|phi_b>| over distinct pairs.
double coherence(const Frame& frame);

/// Welch lower bound on coherence^2: (n - d) / (d (n - 1)).
double welch_bound_sq(int n, int d);

/// JSON frame files: {n, d, label, vectors: [[[re, im], ...], ...]}.
Frame load_frame(const std::string& path);
void save_frame(const Frame& frame, const std::string& path);

bool is_prime(int n);

}  // namespace jamming
