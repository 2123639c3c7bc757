/*
 * Deterministic random instance generation.
 *
 * The generator contract is pinned so that a run is reproducible bit-for-bit
 * from its seed (and reproducible by a reimplementation in another language):
 *
 *   engine     mt19937_64 seeded directly with the 64-bit seed
 *   uniform01  (next() >> 11) · 2⁻⁵³            ∈ [0,1)
 *   gauss      Box–Muller on consecutive uniforms; the pair is generated
 *              together and the second value is returned by the next call
 *   cgauss     re, im independent N(0,1) in that order
 *
 * No std::*_distribution is used anywhere (their output is implementation
 * defined, which would break cross-platform reproducibility of digests).
 */
#pragma once

#include <cstdint>
#include <random>

#include "sqir/group.hpp"

namespace sqir {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform01();
    double gauss();
    Cx cgauss();

    std::uint64_t next() { return gen_(); }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Normalized complex Gaussian vector (Haar-distributed direction).
Eigen::VectorXcd random_state(Rng& rng, int d);

// Ginibre construction: G with iid cgauss entries, rho = G·G†/tr(G·G†).
// Full rank with probability one.
Eigen::MatrixXcd random_density_matrix(Rng& rng, int d);

// Rank-one projector onto a random_state direction.
Eigen::MatrixXcd random_pure_density_matrix(Rng& rng, int d);

// Random Hermitian matrix with iid cgauss off-diagonal / gauss diagonal parts.
Eigen::MatrixXcd random_hermitian(Rng& rng, int d);

// Haar-ish random unitary: QR of a Ginibre matrix with the R diagonal phases
// absorbed into Q.
Eigen::MatrixXcd random_unitary(Rng& rng, int d);

// Hermitian, unit trace, with minimum eigenvalue forced to -neg (so the
// matrix is definitely NOT positive semidefinite).  Spectrum: a Dirichlet
// weight vector with the smallest entry replaced by -neg, rescaled to unit
// trace, conjugated by a random unitary.
Eigen::MatrixXcd random_nonpositive_unit_trace(Rng& rng, int d, double neg = 0.2);

// iid cgauss table on the group.
PhaseFunction random_phase_function(Rng& rng, const PhaseGroup& g);

// Dirichlet(1,...,1) weights (normalized exponentials): uniform on the simplex.
GroupMeasure random_probability_measure(Rng& rng, const PhaseGroup& g);

}  // namespace sqir
