/*
 * Truncated Fock-basis realization of the continuous Weyl system (ħ = 1,
 * one degree of freedom).  Phase-space points carry the convention
 *
 *   α = (q + i·p)/√2 ,   W(q,p) = e^{i(p·q̂ − q·p̂)} = D(α) = e^{α·a† − ᾱ·a}
 *
 * so the coherent state D(α)|0⟩ has number-basis coefficients
 * e^{−|α|²/2}·αⁿ/√n!.  Displacement matrix elements are evaluated through
 * associated Laguerre polynomials,
 *
 *   ⟨m|D(α)|n⟩ = √(n!/m!)·α^{m−n}·e^{−|α|²/2}·L_n^{(m−n)}(|α|²)   (m ≥ n),
 *
 * which is faster and better conditioned than exponentiating α·a† − ᾱ·a; the
 * matrix exponential stays available in the tests as a cross-check.
 *
 * All continuum statements hold only up to truncation error.  Assertions are
 * restricted to a trusted block (the lowest N/2 levels) and a trusted disk
 * |α| ≤ √N/4; the per-assertion tolerances below were calibrated once against
 * refinement studies and are committed as constants.
 */
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "sqir/phase_space.hpp"

namespace sqir {

struct FockSpace {
    int levels;  // number basis |0⟩..|levels−1⟩

    explicit FockSpace(int n) : levels(n) {
        if (n < 2) throw std::invalid_argument("FockSpace: need at least 2 levels");
    }
};

struct ContinuousPoint {
    double q = 0.0;
    double p = 0.0;

    Cx alpha() const { return Cx(q, p) / std::sqrt(2.0); }
    static ContinuousPoint from_alpha(Cx a) {
        const double s = std::sqrt(2.0);
        return {s * a.real(), s * a.imag()};
    }
};

// Calibrated truncation tolerances (N = 60, trusted disk |α| ≤ 2).
inline constexpr double kCoherentOverlapTol = 1e-10;
inline constexpr double kVacuumCharTol = 1e-8;
inline constexpr double kMultiplierBlockTol = 1e-6;

StateVector coherent_state(const FockSpace& space, ContinuousPoint z);

// e^{−iτ}·D(α) with τ the central-extension phase of the Heisenberg–Weyl
// composition law (τ = 0 recovers the plain Weyl system).
Eigen::MatrixXcd displacement_fock(const FockSpace& space, ContinuousPoint z,
                                   double central_phase = 0.0);

// e^{(i/2)(q·p̃ − p·q̃)}: the continuum multiplier.
Cx continuous_multiplier(ContinuousPoint z, ContinuousPoint w);

// Trapezoidal quadrature of (1/π)·∫_{|α|≤R} |α⟩⟨α| d²α against the identity,
// measured in operator norm on the lowest `levels` Fock levels
// (default ≈ R²/2, the levels the disk can resolve).
double resolution_defect_quadrature(const FockSpace& space, double radius, int grid,
                                    int levels = -1);

// ρ̃(q,p) = tr(D(α)†·ρ̂) sampled on a grid of points.
std::vector<Cx> characteristic_fock(const FockSpace& space, const Operator& rho,
                                    const std::vector<ContinuousPoint>& grid);

// Q3 Gram test with the real symplectic form ω(z;z′) = q·p′ − p·q′:
// M[j,k] = u(z_k − z_j)·e^{i·ω(z_j;z_k)/2}.
GramCheck quantum_positive_type_continuous(const std::function<Cx(ContinuousPoint)>& u,
                                           const std::vector<ContinuousPoint>& points);

}  // namespace sqir
