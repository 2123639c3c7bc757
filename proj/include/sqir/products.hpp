/*
 * Products of states.  The composition, Jordan and Lie products all fail to
 * preserve the set of density operators (composition/Jordan succeed exactly
 * when both factors are the same pure state; the Lie product is traceless and
 * never a state).  The twirled product built from the Weyl system and a
 * fiducial state τ̂,
 *
 *   A ⊙ B = d_U⁻²·Σ_z tr(A·U(z)τ̂U(z)†)·U(z)·B·U(z)† ,
 *
 * is associative and state preserving: for a density operator A the weights
 * m(z) = d_U⁻²·tr(A·U(z)τ̂U(z)†) form a probability measure on the group, so
 * A ⊙ B is a random-displacement average of B.
 */
#pragma once

#include "sqir/phase_space.hpp"

namespace sqir {

// (AB + BA)/2: commutative, Hermiticity preserving, not associative.
Operator jordan(const Operator& a, const Operator& b);

// (AB − BA)/(2i): anticommutative, Hermiticity preserving, traceless.
Operator lie(const Operator& a, const Operator& b);

struct StateProductDiagnostics {
    double tr_comp = 0.0;    // tr(ρ̂σ̂) = ⟨ρ̂,σ̂⟩_HS ∈ [0,1]
    double tr_jordan = 0.0;  // equals tr_comp
    bool comp_is_state = false;
    bool jordan_is_state = false;
    bool lie_is_state = false;  // always false
};

// Checks which of the three products of two states is itself a state
// (expected: only for ρ̂ = σ̂ pure).
StateProductDiagnostics state_product_diagnostics(const DensityOperator& rho,
                                                  const DensityOperator& sigma);

// Fiducial data for the twirled product.
struct TwirledAlgebra {
    const WeylSystem& weyl;
    DensityOperator fiducial;

    TwirledAlgebra(const WeylSystem& w, DensityOperator tau);
};

// m(z) = d_U⁻²·tr(A·U(z)τ̂U(z)†) as a complex table; real, nonnegative and of
// total mass tr(A) when A is positive.
Eigen::VectorXcd induced_measure(const TwirledAlgebra& alg, const Operator& a);

// The probability-measure form of the above for a density operator.
GroupMeasure induced_probability_measure(const TwirledAlgebra& alg, const DensityOperator& rho);

Operator twirled_product(const TwirledAlgebra& alg, const Operator& a, const Operator& b);
DensityOperator twirled_product(const TwirledAlgebra& alg, const DensityOperator& rho,
                                const DensityOperator& sigma);

}  // namespace sqir
