/*
 * Exact finite Weyl system on C^d, d odd: the projective unitary representation
 *
 *   U(q,p)·e_y = ω^{2⁻¹·q·p + p·y} · e_{y+q}         (clock/shift generators)
 *
 * so that U(z+w) = m(z,w)·U(z)·U(w) with the symmetric multiplier from
 * group.hpp, U(0) = I and U(z)† = U(−z).  The d² displacements are pairwise
 * Hilbert–Schmidt orthogonal, tr(U(z)†U(w)) = d·δ_{z,w}, which makes every
 * vector admissible and the Duflo–Moore operator the scalar d_U·I with
 * d_U = √d under the counting-measure Haar convention.
 *
 * On top of the displacements: coefficient functions c_ψφ(z) = ⟨U(z)ψ, φ⟩,
 * the isometric wavelet transform W_ψ = ‖Cψ‖⁻¹·c_ψ·, the frame defect of the
 * resolution of the identity, and the reproducing-kernel projector onto
 * ran(W_ψ) ⊂ ℓ²(G).
 *
 * Inner products are conjugate-linear in the FIRST argument throughout.
 */
#pragma once

#include <vector>

#include "sqir/group.hpp"

namespace sqir {

using StateVector = Eigen::VectorXcd;

class WeylSystem {
public:
    explicit WeylSystem(PhaseGroup g);

    const PhaseGroup& group() const { return group_; }
    int dim() const { return group_.d(); }

    // d_U: the scalar in C = d_U·I.  √d under counting-measure Haar.
    double duflo_constant() const { return duflo_; }

    // Precomputed unitary U(z); valid for arbitrary integer coordinates.
    const Eigen::MatrixXcd& displacement(PhasePoint z) const {
        return disp_[group_.index(group_.reduce(z))];
    }
    const Eigen::MatrixXcd& displacement(int idx) const { return disp_[idx]; }

private:
    PhaseGroup group_;
    double duflo_;
    std::vector<Eigen::MatrixXcd> disp_;
};

// c_ψφ(z) = ⟨U(z)ψ, φ⟩ on all d² points.
PhaseFunction coefficient(const WeylSystem& w, const StateVector& psi, const StateVector& phi);

// W_ψφ = ‖Cψ‖⁻¹·c_ψφ with ‖Cψ‖ = √d·‖ψ‖; an isometry of C^d into ℓ²(G).
// Intertwines U with the left regular m-representation, whose phase comes out
// conjugated under the first-slot-antilinear inner product:
//   (W_ψ U(g)φ)(h) = conj(m(g, h−g))·(W_ψφ)(h−g).
PhaseFunction wavelet_transform(const WeylSystem& w, const StateVector& psi,
                                const StateVector& phi);

// Operator norm of ‖Cψ‖⁻²·Σ_z U(z)|ψ⟩⟨ψ|U(z)† − I  (0 up to roundoff).
double resolution_of_identity_defect(const WeylSystem& w, const StateVector& psi);

// P = W_ψ∘W_ψ† on ℓ²(G): self-adjoint idempotent of rank d whose matrix is the
// reproducing kernel of ran(W_ψ).
Eigen::MatrixXcd reproducing_kernel_projector(const WeylSystem& w, const StateVector& psi);

// Dimension of { X : X·U(z) = U(z)·X for all z }, computed as the nullity of
// the stacked commutator system.  1 = irreducible.
int commutant_dimension(const WeylSystem& w, double tol = 1e-8);

}  // namespace sqir
