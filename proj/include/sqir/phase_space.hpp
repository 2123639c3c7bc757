/*
 * Phase-space quantization over the finite Weyl system.
 *
 * Dequantization and quantization form an adjoint pair that is bijective at
 * finite d (the annihilator ideal is trivial):
 *
 *   (D A)(z) = d_U⁻¹·tr(U(z)†A)          isometry  B₂(C^d) → ℓ²(G)
 *   Q f      = d_U⁻¹·Σ_z f(z)·U(z)       adjoint of D;  Q∘D = D∘Q = id
 *
 * The star product is the pullback of operator composition.  Three equivalent
 * routes are kept alive as mutual cross-checks:
 *
 *   f₁⋆f₂ = D((Qf₁)(Qf₂))
 *         = d_U⁻¹·Σ_h f₁(h)·f₂(g−h)·conj(m(h, g−h))      (m-twisted convolution)
 *         = the same with the projector P = D∘Q inserted  (P = id at finite d)
 *
 * With the involution f*(z) = conj(f(−z)), (ℓ²(G), ⋆, *) is an H*-algebra:
 * ⟨f₁⋆f₂, f₃⟩ = ⟨f₂, f₁*⋆f₃⟩.
 *
 * The symplectic Fourier transform (F_s f)(z) = d⁻¹·Σ_w f(w)·ω^{σ(z;w)} is
 * self-adjoint, unitary and involutive with this normalization.  It connects
 * the quantum characteristic function ρ̃(z) = tr(U(z)†ρ̂) with the Wigner
 * table W = d⁻¹·F_s ρ̃ (real, Σ_z W(z) = 1, possibly negative).
 *
 * Positive-type test batteries:
 *   P3 / Q3   Gram-matrix positivity on finite point sets (the quantum Gram
 *             carries the phase ω^{2⁻¹σ(z_j;z_k)})
 *   Q1        the functional form Σ_z u(z)·(a*⋆a)(z) ≥ 0 over test functions
 * At finite d those are equivalent; both are exposed and cross-validated.
 */
#pragma once

#include <vector>

#include "sqir/weyl.hpp"

namespace sqir {

using Operator = Eigen::MatrixXcd;  // general B₂ element, no invariants

// Unit-trace positive operator.  Construction validates (Hermitian within
// 1e-10, eigenvalues ≥ −1e-10, trace 1 within 1e-10) and throws otherwise.
class DensityOperator {
public:
    static constexpr double kHermitianTol = 1e-10;
    static constexpr double kEigenvalueTol = 1e-10;
    static constexpr double kTraceTol = 1e-10;

    explicit DensityOperator(Operator m);

    const Operator& matrix() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }

private:
    Operator mat_;
};

// Largest invariant violation of a density-operator candidate:
// {hermiticity defect, most negative eigenvalue, |tr − 1|}.
struct DensityDefects {
    double hermiticity = 0.0;
    double min_eigenvalue = 0.0;
    double trace_deviation = 0.0;

    bool pass(double herm_tol = DensityOperator::kHermitianTol,
              double eig_tol = DensityOperator::kEigenvalueTol,
              double trace_tol = DensityOperator::kTraceTol) const {
        return hermiticity <= herm_tol && min_eigenvalue >= -eig_tol &&
               trace_deviation <= trace_tol;
    }
};
DensityDefects density_defects(const Operator& m);

PhaseFunction dequantize(const WeylSystem& w, const Operator& a);
Operator quantize(const WeylSystem& w, const PhaseFunction& f);

enum class StarMode { via_operators, twisted_convolution, projected_formulas };

PhaseFunction star_product(const WeylSystem& w, const PhaseFunction& f1, const PhaseFunction& f2,
                           StarMode mode = StarMode::twisted_convolution);

// Self-inverse unitary symplectic Fourier–Plancherel transform.
PhaseFunction symplectic_fourier(const PhaseFunction& f);

// f*(z) = conj(f(−z)); (f₁⋆f₂)* = f₂*⋆f₁*.
PhaseFunction involution_twisted(const PhaseFunction& f);

// ρ̃(z) = tr(U(z)†ρ̂) = d_U·(Dρ̂)(z).  ρ̃(0) = 1, ρ̃(−z) = conj(ρ̃(z)),
// d⁻¹·Σ|ρ̃|² = tr(ρ̂²).
PhaseFunction characteristic_function(const WeylSystem& w, const DensityOperator& rho);

// W(z) = d⁻²·Σ_w ρ̃(w)·ω^{σ(z;w)}; real, sums to 1, may go negative.
PhaseFunction wigner_function(const WeylSystem& w, const DensityOperator& rho);

// Inverse of the characteristic-function map (finite d: exact).
Operator operator_from_characteristic(const WeylSystem& w, const PhaseFunction& chi);

// Wigner table back to the characteristic function: ρ̃ = d·F_s W.
PhaseFunction characteristic_from_wigner(const PhaseFunction& wig);

struct GramCheck {
    double min_eigenvalue = 0.0;
    bool psd = false;
    // Hermitian-symmetry defect of the Gram matrix.  Beyond
    // kCandidateSymmetryTol the input is not a positive-type candidate at
    // all; the eigenvalue is still reported (computed on the Hermitian part)
    // but valid_candidate is cleared and psd with it.
    double hermiticity_defect = 0.0;
    bool valid_candidate = true;

    static constexpr double kPsdTol = 1e-10;
    static constexpr double kCandidateSymmetryTol = 1e-8;
};

// Quantum positive-definiteness (Q3): Gram M[j,k] = u(z_k−z_j)·ω^{2⁻¹σ(z_j;z_k)}.
GramCheck quantum_positive_type(const PhaseFunction& u, const std::vector<PhasePoint>& points);

// Classical positive-definiteness (P3): Gram M[j,k] = p(z_k−z_j), no phase.
GramCheck classical_positive_type(const PhaseFunction& p, const std::vector<PhasePoint>& points);

std::vector<PhasePoint> all_points(const PhaseGroup& g);

// Q1: worst-case real part of Σ_z u(z)·(a*⋆a)(z) over test functions a.
// `trials` seeded random draws, then eigenvector-directed test functions
// a = D(|v⟩⟨v|) for the eigenvectors v of the Hermitian part of Q(conj u)†
// (the operator the functional actually pairs against), so that a genuinely
// non-positive u is always exhibited, not just with high probability.  Also
// reports the largest imaginary part seen (a consistency indicator; the
// functional is real for Hermitian-symmetric u).
struct QptfCheck {
    double min_real = 0.0;
    double max_imag_abs = 0.0;
};
QptfCheck qptf_integral_check(const WeylSystem& w, const PhaseFunction& u, int trials,
                              std::uint64_t seed);

}  // namespace sqir
