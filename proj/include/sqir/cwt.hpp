/*
 * Numerical continuous wavelet transform on the connected 1-D affine group
 * {(b,a) : b ∈ R, a > 0}, acting by (U(b,a)ψ)(x) = a^{−1/2}·ψ((x−b)/a).
 *
 * The group is non-unimodular: left Haar measure db·da/a², modular function
 * Δ(b,a) = 1/a.  The Duflo–Moore operator is the unbounded frequency-domain
 * multiplier
 *
 *   (Cψ)^(ω) = √(2π/|ω|)·ψ̂(ω) ,
 *
 * with the 2π placement pinned by requiring the orthogonality relations
 *
 *   ∫∫ conj(c_{ψ₁φ₁})·c_{ψ₂φ₂} db·da/a² = ⟨φ₁,φ₂⟩·⟨Cψ₂,Cψ₁⟩
 *
 * to balance numerically.  A mother wavelet is admissible when it lies in the
 * domain of C, i.e. ∫|ψ̂(ω)|²/|ω| dω = ‖Cψ‖² < ∞; spectra with weight at
 * ω = 0 are detected by a committed grid-refinement divergence test.
 *
 * Conventions (recorded, not canonical): Fourier transform
 * ψ̂(ω) = ∫ψ(x)e^{−iωx}dx with 1/(2π) on inversion; sample abscissae centered,
 * x_j = (j−(M−1)/2)·dt; scale grids log-uniform, translation grids uniform;
 * quadrature trapezoidal (here: exact Riemann sums over decaying samples).
 */
#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "sqir/group.hpp"

namespace sqir {

struct SampledSignal {
    Eigen::VectorXcd samples;
    double dt = 1.0;

    SampledSignal() = default;
    SampledSignal(Eigen::VectorXcd s, double step);

    int size() const { return static_cast<int>(samples.size()); }
    double x0() const { return -0.5 * (size() - 1) * dt; }
    double x(int j) const { return x0() + j * dt; }

    // Catmull–Rom cubic interpolation of the sample table; zero outside.
    Cx value_at(double x) const;

    double norm() const { return std::sqrt(dt) * samples.norm(); }
};

// dt·Σ_j conj(f_j)·g_j: the L² pairing on a common grid.
Cx signal_inner(const SampledSignal& f, const SampledSignal& g);

// DFT samples of the continuous-convention transform ψ̂(ω) = ∫ψ(x)e^{−iωx}dx.
struct Spectrum {
    std::vector<double> omega;  // signed angular frequencies per bin
    std::vector<Cx> values;
    double domega = 0.0;
};
Spectrum spectrum(const SampledSignal& s);
SampledSignal signal_from_spectrum(const Spectrum& spec, double dt);

// ∫|ψ̂(ω)|²/|ω| dω with the ω = 0 bin excluded.  Equals ‖Cψ‖².
double admissibility_constant(const SampledSignal& psi);

// Divergence detector: the constant recomputed on ×1, ×2, ×4 zero-padded
// grids (finer ω sampling near 0).  A growth of the ×4 value beyond
// kDivergenceGrowth marks the candidate inadmissible.
struct AdmissibilityReport {
    double constant = 0.0;       // value at the native grid
    double refined2 = 0.0;
    double refined4 = 0.0;
    bool divergent = false;

    static constexpr double kDivergenceGrowth = 1.25;  // ratio refined4/constant
};
AdmissibilityReport admissibility_report(const SampledSignal& psi);

// Frequency-domain action of the Duflo–Moore operator (ω = 0 bin zeroed).
// Throws when the admissibility report flags divergence.
SampledSignal duflo_moore_apply(const SampledSignal& psi);

std::vector<double> log_spaced(double lo, double hi, int n);
std::vector<double> linspace(double lo, double hi, int n);

struct CwtTable {
    std::vector<double> scales;        // log-uniform, a > 0
    std::vector<double> translations;  // uniform
    Eigen::MatrixXcd coeffs;           // (scale, translation) ↦ c(b,a)
};

// c(b,a) = ⟨U(b,a)ψ, φ⟩ = dt·Σ_j conj(a^{−1/2}ψ((x_j−b)/a))·φ(x_j).
CwtTable cwt(const SampledSignal& phi, const SampledSignal& psi,
             const std::vector<double>& scales, const std::vector<double>& translations);

// Σ_{grid} |c|²·Δb·Δln(a)/a — the left-Haar energy of the table.
double cwt_energy(const CwtTable& table);

// Σ_{grid} conj(c₁)·c₂ with the same weights.
Cx cwt_pairing(const CwtTable& t1, const CwtTable& t2);

// cwt_energy/(‖Cψ‖²·‖φ‖²); 1 in the continuum by the orthogonality relations.
double isometry_ratio(const CwtTable& table, const SampledSignal& psi, const SampledSignal& phi);

// |LHS − RHS| of the orthogonality relation above, relative to
// ‖Cψ₁‖·‖Cψ₂‖·‖φ₁‖·‖φ₂‖.
double orthogonality_relation_defect(const SampledSignal& psi1, const SampledSignal& psi2,
                                     const SampledSignal& phi1, const SampledSignal& phi2,
                                     const std::vector<double>& scales,
                                     const std::vector<double>& translations);

// (b,a)·(b′,a′) = (b + a·b′, a·a′); left Haar db·da/a²; Δ(b,a) = 1/a.
struct AffinePoint {
    double b = 0.0;
    double a = 1.0;
};
AffinePoint affine_compose(AffinePoint g, AffinePoint h);
double affine_modular_function(AffinePoint g);

// U(b,a)ψ resampled on an M-point grid with step dt.
SampledSignal affine_atom(const SampledSignal& psi, double b, double a, int m, double dt);

// Bundled fixtures -----------------------------------------------------------

// Morlet with unit envelope width and the zero-mean correction term:
// π^{−1/4}·(e^{iω₀x} − e^{−ω₀²/2})·e^{−x²/2}.
SampledSignal make_morlet(int m, double dt, double omega0 = 6.0);

// Plain Gaussian e^{−x²/2}: ψ̂(0) ≠ 0, hence NOT admissible.
SampledSignal make_gaussian(int m, double dt);

// Gaussian-windowed linear chirp e^{−x²/(2w²)}·e^{i(ω₁x + s·x²/2)}.
SampledSignal make_chirp(int m, double dt, double omega1, double slope, double width);

// Gabor atom e^{−(x−x₀)²/(2w²)}·e^{iω_c·x} (narrow-band test signal).
SampledSignal make_gabor(int m, double dt, double omega_c, double width, double center);

// The committed reference grid for the acceptance checks.
struct ReferenceGrid {
    int signal_len = 1024;
    double dt = 1.0 / 32.0;
    double omega0 = 6.0;
    std::vector<double> scales = log_spaced(0.125, 8.0, 64);
    std::vector<double> translations = linspace(-20.0, 20.0, 401);
};

}  // namespace sqir
