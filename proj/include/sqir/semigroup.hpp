/*
 * Convolution semigroups of probability measures on the finite phase space,
 * the classical-quantum multiplication semigroup they induce on characteristic
 * functions, and the matching twirling semigroup (random-displacement
 * channels) on density operators.
 *
 * On a finite group every weakly continuous convolution semigroup is compound
 * Poisson:  p_t = Σ_k e^{−rt}(rt)^k/k! · ν^{∗k}  with jump measure ν and rate
 * r.  The series is truncated at k_max = max(30, ⌈10·r·t⌉); the Poisson tail
 * beyond that is < 1e-15 of the mass for every t the library touches.  The
 * Fourier side gives the closed form P_t(z) = exp(r·t·(ν̃(z)−1)), kept as an
 * independent cross-check of the series.
 *
 * The central identity (exact here, checked numerically to roundoff):
 *
 *   Q(P_t·u) = 𝔗_t(Q u),   𝔗_t A = Σ_z p_t(z)·U(z)·A·U(z)†
 *
 * i.e. quantization intertwines pointwise multiplication by the classical
 * characteristic function with the twirling channel.  𝔗_t is completely
 * positive and trace preserving (Kraus family √p_t(z)·U(z)) and does not
 * decrease the von Neumann entropy.
 */
#pragma once

#include <map>
#include <mutex>

#include "sqir/phase_space.hpp"

namespace sqir {

class CompoundPoissonSemigroup {
public:
    CompoundPoissonSemigroup(GroupMeasure jump, double rate);

    const PhaseGroup& group() const { return jump_.group; }
    double rate() const { return rate_; }
    const GroupMeasure& jump_measure() const { return jump_; }

    // p_t via the truncated Poisson series.  t = 0 gives δ₀ exactly.
    GroupMeasure measure_at(double t) const;

private:
    GroupMeasure jump_;
    double rate_;
};

// P_t(z) = Σ_w ω^{σ(z;w)}·p_t(w), by direct summation of measure_at(t).
PhaseFunction classical_char(const CompoundPoissonSemigroup& sg, double t);

// P_t(z) = exp(rate·t·(ν̃(z)−1)); the Fourier-side closed form.
PhaseFunction classical_char_closed_form(const CompoundPoissonSemigroup& sg, double t);

// (S_t u)(z) = P_t(z)·u(z).  Maps quantum positive type to quantum positive
// type, normalized to normalized.
PhaseFunction cq_apply(const CompoundPoissonSemigroup& sg, double t, const PhaseFunction& u);

// Caching front end for repeated evaluation at the same times.  Concurrent
// char_at calls are serialized by an internal lock; the underlying semigroup
// is immutable.
class ClassicalQuantumSemigroup {
public:
    explicit ClassicalQuantumSemigroup(CompoundPoissonSemigroup base) : base_(std::move(base)) {}

    const CompoundPoissonSemigroup& base() const { return base_; }
    PhaseFunction char_at(double t) const;
    PhaseFunction apply(double t, const PhaseFunction& u) const;

private:
    CompoundPoissonSemigroup base_;
    mutable std::mutex lock_;
    mutable std::map<double, PhaseFunction> cache_;
};

// Random-displacement channel A ↦ Σ_z p(z)·U(z)·A·U(z)† at a fixed time.
struct TwirlingChannel {
    GroupMeasure weights;
};

TwirlingChannel channel_at(const CompoundPoissonSemigroup& sg, double t);

Operator twirl_apply(const WeylSystem& w, const TwirlingChannel& ch, const Operator& a);
DensityOperator twirl_apply(const WeylSystem& w, const TwirlingChannel& ch,
                            const DensityOperator& rho);

// ‖Q(S_t u) − 𝔗_t(Q u)‖_HS; 0 up to roundoff for every u.
double intertwining_defect(const WeylSystem& w, const CompoundPoissonSemigroup& sg, double t,
                           const PhaseFunction& u);

// −Σ λ·ln λ with eigenvalues below 1e-15 clipped to zero.
double von_neumann_entropy(const DensityOperator& rho);

double purity(const DensityOperator& rho);  // tr(ρ̂²)

struct ChoiCheck {
    double min_eigenvalue = 0.0;       // ≥ −1e-10 for a completely positive map
    double trace_preserving_defect = 0.0;  // ‖Tr_out(Choi) − I‖_F
};
ChoiCheck choi_check(const WeylSystem& w, const TwirlingChannel& ch);

}  // namespace sqir
