/*
 * Finite phase space Z_d × Z_d (d odd) with its symplectic form, symmetric
 * multiplier and counting-measure Haar weight, plus the measure/convolution
 * layer and the ℓ²(G) function tables used by every other module.
 *
 *   σ(z;w)  = q·p̃ − p·q̃  (mod d)                 symplectic indexing form
 *   m(z,w)  = ω^{2⁻¹·σ(z;w)},  ω = e^{2πi/d}      2-cocycle (multiplier)
 *   (μ∗ν)(z) = Σ_w μ(w)·ν(z−w)                    convolution of measures
 *
 * d is restricted to odd values so 2⁻¹ = (d+1)/2 exists mod d and the
 * multiplier is symmetric: m(z,−z) = 1.  The Haar weight is the counting
 * measure (weight 1 per element), which keeps convolutions and Fourier sums
 * free of stray 1/d² factors.
 *
 * Everything here is immutable after construction and safe to share across
 * threads.
 */
#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace sqir {

using Cx = std::complex<double>;

struct PhasePoint {
    int q = 0;
    int p = 0;
    bool operator==(const PhasePoint&) const = default;
};

class PhaseGroup {
public:
    explicit PhaseGroup(int d);

    int d() const { return d_; }
    int size() const { return d_ * d_; }
    int half_inv() const { return half_inv_; }  // 2^{-1} mod d
    double haar_weight() const { return 1.0; }  // counting measure, unimodular

    // Row-major (q-major) linear index of a point; the layout every length-d²
    // table in the library uses.
    int index(PhasePoint z) const { return z.q * d_ + z.p; }
    PhasePoint point(int idx) const { return {idx / d_, idx % d_}; }

    int mod(long long x) const { return static_cast<int>(((x % d_) + d_) % d_); }
    PhasePoint reduce(PhasePoint z) const { return {mod(z.q), mod(z.p)}; }
    PhasePoint add(PhasePoint z, PhasePoint w) const { return {mod(z.q + w.q), mod(z.p + w.p)}; }
    PhasePoint sub(PhasePoint z, PhasePoint w) const { return {mod(z.q - w.q), mod(z.p - w.p)}; }
    PhasePoint neg(PhasePoint z) const { return {mod(-z.q), mod(-z.p)}; }

    // ω^e with the exponent reduced mod d (table lookup, exact phases).
    Cx omega(long long e) const { return omega_[mod(e)]; }

    bool operator==(const PhaseGroup& o) const { return d_ == o.d_; }
    bool operator!=(const PhaseGroup& o) const { return d_ != o.d_; }

private:
    int d_;
    int half_inv_;
    std::vector<Cx> omega_;
};

// σ(z;w) = (z.q·w.p − z.p·w.q) mod d.  Antisymmetric and non-degenerate.
int symplectic_index(const PhaseGroup& g, PhasePoint z, PhasePoint w);

// m(z,w) = ω^{2⁻¹·σ(z;w)}; satisfies the 2-cocycle identity
// m(z,w)·m(z+w,v) = m(w,v)·m(z,w+v) and m(z,−z) = 1.
Cx multiplier(const PhaseGroup& g, PhasePoint z, PhasePoint w);

// Real measure on Z_d × Z_d, stored dense (d is small).
struct GroupMeasure {
    PhaseGroup group;
    Eigen::VectorXd mass;  // length d², indexed by PhaseGroup::index

    GroupMeasure(PhaseGroup g, Eigen::VectorXd m);
    explicit GroupMeasure(PhaseGroup g) : GroupMeasure(g, Eigen::VectorXd::Zero(g.size())) {}

    double operator()(PhasePoint z) const { return mass[group.index(group.reduce(z))]; }
    double total() const { return mass.sum(); }
    bool is_probability(double tol = 1e-10) const;
};

GroupMeasure point_mass(const PhaseGroup& g, PhasePoint at);
GroupMeasure uniform_measure(const PhaseGroup& g);

// (μ∗ν)(z) = Σ_w μ(w)·ν(z−w); probability × probability → probability.
GroupMeasure convolve(const GroupMeasure& mu, const GroupMeasure& nu);

// Complex-valued function on G as a dense length-d² table.  Houses coefficient
// functions, dequantized symbols, characteristic functions and positive-type
// candidates alike.
struct PhaseFunction {
    PhaseGroup group;
    Eigen::VectorXcd values;  // length d², indexed by PhaseGroup::index

    PhaseFunction(PhaseGroup g, Eigen::VectorXcd v);
    explicit PhaseFunction(PhaseGroup g) : PhaseFunction(g, Eigen::VectorXcd::Zero(g.size())) {}

    Cx operator()(PhasePoint z) const { return values[group.index(group.reduce(z))]; }
    Cx& at(PhasePoint z) { return values[group.index(group.reduce(z))]; }

    // ℓ²(G, counting measure) norm.
    double norm() const { return values.norm(); }
};

// ⟨f,g⟩ = Σ_z conj(f(z))·g(z)  (conjugate-linear in the first slot).
Cx ell2_inner(const PhaseFunction& f, const PhaseFunction& g);

void require_same_group(const PhaseGroup& a, const PhaseGroup& b, const char* where);

}  // namespace sqir
