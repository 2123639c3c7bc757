#include "sqir/semigroup.hpp"

#include <cmath>

namespace sqir {

namespace {

void require_nonneg_time(double t, const char* where) {
    if (t < 0.0 || !std::isfinite(t)) {
        throw std::invalid_argument(std::string(where) + ": time must be finite and >= 0");
    }
}

}  // namespace

CompoundPoissonSemigroup::CompoundPoissonSemigroup(GroupMeasure jump, double rate)
    : jump_(std::move(jump)), rate_(rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw std::invalid_argument("CompoundPoissonSemigroup: rate must be positive");
    }
    if (!jump_.is_probability()) {
        throw std::invalid_argument(
            "CompoundPoissonSemigroup: jump measure must be a probability measure");
    }
}

GroupMeasure CompoundPoissonSemigroup::measure_at(double t) const {
    require_nonneg_time(t, "measure_at");
    const PhaseGroup& g = group();
    const double mean = rate_ * t;
    const int k_max = std::max(30, static_cast<int>(std::ceil(10.0 * mean)));

    GroupMeasure out(g);
    GroupMeasure power = point_mass(g, {0, 0});  // ν^{∗0}
    double weight = std::exp(-mean);             // e^{−rt}(rt)^k/k!
    double covered = 0.0;
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0) {
            weight *= mean / k;
            if (weight > 0.0) power = convolve(power, jump_);
        }
        if (weight > 0.0) {
            out.mass += weight * power.mass;
            covered += weight;
        }
        if (1.0 - covered < 1e-16) break;  // Poisson tail exhausted
    }
    return out;
}

PhaseFunction classical_char(const CompoundPoissonSemigroup& sg, double t) {
    require_nonneg_time(t, "classical_char");
    const PhaseGroup& g = sg.group();
    const GroupMeasure pt = sg.measure_at(t);
    PhaseFunction out(g);
    for (int zi = 0; zi < g.size(); ++zi) {
        const PhasePoint z = g.point(zi);
        Cx acc = 0.0;
        for (int wi = 0; wi < g.size(); ++wi) {
            acc += g.omega(symplectic_index(g, z, g.point(wi))) * pt.mass[wi];
        }
        out.values[zi] = acc;
    }
    return out;
}

PhaseFunction classical_char_closed_form(const CompoundPoissonSemigroup& sg, double t) {
    require_nonneg_time(t, "classical_char_closed_form");
    const PhaseGroup& g = sg.group();
    PhaseFunction out(g);
    for (int zi = 0; zi < g.size(); ++zi) {
        const PhasePoint z = g.point(zi);
        Cx nu_hat = 0.0;
        for (int wi = 0; wi < g.size(); ++wi) {
            nu_hat += g.omega(symplectic_index(g, z, g.point(wi))) * sg.jump_measure().mass[wi];
        }
        out.values[zi] = std::exp(sg.rate() * t * (nu_hat - 1.0));
    }
    return out;
}

PhaseFunction cq_apply(const CompoundPoissonSemigroup& sg, double t, const PhaseFunction& u) {
    require_same_group(sg.group(), u.group, "cq_apply");
    const PhaseFunction pt = classical_char(sg, t);
    return {u.group, pt.values.cwiseProduct(u.values)};
}

PhaseFunction ClassicalQuantumSemigroup::char_at(double t) const {
    std::scoped_lock guard(lock_);
    auto it = cache_.find(t);
    if (it == cache_.end()) {
        it = cache_.emplace(t, classical_char(base_, t)).first;
    }
    return it->second;
}

PhaseFunction ClassicalQuantumSemigroup::apply(double t, const PhaseFunction& u) const {
    require_same_group(base_.group(), u.group, "ClassicalQuantumSemigroup::apply");
    const PhaseFunction pt = char_at(t);
    return {u.group, pt.values.cwiseProduct(u.values)};
}

TwirlingChannel channel_at(const CompoundPoissonSemigroup& sg, double t) {
    return {sg.measure_at(t)};
}

Operator twirl_apply(const WeylSystem& w, const TwirlingChannel& ch, const Operator& a) {
    require_same_group(w.group(), ch.weights.group, "twirl_apply");
    if (a.rows() != w.dim() || a.cols() != w.dim()) {
        throw std::invalid_argument("twirl_apply: operator dimension mismatch");
    }
    Operator out = Operator::Zero(w.dim(), w.dim());
    for (int idx = 0; idx < w.group().size(); ++idx) {
        const double p = ch.weights.mass[idx];
        if (p == 0.0) continue;
        const Eigen::MatrixXcd& u = w.displacement(idx);
        out.noalias() += p * (u * a * u.adjoint());
    }
    return out;
}

DensityOperator twirl_apply(const WeylSystem& w, const TwirlingChannel& ch,
                            const DensityOperator& rho) {
    return DensityOperator(twirl_apply(w, ch, rho.matrix()));
}

double intertwining_defect(const WeylSystem& w, const CompoundPoissonSemigroup& sg, double t,
                           const PhaseFunction& u) {
    const Operator lhs = quantize(w, cq_apply(sg, t, u));
    const Operator rhs = twirl_apply(w, channel_at(sg, t), quantize(w, u));
    return (lhs - rhs).norm();
}

double von_neumann_entropy(const DensityOperator& rho) {
    Eigen::SelfAdjointEigenSolver<Operator> es(rho.matrix(), Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = es.eigenvalues()[i];
        if (lam > 1e-15) s -= lam * std::log(lam);
    }
    return s;
}

double purity(const DensityOperator& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

ChoiCheck choi_check(const WeylSystem& w, const TwirlingChannel& ch) {
    require_same_group(w.group(), ch.weights.group, "choi_check");
    const int d = w.dim();
    // C[(i,m),(j,n)] = Σ_z p(z)·U_z(m,i)·conj(U_z(n,j)): stack each Kraus
    // unitary into a d²-vector and accumulate the weighted outer products.
    Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(d * d, d * d);
    Eigen::VectorXcd stacked(d * d);
    for (int idx = 0; idx < w.group().size(); ++idx) {
        const double p = ch.weights.mass[idx];
        if (p == 0.0) continue;
        const Eigen::MatrixXcd& u = w.displacement(idx);
        for (int i = 0; i < d; ++i)
            for (int m = 0; m < d; ++m) stacked[i * d + m] = u(m, i);
        choi.noalias() += p * (stacked * stacked.adjoint());
    }

    ChoiCheck out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(choi, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = es.eigenvalues().minCoeff();

    Eigen::MatrixXcd tr_out = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int m = 0; m < d; ++m) tr_out(i, j) += choi(i * d + m, j * d + m);
    out.trace_preserving_defect = (tr_out - Eigen::MatrixXcd::Identity(d, d)).norm();
    return out;
}

}  // namespace sqir
