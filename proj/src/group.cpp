#include "sqir/group.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sqir {

PhaseGroup::PhaseGroup(int d) : d_(d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("PhaseGroup: dimension must be odd and >= 3, got " +
                                    std::to_string(d));
    }
    half_inv_ = (d + 1) / 2;  // (2·half_inv) mod d == 1 for odd d
    omega_.resize(d_);
    for (int k = 0; k < d_; ++k) {
        omega_[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / d_);
    }
}

int symplectic_index(const PhaseGroup& g, PhasePoint z, PhasePoint w) {
    long long s = static_cast<long long>(z.q) * w.p - static_cast<long long>(z.p) * w.q;
    return g.mod(s);
}

Cx multiplier(const PhaseGroup& g, PhasePoint z, PhasePoint w) {
    return g.omega(static_cast<long long>(g.half_inv()) * symplectic_index(g, z, w));
}

GroupMeasure::GroupMeasure(PhaseGroup g, Eigen::VectorXd m) : group(g), mass(std::move(m)) {
    if (mass.size() != group.size()) {
        throw std::invalid_argument("GroupMeasure: table length must be d^2");
    }
}

bool GroupMeasure::is_probability(double tol) const {
    return mass.minCoeff() >= -tol && std::abs(total() - 1.0) <= tol;
}

GroupMeasure point_mass(const PhaseGroup& g, PhasePoint at) {
    GroupMeasure m(g);
    m.mass[g.index(g.reduce(at))] = 1.0;
    return m;
}

GroupMeasure uniform_measure(const PhaseGroup& g) {
    return {g, Eigen::VectorXd::Constant(g.size(), 1.0 / g.size())};
}

GroupMeasure convolve(const GroupMeasure& mu, const GroupMeasure& nu) {
    require_same_group(mu.group, nu.group, "convolve");
    const PhaseGroup& g = mu.group;
    GroupMeasure out(g);
    for (int zi = 0; zi < g.size(); ++zi) {
        const PhasePoint z = g.point(zi);
        double acc = 0.0;
        for (int wi = 0; wi < g.size(); ++wi) {
            acc += mu.mass[wi] * nu.mass[g.index(g.sub(z, g.point(wi)))];
        }
        out.mass[zi] = acc;
    }
    return out;
}

PhaseFunction::PhaseFunction(PhaseGroup g, Eigen::VectorXcd v) : group(g), values(std::move(v)) {
    if (values.size() != group.size()) {
        throw std::invalid_argument("PhaseFunction: table length must be d^2");
    }
}

Cx ell2_inner(const PhaseFunction& f, const PhaseFunction& g) {
    require_same_group(f.group, g.group, "ell2_inner");
    return f.values.dot(g.values);  // Eigen dot conjugates the first factor
}

void require_same_group(const PhaseGroup& a, const PhaseGroup& b, const char* where) {
    if (a != b) {
        throw std::invalid_argument(std::string(where) + ": phase-space dimension mismatch (d=" +
                                    std::to_string(a.d()) + " vs d=" + std::to_string(b.d()) + ")");
    }
}

}  // namespace sqir
