#include "sqir/random.hpp"

#include <cmath>
#include <numbers>

namespace sqir {

double Rng::uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gauss() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;  // keep log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Cx Rng::cgauss() {
    const double re = gauss();
    const double im = gauss();
    return {re, im};
}

Eigen::VectorXcd random_state(Rng& rng, int d) {
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i) v[i] = rng.cgauss();
    return v / v.norm();
}

Eigen::MatrixXcd random_density_matrix(Rng& rng, int d) {
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.cgauss();
    Eigen::MatrixXcd rho = g * g.adjoint();
    return rho / rho.trace().real();
}

Eigen::MatrixXcd random_pure_density_matrix(Rng& rng, int d) {
    const Eigen::VectorXcd v = random_state(rng, d);
    return v * v.adjoint();
}

Eigen::MatrixXcd random_hermitian(Rng& rng, int d) {
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.cgauss();
    return 0.5 * (g + g.adjoint());
}

Eigen::MatrixXcd random_unitary(Rng& rng, int d) {
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.cgauss();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const Cx rjj = r(j, j);
        const double a = std::abs(rjj);
        q.col(j) *= (a > 0.0) ? rjj / a : Cx(1.0, 0.0);
    }
    return q;
}

Eigen::MatrixXcd random_nonpositive_unit_trace(Rng& rng, int d, double neg) {
    Eigen::VectorXd lam(d);
    double sum = 0.0;
    for (int i = 0; i < d; ++i) {
        double u = rng.uniform01();
        if (u < 0x1.0p-53) u = 0x1.0p-53;
        lam[i] = -std::log(u);
        sum += lam[i];
    }
    lam /= sum;
    int imin = 0;
    lam.minCoeff(&imin);
    lam[imin] = -neg;
    const double rest = lam.sum() + neg;  // sum of the non-flipped entries
    for (int i = 0; i < d; ++i) {
        if (i != imin) lam[i] *= (1.0 + neg) / rest;  // total trace back to 1
    }
    const Eigen::MatrixXcd v = random_unitary(rng, d);
    return v * lam.cast<Cx>().asDiagonal() * v.adjoint();
}

PhaseFunction random_phase_function(Rng& rng, const PhaseGroup& g) {
    PhaseFunction f(g);
    for (int i = 0; i < g.size(); ++i) f.values[i] = rng.cgauss();
    return f;
}

GroupMeasure random_probability_measure(Rng& rng, const PhaseGroup& g) {
    GroupMeasure m(g);
    for (int i = 0; i < g.size(); ++i) {
        double u = rng.uniform01();
        if (u < 0x1.0p-53) u = 0x1.0p-53;
        m.mass[i] = -std::log(u);
    }
    m.mass /= m.mass.sum();
    return m;
}

}  // namespace sqir
