#include "sqir/fock.hpp"

#include <cmath>

namespace sqir {

namespace {

// L_n^{(k)}(x) by the standard three-term recurrence.
double laguerre(int n, int k, double x) {
    if (n == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + k - x;
    for (int j = 1; j < n; ++j) {
        const double next = ((2.0 * j + 1.0 + k - x) * l - (j + k) * lm1) / (j + 1.0);
        lm1 = l;
        l = next;
    }
    return l;
}

// √(n!/m!)·|α|^{m−n} for m ≥ n, in log space to dodge factorial overflow.
double amplitude_factor(int m, int n, double abs_alpha) {
    if (m == n) return 1.0;
    const double log_fact = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0));
    return std::exp(log_fact + (m - n) * std::log(abs_alpha));
}

}  // namespace

StateVector coherent_state(const FockSpace& space, ContinuousPoint z) {
    const Cx alpha = z.alpha();
    StateVector v(space.levels);
    v[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < space.levels; ++n) {
        v[n] = v[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    }
    return v;
}

Eigen::MatrixXcd displacement_fock(const FockSpace& space, ContinuousPoint z,
                                   double central_phase) {
    const int n_dim = space.levels;
    const Cx alpha = z.alpha();
    const double x = std::norm(alpha);
    const Cx prefactor = std::polar(1.0, -central_phase);

    if (x == 0.0) {
        return prefactor * Eigen::MatrixXcd::Identity(n_dim, n_dim);
    }

    const double gauss = std::exp(-0.5 * x);
    const double abs_alpha = std::abs(alpha);
    const Cx dir = alpha / abs_alpha;

    Eigen::MatrixXcd d(n_dim, n_dim);
    for (int m = 0; m < n_dim; ++m) {
        for (int n = 0; n <= m; ++n) {
            const int k = m - n;
            const double mag = amplitude_factor(m, n, abs_alpha) * gauss * laguerre(n, k, x);
            const Cx upper = mag * std::pow(dir, k);
            d(m, n) = upper;
            // ⟨n|D|m⟩ = conj(⟨m|D(−α)... ): sign (−1)^{m−n} with conjugated phase
            if (m != n) {
                d(n, m) = mag * std::pow(-std::conj(dir), k);
            }
        }
    }
    return prefactor * d;
}

Cx continuous_multiplier(ContinuousPoint z, ContinuousPoint w) {
    return std::polar(1.0, 0.5 * (z.q * w.p - z.p * w.q));
}

double resolution_defect_quadrature(const FockSpace& space, double radius, int grid, int levels) {
    if (!(radius > 0.0)) throw std::invalid_argument("resolution_defect_quadrature: radius > 0");
    if (grid < 16) throw std::invalid_argument("resolution_defect_quadrature: grid >= 16");
    if (levels < 0) levels = static_cast<int>(std::floor(0.5 * radius * radius));
    levels = std::max(1, std::min(levels, space.levels));

    const double h = 2.0 * radius / (grid - 1);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(space.levels, space.levels);
    for (int i = 0; i < grid; ++i) {
        const double x = -radius + i * h;
        const double wx = (i == 0 || i == grid - 1) ? 0.5 : 1.0;
        for (int j = 0; j < grid; ++j) {
            const double y = -radius + j * h;
            if (x * x + y * y > radius * radius) continue;
            const double wy = (j == 0 || j == grid - 1) ? 0.5 : 1.0;
            const StateVector v =
                coherent_state(space, ContinuousPoint::from_alpha(Cx(x, y)));
            acc.noalias() += (wx * wy) * (v * v.adjoint());
        }
    }
    acc *= h * h / std::numbers::pi;
    acc -= Eigen::MatrixXcd::Identity(space.levels, space.levels);

    const Eigen::MatrixXcd block = acc.topLeftCorner(levels, levels);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (block + block.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

std::vector<Cx> characteristic_fock(const FockSpace& space, const Operator& rho,
                                    const std::vector<ContinuousPoint>& grid) {
    if (rho.rows() != space.levels || rho.cols() != space.levels) {
        throw std::invalid_argument("characteristic_fock: state dimension mismatch");
    }
    std::vector<Cx> out;
    out.reserve(grid.size());
    for (const ContinuousPoint& z : grid) {
        out.push_back((displacement_fock(space, z).adjoint() * rho).trace());
    }
    return out;
}

GramCheck quantum_positive_type_continuous(const std::function<Cx(ContinuousPoint)>& u,
                                           const std::vector<ContinuousPoint>& points) {
    const int n = static_cast<int>(points.size());
    Eigen::MatrixXcd m(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            const ContinuousPoint diff{points[k].q - points[j].q, points[k].p - points[j].p};
            const double omega = points[j].q * points[k].p - points[j].p * points[k].q;
            m(j, k) = u(diff) * std::polar(1.0, 0.5 * omega);
        }
    }
    GramCheck out;
    out.hermiticity_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    out.valid_candidate = out.hermiticity_defect <= GramCheck::kCandidateSymmetryTol;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    out.min_eigenvalue = es.eigenvalues().minCoeff();
    out.psd = out.valid_candidate && out.min_eigenvalue >= -GramCheck::kPsdTol;
    return out;
}

}  // namespace sqir
