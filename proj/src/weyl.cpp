#include "sqir/weyl.hpp"

#include <cmath>

namespace sqir {

namespace {

void require_nonzero(const StateVector& psi, const char* where) {
    if (psi.norm() == 0.0) {
        throw std::invalid_argument(std::string(where) + ": analyzing vector must be nonzero");
    }
}

}  // namespace

WeylSystem::WeylSystem(PhaseGroup g) : group_(g), duflo_(std::sqrt(static_cast<double>(g.d()))) {
    const int d = group_.d();
    disp_.reserve(group_.size());
    for (int idx = 0; idx < group_.size(); ++idx) {
        const PhasePoint z = group_.point(idx);
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
        // column y carries ω^{2⁻¹qp + py} at row y+q
        const long long qp = static_cast<long long>(group_.half_inv()) * z.q * z.p;
        for (int y = 0; y < d; ++y) {
            u(group_.mod(y + z.q), y) = group_.omega(qp + static_cast<long long>(z.p) * y);
        }
        disp_.push_back(std::move(u));
    }
}

PhaseFunction coefficient(const WeylSystem& w, const StateVector& psi, const StateVector& phi) {
    if (psi.size() != w.dim() || phi.size() != w.dim()) {
        throw std::invalid_argument("coefficient: state dimension must match the representation");
    }
    PhaseFunction c(w.group());
    for (int idx = 0; idx < w.group().size(); ++idx) {
        c.values[idx] = (w.displacement(idx) * psi).dot(phi);  // ⟨U(z)ψ, φ⟩
    }
    return c;
}

PhaseFunction wavelet_transform(const WeylSystem& w, const StateVector& psi,
                                const StateVector& phi) {
    require_nonzero(psi, "wavelet_transform");
    PhaseFunction c = coefficient(w, psi, phi);
    c.values /= w.duflo_constant() * psi.norm();  // ‖Cψ‖ = √d·‖ψ‖
    return c;
}

double resolution_of_identity_defect(const WeylSystem& w, const StateVector& psi) {
    require_nonzero(psi, "resolution_of_identity_defect");
    const int d = w.dim();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
    for (int idx = 0; idx < w.group().size(); ++idx) {
        const StateVector u = w.displacement(idx) * psi;
        acc.noalias() += u * u.adjoint();
    }
    acc /= d * psi.squaredNorm();
    acc -= Eigen::MatrixXcd::Identity(d, d);
    // defect matrix is Hermitian; operator norm = largest |eigenvalue|
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(acc, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd reproducing_kernel_projector(const WeylSystem& w, const StateVector& psi) {
    require_nonzero(psi, "reproducing_kernel_projector");
    const int d = w.dim();
    const int n = w.group().size();
    // matrix of W_ψ: row z, column x ↦ ‖Cψ‖⁻¹·conj((U(z)ψ)_x)
    Eigen::MatrixXcd wmat(n, d);
    for (int idx = 0; idx < n; ++idx) {
        wmat.row(idx) = (w.displacement(idx) * psi).conjugate().transpose();
    }
    wmat /= w.duflo_constant() * psi.norm();
    return wmat * wmat.adjoint();
}

int commutant_dimension(const WeylSystem& w, double tol) {
    const int d = w.dim();
    const int n = w.group().size();
    // rows: entries of U(z)X − XU(z) for all z; unknowns: X (column-major)
    Eigen::MatrixXcd sys = Eigen::MatrixXcd::Zero(n * d * d, d * d);
    for (int idx = 0; idx < n; ++idx) {
        const Eigen::MatrixXcd& u = w.displacement(idx);
        // vec(UX − XU) = (I⊗U − Uᵀ⊗I)·vec(X)
        for (int col = 0; col < d; ++col) {
            for (int row = 0; row < d; ++row) {
                const int r = idx * d * d + col * d + row;
                for (int k = 0; k < d; ++k) {
                    sys(r, col * d + k) += u(row, k);
                    sys(r, k * d + row) -= u(k, col);
                }
            }
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv[i] > tol * sv[0]) ++rank;
    }
    return d * d - rank;
}

}  // namespace sqir
