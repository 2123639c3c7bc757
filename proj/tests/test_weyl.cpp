#include <doctest.h>

#include "sqir/random.hpp"
#include "sqir/weyl.hpp"

using namespace sqir;

namespace {

Eigen::VectorXcd basis_vector(int d, int k) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d);
    e[k] = 1.0;
    return e;
}

}  // namespace

TEST_SUITE_BEGIN("weyl");

TEST_CASE("displacement at the origin is the identity; all displacements unitary") {
    for (int d : {3, 5, 7}) {
        const WeylSystem w{PhaseGroup(d)};
        CHECK((w.displacement({0, 0}) - Eigen::MatrixXcd::Identity(d, d)).norm() == 0.0);
        for (int idx = 0; idx < w.group().size(); ++idx) {
            const Eigen::MatrixXcd& u = w.displacement(idx);
            CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(d, d)).norm() < 1e-13);
        }
    }
}

TEST_CASE("projective relation U(z+w) = m(z,w) U(z) U(w), exhaustive for d = 3, 5") {
    for (int d : {3, 5}) {
        const PhaseGroup g(d);
        const WeylSystem w{g};
        double worst = 0.0;
        for (int i = 0; i < g.size(); ++i) {
            for (int j = 0; j < g.size(); ++j) {
                const PhasePoint z = g.point(i), v = g.point(j);
                const Eigen::MatrixXcd lhs = w.displacement(g.add(z, v));
                const Eigen::MatrixXcd rhs =
                    multiplier(g, z, v) * (w.displacement(z) * w.displacement(v));
                worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
            }
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("adjoint is the inverse displacement: U(z)^dag = U(-z)") {
    const PhaseGroup g(7);
    const WeylSystem w{g};
    for (int i = 0; i < g.size(); ++i) {
        const PhasePoint z = g.point(i);
        CHECK((w.displacement(z).adjoint() - w.displacement(g.neg(z))).cwiseAbs().maxCoeff() <
              1e-14);
    }
}

TEST_CASE("Hilbert-Schmidt Gram: tr(U(z)^dag U(w)) = d delta_zw, exhaustive d = 3") {
    const PhaseGroup g(3);
    const WeylSystem w{g};
    for (int i = 0; i < g.size(); ++i) {
        for (int j = 0; j < g.size(); ++j) {
            const Cx tr = (w.displacement(i).adjoint() * w.displacement(j)).trace();
            const Cx expected = (i == j) ? Cx(3.0) : Cx(0.0);
            CHECK(std::abs(tr - expected) < 1e-13);
        }
    }
}

TEST_CASE("coefficient function: basis evaluation at the origin") {
    const WeylSystem w{PhaseGroup(5)};
    const auto e0 = basis_vector(5, 0);
    const PhaseFunction c = coefficient(w, e0, e0);
    CHECK(std::abs(c({0, 0}) - Cx(1.0)) < 1e-15);
}

TEST_CASE("Schur sum rule: sum |c|^2 = d |psi|^2 |phi|^2") {
    Rng rng(101);
    for (int d : {3, 5, 7}) {
        const WeylSystem w{PhaseGroup(d)};
        const Eigen::VectorXcd psi = 2.0 * random_state(rng, d);  // unnormalized on purpose
        const Eigen::VectorXcd phi = random_state(rng, d);
        const PhaseFunction c = coefficient(w, psi, phi);
        const double expected = d * psi.squaredNorm() * phi.squaredNorm();
        CHECK(std::abs(c.values.squaredNorm() - expected) < 1e-10 * expected);
    }
}

TEST_CASE("orthogonality relations with C = sqrt(d) I") {
    Rng rng(202);
    for (int d : {3, 5, 7}) {
        const WeylSystem w{PhaseGroup(d)};
        for (int trial = 0; trial < 20; ++trial) {
            const Eigen::VectorXcd psi1 = random_state(rng, d), psi2 = random_state(rng, d);
            const Eigen::VectorXcd phi1 = random_state(rng, d), phi2 = random_state(rng, d);
            const Cx lhs = ell2_inner(coefficient(w, psi1, phi1), coefficient(w, psi2, phi2));
            const Cx rhs = static_cast<double>(d) * phi1.dot(phi2) * psi2.dot(psi1);
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }
    }
}

TEST_CASE("Duflo-Moore ratio: sum |c|^2 / (|psi|^2 |phi|^2) = d on random pairs") {
    Rng rng(303);
    const int d = 5;
    const WeylSystem w{PhaseGroup(d)};
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::VectorXcd psi = rng.uniform01() * 3.0 * random_state(rng, d);
        const Eigen::VectorXcd phi = rng.uniform01() * 3.0 * random_state(rng, d);
        if (psi.norm() == 0.0 || phi.norm() == 0.0) continue;
        const double ratio = coefficient(w, psi, phi).values.squaredNorm() /
                             (psi.squaredNorm() * phi.squaredNorm());
        CHECK(ratio == doctest::Approx(d).epsilon(1e-10));
        CHECK(w.duflo_constant() == doctest::Approx(std::sqrt(double(d))));
    }
}

TEST_CASE("wavelet transform is an isometry and vanishes on the zero vector") {
    Rng rng(404);
    const WeylSystem w{PhaseGroup(5)};
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::VectorXcd psi = 3.0 * random_state(rng, 5);
        const Eigen::VectorXcd phi = 2.5 * random_state(rng, 5);
        CHECK(wavelet_transform(w, psi, phi).norm() == doctest::Approx(phi.norm()).epsilon(1e-12));
    }
    const Eigen::VectorXcd psi = random_state(rng, 5);
    CHECK(wavelet_transform(w, psi, Eigen::VectorXcd::Zero(5)).norm() == 0.0);
    CHECK_THROWS_AS(wavelet_transform(w, Eigen::VectorXcd::Zero(5), psi),
                    std::invalid_argument);
}

TEST_CASE("wavelet transform intertwines U with the left regular m-representation") {
    // Convention fixed by this exhaustive check (the scalar leaves the
    // first-slot-antilinear inner product conjugated):
    //   (W_psi U(g) phi)(h) = conj(m(g, h-g)) (W_psi phi)(h-g).
    Rng rng(505);
    const PhaseGroup g(3);
    const WeylSystem w{g};
    const Eigen::VectorXcd psi = random_state(rng, 3);
    const Eigen::VectorXcd phi = random_state(rng, 3);
    const PhaseFunction base = wavelet_transform(w, psi, phi);
    double worst = 0.0;
    for (int gi = 0; gi < g.size(); ++gi) {
        const PhasePoint gp = g.point(gi);
        const PhaseFunction moved = wavelet_transform(w, psi, w.displacement(gp) * phi);
        for (int hi = 0; hi < g.size(); ++hi) {
            const PhasePoint h = g.point(hi);
            const PhasePoint shifted = g.sub(h, gp);
            const Cx expected = std::conj(multiplier(g, gp, shifted)) * base(shifted);
            worst = std::max(worst, std::abs(moved(h) - expected));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("resolution of the identity: defect vanishes for every tested vector") {
    Rng rng(606);
    for (int d : {3, 5, 7}) {
        const WeylSystem w{PhaseGroup(d)};
        CHECK(resolution_of_identity_defect(w, basis_vector(d, 0)) < 1e-12);
        for (int trial = 0; trial < 5; ++trial) {
            const Eigen::VectorXcd psi = random_state(rng, d);
            CHECK(resolution_of_identity_defect(w, psi) < 1e-12);
            CHECK(resolution_of_identity_defect(w, 7.0 * psi) < 1e-12);  // scale invariant
        }
    }
}

TEST_CASE("reproducing kernel projector: idempotent, self-adjoint, rank d") {
    Rng rng(707);
    const int d = 3;
    const WeylSystem w{PhaseGroup(d)};
    const Eigen::VectorXcd psi = random_state(rng, d);
    const Eigen::MatrixXcd proj = reproducing_kernel_projector(w, psi);

    CHECK((proj * proj - proj).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((proj - proj.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(std::abs(proj.trace() - Cx(d)) < 1e-12);

    const Eigen::VectorXcd phi = random_state(rng, d);
    const PhaseFunction wphi = wavelet_transform(w, psi, phi);
    CHECK((proj * wphi.values - wphi.values).cwiseAbs().maxCoeff() < 1e-13);
    // the complement annihilates the range
    CHECK(((Eigen::MatrixXcd::Identity(d * d, d * d) - proj) * wphi.values)
              .cwiseAbs()
              .maxCoeff() < 1e-13);
}

TEST_CASE("irreducibility witness: commutant of {U(z)} is one-dimensional") {
    CHECK(commutant_dimension(WeylSystem{PhaseGroup(3)}) == 1);
    CHECK(commutant_dimension(WeylSystem{PhaseGroup(5)}) == 1);
}

TEST_CASE("coefficient rejects mismatched dimensions") {
    const WeylSystem w{PhaseGroup(3)};
    CHECK_THROWS_AS(coefficient(w, Eigen::VectorXcd::Ones(4), Eigen::VectorXcd::Ones(3)),
                    std::invalid_argument);
}

TEST_SUITE_END();
