/*
 * Acceptance suite.  Runs the end-to-end battery for the whole library and
 * prints exactly one PASS/FAIL line per criterion, with the measured values.
 * Exit status is the number of failed criteria.
 *
 * Criterion 11 exercises the installed CLI; pass its path with --cli (the
 * ctest registration wires in the built binary automatically).
 */
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sqir/cwt.hpp"
#include "sqir/fock.hpp"
#include "sqir/products.hpp"
#include "sqir/random.hpp"
#include "sqir/semigroup.hpp"
#include "sqir/serialize.hpp"

using namespace sqir;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Duflo-Moore orthogonality relations, unimodular case, C = sqrt(d)·I.
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    Rng rng(9001);
    for (int d : {3, 5, 7}) {
        const WeylSystem w{PhaseGroup(d)};
        for (int trial = 0; trial < 20; ++trial) {
            const auto psi1 = random_state(rng, d), psi2 = random_state(rng, d);
            const auto phi1 = random_state(rng, d), phi2 = random_state(rng, d);
            const Cx lhs = ell2_inner(coefficient(w, psi1, phi1), coefficient(w, psi2, phi2));
            const Cx rhs = static_cast<double>(d) * phi1.dot(phi2) * psi2.dot(psi1);
            worst = std::max(worst, std::abs(lhs - rhs));  // all norms are 1
        }
    }
    const double elapsed = seconds_since(start);
    report(1, worst < 1e-10 && elapsed < 1.0, "Duflo-Moore orthogonality relations",
           "max defect " + fmt(worst) + ", " + fmt(elapsed) + " s");
}

// 2. Resolution of the identity for every tested normalized vector, d <= 7.
void criterion_2() {
    double worst = 0.0;
    Rng rng(9002);
    for (int d : {3, 5, 7}) {
        const WeylSystem w{PhaseGroup(d)};
        for (int k = 0; k < d; ++k) {
            Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d);
            e[k] = 1.0;
            worst = std::max(worst, resolution_of_identity_defect(w, e));
        }
        for (int trial = 0; trial < 10; ++trial) {
            worst = std::max(worst, resolution_of_identity_defect(w, random_state(rng, d)));
        }
    }
    report(2, worst < 1e-12, "resolution of the identity", "max defect " + fmt(worst));
}

// 3. Dequantization isometry and adjointness on 50 random operators per d.
void criterion_3() {
    double worst_iso = 0.0, worst_adj = 0.0;
    Rng rng(9003);
    for (int d : {3, 5, 7}) {
        const WeylSystem w{PhaseGroup(d)};
        for (int trial = 0; trial < 50; ++trial) {
            Eigen::MatrixXcd a(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) a(i, j) = rng.cgauss();
            worst_iso = std::max(worst_iso, std::abs(dequantize(w, a).norm() - a.norm()));
            const PhaseFunction f = random_phase_function(rng, w.group());
            const Cx hs = (quantize(w, f).adjoint() * a).trace();
            const Cx l2 = ell2_inner(f, dequantize(w, a));
            worst_adj = std::max(worst_adj, std::abs(hs - l2));
        }
    }
    report(3, worst_iso < 1e-10 && worst_adj < 1e-10, "dequantization isometry and adjointness",
           "isometry " + fmt(worst_iso) + ", adjointness " + fmt(worst_adj));
}

// 4. Star product: three formulas, associativity, H*-identity.
void criterion_4() {
    double worst_agree = 0.0, worst_assoc = 0.0, worst_hstar = 0.0;
    Rng rng(9004);
    for (int d : {3, 5, 7}) {
        const WeylSystem w{PhaseGroup(d)};
        for (int trial = 0; trial < 20; ++trial) {
            const PhaseFunction f1 = random_phase_function(rng, w.group());
            const PhaseFunction f2 = random_phase_function(rng, w.group());
            const PhaseFunction f3 = random_phase_function(rng, w.group());
            const PhaseFunction a = star_product(w, f1, f2, StarMode::via_operators);
            const PhaseFunction b = star_product(w, f1, f2, StarMode::twisted_convolution);
            const PhaseFunction c = star_product(w, f1, f2, StarMode::projected_formulas);
            worst_agree = std::max(worst_agree, (a.values - b.values).cwiseAbs().maxCoeff());
            worst_agree = std::max(worst_agree, (a.values - c.values).cwiseAbs().maxCoeff());
            worst_assoc = std::max(worst_assoc, (star_product(w, a, f3).values -
                                                 star_product(w, f1, star_product(w, f2, f3)).values)
                                                    .cwiseAbs()
                                                    .maxCoeff());
            worst_hstar = std::max(
                worst_hstar,
                std::abs(ell2_inner(star_product(w, f1, f2), f3) -
                         ell2_inner(f2, star_product(w, involution_twisted(f1), f3))));
        }
    }
    report(4, worst_agree < 1e-10 && worst_assoc < 1e-10 && worst_hstar < 1e-10,
           "star-product formulas, associativity, H*-identity",
           "agreement " + fmt(worst_agree) + ", associativity " + fmt(worst_assoc) + ", H* " +
               fmt(worst_hstar));
}

// 5. Q1-Q4 battery at d = 5.
void criterion_5() {
    const int d = 5;
    const WeylSystem w{PhaseGroup(d)};
    const auto pts = all_points(w.group());
    Rng rng(9005);

    bool all_positive_pass = true;
    for (int i = 0; i < 50; ++i) {
        const PhaseFunction chi =
            characteristic_function(w, DensityOperator{random_density_matrix(rng, d)});
        if (quantum_positive_type(chi, pts).min_eigenvalue < -1e-10) all_positive_pass = false;
        if (qptf_integral_check(w, chi, 20, 9100 + i).min_real < -1e-10) all_positive_pass = false;
    }

    bool all_negative_fail = true;
    for (int i = 0; i < 50; ++i) {
        const Eigen::MatrixXcd a = random_nonpositive_unit_trace(rng, d);
        PhaseFunction u(w.group());
        for (int idx = 0; idx < w.group().size(); ++idx) {
            u.values[idx] = (w.displacement(idx).adjoint() * a).trace();
        }
        if (quantum_positive_type(u, pts).psd) all_negative_fail = false;
        if (qptf_integral_check(w, u, 20, 9200 + i).min_real >= -1e-6) all_negative_fail = false;
    }

    double worst_roundtrip = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Eigen::MatrixXcd rho = random_density_matrix(rng, d);
        const PhaseFunction chi_back =
            characteristic_from_wigner(wigner_function(w, DensityOperator{rho}));
        const Operator back = operator_from_characteristic(w, chi_back);
        worst_roundtrip = std::max(worst_roundtrip, (back - rho).cwiseAbs().maxCoeff());
    }

    report(5, all_positive_pass && all_negative_fail && worst_roundtrip < 1e-10,
           "Q1-Q4 positivity battery and Wigner round trip",
           std::string("positives ") + (all_positive_pass ? "pass" : "FAIL") + ", negatives " +
               (all_negative_fail ? "detected" : "MISSED") + ", round trip " +
               fmt(worst_roundtrip));
}

// 6. Pointwise classical x quantum positivity, 100 random pairs.
void criterion_6() {
    const int d = 5;
    const WeylSystem w{PhaseGroup(d)};
    const auto pts = all_points(w.group());
    Rng rng(9006);
    bool all_psd = true;
    double worst_norm = 0.0;
    for (int i = 0; i < 100; ++i) {
        const CompoundPoissonSemigroup sg{random_probability_measure(rng, w.group()),
                                          0.5 + 2.0 * rng.uniform01()};
        const double t = 2.0 * rng.uniform01();
        const PhaseFunction pt = classical_char(sg, t);
        const PhaseFunction chi =
            characteristic_function(w, DensityOperator{random_density_matrix(rng, d)});
        const PhaseFunction prod{w.group(), pt.values.cwiseProduct(chi.values)};
        if (!quantum_positive_type(prod, pts).psd) all_psd = false;
        worst_norm = std::max(worst_norm, std::abs(prod.values[0] - Cx(1.0)));
    }
    report(6, all_psd && worst_norm < 1e-10,
           "classical x quantum pointwise products stay quantum positive",
           std::string(all_psd ? "100/100 psd" : "Q3 failure") + ", origin deviation " +
               fmt(worst_norm));
}

// 7. Semigroup intertwining, entropy monotonicity, Choi positivity.
void criterion_7() {
    Rng rng(9007);
    double worst_defect = 0.0, worst_choi = 0.0, worst_tp = 0.0, worst_entropy_step = 0.0;
    for (int d : {3, 5}) {
        const WeylSystem w{PhaseGroup(d)};
        const CompoundPoissonSemigroup sg{random_probability_measure(rng, w.group()), 1.1};
        for (double t : {0.1, 0.5, 1.0, 3.0}) {
            const PhaseFunction chi =
                characteristic_function(w, DensityOperator{random_density_matrix(rng, d)});
            worst_defect = std::max(worst_defect, intertwining_defect(w, sg, t, chi));
            const ChoiCheck choi = choi_check(w, channel_at(sg, t));
            worst_choi = std::min(worst_choi, choi.min_eigenvalue);
            worst_tp = std::max(worst_tp, choi.trace_preserving_defect);
        }
        for (int trial = 0; trial < 20; ++trial) {
            const DensityOperator rho0{random_density_matrix(rng, d)};
            double last = von_neumann_entropy(rho0);
            for (int step = 1; step <= 10; ++step) {
                const double s =
                    von_neumann_entropy(twirl_apply(w, channel_at(sg, 0.2 * step), rho0));
                worst_entropy_step = std::min(worst_entropy_step, s - last);
                last = s;
            }
        }
    }
    report(7,
           worst_defect < 1e-10 && worst_entropy_step >= -1e-10 && worst_choi >= -1e-10 &&
               worst_tp < 1e-10,
           "semigroup intertwining, entropy, complete positivity",
           "defect " + fmt(worst_defect) + ", min entropy step " + fmt(worst_entropy_step) +
               ", Choi min " + fmt(worst_choi) + ", TP defect " + fmt(worst_tp));
}

// 8. State products: purity characterization, Lie trace, twirled product.
void criterion_8() {
    Rng rng(9008);
    bool characterization_ok = true;
    double worst_lie = 0.0;
    for (int d : {3, 5, 7}) {
        for (int trial = 0; trial < 10; ++trial) {
            const Operator pure = random_pure_density_matrix(rng, d);
            const auto same =
                state_product_diagnostics(DensityOperator{pure}, DensityOperator{pure});
            if (!(same.comp_is_state && same.jordan_is_state &&
                  std::abs(same.tr_comp - 1.0) < 1e-10)) {
                characterization_ok = false;
            }
            const auto distinct = state_product_diagnostics(
                DensityOperator{pure}, DensityOperator{random_pure_density_matrix(rng, d)});
            if (distinct.comp_is_state || distinct.jordan_is_state ||
                distinct.tr_comp >= 1.0 - 1e-9) {
                characterization_ok = false;
            }
            const auto mixed = state_product_diagnostics(
                DensityOperator{random_density_matrix(rng, d)}, DensityOperator{pure});
            if (mixed.comp_is_state || mixed.tr_comp >= 1.0 - 1e-9) characterization_ok = false;
            worst_lie = std::max(worst_lie, std::abs(lie(random_density_matrix(rng, d),
                                                         random_density_matrix(rng, d))
                                                         .trace()));
        }
    }

    double worst_trace = 0.0, worst_eig = 0.0, worst_assoc = 0.0, worst_sum = 0.0,
           worst_nonneg = 0.0;
    int triples_done = 0;
    for (int d : {3, 5, 7}) {
        const WeylSystem w{PhaseGroup(d)};
        const int n = (d == 7) ? 66 : 67;
        for (int trial = 0; trial < n; ++trial, ++triples_done) {
            const TwirledAlgebra alg{w, DensityOperator{random_density_matrix(rng, d)}};
            const DensityOperator rho{random_density_matrix(rng, d)};
            const DensityOperator sigma{random_density_matrix(rng, d)};
            const Operator prod = twirled_product(alg, rho.matrix(), sigma.matrix());
            const DensityDefects defects = density_defects(prod);
            worst_trace = std::max(worst_trace, defects.trace_deviation);
            worst_eig = std::min(worst_eig, defects.min_eigenvalue);

            const Operator gamma = random_density_matrix(rng, d);
            worst_assoc = std::max(
                worst_assoc, (twirled_product(alg, prod, gamma) -
                              twirled_product(alg, rho.matrix(),
                                              twirled_product(alg, sigma.matrix(), gamma)))
                                 .cwiseAbs()
                                 .maxCoeff());

            const GroupMeasure m = induced_probability_measure(alg, rho);
            worst_sum = std::max(worst_sum, std::abs(m.total() - 1.0));
            worst_nonneg = std::min(worst_nonneg, m.mass.minCoeff());
        }
    }
    report(8,
           characterization_ok && worst_lie < 1e-12 && worst_trace < 1e-10 &&
               worst_eig >= -1e-10 && worst_assoc < 1e-10 && worst_sum < 1e-10 &&
               worst_nonneg >= -1e-12,
           "state products: purity characterization, Lie trace, twirled product",
           std::to_string(triples_done) + " triples, trace " + fmt(worst_trace) + ", min eig " +
               fmt(worst_eig) + ", associativity " + fmt(worst_assoc) + ", Lie trace " +
               fmt(worst_lie));
}

// 9. Fock backend.
void criterion_9() {
    const auto start = std::chrono::steady_clock::now();
    const FockSpace space(60);
    Rng rng(9009);

    double worst_overlap = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const Cx z1 = 1.9 * Cx(2 * rng.uniform01() - 1, 2 * rng.uniform01() - 1) / std::sqrt(2.0);
        const Cx z2 = 1.9 * Cx(2 * rng.uniform01() - 1, 2 * rng.uniform01() - 1) / std::sqrt(2.0);
        const StateVector v1 = coherent_state(space, ContinuousPoint::from_alpha(z1));
        const StateVector v2 = coherent_state(space, ContinuousPoint::from_alpha(z2));
        const Cx expected = std::exp(-0.5 * (std::norm(z1) + std::norm(z2)) + std::conj(z1) * z2);
        worst_overlap = std::max(worst_overlap, std::abs(v1.dot(v2) - expected));
    }

    Eigen::MatrixXcd vacuum = Eigen::MatrixXcd::Zero(60, 60);
    vacuum(0, 0) = 1.0;
    double worst_char = 0.0;
    std::vector<ContinuousPoint> grid;
    for (double q = -2.0; q <= 2.0001; q += 0.4) {
        for (double p = -2.0; p <= 2.0001; p += 0.4) grid.push_back({q, p});
    }
    const std::vector<Cx> chi = characteristic_fock(space, vacuum, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double expected = std::exp(-0.25 * (grid[i].q * grid[i].q + grid[i].p * grid[i].p));
        worst_char = std::max(worst_char, std::abs(chi[i] - Cx(expected)));
    }

    const double defect = resolution_defect_quadrature(FockSpace(40), 6.0, 200, 10);
    const double elapsed = seconds_since(start);
    report(9, worst_overlap < 1e-10 && worst_char < 1e-8 && defect < 1e-3 && elapsed < 30.0,
           "Fock backend: overlaps, vacuum characteristic, quadrature frame",
           "overlap " + fmt(worst_overlap) + ", vacuum " + fmt(worst_char) + ", defect " +
               fmt(defect) + ", " + fmt(elapsed) + " s");
}

// 10. Affine CWT at the committed reference grid.
void criterion_10() {
    const ReferenceGrid ref;
    const SampledSignal psi = make_morlet(ref.signal_len, ref.dt, ref.omega0);
    const SampledSignal phi = make_chirp(ref.signal_len, ref.dt, 3.5, 0.125, 4.0);

    const CwtTable table = cwt(phi, psi, ref.scales, ref.translations);
    const double ratio = isometry_ratio(table, psi, phi);

    const bool gaussian_flagged =
        admissibility_report(make_gaussian(ref.signal_len, ref.dt)).divergent;

    const SampledSignal psi2 = make_morlet(ref.signal_len, ref.dt, 5.5);
    const SampledSignal phi2 = make_gabor(ref.signal_len, ref.dt, 4.0, 3.0, 1.0);
    const double ortho =
        orthogonality_relation_defect(psi, psi2, phi, phi2, ref.scales, ref.translations);

    report(10, std::abs(ratio - 1.0) <= 0.03 && gaussian_flagged && ortho <= 0.03,
           "affine CWT: isometry, admissibility flag, orthogonality relation",
           "ratio " + fmt(ratio) + ", Gaussian flagged " + (gaussian_flagged ? "yes" : "NO") +
               ", orthogonality defect " + fmt(ortho));
}

// 11. CLI determinism and the full default suite runtime.
void criterion_11(const std::string& cli) {
    if (cli.empty()) {
        report(11, false, "CLI determinism", "no --cli path provided");
        return;
    }
    namespace fs = std::filesystem;
    const std::string cli_abs = fs::absolute(cli).string();
    const auto start = std::chrono::steady_clock::now();

    const std::vector<std::pair<std::string, std::vector<std::string>>> verbs = {
        {"frame-check", {"--d", "5", "--seed", "1", "--out", "frame.json"}},
        {"star-demo",
         {"--d", "5", "--seed", "1", "--out", "star.json", "--dump", "star_example.json"}},
        {"qpt-check", {"--d", "5", "--seed", "1", "--count", "50", "--out", "qpt.json"}},
        {"semigroup-run", {"--d", "5", "--seed", "1", "--out", "trajectory.csv"}},
        {"twirl-product", {"--d", "5", "--seed", "1", "--out", "twirl.json"}},
        {"cwt", {"--out", "coeffs.csv", "--report", "cwt.json"}},
        {"fock-demo", {"--out", "fock_grid.csv", "--report", "fock.json"}},
    };

    bool all_ok = true;
    std::string detail;
    for (const std::string run : {"acc_run1", "acc_run2"}) {
        fs::remove_all(run);
        fs::create_directories(run);
        for (const auto& [verb, args] : verbs) {
            std::string cmd = "cd " + run + " && " + cli_abs + " " + verb;
            for (const std::string& a : args) cmd += " " + a;
            cmd += " > cli_stdout_" + verb + ".log 2>&1";
            if (std::system(cmd.c_str()) != 0) {
                all_ok = false;
                detail = verb + " exited nonzero";
            }
        }
    }

    if (all_ok) {
        const std::vector<std::string> files = {"frame.json", "star.json", "star_example.json",
                                                "qpt.json",   "trajectory.csv", "twirl.json",
                                                "coeffs.csv", "cwt.json",   "fock_grid.csv",
                                                "fock.json"};
        for (const std::string& f : files) {
            if (read_file("acc_run1/" + f) != read_file("acc_run2/" + f)) {
                all_ok = false;
                detail = f + " differs between runs";
                break;
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 120.0) {
        all_ok = false;
        detail = "runtime " + fmt(elapsed) + " s over budget";
    }
    report(11, all_ok, "CLI determinism and default-suite runtime",
           (detail.empty() ? "byte-identical outputs" : detail) + ", double run " + fmt(elapsed) +
               " s");
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
    }

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11(cli);

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}
