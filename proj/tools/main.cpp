/*
 * sqir — command-line laboratory for the square-integrable-representation
 * machinery: finite Weyl frames, phase-space quantization and star products,
 * positivity batteries, twirling semigroups, twirled state products, Fock
 * coherent states and the affine continuous wavelet transform.
 *
 * Every verb runs a battery of checks, prints one line per check (with wall
 * time) and writes a deterministic report to --out: identical configuration
 * (including the seed) reproduces the output byte for byte, so wall times are
 * kept off the file.  Exit status: 0 all checks pass, 1 at least one check
 * failed, 2 configuration error.
 */
#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqir/cwt.hpp"
#include "sqir/fock.hpp"
#include "sqir/products.hpp"
#include "sqir/random.hpp"
#include "sqir/semigroup.hpp"
#include "sqir/serialize.hpp"

namespace {

using namespace sqir;
using nlohmann::json;

// directional interpretation of a check value against its tolerance
enum class Rule { abs_le, ge_neg, le };

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::abs_le: return "abs(value) <= tolerance";
        case Rule::ge_neg: return "value >= -tolerance";
        case Rule::le: return "value <= tolerance";
    }
    return "?";
}

struct CheckRow {
    std::string name;
    std::string inputs_digest;
    double value = 0.0;
    double tolerance = 0.0;
    Rule rule = Rule::abs_le;
    bool pass = false;
    double wall_ms = 0.0;
};

struct Tolerances {
    std::map<std::string, double> values;

    double get(const std::string& key) const {
        const auto it = values.find(key);
        if (it == values.end()) throw std::logic_error("unknown tolerance key: " + key);
        return it->second;
    }
    void apply_overrides(const std::vector<std::string>& kv_pairs) {
        for (const std::string& kv : kv_pairs) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                throw CLI::ValidationError("--tolerance expects KEY=VAL, got '" + kv + "'");
            }
            const std::string key = kv.substr(0, eq);
            if (values.find(key) == values.end()) {
                throw CLI::ValidationError("unknown tolerance key '" + key + "'");
            }
            const double v = std::stod(kv.substr(eq + 1));
            if (!(v > 0.0)) throw CLI::ValidationError("tolerance must be positive");
            values[key] = v;
        }
    }
};

Tolerances default_tolerances() {
    return {{
        {"orthogonality", 1e-10},
        {"resolution", 1e-12},
        {"rkhs", 1e-10},
        {"duflo", 1e-10},
        {"isometry", 1e-10},
        {"dequant_isometry", 1e-10},
        {"adjointness", 1e-10},
        {"star_agreement", 1e-10},
        {"associativity", 1e-10},
        {"hstar", 1e-10},
        {"q3_min_eig", 1e-10},
        {"qptf_min", 1e-10},
        {"witness", 1e-6},
        {"roundtrip", 1e-10},
        {"normalization", 1e-10},
        {"intertwining", 1e-10},
        {"entropy_slack", 1e-10},
        {"choi_min_eig", 1e-10},
        {"trace_preserving", 1e-10},
        {"state_trace", 1e-10},
        {"state_eig", 1e-10},
        {"induced_sum", 1e-10},
        {"induced_nonneg", 1e-12},
        {"lie_trace", 1e-12},
        {"fock_overlap", 1e-10},
        {"fock_vacuum", 1e-8},
        {"fock_resolution", 1e-3},
        {"cwt_isometry_band", 0.03},
        {"cwt_ortho", 0.03},
    }};
}

class Battery {
public:
    Battery(std::string command, std::string digest_material)
        : command_(std::move(command)), digest_(digest_hex(digest_material)) {}

    template <typename Fn>
    void run(const std::string& name, double tolerance, Rule rule, Fn&& compute) {
        const auto start = std::chrono::steady_clock::now();
        CheckRow row;
        row.name = name;
        row.inputs_digest = digest_;
        row.tolerance = tolerance;
        row.rule = rule;
        row.value = compute();
        switch (rule) {
            case Rule::abs_le: row.pass = std::abs(row.value) <= tolerance; break;
            case Rule::ge_neg: row.pass = row.value >= -tolerance; break;
            case Rule::le: row.pass = row.value <= tolerance; break;
        }
        row.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        std::cout << (row.pass ? "[PASS] " : "[FAIL] ") << command_ << "/" << row.name
                  << "  value=" << row.value << "  tol=" << row.tolerance << " ("
                  << rule_name(row.rule) << ")  " << row.wall_ms << " ms\n";
        rows_.push_back(std::move(row));
    }

    bool all_pass() const {
        for (const CheckRow& r : rows_) {
            if (!r.pass) return false;
        }
        return true;
    }
    int failures() const {
        int n = 0;
        for (const CheckRow& r : rows_) n += r.pass ? 0 : 1;
        return n;
    }

    // deterministic report: no wall times in the file
    json to_json(const json& config_echo) const {
        json checks = json::array();
        for (const CheckRow& r : rows_) {
            checks.push_back({{"check_name", r.name},
                              {"inputs_digest", r.inputs_digest},
                              {"value", r.value},
                              {"tolerance", r.tolerance},
                              {"rule", rule_name(r.rule)},
                              {"pass", r.pass}});
        }
        return {{"command", command_},
                {"config", config_echo},
                {"checks", checks},
                {"all_pass", all_pass()}};
    }

private:
    std::string command_;
    std::string digest_;
    std::vector<CheckRow> rows_;
};

void emit(const Battery& battery, const json& config_echo, const std::string& out_path) {
    if (!out_path.empty()) {
        write_file(out_path, battery.to_json(config_echo).dump(2) + "\n");
        std::cout << "report written to " << out_path << "\n";
    }
}

// ---------------------------------------------------------------------------

int cmd_frame_check(int d, std::uint64_t seed, const Tolerances& tol,
                    const std::string& out_path) {
    const WeylSystem w{PhaseGroup(d)};
    Battery battery("frame-check",
                    "frame-check|d=" + std::to_string(d) + "|seed=" + std::to_string(seed));

    battery.run("orthogonality_relation", tol.get("orthogonality"), Rule::abs_le, [&] {
        Rng rng(seed);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto psi1 = random_state(rng, d), psi2 = random_state(rng, d);
            const auto phi1 = random_state(rng, d), phi2 = random_state(rng, d);
            const Cx lhs = ell2_inner(coefficient(w, psi1, phi1), coefficient(w, psi2, phi2));
            const Cx rhs = static_cast<double>(d) * phi1.dot(phi2) * psi2.dot(psi1);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        return worst;
    });

    battery.run("resolution_identity", tol.get("resolution"), Rule::abs_le, [&] {
        Rng rng(seed + 1);
        double worst = 0.0;
        for (int k = 0; k < d; ++k) {
            Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d);
            e[k] = 1.0;
            worst = std::max(worst, resolution_of_identity_defect(w, e));
        }
        for (int trial = 0; trial < 5; ++trial) {
            worst = std::max(worst, resolution_of_identity_defect(w, random_state(rng, d)));
        }
        return worst;
    });

    battery.run("rkhs_projector", tol.get("rkhs"), Rule::abs_le, [&] {
        Rng rng(seed + 2);
        const auto psi = random_state(rng, d);
        const auto phi = random_state(rng, d);
        const Eigen::MatrixXcd proj = reproducing_kernel_projector(w, psi);
        const PhaseFunction wphi = wavelet_transform(w, psi, phi);
        double worst = (proj * proj - proj).cwiseAbs().maxCoeff();
        worst = std::max(worst, (proj - proj.adjoint()).cwiseAbs().maxCoeff());
        worst = std::max(worst, std::abs(proj.trace() - Cx(d)));
        worst = std::max(worst, (proj * wphi.values - wphi.values).cwiseAbs().maxCoeff());
        return worst;
    });

    battery.run("duflo_ratio", tol.get("duflo"), Rule::abs_le, [&] {
        Rng rng(seed + 3);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto psi = random_state(rng, d);
            const auto phi = random_state(rng, d);
            const double ratio = coefficient(w, psi, phi).values.squaredNorm();
            worst = std::max(worst, std::abs(ratio / d - 1.0));
        }
        return worst;
    });

    battery.run("wavelet_isometry", tol.get("isometry"), Rule::abs_le, [&] {
        Rng rng(seed + 4);
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto psi = random_state(rng, d);
            const auto phi = random_state(rng, d);
            worst = std::max(worst, std::abs(wavelet_transform(w, psi, phi).norm() - phi.norm()));
        }
        return worst;
    });

    if (d <= 7) {
        battery.run("commutant_dimension_minus_one", 0.5, Rule::abs_le,
                    [&] { return static_cast<double>(commutant_dimension(w) - 1); });
    }

    emit(battery, {{"d", d}, {"seed", seed}}, out_path);
    return battery.all_pass() ? 0 : 1;
}

int cmd_star_demo(int d, std::uint64_t seed, int pairs, const Tolerances& tol,
                  const std::string& out_path, const std::string& dump_path) {
    const WeylSystem w{PhaseGroup(d)};
    Battery battery("star-demo", "star-demo|d=" + std::to_string(d) +
                                     "|seed=" + std::to_string(seed) +
                                     "|pairs=" + std::to_string(pairs));

    battery.run("mode_agreement", tol.get("star_agreement"), Rule::abs_le, [&] {
        Rng rng(seed);
        double worst = 0.0;
        for (int trial = 0; trial < pairs; ++trial) {
            const PhaseFunction f1 = random_phase_function(rng, w.group());
            const PhaseFunction f2 = random_phase_function(rng, w.group());
            const PhaseFunction a = star_product(w, f1, f2, StarMode::via_operators);
            const PhaseFunction b = star_product(w, f1, f2, StarMode::twisted_convolution);
            const PhaseFunction c = star_product(w, f1, f2, StarMode::projected_formulas);
            worst = std::max(worst, (a.values - b.values).cwiseAbs().maxCoeff());
            worst = std::max(worst, (a.values - c.values).cwiseAbs().maxCoeff());
        }
        return worst;
    });

    battery.run("associativity", tol.get("associativity"), Rule::abs_le, [&] {
        Rng rng(seed + 1);
        double worst = 0.0;
        for (int trial = 0; trial < pairs; ++trial) {
            const PhaseFunction f1 = random_phase_function(rng, w.group());
            const PhaseFunction f2 = random_phase_function(rng, w.group());
            const PhaseFunction f3 = random_phase_function(rng, w.group());
            const PhaseFunction lhs = star_product(w, star_product(w, f1, f2), f3);
            const PhaseFunction rhs = star_product(w, f1, star_product(w, f2, f3));
            worst = std::max(worst, (lhs.values - rhs.values).cwiseAbs().maxCoeff());
        }
        return worst;
    });

    battery.run("hstar_identity", tol.get("hstar"), Rule::abs_le, [&] {
        Rng rng(seed + 2);
        double worst = 0.0;
        for (int trial = 0; trial < pairs; ++trial) {
            const PhaseFunction f1 = random_phase_function(rng, w.group());
            const PhaseFunction f2 = random_phase_function(rng, w.group());
            const PhaseFunction f3 = random_phase_function(rng, w.group());
            const Cx lhs = ell2_inner(star_product(w, f1, f2), f3);
            const Cx rhs = ell2_inner(f2, star_product(w, involution_twisted(f1), f3));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        return worst;
    });

    battery.run("unit_element", tol.get("star_agreement"), Rule::abs_le, [&] {
        Rng rng(seed + 3);
        const PhaseFunction unit = dequantize(w, Eigen::MatrixXcd::Identity(d, d));
        const PhaseFunction f = random_phase_function(rng, w.group());
        return (star_product(w, unit, f).values - f.values).cwiseAbs().maxCoeff();
    });

    if (!dump_path.empty()) {
        Rng rng(seed);
        const PhaseFunction f1 = random_phase_function(rng, w.group());
        const PhaseFunction f2 = random_phase_function(rng, w.group());
        write_file(dump_path,
                   phase_function_to_json(star_product(w, f1, f2)).dump(2) + "\n");
        std::cout << "example star product written to " << dump_path << "\n";
    }

    emit(battery, {{"d", d}, {"seed", seed}, {"pairs", pairs}}, out_path);
    return battery.all_pass() ? 0 : 1;
}

int cmd_qpt_check(int d, std::uint64_t seed, int count, const Tolerances& tol,
                  const std::string& out_path) {
    const WeylSystem w{PhaseGroup(d)};
    const auto pts = all_points(w.group());
    Battery battery("qpt-check", "qpt-check|d=" + std::to_string(d) +
                                     "|seed=" + std::to_string(seed) +
                                     "|count=" + std::to_string(count));

    std::vector<PhaseFunction> positives, negatives;
    {
        Rng rng(seed);
        for (int i = 0; i < count; ++i) {
            positives.push_back(
                characteristic_function(w, DensityOperator{random_density_matrix(rng, d)}));
        }
        for (int i = 0; i < count; ++i) {
            const Eigen::MatrixXcd a = random_nonpositive_unit_trace(rng, d);
            PhaseFunction u(w.group());
            for (int idx = 0; idx < w.group().size(); ++idx) {
                u.values[idx] = (w.displacement(idx).adjoint() * a).trace();
            }
            negatives.push_back(std::move(u));
        }
    }

    battery.run("q3_positive_min_eig", tol.get("q3_min_eig"), Rule::ge_neg, [&] {
        double worst = 1.0;
        for (const PhaseFunction& u : positives) {
            worst = std::min(worst, quantum_positive_type(u, pts).min_eigenvalue);
        }
        return worst;
    });

    battery.run("qptf_positive_min", tol.get("qptf_min"), Rule::ge_neg, [&] {
        double worst = 1.0;
        for (std::size_t i = 0; i < positives.size(); ++i) {
            worst = std::min(worst,
                             qptf_integral_check(w, positives[i], 20, seed + 100 + i).min_real);
        }
        return worst;
    });

    battery.run("q3_negative_missed", 0.5, Rule::abs_le, [&] {
        int missed = 0;
        for (const PhaseFunction& u : negatives) {
            if (quantum_positive_type(u, pts).psd) ++missed;
        }
        return static_cast<double>(missed);
    });

    battery.run("qptf_negative_missed", 0.5, Rule::abs_le, [&] {
        int missed = 0;
        for (std::size_t i = 0; i < negatives.size(); ++i) {
            if (qptf_integral_check(w, negatives[i], 20, seed + 200 + i).min_real >=
                -tol.get("witness")) {
                ++missed;
            }
        }
        return static_cast<double>(missed);
    });

    battery.run("q1_q3_disagreements", 0.5, Rule::abs_le, [&] {
        int disagreements = 0;
        std::size_t i = 0;
        for (const auto* batch : {&positives, &negatives}) {
            for (const PhaseFunction& u : *batch) {
                const bool q3 = quantum_positive_type(u, pts).psd;
                const bool q1 =
                    qptf_integral_check(w, u, 20, seed + 300 + i++).min_real >= -tol.get("qptf_min");
                if (q3 != q1) ++disagreements;
            }
        }
        return static_cast<double>(disagreements);
    });

    battery.run("wigner_roundtrip", tol.get("roundtrip"), Rule::abs_le, [&] {
        Rng rng(seed + 4);
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const Eigen::MatrixXcd rho = random_density_matrix(rng, d);
            const DensityOperator rho_op{rho};
            const PhaseFunction chi_back =
                characteristic_from_wigner(wigner_function(w, rho_op));
            const Operator back = operator_from_characteristic(w, chi_back);
            worst = std::max(worst, (back - rho).cwiseAbs().maxCoeff());
        }
        return worst;
    });

    emit(battery, {{"d", d}, {"seed", seed}, {"count", count}}, out_path);
    return battery.all_pass() ? 0 : 1;
}

int cmd_semigroup_run(int d, std::uint64_t seed, double rate, std::vector<double> t_grid,
                      const std::string& semigroup_path, const Tolerances& tol,
                      const std::string& out_path) {
    std::unique_ptr<CompoundPoissonSemigroup> sg;
    if (!semigroup_path.empty()) {
        sg = std::make_unique<CompoundPoissonSemigroup>(
            semigroup_from_json(json::parse(read_file(semigroup_path))));
        d = sg->group().d();
    } else {
        Rng rng(seed);
        sg = std::make_unique<CompoundPoissonSemigroup>(
            random_probability_measure(rng, PhaseGroup(d)), rate);
    }
    for (double t : t_grid) {
        if (t < 0.0) throw CLI::ValidationError("--t-grid entries must be >= 0");
    }
    std::sort(t_grid.begin(), t_grid.end());

    const WeylSystem w{sg->group()};
    Rng rng(seed + 1);
    const DensityOperator rho0{random_density_matrix(rng, d)};
    const PhaseFunction chi0 = characteristic_function(w, rho0);

    std::vector<TrajectoryRow> rows;
    for (double t : t_grid) {
        const DensityOperator rho_t = twirl_apply(w, channel_at(*sg, t), rho0);
        rows.push_back({t, von_neumann_entropy(rho_t), purity(rho_t),
                        intertwining_defect(w, *sg, t, chi0)});
    }

    Battery battery("semigroup-run", "semigroup-run|d=" + std::to_string(d) + "|seed=" +
                                         std::to_string(seed) + "|rate=" + format_double(rate) +
                                         "|nt=" + std::to_string(t_grid.size()));

    battery.run("entropy_monotone", tol.get("entropy_slack"), Rule::ge_neg, [&] {
        double min_step = 0.0;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            min_step = std::min(min_step, rows[i].entropy - rows[i - 1].entropy);
        }
        return min_step;
    });

    battery.run("intertwining", tol.get("intertwining"), Rule::abs_le, [&] {
        double worst = 0.0;
        for (const TrajectoryRow& r : rows) worst = std::max(worst, r.intertwining_defect);
        return worst;
    });

    battery.run("trace_preserving", tol.get("trace_preserving"), Rule::abs_le, [&] {
        return choi_check(w, channel_at(*sg, t_grid.empty() ? 1.0 : t_grid.back()))
            .trace_preserving_defect;
    });

    battery.run("choi_min_eig", tol.get("choi_min_eig"), Rule::ge_neg, [&] {
        return choi_check(w, channel_at(*sg, t_grid.empty() ? 1.0 : t_grid.back()))
            .min_eigenvalue;
    });

    if (!out_path.empty()) {
        write_file(out_path, trajectory_csv(rows));
        std::cout << "trajectory written to " << out_path << "\n";
    }
    return battery.all_pass() ? 0 : 1;
}

int cmd_twirl_product(int d, std::uint64_t seed, int triples, const Tolerances& tol,
                      const std::string& out_path) {
    const WeylSystem w{PhaseGroup(d)};
    Battery battery("twirl-product", "twirl-product|d=" + std::to_string(d) + "|seed=" +
                                         std::to_string(seed) +
                                         "|triples=" + std::to_string(triples));

    battery.run("state_preservation_trace", tol.get("state_trace"), Rule::abs_le, [&] {
        Rng rng(seed);
        double worst = 0.0;
        for (int trial = 0; trial < triples; ++trial) {
            const TwirledAlgebra alg{w, DensityOperator{random_density_matrix(rng, d)}};
            const Operator prod = twirled_product(alg, random_density_matrix(rng, d),
                                                  random_density_matrix(rng, d));
            worst = std::max(worst, density_defects(prod).trace_deviation);
        }
        return worst;
    });

    battery.run("state_preservation_eig", tol.get("state_eig"), Rule::ge_neg, [&] {
        Rng rng(seed);
        double worst = 0.0;
        for (int trial = 0; trial < triples; ++trial) {
            const TwirledAlgebra alg{w, DensityOperator{random_density_matrix(rng, d)}};
            const Operator prod = twirled_product(alg, random_density_matrix(rng, d),
                                                  random_density_matrix(rng, d));
            worst = std::min(worst, density_defects(prod).min_eigenvalue);
        }
        return worst;
    });

    battery.run("associativity", tol.get("state_trace"), Rule::abs_le, [&] {
        Rng rng(seed + 1);
        double worst = 0.0;
        for (int trial = 0; trial < triples; ++trial) {
            const TwirledAlgebra alg{w, DensityOperator{random_density_matrix(rng, d)}};
            const Operator a = random_density_matrix(rng, d);
            const Operator b = random_density_matrix(rng, d);
            const Operator c = random_density_matrix(rng, d);
            const Operator lhs = twirled_product(alg, twirled_product(alg, a, b), c);
            const Operator rhs = twirled_product(alg, a, twirled_product(alg, b, c));
            worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        }
        return worst;
    });

    battery.run("induced_measure_sum", tol.get("induced_sum"), Rule::abs_le, [&] {
        Rng rng(seed + 2);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const TwirledAlgebra alg{w, DensityOperator{random_density_matrix(rng, d)}};
            const GroupMeasure m =
                induced_probability_measure(alg, DensityOperator{random_density_matrix(rng, d)});
            worst = std::max(worst, std::abs(m.total() - 1.0));
        }
        return worst;
    });

    battery.run("induced_measure_nonneg", tol.get("induced_nonneg"), Rule::ge_neg, [&] {
        Rng rng(seed + 2);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const TwirledAlgebra alg{w, DensityOperator{random_density_matrix(rng, d)}};
            const GroupMeasure m =
                induced_probability_measure(alg, DensityOperator{random_density_matrix(rng, d)});
            worst = std::min(worst, m.mass.minCoeff());
        }
        return worst;
    });

    battery.run("lie_trace", tol.get("lie_trace"), Rule::abs_le, [&] {
        Rng rng(seed + 3);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            worst = std::max(worst, std::abs(lie(random_density_matrix(rng, d),
                                                 random_density_matrix(rng, d))
                                                 .trace()));
        }
        return worst;
    });

    battery.run("purity_characterization_errors", 0.5, Rule::abs_le, [&] {
        Rng rng(seed + 4);
        int errors = 0;
        for (int trial = 0; trial < 10; ++trial) {
            const Operator pure = random_pure_density_matrix(rng, d);
            const auto same = state_product_diagnostics(DensityOperator{pure},
                                                        DensityOperator{pure});
            if (!(same.comp_is_state && same.jordan_is_state && !same.lie_is_state)) ++errors;

            const auto distinct = state_product_diagnostics(
                DensityOperator{pure}, DensityOperator{random_pure_density_matrix(rng, d)});
            if (distinct.comp_is_state || distinct.jordan_is_state) ++errors;

            const auto mixed = state_product_diagnostics(
                DensityOperator{random_density_matrix(rng, d)}, DensityOperator{pure});
            if (mixed.comp_is_state || mixed.tr_comp > 1.0 - 1e-9) ++errors;
        }
        return static_cast<double>(errors);
    });

    emit(battery, {{"d", d}, {"seed", seed}, {"triples", triples}}, out_path);
    return battery.all_pass() ? 0 : 1;
}

int cmd_cwt(const std::string& signal_path, const std::string& wavelet_path, double dt,
            const Tolerances& tol, const std::string& out_path, const std::string& report_path) {
    const ReferenceGrid ref;
    const SampledSignal psi = wavelet_path.empty()
                                  ? make_morlet(ref.signal_len, ref.dt, ref.omega0)
                                  : load_signal_csv(wavelet_path, dt);
    const SampledSignal phi = signal_path.empty()
                                  ? make_chirp(ref.signal_len, ref.dt, 3.5, 0.125, 4.0)
                                  : load_signal_csv(signal_path, dt);

    Battery battery("cwt", "cwt|signal=" + signal_path + "|wavelet=" + wavelet_path +
                               "|dt=" + format_double(dt));

    const AdmissibilityReport adm = admissibility_report(psi);
    std::cout << (adm.divergent ? "[FLAG] " : "[OK]   ") << "admissibility constant "
              << adm.constant << " (x2 " << adm.refined2 << ", x4 " << adm.refined4 << ")"
              << (adm.divergent ? "  -> divergent, wavelet not admissible" : "") << "\n";

    json config_echo = {{"signal", signal_path},
                        {"wavelet", wavelet_path},
                        {"dt", dt},
                        {"admissibility_constant", adm.constant},
                        {"admissibility_refined2", adm.refined2},
                        {"admissibility_refined4", adm.refined4},
                        {"divergent", adm.divergent}};

    if (!adm.divergent && adm.constant > 0.0) {
        const CwtTable table = cwt(phi, psi, ref.scales, ref.translations);
        battery.run("isometry_ratio_minus_one", tol.get("cwt_isometry_band"), Rule::abs_le,
                    [&] { return isometry_ratio(table, psi, phi) - 1.0; });
        if (!out_path.empty()) {
            write_file(out_path, cwt_csv(table));
            std::cout << "coefficients written to " << out_path << "\n";
        }
    } else if (!out_path.empty()) {
        write_file(out_path, "b,a,re,im\n");  // flagged, not fatal: empty table
    }

    emit(battery, config_echo, report_path);
    return battery.all_pass() ? 0 : 1;
}

int cmd_fock_demo(int levels, double radius, int grid, std::uint64_t seed, const Tolerances& tol,
                  const std::string& out_path, const std::string& report_path) {
    const FockSpace space(levels);
    Battery battery("fock-demo", "fock-demo|N=" + std::to_string(levels) +
                                     "|R=" + format_double(radius) +
                                     "|grid=" + std::to_string(grid) +
                                     "|seed=" + std::to_string(seed));

    battery.run("coherent_overlap", tol.get("fock_overlap"), Rule::abs_le, [&] {
        Rng rng(seed);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const Cx z1 = 1.9 * Cx(2 * rng.uniform01() - 1, 2 * rng.uniform01() - 1) /
                          std::sqrt(2.0);
            const Cx z2 = 1.9 * Cx(2 * rng.uniform01() - 1, 2 * rng.uniform01() - 1) /
                          std::sqrt(2.0);
            const StateVector v1 = coherent_state(space, ContinuousPoint::from_alpha(z1));
            const StateVector v2 = coherent_state(space, ContinuousPoint::from_alpha(z2));
            const Cx expected =
                std::exp(-0.5 * (std::norm(z1) + std::norm(z2)) + std::conj(z1) * z2);
            worst = std::max(worst, std::abs(v1.dot(v2) - expected));
        }
        return worst;
    });

    std::vector<ContinuousPoint> char_grid;
    for (double q = -2.0; q <= 2.0001; q += 0.25) {
        for (double p = -2.0; p <= 2.0001; p += 0.25) {
            char_grid.push_back({q, p});
        }
    }
    Eigen::MatrixXcd vacuum = Eigen::MatrixXcd::Zero(levels, levels);
    vacuum(0, 0) = 1.0;
    const std::vector<Cx> chi = characteristic_fock(space, vacuum, char_grid);

    battery.run("vacuum_characteristic", tol.get("fock_vacuum"), Rule::abs_le, [&] {
        double worst = 0.0;
        for (std::size_t i = 0; i < char_grid.size(); ++i) {
            const double expected =
                std::exp(-0.25 * (char_grid[i].q * char_grid[i].q + char_grid[i].p * char_grid[i].p));
            worst = std::max(worst, std::abs(chi[i] - Cx(expected)));
        }
        return worst;
    });

    battery.run("resolution_defect", tol.get("fock_resolution"), Rule::le, [&] {
        return resolution_defect_quadrature(space, radius, grid, 10);
    });

    battery.run("continuum_q3_min_eig", 1e-8, Rule::ge_neg, [&] {
        Rng rng(seed + 1);
        std::vector<ContinuousPoint> pts;
        for (int i = 0; i < 20; ++i) {
            pts.push_back(ContinuousPoint::from_alpha(
                1.5 * Cx(2 * rng.uniform01() - 1, 2 * rng.uniform01() - 1)));
        }
        auto vacuum_char = [](ContinuousPoint z) {
            return Cx(std::exp(-0.25 * (z.q * z.q + z.p * z.p)));
        };
        return quantum_positive_type_continuous(vacuum_char, pts).min_eigenvalue;
    });

    if (!out_path.empty()) {
        write_file(out_path, fock_grid_csv(char_grid, chi));
        std::cout << "vacuum characteristic grid written to " << out_path << "\n";
    }
    emit(battery,
         {{"N", levels}, {"R", radius}, {"grid", grid}, {"seed", seed}}, report_path);
    return battery.all_pass() ? 0 : 1;
}

// merge a JSON config file into not-explicitly-set CLI options
void apply_config_file(const CLI::App& sub, const std::string& path, int& d,
                       std::uint64_t& seed, double& rate, std::vector<double>& t_grid) {
    if (path.empty()) return;
    const json cfg = json::parse(read_file(path));
    if (cfg.contains("d") && sub.count("--d") == 0) d = cfg["d"].get<int>();
    if (cfg.contains("seed") && sub.count("--seed") == 0) seed = cfg["seed"].get<std::uint64_t>();
    if (cfg.contains("rate") && sub.count("--rate") == 0) rate = cfg["rate"].get<double>();
    if (cfg.contains("t_grid") && sub.count("--t-grid") == 0) {
        t_grid = cfg["t_grid"].get<std::vector<double>>();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "sqir: numerical checks for square-integrable-representation machinery\n"
        "(Weyl frames, phase-space quantization, positivity, twirling semigroups,\n"
        "twirled products, Fock coherent states, affine wavelet transforms)"};
    app.require_subcommand(1);

    int d = 5;
    std::uint64_t seed = 1;
    double rate = 1.3;
    int pairs = 20;
    int count = 50;
    int triples = 200;
    int levels = 60;
    double radius = 6.0;
    int grid = 200;
    double dt = 1.0 / 32.0;
    std::vector<double> t_grid = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0, 1.2, 1.4, 1.6, 1.8, 2.0};
    std::string out_path, report_path, dump_path = "star_example.json";
    std::string signal_path, wavelet_path, config_path;
    std::vector<std::string> tol_overrides;

    auto add_common = [&](CLI::App* sub, bool with_d = true) {
        if (with_d) sub->add_option("--d", d, "odd phase-space dimension (>= 3)");
        sub->add_option("--seed", seed, "64-bit seed for all random instances");
        sub->add_option("--out", out_path, "output file (JSON report or CSV)");
        sub->add_option("--tolerance", tol_overrides, "override tolerances, KEY=VAL")
            ->take_all();
        sub->add_option("--config", config_path, "JSON config file; flags take precedence");
    };

    CLI::App* frame = app.add_subcommand("frame-check",
                                         "orthogonality relations, resolution of the identity, "
                                         "reproducing-kernel projector");
    add_common(frame);

    CLI::App* star = app.add_subcommand("star-demo",
                                        "star products in all three modes plus the H*-algebra "
                                        "identities");
    add_common(star);
    star->add_option("--pairs", pairs, "random instances per check");
    star->add_option("--dump", dump_path, "path for the example product dump");

    CLI::App* qpt = app.add_subcommand("qpt-check",
                                       "quantum positive-type batteries Q1/Q3 plus the Wigner "
                                       "round trip");
    add_common(qpt);
    qpt->add_option("--count", count, "positive and negative candidates per battery");

    std::string semigroup_path;
    CLI::App* semi = app.add_subcommand("semigroup-run",
                                        "twirling-semigroup trajectory: entropy, purity and the "
                                        "intertwining defect");
    add_common(semi);
    semi->add_option("--rate", rate, "compound-Poisson rate");
    semi->add_option("--t-grid", t_grid, "time grid (nonnegative)")->take_all();
    semi->add_option("--semigroup", semigroup_path,
                     "semigroup spec JSON {d, rate, jump_measure}; overrides --d/--rate/--seed");

    CLI::App* twirl = app.add_subcommand("twirl-product",
                                         "state preservation and associativity of the twirled "
                                         "product");
    add_common(twirl);
    twirl->add_option("--triples", triples, "random (rho, sigma, tau) triples");

    CLI::App* cwt_cmd_app = app.add_subcommand("cwt",
                                               "admissibility, wavelet coefficients and the "
                                               "isometry ratio");
    add_common(cwt_cmd_app, false);
    cwt_cmd_app->add_option("--signal", signal_path, "signal CSV (re,im rows)");
    cwt_cmd_app->add_option("--wavelet", wavelet_path, "mother wavelet CSV (re,im rows)");
    cwt_cmd_app->add_option("--dt", dt, "sample step for CSV inputs");
    cwt_cmd_app->add_option("--report", report_path, "JSON report path");

    CLI::App* fock = app.add_subcommand("fock-demo",
                                        "coherent overlaps, vacuum characteristic function and "
                                        "the quadrature frame defect");
    add_common(fock, false);
    fock->add_option("--N", levels, "Fock truncation");
    fock->add_option("--R", radius, "quadrature disk radius");
    fock->add_option("--grid", grid, "quadrature points per axis");
    fock->add_option("--report", report_path, "JSON report path");

    CLI11_PARSE(app, argc, argv);

    try {
        Tolerances tol = default_tolerances();
        tol.apply_overrides(tol_overrides);

        if (frame->parsed()) {
            apply_config_file(*frame, config_path, d, seed, rate, t_grid);
            return cmd_frame_check(d, seed, tol, out_path);
        }
        if (star->parsed()) {
            apply_config_file(*star, config_path, d, seed, rate, t_grid);
            return cmd_star_demo(d, seed, pairs, tol, out_path, dump_path);
        }
        if (qpt->parsed()) {
            apply_config_file(*qpt, config_path, d, seed, rate, t_grid);
            return cmd_qpt_check(d, seed, count, tol, out_path);
        }
        if (semi->parsed()) {
            apply_config_file(*semi, config_path, d, seed, rate, t_grid);
            return cmd_semigroup_run(d, seed, rate, t_grid, semigroup_path, tol, out_path);
        }
        if (twirl->parsed()) {
            apply_config_file(*twirl, config_path, d, seed, rate, t_grid);
            return cmd_twirl_product(d, seed, triples, tol, out_path);
        }
        if (cwt_cmd_app->parsed()) {
            return cmd_cwt(signal_path, wavelet_path, dt, tol, out_path, report_path);
        }
        if (fock->parsed()) {
            return cmd_fock_demo(levels, radius, grid, seed, tol, out_path, report_path);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
