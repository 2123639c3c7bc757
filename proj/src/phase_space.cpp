#include "sqir/phase_space.hpp"

#include <cmath>
#include <string>

#include "sqir/random.hpp"

namespace sqir {

DensityOperator::DensityOperator(Operator m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1) {
        throw std::invalid_argument("DensityOperator: matrix must be square");
    }
    const DensityDefects d = density_defects(mat_);
    if (!d.pass()) {
        throw std::invalid_argument(
            "DensityOperator: invariants violated (hermiticity " + std::to_string(d.hermiticity) +
            ", min eigenvalue " + std::to_string(d.min_eigenvalue) + ", trace deviation " +
            std::to_string(d.trace_deviation) + ")");
    }
}

DensityDefects density_defects(const Operator& m) {
    DensityDefects out;
    out.hermiticity = (m - m.adjoint()).cwiseAbs().maxCoeff();
    const Operator herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Operator> es(herm, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = es.eigenvalues().minCoeff();
    out.trace_deviation = std::abs(m.trace() - Cx(1.0, 0.0));
    return out;
}

PhaseFunction dequantize(const WeylSystem& w, const Operator& a) {
    if (a.rows() != w.dim() || a.cols() != w.dim()) {
        throw std::invalid_argument("dequantize: operator dimension mismatch");
    }
    PhaseFunction f(w.group());
    const double inv_du = 1.0 / w.duflo_constant();
    for (int idx = 0; idx < w.group().size(); ++idx) {
        f.values[idx] = inv_du * (w.displacement(idx).adjoint() * a).trace();
    }
    return f;
}

Operator quantize(const WeylSystem& w, const PhaseFunction& f) {
    require_same_group(w.group(), f.group, "quantize");
    const int d = w.dim();
    Operator a = Operator::Zero(d, d);
    for (int idx = 0; idx < w.group().size(); ++idx) {
        a.noalias() += f.values[idx] * w.displacement(idx);
    }
    return a / w.duflo_constant();
}

namespace {

PhaseFunction twisted_convolve(const WeylSystem& w, const PhaseFunction& f1,
                               const PhaseFunction& f2) {
    const PhaseGroup& g = f1.group;
    PhaseFunction out(g);
    for (int gi = 0; gi < g.size(); ++gi) {
        const PhasePoint gz = g.point(gi);
        Cx acc = 0.0;
        for (int hi = 0; hi < g.size(); ++hi) {
            const PhasePoint h = g.point(hi);
            const PhasePoint rest = g.sub(gz, h);
            acc += f1.values[hi] * f2.values[g.index(rest)] * std::conj(multiplier(g, h, rest));
        }
        out.values[gi] = acc;
    }
    out.values /= w.duflo_constant();
    return out;
}

}  // namespace

PhaseFunction star_product(const WeylSystem& w, const PhaseFunction& f1, const PhaseFunction& f2,
                           StarMode mode) {
    require_same_group(w.group(), f1.group, "star_product");
    require_same_group(f1.group, f2.group, "star_product");
    switch (mode) {
        case StarMode::via_operators:
            return dequantize(w, quantize(w, f1) * quantize(w, f2));
        case StarMode::twisted_convolution:
            return twisted_convolve(w, f1, f2);
        case StarMode::projected_formulas: {
            // P = D∘Q (the projector onto ran D, the identity at finite d)
            // applied to both factors before the twisted convolution.
            const PhaseFunction p1 = dequantize(w, quantize(w, f1));
            const PhaseFunction p2 = dequantize(w, quantize(w, f2));
            return twisted_convolve(w, p1, p2);
        }
    }
    throw std::invalid_argument("star_product: unknown mode");
}

PhaseFunction symplectic_fourier(const PhaseFunction& f) {
    const PhaseGroup& g = f.group;
    PhaseFunction out(g);
    for (int zi = 0; zi < g.size(); ++zi) {
        const PhasePoint z = g.point(zi);
        Cx acc = 0.0;
        for (int wi = 0; wi < g.size(); ++wi) {
            acc += f.values[wi] * g.omega(symplectic_index(g, z, g.point(wi)));
        }
        out.values[zi] = acc / static_cast<double>(g.d());
    }
    return out;
}

PhaseFunction involution_twisted(const PhaseFunction& f) {
    const PhaseGroup& g = f.group;
    PhaseFunction out(g);
    for (int zi = 0; zi < g.size(); ++zi) {
        out.values[zi] = std::conj(f.values[g.index(g.neg(g.point(zi)))]);
    }
    return out;
}

PhaseFunction characteristic_function(const WeylSystem& w, const DensityOperator& rho) {
    PhaseFunction chi = dequantize(w, rho.matrix());
    chi.values *= w.duflo_constant();  // un-normalized trace pairing
    return chi;
}

PhaseFunction wigner_function(const WeylSystem& w, const DensityOperator& rho) {
    PhaseFunction wig = symplectic_fourier(characteristic_function(w, rho));
    wig.values /= static_cast<double>(w.dim());  // Σ_z W(z) = 1
    return wig;
}

Operator operator_from_characteristic(const WeylSystem& w, const PhaseFunction& chi) {
    PhaseFunction f = chi;
    f.values /= w.duflo_constant();
    return quantize(w, f);
}

PhaseFunction characteristic_from_wigner(const PhaseFunction& wig) {
    PhaseFunction chi = symplectic_fourier(wig);
    chi.values *= static_cast<double>(wig.group.d());
    return chi;
}

namespace {

GramCheck gram_check(const Eigen::MatrixXcd& m) {
    GramCheck out;
    out.hermiticity_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    out.valid_candidate = out.hermiticity_defect <= GramCheck::kCandidateSymmetryTol;
    const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = es.eigenvalues().minCoeff();
    out.psd = out.valid_candidate && out.min_eigenvalue >= -GramCheck::kPsdTol;
    return out;
}

}  // namespace

GramCheck quantum_positive_type(const PhaseFunction& u, const std::vector<PhasePoint>& points) {
    const PhaseGroup& g = u.group;
    const int n = static_cast<int>(points.size());
    Eigen::MatrixXcd m(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            const PhasePoint diff = g.sub(points[k], points[j]);
            const long long phase =
                static_cast<long long>(g.half_inv()) * symplectic_index(g, points[j], points[k]);
            m(j, k) = u.values[g.index(diff)] * g.omega(phase);
        }
    }
    return gram_check(m);
}

GramCheck classical_positive_type(const PhaseFunction& p, const std::vector<PhasePoint>& points) {
    const PhaseGroup& g = p.group;
    const int n = static_cast<int>(points.size());
    Eigen::MatrixXcd m(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            m(j, k) = p.values[g.index(g.sub(points[k], points[j]))];
        }
    }
    return gram_check(m);
}

std::vector<PhasePoint> all_points(const PhaseGroup& g) {
    std::vector<PhasePoint> pts;
    pts.reserve(g.size());
    for (int idx = 0; idx < g.size(); ++idx) pts.push_back(g.point(idx));
    return pts;
}

QptfCheck qptf_integral_check(const WeylSystem& w, const PhaseFunction& u, int trials,
                              std::uint64_t seed) {
    require_same_group(w.group(), u.group, "qptf_integral_check");
    if (trials < 1) throw std::invalid_argument("qptf_integral_check: trials must be >= 1");

    QptfCheck out;
    bool first = true;
    auto run_trial = [&](const PhaseFunction& a) {
        const PhaseFunction q = star_product(w, involution_twisted(a), a);
        // counting-measure integral, no conjugation on u
        const Cx val = (u.values.array() * q.values.array()).sum();
        if (first || val.real() < out.min_real) out.min_real = val.real();
        first = false;
        out.max_imag_abs = std::max(out.max_imag_abs, std::abs(val.imag()));
    };

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        run_trial(random_phase_function(rng, u.group));
    }
    // Eigenvector-directed test functions: with a = D(|v⟩⟨v|) the functional
    // evaluates to ⟨v|(Q ū)†|v⟩ (ū the conjugated table; no conjugation sits
    // on u in the integral), so eigenvectors of that operator's Hermitian
    // part probe every negative direction deterministically.
    const Operator r = quantize(w, {u.group, u.values.conjugate()}).adjoint();
    Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (r + r.adjoint()));
    for (int i = 0; i < es.eigenvectors().cols(); ++i) {
        const Eigen::VectorXcd v = es.eigenvectors().col(i);
        run_trial(dequantize(w, v * v.adjoint()));
    }
    return out;
}

}  // namespace sqir
