#include "sqir/cwt.hpp"

#include <cmath>
#include <numbers>

#include <fftw3.h>

namespace sqir {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Cx> dft(const Eigen::VectorXcd& in, int sign) {
    const int n = static_cast<int>(in.size());
    std::vector<Cx> src(in.data(), in.data() + n);
    std::vector<Cx> dst(n);
    fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(src.data()),
                                      reinterpret_cast<fftw_complex*>(dst.data()), sign,
                                      FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    return dst;
}

void check_uniform(const std::vector<double>& grid, bool log_scale, const char* what) {
    if (grid.size() < 2) {
        throw std::invalid_argument(std::string(what) + ": need at least 2 grid points");
    }
    auto coord = [&](double v) { return log_scale ? std::log(v) : v; };
    const double step = coord(grid[1]) - coord(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double s = coord(grid[i]) - coord(grid[i - 1]);
        if (std::abs(s - step) > 1e-9 * std::max(1.0, std::abs(step))) {
            throw std::invalid_argument(std::string(what) + ": grid must be uniform");
        }
    }
}

double grid_step(const std::vector<double>& grid, bool log_scale) {
    return log_scale ? std::log(grid[1] / grid[0]) : grid[1] - grid[0];
}

}  // namespace

SampledSignal::SampledSignal(Eigen::VectorXcd s, double step) : samples(std::move(s)), dt(step) {
    if (samples.size() < 4) throw std::invalid_argument("SampledSignal: need at least 4 samples");
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("SampledSignal: dt must be positive");
    }
    if (!samples.allFinite()) throw std::invalid_argument("SampledSignal: non-finite sample");
}

Cx SampledSignal::value_at(double xq) const {
    const double j_real = (xq - x0()) / dt;
    const double j_floor = std::floor(j_real);
    const int j1 = static_cast<int>(j_floor);
    if (j1 < -1 || j1 > size() - 1) return 0.0;
    const double t = j_real - j_floor;
    auto sample = [&](int j) -> Cx { return (j < 0 || j >= size()) ? Cx(0.0) : samples[j]; };
    const Cx p0 = sample(j1 - 1), p1 = sample(j1), p2 = sample(j1 + 1), p3 = sample(j1 + 2);
    // Catmull–Rom
    return 0.5 * (2.0 * p1 + (p2 - p0) * t + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * (t * t) +
                  (3.0 * p1 - p0 - 3.0 * p2 + p3) * (t * t * t));
}

Cx signal_inner(const SampledSignal& f, const SampledSignal& g) {
    if (f.size() != g.size() || f.dt != g.dt) {
        throw std::invalid_argument("signal_inner: signals must share a grid");
    }
    return f.dt * f.samples.dot(g.samples);
}

Spectrum spectrum(const SampledSignal& s) {
    const int m = s.size();
    const std::vector<Cx> bins = dft(s.samples, FFTW_FORWARD);
    Spectrum out;
    out.domega = 2.0 * kPi / (m * s.dt);
    out.omega.resize(m);
    out.values.resize(m);
    for (int k = 0; k < m; ++k) {
        const int k_signed = (k <= m / 2) ? k : k - m;
        const double w = k_signed * out.domega;
        out.omega[k] = w;
        out.values[k] = s.dt * std::polar(1.0, -w * s.x0()) * bins[k];
    }
    return out;
}

SampledSignal signal_from_spectrum(const Spectrum& spec, double dt) {
    const int m = static_cast<int>(spec.values.size());
    const double x0 = -0.5 * (m - 1) * dt;
    Eigen::VectorXcd pre(m);
    for (int k = 0; k < m; ++k) {
        pre[k] = spec.values[k] * std::polar(1.0, spec.omega[k] * x0);
    }
    const std::vector<Cx> bins = dft(pre, FFTW_BACKWARD);
    Eigen::VectorXcd samples(m);
    for (int j = 0; j < m; ++j) samples[j] = bins[j] / (m * dt);
    return {samples, dt};
}

namespace {

double admissibility_on_grid(const SampledSignal& psi) {
    const Spectrum spec = spectrum(psi);
    double acc = 0.0;
    for (std::size_t k = 0; k < spec.values.size(); ++k) {
        if (spec.omega[k] == 0.0) continue;
        acc += std::norm(spec.values[k]) / std::abs(spec.omega[k]) * spec.domega;
    }
    return acc;
}

SampledSignal zero_pad(const SampledSignal& s, int factor) {
    Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(s.size() * factor);
    padded.head(s.size()) = s.samples;
    return {padded, s.dt};
}

}  // namespace

double admissibility_constant(const SampledSignal& psi) {
    return admissibility_on_grid(psi);
}

AdmissibilityReport admissibility_report(const SampledSignal& psi) {
    AdmissibilityReport rep;
    rep.constant = admissibility_on_grid(psi);
    rep.refined2 = admissibility_on_grid(zero_pad(psi, 2));
    rep.refined4 = admissibility_on_grid(zero_pad(psi, 4));
    rep.divergent =
        rep.constant > 0.0 && rep.refined4 > AdmissibilityReport::kDivergenceGrowth * rep.constant;
    return rep;
}

SampledSignal duflo_moore_apply(const SampledSignal& psi) {
    const AdmissibilityReport rep = admissibility_report(psi);
    if (rep.divergent) {
        throw std::invalid_argument(
            "duflo_moore_apply: wavelet is not admissible (admissibility integral diverges "
            "under grid refinement)");
    }
    Spectrum spec = spectrum(psi);
    for (std::size_t k = 0; k < spec.values.size(); ++k) {
        spec.values[k] = (spec.omega[k] == 0.0)
                             ? Cx(0.0)
                             : spec.values[k] * std::sqrt(2.0 * kPi / std::abs(spec.omega[k]));
    }
    return signal_from_spectrum(spec, psi.dt);
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw std::invalid_argument("log_spaced: bad range");
    std::vector<double> out(n);
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) out[i] = lo * std::exp(i * step);
    return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (!(hi > lo) || n < 2) throw std::invalid_argument("linspace: bad range");
    std::vector<double> out(n);
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) out[i] = lo + i * step;
    return out;
}

CwtTable cwt(const SampledSignal& phi, const SampledSignal& psi,
             const std::vector<double>& scales, const std::vector<double>& translations) {
    for (double a : scales) {
        if (!(a > 0.0)) throw std::invalid_argument("cwt: scales must be positive");
    }
    if (admissibility_report(psi).divergent) {
        throw std::invalid_argument("cwt: analyzing wavelet is not admissible");
    }
    CwtTable table;
    table.scales = scales;
    table.translations = translations;
    table.coeffs.resize(static_cast<int>(scales.size()), static_cast<int>(translations.size()));

    const double support_lo = psi.x0();
    const double support_hi = psi.x(psi.size() - 1);
    for (std::size_t si = 0; si < scales.size(); ++si) {
        const double a = scales[si];
        const double root_a = std::sqrt(a);
        for (std::size_t bi = 0; bi < translations.size(); ++bi) {
            const double b = translations[bi];
            // only x with (x−b)/a inside the wavelet table contributes
            const int j_lo = std::max(
                0, static_cast<int>(std::ceil((b + a * support_lo - phi.x0()) / phi.dt)));
            const int j_hi = std::min(
                phi.size() - 1,
                static_cast<int>(std::floor((b + a * support_hi - phi.x0()) / phi.dt)));
            Cx acc = 0.0;
            for (int j = j_lo; j <= j_hi; ++j) {
                const Cx w = psi.value_at((phi.x(j) - b) / a) / root_a;
                acc += std::conj(w) * phi.samples[j];
            }
            table.coeffs(static_cast<int>(si), static_cast<int>(bi)) = acc * phi.dt;
        }
    }
    return table;
}

double cwt_energy(const CwtTable& table) {
    return cwt_pairing(table, table).real();
}

Cx cwt_pairing(const CwtTable& t1, const CwtTable& t2) {
    if (t1.scales != t2.scales || t1.translations != t2.translations) {
        throw std::invalid_argument("cwt_pairing: tables must share the (b,a) grid");
    }
    check_uniform(t1.scales, true, "cwt_pairing scales");
    check_uniform(t1.translations, false, "cwt_pairing translations");
    const double dlog_a = grid_step(t1.scales, true);
    const double db = grid_step(t1.translations, false);
    Cx acc = 0.0;
    for (std::size_t si = 0; si < t1.scales.size(); ++si) {
        const Cx row = t1.coeffs.row(static_cast<int>(si))
                           .dot(t2.coeffs.row(static_cast<int>(si)));  // conjugates t1
        acc += row * (db * dlog_a / t1.scales[si]);
    }
    return acc;
}

double isometry_ratio(const CwtTable& table, const SampledSignal& psi, const SampledSignal& phi) {
    const double c_adm = admissibility_constant(psi);
    const double phi_energy = phi.norm() * phi.norm();
    if (c_adm <= 0.0 || phi_energy <= 0.0) {
        throw std::invalid_argument("isometry_ratio: degenerate wavelet or signal");
    }
    return cwt_energy(table) / (c_adm * phi_energy);
}

double orthogonality_relation_defect(const SampledSignal& psi1, const SampledSignal& psi2,
                                     const SampledSignal& phi1, const SampledSignal& phi2,
                                     const std::vector<double>& scales,
                                     const std::vector<double>& translations) {
    const CwtTable t1 = cwt(phi1, psi1, scales, translations);
    const CwtTable t2 = cwt(phi2, psi2, scales, translations);
    const Cx lhs = cwt_pairing(t1, t2);

    // ⟨Cψ₂, Cψ₁⟩ = Σ_k conj(ψ̂₂)·ψ̂₁/|ω_k|·Δω (0 bin excluded)
    const Spectrum s1 = spectrum(psi1);
    const Spectrum s2 = spectrum(psi2);
    if (s1.values.size() != s2.values.size() || s1.domega != s2.domega) {
        throw std::invalid_argument("orthogonality_relation_defect: wavelets must share a grid");
    }
    Cx dm_inner = 0.0;
    for (std::size_t k = 0; k < s1.values.size(); ++k) {
        if (s1.omega[k] == 0.0) continue;
        dm_inner += std::conj(s2.values[k]) * s1.values[k] / std::abs(s1.omega[k]) * s1.domega;
    }
    const Cx rhs = signal_inner(phi1, phi2) * dm_inner;

    const double scale = std::sqrt(admissibility_constant(psi1)) *
                         std::sqrt(admissibility_constant(psi2)) * phi1.norm() * phi2.norm();
    if (scale <= 0.0) {
        throw std::invalid_argument("orthogonality_relation_defect: degenerate input");
    }
    return std::abs(lhs - rhs) / scale;
}

AffinePoint affine_compose(AffinePoint g, AffinePoint h) {
    return {g.b + g.a * h.b, g.a * h.a};
}

double affine_modular_function(AffinePoint g) {
    if (!(g.a > 0.0)) throw std::invalid_argument("affine_modular_function: need a > 0");
    return 1.0 / g.a;
}

SampledSignal affine_atom(const SampledSignal& psi, double b, double a, int m, double dt) {
    if (!(a > 0.0)) throw std::invalid_argument("affine_atom: scale must be positive");
    Eigen::VectorXcd samples(m);
    const double x0 = -0.5 * (m - 1) * dt;
    const double root_a = std::sqrt(a);
    for (int j = 0; j < m; ++j) {
        samples[j] = psi.value_at((x0 + j * dt - b) / a) / root_a;
    }
    return {samples, dt};
}

SampledSignal make_morlet(int m, double dt, double omega0) {
    Eigen::VectorXcd samples(m);
    const double x0 = -0.5 * (m - 1) * dt;
    const double norm_c = std::pow(kPi, -0.25);
    const double correction = std::exp(-0.5 * omega0 * omega0);
    for (int j = 0; j < m; ++j) {
        const double x = x0 + j * dt;
        samples[j] =
            norm_c * (std::polar(1.0, omega0 * x) - correction) * std::exp(-0.5 * x * x);
    }
    return {samples, dt};
}

SampledSignal make_gaussian(int m, double dt) {
    Eigen::VectorXcd samples(m);
    const double x0 = -0.5 * (m - 1) * dt;
    for (int j = 0; j < m; ++j) {
        const double x = x0 + j * dt;
        samples[j] = std::exp(-0.5 * x * x);
    }
    return {samples, dt};
}

SampledSignal make_chirp(int m, double dt, double omega1, double slope, double width) {
    Eigen::VectorXcd samples(m);
    const double x0 = -0.5 * (m - 1) * dt;
    for (int j = 0; j < m; ++j) {
        const double x = x0 + j * dt;
        samples[j] = std::exp(-0.5 * x * x / (width * width)) *
                     std::polar(1.0, omega1 * x + 0.5 * slope * x * x);
    }
    return {samples, dt};
}

SampledSignal make_gabor(int m, double dt, double omega_c, double width, double center) {
    Eigen::VectorXcd samples(m);
    const double x0 = -0.5 * (m - 1) * dt;
    for (int j = 0; j < m; ++j) {
        const double x = x0 + j * dt;
        const double u = x - center;
        samples[j] = std::exp(-0.5 * u * u / (width * width)) * std::polar(1.0, omega_c * x);
    }
    return {samples, dt};
}

}  // namespace sqir
