#include "sqir/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sqir {

namespace {

nlohmann::json complex_to_json(Cx v) {
    return nlohmann::json::array({v.real(), v.imag()});
}

Cx complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("expected [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

nlohmann::json phase_function_to_json(const PhaseFunction& f) {
    nlohmann::json values = nlohmann::json::array();
    for (int i = 0; i < f.values.size(); ++i) values.push_back(complex_to_json(f.values[i]));
    return {{"d", f.group.d()}, {"values", values}};
}

PhaseFunction phase_function_from_json(const nlohmann::json& j) {
    const PhaseGroup g(j.at("d").get<int>());
    const auto& values = j.at("values");
    if (static_cast<int>(values.size()) != g.size()) {
        throw std::invalid_argument("PhaseFunction JSON: values must have d^2 entries");
    }
    PhaseFunction f(g);
    for (int i = 0; i < g.size(); ++i) f.values[i] = complex_from_json(values[i]);
    return f;
}

nlohmann::json density_to_json(const DensityOperator& rho) {
    nlohmann::json matrix = nlohmann::json::array();
    for (int r = 0; r < rho.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < rho.dim(); ++c) row.push_back(complex_to_json(rho.matrix()(r, c)));
        matrix.push_back(row);
    }
    return {{"d", rho.dim()}, {"matrix", matrix}};
}

DensityOperator density_from_json(const nlohmann::json& j) {
    const int d = j.at("d").get<int>();
    const auto& matrix = j.at("matrix");
    if (static_cast<int>(matrix.size()) != d) {
        throw std::invalid_argument("DensityOperator JSON: matrix must be d x d");
    }
    Operator m(d, d);
    for (int r = 0; r < d; ++r) {
        const auto& row = matrix[r];
        if (static_cast<int>(row.size()) != d) {
            throw std::invalid_argument("DensityOperator JSON: matrix must be d x d");
        }
        for (int c = 0; c < d; ++c) m(r, c) = complex_from_json(row[c]);
    }
    return DensityOperator(m);
}

nlohmann::json semigroup_to_json(const CompoundPoissonSemigroup& sg) {
    nlohmann::json jump = nlohmann::json::array();
    for (int i = 0; i < sg.jump_measure().mass.size(); ++i) jump.push_back(sg.jump_measure().mass[i]);
    return {{"d", sg.group().d()}, {"rate", sg.rate()}, {"jump_measure", jump}};
}

CompoundPoissonSemigroup semigroup_from_json(const nlohmann::json& j) {
    const PhaseGroup g(j.at("d").get<int>());
    const auto& jump = j.at("jump_measure");
    if (static_cast<int>(jump.size()) != g.size()) {
        throw std::invalid_argument("semigroup JSON: jump_measure must have d^2 entries");
    }
    GroupMeasure nu(g);
    for (int i = 0; i < g.size(); ++i) nu.mass[i] = jump[i].get<double>();
    return {nu, j.at("rate").get<double>()};
}

std::string trajectory_csv(const std::vector<TrajectoryRow>& rows) {
    std::string out = "t,entropy,purity,intertwining_defect\n";
    for (const TrajectoryRow& r : rows) {
        out += format_double(r.t) + ',' + format_double(r.entropy) + ',' +
               format_double(r.purity) + ',' + format_double(r.intertwining_defect) + '\n';
    }
    return out;
}

std::string fock_grid_csv(const std::vector<ContinuousPoint>& grid,
                          const std::vector<Cx>& values) {
    if (grid.size() != values.size()) {
        throw std::invalid_argument("fock_grid_csv: grid/value size mismatch");
    }
    std::string out = "q,p,re,im\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out += format_double(grid[i].q) + ',' + format_double(grid[i].p) + ',' +
               format_double(values[i].real()) + ',' + format_double(values[i].imag()) + '\n';
    }
    return out;
}

std::string cwt_csv(const CwtTable& table) {
    std::string out = "b,a,re,im\n";
    for (std::size_t si = 0; si < table.scales.size(); ++si) {
        for (std::size_t bi = 0; bi < table.translations.size(); ++bi) {
            const Cx c = table.coeffs(static_cast<int>(si), static_cast<int>(bi));
            out += format_double(table.translations[bi]) + ',' + format_double(table.scales[si]) +
                   ',' + format_double(c.real()) + ',' + format_double(c.imag()) + '\n';
        }
    }
    return out;
}

std::string signal_csv(const SampledSignal& s) {
    std::string out;
    for (int j = 0; j < s.size(); ++j) {
        out += format_double(s.samples[j].real()) + ',' + format_double(s.samples[j].imag()) + '\n';
    }
    return out;
}

SampledSignal load_signal_csv(const std::string& path, double dt) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_signal_csv: cannot open " + path);
    std::vector<Cx> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf", &re, &im) != 2) {
            if (samples.empty()) continue;  // tolerate a header line
            throw std::runtime_error("load_signal_csv: malformed row '" + line + "'");
        }
        samples.emplace_back(re, im);
    }
    Eigen::VectorXcd v(static_cast<int>(samples.size()));
    for (std::size_t i = 0; i < samples.size(); ++i) v[static_cast<int>(i)] = samples[i];
    return {v, dt};
}

SampledSignal load_signal_raw(const std::string& path) {
    const nlohmann::json sidecar = nlohmann::json::parse(read_file(path + ".json"));
    const double dt = sidecar.at("dt").get<double>();
    std::ifstream bin(path, std::ios::binary);
    if (!bin) throw std::runtime_error("load_signal_raw: cannot open " + path);
    bin.seekg(0, std::ios::end);
    const std::streamoff bytes = bin.tellg();
    bin.seekg(0);
    if (bytes % (2 * sizeof(float)) != 0) {
        throw std::runtime_error("load_signal_raw: stream is not (re,im) float32 pairs");
    }
    const int n = static_cast<int>(bytes / (2 * sizeof(float)));
    std::vector<float> buf(2 * n);
    bin.read(reinterpret_cast<char*>(buf.data()), bytes);
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v[i] = Cx(buf[2 * i], buf[2 * i + 1]);
    return {v, dt};
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_file: cannot open " + path);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write_file: write failed for " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_file: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string digest_hex(const std::string& bytes) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
    return buf;
}

}  // namespace sqir
