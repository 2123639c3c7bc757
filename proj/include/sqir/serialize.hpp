/*
 * File formats.
 *
 *   PhaseFunction    JSON {"d": d, "values": [[re,im], ...]} row-major (q-major)
 *   DensityOperator  JSON {"d": d, "matrix": [[[re,im], ...], ...]}
 *   Semigroup spec   JSON {"d": d, "rate": r, "jump_measure": [d² masses]}
 *   Trajectory       CSV  t,entropy,purity,intertwining_defect
 *   Fock grid        CSV  q,p,re,im
 *   CWT coefficients CSV  b,a,re,im
 *   Signal           CSV  re,im per sample (dt supplied by the caller), or a
 *                    raw little-endian float32 (re,im) stream with a JSON
 *                    sidecar <path>.json carrying {"dt": ...}
 *
 * Doubles are written with 17 significant digits (value-preserving and
 * byte-deterministic across runs).
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqir/cwt.hpp"
#include "sqir/fock.hpp"
#include "sqir/phase_space.hpp"
#include "sqir/semigroup.hpp"

namespace sqir {

nlohmann::json phase_function_to_json(const PhaseFunction& f);
PhaseFunction phase_function_from_json(const nlohmann::json& j);

nlohmann::json density_to_json(const DensityOperator& rho);
DensityOperator density_from_json(const nlohmann::json& j);

nlohmann::json semigroup_to_json(const CompoundPoissonSemigroup& sg);
CompoundPoissonSemigroup semigroup_from_json(const nlohmann::json& j);

struct TrajectoryRow {
    double t = 0.0;
    double entropy = 0.0;
    double purity = 0.0;
    double intertwining_defect = 0.0;
};
std::string trajectory_csv(const std::vector<TrajectoryRow>& rows);

std::string fock_grid_csv(const std::vector<ContinuousPoint>& grid, const std::vector<Cx>& values);

std::string cwt_csv(const CwtTable& table);

std::string signal_csv(const SampledSignal& s);
SampledSignal load_signal_csv(const std::string& path, double dt);
SampledSignal load_signal_raw(const std::string& path);  // sidecar <path>.json

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

// "%.17g": shortest text that reproduces the double exactly on read-back.
std::string format_double(double v);

// FNV-1a 64-bit, used for input digests in reports.
std::uint64_t fnv1a(const std::string& bytes);
std::string digest_hex(const std::string& bytes);

}  // namespace sqir
