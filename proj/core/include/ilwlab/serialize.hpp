#pragma once

#include <filesystem>
#include <string>

#include "ilwlab/evolution.hpp"
#include "ilwlab/field.hpp"

namespace ilw {

/// 17-significant-digit decimal formatting: round-trips doubles bit-exactly.
std::string format_double(double v);

/// Field snapshot: JSON {lambda, n_points, coeffs: [re, im, ...]} in mode
/// order -N/2 .. N/2-1.
std::string field_to_json(const SpectralField& f);
SpectralField field_from_json(const std::string& text);

void save_field(const SpectralField& f, const std::filesystem::path& path);
SpectralField load_field(const std::filesystem::path& path);

/// Trajectory persistence: a directory holding snapshot_000000.json ... plus
/// manifest.json {eq, delta, lambda, n_points, dt, times[]}.
void save_trajectory(const Trajectory& traj, const std::filesystem::path& dir);
Trajectory load_trajectory(const std::filesystem::path& dir);

}  // namespace ilw
