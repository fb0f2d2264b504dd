#include "ilwlab/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ilw {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string field_to_json(const SpectralField& f) {
  // hand-assembled so the coefficient formatting is exactly %.17g
  std::ostringstream out;
  out << "{\"lambda\": " << format_double(f.grid().lambda)
      << ", \"n_points\": " << f.n_points() << ", \"real_valued\": "
      << (f.real_valued() ? "true" : "false") << ", \"coeffs\": [";
  bool first = true;
  for (int n = f.min_mode(); n <= f.max_mode(); ++n) {
    const cdouble c = f.coeff(n);
    out << (first ? "" : ", ") << format_double(c.real()) << ", " << format_double(c.imag());
    first = false;
  }
  out << "]}";
  return out.str();
}

SpectralField field_from_json(const std::string& text) {
  json doc = json::parse(text);
  if (!doc.contains("lambda") || !doc.contains("n_points") || !doc.contains("coeffs"))
    throw ValidationError("field snapshot: missing lambda/n_points/coeffs");
  const TorusGrid grid = make_grid(doc["lambda"].get<double>(), doc["n_points"].get<int>());
  const auto& arr = doc["coeffs"];
  if (!arr.is_array() || static_cast<int>(arr.size()) != 2 * grid.n_points)
    throw ValidationError("field snapshot: coeffs length must be 2 * n_points");
  const bool real_valued = doc.value("real_valued", true);
  SpectralField f(grid, real_valued);
  for (int i = 0; i < grid.n_points; ++i)
    f.set_coeff(grid.min_mode() + i,
                cdouble(arr[2 * i].get<double>(), arr[2 * i + 1].get<double>()));
  return f;
}

void save_field(const SpectralField& f, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("save_field: cannot open " + path.string());
  out << field_to_json(f) << "\n";
}

SpectralField load_field(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("load_field: cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return field_from_json(buf.str());
}

void save_trajectory(const Trajectory& traj, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  json manifest;
  manifest["eq"] = variant_name(traj.eq.variant);
  manifest["delta"] = traj.eq.delta;
  manifest["lambda"] = traj.grid.lambda;
  manifest["n_points"] = traj.grid.n_points;
  manifest["dt"] = traj.size() > 1 ? traj.times[1] - traj.times[0] : 0.0;
  manifest["times"] = traj.times;

  std::ofstream mout(dir / "manifest.json");
  if (!mout) throw ValidationError("save_trajectory: cannot write manifest");
  mout << manifest.dump(2) << "\n";

  char name[64];
  for (size_t i = 0; i < traj.size(); ++i) {
    std::snprintf(name, sizeof(name), "snapshot_%06zu.json", i);
    save_field(traj.fields[i], dir / name);
  }
}

Trajectory load_trajectory(const std::filesystem::path& dir) {
  std::ifstream min(dir / "manifest.json");
  if (!min) throw ValidationError("load_trajectory: cannot open manifest in " + dir.string());
  json manifest = json::parse(min);

  Trajectory traj;
  const std::string variant = manifest.at("eq").get<std::string>();
  const double delta = manifest.at("delta").get<double>();
  traj.eq.variant = variant_from_name(variant);
  traj.eq.delta = delta;
  traj.grid = make_grid(manifest.at("lambda").get<double>(), manifest.at("n_points").get<int>());
  traj.times = manifest.at("times").get<std::vector<double>>();

  char name[64];
  for (size_t i = 0; i < traj.times.size(); ++i) {
    std::snprintf(name, sizeof(name), "snapshot_%06zu.json", i);
    traj.fields.push_back(load_field(dir / name));
    if (!(traj.fields.back().grid() == traj.grid))
      throw ValidationError("load_trajectory: snapshot grid mismatch");
  }
  return traj;
}

}  // namespace ilw
