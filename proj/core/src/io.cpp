#include "diraclab/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace diraclab {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  return os;
}

nlohmann::ordered_json grid_json(const GridSpec& grid) {
  return {{"d", grid.d}, {"n", grid.n}, {"L", grid.L}};
}

}  // namespace

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_density_csv(std::ostream& os, const DensityField& field) {
  os << "component";
  for (int mu = 1; mu <= field.grid.d; ++mu) os << ",x" << mu;
  os << ",value\n";

  const std::int64_t total = field.grid.site_count();
  for (int c = 0; c < field.S; ++c) {
    std::vector<int> idx(field.grid.d, 0);
    for (std::int64_t s = 0; s < total; ++s) {
      os << (c + 1);
      for (int mu = 0; mu < field.grid.d; ++mu)
        os << ',' << format_g17(field.grid.coordinate(idx[mu]));
      os << ',' << format_g17(field.at(c, s)) << '\n';
      for (int mu = field.grid.d - 1; mu >= 0; --mu) {
        if (++idx[mu] < field.grid.n) break;
        idx[mu] = 0;
      }
    }
  }
}

void write_density_csv(const std::string& path, const DensityField& field) {
  auto os = open_out(path);
  write_density_csv(os, field);
}

void write_lattice_csv(std::ostream& os, const LatticeField& field) {
  os << "component,x1,value\n";
  const double origin = -0.5 * field.n * field.dx;
  for (int j = 0; j < field.n; ++j)
    os << "1," << format_g17(origin + j * field.dx) << ',' << format_g17(field.plus[j]) << '\n';
  for (int j = 0; j < field.n; ++j)
    os << "2," << format_g17(origin + j * field.dx) << ',' << format_g17(field.minus[j]) << '\n';
}

void write_lattice_csv(const std::string& path, const LatticeField& field) {
  auto os = open_out(path);
  write_lattice_csv(os, field);
}

void write_ensemble_csv(std::ostream& os, const WalkerEnsemble& ensemble) {
  os << "state,position\n";
  for (size_t w = 0; w < ensemble.positions.size(); ++w)
    os << (ensemble.states[w] > 0 ? "1" : "-1") << ',' << format_g17(ensemble.positions[w]) << '\n';
}

void write_ensemble_csv(const std::string& path, const WalkerEnsemble& ensemble) {
  auto os = open_out(path);
  write_ensemble_csv(os, ensemble);
}

void write_histogram_csv(std::ostream& os, const LatticeField& histogram) {
  os << "state,bin_center,mass\n";
  const double origin = -0.5 * histogram.n * histogram.dx;
  for (int j = 0; j < histogram.n; ++j)
    os << "1," << format_g17(origin + j * histogram.dx) << ','
       << format_g17(histogram.plus[j] * histogram.dx) << '\n';
  for (int j = 0; j < histogram.n; ++j)
    os << "-1," << format_g17(origin + j * histogram.dx) << ','
       << format_g17(histogram.minus[j] * histogram.dx) << '\n';
}

void write_histogram_csv(const std::string& path, const LatticeField& histogram) {
  auto os = open_out(path);
  write_histogram_csv(os, histogram);
}

std::string witness_json(const Witness& w, const GridSpec& grid) {
  nlohmann::ordered_json j;
  j["kind"] = (w.kind == WitnessKind::Analytic) ? "analytic" : "grid_violation";
  j["p"] = w.p + 1;
  j["q"] = w.q + 1;
  j["nu"] = w.nu + 1;
  j["K"] = w.K;
  j["a"] = std::vector<double>(w.a.data(), w.a.data() + w.a.size());
  j["t"] = w.t;
  j["value"] = w.value;
  j["grid"] = grid_json(grid);
  return j.dump(2);
}

std::string verdict_json(const TheoremVerdict& v) {
  nlohmann::ordered_json j;
  j["preserves"] = v.preserves;
  auto conditions = nlohmann::ordered_json::array();
  for (const auto c : v.failed_conditions) conditions.push_back(to_string(c));
  j["failed_conditions"] = conditions;
  if (v.witness.empty())
    j["witness"] = nullptr;
  else
    j["witness"] = v.witness;
  return j.dump(2);
}

std::string positivity_json(const PositivityReport& report, const GridSpec& grid) {
  nlohmann::ordered_json j;
  j["grid"] = grid_json(grid);
  auto samples = nlohmann::ordered_json::array();
  for (const auto& s : report.samples) {
    nlohmann::ordered_json row;
    row["t"] = s.t;
    row["mass"] = s.mass;
    row["min_value"] = s.min_value;
    row["component"] = s.component + 1;
    row["site"] = site_multi_index(grid, s.site);
    samples.push_back(row);
  }
  j["samples"] = samples;
  return j.dump(2);
}

}  // namespace diraclab
