#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ekfrac/errors.hpp"
#include "ekfrac/trajectory.hpp"

namespace ekfrac {

/// Shortest representation that round-trips a double (17 significant digits).
inline std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

using ParamEcho = std::vector<std::pair<std::string, std::string>>;

struct CsvData {
  ParamEcho params;
  std::vector<std::string> columns;
  Trajectory traj;  // first column -> times, second -> values, third -> derivs
};

// Schema: '#'-prefixed "key=value" comment lines, then a header row,
// then comma-separated rows. LF line endings.

inline void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                                 const ParamEcho& params, bool with_derivs) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  for (const auto& [k, v] : params) os << "# " << k << "=" << v << "\n";
  os << (with_derivs && traj.has_derivs() ? "t,value,deriv" : "t,value") << "\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    os << format_g17(traj.times[i]) << "," << format_g17(traj.values[i]);
    if (with_derivs && traj.has_derivs()) os << "," << format_g17(traj.derivs[i]);
    os << "\n";
  }
  if (!os) throw IoError("write failed: " + path);
}

inline void write_table_csv(const std::string& path, const std::string& header,
                            const std::vector<std::vector<double>>& rows,
                            const ParamEcho& params) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  for (const auto& [k, v] : params) os << "# " << k << "=" << v << "\n";
  os << header << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_g17(row[c]);
    os << "\n";
  }
  if (!os) throw IoError("write failed: " + path);
}

inline CsvData read_trajectory_csv(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open for reading: " + path);
  CsvData data;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto eq = line.find('=');
      if (eq != std::string::npos) {
        std::string key = line.substr(1, eq - 1);
        while (!key.empty() && key.front() == ' ') key.erase(key.begin());
        while (!key.empty() && key.back() == ' ') key.pop_back();
        data.params.emplace_back(key, line.substr(eq + 1));
      }
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    if (!header_seen) {
      while (std::getline(ss, cell, ',')) data.columns.push_back(cell);
      if (data.columns.size() < 2) throw ValidationError("csv: header needs at least 2 columns: " + path);
      header_seen = true;
      continue;
    }
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != data.columns.size()) throw ValidationError("csv: ragged row in " + path);
    data.traj.times.push_back(row[0]);
    data.traj.values.push_back(row[1]);
    if (row.size() > 2) data.traj.derivs.push_back(row[2]);
  }
  if (!header_seen) throw ValidationError("csv: no header row in " + path);
  return data;
}

inline std::optional<double> find_param(const CsvData& data, const std::string& key) {
  for (const auto& [k, v] : data.params)
    if (k == key) {
      try {
        return std::stod(v);
      } catch (...) {
        return std::nullopt;
      }
    }
  return std::nullopt;
}

}  // namespace ekfrac
