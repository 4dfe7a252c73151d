#pragma once

// Output files: the results CSV, the per-kind comparison CSV, SVG charts and
// the run manifest. All of them are byte-identical for identical inputs,
// except the manifest's timestamps.

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "auit/experiments.hpp"

namespace auit {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Column order of the results CSV.
inline const std::vector<std::string> kCsvColumns{
    "axis", "axis_value", "group", "m", "n", "iterations", "episodes", "H_bits",
    "K_bits", "mean", "std", "baseline", "seed"};

/// Six significant digits, "%.6g".
std::string format_number(double v);

std::string csv_text(const SweepResult& result);
/// A single evaluation as a one-row table with axis "run".
std::string csv_text(const GroupScore& score, std::uint64_t master_seed);

void write_csv(const SweepResult& result, const std::filesystem::path& path);
void write_csv(const GroupScore& score, std::uint64_t master_seed, const std::filesystem::path& path);

/// Comparison sweeps: group, kind, count, mean inside the group, its std,
/// homogeneous mean, homogeneous std.
std::string subgroup_csv_text(const SweepResult& result);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::filesystem::path& path);

/// Bars for composition and comparison results (paired with the baseline),
/// lines for size, environment and time sweeps. Error bars show one standard
/// deviation across episodes. Environment sweeps are plotted against H in bits.
std::string chart_svg(const SweepResult& result);
void emit_chart(const SweepResult& result, const std::filesystem::path& path);

struct RunManifest {
  std::string command;
  std::string tool_version;
  std::uint64_t master_seed = 0;
  /// Canonical "key=value;" listing of every parameter that affects results.
  std::string parameters;
  std::uint64_t config_digest = 0;
  std::uint64_t result_digest = 0;
  std::vector<std::string> outputs;
  std::string started_at;
  std::string finished_at;
};

std::uint64_t fnv1a64(std::string_view bytes) noexcept;
std::string hex64(std::uint64_t v);

std::string manifest_json(const RunManifest& manifest);
void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace auit
