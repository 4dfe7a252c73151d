#include "auit/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "auit/experiments.hpp"
#include "auit/notation.hpp"
#include "auit/report.hpp"

namespace auit {

namespace {

struct Options {
  std::vector<std::string> groups;
  int grid = 20;
  int iterations = 20;
  std::size_t episodes = kDefaultEpisodes;
  std::uint64_t seed = 1;
  std::size_t pattern_length = kDefaultPatternLength;
  std::uint64_t pattern_seed = kDefaultPatternSeed;
  int talking_range = kUnlimitedRange;
  bool random_stay = false;
  std::string out_dir = "auit-out";
  bool chart = true;
  unsigned threads = 0;
  std::string axis;
  std::vector<int> points;
};

EpisodeConfig base_config(const Options& o) {
  EpisodeConfig c;
  c.m = o.grid;
  c.iterations = o.iterations;
  c.pattern = {o.pattern_length, o.pattern_seed};
  c.talking_range = o.talking_range;
  c.random_may_stay = o.random_stay;
  return c;
}

SweepDefaults defaults_of(const Options& o) {
  SweepDefaults d;
  d.base = base_config(o);
  d.episodes = o.episodes;
  d.master_seed = o.seed;
  d.threads = o.threads;
  return d;
}

std::vector<GroupNotation> parsed_groups(const Options& o) {
  std::vector<GroupNotation> gs;
  for (const auto& g : o.groups) gs.push_back(parse_group(g));
  return gs;
}

std::string parameter_listing(const std::string& command, const Options& o) {
  std::ostringstream s;
  s << "command=" << command << ";groups=";
  for (std::size_t i = 0; i < o.groups.size(); ++i) s << (i ? "," : "") << render(parse_group(o.groups[i]));
  s << ";grid=" << o.grid << ";iterations=" << o.iterations << ";episodes=" << o.episodes
    << ";seed=" << o.seed << ";pattern_length=" << o.pattern_length
    << ";pattern_seed=" << o.pattern_seed << ";talking_range=" << o.talking_range
    << ";random_stay=" << (o.random_stay ? 1 : 0);
  if (command == "sweep") {
    s << ";axis=" << o.axis << ";points=";
    for (std::size_t i = 0; i < o.points.size(); ++i) s << (i ? "," : "") << o.points[i];
  }
  return s.str();
}

std::filesystem::path prepare_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
  return dir;
}

RunManifest manifest_for(const std::string& command, const Options& o) {
  RunManifest m;
  m.command = command;
  m.tool_version = kToolVersion;
  m.master_seed = o.seed;
  m.parameters = parameter_listing(command, o);
  m.config_digest = fnv1a64(m.parameters);
  return m;
}

void finish_sweep(const std::string& command, const Options& o, const SweepResult& result,
                  std::ostream& out) {
  const auto dir = prepare_dir(o.out_dir);
  RunManifest manifest = manifest_for(command, o);
  const std::string csv = csv_text(result);
  write_text(dir / "results.csv", csv);
  manifest.outputs.push_back((dir / "results.csv").string());
  if (result.axis == SweepAxis::Comparison) {
    write_text(dir / "subgroups.csv", subgroup_csv_text(result));
    manifest.outputs.push_back((dir / "subgroups.csv").string());
  }
  if (o.chart) {
    emit_chart(result, dir / "chart.svg");
    manifest.outputs.push_back((dir / "chart.svg").string());
  }
  manifest.result_digest = result_digest(result);
  manifest.started_at = result.started_at;
  manifest.finished_at = result.finished_at;
  write_manifest(manifest, dir / "manifest.json");
  out << csv;
}

int cmd_run(const Options& o, std::ostream& out) {
  if (o.groups.size() != 1) throw ConfigError("run needs exactly one --group");
  SweepDefaults d = defaults_of(o);
  // A single evaluation is a one-point composition sweep.
  SweepResult result = sweep_composition(parsed_groups(o), d);
  const auto dir = prepare_dir(o.out_dir);
  RunManifest manifest = manifest_for("run", o);
  const std::string csv = csv_text(result.points.front().score, o.seed);
  write_text(dir / "results.csv", csv);
  manifest.outputs.push_back((dir / "results.csv").string());
  if (o.chart) {
    emit_chart(result, dir / "chart.svg");
    manifest.outputs.push_back((dir / "chart.svg").string());
  }
  manifest.result_digest = result_digest(result);
  manifest.started_at = result.started_at;
  manifest.finished_at = result.finished_at;
  write_manifest(manifest, dir / "manifest.json");
  out << csv;
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const SweepAxis axis = parse_axis(o.axis);
  const SweepDefaults d = defaults_of(o);
  const auto groups = parsed_groups(o);
  if (groups.empty()) throw ConfigError("sweep needs at least one --group");
  auto single = [&]() -> const GroupNotation& {
    if (groups.size() != 1) throw ConfigError("this sweep axis takes exactly one --group");
    return groups.front();
  };
  auto points_or = [&](const std::vector<int>& fallback) { return o.points.empty() ? fallback : o.points; };

  SweepResult result;
  switch (axis) {
    case SweepAxis::Composition: result = sweep_composition(groups, d); break;
    case SweepAxis::GroupSize: result = sweep_group_size(single(), points_or(kDefaultGroupSizes), d); break;
    case SweepAxis::EnvironmentComplexity:
      result = sweep_environment(single(), points_or(kDefaultGridSides), d);
      break;
    case SweepAxis::EvaluationTime:
      result = sweep_time(single(), points_or(kDefaultIterationCounts), d);
      break;
    case SweepAxis::Comparison: result = compare_homo_hetero(groups, d); break;
  }
  finish_sweep("sweep", o, result, out);
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const auto groups = parsed_groups(o);
  if (groups.empty()) throw ConfigError("compare needs at least one --group");
  finish_sweep("compare", o, compare_homo_hetero(groups, defaults_of(o)), out);
  return kExitOk;
}

int cmd_complexity(const Options& o, std::ostream& out) {
  const EpisodeConfig c = base_config(o);
  if (c.m < kMinGridSide)
    throw ConfigError("grid side must be at least " + std::to_string(kMinGridSide));
  char line[128];
  std::snprintf(line, sizeof line, "grid %dx%d\n", c.m, c.m);
  out << line;
  std::snprintf(line, sizeof line, "H_bits %.2f\n", entropy_bits(c.m));
  out << line;
  std::snprintf(line, sizeof line, "K_good_bits %.0f\n", complexity_bits(c.good_pattern()));
  out << line;
  std::snprintf(line, sizeof line, "K_evil_bits %.0f\n", complexity_bits(c.evil_pattern()));
  out << line;
  std::snprintf(line, sizeof line, "K_bits %.0f\n", config_complexity_bits(c));
  out << line;
  std::snprintf(line, sizeof line, "pattern_length %zu\n", c.pattern.length);
  out << line;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Group intelligence test on a toroidal grid world", "auit"};
  app.set_version_flag("--version", kToolVersion);
  app.set_config("--config", "", "Read options from a key = value file");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("-g,--group", o.groups, "Group notation, e.g. SL9&O1 (repeatable)");
  app.add_option("--grid", o.grid, "Grid side m")->capture_default_str();
  app.add_option("--iterations", o.iterations, "Iterations per episode")->capture_default_str();
  app.add_option("--episodes", o.episodes, "Episodes per point")->capture_default_str();
  app.add_option("--seed", o.seed, "Master seed")->capture_default_str();
  app.add_option("--pattern-length", o.pattern_length, "Length of the Good/Evil patterns")
      ->capture_default_str();
  app.add_option("--pattern-seed", o.pattern_seed, "Seed of the Good/Evil patterns")
      ->capture_default_str();
  app.add_option("--talking-range", o.talking_range, "Talking range in cells, -1 for unlimited")
      ->capture_default_str();
  app.add_flag("--random-stay", o.random_stay, "Let random agents also draw 'stay'");
  app.add_option("-o,--out", o.out_dir, "Output directory")->capture_default_str();
  app.add_flag("--chart,!--no-chart", o.chart, "Write chart.svg")->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads, 0 = all cores")->capture_default_str();

  auto* run = app.add_subcommand("run", "Evaluate one group");
  auto* sweep = app.add_subcommand("sweep", "Sweep one axis");
  sweep->add_option("--axis", o.axis, "composition | size | environment | time | compare")->required();
  sweep->add_option("--points", o.points, "Axis points (sizes, grid sides or iteration counts)");
  auto* compare = app.add_subcommand("compare", "Heterogeneous groups against weighted homogeneous averages");
  auto* complexity = app.add_subcommand("complexity", "Print H and K estimates");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::FileError& e) {
    err << "auit: " << e.what() << '\n';
    return kExitIo;
  } catch (const CLI::ParseError& e) {
    err << "auit: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    if (complexity->parsed()) return cmd_complexity(o, out);
  } catch (const ParseError& e) {
    err << "auit: invalid group: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "auit: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const MissingKindError& e) {
    err << "auit: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "auit: I/O error: " << e.what() << '\n';
    return kExitIo;
  }
  err << "auit: no subcommand\n";
  return kExitUsage;
}

}  // namespace auit
