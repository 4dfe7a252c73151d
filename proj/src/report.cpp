#include "auit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace auit {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

namespace {

std::string row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  out += '\n';
  return out;
}

std::vector<std::string> score_fields(std::string_view axis, double axis_value, const GroupScore& s,
                                      std::optional<double> baseline, std::uint64_t seed) {
  const EpisodeConfig& c = s.config;
  return {std::string(axis),
          format_number(axis_value),
          render(composition_of(c.roster)),
          std::to_string(c.m),
          std::to_string(c.roster.size()),
          std::to_string(c.iterations),
          std::to_string(s.episode_count),
          format_number(entropy_bits(c.m)),
          format_number(config_complexity_bits(c)),
          format_number(s.mean),
          format_number(s.std_dev),
          baseline ? format_number(*baseline) : std::string{},
          std::to_string(seed)};
}

}  // namespace

std::string csv_text(const SweepResult& result) {
  std::string out = row(kCsvColumns);
  for (const auto& p : result.points)
    out += row(score_fields(to_string(result.axis), p.axis_value, p.score, p.baseline,
                            result.master_seed));
  return out;
}

std::string csv_text(const GroupScore& score, std::uint64_t master_seed) {
  return row(kCsvColumns) + row(score_fields("run", 0.0, score, std::nullopt, master_seed));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("failed writing " + path.string());
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  write_text(path, csv_text(result));
}

void write_csv(const GroupScore& score, std::uint64_t master_seed, const std::filesystem::path& path) {
  write_text(path, csv_text(score, master_seed));
}

std::string subgroup_csv_text(const SweepResult& result) {
  std::string out = row({"group", "kind", "count", "in_group_mean", "in_group_std",
                         "homogeneous_mean", "homogeneous_std"});
  for (const auto& p : result.points) {
    for (const auto& sg : p.subgroups) {
      int count = 0;
      for (const auto& [k, c] : p.group.terms)
        if (k == sg.kind) count = c;
      out += row({render(p.group), std::string(to_string(sg.kind)), std::to_string(count),
                  format_number(sg.in_group.mean), format_number(sg.in_group.std_dev),
                  format_number(sg.homogeneous.mean), format_number(sg.homogeneous.std_dev)});
    }
  }
  return out;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool first = true;
  auto end_row = [&] {
    fields.push_back(std::move(field));
    field.clear();
    if (fields.size() == 1 && fields[0].empty()) {
      fields.clear();
      return;
    }
    if (first) {
      t.header = std::move(fields);
      first = false;
    } else {
      t.rows.push_back(std::move(fields));
    }
    fields.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      end_row();
    } else if (ch != '\r') {
      field += ch;
    }
  }
  if (!field.empty() || !fields.empty()) end_row();
  return t;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_csv(ss.str());
}

// ---- SVG -------------------------------------------------------------------

namespace {

struct Frame {
  double width = 760;
  double height = 440;
  double left = 80;
  double right = 30;
  double top = 50;
  double bottom = 90;
  double x0() const { return left; }
  double x1() const { return width - right; }
  double y0() const { return height - bottom; }
  double y1() const { return top; }
};

std::string esc(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double nice_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double f : {1.0, 2.0, 2.5, 5.0, 10.0})
    if (raw <= f * mag) return f * mag;
  return 10.0 * mag;
}

class SvgChart {
 public:
  SvgChart(double ymin, double ymax) {
    lo_ = std::min(0.0, ymin);
    hi_ = std::max(0.0, ymax);
    if (hi_ - lo_ < 1e-9) hi_ = lo_ + 1.0;
    const double pad = 0.05 * (hi_ - lo_);
    if (lo_ < 0) lo_ -= pad;
    hi_ += pad;
  }

  double y(double v) const { return f_.y0() - (v - lo_) / (hi_ - lo_) * (f_.y0() - f_.y1()); }
  const Frame& frame() const { return f_; }

  void begin(std::string_view title, std::string_view xlabel, std::string_view ylabel) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f_.width << "\" height=\""
         << f_.height << "\" viewBox=\"0 0 " << f_.width << ' ' << f_.height
         << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out_ << "<text x=\"" << f_.width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
         << esc(title) << "</text>\n";
    out_ << "<text x=\"" << (f_.x0() + f_.x1()) / 2 << "\" y=\"" << f_.height - 16
         << "\" text-anchor=\"middle\">" << esc(xlabel) << "</text>\n";
    out_ << "<text x=\"18\" y=\"" << (f_.y0() + f_.y1()) / 2
         << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << (f_.y0() + f_.y1()) / 2
         << ")\">" << esc(ylabel) << "</text>\n";
    const double step = nice_step(hi_ - lo_);
    for (double t = std::ceil(lo_ / step) * step; t <= hi_ + 1e-12; t += step) {
      out_ << "<line x1=\"" << f_.x0() << "\" x2=\"" << f_.x1() << "\" y1=\"" << fmt(y(t))
           << "\" y2=\"" << fmt(y(t)) << "\" stroke=\"#e0e0e0\"/>\n";
      out_ << "<text x=\"" << f_.x0() - 6 << "\" y=\"" << fmt(y(t) + 4)
           << "\" text-anchor=\"end\">" << format_number(std::abs(t) < 1e-12 ? 0.0 : t)
           << "</text>\n";
    }
    out_ << "<line x1=\"" << f_.x0() << "\" x2=\"" << f_.x1() << "\" y1=\"" << fmt(y(0))
         << "\" y2=\"" << fmt(y(0)) << "\" stroke=\"#444\"/>\n";
    out_ << "<line x1=\"" << f_.x0() << "\" x2=\"" << f_.x0() << "\" y1=\"" << f_.y0()
         << "\" y2=\"" << f_.y1() << "\" stroke=\"#444\"/>\n";
  }

  void bar(double x, double w, double v, std::string_view colour) {
    const double top = std::min(y(v), y(0));
    const double h = std::abs(y(v) - y(0));
    out_ << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(w)
         << "\" height=\"" << fmt(h) << "\" fill=\"" << colour << "\"/>\n";
  }

  void error_bar(double x, double v, double sd) {
    out_ << "<line class=\"error\" x1=\"" << fmt(x) << "\" x2=\"" << fmt(x) << "\" y1=\""
         << fmt(y(v - sd)) << "\" y2=\"" << fmt(y(v + sd)) << "\" stroke=\"black\"/>\n";
    for (double e : {v - sd, v + sd})
      out_ << "<line x1=\"" << fmt(x - 4) << "\" x2=\"" << fmt(x + 4) << "\" y1=\"" << fmt(y(e))
           << "\" y2=\"" << fmt(y(e)) << "\" stroke=\"black\"/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, std::string_view colour) {
    out_ << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    for (const auto& [x, v] : pts) out_ << fmt(x) << ',' << fmt(y(v)) << ' ';
    out_ << "\"/>\n";
    for (const auto& [x, v] : pts)
      out_ << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y(v)) << "\" r=\"3.5\" fill=\""
           << colour << "\"/>\n";
  }

  void xlabel(double x, std::string_view text) {
    out_ << "<text x=\"" << fmt(x) << "\" y=\"" << f_.y0() + 18 << "\" text-anchor=\"middle\">"
         << esc(text) << "</text>\n";
  }

  void legend(double x, double yy, std::string_view colour, std::string_view text) {
    out_ << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(yy - 10) << "\" width=\"12\" height=\"12\" fill=\""
         << colour << "\"/>\n";
    out_ << "<text x=\"" << fmt(x + 18) << "\" y=\"" << fmt(yy) << "\">" << esc(text) << "</text>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  Frame f_;
  double lo_ = 0;
  double hi_ = 1;
  std::ostringstream out_;
};

constexpr std::string_view kHetero = "#3b6fb6";
constexpr std::string_view kBaseline = "#e3a33b";

}  // namespace

std::string chart_svg(const SweepResult& result) {
  if (result.points.empty()) throw std::invalid_argument("cannot chart an empty result");
  const bool compare = result.axis == SweepAxis::Comparison;
  const bool bars = compare || result.axis == SweepAxis::Composition || result.points.size() == 1;

  auto baseline_sd = [&](const SweepPoint& p) {
    return p.baseline_error ? *p.baseline_error * std::sqrt(static_cast<double>(p.score.episode_count))
                            : 0.0;
  };

  double ymin = 0.0;
  double ymax = 0.0;
  for (const auto& p : result.points) {
    ymin = std::min(ymin, p.score.mean - p.score.std_dev);
    ymax = std::max(ymax, p.score.mean + p.score.std_dev);
    if (p.baseline) {
      ymin = std::min(ymin, *p.baseline - baseline_sd(p));
      ymax = std::max(ymax, *p.baseline + baseline_sd(p));
    }
  }
  SvgChart chart(ymin, ymax);
  const Frame& f = chart.frame();

  std::string xlabel;
  switch (result.axis) {
    case SweepAxis::Composition: xlabel = "group"; break;
    case SweepAxis::Comparison: xlabel = "group"; break;
    case SweepAxis::GroupSize: xlabel = "number of agents"; break;
    case SweepAxis::EnvironmentComplexity: xlabel = "search-space complexity H (bits)"; break;
    case SweepAxis::EvaluationTime: xlabel = "iterations per episode"; break;
  }
  std::string title = "Group score by " + std::string(to_string(result.axis));
  if (!compare && result.axis != SweepAxis::Composition && !result.points.empty())
    title += " (" + render(result.points.front().group) + ")";
  chart.begin(title, xlabel, "mean reward per agent per iteration");

  if (bars) {
    const std::size_t k = result.points.size();
    const double slot = (f.x1() - f.x0()) / static_cast<double>(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& p = result.points[i];
      const double cx = f.x0() + slot * (static_cast<double>(i) + 0.5);
      if (compare) {
        const double w = slot * 0.32;
        chart.bar(cx - w, w, p.score.mean, kHetero);
        chart.error_bar(cx - w / 2, p.score.mean, p.score.std_dev);
        chart.bar(cx, w, *p.baseline, kBaseline);
        chart.error_bar(cx + w / 2, *p.baseline, baseline_sd(p));
      } else {
        const double w = slot * 0.5;
        chart.bar(cx - w / 2, w, p.score.mean, kHetero);
        chart.error_bar(cx, p.score.mean, p.score.std_dev);
      }
      std::string label = render(p.group);
      if (!compare && result.axis != SweepAxis::Composition) label += " @ " + format_number(p.axis_value);
      chart.xlabel(cx, label);
    }
    if (compare) {
      chart.legend(f.x0() + 10, f.y1() - 8, kHetero, "heterogeneous");
      chart.legend(f.x0() + 150, f.y1() - 8, kBaseline, "weighted homogeneous average");
    }
    return chart.finish();
  }

  auto xval = [&](const SweepPoint& p) {
    return result.axis == SweepAxis::EnvironmentComplexity ? p.entropy_bits : p.axis_value;
  };
  double xmin = xval(result.points.front());
  double xmax = xmin;
  for (const auto& p : result.points) {
    xmin = std::min(xmin, xval(p));
    xmax = std::max(xmax, xval(p));
  }
  const bool log_x = result.axis == SweepAxis::EvaluationTime && xmin > 0 && xmax / xmin > 20;
  auto tx = [&](double v) { return log_x ? std::log10(v) : v; };
  const double a = tx(xmin);
  const double b = tx(xmax) > a ? tx(xmax) : a + 1.0;
  const double inset = 30;
  auto px = [&](double v) { return f.x0() + inset + (tx(v) - a) / (b - a) * (f.x1() - f.x0() - 2 * inset); };

  std::vector<std::pair<double, double>> pts;
  for (const auto& p : result.points) {
    pts.emplace_back(px(xval(p)), p.score.mean);
    chart.error_bar(px(xval(p)), p.score.mean, p.score.std_dev);
    chart.xlabel(px(xval(p)), format_number(result.axis == SweepAxis::EnvironmentComplexity
                                                ? std::floor(xval(p) * 10 + 1e-9) / 10
                                                : xval(p)));
  }
  chart.polyline(pts, kHetero);
  return chart.finish();
}

void emit_chart(const SweepResult& result, const std::filesystem::path& path) {
  write_text(path, chart_svg(result));
}

// ---- Manifest --------------------------------------------------------------

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string manifest_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["tool"] = "auit";
  j["version"] = m.tool_version;
  j["command"] = m.command;
  j["master_seed"] = m.master_seed;
  j["parameters"] = m.parameters;
  j["config_digest"] = hex64(m.config_digest);
  j["result_digest"] = hex64(m.result_digest);
  j["outputs"] = m.outputs;
  j["started_at"] = m.started_at;
  j["finished_at"] = m.finished_at;
  return j.dump(2) + "\n";
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
  write_text(path, manifest_json(manifest));
}

}  // namespace auit
