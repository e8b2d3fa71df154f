#include "crcurve/convergence.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "crcurve/curve_analysis.hpp"
#include "crcurve/insertion.hpp"

namespace crcurve {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Largest per-component deviation after flipping the discrete vector to the
// better of the two orientations.
double component_error(const Vec3& discrete, const Vec3& smooth) {
  auto err = [&](double sign) {
    const Vec3 d = discrete * sign - smooth;
    return std::max({std::abs(d.x), std::abs(d.y), std::abs(d.z)});
  };
  return std::min(err(1.0), err(-1.0));
}

bool wants(const std::vector<Quantity>& qs, Quantity q) {
  return std::find(qs.begin(), qs.end(), q) != qs.end();
}

}  // namespace

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kappa: return "kappa";
    case Quantity::tau: return "tau";
    case Quantity::tangent: return "T";
    case Quantity::normal: return "N";
    case Quantity::binormal: return "B";
  }
  return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name) {
  for (Quantity q : all_quantities())
    if (name == quantity_name(q)) return q;
  return std::nullopt;
}

MeasureResult measure_errors(const SmoothCurve& curve, double eps,
                             const std::vector<Quantity>& quantities) {
  const DiscreteCurve polygon = sample_uniform(curve, eps);
  const std::vector<int> edges = polygon.interior_edges();
  if (static_cast<int>(edges.size()) < 10)
    throw std::invalid_argument("eps too coarse: fewer than 10 interior edges");

  MeasureResult result;
  auto record = [&](Quantity q, double err) {
    auto [it, inserted] = result.errors.try_emplace(q, err);
    if (!inserted) it->second = std::max(it->second, err);
  };

  for (int edge : edges) {
    EdgeAnalysis ea;
    try {
      ea = analyze_edge(polygon, edge);
    } catch (const zigzag_error&) {
      ++result.singular_edges;
      continue;
    }
    const double u = edge_midpoint_parameter(edge, eps);

    if (wants(quantities, Quantity::kappa)) {
      const double smooth = std::abs(smooth_curvature(curve, u));
      record(Quantity::kappa, std::abs(ea.kappa - smooth));
    }
    if (curve.dim == 3 && wants(quantities, Quantity::tau) && ea.torsion) {
      // The discrete torsion inherits its sign from the discrete normal, so it
      // gets the same per-edge orientation alignment as the frame vectors.
      const double smooth = smooth_torsion(curve, u);
      record(Quantity::tau, std::min(std::abs(*ea.torsion - smooth),
                                     std::abs(*ea.torsion + smooth)));
    }
    if (ea.frame) {
      const FrenetFrame smooth = smooth_frame(curve, u);
      if (wants(quantities, Quantity::tangent))
        record(Quantity::tangent, component_error(ea.frame->tangent, smooth.tangent));
      if (wants(quantities, Quantity::normal))
        record(Quantity::normal, component_error(ea.frame->normal, smooth.normal));
      if (curve.dim == 3 && wants(quantities, Quantity::binormal))
        record(Quantity::binormal, component_error(ea.frame->binormal, smooth.binormal));
    }
  }

  for (Quantity q : quantities)
    if (!result.errors.count(q)) result.skipped.push_back(q);
  return result;
}

std::optional<RateFit> fit_rate(const std::vector<std::pair<double, double>>& eps_error) {
  std::vector<std::pair<double, double>> log_points;
  int excluded = 0;
  for (const auto& [eps, err] : eps_error) {
    if (err > 0.0) log_points.emplace_back(std::log(eps), std::log(err));
    else ++excluded;
  }
  const int n = static_cast<int>(log_points.size());
  if (n < 2) return std::nullopt;

  double mx = 0, my = 0;
  for (const auto& [x, y] : log_points) mx += x, my += y;
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : log_points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (const auto& [x, y] : log_points) {
    const double r = y - (fit.intercept + fit.slope * x);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  fit.points_used = n;
  fit.points_excluded = excluded;
  fit.low_confidence = n < 8;
  return fit;
}

ConvergenceReport run_experiment(const ExperimentConfig& config) {
  ExperimentConfig cfg = config;
  if (cfg.curves.empty())
    for (const SmoothCurve& c : curve_registry()) cfg.curves.push_back(c.name);
  if (cfg.quantities.empty()) cfg.quantities = all_quantities();
  if (cfg.level_hi < cfg.level_lo)
    throw std::invalid_argument("level range is empty (hi < lo)");

  ConvergenceReport report;
  report.quantities = cfg.quantities;
  for (Quantity q : all_quantities())
    if (!wants(cfg.quantities, q)) report.excluded_quantities.push_back(q);
  for (int l = cfg.level_hi; l >= cfg.level_lo; --l) report.levels.push_back(l);

  for (const std::string& name : cfg.curves) {
    const SmoothCurve* curve = find_curve(name);
    if (!curve) throw std::invalid_argument("unknown curve: " + name);

    CurveReport cr;
    cr.name = name;
    cr.dim = curve->dim;
    try {
      std::map<Quantity, std::vector<LevelPoint>> series;
      for (int level : report.levels) {
        const double eps = level_epsilon(level);
        const MeasureResult m = measure_errors(*curve, eps, cfg.quantities);
        cr.singular_edges += m.singular_edges;
        for (const auto& [q, err] : m.errors) series[q].push_back({level, eps, err});
      }
      for (Quantity q : cfg.quantities) {
        QuantitySeries qs;
        qs.quantity = q;
        if (auto it = series.find(q); it != series.end()) {
          qs.points = it->second;
          std::vector<std::pair<double, double>> pts;
          for (const LevelPoint& p : qs.points) pts.emplace_back(p.epsilon, p.error);
          qs.fit = fit_rate(pts);
          if (!qs.fit) qs.note = "exact at machine precision";
          else if (qs.fit->low_confidence) qs.note = "low confidence (fewer than 8 points)";
        } else {
          qs.note = curve->dim == 2 ? "skipped (not defined for planar curves)"
                                    : "skipped (undefined on this curve)";
        }
        cr.series.push_back(std::move(qs));
      }
    } catch (const std::exception& e) {
      cr.failure = e.what();
      cr.series.clear();
    }
    report.curves.push_back(std::move(cr));
  }

  if (!config.out_dir.empty()) {
    std::filesystem::create_directories(config.out_dir);
    const std::filesystem::path dir(config.out_dir);
    if (config.write_csv) write_csv(report, (dir / "convergence.csv").string());
    if (config.write_json) write_json(report, (dir / "convergence.json").string());
    if (config.write_svg) write_svg_plots(report, dir.string());
  }
  return report;
}

void write_csv(const ConvergenceReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "curve,quantity,level,epsilon,linf_error\n";
  for (const CurveReport& cr : report.curves)
    for (const QuantitySeries& qs : cr.series)
      for (const LevelPoint& p : qs.points)
        out << cr.name << ',' << quantity_name(qs.quantity) << ',' << p.level << ','
            << fmt17(p.epsilon) << ',' << fmt17(p.error) << '\n';
}

void write_json(const ConvergenceReport& report, const std::string& path) {
  nlohmann::ordered_json j;
  j["epsilon_rule"] = "0.1*1.1^level";
  j["levels"] = report.levels;
  std::vector<std::string> qnames;
  for (Quantity q : report.quantities) qnames.emplace_back(quantity_name(q));
  j["quantities"] = qnames;
  if (!report.excluded_quantities.empty()) {
    std::vector<std::string> excluded;
    for (Quantity q : report.excluded_quantities) excluded.emplace_back(quantity_name(q));
    j["excluded_quantities"] = excluded;
  }
  j["curves"] = nlohmann::ordered_json::array();
  for (const CurveReport& cr : report.curves) {
    nlohmann::ordered_json jc;
    jc["name"] = cr.name;
    jc["dimension"] = cr.dim;
    jc["singular_edges"] = cr.singular_edges;
    if (!cr.failure.empty()) jc["failure"] = cr.failure;
    jc["quantities"] = nlohmann::ordered_json::array();
    for (const QuantitySeries& qs : cr.series) {
      nlohmann::ordered_json jq;
      jq["quantity"] = std::string(quantity_name(qs.quantity));
      if (!qs.note.empty()) jq["note"] = qs.note;
      jq["series"] = nlohmann::ordered_json::array();
      for (const LevelPoint& p : qs.points)
        jq["series"].push_back({{"level", p.level}, {"epsilon", p.epsilon}, {"linf_error", p.error}});
      if (qs.fit) {
        jq["slope"] = qs.fit->slope;
        jq["intercept"] = qs.fit->intercept;
        jq["residual_rms"] = qs.fit->residual_rms;
        jq["points_used"] = qs.fit->points_used;
        jq["points_excluded"] = qs.fit->points_excluded;
        jq["low_confidence"] = qs.fit->low_confidence;
      }
      jc["quantities"].push_back(std::move(jq));
    }
    j["curves"].push_back(std::move(jc));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

namespace {

const char* const kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b", "#17becf"};

void write_svg_plot(const ConvergenceReport& report, Quantity q, const std::string& path) {
  struct Series {
    std::string name;
    std::vector<std::pair<double, double>> pts;  // (log10 eps, log10 err)
  };
  std::vector<Series> series;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const CurveReport& cr : report.curves) {
    for (const QuantitySeries& qs : cr.series) {
      if (qs.quantity != q || qs.points.empty()) continue;
      Series s;
      s.name = cr.name;
      for (const LevelPoint& p : qs.points) {
        if (p.error <= 0.0) continue;
        const double x = std::log10(p.epsilon), y = std::log10(p.error);
        s.pts.emplace_back(x, y);
        xmin = std::min(xmin, x), xmax = std::max(xmax, x);
        ymin = std::min(ymin, y), ymax = std::max(ymax, y);
      }
      if (!s.pts.empty()) series.push_back(std::move(s));
    }
  }
  if (series.empty()) return;
  if (xmax - xmin < 1e-12) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-12) ymax = ymin + 1.0;

  const double W = 640, H = 480, L = 70, R = 150, T = 40, B = 50;
  auto sx = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto sy = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"15\">"
      << "l-inf error of " << quantity_name(q) << " vs sampling step (log10/log10)</text>\n";

  // axes
  out << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\""
      << H - B << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
  for (int d = static_cast<int>(std::ceil(ymin)); d <= static_cast<int>(std::floor(ymax));
       ++d) {
    out << "<line x1=\"" << L << "\" y1=\"" << sy(d) << "\" x2=\"" << W - R << "\" y2=\""
        << sy(d) << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << L - 8 << "\" y=\"" << sy(d) + 4
        << "\" text-anchor=\"end\" font-size=\"11\">1e" << d << "</text>\n";
  }
  const double xt0 = std::ceil(xmin * 10) / 10.0;
  for (double x = xt0; x <= xmax + 1e-9; x += 0.1) {
    out << "<line x1=\"" << sx(x) << "\" y1=\"" << H - B << "\" x2=\"" << sx(x) << "\" y2=\""
        << H - B + 4 << "\" stroke=\"black\"/>\n";
    char label[16];
    std::snprintf(label, sizeof label, "%.1f", x);
    out << "<text x=\"" << sx(x) << "\" y=\"" << H - B + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << label << "</text>\n";
  }
  out << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12
      << "\" text-anchor=\"middle\" font-size=\"12\">log10 epsilon</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kSeriesColors[i % 7];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[i].pts) out << sx(x) << ',' << sy(y) << ' ';
    out << "\"/>\n";
    for (const auto& [x, y] : series[i].pts)
      out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"2.5\" fill=\"" << color
          << "\"/>\n";
    const double ly = T + 16 + 18 * static_cast<double>(i);
    out << "<line x1=\"" << W - R + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << W - R + 34
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << W - R + 40 << "\" y=\"" << ly << "\" font-size=\"12\">"
        << series[i].name << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace

void write_svg_plots(const ConvergenceReport& report, const std::string& dir) {
  for (Quantity q : report.quantities) {
    const std::filesystem::path path =
        std::filesystem::path(dir) / ("convergence_" + std::string(quantity_name(q)) + ".svg");
    write_svg_plot(report, q, path.string());
  }
}

}  // namespace crcurve
