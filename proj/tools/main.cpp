// Command-line front end: per-edge analysis of polyline files and the
// convergence benchmark over the built-in curve registry.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crcurve/convergence.hpp"
#include "crcurve/curve_analysis.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSingular = 3;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string fmt(const crcurve::Vec3& v) {
  return "(" + fmt(v.x) + ", " + fmt(v.y) + ", " + fmt(v.z) + ")";
}

nlohmann::ordered_json vec_json(const crcurve::Vec3& v) {
  return nlohmann::ordered_json::array({v.x, v.y, v.z});
}

nlohmann::ordered_json point_json(const crcurve::PointOrInf<crcurve::SpacePoint>& p) {
  if (p.infinite()) return "infinity";
  return vec_json(p.point());
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) items.push_back(item);
  return items;
}

int run_analyze(const std::string& path, bool as_json) {
  crcurve::DiscreteCurve curve = crcurve::DiscreteCurve::read_file(path);
  int singular = 0;

  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (int edge : curve.interior_edges()) {
    try {
      const crcurve::EdgeAnalysis ea = crcurve::analyze_edge(curve, edge);
      if (as_json) {
        nlohmann::ordered_json je;
        je["edge"] = ea.edge;
        je["p_ab"] = point_json(ea.points.ab);
        je["p_bc"] = point_json(ea.points.bc);
        je["p_cd"] = point_json(ea.points.cd);
        je["p_da"] = point_json(ea.points.da);
        if (std::holds_alternative<crcurve::Circle3>(ea.circle)) {
          const auto& k = std::get<crcurve::Circle3>(ea.circle);
          je["circle"] = {{"center", vec_json(k.center)},
                          {"radius", k.radius},
                          {"normal", vec_json(k.normal)}};
        } else {
          const auto& l = std::get<crcurve::Line3>(ea.circle);
          je["line"] = {{"point", vec_json(l.point)}, {"dir", vec_json(l.dir)}};
        }
        je["kappa"] = ea.kappa;
        if (ea.frame) {
          je["T"] = vec_json(ea.frame->tangent);
          je["N"] = vec_json(ea.frame->normal);
          je["B"] = vec_json(ea.frame->binormal);
        }
        if (ea.torsion) je["tau"] = *ea.torsion;
        if (ea.osculating_sphere)
          je["osculating_sphere"] = {{"center", vec_json(ea.osculating_sphere->center)},
                                     {"radius", ea.osculating_sphere->radius}};
        if (ea.kappa_prime) je["kappa_prime"] = *ea.kappa_prime;
        edges.push_back(std::move(je));
      } else {
        std::cout << "edge " << ea.edge << ": ";
        if (std::holds_alternative<crcurve::Circle3>(ea.circle)) {
          const auto& k = std::get<crcurve::Circle3>(ea.circle);
          std::cout << "kappa=" << fmt(ea.kappa);
          if (ea.torsion) std::cout << " tau=" << fmt(*ea.torsion);
          if (ea.kappa_prime) std::cout << " kappa'=" << fmt(*ea.kappa_prime);
          std::cout << " radius=" << fmt(k.radius) << " center=" << fmt(k.center);
          if (ea.frame)
            std::cout << " T=" << fmt(ea.frame->tangent) << " N=" << fmt(ea.frame->normal)
                      << " B=" << fmt(ea.frame->binormal);
        } else {
          const auto& l = std::get<crcurve::Line3>(ea.circle);
          std::cout << "kappa=0 (curvature circle is a line) point=" << fmt(l.point)
                    << " dir=" << fmt(l.dir);
        }
        std::cout << '\n';
      }
    } catch (const crcurve::zigzag_error& e) {
      ++singular;
      if (as_json)
        edges.push_back({{"edge", edge}, {"singular", e.what()}});
      else
        std::cout << "edge " << edge << ": singular (" << e.what() << ")\n";
    }
  }

  if (as_json) {
    nlohmann::ordered_json j;
    j["file"] = path;
    j["dimension"] = curve.dimension();
    j["closed"] = curve.closed();
    j["vertices"] = curve.vertex_count();
    j["interior_edges"] = curve.interior_edges().size();
    j["singular_edges"] = singular;
    j["edges"] = std::move(edges);
    std::cout << j.dump(2) << '\n';
  } else if (!curve.closed()) {
    std::cout << "(boundary edges without a four-vertex stencil are skipped)\n";
  }
  return singular > 0 ? kExitSingular : kExitOk;
}

int run_converge(const crcurve::ExperimentConfig& config) {
  const crcurve::ConvergenceReport report = crcurve::run_experiment(config);

  std::printf("%-14s", "curve");
  for (crcurve::Quantity q : report.quantities)
    std::printf(" %10s", std::string(crcurve::quantity_name(q)).c_str());
  std::printf("\n");
  int failures = 0;
  for (const crcurve::CurveReport& cr : report.curves) {
    if (!cr.failure.empty()) {
      ++failures;
      std::printf("%-14s failed: %s\n", cr.name.c_str(), cr.failure.c_str());
      continue;
    }
    std::printf("%-14s", cr.name.c_str());
    for (const crcurve::QuantitySeries& qs : cr.series) {
      if (qs.fit) std::printf(" %10.4f", qs.fit->slope);
      else std::printf(" %10s", "-");
    }
    std::printf("\n");
  }
  if (!config.out_dir.empty())
    std::printf("artifacts written to %s\n", config.out_dir.c_str());
  return failures == static_cast<int>(report.curves.size()) ? kExitSingular : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete curvature, Frenet frame and torsion of polygonal curves"};
  app.require_subcommand(1);

  std::string curve_file;
  bool as_json = false;
  CLI::App* analyze = app.add_subcommand("analyze", "per-edge analysis of a polyline file");
  analyze->add_option("curve-file", curve_file, "polyline file (header open|closed)")
      ->required();
  analyze->add_flag("--json", as_json, "emit JSON instead of text");

  std::string curves_arg = "all";
  std::string levels_arg = "0..-15";
  std::string quantities_arg = "kappa,tau,T,N,B";
  std::string out_dir = "convergence_out";
  std::string formats_arg = "csv,json,svg";
  CLI::App* converge = app.add_subcommand("converge", "convergence benchmark on the registry");
  converge->add_option("--curves", curves_arg, "comma list of registry curves, or 'all'");
  converge->add_option("--levels", levels_arg, "refinement levels A..B (eps = 0.1*1.1^l)");
  converge->add_option("--quantities", quantities_arg, "subset of kappa,tau,T,N,B");
  converge->add_option("--out", out_dir, "output directory for artifacts");
  converge->add_option("--format", formats_arg, "artifact formats: csv,json,svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*analyze) return run_analyze(curve_file, as_json);

    crcurve::ExperimentConfig config;
    if (curves_arg != "all") config.curves = split_list(curves_arg);
    for (const std::string& name : split_list(quantities_arg)) {
      const auto q = crcurve::parse_quantity(name);
      if (!q) {
        std::cerr << "unknown quantity: " << name << "\n";
        return kExitConfig;
      }
      config.quantities.push_back(*q);
    }
    const auto sep = levels_arg.find("..");
    if (sep == std::string::npos) {
      std::cerr << "bad --levels, expected A..B\n";
      return kExitConfig;
    }
    try {
      config.level_hi = std::stoi(levels_arg.substr(0, sep));
      config.level_lo = std::stoi(levels_arg.substr(sep + 2));
    } catch (const std::exception&) {
      std::cerr << "bad --levels, expected integer A..B\n";
      return kExitConfig;
    }
    config.out_dir = out_dir;
    config.write_csv = config.write_json = config.write_svg = false;
    for (const std::string& f : split_list(formats_arg)) {
      if (f == "csv") config.write_csv = true;
      else if (f == "json") config.write_json = true;
      else if (f == "svg") config.write_svg = true;
      else {
        std::cerr << "unknown format: " << f << "\n";
        return kExitConfig;
      }
    }
    return run_converge(config);
  } catch (const crcurve::zigzag_error& e) {
    std::cerr << "numerical singularity: " << e.what() << "\n";
    return kExitSingular;
  } catch (const std::exception& e) {
    // config errors, malformed input files, I/O failures
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
