#include <concordia/errors.hpp>
#include <concordia/json_io.hpp>
#include <concordia/measures.hpp>
#include <concordia/oracle.hpp>
#include <concordia/region.hpp>
#include <concordia/section.hpp>
#include <concordia/synthesis.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using concordia::Scalar;
using nlohmann::json;

// Exit codes: 0 ok, 1 internal error, 2 parse failure, 3 invalid copula /
// no shuffle form, 4 outside the region or its projection.
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitOutside = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw concordia::ArgumentError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw concordia::ArgumentError("cannot write " + out_path);
    out << text;
  }
}

Scalar cli_tol(double tol_flag, bool tol_set) {
  if (tol_set) return Scalar::from_double(tol_flag);
  if (const char* env = std::getenv("CONCORDIA_DEFAULT_TOL"))
    return Scalar::from_double(std::atof(env));
  return Scalar::from_double(1e-9);
}

struct Mode {
  enum { Exact, Cb, Mc } kind = Exact;
  int cb_n = 1024;
  long long mc_samples = 1000000;
  std::uint64_t mc_seed = 0;
};

Mode parse_mode(const std::string& text) {
  Mode m;
  if (text.empty() || text == "exact") return m;
  if (text.rfind("cb:", 0) == 0) {
    m.kind = Mode::Cb;
    m.cb_n = std::stoi(text.substr(3));
    return m;
  }
  if (text.rfind("mc:", 0) == 0) {
    m.kind = Mode::Mc;
    std::string rest = text.substr(3);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw concordia::ArgumentError("--mode mc wants mc:<samples>:<seed>");
    m.mc_samples = std::stoll(rest.substr(0, colon));
    m.mc_seed = std::stoull(rest.substr(colon + 1));
    return m;
  }
  throw concordia::ArgumentError("unknown mode '" + text + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"exact dependence coefficients of bivariate copulas"};
  app.require_subcommand(1);

  std::string expr_path, out_path, mode_text = "exact", format = "json", what;
  double tol_flag = 1e-9;

  auto* measures_cmd = app.add_subcommand("measures", "coefficients of an expression file");
  measures_cmd->add_option("file", expr_path, "expression JSON file")->required();
  measures_cmd->add_option("--mode", mode_text, "exact | cb:<n> | mc:<samples>:<seed>");
  measures_cmd->add_option("--out", out_path, "write to file instead of stdout");

  auto* region_cmd = app.add_subcommand("region", "attainable region queries");
  region_cmd->require_subcommand(1);
  std::string arg_phi, arg_gamma, arg_tau;
  auto* check_cmd = region_cmd->add_subcommand("check", "membership of a (phi,gamma,tau) point");
  check_cmd->add_option("phi", arg_phi)->required();
  check_cmd->add_option("gamma", arg_gamma)->required();
  check_cmd->add_option("tau", arg_tau)->required();
  auto* tol_opt = check_cmd->add_option("--tol", tol_flag, "boundary tolerance");
  auto* bounds_cmd = region_cmd->add_subcommand("bounds", "attainable tau window for (phi,gamma)");
  bounds_cmd->add_option("phi", arg_phi)->required();
  bounds_cmd->add_option("gamma", arg_gamma)->required();
  auto* export_cmd = region_cmd->add_subcommand("export", "polyhedron mesh");
  export_cmd->add_option("--format", format, "json | obj");
  export_cmd->add_option("--out", out_path, "write to file instead of stdout");

  auto* synth_cmd = app.add_subcommand("synthesize", "construct a copula hitting a target point");
  synth_cmd->add_option("phi", arg_phi)->required();
  synth_cmd->add_option("gamma", arg_gamma)->required();
  synth_cmd->add_option("tau", arg_tau)->required();
  synth_cmd->add_option("--out", out_path, "write the expression JSON here");

  auto* oracle_cmd = app.add_subcommand("oracle-compare", "exact vs checkerboard vs Monte Carlo");
  int oc_n = 256;
  std::string oc_mc = "1000000:42";
  oracle_cmd->add_option("file", expr_path, "expression JSON file")->required();
  oracle_cmd->add_option("--cb", oc_n, "checkerboard resolution");
  oracle_cmd->add_option("--mc", oc_mc, "<samples>:<seed>");

  auto* plot_cmd = app.add_subcommand("plot", "emit plot data");
  plot_cmd->add_option("file", expr_path, "expression JSON file (ignored for polyhedron)");
  plot_cmd->add_option("what", what, "mass | diag | odiag | polyhedron")->required();
  plot_cmd->add_option("--format", format, "csv | json | obj");
  plot_cmd->add_option("--out", out_path, "write to file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  auto load_expr = [&]() { return concordia::parse_expr(read_file(expr_path)); };

  if (measures_cmd->parsed()) {
    auto expr = load_expr();
    Mode mode = parse_mode(mode_text);
    json j;
    switch (mode.kind) {
      case Mode::Exact:
        j = concordia::measures_to_json(concordia::all_measures(*expr));
        break;
      case Mode::Cb:
        j = concordia::measures_to_json(
            concordia::cb_measures(concordia::checkerboard_of(*expr, mode.cb_n)));
        break;
      case Mode::Mc:
        j = concordia::mc_to_json(
            concordia::mc_measures(*expr, mode.mc_samples, mode.mc_seed));
        break;
    }
    write_output(j.dump(2), out_path);
    return 0;
  }

  if (check_cmd->parsed()) {
    concordia::RegionPoint p{Scalar::parse(arg_phi), Scalar::parse(arg_gamma),
                             Scalar::parse(arg_tau)};
    Scalar tol = tol_opt->count() ? Scalar::from_double(tol_flag)
                                  : (p.is_rational() ? Scalar(0) : cli_tol(tol_flag, false));
    auto c = concordia::contains(p, tol);
    json j;
    j["status"] = c.location == concordia::Location::Inside     ? "inside"
                  : c.location == concordia::Location::Boundary ? "boundary"
                                                                : "outside";
    j["active"] = c.active;
    j["violated"] = c.violated;
    if (c.location != concordia::Location::Outside)
      j["most_specific"] = concordia::classify(p, tol).most_specific;
    write_output(j.dump(2), out_path);
    return 0;
  }

  if (bounds_cmd->parsed()) {
    auto [lo, hi] = concordia::tau_bounds(Scalar::parse(arg_phi), Scalar::parse(arg_gamma));
    json j{{"tau_min", concordia::scalar_to_json(lo)},
           {"tau_max", concordia::scalar_to_json(hi)}};
    write_output(j.dump(2), out_path);
    return 0;
  }

  if (export_cmd->parsed()) {
    write_output(format == "obj" ? concordia::region_mesh_obj()
                                 : concordia::region_mesh_json().dump(2),
                 out_path);
    return 0;
  }

  if (synth_cmd->parsed()) {
    concordia::RegionPoint target{Scalar::parse(arg_phi), Scalar::parse(arg_gamma),
                                  Scalar::parse(arg_tau)};
    auto result = concordia::attain(target);
    if (!out_path.empty())
      write_output(concordia::expr_to_json(*result.expr).dump(2), out_path);
    json j = concordia::synthesis_to_json(result);
    // verification: recomputed coefficients of the emitted expression
    double dphi = std::abs(result.achieved.phi.value.to_double() - target.phi.to_double());
    double dgamma =
        std::abs(result.achieved.gamma.value.to_double() - target.gamma.to_double());
    double dtau = std::abs(result.achieved.tau.value.to_double() - target.tau.to_double());
    j["verification"] = {{"phi", result.achieved.phi.value.to_double()},
                         {"gamma", result.achieved.gamma.value.to_double()},
                         {"tau", result.achieved.tau.value.to_double()},
                         {"max_deviation", std::max({dphi, dgamma, dtau})}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (oracle_cmd->parsed()) {
    auto expr = load_expr();
    auto colon = oc_mc.find(':');
    if (colon == std::string::npos)
      throw concordia::ArgumentError("--mc wants <samples>:<seed>");
    long long samples = std::stoll(oc_mc.substr(0, colon));
    std::uint64_t seed = std::stoull(oc_mc.substr(colon + 1));

    auto exact = concordia::all_measures(*expr);
    auto cb = concordia::cb_measures(concordia::checkerboard_of(*expr, oc_n));
    auto mc = concordia::mc_measures(*expr, samples, seed);
    auto delta = [](const concordia::MeasureValue& a, const concordia::MeasureValue& b) {
      return std::abs(a.value.to_double() - b.value.to_double());
    };
    json diffs{{"rho", delta(exact.rho, cb.rho)},    {"tau", delta(exact.tau, cb.tau)},
               {"phi", delta(exact.phi, cb.phi)},    {"gamma", delta(exact.gamma, cb.gamma)},
               {"beta", delta(exact.beta, cb.beta)}, {"xi", delta(exact.xi, cb.xi)}};
    json j{{"exact", concordia::measures_to_json(exact)},
           {"checkerboard", concordia::measures_to_json(cb)},
           {"checkerboard_n", oc_n},
           {"mc", concordia::mc_to_json(mc)},
           {"abs_diff_exact_cb", diffs}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (plot_cmd->parsed()) {
    if (what == "polyhedron") {
      write_output(format == "obj" ? concordia::region_mesh_obj()
                                   : concordia::region_mesh_json().dump(2),
                   out_path);
      return 0;
    }
    auto expr = load_expr();
    if (what == "mass") {
      // raw shuffle leaves keep their stated pieces, anything else is
      // normalized first
      std::vector<concordia::Segment> segs =
          expr->kind() == concordia::CopulaExpr::Kind::Shuffle
              ? expr->shuffle_data().raw_segments()
              : concordia::as_shuffle(*expr).support();
      if (format == "json") {
        json arr = json::array();
        for (const auto& s : segs) {
          double ys = s.flip == 1 ? s.y0.to_double() : s.y1.to_double();
          double ye = s.flip == 1 ? s.y1.to_double() : s.y0.to_double();
          arr.push_back({{"x0", s.x0.to_double()}, {"y0", ys},
                         {"x1", s.x1.to_double()}, {"y1", ye}});
        }
        write_output(arr.dump(2), out_path);
      } else {
        std::ostringstream os;
        os.imbue(std::locale::classic());
        os.precision(17);
        os << "x0,y0,x1,y1\n";
        for (const auto& s : segs) {
          double ys = s.flip == 1 ? s.y0.to_double() : s.y1.to_double();
          double ye = s.flip == 1 ? s.y1.to_double() : s.y0.to_double();
          os << s.x0.to_double() << "," << ys << "," << s.x1.to_double() << "," << ye << "\n";
        }
        write_output(os.str(), out_path);
      }
      return 0;
    }
    if (what == "diag" || what == "odiag") {
      concordia::PiecewiseLinear pl = what == "diag" ? concordia::diagonal(*expr)
                                                     : concordia::opposite_diagonal(*expr);
      if (format == "json") {
        json arr = json::array();
        for (size_t i = 0; i < pl.breakpoints().size(); ++i)
          arr.push_back({{"u", pl.breakpoints()[i].to_double()},
                         {"value", pl.values()[i].to_double()}});
        write_output(arr.dump(2), out_path);
      } else {
        std::ostringstream os;
        os.imbue(std::locale::classic());
        os.precision(17);
        os << "u,value\n";
        for (size_t i = 0; i < pl.breakpoints().size(); ++i)
          os << pl.breakpoints()[i].to_double() << "," << pl.values()[i].to_double() << "\n";
        write_output(os.str(), out_path);
      }
      return 0;
    }
    throw concordia::ArgumentError("unknown plot kind '" + what + "'");
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const concordia::ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": "
              << e.what() << "\n";
    return kExitParse;
  } catch (const concordia::OutOfRegion& e) {
    std::cerr << e.what() << "\n";
    return kExitOutside;
  } catch (const concordia::OutOfFace& e) {
    std::cerr << e.what() << "\n";
    return kExitOutside;
  } catch (const concordia::NotAShuffle& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const concordia::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
