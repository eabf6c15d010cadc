#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "twistor/expr.hpp"
#include "twistor/json_io.hpp"

namespace {

using namespace twistor;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Internal, "cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Internal, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

int exit_code_for(const Certificate& cert) {
  if (!cert.parity_ok) return 2;
  if (!cert.j.holds) return 3;
  if (!cert.fibers_ok) return 4;
  return 0;
}

void print_certificate_text(const ImplicitSurface& surface, const Certificate& cert) {
  std::cout << "construction: " << cert.construction;
  for (const auto& [key, value] : cert.inputs) std::cout << "  " << key << " = " << value;
  std::cout << "\n";
  std::cout << "F = " << surface.f << "\n";
  std::cout << "degree: " << cert.degree << "  parity: " << (cert.parity_ok ? "ok" : "ODD")
            << "\n";
  if (cert.j.holds)
    std::cout << "j-invariance: holds (lambda = " << cert.j.lambda << ")\n";
  else
    std::cout << "j-invariance: FAILS\n";
  std::size_t good = 0;
  for (const auto& f : cert.fibers)
    if (f.cert.is_twistor && f.on_surface) ++good;
  std::cout << "twistor fibers: " << good << "/" << cert.fibers.size()
            << " certified on the surface\n";
  if (cert.fiber_count)
    std::cout << "generic fiber count: " << *cert.fiber_count << "\n";
  for (const auto& entry : surface.cleanup) std::cout << "cleanup: " << entry << "\n";
  std::cout << (cert.all_pass() ? "all certificates pass" : "CERTIFICATE FAILURE") << "\n";
}

int emit_certificate(const ImplicitSurface& surface, const Certificate& cert,
                     const std::string& format, const std::string& out_path) {
  Json artifact{{"surface", to_json(surface)}, {"certificate", to_json(cert)}};
  if (format == "json")
    std::cout << artifact.dump(2) << "\n";
  else
    print_certificate_text(surface, cert);
  if (!out_path.empty()) write_json_file(out_path, artifact);
  return exit_code_for(cert);
}

struct CommonOpts {
  int samples = 20;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--samples", opts.samples, "number of sampled ruling lines to certify")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts.seed, "seed for all randomized probes");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opts.out_path, "write the JSON artifact to this file");
}

int run_slice(const std::string& g_expr, const std::string& h_expr, const CommonOpts& opts) {
  SlicePair pair = make_slice_pair(parse_poly(g_expr, kSliceVar), parse_poly(h_expr, kSliceVar));
  ImplicitSurface surface = implicitize_slice(pair, opts.seed);
  Certificate cert = surface_report(surface, pair, opts.samples, opts.seed);
  return emit_certificate(surface, cert, opts.format, opts.out_path);
}

int run_grassmann(const std::string& f4_expr, const std::string& f5_expr, const CommonOpts& opts) {
  ECurve curve = e_curve(parse_poly(f4_expr, kCurveVar), parse_poly(f5_expr, kCurveVar));
  Rng rng(opts.seed);
  LineFamily family = line_family(curve, rng);
  ImplicitSurface surface = implicitize_ruled(family, opts.seed);
  Certificate cert = surface_report(surface, family, opts.samples, opts.seed);
  return emit_certificate(surface, cert, opts.format, opts.out_path);
}

// Construction files carry either {"g","h"} or {"f4","f5"}.
int run_from_construction(const Json& input, const CommonOpts& opts, bool full_report) {
  if (input.contains("g") && input.contains("h")) {
    SlicePair pair = make_slice_pair(parse_poly(input.at("g").get<std::string>(), kSliceVar),
                                     parse_poly(input.at("h").get<std::string>(), kSliceVar));
    ImplicitSurface surface = implicitize_slice(pair, opts.seed);
    if (!full_report) {
      if (opts.format == "json")
        std::cout << to_json(surface).dump(2) << "\n";
      else
        std::cout << "F = " << surface.f << "  (degree " << surface.degree << ")\n";
      if (!opts.out_path.empty()) write_json_file(opts.out_path, to_json(surface));
      return 0;
    }
    Certificate cert = surface_report(surface, pair, opts.samples, opts.seed);
    return emit_certificate(surface, cert, opts.format, opts.out_path);
  }
  if (input.contains("f4") && input.contains("f5")) {
    ECurve curve = e_curve(parse_poly(input.at("f4").get<std::string>(), kCurveVar),
                           parse_poly(input.at("f5").get<std::string>(), kCurveVar));
    Rng rng(opts.seed);
    LineFamily family = line_family(curve, rng);
    ImplicitSurface surface = implicitize_ruled(family, opts.seed);
    if (!full_report) {
      if (opts.format == "json")
        std::cout << to_json(surface).dump(2) << "\n";
      else
        std::cout << "F = " << surface.f << "  (degree " << surface.degree << ")\n";
      if (!opts.out_path.empty()) write_json_file(opts.out_path, to_json(surface));
      return 0;
    }
    Certificate cert = surface_report(surface, family, opts.samples, opts.seed);
    return emit_certificate(surface, cert, opts.format, opts.out_path);
  }
  fail(ErrorKind::SyntaxError, "construction JSON needs either g/h or f4/f5");
}

int run_is_twistor(const std::string& pluecker_arg, const std::string& format) {
  std::vector<GaussianRational> entries;
  std::stringstream ss(pluecker_arg);
  std::string piece;
  while (std::getline(ss, piece, ',')) entries.push_back(parse_complex_constant(piece));
  if (entries.size() != 6)
    fail(ErrorKind::SyntaxError, "expected 6 comma-separated complex coordinates");
  Vec6 t;
  std::move(entries.begin(), entries.end(), t.begin());
  TwistorCertificate cert = is_twistor_line(PlueckerPoint(std::move(t)));
  if (format == "json") {
    std::cout << to_json(cert).dump(2) << "\n";
  } else if (cert.is_twistor) {
    std::cout << "twistor line (lambda = " << *cert.lambda << ")\n";
  } else {
    std::cout << "not a twistor line (violating minor " << cert.violating_minor->first + 1 << ","
              << cert.violating_minor->second + 1 << ")\n";
  }
  return cert.is_twistor ? 0 : 4;
}

int run_verify(const std::string& surface_path, const std::string& line_path,
               const std::string& format) {
  ImplicitSurface surface = surface_from_json(read_json_file(surface_path));
  Line3 line = line_from_json(read_json_file(line_path));
  bool on = line_on_surface(surface.f, line);
  TwistorCertificate cert = is_twistor_line(pluecker_embed(line));
  if (format == "json") {
    Json out{{"on_surface", on}, {"twistor", to_json(cert)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "line on surface: " << (on ? "yes" : "no") << "\n";
    std::cout << "twistor line: " << (cert.is_twistor ? "yes" : "no") << "\n";
  }
  return (on && cert.is_twistor) ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructs ruled surfaces with infinitely many twistor lines and certifies them"};
  app.set_help_flag("--help", "print help");  // keep -h free for the slice input
  app.require_subcommand(1);

  CommonOpts lift_opts, grass_opts, imp_opts, report_opts;
  std::string g_expr, h_expr, f4_expr, f5_expr;
  std::string in_path, surface_path, line_path, pluecker_arg;
  std::string is_twistor_format = "text", verify_format = "text";

  CLI::App* lift = app.add_subcommand("lift", "slice construction from polynomials g, h in v");
  lift->set_help_flag("--help", "print help");
  lift->add_option("--g", g_expr, "polynomial in v")->required();
  lift->add_option("--h", h_expr, "polynomial in v")->required();
  add_common(lift, lift_opts);

  CLI::App* grass = app.add_subcommand("grassmann",
                                       "curve construction from real polynomials f4, f5 in w");
  grass->add_option("--f4", f4_expr, "real polynomial in w")->required();
  grass->add_option("--f5", f5_expr, "real polynomial in w")->required();
  add_common(grass, grass_opts);

  CLI::App* imp = app.add_subcommand("implicitize", "construction JSON -> surface JSON");
  imp->add_option("--in", in_path, "construction JSON ({g,h} or {f4,f5})")->required();
  add_common(imp, imp_opts);

  CLI::App* twist = app.add_subcommand("is-twistor", "test a point of the Plücker quadric");
  twist->add_option("--pluecker", pluecker_arg, "6 comma-separated complex coordinates")
      ->required();
  twist->add_option("--format", is_twistor_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "check a line against a surface JSON");
  verify->add_option("--surface", surface_path, "surface JSON file")->required();
  verify->add_option("--line", line_path, "line JSON file")->required();
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* report = app.add_subcommand("report", "construction JSON -> full certificate");
  report->add_option("--in", in_path, "construction JSON ({g,h} or {f4,f5})")->required();
  add_common(report, report_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (lift->parsed()) return run_slice(g_expr, h_expr, lift_opts);
    if (grass->parsed()) return run_grassmann(f4_expr, f5_expr, grass_opts);
    if (imp->parsed()) return run_from_construction(read_json_file(in_path), imp_opts, false);
    if (twist->parsed()) return run_is_twistor(pluecker_arg, is_twistor_format);
    if (verify->parsed()) return run_verify(surface_path, line_path, verify_format);
    if (report->parsed()) return run_from_construction(read_json_file(in_path), report_opts, true);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
