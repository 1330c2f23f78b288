#include "seriate/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "seriate/closed_forms.hpp"
#include "seriate/enumeration.hpp"
#include "seriate/errors.hpp"
#include "seriate/io.hpp"
#include "seriate/permutation.hpp"

namespace seriate {

namespace {

std::string num(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

struct Pipeline {
  DataMatrix data;
  FiedlerSpace fs;
};

Pipeline run_pipeline(const RunConfig& cfg) {
  DataMatrix data = cfg.family ? make_data_matrix(*cfg.family)
                               : read_data_matrix(cfg.input_path, cfg.no_header);
  FiedlerSpace fs = fiedler_space(laplacian(similarity(data)), cfg.cluster_tol);
  return {std::move(data), std::move(fs)};
}

// Opens cfg.out_path when set; the stream reference stays valid for the
// caller's lifetime either way.
std::ostream& open_sink(const RunConfig& cfg, std::ostream& out, std::ofstream& file) {
  if (cfg.out_path.empty()) return out;
  file.open(cfg.out_path, std::ios::binary);
  if (!file) throw ParseError("cannot open output file " + cfg.out_path);
  return file;
}

void write_source_fields(const RunConfig& cfg, std::ostream& os) {
  if (cfg.family) {
    os << "  \"family\": \"" << to_string(cfg.family->family) << "\",\n";
    os << "  \"n\": " << cfg.family->n << ",\n";
    if (cfg.family->family == Family::petersen)
      os << "  \"skip\": " << cfg.family->skip << ",\n";
  } else {
    os << "  \"input\": \"" << json_escape(cfg.input_path) << "\",\n";
  }
}

void write_permutation_array(const PermutationSet& set, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  os << "[";
  bool first = true;
  for (const PermutationSet::Key& key : set.sorted_keys()) {
    os << (first ? "\n" : ",\n") << pad << "[";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) os << ',';
      os << key[i];
    }
    os << "]";
    first = false;
  }
  if (!first) os << "\n" << pad.substr(0, indent > 2 ? indent - 2 : 0);
  os << "]";
}

int cmd_seriate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Pipeline pipe = run_pipeline(cfg);
  const FiedlerSpace& fs = pipe.fs;

  std::string method = cfg.method;
  std::string warning;
  double tau_used = -1.0;  // < 0 reported as null: tolerance chosen per probe
  PermutationSet set;

  if (fs.multiplicity == 1) {
    method = "simple";
    set = seriate_simple(fs, cfg.tau);
    if (cfg.tau > 0.0) tau_used = cfg.tau;
  } else if (fs.multiplicity == 2) {
    if (method == "auto") method = "graphical";
    const Vector v = fs.basis.col(0), w = fs.basis.col(1);
    if (method == "graphical") {
      tau_used = cfg.tau < 0.0 ? default_tau(v, w) : cfg.tau;
      set = graphical_method(v, w, tau_used, kDefaultExplosionCap, cfg.threads);
    } else if (method == "montecarlo") {
      if (cfg.tau > 0.0) tau_used = cfg.tau;
      set = monte_carlo_method(fs.basis, cfg.samples, cfg.seed, cfg.tau, kDefaultExplosionCap,
                               cfg.threads);
    } else {
      set = enumerate_by_oracle(v, w);
    }
  } else {
    if (method == "graphical" || method == "oracle")
      throw UnsupportedMultiplicity("eigenspace dimension " + std::to_string(fs.multiplicity) +
                                    ", " + method + " handles dimension 2 only");
    method = "montecarlo";
    warning = "eigenspace dimension " + std::to_string(fs.multiplicity) +
              " exceeds 2; sampled orderings are a lower bound, not the complete set";
    err << "warning: " << warning << "\n";
    if (cfg.tau > 0.0) tau_used = cfg.tau;
    set = monte_carlo_method(fs.basis, cfg.samples, cfg.seed, cfg.tau, kDefaultExplosionCap,
                             cfg.threads);
  }

  std::ofstream file;
  std::ostream& os = open_sink(cfg, out, file);
  if (cfg.format == "csv") {
    if (cfg.count_only)
      os << set.size() << "\n";
    else
      set.write_lines(os);
    return 0;
  }

  os << "{\n";
  write_source_fields(cfg, os);
  os << "  \"nodes\": " << fs.basis.rows() << ",\n";
  os << "  \"fiedler_value\": " << num(fs.value) << ",\n";
  os << "  \"multiplicity\": " << fs.multiplicity << ",\n";
  os << "  \"method\": \"" << method << "\",\n";
  os << "  \"tau\": " << (tau_used < 0.0 ? "null" : num(tau_used)) << ",\n";
  os << "  \"cluster_tol\": " << num(cfg.cluster_tol) << ",\n";
  if (method == "montecarlo") {
    os << "  \"samples\": " << cfg.samples << ",\n";
    os << "  \"seed\": " << cfg.seed << ",\n";
  }
  if (!warning.empty()) os << "  \"warning\": \"" << json_escape(warning) << "\",\n";
  os << "  \"count\": " << set.size();
  if (!cfg.count_only) {
    os << ",\n  \"permutations\": ";
    write_permutation_array(set, os, 4);
  }
  os << "\n}\n";
  return 0;
}

// Probe abscissae of an arrangement: one point left of the first crossing,
// every crossing, every midpoint between neighbors, one point right of the
// last. Matches where the sweep itself reads orderings off.
std::vector<double> sample_gammas(const LineArrangement& arr) {
  std::vector<double> gs;
  gs.push_back(arr.crossings.front().gamma - 1.0);
  for (std::size_t i = 0; i < arr.crossings.size(); ++i) {
    gs.push_back(arr.crossings[i].gamma);
    if (i + 1 < arr.crossings.size())
      gs.push_back(0.5 * (arr.crossings[i].gamma + arr.crossings[i + 1].gamma));
  }
  gs.push_back(arr.crossings.back().gamma + 1.0);
  return gs;
}

void write_lines_csv(const LineArrangement& arr, std::ostream& os) {
  for (std::size_t i = 0; i < arr.v.size(); ++i)
    os << "line," << i + 1 << "," << num(arr.v[i]) << "," << num(arr.w[i]) << "\n";
  for (const auto& c : arr.crossings)
    os << "crossing," << num(c.gamma) << "," << c.multiplicity << "\n";
  for (double g : sample_gammas(arr)) {
    os << "sample," << num(g);
    for (std::size_t i = 0; i < arr.v.size(); ++i) os << "," << num(arr.v[i] + g * arr.w[i]);
    os << "\n";
  }
}

void write_lines_json(const RunConfig& cfg, const FiedlerSpace& fs, const LineArrangement& arr,
                      std::ostream& os) {
  os << "{\n";
  write_source_fields(cfg, os);
  os << "  \"nodes\": " << arr.v.size() << ",\n";
  os << "  \"fiedler_value\": " << num(fs.value) << ",\n";
  os << "  \"multiplicity\": " << fs.multiplicity << ",\n";
  os << "  \"tau\": " << num(arr.tau) << ",\n";
  os << "  \"lines\": [";
  for (std::size_t i = 0; i < arr.v.size(); ++i) {
    os << (i ? "," : "") << "\n    {\"index\": " << i + 1 << ", \"intercept\": " << num(arr.v[i])
       << ", \"slope\": " << num(arr.w[i]) << "}";
  }
  os << "\n  ],\n  \"crossings\": [";
  for (std::size_t i = 0; i < arr.crossings.size(); ++i) {
    os << (i ? "," : "") << "\n    {\"gamma\": " << num(arr.crossings[i].gamma)
       << ", \"multiplicity\": " << arr.crossings[i].multiplicity << "}";
  }
  os << "\n  ],\n  \"samples\": [";
  const std::vector<double> gs = sample_gammas(arr);
  for (std::size_t t = 0; t < gs.size(); ++t) {
    os << (t ? "," : "") << "\n    {\"gamma\": " << num(gs[t]) << ", \"values\": [";
    for (std::size_t i = 0; i < arr.v.size(); ++i)
      os << (i ? "," : "") << num(arr.v[i] + gs[t] * arr.w[i]);
    os << "]}";
  }
  os << "\n  ]\n}\n";
}

void write_lines_svg(const LineArrangement& arr, std::ostream& os) {
  static const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  const double g0 = arr.crossings.front().gamma - 1.0;
  const double g1 = arr.crossings.back().gamma + 1.0;
  double f0 = arr.v[0] + g0 * arr.w[0], f1 = f0;
  for (std::size_t i = 0; i < arr.v.size(); ++i)
    for (double g : {g0, g1}) {
      const double f = arr.v[i] + g * arr.w[i];
      f0 = std::min(f0, f);
      f1 = std::max(f1, f);
    }
  if (f1 - f0 < 1e-30) f1 = f0 + 1.0;

  const double x0 = 40, x1 = 760, y0 = 560, y1 = 40;
  auto sx = [&](double g) { return x0 + (g - g0) / (g1 - g0) * (x1 - x0); };
  auto sy = [&](double f) { return y0 + (f - f0) / (f1 - f0) * (y1 - y0); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
        "viewBox=\"0 0 800 600\">\n";
  os << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  os << "<g stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"4 3\">\n";
  for (const auto& c : arr.crossings)
    os << "  <line x1=\"" << num(sx(c.gamma)) << "\" y1=\"" << y1 << "\" x2=\""
       << num(sx(c.gamma)) << "\" y2=\"" << y0 << "\"/>\n";
  os << "</g>\n<g fill=\"#444\">\n";
  for (std::size_t i = 0; i + 1 < arr.crossings.size(); ++i) {
    const double mid = 0.5 * (arr.crossings[i].gamma + arr.crossings[i + 1].gamma);
    os << "  <circle cx=\"" << num(sx(mid)) << "\" cy=\"" << y0 << "\" r=\"3\"/>\n";
  }
  os << "</g>\n<g stroke-width=\"1.5\" fill=\"none\">\n";
  for (std::size_t i = 0; i < arr.v.size(); ++i) {
    const char* color = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
    os << "  <line x1=\"" << num(sx(g0)) << "\" y1=\"" << num(sy(arr.v[i] + g0 * arr.w[i]))
       << "\" x2=\"" << num(sx(g1)) << "\" y2=\"" << num(sy(arr.v[i] + g1 * arr.w[i]))
       << "\" stroke=\"" << color << "\"/>\n";
  }
  os << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < arr.v.size(); ++i)
    os << "  <text x=\"" << x1 + 5 << "\" y=\"" << num(sy(arr.v[i] + g1 * arr.w[i]) + 4)
       << "\">" << i + 1 << "</text>\n";
  os << "</g>\n</svg>\n";
}

int cmd_lines(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Pipeline pipe = run_pipeline(cfg);
  const FiedlerSpace& fs = pipe.fs;
  if (fs.multiplicity != 2)
    throw UnsupportedMultiplicity("line arrangement needs eigenspace dimension 2, got " +
                                  std::to_string(fs.multiplicity));
  const LineArrangement arr = build_line_arrangement(fs.basis.col(0), fs.basis.col(1), cfg.tau);

  std::ofstream file;
  std::ostream& os = open_sink(cfg, out, file);
  if (cfg.format == "csv")
    write_lines_csv(arr, os);
  else if (cfg.format == "json")
    write_lines_json(cfg, fs, arr, os);
  else
    write_lines_svg(arr, os);
  return 0;
}

struct BenchRow {
  Family family;
  int n;
  bool extended_only;
  std::uint64_t expected;
};

std::vector<BenchRow> bench_rows(const RunConfig& cfg) {
  std::vector<BenchRow> rows;
  auto add = [&](Family f, int n, bool ext, std::uint64_t expected) {
    if (cfg.family && cfg.family->family != f) return;
    if (cfg.size_filter > 0 && cfg.size_filter != n) return;
    if (ext && !cfg.extended) return;
    rows.push_back({f, n, ext, expected});
  };
  for (int n = 5; n <= 10; ++n)
    add(Family::modified_star, n, false,
        closed_form_count(Family::modified_star, n)->value.convert_to<std::uint64_t>());
  for (int n = 4; n <= 10; ++n) add(Family::cycle, n, false, *known_cycle_count(n));
  for (int n = 5; n <= 9; ++n) add(Family::petersen, n, n == 9, *known_petersen_count(n));
  return rows;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::ofstream file;
  std::ostream& os = open_sink(cfg, out, file);

  char buf[160];
  std::snprintf(buf, sizeof buf, "%-14s %3s %12s %12s %-6s %9s%s\n", "family", "n", "found",
                "expected", "result", "seconds", cfg.with_mc ? "   mc_found" : "");
  os << buf;

  int failures = 0;
  const std::vector<BenchRow> rows = bench_rows(cfg);
  for (const BenchRow& row : rows) {
    GraphFamilySpec spec{row.family, row.n, 1};
    const auto t0 = std::chrono::steady_clock::now();
    const FiedlerSpace fs =
        fiedler_space(laplacian(similarity(make_data_matrix(spec))), cfg.cluster_tol);
    const PermutationSet found =
        graphical_method(fs, cfg.tau, kDefaultExplosionCap, cfg.threads);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const bool pass = found.size() == row.expected;
    if (!pass) ++failures;
    std::string mc_col;
    if (cfg.with_mc) {
      const PermutationSet mc = monte_carlo_method(fs.basis, cfg.samples, cfg.seed, cfg.tau,
                                                   kDefaultExplosionCap, cfg.threads);
      mc_col = "   " + std::to_string(mc.size());
    }
    std::snprintf(buf, sizeof buf, "%-14s %3d %12zu %12llu %-6s %9.3f%s\n",
                  to_string(row.family).c_str(), row.n, found.size(),
                  static_cast<unsigned long long>(row.expected), pass ? "PASS" : "FAIL", secs,
                  mc_col.c_str());
    os << buf;
  }
  os << rows.size() - failures << "/" << rows.size() << " rows passed\n";
  return failures ? 5 : 0;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "seriate") return cmd_seriate(cfg, out, err);
  if (cfg.command == "lines") return cmd_lines(cfg, out, err);
  return cmd_bench(cfg, out, err);
}

int exit_code_for(const seriate::Error& e) {
  if (dynamic_cast<const DisconnectedGraph*>(&e)) return 2;
  if (dynamic_cast<const ExplosionGuard*>(&e)) return 3;
  if (dynamic_cast<const TooLarge*>(&e)) return 3;
  if (dynamic_cast<const UnsupportedMultiplicity*>(&e)) return 4;
  if (dynamic_cast<const MultipleFiedler*>(&e)) return 4;
  return 1;
}

void add_source_flags(CLI::App* sub, std::string& family_name, int& n, int& skip,
                      RunConfig& cfg) {
  sub->add_option("--family", family_name, "bundled graph family")
      ->check(CLI::IsMember({"star", "modified_star", "cycle", "petersen"}));
  sub->add_option("--n", n, "family size parameter");
  sub->add_option("--skip", skip, "inner connection step for petersen")->check(CLI::PositiveNumber);
  sub->add_option("--input", cfg.input_path, "data matrix file, CSV or MatrixMarket");
  sub->add_flag("--no-header", cfg.no_header, "read the first CSV line as data");
}

void add_numeric_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--tau", cfg.tau, "intersection merge tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--cluster-tol", cfg.cluster_tol, "eigenvalue cluster tolerance")
      ->check(CLI::PositiveNumber);
}

// Builds the family spec or checks the input path, after CLI11 parsing.
// For bench the family and n are optional row filters instead of a source.
void resolve_source(const std::string& family_name, int n, int skip, bool required,
                    RunConfig& cfg) {
  if (!required) {
    cfg.size_filter = n;
    if (!family_name.empty()) cfg.family = GraphFamilySpec{*family_from_string(family_name), 0, 1};
    return;
  }
  if (!family_name.empty() && !cfg.input_path.empty())
    throw BadParameter("--family and --input are mutually exclusive");
  if (family_name.empty()) {
    if (cfg.input_path.empty()) throw BadParameter("need --family or --input");
    if (n > 0) throw BadParameter("--n needs --family");
    return;
  }
  if (n <= 0) throw BadParameter("--family needs --n");
  GraphFamilySpec spec;
  spec.family = *family_from_string(family_name);
  spec.n = n;
  spec.skip = skip;
  spec.validate();
  cfg.family = spec;
}

}  // namespace

int threads_from_env() {
  if (const char* s = std::getenv("SERIATE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 256) return static_cast<int>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(std::min(hc, 8u)) : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.threads = threads_from_env();
  std::string family_name;
  int n = 0, skip = 1;

  CLI::App app{"Spectral seriation: admissible orderings under a double Fiedler value"};
  app.require_subcommand(1);

  CLI::App* ser = app.add_subcommand("seriate", "enumerate admissible orderings");
  add_source_flags(ser, family_name, n, skip, cfg);
  add_numeric_flags(ser, cfg);
  ser->add_option("--method", cfg.method, "auto, graphical, montecarlo, or oracle")
      ->check(CLI::IsMember({"auto", "graphical", "montecarlo", "oracle"}));
  ser->add_option("--samples", cfg.samples, "random directions for montecarlo")
      ->check(CLI::PositiveNumber);
  ser->add_option("--seed", cfg.seed, "random seed for montecarlo");
  ser->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  ser->add_option("--out", cfg.out_path, "output file, default stdout");
  ser->add_flag("--count-only", cfg.count_only, "emit the count, not the permutations");

  CLI::App* lin = app.add_subcommand("lines", "export the line arrangement");
  add_source_flags(lin, family_name, n, skip, cfg);
  add_numeric_flags(lin, cfg);
  lin->add_option("--format", cfg.format, "csv, json, or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  lin->add_option("--out", cfg.out_path, "output file, default stdout");

  CLI::App* ben = app.add_subcommand("bench", "reproduce the reference counts");
  ben->add_option("--family", family_name, "restrict rows to one family")
      ->check(CLI::IsMember({"modified_star", "cycle", "petersen"}));
  ben->add_option("--n", n, "restrict rows to one size");
  add_numeric_flags(ben, cfg);
  ben->add_flag("--extended", cfg.extended, "include the long petersen n=9 row");
  ben->add_flag("--mc", cfg.with_mc, "also report the sampled count per row");
  ben->add_option("--samples", cfg.samples, "random directions for --mc")
      ->check(CLI::PositiveNumber);
  ben->add_option("--seed", cfg.seed, "random seed for --mc");
  ben->add_option("--out", cfg.out_path, "output file, default stdout");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    resolve_source(family_name, n, skip, cfg.command != "bench", cfg);
    return dispatch(cfg, out, err);
  } catch (const seriate::Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace seriate
