// Command-line front end for the fricke library.
//
// Subcommands:
//   trace        compile a word's trace polynomial, optionally evaluate it
//   minimize     solve the length minimization for a^2 b^n at one (n, boundary)
//   sweep        tabulate minimizer data over a range of n and boundary lengths
//   asymptotics  print the monotonicity table and its flags
//   validate     check points from a CSV file against the character variety
//   verify       run the built-in verification suites
//
// Exit codes: 0 success, 2 parse error (bad word, bad flag, malformed CSV),
// 3 domain error (inputs outside the mathematical domain), 4 I/O error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fricke/curve_family.hpp"
#include "fricke/minimizer.hpp"
#include "fricke/torus_geometry.hpp"
#include "fricke/trace_compiler.hpp"
#include "fricke/verify.hpp"
#include "fricke/word.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

int g_precision = 15;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", g_precision, v);
  return buf;
}

// Resolves output precision: built-in default, then the FRICKE_PRECISION
// environment variable, then an explicit --precision flag. Returns false on
// an unusable value (the caller exits with a parse error).
bool resolve_precision(int flag_value, bool flag_given) {
  int p = 15;
  if (const char* env = std::getenv("FRICKE_PRECISION")) {
    try {
      p = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: FRICKE_PRECISION is not an integer: " << env << "\n";
      return false;
    }
  }
  if (flag_given) p = flag_value;
  if (p < 6 || p > 17) {
    std::cerr << "error: precision must lie in [6, 17], got " << p << "\n";
    return false;
  }
  g_precision = p;
  return true;
}

bool parse_triple(const std::string& s, double out[3]) {
  std::istringstream is(s);
  char c1 = 0, c2 = 0;
  if (!(is >> out[0] >> c1 >> out[1] >> c2 >> out[2]) || c1 != ',' || c2 != ',')
    return false;
  std::string rest;
  return !(is >> rest);
}

int cmd_trace(const std::string& word_text, const std::string& eval_text) {
  const fricke::Word w = fricke::parse_word(word_text);
  const fricke::TracePolynomial p = fricke::trace_poly(w);
  std::cout << p.render() << "\n";
  if (!eval_text.empty()) {
    double t[3];
    if (!parse_triple(eval_text, t)) {
      std::cerr << "error: --eval expects x,y,z\n";
      return kExitParse;
    }
    std::cout << "= " << fmt_double(p.eval(t[0], t[1], t[2])) << "\n";
  }
  return 0;
}

int cmd_minimize(long long n, double boundary) {
  if (n < 3) {
    std::cerr << "error: the curve a^2 b^n fills only for n >= 3\n";
    return kExitDomain;
  }
  const fricke::MinResult m = fricke::length_min(n, boundary);
  std::cout << "{\n"
            << "  \"n\": " << m.n << ",\n"
            << "  \"L_boundary\": " << fmt_double(m.L_boundary) << ",\n"
            << "  \"L_b_star\": " << fmt_double(m.L_b_star) << ",\n"
            << "  \"n_L_b_star_over_4\": "
            << fmt_double(0.25 * static_cast<double>(m.n) * m.L_b_star) << ",\n"
            << "  \"L_min\": " << fmt_double(m.L_min) << ",\n"
            << "  \"point\": {\n"
            << "    \"L_a\": " << fmt_double(m.L_a_star) << ",\n"
            << "    \"L_b\": " << fmt_double(m.L_b_star) << ",\n"
            << "    \"L_ab\": " << fmt_double(m.L_ab_star) << "\n"
            << "  },\n"
            << "  \"residual_root\": " << fmt_double(m.residual_root) << ",\n"
            << "  \"residual_variety\": " << fmt_double(m.residual_variety) << "\n"
            << "}\n";
  return 0;
}

struct SweepJob {
  long long n;
  double boundary;
};

std::string sweep_row_csv(const SweepJob& j) {
  const fricke::MinResult m = fricke::length_min(j.n, j.boundary);
  std::ostringstream os;
  os << m.n << ',' << fmt_double(m.L_boundary) << ',' << fmt_double(m.L_b_star)
     << ',' << fmt_double(0.25 * static_cast<double>(m.n) * m.L_b_star) << ','
     << fmt_double(m.L_min) << ','
     << fmt_double(m.L_min / (4.0 * std::log(static_cast<double>(m.n)))) << ','
     << fmt_double(m.residual_root);
  return os.str();
}

std::string sweep_row_json(const SweepJob& j) {
  const fricke::MinResult m = fricke::length_min(j.n, j.boundary);
  std::ostringstream os;
  os << "  {\"n\": " << m.n << ", \"L_boundary\": " << fmt_double(m.L_boundary)
     << ", \"L_b_star\": " << fmt_double(m.L_b_star)
     << ", \"n_L_b_star_over_4\": "
     << fmt_double(0.25 * static_cast<double>(m.n) * m.L_b_star)
     << ", \"L_min\": " << fmt_double(m.L_min)
     << ", \"L_min_over_4ln_n\": "
     << fmt_double(m.L_min / (4.0 * std::log(static_cast<double>(m.n))))
     << ", \"residual_root\": " << fmt_double(m.residual_root) << "}";
  return os.str();
}

int cmd_sweep(long long n_from, long long n_to, long long n_stride,
              const std::string& boundary_list, const std::string& format,
              const std::string& output, int jobs) {
  if (n_from < 3 || n_to < n_from || n_stride < 1) {
    std::cerr << "error: need 3 <= n-from <= n-to and a positive stride\n";
    return kExitDomain;
  }
  std::vector<double> boundaries;
  {
    std::istringstream is(boundary_list);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        std::size_t used = 0;
        const double b = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        boundaries.push_back(b);
      } catch (const std::exception&) {
        std::cerr << "error: bad boundary value: " << tok << "\n";
        return kExitParse;
      }
    }
  }
  if (boundaries.empty()) {
    std::cerr << "error: --boundary needs at least one value\n";
    return kExitParse;
  }

  // Jobs are laid out sorted by (n, boundary) so the output order never
  // depends on scheduling.
  std::vector<SweepJob> work;
  for (long long n = n_from; n <= n_to; n += n_stride)
    for (const double b : boundaries) work.push_back({n, b});

  const bool csv = format == "csv";
  std::vector<std::string> rows(work.size());
  auto emit = [&](std::size_t i) {
    rows[i] = csv ? sweep_row_csv(work[i]) : sweep_row_json(work[i]);
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < work.size(); ++i) emit(i);
  } else {
    std::vector<std::future<void>> fs;
    std::atomic<std::size_t> next{0};
    for (int k = 0; k < jobs; ++k)
      fs.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) emit(i);
      }));
    for (auto& f : fs) f.get();
  }

  std::ostringstream body;
  if (csv) {
    body << "n,L_boundary,L_b_star,n_L_b_star_over_4,L_min,L_min_over_4ln_n,"
            "residual_root\n";
    for (const std::string& r : rows) body << r << "\n";
  } else {
    body << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      body << rows[i] << (i + 1 < rows.size() ? ",\n" : "\n");
    body << "]\n";
  }

  if (output.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "error: cannot open for writing: " << output << "\n";
      return kExitIo;
    }
    out << body.str();
    if (!out.flush()) {
      std::cerr << "error: write failed: " << output << "\n";
      return kExitIo;
    }
  }
  return 0;
}

int cmd_asymptotics(long long n_max, double boundary_max) {
  std::vector<long long> ns;
  for (long long n = 3; n <= n_max; n += std::max<long long>(1, n_max / 24))
    ns.push_back(n);
  if (ns.back() != n_max) ns.push_back(n_max);
  std::vector<double> bs{0.0};
  if (boundary_max > 0.0) bs.push_back(boundary_max);

  const fricke::AsymptoticsReport rep = fricke::asymptotics_report(ns, bs);
  std::printf("%8s %12s %14s %16s %14s %16s %18s\n", "n", "L_boundary",
              "L_b_star", "n_L_b_star/4", "L_min", "L_min/4ln(n)",
              "L_min - L_boundary");
  for (const fricke::AsymptoticsRow& r : rep.rows)
    std::printf("%8lld %12s %14s %16s %14s %16s %18s\n", r.n,
                fmt_double(r.L_boundary).c_str(), fmt_double(r.L_b_star).c_str(),
                fmt_double(r.n_L_b_star_over_4).c_str(), fmt_double(r.L_min).c_str(),
                fmt_double(r.L_min_over_4ln_n).c_str(),
                fmt_double(r.L_min_minus_boundary).c_str());
  std::cout << "L_b_star decreasing in n:      "
            << (rep.lb_star_decreasing_in_n ? "yes" : "NO") << "\n"
            << "n L_b_star/4 decreasing in n:  "
            << (rep.n_lb_star_over_4_decreasing_in_n ? "yes" : "NO") << "\n"
            << "L_min increasing in boundary:  "
            << (rep.lmin_increasing_in_boundary ? "yes" : "NO") << "\n";
  return 0;
}

int cmd_validate(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open: " << path << "\n";
    return kExitIo;
  }
  std::string line;
  if (!std::getline(in, line) || line != "L_a,L_b,L_ab,L_boundary") {
    std::cerr << "error: expected header L_a,L_b,L_ab,L_boundary\n";
    return kExitParse;
  }
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    double v[4];
    std::istringstream is(line);
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(is >> v[0] >> c1 >> v[1] >> c2 >> v[2] >> c3 >> v[3]) || c1 != ',' ||
        c2 != ',' || c3 != ',') {
      std::cerr << "error: malformed row at line " << lineno << "\n";
      return kExitParse;
    }
    const fricke::ValidationReport r = fricke::validate_point(v[0], v[1], v[2], v[3]);
    std::cout << "line " << lineno << ": "
              << (r.accepted ? "accepted" : "rejected")
              << " rel_residual=" << fmt_double(r.rel_residual);
    if (!r.accepted) std::cout << " (" << r.reason << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite) {
  std::vector<fricke::SuiteResult> results;
  if (suite == "all") {
    results = fricke::verify_all();
  } else if (suite == "traces") {
    results.push_back(fricke::verify_traces());
  } else if (suite == "family") {
    results.push_back(fricke::verify_family());
  } else if (suite == "geometry") {
    results.push_back(fricke::verify_geometry());
  } else if (suite == "minimize") {
    results.push_back(fricke::verify_minimize());
  } else {
    std::cerr << "error: unknown suite: " << suite
              << " (expected traces|family|geometry|minimize|all)\n";
    return kExitParse;
  }
  bool ok = true;
  for (const fricke::SuiteResult& r : results) {
    std::cout << r.name << ": " << (r.checks - r.failures) << "/" << r.checks
              << " checks passed\n";
    for (const std::string& m : r.messages) std::cout << "  failed: " << m << "\n";
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace identities and length minimization on the one-holed torus"};
  app.require_subcommand(1);

  int precision = 15;
  bool precision_given = false;
  app.add_option("--precision", precision, "significant digits for output [6, 17]")
      ->each([&](const std::string&) { precision_given = true; });

  auto* trace = app.add_subcommand("trace", "compile a word's trace polynomial");
  std::string word_text, eval_text;
  trace->add_option("word", word_text, "word in a, b, A, B with optional ^k")
      ->required();
  trace->add_option("--eval", eval_text, "evaluate at x,y,z");

  auto* minimize = app.add_subcommand("minimize", "minimize length over the fiber");
  long long min_n = 0;
  double min_boundary = 0.0;
  minimize->add_option("--n", min_n, "exponent n in a^2 b^n")->required();
  minimize->add_option("--boundary", min_boundary, "boundary length (default 0)");

  auto* sweep = app.add_subcommand("sweep", "tabulate minima over n and boundary");
  long long n_from = 0, n_to = 0, n_stride = 1;
  std::string boundary_list, format = "csv", output;
  int jobs = 1;
  sweep->add_option("--n-from", n_from)->required();
  sweep->add_option("--n-to", n_to)->required();
  sweep->add_option("--n-stride", n_stride);
  sweep->add_option("--boundary", boundary_list, "comma-separated boundary lengths")
      ->required();
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--output", output, "write to a file instead of stdout");
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));

  auto* asym = app.add_subcommand("asymptotics", "monotonicity table");
  long long n_max = 200;
  double boundary_max = 20.0;
  asym->add_option("--n-max", n_max)->check(CLI::Range(3LL, 10000000LL));
  asym->add_option("--boundary-max", boundary_max)->check(CLI::NonNegativeNumber);

  auto* validate = app.add_subcommand("validate", "check CSV points on the fiber");
  std::string csv_path;
  validate->add_option("points", csv_path, "CSV with header L_a,L_b,L_ab,L_boundary")
      ->required();

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  std::string suite = "all";
  verify->add_option("suite", suite, "traces|family|geometry|minimize|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (!resolve_precision(precision, precision_given)) return kExitParse;

  try {
    if (trace->parsed()) return cmd_trace(word_text, eval_text);
    if (minimize->parsed()) return cmd_minimize(min_n, min_boundary);
    if (sweep->parsed())
      return cmd_sweep(n_from, n_to, n_stride, boundary_list, format, output, jobs);
    if (asym->parsed()) return cmd_asymptotics(n_max, boundary_max);
    if (validate->parsed()) return cmd_validate(csv_path);
    if (verify->parsed()) return cmd_verify(suite);
  } catch (const fricke::WordParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::range_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
