#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "disclab/claims.hpp"
#include "disclab/constructions.hpp"
#include "disclab/csv.hpp"
#include "disclab/detlb.hpp"
#include "disclab/disc.hpp"
#include "disclab/error.hpp"
#include "disclab/json_io.hpp"
#include "disclab/rng.hpp"
#include "disclab/vcdim.hpp"
#include "disclab/vollb.hpp"

namespace disclab::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct Options {
  std::optional<unsigned> threads;

  // construct
  std::string family;
  std::optional<unsigned> k;
  std::optional<unsigned> N;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> m;
  std::optional<double> eps;
  std::string base = "haar";
  std::string out_path;

  // solve
  std::string kind;
  std::string input;
  std::string norm = "inf";
  std::optional<double> p;
  std::string strategy = "auto";
  std::optional<std::size_t> max_k;
  std::uint64_t samples = 100'000;
  std::optional<std::uint64_t> seed;

  // verify
  std::string suite;
  unsigned verify_max_k = 2;

  // experiment
  std::string experiment;
  std::uint64_t trials = 1000;
  std::uint64_t count = 100;
  std::size_t rows = 4;
  std::size_t cols = 4;
};

Limits load_limits(const Options& o) {
  Limits limits;
  if (const char* path = std::getenv("DISCLAB_CONFIG"); path && *path) apply_config_file(limits, path);
  if (o.threads) limits.threads = *o.threads;
  return limits;
}

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw Error(ErrorKind::InvalidArgument, std::string("missing ") + flag);
  return *v;
}

Family parse_base(const std::string& s) {
  if (s == "haar") return Family::Haar;
  if (s == "haar-pm") return Family::HaarPm;
  throw Error(ErrorKind::InvalidArgument, "unknown base family " + s);
}

IntMatrix build_family(const Options& o, const Limits& limits) {
  const auto& f = o.family;
  if (f == "haar") return haar(need(o.k, "--k"), limits);
  if (f == "haar-tilde") return haar_tilde(need(o.k, "--k"), limits);
  if (f == "haar-pos") return haar_pos(need(o.k, "--k"), limits);
  if (f == "haar-neg") return haar_neg(need(o.k, "--k"), limits);
  if (f == "haar-pm") return haar_pm(need(o.k, "--k"), limits);
  if (f == "power") return power_matrix(need(o.N, "--N"), limits);
  if (f == "hadamard01") return hadamard01(need(o.n, "--n"), limits);
  if (f == "kron") return build_kron_instance(need(o.N, "--N"), need(o.k, "--k"), parse_base(o.base), limits);
  throw Error(ErrorKind::InvalidArgument, "unknown family " + f);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  f << text;
  if (!f) throw Error(ErrorKind::InvalidArgument, "failed writing " + path);
}

int cmd_construct(const Options& o, std::ostream& out) {
  const Limits limits = load_limits(o);
  if (o.family == "gap") {
    if (o.out_path.empty()) throw Error(ErrorKind::InvalidArgument, "--out is required for the gap family");
    const auto g = build_gap_instance(need(o.m, "--m"), need(o.n, "--n"), need(o.eps, "--eps"), limits);
    write_csv_file(g.matrix, o.out_path);
    write_text(o.out_path + ".json", to_json(g).dump(2) + "\n");
    return kOk;
  }
  const IntMatrix m = build_family(o, limits);
  if (o.out_path.empty())
    out << to_csv(m);
  else
    write_csv_file(m, o.out_path);
  return kOk;
}

Json solve_params(const Options& o) {
  Json p{{"kind", o.kind}, {"input", o.input}};
  if (o.kind == "disc") {
    p["norm"] = o.norm;
    if (o.p) p["p"] = *o.p;
    p["strategy"] = o.strategy;
  }
  if (o.kind == "detlb" || o.kind == "vollb") p["max_k"] = o.max_k ? Json(*o.max_k) : Json(nullptr);
  if (o.kind == "vollb") p["samples"] = o.samples;
  if (o.threads) p["threads"] = *o.threads;
  return p;
}

Norm parse_norm(const Options& o) {
  if (o.norm == "inf") return Norm::inf();
  if (o.norm == "one") return Norm::one();
  if (o.norm == "p") return Norm::lp(need(o.p, "--p"));
  throw Error(ErrorKind::InvalidArgument, "unknown norm " + o.norm);
}

DiscStrategy parse_strategy(const std::string& s) {
  if (s == "auto") return DiscStrategy::Auto;
  if (s == "gray") return DiscStrategy::GrayCode;
  if (s == "bnb") return DiscStrategy::BranchAndBound;
  throw Error(ErrorKind::InvalidArgument, "unknown strategy " + s);
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Limits limits = load_limits(o);
  const auto start = std::chrono::steady_clock::now();
  const IntMatrix a = read_csv_file(o.input);
  Json result;
  int code = kOk;
  if (o.kind == "disc") {
    result = to_json(disc_exact(a, parse_norm(o), limits, parse_strategy(o.strategy)));
  } else if (o.kind == "herdisc") {
    result = to_json(herdisc_exact(a, limits));
  } else if (o.kind == "detlb") {
    const auto c = detlb_exact(a, o.max_k, limits);
    result = to_json(c);
    if (c.partial) code = kResource;
  } else if (o.kind == "tum") {
    result = to_json(is_tum(a, limits));
  } else if (o.kind == "vcdim") {
    result = to_json(vc_dimension(a, limits));
  } else if (o.kind == "vollb") {
    const auto seed = need(o.seed, "--seed");
    result = to_json(vollb_estimate(a, o.max_k.value_or(3), o.samples, seed, limits));
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown solve kind " + o.kind);
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Json env{{"command", "solve"},
           {"params", solve_params(o)},
           {"result", std::move(result)},
           {"seed", o.seed ? Json(*o.seed) : Json(nullptr)},
           {"tool_version", DISCLAB_VERSION},
           {"wall_time_ms", std::round(ms * 1000.0) / 1000.0}};
  out << env.dump(2) << "\n";
  return code;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.suite != "paper-claims") throw Error(ErrorKind::InvalidArgument, "unknown suite " + o.suite);
  const Limits limits = load_limits(o);
  const auto report = run_claims_suite(o.verify_max_k, need(o.seed, "--seed"), limits);
  out << format_report(report);
  return report.all_pass() ? kOk : kVerifyFailed;
}

std::string csv_double(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

int cmd_experiment(const Options& o, std::ostream& out, std::ostream& err) {
  const Limits limits = load_limits(o);
  const auto seed = need(o.seed, "--seed");
  if (o.experiment == "random-coloring") {
    const IntMatrix a = !o.input.empty() ? read_csv_file(o.input) : build_family(o, limits);
    const auto s = random_coloring_stats(a, o.trials, seed, limits);
    out << "m,n,d,mean,max,stddev,normalized_ratio\n";
    out << a.rows() << ',' << a.cols() << ',' << (s.d ? std::to_string(*s.d) : "") << ',' << csv_double(s.mean) << ','
        << to_string(s.max) << ',' << csv_double(s.stddev) << ','
        << (s.normalized_ratio ? csv_double(*s.normalized_ratio) : "") << "\n";
    if (s.constant_input) err << "note: input matrix is constant\n";
    return kOk;
  }
  if (o.experiment == "ratio-scan") {
    if (o.rows < 1 || o.rows > 12 || o.cols < 1 || o.cols > 8) {
      throw Error(ErrorKind::InvalidArgument, "ratio-scan needs 1 <= m <= 12 and 1 <= n <= 8");
    }
    out << "m,n,herdisc,detlb,ratio,ratio_over_sqrt_n\n";
    double worst = 0.0;
    std::uint64_t violations = 0;
    for (std::uint64_t i = 0; i < o.count; ++i) {
      KeyedRng rng{seed, i};
      std::vector<BigInt> data(o.rows * o.cols);
      for (auto& v : data) v = static_cast<long>(rng.next() & 1u);
      const IntMatrix a(o.rows, o.cols, std::move(data));
      const auto r = lsv_check(a, limits);
      if (!r.holds) ++violations;
      const double h = r.herdisc.get_d();
      const double d = r.detlb.value_float;
      const double ratio = d > 0 ? h / d : 0.0;
      const double scaled = ratio / std::sqrt(static_cast<double>(o.cols));
      worst = std::max(worst, scaled);
      out << o.rows << ',' << o.cols << ',' << to_string(r.herdisc) << ',' << csv_double(d) << ',' << csv_double(ratio)
          << ',' << csv_double(scaled) << "\n";
    }
    err << "max ratio_over_sqrt_n " << csv_double(worst) << "\n";
    if (violations > 0) {
      err << violations << " instances violate detlb <= 2 herdisc\n";
      return kVerifyFailed;
    }
    return kOk;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown experiment " + o.experiment);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact discrepancy toolkit", "disclab"};
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "Worker threads for module parallelism")->check(CLI::Range(1u, 256u));
  app.set_version_flag("--version", std::string(DISCLAB_VERSION));

  auto* construct = app.add_subcommand("construct", "Write a matrix family as CSV");
  construct->add_option("--family", o.family, "haar|haar-tilde|haar-pos|haar-neg|haar-pm|power|hadamard01|kron|gap")
      ->required();
  construct->add_option("--k", o.k, "Haar depth");
  construct->add_option("--N", o.N, "Power-set size");
  construct->add_option("--n", o.n, "Columns (gap) or Hadamard order");
  construct->add_option("--m", o.m, "Rows (gap)");
  construct->add_option("--eps", o.eps, "Gap exponent in (0, 1)");
  construct->add_option("--base", o.base, "Kronecker base family: haar|haar-pm");
  construct->add_option("--out", o.out_path, "Output CSV path (stdout if omitted; required for gap)");

  auto* solve = app.add_subcommand("solve", "Compute a quantity for a CSV matrix");
  solve->add_option("kind", o.kind, "disc|herdisc|detlb|tum|vcdim|vollb")->required();
  solve->add_option("input,--input", o.input, "Matrix CSV")->required();
  solve->add_option("--norm", o.norm, "inf|one|p");
  solve->add_option("--p", o.p, "Exponent for --norm p");
  solve->add_option("--strategy", o.strategy, "auto|gray|bnb");
  solve->add_option("--max-k", o.max_k, "Largest submatrix order / subset size");
  solve->add_option("--samples", o.samples, "Monte-Carlo samples per subset");
  solve->add_option("--seed", o.seed, "Seed for randomized kinds");

  auto* verify = app.add_subcommand("verify", "Run the claims suite");
  verify->add_option("--suite", o.suite, "Suite name (paper-claims)")->required();
  verify->add_option("--max-k", o.verify_max_k, "Largest k for exhaustive rows (1..3)")->check(CLI::Range(1u, 3u));
  verify->add_option("--seed", o.seed, "Seed for randomized rows")->required();

  auto* experiment = app.add_subcommand("experiment", "Seeded experiments with CSV output");
  experiment->add_option("name", o.experiment, "random-coloring|ratio-scan")->required();
  experiment->add_option("--input", o.input, "Matrix CSV (random-coloring)");
  experiment->add_option("--family", o.family, "Family to construct instead of --input");
  experiment->add_option("--k", o.k, "Haar depth");
  experiment->add_option("--N", o.N, "Power-set size");
  experiment->add_option("--n", o.n, "Hadamard order");
  experiment->add_option("--base", o.base, "Kronecker base family");
  experiment->add_option("--trials", o.trials, "Random colourings")->check(CLI::PositiveNumber);
  experiment->add_option("--count", o.count, "Random instances (ratio-scan)");
  experiment->add_option("--rows", o.rows, "Rows per instance (ratio-scan)");
  experiment->add_option("--cols", o.cols, "Columns per instance (ratio-scan)");
  experiment->add_option("--seed", o.seed, "Seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << DISCLAB_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (experiment->parsed()) return cmd_experiment(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_resource_error(e.kind()) ? kResource : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace disclab::cli
