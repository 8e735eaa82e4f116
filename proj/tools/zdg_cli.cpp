// zdg: build, analyze, and check the zero-divisor graph of
// F_p[u,v]/(u^2, v^2, uv - vu).
//
//   zdg generate -p 3 --format dot --out g.dot
//   zdg analyze  -p 5
//   zdg verify   -p 3 --strict
//   zdg sweep    --primes 3,5,7
//   zdg spectra  -p 3 --matrix laplacian --format json

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "zdg/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitStrict = 3;

constexpr std::int64_t kDefaultMaxP = 31;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::int64_t prime = 0;
  std::vector<std::int64_t> primes;
  std::string format;
  std::string out;
  std::optional<double> tolerance;
  std::uint64_t budget = zdg::kDefaultNodeBudget;
  bool strict = false;
  std::optional<std::int64_t> max_p;
  std::string matrix = "adjacency";

  std::int64_t guard() const { return max_p.value_or(kDefaultMaxP); }

  zdg::OracleOptions oracle_options() const {
    return {zdg::SearchBudget{budget}, tolerance, guard()};
  }
};

zdg::OddPrime checked_prime(std::int64_t p, const RunConfig &cfg) {
  if (p <= 0)
    throw UsageError("a prime is required (-p)");
  std::optional<zdg::OddPrime> out;
  try {
    out.emplace(p);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  if (p > cfg.guard())
    throw zdg::ResourceError("p = " + std::to_string(p) + " exceeds --max-p " +
                             std::to_string(cfg.guard()));
  return *out;
}

void print_memory_estimate(std::int64_t p) {
  const double n = double(p * p * p - 1);
  // bit rows + int32 distances + two dense double matrices alive at once
  const double bytes = n * n * (1.0 / 8 + 4 + 16);
  std::cerr << "zdg: p = " << p << " gives " << static_cast<std::int64_t>(n)
            << " vertices; estimated peak memory " << bytes / (1024.0 * 1024.0) << " MiB\n";
}

/// Writes to --out when given, else stdout.
class Output {
public:
  explicit Output(const std::string &path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw zdg::ResourceError("cannot open " + path + " for writing");
    }
  }
  std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream())
      throw zdg::ResourceError("write failed");
  }

private:
  std::ofstream file_;
};

void cmd_generate(const RunConfig &cfg) {
  const auto p = checked_prime(cfg.prime, cfg);
  const auto zdg = zdg::build_zero_divisor_graph(p, cfg.guard());
  Output out(cfg.out);
  if (cfg.format == "dot")
    zdg::write_dot(out.stream(), zdg);
  else
    zdg::write_edge_list(out.stream(), zdg.graph);
  out.finish();
}

void cmd_analyze(const RunConfig &cfg) {
  const auto p = checked_prime(cfg.prime, cfg);
  const auto ctx = zdg::build_oracle(p, cfg.oracle_options());
  const auto json = zdg::analysis_json(ctx);
  Output out(cfg.out);
  if (cfg.format == "text") {
    for (const auto &[key, value] : json.items())
      if (!value.is_structured())
        out.stream() << key << ": " << value.dump() << '\n';
  } else {
    out.stream() << json.dump(2) << '\n';
  }
  out.finish();
}

int cmd_verify(const RunConfig &cfg) {
  const auto p = checked_prime(cfg.prime, cfg);
  const auto report = zdg::verify_all(p, cfg.oracle_options());
  Output out(cfg.out);
  if (cfg.format == "text") {
    for (const auto &r : report.results)
      out.stream() << r.id << ' ' << zdg::status_name(r.status) << '\n';
  } else {
    out.stream() << zdg::report_json(report).dump(2) << '\n';
  }
  out.finish();
  if (cfg.strict && report.count(zdg::ClaimStatus::Mismatch) > 0)
    return kExitStrict;
  return kExitOk;
}

int cmd_sweep(const RunConfig &cfg) {
  if (cfg.primes.empty())
    throw UsageError("--primes needs at least one prime");
  std::vector<zdg::OddPrime> primes;
  for (auto p : cfg.primes)
    primes.push_back(checked_prime(p, cfg));
  Output out(cfg.out);
  zdg::write_sweep_header(out.stream());
  bool mismatch = false;
  for (auto p : primes) {
    const auto ctx = zdg::build_oracle(p, cfg.oracle_options());
    const auto report = zdg::verify_all(ctx);
    mismatch |= report.count(zdg::ClaimStatus::Mismatch) > 0;
    zdg::write_sweep_row(out.stream(), ctx, report);
  }
  out.finish();
  return cfg.strict && mismatch ? kExitStrict : kExitOk;
}

void cmd_spectra(const RunConfig &cfg) {
  const auto p = checked_prime(cfg.prime, cfg);
  const auto zdg = zdg::build_zero_divisor_graph(p, cfg.guard());
  zdg::DenseMatrix<double> m;
  if (cfg.matrix == "laplacian")
    m = zdg::laplacian_matrix(zdg.graph);
  else if (cfg.matrix == "eccentricity")
    m = zdg::eccentricity_matrix(zdg.graph);
  else
    m = zdg::adjacency_matrix(zdg.graph);
  Output out(cfg.out);
  if (cfg.format == "text") {
    zdg::write_matrix_text(out.stream(), m);
  } else {
    const auto s = zdg::symmetric_eigenvalues(m, cfg.tolerance);
    zdg::Json j = {{"p", p.value()},
                   {"matrix_kind", cfg.matrix},
                   {"matrix", zdg::matrix_json(m)},
                   {"tolerance", s.tolerance},
                   {"spectrum", zdg::spectrum_json(s)}};
    out.stream() << j.dump() << '\n';
  }
  out.finish();
}

std::string sweep_footer() {
  std::ostringstream os;
  os << "CSV columns, in order:";
  for (const auto &c : zdg::sweep_columns())
    os << "\n  " << c;
  return os.str();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Zero-divisor graph of F_p[u,v]/(u^2, v^2, uv - vu): construction, "
               "invariants, spectra, and closed-form checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App *sub, bool single_prime) {
    if (single_prime)
      sub->add_option("-p,--prime", cfg.prime, "odd prime p")->required();
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--max-p", cfg.max_p, "raise the prime guard (default 31)");
  };
  auto searches = [&cfg](CLI::App *sub) {
    sub->add_option("--tol", cfg.tolerance, "absolute eigenvalue clustering tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget, "node budget for clique/colouring search")
        ->check(CLI::PositiveNumber);
  };

  auto *generate = app.add_subcommand("generate", "write the graph as an edge list or DOT");
  common(generate, true);
  generate->add_option("--format", cfg.format, "edgelist | dot")
      ->check(CLI::IsMember({"edgelist", "dot"}));

  auto *analyze = app.add_subcommand("analyze", "invariants, indices, and spectra as JSON");
  common(analyze, true);
  searches(analyze);
  analyze->add_option("--format", cfg.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  auto *verify = app.add_subcommand("verify", "compare closed-form claims with computed values");
  common(verify, true);
  searches(verify);
  verify->add_option("--format", cfg.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--strict", cfg.strict, "exit 3 when any claim mismatches");

  auto *sweep = app.add_subcommand("sweep", "one CSV row per prime");
  common(sweep, false);
  searches(sweep);
  sweep->add_option("--primes", cfg.primes, "comma-separated primes")
      ->delimiter(',')
      ->required();
  sweep->add_option("--format", cfg.format, "csv")->check(CLI::IsMember({"csv"}));
  sweep->add_flag("--strict", cfg.strict, "exit 3 when any claim mismatches");
  sweep->footer(sweep_footer());

  auto *spectra = app.add_subcommand("spectra", "export a graph matrix and its spectrum");
  common(spectra, true);
  spectra->add_option("--tol", cfg.tolerance, "absolute eigenvalue clustering tolerance")
      ->check(CLI::PositiveNumber);
  spectra->add_option("--matrix", cfg.matrix, "adjacency | laplacian | eccentricity")
      ->check(CLI::IsMember({"adjacency", "laplacian", "eccentricity"}));
  spectra->add_option("--format", cfg.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cfg.max_p) {
      const std::int64_t largest =
          cfg.primes.empty() ? cfg.prime : *std::ranges::max_element(cfg.primes);
      print_memory_estimate(largest);
    }
    if (generate->parsed()) {
      cmd_generate(cfg);
    } else if (analyze->parsed()) {
      cmd_analyze(cfg);
    } else if (verify->parsed()) {
      return cmd_verify(cfg);
    } else if (sweep->parsed()) {
      return cmd_sweep(cfg);
    } else if (spectra->parsed()) {
      cmd_spectra(cfg);
    }
  } catch (const UsageError &e) {
    std::cerr << "zdg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const zdg::ResourceError &e) {
    std::cerr << "zdg: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception &e) {
    std::cerr << "zdg: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitOk;
}
