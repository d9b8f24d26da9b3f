#include "seqeff/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "seqeff/auditor.hpp"
#include "seqeff/errors.hpp"
#include "seqeff/io.hpp"
#include "seqeff/spectral.hpp"

namespace seqeff {

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kNumerical = 3 };

std::uint64_t parse_seed(const std::string& s, const std::string& source) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || s.front() == '-') throw ConfigError(source + " is not a seed: '" + s + "'");
  return v;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SEQPROD_SEED"); env != nullptr && *env != '\0') {
    return parse_seed(env, "SEQPROD_SEED");
  }
  return 42;
}

std::string sci(double x) {
  if (!std::isfinite(x)) return "inf";
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << x;
  return s.str();
}

std::string row_product(const AuditRow& r) {
  std::string p = r.product.descriptor();
  if (r.iso) p += " [" + to_string(*r.iso) + "]";
  return p;
}

void print_table(std::ostream& out, const AuditReport& report) {
  out << std::left << std::setw(20) << "law" << std::setw(24) << "product" << std::setw(22) << "algebra"
      << std::setw(8) << "trials" << std::setw(8) << "expect" << std::setw(9) << "verdict" << std::setw(12)
      << "max_resid" << "ok\n";
  int ok = 0;
  for (const auto& e : report.entries) {
    const bool good = e.as_expected();
    ok += good ? 1 : 0;
    out << std::left << std::setw(20) << to_string(e.row.law) << std::setw(24) << row_product(e.row) << std::setw(22)
        << e.row.algebra.shorthand() << std::setw(8) << e.trials_run << std::setw(8) << to_string(e.row.expect)
        << std::setw(9) << to_string(e.verdict) << std::setw(12) << sci(e.max_residual) << (good ? "yes" : "NO")
        << '\n';
  }
  out << report.entries.size() << " rows, " << ok << " as declared, status " << (report.passed() ? "pass" : "fail")
      << '\n';
}

std::string spectrum(const Element& e) {
  std::ostringstream s;
  s << '[';
  const auto ev = eigenvalues(e);
  for (std::size_t i = 0; i < ev.size(); ++i) s << (i ? ", " : "") << std::setprecision(6) << ev[i];
  s << ']';
  return s.str();
}

void print_witnesses(std::ostream& out, const AuditReport& report) {
  for (const auto& e : report.entries) {
    if (!e.witness) continue;
    const Witness& w = *e.witness;
    out << "\nwitness " << to_string(e.row.law) << " | " << row_product(e.row) << " | " << e.row.algebra.shorthand()
        << '\n';
    out << "  holds: " << law_statement(e.row.law) << '\n';
    out << "  trial " << w.trial << ", trial seed " << w.trial_seed << ", residual " << sci(w.residual) << " (tol "
        << sci(e.row.tol) << ")\n";
    if (w.inputs.iso) {
      out << "  iso " << to_string(w.inputs.iso->kind) << " seed " << w.inputs.iso->seed << '\n';
    }
    for (const auto& [name, x] : w.inputs.elements) out << "  " << name << " spectrum " << spectrum(x) << '\n';
    out << "  replayed residual " << sci(replay_witness(e.row, w)) << '\n';
  }
}

// Setup errors win over numerical ones, which win over mismatches.
int report_exit(const AuditReport& report, std::ostream& err) {
  const AuditEntry* setup = nullptr;
  const AuditEntry* trial = nullptr;
  for (const auto& e : report.entries) {
    if (e.error_kind == ErrorKind::setup && !setup) setup = &e;
    if (e.error_kind == ErrorKind::trial && !trial) trial = &e;
  }
  const AuditEntry* first = setup ? setup : trial;
  if (first) {
    err << "error: " << to_string(first->row.law) << " " << first->row.product.descriptor() << " "
        << first->row.algebra.shorthand() << ": " << first->error << '\n';
    return setup ? kUsage : kNumerical;
  }
  return report.passed() ? kOk : kMismatch;
}

std::vector<LawId> parse_laws(const std::string& spec) {
  if (spec == "all") return all_laws();
  std::vector<LawId> laws;
  std::stringstream s(spec);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (!item.empty()) laws.push_back(law_from_string(item));
  }
  if (laws.empty()) throw ConfigError("--laws names no law");
  return laws;
}

struct AuditOptions {
  std::string config;
  std::string out;
  std::string seed;
  std::string algebra;
  std::string product = "standard";
  std::string laws = "all";
  std::optional<int> trials;
  std::optional<double> tol;
  std::string iso;
  bool serial = false;
  bool default_suite = false;
};

int cmd_audit(const AuditOptions& o, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = o.seed.empty() ? default_seed() : parse_seed(o.seed, "--seed");
  SuiteConfig config;
  if (o.default_suite) {
    config = SuiteConfig::default_suite(seed);
  } else if (!o.config.empty()) {
    io::json j = io::read_json_file(o.config);
    if (!o.seed.empty() || !j.contains("seed")) {
      if (!j.is_object()) throw ConfigError("config must be a JSON object");
      j["seed"] = seed;
    }
    config = io::config_from_json(j);
  } else {
    if (o.algebra.empty()) throw ConfigError("audit needs --config, --algebra or --default-suite");
    const AlgebraDescriptor alg = io::parse_algebra(o.algebra);
    const SequentialProduct product = SequentialProduct::parse(o.product);
    product.require_supported(alg);
    config.seed = seed;
    for (LawId law : parse_laws(o.laws)) {
      AuditRow row = default_row(law, product, alg, seed);
      if (o.trials) row.trials = *o.trials;
      if (!o.iso.empty() && law == LawId::INVARIANCE) row.iso = iso_kind_from_string(o.iso);
      config.rows.push_back(row);
    }
  }
  if (o.tol) {
    for (auto& r : config.rows) r.tol = *o.tol;
  }
  const AuditReport report = run_full_suite(config, o.serial ? Execution::serial : Execution::parallel);
  print_table(out, report);
  if (!o.out.empty()) io::write_json_file(o.out, io::report_to_json(report));
  return report_exit(report, err);
}

int cmd_demo(const std::string& seed_text, const std::string& out_path, bool serial, std::ostream& out,
             std::ostream& err) {
  const std::uint64_t seed = seed_text.empty() ? default_seed() : parse_seed(seed_text, "--seed");
  const AuditReport report =
      run_full_suite(SuiteConfig::characterization_demos(seed), serial ? Execution::serial : Execution::parallel);
  print_table(out, report);
  print_witnesses(out, report);
  if (!out_path.empty()) io::write_json_file(out_path, io::report_to_json(report));
  return report_exit(report, err);
}

int cmd_decompose(const std::string& in_path, double gap, const std::string& out_path, std::ostream& out) {
  const Element a = io::element_from_json(io::read_json_file(in_path));
  const SpectralDecomposition sd = spectral_decompose(a, gap);
  const Element one = Element::identity(a.algebra());
  out << "algebra " << a.algebra().shorthand() << '\n';
  out << sd.pairs().size() << (sd.pairs().size() == 1 ? " pair\n" : " pairs\n");
  for (const auto& p : sd.pairs()) {
    out << "  eigenvalue " << std::setprecision(17) << p.eigenvalue << "  rank "
        << std::lround(trace_inner_product(p.idempotent, one)) << '\n';
  }
  const Element r = sd.reconstruct();
  out << "reconstruction residual " << sci(rel_residual(r, a)) << '\n';
  if (!out_path.empty()) io::write_json_file(out_path, io::decomposition_to_json(sd));
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequential products on Euclidean Jordan algebras: law auditor and kernels", "seqeff"};
  app.require_subcommand(1);

  AuditOptions audit;
  auto* audit_cmd = app.add_subcommand("audit", "Audit laws from a config file or an ad-hoc row set");
  auto* config_opt = audit_cmd->add_option("--config", audit.config, "Suite config JSON");
  auto* algebra_opt = audit_cmd->add_option("--algebra", audit.algebra, "real:n | complex:n | quat:n | spin:d | sum(...)");
  auto* suite_opt = audit_cmd->add_flag("--default-suite", audit.default_suite,
                                        "Every law on the reference algebras plus the demos");
  config_opt->excludes(algebra_opt);
  suite_opt->excludes(config_opt)->excludes(algebra_opt);
  audit_cmd->add_option("--product", audit.product, "standard | twisted:<t>")->needs(algebra_opt);
  audit_cmd->add_option("--laws", audit.laws, "all, or a comma separated list")->needs(algebra_opt);
  audit_cmd->add_option("--trials", audit.trials, "Trials per law")->needs(algebra_opt)->check(CLI::NonNegativeNumber);
  audit_cmd->add_option("--iso", audit.iso, "unitary | transpose | rotation (INVARIANCE only)")->needs(algebra_opt);
  audit_cmd->add_option("--seed", audit.seed, "Base seed (default $SEQPROD_SEED or 42)");
  audit_cmd->add_option("--tol", audit.tol, "Override every row's tolerance")->check(CLI::NonNegativeNumber);
  audit_cmd->add_option("--out", audit.out, "Write the JSON report here");
  audit_cmd->add_flag("--serial", audit.serial, "Run trials on one thread");

  std::string demo_name;
  std::string demo_seed;
  std::string demo_out;
  bool demo_serial = false;
  auto* demo_cmd = app.add_subcommand("demo", "Run a built-in demo");
  demo_cmd->add_option("name", demo_name, "characterizations")->required()->check(CLI::IsMember({"characterizations"}));
  demo_cmd->add_option("--seed", demo_seed, "Base seed (default $SEQPROD_SEED or 42)");
  demo_cmd->add_option("--out", demo_out, "Write the JSON report here");
  demo_cmd->add_flag("--serial", demo_serial, "Run trials on one thread");

  std::string dec_in;
  std::string dec_out;
  double gap = kDefaultClusterGap;
  auto* dec_cmd = app.add_subcommand("decompose", "Spectral decomposition of an element JSON");
  dec_cmd->add_option("--in", dec_in, "Element JSON")->required();
  dec_cmd->add_option("--gap", gap, "Eigenvalue cluster gap")->check(CLI::PositiveNumber);
  dec_cmd->add_option("--out", dec_out, "Write the decomposition JSON here");

  auto* version_cmd = app.add_subcommand("version", "Print the version");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << '\n';
    return kUsage;
  }

  try {
    if (*audit_cmd) return cmd_audit(audit, out, err);
    if (*demo_cmd) return cmd_demo(demo_seed, demo_out, demo_serial, out, err);
    if (*dec_cmd) return cmd_decompose(dec_in, gap, dec_out, out);
    if (*version_cmd) {
      out << "seqeff " << kVersion << '\n';
      return kOk;
    }
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace seqeff
