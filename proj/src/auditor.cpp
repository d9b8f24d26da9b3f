#include "seqeff/auditor.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <limits>

#include "seqeff/errors.hpp"
#include "seqeff/random.hpp"

namespace seqeff {

namespace {

struct TrialOutcome {
  double residual = 0.0;
  std::exception_ptr error;
};

bool violates(double residual, double tol) { return !(residual <= tol); }

int default_trials(LawId law) {
  switch (law) {
    case LawId::SEA1:
    case LawId::SEA2:
    case LawId::SEA3:
    case LawId::SEA4:
    case LawId::SEA5:
      return 200;
    case LawId::DYADIC_BOUND:
    case LawId::HOMOGENEITY:
    case LawId::QUADRATIC_LAW:
    case LawId::THETA_STRUCTURE:
      return 50;
    default:
      return 100;
  }
}

double default_tol(LawId law) {
  switch (law) {
    case LawId::FUNDAMENTAL_EQ:
    case LawId::SPECTRAL_RECON:
    case LawId::FLOOR_LIMIT:
    case LawId::DYADIC_BOUND:
      return 1e-9;
    case LawId::INVERTIBILITY_PRES:
    case LawId::THETA_STRUCTURE:
      return 1e-7;
    default:
      return 1e-8;
  }
}

// Falsification demos: a twisted product is excluded by each of the three
// characterizing properties. A violation is a residual above 1e-3.
void add_demos(std::vector<AuditRow>& rows, std::uint64_t seed) {
  const auto complex3 = AlgebraDescriptor::complex_hermitian(3);
  const auto twisted = SequentialProduct::twisted(1.0);
  for (LawId law : {LawId::INVARIANCE, LawId::SYMMETRY, LawId::INVERTIBILITY_PRES}) {
    AuditRow demo = default_row(law, twisted, complex3, seed);
    demo.trials = 10;
    demo.tol = 1e-3;
    demo.expect = Expectation::fail;
    if (law == LawId::INVARIANCE) demo.iso = IsoKind::transpose;
    rows.push_back(demo);

    AuditRow control = default_row(law, SequentialProduct::standard(), complex3, seed);
    control.tol = 1e-7;
    if (law == LawId::INVARIANCE) control.iso = IsoKind::transpose;
    rows.push_back(control);
  }
}

}  // namespace

AuditRow default_row(LawId law, SequentialProduct product, AlgebraDescriptor alg, std::uint64_t seed) {
  return AuditRow{.law = law,
                  .product = product,
                  .algebra = std::move(alg),
                  .trials = default_trials(law),
                  .seed = seed,
                  .tol = default_tol(law)};
}

std::string to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::none:
      return "none";
    case ErrorKind::setup:
      return "setup";
    case ErrorKind::trial:
      return "trial";
  }
  return {};
}

ErrorKind error_kind_from_string(const std::string& s) {
  if (s == "none") return ErrorKind::none;
  if (s == "setup") return ErrorKind::setup;
  if (s == "trial") return ErrorKind::trial;
  throw ConfigError("unknown error kind '" + s + "'");
}

std::string to_string(Expectation e) { return e == Expectation::pass ? "pass" : "fail"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::error:
      return "error";
  }
  return {};
}

bool AuditEntry::as_expected() const {
  if (verdict == Verdict::error) return false;
  return (verdict == Verdict::pass) == (row.expect == Expectation::pass);
}

bool AuditReport::passed() const {
  for (const auto& e : entries) {
    if (!e.as_expected()) return false;
  }
  return true;
}

bool AuditReport::has_errors() const {
  for (const auto& e : entries) {
    if (e.verdict == Verdict::error) return true;
  }
  return false;
}

std::vector<AlgebraDescriptor> reference_algebras() {
  return {AlgebraDescriptor::real_symmetric(4), AlgebraDescriptor::complex_hermitian(4),
          AlgebraDescriptor::quaternionic_hermitian(3), AlgebraDescriptor::spin_factor(5),
          AlgebraDescriptor::direct_sum({AlgebraDescriptor::complex_hermitian(2), AlgebraDescriptor::real_symmetric(3)})};
}

SuiteConfig SuiteConfig::default_suite(std::uint64_t seed) {
  SuiteConfig config;
  config.seed = seed;
  const auto standard = SequentialProduct::standard();
  for (const auto& alg : reference_algebras()) {
    for (LawId law : all_laws()) config.rows.push_back(default_row(law, standard, alg, seed));
  }
  const auto complex3 = AlgebraDescriptor::complex_hermitian(3);
  for (double t : {0.5, 1.0}) {
    for (LawId law : {LawId::SEA1, LawId::SEA2, LawId::SEA3, LawId::SEA4, LawId::SEA5, LawId::SCALAR_LINEARITY}) {
      config.rows.push_back(default_row(law, SequentialProduct::twisted(t), complex3, seed));
    }
  }
  config.rows.push_back(default_row(LawId::THETA_STRUCTURE, SequentialProduct::twisted(1.0), complex3, seed));
  add_demos(config.rows, seed);
  return config;
}

SuiteConfig SuiteConfig::characterization_demos(std::uint64_t seed) {
  SuiteConfig config;
  config.seed = seed;
  add_demos(config.rows, seed);
  return config;
}

void require_applicable(const AuditRow& row) {
  row.product.require_supported(row.algebra);
  if (row.trials < 0) throw ConfigError("trials must be non-negative");
  if (row.iso) {
    if (row.law != LawId::INVARIANCE) throw ConfigError("an order isomorphism only applies to INVARIANCE");
    OrderIso(row.algebra, IsoSpec{*row.iso, 0});
  }
}

AuditEntry audit_law(const AuditRow& row, Execution exec) {
  const auto start = std::chrono::steady_clock::now();
  AuditEntry entry(row);
  auto finish = [&] {
    entry.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return entry;
  };

  try {
    require_applicable(row);
  } catch (const Error& e) {
    entry.verdict = Verdict::error;
    entry.error_kind = ErrorKind::setup;
    entry.error = e.what();
    return finish();
  }

  std::vector<TrialOutcome> outcomes(row.trials);
  auto run_trial = [&](int i) {
    try {
      const std::uint64_t s = derive_seed(row.seed, static_cast<std::uint64_t>(i));
      outcomes[i].residual = evaluate_law(row, generate_inputs(row, i, s));
    } catch (...) {
      outcomes[i].error = std::current_exception();
    }
  };
  if (exec == Execution::serial) {
    for (int i = 0; i < row.trials; ++i) run_trial(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < row.trials; ++i) run_trial(i);
  }

  for (int i = 0; i < row.trials; ++i) {
    if (outcomes[i].error) {
      entry.verdict = Verdict::error;
      entry.error_kind = ErrorKind::trial;
      entry.trials_run = i + 1;
      try {
        std::rethrow_exception(outcomes[i].error);
      } catch (const std::exception& e) {
        entry.error = "trial " + std::to_string(i) + ": " + e.what();
      }
      return finish();
    }
    const double r = outcomes[i].residual;
    entry.max_residual = std::max(entry.max_residual, std::isnan(r) ? std::numeric_limits<double>::infinity() : r);
    entry.trials_run = i + 1;
    if (violates(r, row.tol)) {
      const std::uint64_t s = derive_seed(row.seed, static_cast<std::uint64_t>(i));
      entry.verdict = Verdict::fail;
      entry.witness = Witness{i, s, r, generate_inputs(row, i, s)};
      return finish();
    }
  }
  entry.verdict = Verdict::pass;
  return finish();
}

AuditReport run_full_suite(const SuiteConfig& config, Execution exec) {
  AuditReport report;
  report.entries.reserve(config.rows.size());
  for (const auto& row : config.rows) report.entries.push_back(audit_law(row, exec));
  return report;
}

double replay_witness(const AuditRow& row, const Witness& witness) { return evaluate_law(row, witness.inputs); }

}  // namespace seqeff
