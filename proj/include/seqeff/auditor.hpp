#pragma once

// Seeded property-based auditing of sequential-product laws.
//
// Each law is split into an input generator (driven by a per-trial seed) and
// an evaluator that maps the generated inputs to a non-negative residual.
// A row passes when every trial's residual is <= tol. Rows may be declared
// as expected failures; those are the falsification demos, and the suite only
// passes when they do fail.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqeff/algebra.hpp"
#include "seqeff/linear_map.hpp"
#include "seqeff/order_iso.hpp"
#include "seqeff/seqprod.hpp"

namespace seqeff {

enum class LawId {
  SEA1,
  SEA2,
  SEA3,
  SEA4,
  SEA5,
  SCALAR_LINEARITY,
  PRODUCT_LE_LEFT,
  MONOTONE_RIGHT,
  SHARP_PROPS,
  FLOOR_LIMIT,
  DYADIC_BOUND,
  SPECTRAL_RECON,
  FUNDAMENTAL_EQ,
  COMMUTE_EQUIV,
  SELF_DUALITY,
  HOMOGENEITY,
  PSEUDO_INVERSE,
  DIVIDE,
  INVARIANCE,
  SYMMETRY,
  INVERTIBILITY_PRES,
  QUADRATIC_LAW,
  THETA_STRUCTURE,
};

const std::vector<LawId>& all_laws();
std::string to_string(LawId law);
LawId law_from_string(const std::string& s);
// The identity each law checks, in plain notation.
std::string law_statement(LawId law);

// Named inputs of one trial. Enough to replay the trial without the seed.
struct TrialInputs {
  std::vector<std::pair<std::string, Element>> elements;
  std::optional<IsoSpec> iso;

  const Element& at(const std::string& name) const;
  void add(std::string name, Element e) { elements.emplace_back(std::move(name), std::move(e)); }
};

enum class Expectation { pass, fail };
enum class Verdict { pass, fail, error };
// setup: the row does not apply (exit 2). trial: a trial threw (exit 3).
enum class ErrorKind { none, setup, trial };

std::string to_string(Expectation e);
std::string to_string(Verdict v);
std::string to_string(ErrorKind k);
ErrorKind error_kind_from_string(const std::string& s);

struct AuditRow {
  LawId law;
  SequentialProduct product = SequentialProduct::standard();
  AlgebraDescriptor algebra;
  int trials = 100;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  Expectation expect = Expectation::pass;
  // INVARIANCE only: fixes the order isomorphism family; otherwise chosen per trial.
  std::optional<IsoKind> iso;
};

struct Witness {
  int trial;
  std::uint64_t trial_seed;
  double residual;
  TrialInputs inputs;
};

struct AuditEntry {
  explicit AuditEntry(AuditRow r) : row(std::move(r)) {}

  AuditRow row;
  Verdict verdict = Verdict::pass;
  double max_residual = 0.0;
  int trials_run = 0;
  std::optional<Witness> witness;  // present iff verdict == fail
  std::string error;               // set iff verdict == error
  ErrorKind error_kind = ErrorKind::none;
  double elapsed_ms = 0.0;

  bool as_expected() const;
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  // Every row behaved as declared and no row errored.
  bool passed() const;
  bool has_errors() const;
};

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::vector<AuditRow> rows;

  // Every law with the standard product on five reference algebras, the
  // twisted products on the axiom laws, and the three falsification demos.
  static SuiteConfig default_suite(std::uint64_t seed);
  // The three falsification demos on twisted(1.0) plus their standard-product
  // controls, all on complex:3.
  static SuiteConfig characterization_demos(std::uint64_t seed);
};

// Default trial count and tolerance for the law.
AuditRow default_row(LawId law, SequentialProduct product, AlgebraDescriptor alg, std::uint64_t seed);

// Throws CapabilityError when the row's law/product/algebra do not fit.
void require_applicable(const AuditRow& row);

TrialInputs generate_inputs(const AuditRow& row, int trial, std::uint64_t trial_seed);
double evaluate_law(const AuditRow& row, const TrialInputs& inputs);

// Runs row.trials trials with seeds derive_seed(row.seed, i). Trials stop
// counting at the first violation: max_residual is taken over trials up to and
// including the witness. Capability and numerical errors become error entries.
AuditEntry audit_law(const AuditRow& row, Execution exec = Execution::parallel);
AuditReport run_full_suite(const SuiteConfig& config, Execution exec = Execution::parallel);

// Recomputes the residual of a witness from its recorded inputs.
double replay_witness(const AuditRow& row, const Witness& witness);

std::vector<AlgebraDescriptor> reference_algebras();

}  // namespace seqeff
