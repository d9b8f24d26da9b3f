#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "seqeff/auditor.hpp"
#include "seqeff/errors.hpp"
#include "seqeff/io.hpp"

using namespace seqeff;

namespace {

AuditRow row(LawId law, SequentialProduct p, AlgebraDescriptor alg, int trials, std::uint64_t seed, double tol) {
  return AuditRow{.law = law, .product = p, .algebra = std::move(alg), .trials = trials, .seed = seed, .tol = tol};
}

const auto kComplex3 = AlgebraDescriptor::complex_hermitian(3);

}  // namespace

TEST(Laws, NamesRoundTrip) {
  EXPECT_EQ(all_laws().size(), 23u);
  for (LawId law : all_laws()) {
    EXPECT_EQ(law_from_string(to_string(law)), law);
    EXPECT_FALSE(law_statement(law).empty());
  }
  EXPECT_THROW(law_from_string("SEA9"), ConfigError);
}

TEST(Audit, Sea1StandardComplexPasses) {
  const auto e = audit_law(row(LawId::SEA1, SequentialProduct::standard(), kComplex3, 100, 7, 1e-8));
  EXPECT_EQ(e.verdict, Verdict::pass);
  EXPECT_EQ(e.trials_run, 100);
  EXPECT_FALSE(e.witness);
  EXPECT_GE(e.max_residual, 0.0);
}

TEST(Audit, InvarianceTransposeFalsifiesTwisted) {
  auto r = row(LawId::INVARIANCE, SequentialProduct::twisted(1.0), kComplex3, 10, 7, 1e-8);
  r.iso = IsoKind::transpose;
  r.expect = Expectation::fail;
  const auto e = audit_law(r);
  ASSERT_EQ(e.verdict, Verdict::fail);
  ASSERT_TRUE(e.witness);
  EXPECT_GE(e.witness->residual, 1e-3);
  EXPECT_TRUE(e.as_expected());
  ASSERT_TRUE(e.witness->inputs.iso);
  EXPECT_EQ(e.witness->inputs.iso->kind, IsoKind::transpose);
}

TEST(Audit, SymmetryStandardSpinPasses) {
  const auto e = audit_law(
      row(LawId::SYMMETRY, SequentialProduct::standard(), AlgebraDescriptor::spin_factor(4), 100, 3, 1e-8));
  EXPECT_EQ(e.verdict, Verdict::pass);
}

TEST(Audit, EveryLawPassesOnEveryReferenceAlgebra) {
  for (const auto& alg : reference_algebras()) {
    for (LawId law : all_laws()) {
      AuditRow r = default_row(law, SequentialProduct::standard(), alg, 99);
      r.trials = 6;
      const auto e = audit_law(r);
      EXPECT_EQ(e.verdict, Verdict::pass) << to_string(law) << " " << alg.shorthand() << " residual "
                                          << e.max_residual << " " << e.error;
    }
  }
}

TEST(Audit, TwistedPassesAxioms) {
  for (LawId law : {LawId::SEA1, LawId::SEA2, LawId::SEA3, LawId::SEA4, LawId::SEA5, LawId::SCALAR_LINEARITY,
                    LawId::THETA_STRUCTURE}) {
    AuditRow r = default_row(law, SequentialProduct::twisted(0.5), kComplex3, 5);
    r.trials = 10;
    const auto e = audit_law(r);
    EXPECT_EQ(e.verdict, Verdict::pass) << to_string(law) << " " << e.max_residual << " " << e.error;
  }
}

TEST(Audit, CapabilityBecomesErrorEntry) {
  const auto e =
      audit_law(row(LawId::SEA1, SequentialProduct::twisted(1.0), AlgebraDescriptor::real_symmetric(3), 5, 1, 1e-8));
  EXPECT_EQ(e.verdict, Verdict::error);
  EXPECT_EQ(e.error_kind, ErrorKind::setup);
  EXPECT_FALSE(e.error.empty());
  EXPECT_FALSE(e.as_expected());

  auto bad_iso = row(LawId::INVARIANCE, SequentialProduct::standard(), AlgebraDescriptor::real_symmetric(3), 5, 1, 1e-8);
  bad_iso.iso = IsoKind::spin_rotation;
  EXPECT_EQ(audit_law(bad_iso).verdict, Verdict::error);
}

TEST(Audit, ZeroTrialsPass) {
  const auto e = audit_law(row(LawId::SEA2, SequentialProduct::standard(), kComplex3, 0, 1, 1e-8));
  EXPECT_EQ(e.verdict, Verdict::pass);
  EXPECT_EQ(e.max_residual, 0.0);
}

TEST(Suite, DefaultComposition) {
  const auto config = SuiteConfig::default_suite(42);
  int expect_pass = 0;
  std::vector<AuditRow> fails;
  for (const auto& r : config.rows) {
    if (r.expect == Expectation::pass) {
      ++expect_pass;
    } else {
      fails.push_back(r);
    }
  }
  EXPECT_GE(expect_pass, 23 * 5);
  ASSERT_EQ(fails.size(), 3u);
  EXPECT_EQ(fails[0].law, LawId::INVARIANCE);
  EXPECT_EQ(fails[1].law, LawId::SYMMETRY);
  EXPECT_EQ(fails[2].law, LawId::INVERTIBILITY_PRES);
  for (const auto& r : fails) {
    EXPECT_EQ(r.product, SequentialProduct::twisted(1.0));
    EXPECT_EQ(r.algebra, kComplex3);
  }
}

TEST(Suite, EmptyConfigPasses) {
  const auto report = run_full_suite(SuiteConfig{});
  EXPECT_TRUE(report.entries.empty());
  EXPECT_TRUE(report.passed());
}

TEST(Suite, DemoThatStopsFalsifyingBreaksTheSuite) {
  SuiteConfig config;
  auto r = row(LawId::SYMMETRY, SequentialProduct::standard(), kComplex3, 10, 1, 1e-3);
  r.expect = Expectation::fail;
  config.rows.push_back(r);
  EXPECT_FALSE(run_full_suite(config).passed());
}

TEST(Determinism, IdenticalRunsAndSchedules) {
  SuiteConfig config = SuiteConfig::characterization_demos(42);
  config.rows.push_back(row(LawId::SEA5, SequentialProduct::twisted(1.0), kComplex3, 20, 42, 1e-8));
  config.rows.push_back(row(LawId::HOMOGENEITY, SequentialProduct::standard(), AlgebraDescriptor::spin_factor(3), 10,
                            42, 1e-8));
  const auto a = io::report_to_json(run_full_suite(config, Execution::parallel), false).dump();
  const auto b = io::report_to_json(run_full_suite(config, Execution::parallel), false).dump();
  const auto c = io::report_to_json(run_full_suite(config, Execution::serial), false).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Determinism, InputsDependOnlyOnTrialSeed) {
  const auto r = row(LawId::SEA3, SequentialProduct::standard(), kComplex3, 1, 1, 1e-8);
  const auto x = generate_inputs(r, 4, 1234);
  const auto y = generate_inputs(r, 4, 1234);
  ASSERT_EQ(x.elements.size(), y.elements.size());
  for (std::size_t i = 0; i < x.elements.size(); ++i) {
    EXPECT_TRUE(x.elements[i].second.coords() == y.elements[i].second.coords());
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Witness, ReplayReproducesResidual) {
  const auto report = run_full_suite(SuiteConfig::characterization_demos(7));
  int witnesses = 0;
  for (const auto& e : report.entries) {
    EXPECT_EQ(e.verdict == Verdict::fail, e.witness.has_value());
    if (!e.witness) continue;
    ++witnesses;
    EXPECT_LE(std::abs(replay_witness(e.row, *e.witness) - e.max_residual), 0.01 * e.max_residual);
  }
  EXPECT_EQ(witnesses, 3);
  // and from the serialized inputs
  const auto back = io::report_from_json(io::report_to_json(report));
  for (const auto& e : back.entries) {
    if (e.witness) EXPECT_LE(std::abs(replay_witness(e.row, *e.witness) - e.max_residual), 0.01 * e.max_residual);
  }
}
