#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "loplab/montecarlo.hpp"
#include "loplab/presets.hpp"

using namespace loplab;

namespace {

ExperimentConfig er_config(double c, std::size_t n, std::uint64_t samples, std::vector<Property> props) {
  ExperimentConfig cfg;
  cfg.regime = {Model::ER, PowerLaw{c, 1.0}};
  cfg.n = n;
  cfg.samples = samples;
  cfg.iterations = 100;
  cfg.seed = 12345;
  cfg.properties = std::move(props);
  return cfg;
}

std::string csv(const std::vector<EstimateRow>& rows) {
  std::ostringstream s;
  write_csv(s, rows);
  return s.str();
}

}  // namespace

TEST(Wilson, SpecExamples) {
  const auto all = wilson_interval(100, 100);
  EXPECT_NEAR(all.low, 0.963, 0.0005);
  EXPECT_EQ(all.high, 1.0);
  const auto none = wilson_interval(0, 100);
  EXPECT_EQ(none.low, 0.0);
  EXPECT_NEAR(none.high, 0.037, 0.0005);
  EXPECT_NEAR(none.high, 1.0 - all.low, 1e-15);
  EXPECT_THROW((void)wilson_interval(0, 0), std::invalid_argument);
  EXPECT_THROW((void)wilson_interval(3, 2), std::invalid_argument);
}

TEST(Wilson, ContainsEstimateAndIsOrdered) {
  for (std::uint64_t n : {1u, 2u, 7u, 50u, 1000u})
    for (std::uint64_t k = 0; k <= n; ++k) {
      const auto ci = wilson_interval(k, n);
      const double p = double(k) / n;
      ASSERT_LE(0.0, ci.low);
      ASSERT_LE(ci.low, p);
      ASSERT_LE(p, ci.high);
      ASSERT_LE(ci.high, 1.0);
    }
}

TEST(Wilson, CoverageAtThirtyPercent) {
  RngStream rng(2024, 0);
  const int reps = 10000;
  int covered = 0;
  for (int r = 0; r < reps; ++r) {
    std::uint64_t k = 0;
    for (int i = 0; i < 200; ++i) k += rng.uniform() < 0.3;
    const auto ci = wilson_interval(k, 200);
    covered += ci.low <= 0.3 && 0.3 <= ci.high;
  }
  EXPECT_GE(covered, 9400);
}

TEST(MonteCarlo, ValidateRejectsBadConfigs) {
  auto cfg = er_config(1.0, 10, 10, {Property::Plopl});
  EXPECT_NO_THROW(cfg.validate());
  auto bad = cfg;
  bad.samples = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.iterations = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.beta = {1, 1};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.properties = {Property::Lop};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad.oracle_enabled = true;
  EXPECT_NO_THROW(bad.validate());
  bad.n = 15;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(MonteCarlo, TrialExamples) {
  auto empty = er_config(0.0, 9, 3, {Property::Plopl, Property::Conn, Property::Giant});
  const auto v = run_trial(empty, 0);
  EXPECT_TRUE(v.plopl);
  EXPECT_FALSE(v.conn);
  EXPECT_EQ(v.giant_fraction().num, 1);
  EXPECT_EQ(v.giant_fraction().den, 9);

  ExperimentConfig full;
  full.regime = {Model::ER, FixedValue{1.0}};
  full.n = 7;
  full.samples = 1;
  full.iterations = 1000;
  full.properties = {Property::Plopu, Property::Edge};
  const auto k7 = run_trial(full, 0);
  EXPECT_EQ(k7.plopu_violation_found, true);
  EXPECT_FALSE(k7.pedge);
  EXPECT_THROW((void)run_trial(full, 1), std::invalid_argument);
}

TEST(MonteCarlo, TrialIsDeterministic) {
  auto cfg = er_config(1.2, 300, 5, {Property::Plopu, Property::Giant});
  for (std::uint64_t t = 0; t < 5; ++t) EXPECT_EQ(run_trial(cfg, t), run_trial(cfg, t));
}

TEST(MonteCarlo, EmptyGraphRegimeGivesCertainForest) {
  const auto rows = estimate(er_config(0.0, 50, 40, {Property::Plopl}));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].p_hat, 1.0);
  EXPECT_EQ(rows[0].successes, 40u);
}

TEST(MonteCarlo, RowsSortedAndDeduplicated) {
  const auto rows = estimate(er_config(1.0, 60, 20, {Property::Plopu, Property::Conn, Property::Conn}));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].property, Property::Conn);
  EXPECT_EQ(rows[1].property, Property::Plopu);
}

TEST(MonteCarlo, ResultIndependentOfWorkers) {
  SweepSpec spec{er_config(1.0, 200, 60, {Property::Plopl, Property::Plopu, Property::PlopuGiant}), SweepAxis::C,
                 {0.5, 1.0, 1.5}};
  const std::string one = csv(sweep(spec, 1));
  EXPECT_EQ(one, csv(sweep(spec, 4)));
  EXPECT_EQ(one, csv(sweep(spec, 16)));
  EXPECT_EQ(one, csv(sweep(spec, 1)));
}

TEST(MonteCarlo, CsvFormat) {
  SweepSpec spec{er_config(1.0, 100, 30, {Property::Giant, Property::Plopl}), SweepAxis::C, {1.0, 0.5}};
  const std::string text = csv(sweep(spec, 2));
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kCsvHeader);
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0].rfind("er,powerlaw:c=0.5:alpha=1,c,0.5,100,giant,30,", 0), 0u) << lines[0];
  EXPECT_EQ(lines[3].rfind("er,powerlaw:c=1:alpha=1,c,1,100,plopl,30,", 0), 0u) << lines[3];
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST(MonteCarlo, EmptyPropertySetGivesHeaderOnly) {
  SweepSpec spec{er_config(1.0, 100, 30, {}), SweepAxis::C, {1.0}};
  EXPECT_EQ(csv(sweep(spec)), std::string(kCsvHeader) + "\n");
}

TEST(MonteCarlo, ClampIsRecorded) {
  SweepSpec spec{er_config(1.0, 10, 30, {Property::Edge}), SweepAxis::C, {50.0}};
  const auto rows = sweep(spec);
  EXPECT_EQ(rows[0].regime, "powerlaw:c=50:alpha=1:clamped");
  EXPECT_EQ(rows[0].p_hat, 0.0);  // K10 has 45 > 20 edges
}

TEST(MonteCarlo, GridPointsUseFreshTrials) {
  // Identical grid values at different positions must not reuse trials.
  SweepSpec spec{er_config(1.0, 400, 50, {Property::Giant}), SweepAxis::C, {1.0, 1.0}};
  spec.base.beta = {1, 20};
  const auto rows = sweep(spec);
  ASSERT_EQ(rows.size(), 2u);
  auto a = spec.base;
  auto b = spec.base;
  b.trial_offset = spec.base.samples;
  EXPECT_NE(run_trial(a, 0), run_trial(b, 0));
}

TEST(MonteCarlo, SweepValidation) {
  SweepSpec empty{er_config(1.0, 10, 30, {Property::Plopl}), SweepAxis::C, {}};
  EXPECT_THROW((void)sweep(empty), std::invalid_argument);
  SweepSpec wrong{er_config(1.0, 10, 30, {Property::Plopl}), SweepAxis::X, {1.0}};
  EXPECT_THROW((void)sweep(wrong), std::invalid_argument);
  SweepSpec frac{er_config(1.0, 10, 30, {Property::Plopl}), SweepAxis::N, {10.5}};
  EXPECT_THROW((void)sweep(frac), std::invalid_argument);
}

TEST(MonteCarlo, NAxisSetsVertexCount) {
  SweepSpec spec{er_config(1.0, 1, 30, {Property::Giant}), SweepAxis::N, {50, 20}};
  const auto rows = sweep(spec);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].n, 20u);
  EXPECT_EQ(rows[1].n, 50u);
  EXPECT_EQ(rows[0].axis, "n");
}

TEST(MonteCarlo, PerTrialSandwichWithOracle) {
  for (double c : {0.5, 1.0, 2.0, 4.0}) {
    ExperimentConfig cfg = er_config(c, 12, 300, {Property::Plopl, Property::Lop, Property::Plopu});
    cfg.oracle_enabled = true;
    for (std::uint64_t t = 0; t < cfg.samples; ++t) {
      const auto v = run_trial(cfg, t);
      ASSERT_TRUE(!v.plopl || *v.lop_exact) << c << " " << t;
      ASSERT_TRUE(!*v.lop_exact || !*v.plopu_violation_found) << c << " " << t;
    }
  }
}

TEST(MonteCarlo, MarginalSandwichAcrossRows) {
  const auto rows = estimate(er_config(1.0, 300, 200, {Property::Plopl, Property::Plopu}));
  const auto& lower = rows[0];
  const auto& upper = rows[1];
  ASSERT_EQ(lower.property, Property::Plopl);
  EXPECT_LE(lower.p_hat, upper.p_hat);
}

TEST(MonteCarlo, RgTrialsWork) {
  ExperimentConfig cfg;
  cfg.regime = {Model::RG, PowerLaw{2.0, 1.0}};
  cfg.n = 300;
  cfg.samples = 30;
  cfg.iterations = 50;
  cfg.properties = {Property::Giant, Property::Conn, Property::PlopuConn};
  const auto rows = estimate(cfg, 3);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) EXPECT_EQ(r.model, Model::RG);
}

TEST(Presets, ErPropVsCScaling) {
  const auto desk = figure_preset("er-prop-vs-c", 0.05, 1);
  ASSERT_EQ(desk.sweeps.size(), 1u);
  EXPECT_EQ(desk.sweeps[0].base.n, 500u);
  EXPECT_EQ(desk.sweeps[0].base.samples, 50u);
  ASSERT_EQ(desk.sweeps[0].values.size(), 21u);
  EXPECT_EQ(desk.sweeps[0].values.front(), 0.0);
  EXPECT_EQ(desk.sweeps[0].values[3], 0.3);
  EXPECT_EQ(desk.sweeps[0].values.back(), 2.0);

  const auto full = figure_preset("er-prop-vs-c", 1.0, 1);
  EXPECT_EQ(full.sweeps[0].base.n, 10000u);
  EXPECT_EQ(full.sweeps[0].base.samples, 1000u);
  EXPECT_EQ(full.sweeps[0].base.iterations, 10000u);
}

TEST(Presets, Validation) {
  EXPECT_THROW((void)figure_preset("er-prop-vs-c", 0.0, 1), std::invalid_argument);
  EXPECT_THROW((void)figure_preset("er-prop-vs-c", 1.5, 1), std::invalid_argument);
  EXPECT_THROW((void)figure_preset("er-prop-vs-c", 0.01, 1), std::invalid_argument);  // S = 10
  EXPECT_THROW((void)figure_preset("nope", 0.5, 1), std::invalid_argument);
  for (const auto& id : figure_preset_ids()) EXPECT_NO_THROW((void)figure_preset(id, 0.05, 1)) << id;
}

TEST(Presets, OtherCaptions) {
  const auto n_sweep = figure_preset("er-prop-vs-n", 1.0, 1);
  EXPECT_EQ(n_sweep.sweeps.size(), 4u);
  EXPECT_EQ(n_sweep.sweeps[0].base.samples, 10000u);
  EXPECT_EQ(n_sweep.sweeps[0].base.iterations, 1000u);
  const auto rg = figure_preset("rg-prop-vs-n", 1.0, 1);
  EXPECT_EQ(rg.sweeps[0].base.samples, 100000u);
  const auto rgc = figure_preset("rg-prop-vs-c-65", 1.0, 1);
  ASSERT_EQ(rgc.sweeps.size(), 3u);
  EXPECT_EQ(rgc.sweeps[2].base.n, 10000u);
  EXPECT_DOUBLE_EQ(std::get<PowerLaw>(rgc.sweeps[0].base.regime.form).alpha, 1.2);
}

TEST(Presets, RunIsDeterministic) {
  const auto p = figure_preset("er-prop-vs-n", 0.003, 5);  // S = 30, n from 1 to 30
  const auto a = csv(run_preset(p, 1));
  EXPECT_EQ(a, csv(run_preset(p, 4)));
}
