#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "corrocal/fixtures.hpp"
#include "corrocal/sensitivity.hpp"
#include "corrocal/sobol.hpp"

using namespace corrocal;

TEST_CASE("dummy model evaluates") {
  CHECK(dummy_model({0.0, 0.0, 0.0}) == 0.0);
  CHECK(dummy_model({1.0, 1.0, 1.0}) == doctest::Approx(6.0));
  CHECK(dummy_model({0.5, 0.25, 0.5}) ==
        doctest::Approx(2 * 0.25 + 0.25 + 3 * 0.125));
}

TEST_CASE("dummy indices match the analytic decomposition") {
  const IndexEstimates est = run_dummy_analysis(8192);
  REQUIRE(est.s1.size() == 3);
  REQUIRE(est.st.size() == 3);

  // additive model: Var = 16/45 + 1/12 + 81/112
  const double v1 = 16.0 / 45.0;
  const double v2 = 1.0 / 12.0;
  const double v3 = 81.0 / 112.0;
  const double total = v1 + v2 + v3;
  CHECK(est.variance == doctest::Approx(total).epsilon(0.02));
  CHECK(est.s1[0] == doctest::Approx(v1 / total).epsilon(0.05));
  CHECK(est.s1[1] == doctest::Approx(v2 / total).epsilon(0.05));
  CHECK(est.s1[2] == doctest::Approx(v3 / total).epsilon(0.05));

  // ordering and closure
  CHECK(est.s1[2] > est.s1[0]);
  CHECK(est.s1[0] > est.s1[1]);
  CHECK(est.st[2] > est.st[0]);
  CHECK(est.st[0] > est.st[1]);
  const double sum = est.s1[0] + est.s1[1] + est.s1[2];
  CHECK(sum >= 0.9);
  CHECK(sum <= 1.05);
  // no interactions: ST tracks S1
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(est.st[i] - est.s1[i]) <= 0.05);
  }
}

TEST_CASE("saltelli outputs have the right shape") {
  const auto a = sobol_matrix(64, 6, 0);
  std::vector<std::vector<double>> ma, mb;
  for (const auto& row : a) {
    ma.push_back({row[0], row[1], row[2]});
    mb.push_back({row[3], row[4], row[5]});
  }
  const auto out = saltelli_evaluate(dummy_model, ma, mb);
  CHECK(out.y_a.size() == 64);
  CHECK(out.y_b.size() == 64);
  REQUIRE(out.y_ab.size() == 3);
  for (const auto& col : out.y_ab) CHECK(col.size() == 64);

  // replacing a column of A with the same column of A is a no-op
  const auto self = saltelli_evaluate(dummy_model, ma, ma);
  for (int d = 0; d < 3; ++d) {
    for (std::size_t i = 0; i < self.y_a.size(); ++i) {
      CHECK(self.y_ab[d][i] == self.y_a[i]);
    }
  }
}

TEST_CASE("constant model is rejected") {
  const auto a = sobol_matrix(32, 6, 0);
  std::vector<std::vector<double>> ma, mb;
  for (const auto& row : a) {
    ma.push_back({row[0], row[1], row[2]});
    mb.push_back({row[3], row[4], row[5]});
  }
  const auto out =
      saltelli_evaluate([](const std::vector<double>&) { return 1.0; }, ma, mb);
  CHECK_THROWS_AS(sobol_indices(out), DegenerateError);
}

TEST_CASE("concentration model sensitivities") {
  SensitivityConfig config;
  config.n_base = 8192;
  config.datapoints = default_calibration_points();
  const ModelHyperparameters hyper;
  const SobolResult res = run_analysis(config, hyper);

  REQUIRE(res.runs.size() == config.datapoints.size());
  // parameter order (b_e, d_t, a): aging exponent dominates, then d_t,
  // the temperature coefficient is nearly inert
  CHECK(res.s1_avg[2] > res.s1_avg[1]);
  CHECK(res.s1_avg[1] > res.s1_avg[0]);
  CHECK(res.st_avg[2] > res.st_avg[1]);
  CHECK(res.st_avg[1] > res.st_avg[0]);
  CHECK(res.s1_avg[0] < 0.05);
  CHECK(std::abs(res.s1_avg[2] - 0.643) <= 0.10);
  CHECK(std::abs(res.s1_avg[1] - 0.351) <= 0.10);

  for (const auto& run : res.runs) {
    CHECK(run.variance > 0.0);
    double s1_sum = 0.0;
    for (int i = 0; i < 3; ++i) {
      CHECK(run.st[i] >= run.s1[i] - 0.05);
      CHECK(!run.out_of_range[i]);
      s1_sum += run.s1[i];
    }
    CHECK(s1_sum <= 1.05);
    CHECK(!run.decomposition_flag);
    CHECK(run.variance_sum ==
          doctest::Approx(s1_sum * run.variance).epsilon(1e-9));
  }
}

TEST_CASE("analysis is deterministic") {
  SensitivityConfig config;
  config.n_base = 1024;
  config.datapoints = default_calibration_points();
  const ModelHyperparameters hyper;
  const SobolResult a = run_analysis(config, hyper);
  const SobolResult b = run_analysis(config, hyper);
  for (int i = 0; i < 3; ++i) {
    CHECK(a.s1_avg[i] == b.s1_avg[i]);
    CHECK(a.st_avg[i] == b.st_avg[i]);
  }
}

TEST_CASE("configuration is validated") {
  SensitivityConfig bad;
  bad.n_base = 1000;  // not a power of two
  bad.datapoints = default_calibration_points();
  const ModelHyperparameters hyper;
  CHECK_THROWS_AS(run_analysis(bad, hyper), ConfigError);

  SensitivityConfig empty;
  empty.n_base = 64;
  CHECK_THROWS_AS(run_analysis(empty, hyper), ConfigError);
}
