#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "corrocal/fixtures.hpp"
#include "corrocal/nn.hpp"

using namespace corrocal;

namespace {

std::vector<double> point_times(const std::vector<CalibrationPoint>& pts) {
  std::vector<double> out;
  for (const auto& p : pts) out.push_back(p.t);
  return out;
}

std::vector<double> point_temps(const std::vector<CalibrationPoint>& pts) {
  std::vector<double> out;
  for (const auto& p : pts) out.push_back(p.temp);
  return out;
}

}  // namespace

TEST_CASE("joint normalizer pools both features") {
  JointNormalizer n = JointNormalizer::fit({0.0, 2.0}, {4.0, 6.0});
  CHECK(n.mean == doctest::Approx(3.0));
  // population std of {0, 2, 4, 6}
  CHECK(n.std_dev == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  CHECK(n.denormalize(n.normalize(17.3)) == doctest::Approx(17.3).epsilon(1e-14));
  CHECK(n.normalize(3.0) == 0.0);
}

TEST_CASE("zeroed network predicts its output bias") {
  NetworkParameters p = NetworkParameters::initialize(0);
  for (double* w : p.flat()) *w = 0.0;
  p.b3[0] = -12.0;
  JointNormalizer norm{1e8, 5e7};
  CHECK(nn_forward(p, norm, 1.2e8, 285.0) == doctest::Approx(1e-12).epsilon(1e-12));
}

TEST_CASE("forward pass is positive and finite") {
  const NetworkParameters p = NetworkParameters::initialize(4);
  const auto points = default_calibration_points();
  const JointNormalizer norm =
      JointNormalizer::fit(point_times(points), point_temps(points));
  for (const auto& pt : points) {
    const double d = nn_forward(p, norm, pt.t, pt.temp);
    CHECK(d > 0.0);
    CHECK(std::isfinite(d));
  }
}

TEST_CASE("loss is the mean squared depth error") {
  const ModelHyperparameters hyper;
  const auto points = default_calibration_points();
  const JointNormalizer norm =
      JointNormalizer::fit(point_times(points), point_temps(points));

  // constant network: loss must equal the analytic depth MSE for that D
  NetworkParameters p = NetworkParameters::initialize(0);
  for (double* w : p.flat()) *w = 0.0;
  p.b3[0] = -11.5;
  const double d_const = std::pow(10.0, -11.5);
  double expected = 0.0;
  for (const auto& pt : points) {
    const double err = depth_of_content_with_d(1.62, pt.t, d_const, hyper) - pt.x;
    expected += err * err;
  }
  expected /= static_cast<double>(points.size());
  CHECK(nn_loss(p, norm, points, hyper, 1.62) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(nn_loss(p, norm, points, hyper, 1.62) >= 0.0);
}

TEST_CASE("analytic gradient matches central differences") {
  const ModelHyperparameters hyper;
  const auto points = default_calibration_points();
  const JointNormalizer norm =
      JointNormalizer::fit(point_times(points), point_temps(points));

  std::mt19937_64 seeds(99);
  for (int draw = 0; draw < 10; ++draw) {
    NetworkParameters p = NetworkParameters::initialize(seeds());
    const auto grad = nn_grad(p, norm, points, hyper, 1.62);
    auto ws = p.flat();
    REQUIRE(grad.size() == ws.size());

    const double h = 1e-6;
    for (std::size_t k = 0; k < ws.size(); k += 7) {  // sample the vector
      const double saved = *ws[k];
      *ws[k] = saved + h;
      const double lp = nn_loss(p, norm, points, hyper, 1.62);
      *ws[k] = saved - h;
      const double lm = nn_loss(p, norm, points, hyper, 1.62);
      *ws[k] = saved;
      const double fd = (lp - lm) / (2.0 * h);
      const double scale = std::max({std::abs(fd), std::abs(grad[k]), 1e-12});
      CHECK(std::abs(grad[k] - fd) / scale <= 1e-4);
    }
  }
}

TEST_CASE("training fits a single point to machine precision") {
  const ModelHyperparameters hyper;
  std::vector<CalibrationPoint> one = {default_calibration_points()[1]};
  TrainConfig config;
  config.seed = 0;
  const TrainResult res = nn_train(one, hyper, 1.62, config);
  CHECK(res.converged);
  CHECK(res.loss_trace.back() < 1e-11);
}

TEST_CASE("training on the four points recovers the critical content") {
  const ModelHyperparameters hyper;
  const auto points = default_calibration_points();
  TrainConfig config;
  config.seed = 0;
  const TrainResult res = nn_train(points, hyper, 1.62, config);
  CHECK(res.converged);
  CHECK(res.loss_trace.size() >= 2);
  // trace is finite everywhere
  for (double l : res.loss_trace) CHECK(std::isfinite(l));

  // invert each fitted depth back to a content; all within 1 % of 1.62
  for (const auto& pt : points) {
    const double d = nn_forward(res.params, res.normalizer, pt.t, pt.temp);
    const double c = concentration_with_d(pt.x, pt.t, d, hyper);
    CHECK(std::abs(c - 1.62) <= 0.01 * 1.62);
  }
}

TEST_CASE("training is bit-identical under a fixed seed") {
  const ModelHyperparameters hyper;
  const auto points = default_calibration_points();
  TrainConfig config;
  config.seed = 12;
  config.max_epochs = 500;  // keep the test quick; determinism is the point
  const TrainResult a = nn_train(points, hyper, 1.62, config);
  const TrainResult b = nn_train(points, hyper, 1.62, config);
  REQUIRE(a.loss_trace.size() == b.loss_trace.size());
  for (std::size_t i = 0; i < a.loss_trace.size(); ++i) {
    CHECK(a.loss_trace[i] == b.loss_trace[i]);
  }
  const auto wa = a.params.flat();
  const auto wb = b.params.flat();
  for (std::size_t i = 0; i < wa.size(); ++i) CHECK(*wa[i] == *wb[i]);
}

TEST_CASE("config validation and input checks") {
  TrainConfig bad;
  bad.tolerance = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  const ModelHyperparameters hyper;
  CHECK_THROWS_AS(nn_train({}, hyper, 1.62, TrainConfig{}), ConfigError);
}
