#include <mss/problems.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

namespace mss {
namespace {

double value_at(const ProblemInstance& p, const Vector& x) {
  Vector g(p.n);
  return p.evaluate(x, g);
}

TEST(Problems, TwelveNamedProblems) {
  EXPECT_EQ(problem_names().size(), 12u);
  for (std::string_view name : problem_names()) {
    const ProblemInstance p = make_problem(name);
    EXPECT_EQ(p.name, name);
    EXPECT_EQ(p.n, kDefaultDimension);
    EXPECT_EQ(p.x0.size(), p.n);
  }
}

TEST(Problems, RosenbrockKnownValues) {
  const ProblemInstance p = make_problem("srosenbr", 2);
  EXPECT_NEAR(value_at(p, p.x0), 24.2, 1e-12);
  EXPECT_EQ(value_at(p, Vector::Ones(2)), 0.0);
  const ProblemInstance q = make_problem("srosenbr", 10);
  EXPECT_NEAR(value_at(q, q.x0), 5 * 24.2, 1e-11);
  Vector g(10);
  q.evaluate(Vector::Ones(10), g);
  EXPECT_EQ(g.norm(), 0.0);
}

TEST(Problems, KnownMinimizers) {
  EXPECT_EQ(value_at(make_problem("dqdrtic", 10), Vector::Zero(10)), 0.0);
  EXPECT_EQ(value_at(make_problem("dqrtic", 10), Vector::LinSpaced(10, 1, 10)), 0.0);
  EXPECT_EQ(value_at(make_problem("woods", 8), Vector::Ones(8)), 0.0);
  EXPECT_EQ(value_at(make_problem("liarwhd", 6), Vector::Ones(6)), 0.0);
  EXPECT_EQ(value_at(make_problem("power", 6), Vector::Zero(6)), 0.0);
}

TEST(Problems, GradientsMatchFiniteDifferences) {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> normal;
  for (std::string_view name : problem_names()) {
    for (Index n0 : {10, 100}) {
      const Index n = nearest_valid_dimension(name, n0);
      const ProblemInstance p = make_problem(name, n);
      EXPECT_LE(fd_gradient_check(p, p.x0), 1e-5) << name << " n=" << n;
      Vector x = p.x0;
      for (auto& v : x) v += 0.1 * normal(rng);
      EXPECT_LE(fd_gradient_check(p, x), 1e-5) << name << " n=" << n << " perturbed";
    }
  }
}

TEST(Problems, CorruptedGradientIsDetected) {
  const ProblemInstance p = make_problem("arwhead", 20);
  const Objective bad = [&](const Vector& x, Vector& g) {
    const double f = p.evaluate(x, g);
    g[7] *= 1.01;
    g[7] += 0.01;
    return f;
  };
  EXPECT_GT(fd_gradient_check(bad, p.x0), 1e-4);
}

TEST(Problems, DimensionRules) {
  EXPECT_FALSE(is_valid_dimension("woods", 10));
  EXPECT_TRUE(is_valid_dimension("woods", 8));
  EXPECT_EQ(nearest_valid_dimension("woods", 10), 8);
  EXPECT_FALSE(is_valid_dimension("srosenbr", 9));
  EXPECT_FALSE(is_valid_dimension("dqdrtic", 2));
  EXPECT_TRUE(is_valid_dimension("power", 1));
  EXPECT_THROW(make_problem("woods", 10), std::invalid_argument);
  EXPECT_THROW(make_problem("srosenbr", 0), std::invalid_argument);
  EXPECT_THROW(make_problem("rosenbrock"), std::invalid_argument);
  EXPECT_FALSE(is_valid_dimension("rosenbrock", 10));
}

TEST(Problems, FiniteAlongSegmentToMinimizer) {
  // Between the start and a known minimizer every problem stays finite.
  for (std::string_view name : problem_names()) {
    const Index n = nearest_valid_dimension(name, 100);
    const ProblemInstance p = make_problem(name, n);
    Vector g(n);
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const Vector x = (1 - t) * p.x0;
      const double f = p.evaluate(x, g);
      EXPECT_TRUE(std::isfinite(f)) << name << " t=" << t;
      EXPECT_TRUE(g.allFinite()) << name << " t=" << t;
    }
  }
}

TEST(Problems, EvaluateChecksNothingButFillsGradient) {
  const ProblemInstance p = make_problem("engval1", 5);
  Vector g = Vector::Constant(5, 99.0);
  p.evaluate(p.x0, g);
  EXPECT_NE(g, Vector::Constant(5, 99.0));
}

}  // namespace
}  // namespace mss
