#include "mss/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace mss {

namespace {

using StartFn = Vector (*)(Index n);
using EvalFn = double (*)(const Vector& x, Vector& g);

struct ProblemDef {
  std::string_view name;
  Index min_n;
  Index block;  // n must be a multiple of block
  StartFn start;
  EvalFn eval;
};

// srosenbr: sum over pairs 100 (x_{2i+1} - x_{2i}^2)^2 + (1 - x_{2i})^2
// start (-1.2, 1, -1.2, 1, ...)
double srosenbr(const Vector& x, Vector& g) {
  double f = 0.0;
  for (Index i = 0; i + 1 < x.size(); i += 2) {
    const double t = x[i + 1] - x[i] * x[i];
    const double u = 1.0 - x[i];
    f += 100.0 * t * t + u * u;
    g[i] = -400.0 * x[i] * t - 2.0 * u;
    g[i + 1] = 200.0 * t;
  }
  return f;
}

Vector srosenbr_start(Index n) {
  Vector x(n);
  for (Index i = 0; i < n; ++i) x[i] = (i % 2 == 0) ? -1.2 : 1.0;
  return x;
}

// arwhead: sum_{i<n-1} (-4 x_i + 3) + (x_i^2 + x_{n-1}^2)^2, start 1
double arwhead(const Vector& x, Vector& g) {
  const Index n = x.size();
  const double xn = x[n - 1];
  double f = 0.0;
  g.setZero();
  for (Index i = 0; i + 1 < n; ++i) {
    const double q = x[i] * x[i] + xn * xn;
    f += -4.0 * x[i] + 3.0 + q * q;
    g[i] = -4.0 + 4.0 * q * x[i];
    g[n - 1] += 4.0 * q * xn;
  }
  return f;
}

// dqdrtic: sum_{i<n-2} x_i^2 + 100 x_{i+1}^2 + 100 x_{i+2}^2, start 3
double dqdrtic(const Vector& x, Vector& g) {
  double f = 0.0;
  g.setZero();
  for (Index i = 0; i + 2 < x.size(); ++i) {
    f += x[i] * x[i] + 100.0 * (x[i + 1] * x[i + 1] + x[i + 2] * x[i + 2]);
    g[i] += 2.0 * x[i];
    g[i + 1] += 200.0 * x[i + 1];
    g[i + 2] += 200.0 * x[i + 2];
  }
  return f;
}

// dqrtic: sum_i (x_i - i)^4 with 1-based i, start 2
double dqrtic(const Vector& x, Vector& g) {
  double f = 0.0;
  for (Index i = 0; i < x.size(); ++i) {
    const double t = x[i] - static_cast<double>(i + 1);
    const double t2 = t * t;
    f += t2 * t2;
    g[i] = 4.0 * t2 * t;
  }
  return f;
}

// eg2: sum_{i<n-1} sin(x_0 + x_i^2 - 1) + sin(x_{n-1}^2) / 2, start 0
double eg2(const Vector& x, Vector& g) {
  const Index n = x.size();
  double f = 0.0;
  g.setZero();
  for (Index i = 0; i + 1 < n; ++i) {
    const double u = x[0] + x[i] * x[i] - 1.0;
    const double c = std::cos(u);
    f += std::sin(u);
    g[0] += c;
    g[i] += 2.0 * x[i] * c;
  }
  const double xl = x[n - 1];
  f += 0.5 * std::sin(xl * xl);
  g[n - 1] += xl * std::cos(xl * xl);
  return f;
}

// cosine: sum_{i<n-1} cos(x_i^2 - x_{i+1} / 2), start 1
double cosine(const Vector& x, Vector& g) {
  double f = 0.0;
  g.setZero();
  for (Index i = 0; i + 1 < x.size(); ++i) {
    const double u = x[i] * x[i] - 0.5 * x[i + 1];
    const double s = std::sin(u);
    f += std::cos(u);
    g[i] -= 2.0 * x[i] * s;
    g[i + 1] += 0.5 * s;
  }
  return f;
}

// nondia: (x_0 - 1)^2 + sum_{i=1}^{n-1} 100 (x_0 - x_{i-1}^2)^2, start -1
double nondia(const Vector& x, Vector& g) {
  g.setZero();
  const double u = x[0] - 1.0;
  double f = u * u;
  g[0] = 2.0 * u;
  for (Index i = 1; i < x.size(); ++i) {
    const double t = x[0] - x[i - 1] * x[i - 1];
    f += 100.0 * t * t;
    g[0] += 200.0 * t;
    g[i - 1] -= 400.0 * x[i - 1] * t;
  }
  return f;
}

// liarwhd: sum_i 4 (x_i^2 - x_0)^2 + (x_i - 1)^2, start 4
double liarwhd(const Vector& x, Vector& g) {
  double f = 0.0;
  g.setZero();
  for (Index i = 0; i < x.size(); ++i) {
    const double t = x[i] * x[i] - x[0];
    const double u = x[i] - 1.0;
    f += 4.0 * t * t + u * u;
    g[i] += 16.0 * x[i] * t + 2.0 * u;
    g[0] -= 8.0 * t;
  }
  return f;
}

// power: (sum_i i x_i^2)^2 with 1-based i, start 1
double power(const Vector& x, Vector& g) {
  double s = 0.0;
  for (Index i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * x[i] * x[i];
  for (Index i = 0; i < x.size(); ++i) g[i] = 4.0 * s * static_cast<double>(i + 1) * x[i];
  return s * s;
}

// tridia: (x_0 - 1)^2 + sum_{i=2}^{n} i (2 x_i - x_{i-1})^2 (1-based), start 1
double tridia(const Vector& x, Vector& g) {
  g.setZero();
  const double u = x[0] - 1.0;
  double f = u * u;
  g[0] = 2.0 * u;
  for (Index i = 1; i < x.size(); ++i) {
    const double w = static_cast<double>(i + 1);
    const double t = 2.0 * x[i] - x[i - 1];
    f += w * t * t;
    g[i] += 4.0 * w * t;
    g[i - 1] -= 2.0 * w * t;
  }
  return f;
}

// woods, per block of four:
//   100 (x2 - x1^2)^2 + (1 - x1)^2 + 90 (x4 - x3^2)^2 + (1 - x3)^2
//   + 10.1 ((x2 - 1)^2 + (x4 - 1)^2) + 19.8 (x2 - 1)(x4 - 1)
// start (-3, -1, -3, -1, ...)
double woods(const Vector& x, Vector& g) {
  double f = 0.0;
  for (Index k = 0; k + 3 < x.size(); k += 4) {
    const double x1 = x[k], x2 = x[k + 1], x3 = x[k + 2], x4 = x[k + 3];
    const double t1 = x2 - x1 * x1;
    const double t3 = x4 - x3 * x3;
    f += 100.0 * t1 * t1 + (1.0 - x1) * (1.0 - x1) + 90.0 * t3 * t3 + (1.0 - x3) * (1.0 - x3) +
         10.1 * ((x2 - 1.0) * (x2 - 1.0) + (x4 - 1.0) * (x4 - 1.0)) +
         19.8 * (x2 - 1.0) * (x4 - 1.0);
    g[k] = -400.0 * x1 * t1 - 2.0 * (1.0 - x1);
    g[k + 1] = 200.0 * t1 + 20.2 * (x2 - 1.0) + 19.8 * (x4 - 1.0);
    g[k + 2] = -360.0 * x3 * t3 - 2.0 * (1.0 - x3);
    g[k + 3] = 180.0 * t3 + 20.2 * (x4 - 1.0) + 19.8 * (x2 - 1.0);
  }
  return f;
}

Vector woods_start(Index n) {
  Vector x(n);
  for (Index i = 0; i < n; ++i) x[i] = (i % 2 == 0) ? -3.0 : -1.0;
  return x;
}

// engval1: sum_{i<n-1} (x_i^2 + x_{i+1}^2)^2 + (-4 x_i + 3), start 2
double engval1(const Vector& x, Vector& g) {
  double f = 0.0;
  g.setZero();
  for (Index i = 0; i + 1 < x.size(); ++i) {
    const double q = x[i] * x[i] + x[i + 1] * x[i + 1];
    f += q * q - 4.0 * x[i] + 3.0;
    g[i] += 4.0 * q * x[i] - 4.0;
    g[i + 1] += 4.0 * q * x[i + 1];
  }
  return f;
}

template <int V>
Vector constant_start(Index n) {
  return Vector::Constant(n, static_cast<double>(V));
}

constexpr std::array<ProblemDef, 12> kProblems{{
    {"srosenbr", 2, 2, srosenbr_start, srosenbr},
    {"arwhead", 2, 1, constant_start<1>, arwhead},
    {"dqdrtic", 3, 1, constant_start<3>, dqdrtic},
    {"dqrtic", 1, 1, constant_start<2>, dqrtic},
    {"eg2", 2, 1, constant_start<0>, eg2},
    {"cosine", 2, 1, constant_start<1>, cosine},
    {"nondia", 2, 1, constant_start<-1>, nondia},
    {"liarwhd", 2, 1, constant_start<4>, liarwhd},
    {"power", 1, 1, constant_start<1>, power},
    {"tridia", 2, 1, constant_start<1>, tridia},
    {"woods", 4, 4, woods_start, woods},
    {"engval1", 2, 1, constant_start<2>, engval1},
}};

constexpr auto kNames = [] {
  std::array<std::string_view, kProblems.size()> names{};
  for (std::size_t i = 0; i < kProblems.size(); ++i) names[i] = kProblems[i].name;
  return names;
}();

const ProblemDef* find(std::string_view name) noexcept {
  for (const auto& def : kProblems) {
    if (def.name == name) return &def;
  }
  return nullptr;
}

}  // namespace

std::span<const std::string_view> problem_names() noexcept { return kNames; }

bool is_valid_dimension(std::string_view name, Index n) noexcept {
  const ProblemDef* def = find(name);
  return def != nullptr && n >= def->min_n && n % def->block == 0;
}

Index nearest_valid_dimension(std::string_view name, Index n) {
  const ProblemDef* def = find(name);
  if (def == nullptr) throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
  const Index m = n - n % def->block;
  if (m < def->min_n) {
    throw std::invalid_argument("no valid dimension <= " + std::to_string(n) + " for " +
                                std::string(name));
  }
  return m;
}

ProblemInstance make_problem(std::string_view name, Index n) {
  const ProblemDef* def = find(name);
  if (def == nullptr) throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
  if (!is_valid_dimension(name, n)) {
    throw std::invalid_argument("invalid dimension " + std::to_string(n) + " for " +
                                std::string(name));
  }
  return ProblemInstance{std::string(def->name), n, def->eval, def->start(n)};
}

double fd_gradient_check(const Objective& eval, const Vector& x, std::uint64_t seed) {
  const Index n = x.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const double cbrt_eps = std::cbrt(kMachineEpsilon);

  Vector g(n);
  const double f0 = eval(x, g);
  if (!std::isfinite(f0) || !g.allFinite()) return kInf;
  const double scale = std::max(1.0, g.lpNorm<Eigen::Infinity>());

  std::vector<Index> coords;
  if (n <= 200) {
    coords.resize(n);
    for (Index i = 0; i < n; ++i) coords[i] = i;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    coords.resize(50);
    for (auto& c : coords) c = pick(rng);
  }

  Vector xp = x;
  Vector scratch(n);
  double worst = 0.0;
  for (Index i : coords) {
    const double h = cbrt_eps * std::max(1.0, std::abs(x[i]));
    xp[i] = x[i] + h;
    const double fp = eval(xp, scratch);
    xp[i] = x[i] - h;
    const double fm = eval(xp, scratch);
    xp[i] = x[i];
    if (!std::isfinite(fp) || !std::isfinite(fm)) return kInf;
    const double fd = (fp - fm) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - g[i]) / scale);
  }
  return worst;
}

double fd_gradient_check(const ProblemInstance& problem, const Vector& x, std::uint64_t seed) {
  if (x.size() != problem.n) throw std::invalid_argument("fd_gradient_check: dimension mismatch");
  return fd_gradient_check(problem.eval, x, seed);
}

}  // namespace mss
