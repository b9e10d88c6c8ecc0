#pragma once

// Limited-memory BFGS with Armijo backtracking. Enough optimizer for a
// convex logistic objective; not a general nonconvex workhorse so the
// safeguards stay simple: curvature pairs are skipped when s.y is tiny and
// a failed line search ends the run with converged=false.

#include <cmath>
#include <deque>
#include <utility>

#include <Eigen/Dense>

#include "sentinel/common.hpp"

namespace sentinel {

struct LbfgsOptions {
  int history = 10;
  double tolerance = 1e-6;  // on the gradient infinity norm
  int max_iterations = 1000;
};

struct LbfgsResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// fg(x, grad) must fill grad and return f(x).
template <typename F>
LbfgsResult lbfgs_minimize(F&& fg, Eigen::VectorXd x0, LbfgsOptions opts = {}) {
  if (opts.history <= 0 || opts.tolerance <= 0 || opts.max_iterations <= 0)
    throw contract_error("lbfgs options must be positive");

  LbfgsResult res;
  res.x = std::move(x0);
  Eigen::VectorXd grad(res.x.size()), new_grad(res.x.size());
  res.value = fg(res.x, grad);

  std::deque<std::pair<Eigen::VectorXd, Eigen::VectorXd>> pairs;  // (s, y)
  std::deque<double> rho;

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    res.iterations = iter;
    if (grad.lpNorm<Eigen::Infinity>() <= opts.tolerance) {
      res.converged = true;
      return res;
    }

    // two-loop recursion for the search direction
    Eigen::VectorXd q = grad;
    std::deque<double> alpha(pairs.size());
    for (size_t i = pairs.size(); i-- > 0;) {
      alpha[i] = rho[i] * pairs[i].first.dot(q);
      q -= alpha[i] * pairs[i].second;
    }
    if (!pairs.empty()) {
      const auto& [s, y] = pairs.back();
      q *= s.dot(y) / y.squaredNorm();
    }
    for (size_t i = 0; i < pairs.size(); ++i) {
      double beta = rho[i] * pairs[i].second.dot(q);
      q += (alpha[i] - beta) * pairs[i].first;
    }
    Eigen::VectorXd dir = -q;

    double slope = grad.dot(dir);
    if (slope >= 0) {  // not a descent direction; restart from steepest descent
      dir = -grad;
      slope = -grad.squaredNorm();
      pairs.clear();
      rho.clear();
    }

    double step = pairs.empty() ? std::min(1.0, 1.0 / grad.template lpNorm<1>()) : 1.0;
    double new_value = 0.0;
    Eigen::VectorXd new_x;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      new_x = res.x + step * dir;
      new_value = fg(new_x, new_grad);
      if (std::isfinite(new_value) && new_value <= res.value + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) return res;  // converged stays false

    Eigen::VectorXd s = new_x - res.x;
    Eigen::VectorXd y = new_grad - grad;
    double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      pairs.emplace_back(std::move(s), std::move(y));
      rho.push_back(1.0 / sy);
      if (pairs.size() > static_cast<size_t>(opts.history)) {
        pairs.pop_front();
        rho.pop_front();
      }
    }
    res.x = std::move(new_x);
    res.value = new_value;
    grad.swap(new_grad);
  }
  res.converged = grad.lpNorm<Eigen::Infinity>() <= opts.tolerance;
  return res;
}

}  // namespace sentinel
