#pragma once

#include <cstdint>
#include <vector>

#include "erpkit/recording.hpp"

namespace erp {

struct PairedTTestResult {
  double t = 0.0;
  std::int64_t df = 0;
  double p_two_tailed = 1.0;
  double sed = 0.0;  // standard error of the mean difference
  std::size_t n = 0;
  bool degenerate = false;  // zero-variance differences
};

struct BehaviorSummary {
  Task task = Task::inhibition;
  double accuracy_pct = 0.0;
  double mean_rt_ms = 0.0;
  std::size_t n_trials = 0;
};

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation,
// converged to ~1e-12.
double incomplete_beta_reg(double a, double b, double x);

// Two-tailed Student-t tail probability: p = I_{df/(df+t^2)}(df/2, 1/2).
double p_from_t(double t, std::int64_t df);

PairedTTestResult paired_t_test(const std::vector<double>& a, const std::vector<double>& b);

struct ErpComponent;  // components.hpp
double latency_ratio(const ErpComponent& c1, const ErpComponent& c2);

BehaviorSummary behavior_summary(const std::vector<Event>& events, Task task);

}  // namespace erp
