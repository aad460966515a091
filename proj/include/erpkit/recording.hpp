#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "erpkit/montage.hpp"

namespace erp {

enum class Task { inhibition, set_shifting };
enum class Condition { stimulus, distracter, similar, pair, process };
enum class Response { correct, incorrect, none };

std::string to_string(Task t);
std::string to_string(Condition c);
std::string to_string(Response r);
Task task_from_string(const std::string& s);
Condition condition_from_string(const std::string& s);
Response response_from_string(const std::string& s);

// The trial-condition vocabulary is closed per task.
bool condition_valid_for(Task task, Condition cond);
const std::vector<Condition>& conditions_of(Task task);

struct Event {
  std::int64_t sample_index = 0;
  Task task = Task::inhibition;
  Condition condition = Condition::stimulus;
  Response response = Response::none;
  std::optional<double> rt_ms;
};

// Multichannel time series (uV), channel-major, with montage and event list.
struct Recording {
  double sample_rate = 1000.0;
  Eigen::MatrixXd data;  // channels x samples
  Montage montage;
  std::vector<Event> events;

  Eigen::Index n_channels() const { return data.rows(); }
  Eigen::Index n_samples() const { return data.cols(); }

  // Checks all type invariants; throws DataError on violation.
  void validate() const;
};

// Restricts `r` to `labels`, preserving the requested order.
Recording select_channels(const Recording& r, const std::vector<std::string>& labels);

struct RejectReason {
  std::string channel;
  std::int64_t sample = 0;  // sample index within the epoch
};

// One event-locked window. Sample k is at pre_ms + k * 1000 / sample_rate.
struct Epoch {
  Event event;
  double pre_ms = -100.0;  // negative
  double post_ms = 700.0;
  double sample_rate = 1000.0;
  Eigen::MatrixXd data;  // channels x samples
  bool baseline_corrected = false;
  bool rejected = false;
  std::optional<RejectReason> reject_reason;

  Eigen::Index n_samples() const { return data.cols(); }
  double time_ms(Eigen::Index k) const { return pre_ms + 1000.0 * double(k) / sample_rate; }
  // Smallest sample index with time >= t_ms.
  Eigen::Index sample_at_or_after(double t_ms) const;
};

// Standard epoch windows: inhibition [-100, 700) ms, set-shifting [-100, 900) ms.
double default_post_ms(Task task);

// Per-condition time-domain average over non-rejected epochs.
struct ErpAverage {
  Task task = Task::inhibition;
  std::optional<Condition> condition;  // empty = grand average over conditions
  std::size_t n_epochs = 0;
  double pre_ms = -100.0;
  double sample_rate = 1000.0;
  std::vector<std::string> labels;
  Eigen::MatrixXd mean;      // channels x samples, uV
  Eigen::MatrixXd variance;  // population variance, same shape

  Eigen::Index n_samples() const { return mean.cols(); }
  double time_ms(Eigen::Index k) const { return pre_ms + 1000.0 * double(k) / sample_rate; }
  std::size_t channel_index(const std::string& label) const;
};

}  // namespace erp
