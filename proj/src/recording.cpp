#include "erpkit/recording.hpp"

#include <cmath>

#include "erpkit/errors.hpp"

namespace erp {

std::string to_string(Task t) {
  return t == Task::inhibition ? "inhibition" : "set_shifting";
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::stimulus: return "stimulus";
    case Condition::distracter: return "distracter";
    case Condition::similar: return "similar";
    case Condition::pair: return "pair";
    case Condition::process: return "process";
  }
  return "?";
}

std::string to_string(Response r) {
  switch (r) {
    case Response::correct: return "correct";
    case Response::incorrect: return "incorrect";
    case Response::none: return "none";
  }
  return "?";
}

Task task_from_string(const std::string& s) {
  if (s == "inhibition") return Task::inhibition;
  if (s == "set_shifting") return Task::set_shifting;
  throw DataError("unknown task '" + s + "'");
}

Condition condition_from_string(const std::string& s) {
  if (s == "stimulus") return Condition::stimulus;
  if (s == "distracter") return Condition::distracter;
  if (s == "similar") return Condition::similar;
  if (s == "pair") return Condition::pair;
  if (s == "process") return Condition::process;
  throw DataError("unknown condition '" + s + "'");
}

Response response_from_string(const std::string& s) {
  if (s == "correct") return Response::correct;
  if (s == "incorrect") return Response::incorrect;
  if (s == "none") return Response::none;
  throw DataError("unknown response '" + s + "'");
}

bool condition_valid_for(Task task, Condition cond) {
  if (task == Task::inhibition)
    return cond == Condition::stimulus || cond == Condition::distracter;
  return cond == Condition::similar || cond == Condition::pair || cond == Condition::process;
}

const std::vector<Condition>& conditions_of(Task task) {
  static const std::vector<Condition> inhib{Condition::stimulus, Condition::distracter};
  static const std::vector<Condition> shift{Condition::similar, Condition::pair,
                                            Condition::process};
  return task == Task::inhibition ? inhib : shift;
}

void Recording::validate() const {
  if (sample_rate <= 0) throw DataError("recording: sample_rate must be > 0");
  if (data.rows() != Eigen::Index(montage.size()))
    throw DataError("recording: data has " + std::to_string(data.rows()) +
                    " rows but montage declares " + std::to_string(montage.size()) +
                    " channels");
  if (!data.allFinite()) throw DataError("recording: non-finite sample value");
  for (const auto& ev : events) {
    if (ev.sample_index < 0 || ev.sample_index >= n_samples())
      throw DataError("recording: event at sample " + std::to_string(ev.sample_index) +
                      " out of bounds [0, " + std::to_string(n_samples()) + ")");
    if (!condition_valid_for(ev.task, ev.condition))
      throw DataError("recording: condition '" + to_string(ev.condition) +
                      "' not in the vocabulary of task '" + to_string(ev.task) + "'");
    if (ev.rt_ms && (*ev.rt_ms < 0 || !std::isfinite(*ev.rt_ms)))
      throw DataError("recording: negative or non-finite rt_ms");
  }
}

Recording select_channels(const Recording& r, const std::vector<std::string>& labels) {
  Recording out;
  out.sample_rate = r.sample_rate;
  out.events = r.events;
  out.montage = r.montage.subset(labels);  // throws on unknown label
  out.data.resize(Eigen::Index(labels.size()), r.n_samples());
  for (std::size_t i = 0; i < labels.size(); ++i)
    out.data.row(Eigen::Index(i)) = r.data.row(Eigen::Index(r.montage.index_of(labels[i])));
  return out;
}

Eigen::Index Epoch::sample_at_or_after(double t_ms) const {
  const double k = (t_ms - pre_ms) * sample_rate / 1000.0;
  return Eigen::Index(std::ceil(k - 1e-9));
}

double default_post_ms(Task task) {
  return task == Task::inhibition ? 700.0 : 900.0;
}

std::size_t ErpAverage::channel_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw DataError("average: unknown channel label '" + label + "'");
}

}  // namespace erp
