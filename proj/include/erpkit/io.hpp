#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <string>

#include "erpkit/recording.hpp"

namespace erp {

// Recordings are stored as a triple sharing one base path:
//   <base>.erph        text header: channels/rate_hz/labels/eog
//   <base>.erpd        float32 little-endian samples, channel-major
//   <base>.events.csv  sample_index,task,condition,response,rt_ms
Recording read_recording(const std::filesystem::path& base);
void write_recording(const Recording& r, const std::filesystem::path& base);

// Raw float32 little-endian matrix files (also used for lead fields).
void write_f32_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_f32_matrix(const std::filesystem::path& path, Eigen::Index rows,
                                Eigen::Index cols);

std::vector<Event> read_events_csv(const std::filesystem::path& path);
void write_events_csv(const std::vector<Event>& events, const std::filesystem::path& path);

}  // namespace erp
