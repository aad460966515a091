#include "erpkit/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "erpkit/errors.hpp"
#include "erpkit/textio.hpp"

static_assert(std::endian::native == std::endian::little,
              "sample files are little-endian; add byte swapping for this platform");

namespace erp {
namespace {

namespace fs = std::filesystem;

fs::path header_path(const fs::path& base) { return fs::path(base).concat(".erph"); }
fs::path data_path(const fs::path& base) { return fs::path(base).concat(".erpd"); }
fs::path events_path(const fs::path& base) { return fs::path(base).concat(".events.csv"); }

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw DataError("write failed for '" + path.string() + "'");
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

void write_f32_matrix(const fs::path& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  std::vector<float> row(std::size_t(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) row[std::size_t(c)] = float(m(r, c));
    out.write(reinterpret_cast<const char*>(row.data()),
              std::streamsize(row.size() * sizeof(float)));
  }
  if (!out) throw DataError("write failed for '" + path.string() + "'");
}

Eigen::MatrixXd read_f32_matrix(const fs::path& path, Eigen::Index rows, Eigen::Index cols) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  in.seekg(0, std::ios::end);
  const auto bytes = std::uint64_t(in.tellg());
  in.seekg(0);
  const std::uint64_t expected = std::uint64_t(rows) * std::uint64_t(cols) * sizeof(float);
  if (bytes != expected)
    throw DataError("'" + path.string() + "' holds " + std::to_string(bytes) +
                    " bytes, expected " + std::to_string(expected) + " (" +
                    std::to_string(rows) + " x " + std::to_string(cols) + " float32)");
  Eigen::MatrixXd m(rows, cols);
  std::vector<float> row(std::size_t(cols));
  for (Eigen::Index r = 0; r < rows; ++r) {
    in.read(reinterpret_cast<char*>(row.data()), std::streamsize(row.size() * sizeof(float)));
    if (!in) throw DataError("short read from '" + path.string() + "'");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = double(row[std::size_t(c)]);
  }
  return m;
}

std::vector<Event> read_events_csv(const fs::path& path) {
  const std::string text = read_text_file(path);
  std::vector<Event> events;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line != "sample_index,task,condition,response,rt_ms")
        throw DataError("'" + path.string() + "': unexpected events header '" + line + "'");
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 5)
      throw DataError("'" + path.string() + "': expected 5 event fields, got " +
                      std::to_string(f.size()));
    Event ev;
    ev.sample_index = parse_int(f[0], "sample_index");
    ev.task = task_from_string(trim(f[1]));
    ev.condition = condition_from_string(trim(f[2]));
    ev.response = response_from_string(trim(f[3]));
    if (!trim(f[4]).empty()) ev.rt_ms = parse_double(f[4], "rt_ms");
    events.push_back(ev);
  }
  return events;
}

void write_events_csv(const std::vector<Event>& events, const fs::path& path) {
  std::string out = "sample_index,task,condition,response,rt_ms\n";
  for (const auto& ev : events) {
    out += std::to_string(ev.sample_index);
    out += ',';
    out += to_string(ev.task);
    out += ',';
    out += to_string(ev.condition);
    out += ',';
    out += to_string(ev.response);
    out += ',';
    if (ev.rt_ms) out += fmt_double(*ev.rt_ms);
    out += '\n';
  }
  write_text_file(path, out);
}

void write_recording(const Recording& r, const fs::path& base) {
  r.validate();
  std::string header;
  header += "channels:" + std::to_string(r.montage.size()) + "\n";
  header += "rate_hz:" + fmt_double(r.sample_rate) + "\n";
  header += "labels:" + join(r.montage.labels(), ',') + "\n";
  header += "eog:" + join(r.montage.eog_labels(), ',') + "\n";
  write_text_file(header_path(base), header);
  write_f32_matrix(data_path(base), r.data);
  write_events_csv(r.events, events_path(base));
}

Recording read_recording(const fs::path& base) {
  const std::string header = read_text_file(header_path(base));
  std::size_t n_channels = 0;
  double rate = 0;
  std::vector<std::string> labels, eog;
  bool have_channels = false, have_rate = false, have_labels = false;

  std::istringstream in(header);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    const auto pos = line.find(':');
    if (pos == std::string::npos)
      throw DataError("'" + header_path(base).string() + "': malformed line '" + line + "'");
    const std::string key = line.substr(0, pos);
    const std::string value = line.substr(pos + 1);
    if (key == "channels") {
      n_channels = std::size_t(parse_int(value, "channels"));
      have_channels = true;
    } else if (key == "rate_hz") {
      rate = parse_double(value, "rate_hz");
      have_rate = true;
    } else if (key == "labels") {
      for (auto& l : split(value, ',')) labels.push_back(trim(l));
      have_labels = true;
    } else if (key == "eog") {
      if (!trim(value).empty())
        for (auto& l : split(value, ',')) eog.push_back(trim(l));
    } else {
      throw DataError("'" + header_path(base).string() + "': unknown header key '" + key + "'");
    }
  }
  if (!have_channels || !have_rate || !have_labels)
    throw DataError("'" + header_path(base).string() + "': missing channels/rate_hz/labels");
  if (labels.size() != n_channels)
    throw DataError("'" + header_path(base).string() + "': " + std::to_string(labels.size()) +
                    " labels for " + std::to_string(n_channels) + " channels");

  std::vector<ElectrodeChannel> chans;
  for (const auto& label : labels) chans.push_back({label, standard_position(label)});

  Recording r;
  r.sample_rate = rate;
  r.montage = Montage(std::move(chans), eog);

  // Sample count is implied by the data file size; it must divide evenly.
  std::ifstream data(data_path(base), std::ios::binary);
  if (!data) throw DataError("cannot open '" + data_path(base).string() + "'");
  data.seekg(0, std::ios::end);
  const auto bytes = std::uint64_t(data.tellg());
  data.close();
  const std::uint64_t row_bytes = std::uint64_t(n_channels) * sizeof(float);
  if (row_bytes == 0 || bytes % row_bytes != 0)
    throw DataError("'" + data_path(base).string() + "': " + std::to_string(bytes) +
                    " bytes is not a whole number of " + std::to_string(n_channels) +
                    "-channel float32 frames (channel-count mismatch?)");
  const Eigen::Index n_samples = Eigen::Index(bytes / row_bytes);
  r.data = read_f32_matrix(data_path(base), Eigen::Index(n_channels), n_samples);

  if (fs::exists(events_path(base))) r.events = read_events_csv(events_path(base));
  r.validate();
  return r;
}

}  // namespace erp
