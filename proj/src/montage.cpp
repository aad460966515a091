#include "erpkit/montage.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "erpkit/errors.hpp"

namespace erp {
namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

Eigen::Vector3d from_angles(double theta_deg, double phi_deg) {
  const double th = theta_deg * kDegToRad;
  const double ph = phi_deg * kDegToRad;
  return {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
}

Eigen::Vector3d arc_midpoint(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return (a + b).normalized();
}

// 10-20 arc construction. theta = polar angle from the vertex, phi = azimuth
// counterclockwise from the right ear (+x), nasion at +y. The outer ring sits
// at theta 72 (10% in from the nasion-inion plane), midline rows step by 18.
// 10-10 intermediates are great-circle midpoints of their 10-20 neighbours.
std::map<std::string, Eigen::Vector3d> build_positions() {
  std::map<std::string, Eigen::Vector3d> p;
  p["Fp1"] = from_angles(72, 108);
  p["Fp2"] = from_angles(72, 72);
  p["F7"] = from_angles(72, 144);
  p["F8"] = from_angles(72, 36);
  p["T7"] = from_angles(72, 180);
  p["T8"] = from_angles(72, 0);
  p["P7"] = from_angles(72, 216);
  p["P8"] = from_angles(72, 324);
  p["O1"] = from_angles(72, 252);
  p["O2"] = from_angles(72, 288);
  p["Oz"] = from_angles(72, 270);

  p["AFz"] = from_angles(54, 90);
  p["Fz"] = from_angles(36, 90);
  p["FCz"] = from_angles(18, 90);
  p["Cz"] = from_angles(0, 0);
  p["CPz"] = from_angles(18, 270);
  p["Pz"] = from_angles(36, 270);
  p["POz"] = from_angles(54, 270);

  p["C3"] = arc_midpoint(p["T7"], p["Cz"]);
  p["C4"] = arc_midpoint(p["T8"], p["Cz"]);
  p["F3"] = arc_midpoint(p["F7"], p["Fz"]);
  p["F4"] = arc_midpoint(p["F8"], p["Fz"]);
  p["P3"] = arc_midpoint(p["P7"], p["Pz"]);
  p["P4"] = arc_midpoint(p["P8"], p["Pz"]);

  p["FC1"] = arc_midpoint(p["F3"], p["Cz"]);
  p["FC2"] = arc_midpoint(p["F4"], p["Cz"]);
  p["FC5"] = arc_midpoint(p["F7"], p["C3"]);
  p["FC6"] = arc_midpoint(p["F8"], p["C4"]);
  p["CP1"] = arc_midpoint(p["P3"], p["Cz"]);
  p["CP2"] = arc_midpoint(p["P4"], p["Cz"]);
  p["CP5"] = arc_midpoint(p["P7"], p["C3"]);
  p["CP6"] = arc_midpoint(p["P8"], p["C4"]);

  // EOG sites: below the left eye (vertical), right outer canthus (horizontal).
  p["VEOG"] = from_angles(113, 105);
  p["HEOG"] = from_angles(103, 22);
  return p;
}

const std::map<std::string, Eigen::Vector3d>& positions() {
  static const std::map<std::string, Eigen::Vector3d> p = build_positions();
  return p;
}

const std::vector<std::string>& default_order() {
  static const std::vector<std::string> order{
      "Fp1", "Fp2", "AFz", "F7",  "F3",  "Fz",  "F4",  "F8",  "FC5", "FC1", "FCz",
      "FC2", "FC6", "T7",  "C3",  "Cz",  "C4",  "T8",  "CP5", "CP1", "CPz", "CP2",
      "CP6", "P7",  "P3",  "Pz",  "P4",  "P8",  "POz", "O1",  "Oz",  "O2",
      "VEOG", "HEOG"};
  return order;
}

}  // namespace

Montage::Montage(std::vector<ElectrodeChannel> channels, std::vector<std::string> eog,
                 std::pair<std::string, std::string> reference)
    : channels_(std::move(channels)), eog_(std::move(eog)), reference_(std::move(reference)) {
  std::set<std::string> seen;
  for (const auto& ch : channels_) {
    if (!seen.insert(ch.label).second)
      throw DataError("montage: duplicate channel label '" + ch.label + "'");
    if (std::abs(ch.position.norm() - 1.0) > 1e-9)
      throw DataError("montage: position of '" + ch.label + "' is not on the unit sphere");
  }
  for (const auto& label : eog_) {
    if (!seen.count(label))
      throw DataError("montage: EOG label '" + label + "' not among channels");
  }
}

bool Montage::has(const std::string& label) const {
  return std::any_of(channels_.begin(), channels_.end(),
                     [&](const ElectrodeChannel& c) { return c.label == label; });
}

std::size_t Montage::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < channels_.size(); ++i)
    if (channels_[i].label == label) return i;
  throw DataError("montage: unknown channel label '" + label + "'");
}

bool Montage::is_eog(const std::string& label) const {
  return std::find(eog_.begin(), eog_.end(), label) != eog_.end();
}

bool Montage::is_eog(std::size_t index) const {
  return is_eog(channels_.at(index).label);
}

std::vector<std::string> Montage::labels() const {
  std::vector<std::string> out;
  out.reserve(channels_.size());
  for (const auto& c : channels_) out.push_back(c.label);
  return out;
}

std::vector<std::size_t> Montage::scalp_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < channels_.size(); ++i)
    if (!is_eog(channels_[i].label)) out.push_back(i);
  return out;
}

std::vector<std::string> Montage::scalp_labels() const {
  std::vector<std::string> out;
  for (const auto& c : channels_)
    if (!is_eog(c.label)) out.push_back(c.label);
  return out;
}

Montage Montage::subset(const std::vector<std::string>& labels) const {
  std::vector<ElectrodeChannel> chans;
  std::vector<std::string> eog;
  for (const auto& label : labels) {
    chans.push_back(channels_[index_of(label)]);
    if (is_eog(label)) eog.push_back(label);
  }
  return Montage(std::move(chans), std::move(eog), reference_);
}

const Montage& default_montage() {
  static const Montage m = [] {
    std::vector<ElectrodeChannel> chans;
    for (const auto& label : default_order())
      chans.push_back({label, positions().at(label)});
    return Montage(std::move(chans), {"VEOG", "HEOG"});
  }();
  return m;
}

Eigen::Vector3d standard_position(const std::string& label) {
  auto it = positions().find(label);
  if (it == positions().end())
    throw DataError("no standard position for channel label '" + label + "'");
  return it->second;
}

}  // namespace erp
