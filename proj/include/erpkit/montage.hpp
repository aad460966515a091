#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace erp {

struct ElectrodeChannel {
  std::string label;
  Eigen::Vector3d position;  // unit sphere, +x right ear, +y nasion, +z vertex
};

// Electrode layout: ordered channels with unit-sphere positions, EOG subset,
// and the (metadata-only) reference pair.
class Montage {
 public:
  Montage() = default;
  Montage(std::vector<ElectrodeChannel> channels, std::vector<std::string> eog,
          std::pair<std::string, std::string> reference = {"M1", "M2"});

  const std::vector<ElectrodeChannel>& channels() const { return channels_; }
  const std::vector<std::string>& eog_labels() const { return eog_; }
  const std::pair<std::string, std::string>& reference() const { return reference_; }

  std::size_t size() const { return channels_.size(); }
  bool has(const std::string& label) const;
  // Throws DataError for unknown labels.
  std::size_t index_of(const std::string& label) const;
  bool is_eog(const std::string& label) const;
  bool is_eog(std::size_t index) const;

  std::vector<std::string> labels() const;
  // Indices of non-EOG channels, in montage order.
  std::vector<std::size_t> scalp_indices() const;
  std::vector<std::string> scalp_labels() const;

  // Sub-montage restricted to `labels`, order as requested.
  Montage subset(const std::vector<std::string>& labels) const;

 private:
  std::vector<ElectrodeChannel> channels_;
  std::vector<std::string> eog_;
  std::pair<std::string, std::string> reference_;
};

// The built-in 32-channel scalp layout (10-20 arc positions) plus VEOG/HEOG.
const Montage& default_montage();

// Position of `label` in the built-in layout. Throws DataError if unknown.
Eigen::Vector3d standard_position(const std::string& label);

inline const std::vector<std::string>& frontal_cluster() {
  static const std::vector<std::string> c{"F3", "F7", "Fz", "F4", "F8"};
  return c;
}
inline const std::vector<std::string>& parietal_cluster() {
  static const std::vector<std::string> c{"P3", "P7", "Pz", "P4", "P8"};
  return c;
}

}  // namespace erp
