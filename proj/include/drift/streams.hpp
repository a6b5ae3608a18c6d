#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace drift {

// Instance positions (0-based) at which a new concept begins.
struct ChangePointLog {
  std::vector<std::size_t> positions;
};

// A labeled binary-class stream stored row-major: dim features per instance.
// dim may be 0 (label-only streams, e.g. the bit-stream fed to a
// prior-only classifier).
class LabeledStream {
 public:
  LabeledStream() = default;
  explicit LabeledStream(std::size_t dim) : dim_(dim) {}

  void push_back(std::span<const double> features, int label);
  void reserve(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  std::size_t dim() const { return dim_; }
  std::span<const double> features(std::size_t i) const {
    return {features_.data() + i * dim_, dim_};
  }
  int label(std::size_t i) const { return labels_[i]; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> features_;
  std::vector<std::uint8_t> labels_;
};

struct BitStreamConfig {
  std::size_t segment_length = 600;  // bits per stable concept
  int n_changes = 30;
  double mag_lo = 0.1;  // |mu_{j+1} - mu_j| lower bound
  double mag_hi = 0.3;  // and upper bound
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

struct BitStream {
  std::vector<std::uint8_t> bits;
  std::vector<double> segment_means;
  ChangePointLog changes;
};

// Bernoulli bit-stream with (n_changes + 1) stable segments. Consecutive
// segment means differ by a magnitude in [mag_lo, mag_hi], stay inside
// [0.05, 0.95], and alternate across 0.5 so that every change raises the
// error rate of a predictor fitted to the previous concept. Throws
// std::invalid_argument when no mean sequence can satisfy the magnitude
// interval.
BitStream gen_bitstream(const BitStreamConfig& config);

struct GeneratedStream {
  LabeledStream stream;
  ChangePointLog changes;
};

// SEA concepts: 40,000 instances, features uniform on [0,10]^3, label = 1 iff
// f1 + f2 <= theta with per-concept thresholds (8, 9, 7, 9.5) switching at
// 10k / 15k / 30k; labels flipped independently with probability `noise`.
GeneratedStream gen_sea(double noise, std::uint64_t seed);

// Rotating hyperplane: 40,000 instances, two relevant features plus one noise
// feature, all uniform on [0,10]. Label = 1 on the positive side of a line
// through (5,5) with orientation phi; phi = 0 (vertical split) for the first
// 10k instances, then advances by angle_deg at every 1,000-instance boundary,
// each advance logged as a change point.
GeneratedStream gen_hyperplane(double angle_deg, std::uint64_t seed);

// Wraps a bit sequence as a zero-feature labeled stream (labels = bits).
LabeledStream bits_as_labels(std::span<const std::uint8_t> bits);

// Elec2 loader: CSV with 8 numeric feature columns and a final UP/DOWN (or
// 1/0) label column, optional header. Features are min-max scaled to [0,1]
// when any column leaves that range. Expects 45,312 rows; a differing count
// is reported on stderr but not fatal. Unparseable rows throw with the line
// number.
LabeledStream load_elec2(const std::filesystem::path& path);

// Stream dump: CSV with header f1..fd,label; change points as one index per
// line in a sidecar writer.
void write_stream_csv(std::ostream& os, const LabeledStream& stream);
void write_changepoints(std::ostream& os, const ChangePointLog& log);

}  // namespace drift
