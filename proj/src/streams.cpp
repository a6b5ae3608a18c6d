#include "drift/streams.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "drift/rng.hpp"

namespace drift {

namespace {

constexpr double kMeanFloor = 0.05;
constexpr double kMeanCeil = 0.95;
// Keep segment means strictly off 0.5 so each concept has a definite
// majority class.
constexpr double kCrossMargin = 0.01;

}  // namespace

void LabeledStream::push_back(std::span<const double> features, int label) {
  if (features.size() != dim_) {
    throw std::invalid_argument("LabeledStream: feature dimensionality mismatch");
  }
  features_.insert(features_.end(), features.begin(), features.end());
  labels_.push_back(static_cast<std::uint8_t>(label != 0));
}

void LabeledStream::reserve(std::size_t n) {
  features_.reserve(n * dim_);
  labels_.reserve(n);
}

void BitStreamConfig::validate() const {
  if (segment_length < 1) throw std::invalid_argument("bitstream: segment_length must be >= 1");
  if (n_changes < 0) throw std::invalid_argument("bitstream: n_changes must be >= 0");
  if (!(0.0 < mag_lo && mag_lo <= mag_hi && mag_hi < 1.0)) {
    throw std::invalid_argument("bitstream: need 0 < mag_lo <= mag_hi < 1");
  }
}

BitStream gen_bitstream(const BitStreamConfig& config) {
  config.validate();
  const double lo = config.mag_lo, hi = config.mag_hi;
  // The mean walk alternates between a low band and a high band around 0.5.
  // Band edges keep every mean inside [0.05, 0.95], off 0.5, and able to
  // reach the opposite band with a magnitude from [lo, hi].
  const double below_max = std::min(0.5 - kCrossMargin, kMeanCeil - lo);
  const double above_min = std::max(0.5 + kCrossMargin, kMeanFloor + lo);
  const double below_min = std::max(kMeanFloor, above_min - hi);
  const double above_max = std::min(kMeanCeil, below_max + hi);
  if (below_min > below_max || above_min > above_max) {
    throw std::invalid_argument("bitstream: infeasible magnitude interval");
  }

  Rng rng(config.seed);
  double mu = rng.uniform(0.2, 0.8);
  if (mu < 0.5) {
    mu = std::min(std::max(mu, below_min), below_max);
  } else {
    mu = std::max(std::min(mu, above_max), above_min);
  }

  std::vector<double> means;
  means.reserve(config.n_changes + 1);
  means.push_back(mu);
  for (int j = 0; j < config.n_changes; ++j) {
    double tlo, thi;
    if (mu < 0.5) {
      tlo = std::max(above_min, mu + lo);
      thi = std::min(above_max, mu + hi);
    } else {
      tlo = std::max(below_min, mu - hi);
      thi = std::min(below_max, mu - lo);
    }
    if (tlo > thi) {
      // band arithmetic can round an interval shut
      if (tlo - thi > 1e-12) {
        throw std::invalid_argument("bitstream: infeasible magnitude interval at change " +
                                    std::to_string(j));
      }
      thi = tlo = 0.5 * (tlo + thi);
    }
    mu = rng.uniform(tlo, thi);
    means.push_back(mu);
  }

  BitStream out;
  out.segment_means = means;
  out.bits.reserve(means.size() * config.segment_length);
  for (std::size_t seg = 0; seg < means.size(); ++seg) {
    if (seg > 0) out.changes.positions.push_back(seg * config.segment_length);
    for (std::size_t i = 0; i < config.segment_length; ++i) {
      out.bits.push_back(rng.bernoulli(means[seg]) ? 1 : 0);
    }
  }
  return out;
}

GeneratedStream gen_sea(double noise, std::uint64_t seed) {
  if (!(noise >= 0.0 && noise < 1.0)) throw std::invalid_argument("sea: noise must be in [0,1)");
  constexpr std::size_t kLen = 40000;
  constexpr std::array<double, 4> kThresholds{8.0, 9.0, 7.0, 9.5};
  constexpr std::array<std::size_t, 3> kChanges{10000, 15000, 30000};

  Rng rng(seed);
  GeneratedStream out;
  out.stream = LabeledStream(3);
  out.stream.reserve(kLen);
  out.changes.positions.assign(kChanges.begin(), kChanges.end());

  std::size_t concept_idx = 0;
  for (std::size_t i = 0; i < kLen; ++i) {
    if (concept_idx < kChanges.size() && i == kChanges[concept_idx]) ++concept_idx;
    const std::array<double, 3> f{rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0),
                                  rng.uniform(0.0, 10.0)};
    int label = (f[0] + f[1] <= kThresholds[concept_idx]) ? 1 : 0;
    if (noise > 0.0 && rng.bernoulli(noise)) label = 1 - label;
    out.stream.push_back(f, label);
  }
  return out;
}

GeneratedStream gen_hyperplane(double angle_deg, std::uint64_t seed) {
  if (!(angle_deg > 0.0)) throw std::invalid_argument("hyperplane: angle must be > 0");
  constexpr std::size_t kLen = 40000;
  constexpr std::size_t kRotationStart = 10000;
  constexpr std::size_t kRotationEvery = 1000;

  Rng rng(seed);
  GeneratedStream out;
  out.stream = LabeledStream(3);
  out.stream.reserve(kLen);

  double phi = 0.0;
  for (std::size_t i = 0; i < kLen; ++i) {
    if (i >= kRotationStart && i % kRotationEvery == 0) {
      phi += angle_deg * std::numbers::pi / 180.0;
      out.changes.positions.push_back(i);
    }
    const std::array<double, 3> f{rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0),
                                  rng.uniform(0.0, 10.0)};
    const double side = (f[0] - 5.0) * std::cos(phi) + (f[1] - 5.0) * std::sin(phi);
    out.stream.push_back(f, side > 0.0 ? 1 : 0);
  }
  return out;
}

LabeledStream bits_as_labels(std::span<const std::uint8_t> bits) {
  LabeledStream s(0);
  s.reserve(bits.size());
  for (const auto b : bits) s.push_back({}, b);
  return s;
}

namespace {

bool parse_label(const std::string& tok, int& label) {
  if (tok == "UP" || tok == "up" || tok == "Up" || tok == "1" || tok == "1.0") {
    label = 1;
    return true;
  }
  if (tok == "DOWN" || tok == "down" || tok == "Down" || tok == "0" || tok == "0.0") {
    label = 0;
    return true;
  }
  return false;
}

}  // namespace

LabeledStream load_elec2(const std::filesystem::path& path) {
  constexpr std::size_t kExpectedRows = 45312;
  constexpr std::size_t kFeatures = 8;

  std::ifstream in(path);
  if (!in) throw std::runtime_error("elec2: cannot open " + path.string());

  std::vector<double> features;
  std::vector<int> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string> tokens;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) tokens.push_back(tok);

    std::array<double, kFeatures> row{};
    bool ok = tokens.size() == kFeatures + 1;
    for (std::size_t c = 0; ok && c < kFeatures; ++c) {
      try {
        std::size_t pos = 0;
        row[c] = std::stod(tokens[c], &pos);
        ok = pos == tokens[c].size();
      } catch (const std::exception&) {
        ok = false;
      }
    }
    int label = 0;
    ok = ok && parse_label(tokens[kFeatures], label);
    if (!ok) {
      if (line_no == 1) continue;  // header row
      throw std::runtime_error("elec2: line " + std::to_string(line_no) +
                               ": unparseable row");
    }
    features.insert(features.end(), row.begin(), row.end());
    labels.push_back(label);
  }

  if (labels.empty()) {
    throw std::runtime_error("elec2: no data rows in " + path.string() +
                             " (expected a data row by line " +
                             std::to_string(line_no + 1) + ")");
  }
  if (labels.size() != kExpectedRows) {
    std::cerr << "elec2: warning: expected " << kExpectedRows << " rows, got "
              << labels.size() << "\n";
  }

  // Min-max scale any feature column that leaves [0,1].
  const std::size_t n = labels.size();
  for (std::size_t c = 0; c < kFeatures; ++c) {
    double lo = features[c], hi = features[c];
    for (std::size_t i = 1; i < n; ++i) {
      lo = std::min(lo, features[i * kFeatures + c]);
      hi = std::max(hi, features[i * kFeatures + c]);
    }
    if (lo >= 0.0 && hi <= 1.0) continue;
    const double span = hi > lo ? hi - lo : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      auto& v = features[i * kFeatures + c];
      v = (v - lo) / span;
    }
  }

  LabeledStream s(kFeatures);
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.push_back({features.data() + i * kFeatures, kFeatures}, labels[i]);
  }
  return s;
}

void write_stream_csv(std::ostream& os, const LabeledStream& stream) {
  for (std::size_t c = 0; c < stream.dim(); ++c) os << 'f' << (c + 1) << ',';
  os << "label\n";
  char buf[64];
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const auto f = stream.features(i);
    for (const double v : f) {
      std::snprintf(buf, sizeof(buf), "%.6g", v);
      os << buf << ',';
    }
    os << stream.label(i) << '\n';
  }
}

void write_changepoints(std::ostream& os, const ChangePointLog& log) {
  for (const auto p : log.positions) os << p << '\n';
}

}  // namespace drift
