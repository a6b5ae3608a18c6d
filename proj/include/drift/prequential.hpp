#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drift/bd3.hpp"
#include "drift/signal.hpp"
#include "drift/streams.hpp"

namespace drift {

enum class DetectorKind { none, ddm, eddm, bd3 };

// Returns nullopt for unknown names; valid names: none, ddm, eddm, bd3.
std::optional<DetectorKind> parse_detector(const std::string& name);
const char* to_string(DetectorKind kind);

struct PrequentialConfig {
  std::size_t batch_size = 200;
  DetectorKind detector = DetectorKind::none;
  Bd3Config bd3;
  std::uint64_t seed = 0;  // recorded in the trace; streams are pre-generated

  void validate() const;
};

// One per-batch record of the interleaved test-then-train loop. alpha/beta/t
// snapshot the BD3 posterior (zeros for other detectors).
struct BatchRecord {
  std::size_t index;
  int n;
  int k;
  double accuracy;
  Signal signal;
  double alpha;
  double beta;
  std::int64_t t;
};

struct RunTrace {
  std::uint64_t seed = 0;
  std::vector<BatchRecord> records;
  std::vector<std::size_t> drift_batches;
  std::size_t total_instances = 0;
  std::size_t total_errors = 0;

  double accuracy() const {
    return total_instances == 0
               ? 0.0
               : 1.0 - static_cast<double>(total_errors) / static_cast<double>(total_instances);
  }
};

// Batchwise interleaved test-then-train: each batch is (1) predicted,
// (2) its binary errors fed to the detector (batchwise for BD3,
// instance-wise for DDM/EDDM with the batch signal being the maximum
// instance signal), (3) the classifier is discarded on drift, then
// (4) trained on the batch. BD3 is initialized from the first batch's size.
// Warnings are recorded in the trace and trigger no action.
RunTrace run_prequential(const LabeledStream& stream, const PrequentialConfig& config);

// Classifier-free mode: the given binary sequence is consumed directly as
// the error stream (accuracy records are 1 - batch mean).
RunTrace run_error_stream(std::span<const std::uint8_t> errors,
                          const PrequentialConfig& config);

// CSV schema: batch_index,n,k,accuracy,signal,alpha,beta,t
void write_trace_csv(std::ostream& os, const RunTrace& trace);

}  // namespace drift
