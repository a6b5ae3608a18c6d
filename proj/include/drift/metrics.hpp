#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "drift/prequential.hpp"
#include "drift/streams.hpp"

namespace drift {

// Attribution of drift signals to ground-truth changes. Each change point
// lands in exactly one of true_positives or missed_changes.
struct DetectionOutcome {
  // (change batch, detection batch) pairs; delay = second - first.
  std::vector<std::pair<std::size_t, std::size_t>> true_positives;
  std::vector<std::size_t> false_positive_batches;
  std::vector<std::size_t> missed_changes;  // change batch indices
  std::size_t total_batches = 0;
  std::size_t n_changes = 0;
};

// Maps changes to the batch containing them; a concept segment runs from its
// change batch (inclusive) to the next change batch (exclusive). The first
// drift signal in a segment is that change's true positive; any other signal
// (including all signals before the first change) is a false positive;
// signal-free segments contribute a missed change.
DetectionOutcome match_detections(std::span<const std::size_t> drift_batches,
                                  const ChangePointLog& changes, std::size_t batch_size,
                                  std::size_t stream_len);

// Per-run rates and their across-run aggregation:
//   FPR   = |false positives| / (total batches - |changes|)
//   FNR   = |missed| / |changes|
//   Delay = mean over true positives of (detection batch - change batch)
// Summaries are mean +/- population standard deviation over runs; runs with
// no true positive contribute no delay term. With no change points FNR and
// Delay are NaN (not applicable).
struct MetricSummary {
  double fpr_mean = 0.0, fpr_std = 0.0;
  double fnr_mean = 0.0, fnr_std = 0.0;
  double delay_mean = 0.0, delay_std = 0.0;
  double accuracy_mean = 0.0, accuracy_std = 0.0;
};

MetricSummary summarize(std::span<const DetectionOutcome> outcomes,
                        std::span<const RunTrace> traces);

// One-line CSV forms of the summary (schema in the header row).
void write_summary_csv(std::ostream& os, const MetricSummary& summary);

}  // namespace drift
