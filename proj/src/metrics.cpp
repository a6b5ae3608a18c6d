#include "drift/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace drift {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::pair<double, double> mean_std(std::span<const double> xs) {
  if (xs.empty()) return {kNaN, kNaN};
  double mean = 0.0;
  for (const double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (const double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size());
  return {mean, std::sqrt(var)};
}

}  // namespace

DetectionOutcome match_detections(std::span<const std::size_t> drift_batches,
                                  const ChangePointLog& changes, std::size_t batch_size,
                                  std::size_t stream_len) {
  if (batch_size == 0) throw std::invalid_argument("metrics: batch_size must be >= 1");
  DetectionOutcome out;
  out.total_batches = (stream_len + batch_size - 1) / batch_size;

  std::vector<std::size_t> change_batches;
  change_batches.reserve(changes.positions.size());
  for (const auto pos : changes.positions) {
    if (pos >= stream_len) throw std::invalid_argument("metrics: change point beyond stream");
    const std::size_t cb = pos / batch_size;
    if (!change_batches.empty() && cb == change_batches.back()) continue;  // same batch
    change_batches.push_back(cb);
  }
  out.n_changes = change_batches.size();

  std::vector<std::size_t> signals(drift_batches.begin(), drift_batches.end());
  std::sort(signals.begin(), signals.end());

  const std::size_t first_change =
      change_batches.empty() ? out.total_batches : change_batches.front();
  for (const auto s : signals) {
    if (s < first_change) out.false_positive_batches.push_back(s);
  }
  for (std::size_t j = 0; j < change_batches.size(); ++j) {
    const std::size_t start = change_batches[j];
    const std::size_t end =
        (j + 1 < change_batches.size()) ? change_batches[j + 1] : out.total_batches;
    bool matched = false;
    for (const auto s : signals) {
      if (s < start || s >= end) continue;
      if (!matched) {
        out.true_positives.emplace_back(start, s);
        matched = true;
      } else {
        out.false_positive_batches.push_back(s);
      }
    }
    if (!matched) out.missed_changes.push_back(start);
  }
  return out;
}

MetricSummary summarize(std::span<const DetectionOutcome> outcomes,
                        std::span<const RunTrace> traces) {
  if (outcomes.empty()) throw std::invalid_argument("metrics: no runs to summarize");
  if (!traces.empty() && traces.size() != outcomes.size()) {
    throw std::invalid_argument("metrics: outcome/trace count mismatch");
  }

  std::vector<double> fprs, fnrs, delays, accs;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    const auto& o = outcomes[r];
    const double fp_base = static_cast<double>(o.total_batches - o.n_changes);
    fprs.push_back(fp_base > 0.0
                       ? static_cast<double>(o.false_positive_batches.size()) / fp_base
                       : 0.0);
    if (o.n_changes > 0) {
      fnrs.push_back(static_cast<double>(o.missed_changes.size()) /
                     static_cast<double>(o.n_changes));
    }
    if (!o.true_positives.empty()) {
      double d = 0.0;
      for (const auto& [cb, db] : o.true_positives) {
        d += static_cast<double>(db - cb);
      }
      delays.push_back(d / static_cast<double>(o.true_positives.size()));
    }
    if (!traces.empty()) accs.push_back(traces[r].accuracy());
  }

  MetricSummary s;
  std::tie(s.fpr_mean, s.fpr_std) = mean_std(fprs);
  std::tie(s.fnr_mean, s.fnr_std) = mean_std(fnrs);
  std::tie(s.delay_mean, s.delay_std) = mean_std(delays);
  std::tie(s.accuracy_mean, s.accuracy_std) = mean_std(accs);
  return s;
}

void write_summary_csv(std::ostream& os, const MetricSummary& s) {
  os << "fpr_mean,fpr_std,fnr_mean,fnr_std,delay_mean,delay_std,accuracy_mean,accuracy_std\n";
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g\n", s.fpr_mean,
                s.fpr_std, s.fnr_mean, s.fnr_std, s.delay_mean, s.delay_std,
                s.accuracy_mean, s.accuracy_std);
  os << buf;
}

}  // namespace drift
