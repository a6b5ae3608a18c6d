#pragma once

namespace drift {

// Per-batch detector verdict, ordered by severity.
enum class Signal { none = 0, warning = 1, drift = 2 };

inline Signal max_signal(Signal a, Signal b) { return a < b ? b : a; }

inline const char* to_string(Signal s) {
  switch (s) {
    case Signal::warning: return "warning";
    case Signal::drift: return "drift";
    default: return "none";
  }
}

}  // namespace drift
