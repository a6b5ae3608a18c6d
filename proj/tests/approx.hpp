#pragma once

#include <doctest.h>

#include <cmath>

// Absolute-tolerance comparison; doctest's Approx is relative-only.
#define CHECK_CLOSE(got, want, tol)                                          \
  do {                                                                       \
    const double check_close_glhs = (got);                                   \
    const double check_close_grhs = (want);                                  \
    const double check_close_gtol = (tol);                                   \
    INFO("got " << check_close_glhs << ", want " << check_close_grhs         \
                << " +/- " << check_close_gtol << " (diff "                  \
                << std::fabs(check_close_glhs - check_close_grhs) << ")");   \
    CHECK(std::fabs(check_close_glhs - check_close_grhs) <= check_close_gtol); \
  } while (0)
