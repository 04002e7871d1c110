#pragma once

#include <doctest.h>

#include "lambdabuild/error.hpp"
#include "lambdabuild/textio.hpp"

namespace testutil {

inline lambdabuild::PuiseuxSeries S(const char* text) { return lambdabuild::parse_series(text); }
inline lambdabuild::Mat M(const char* json) { return lambdabuild::parse_matrix(json); }
inline lambdabuild::Rational Q(long a, long b = 1) {
  lambdabuild::Rational q(a, b);
  q.canonicalize();
  return q;
}

}  // namespace testutil

// Checks that `expr` throws lambdabuild::Error with the given code.
#define CHECK_ERRC(expr, errc)                                          \
  do {                                                                  \
    bool thrown_ = false;                                               \
    try {                                                               \
      (void)(expr);                                                     \
    } catch (const lambdabuild::Error& e_) {                            \
      thrown_ = true;                                                   \
      CHECK_MESSAGE(e_.code() == (errc), "got " << e_.name());          \
    }                                                                   \
    CHECK_MESSAGE(thrown_, "expected " << lambdabuild::errc_name(errc)); \
  } while (0)
