#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "fmbend/error.hpp"
#include "support.hpp"

namespace fmbtest {

inline Point2 P(long x, long y) { return Point2(x, y); }
inline Point2 P(long xn, long xd, long yn, long yd) { return Point2(ratio(xn, xd), ratio(yn, yd)); }

template <class F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidInput;
}

}  // namespace fmbtest
