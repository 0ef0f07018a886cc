#pragma once

#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "xmlift/error.hpp"

namespace xmlift::testing {

/// Runs `fn` and returns the AlgebraError it raised; fails the test otherwise.
inline AlgebraError expect_error(const std::function<void()>& fn, ErrorCode code) {
  try {
    fn();
  } catch (const AlgebraError& e) {
    CHECK_MESSAGE(e.code() == code, "got ", to_string(e.code()), ": ", std::string(e.what()));
    return e;
  }
  FAIL("expected ", to_string(code));
  return AlgebraError(code, "unreachable");
}

}  // namespace xmlift::testing
