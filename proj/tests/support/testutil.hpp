#pragma once
#include <functional>

#include "doctest.h"
#include "lagdesk/error.hpp"

namespace lagdesk::testutil {

// Asserts that fn throws lagdesk::Error with exactly the given code.
inline void expect_error(ErrorCode code, const std::function<void()>& fn) {
  bool threw = false;
  try {
    fn();
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == code);
  }
  CHECK(threw);
}

}  // namespace lagdesk::testutil
