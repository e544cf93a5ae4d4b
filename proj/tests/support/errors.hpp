#pragma once

#include <gtest/gtest.h>

#include <functional>

#include "bqec/error.hpp"

// Runs f and returns the code of the bqec::Error it throws; records a test
// failure when nothing is thrown.
inline bqec::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const bqec::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no bqec::Error thrown";
  return bqec::ErrorCode::InvalidInput;
}
