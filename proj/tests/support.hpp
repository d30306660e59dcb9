#pragma once

#include <functional>
#include <optional>

#include "critgen/error.hpp"

// Error code thrown by f, or nullopt if it returns normally.
inline std::optional<critgen::ErrorCode> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const critgen::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
