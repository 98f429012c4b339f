#pragma once

#include <optional>
#include <utility>

#include "opskit/error.hpp"

// Runs fn and reports the opskit error code it threw, if any.
template <class F>
std::optional<opskit::Errc> error_code_of(F&& fn) {
  try {
    std::forward<F>(fn)();
  } catch (const opskit::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
