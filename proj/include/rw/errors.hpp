#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rw {

/// Base class of every library error.  Subclasses carry a stable name that
/// the CLI prints when rendering failures.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  virtual const char* name() const noexcept { return "Error"; }
};

#define RW_DEFINE_ERROR(NAME)                                       \
  class NAME : public Error {                                       \
  public:                                                           \
    using Error::Error;                                             \
    const char* name() const noexcept override { return #NAME; }    \
  }

RW_DEFINE_ERROR(InsufficientData);
RW_DEFINE_ERROR(NotPinnedWithinBound);
RW_DEFINE_ERROR(PreconditionViolated);
RW_DEFINE_ERROR(CapExceeded);
RW_DEFINE_ERROR(NotAZiminFactor);
RW_DEFINE_ERROR(HypothesisViolated);
RW_DEFINE_ERROR(WindowExhausted);
RW_DEFINE_ERROR(WindowInsufficient);
RW_DEFINE_ERROR(TooManyParts);
RW_DEFINE_ERROR(PaletteMismatch);

#undef RW_DEFINE_ERROR

/// A word does not occur with its occurrence fully inside the materialized
/// window.  Carries the window size so callers can distinguish "unknown"
/// from a certified "no".
class NotAFactorInWindow : public Error {
public:
  NotAFactorInWindow(const std::string& msg, std::size_t window)
      : Error(msg), window_(window) {}
  const char* name() const noexcept override { return "NotAFactorInWindow"; }
  std::size_t window() const noexcept { return window_; }

private:
  std::size_t window_;
};

}  // namespace rw
