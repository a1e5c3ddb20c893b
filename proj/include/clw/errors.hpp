#ifndef CLW_ERRORS_HPP
#define CLW_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clw {

// Base class of all workbench errors. The CLI maps Error to exit code 2 and
// BoundsError to exit code 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundsError : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

struct UnknownAgent : Error {
  explicit UnknownAgent(const std::string& name)
      : Error("unknown agent: " + name) {}
};

struct UnknownState : Error {
  explicit UnknownState(const std::string& what)
      : Error("unknown state: " + what) {}
};

struct NotASubcoalition : Error {
  using Error::Error;
};

struct OverlappingCoalitions : Error {
  using Error::Error;
};

struct CoalitionMismatch : Error {
  using Error::Error;
};

struct CarrierMismatch : Error {
  using Error::Error;
};

struct EmptySetMember : Error {
  using Error::Error;
};

struct EmptyActionUniverse : Error {
  using Error::Error;
};

struct SideConditionViolated : Error {
  using Error::Error;
};

struct UnknownSuite : Error {
  explicit UnknownSuite(const std::string& name)
      : Error("unknown suite: " + name) {}
};

struct BadModelFile : Error {
  using Error::Error;
};

struct BoundsExceeded : BoundsError {
  using BoundsError::BoundsError;
};

struct TooLarge : BoundsError {
  using BoundsError::BoundsError;
};

}  // namespace clw

#endif
