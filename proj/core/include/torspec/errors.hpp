#pragma once

#include <stdexcept>
#include <string>

namespace torspec {

/// Base class for all torspec errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidForm : Error {
  using Error::Error;
};
struct InvalidInput : Error {
  using Error::Error;
};
struct DegenerateLattice : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};
struct ModeUnsupported : Error {
  using Error::Error;
};
struct NeedsGrouping : Error {
  using Error::Error;
};
struct DegenerateTriple : Error {
  using Error::Error;
};
struct InvalidPair : Error {
  using Error::Error;
};
struct HypothesisOutOfRange : Error {
  using Error::Error;
};
struct OutOfChart : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace torspec
