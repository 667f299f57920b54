#pragma once

#include <stdexcept>
#include <string>

namespace congruent {

enum class ErrorKind {
  InvalidArgument,
  NotSquarefree,
  WrongResidueShape,
  HypothesisNotMet,
  NoRepresentation,
  PairNotInKernel,
  ShapeMismatch,
  Io,
};

const char *to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace congruent
