#pragma once

#include <stdexcept>
#include <string>

namespace gmn {

struct SyntaxError : std::runtime_error {
  explicit SyntaxError(const std::string& what) : std::runtime_error(what) {}
};

struct BadParameter : std::runtime_error {
  explicit BadParameter(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what)
      : std::runtime_error(what) {}
};

struct NotCyclicallyReduced : std::runtime_error {
  explicit NotCyclicallyReduced(const std::string& what)
      : std::runtime_error(what) {}
};

struct MixedContexts : std::runtime_error {
  explicit MixedContexts(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by witness generation when the inputs turn out to be conjugate.
// Carries the conjugator as a rendered word.
struct InputsConjugate : std::runtime_error {
  std::string conjugator;
  explicit InputsConjugate(std::string conj)
      : std::runtime_error("inputs are conjugate"), conjugator(std::move(conj)) {}
};

struct CapExhausted : std::runtime_error {
  explicit CapExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Self-check failure: a value the implementation re-verifies by
// multiplication did not verify. Always a bug, never a data error.
struct InternalCheckFailed : std::logic_error {
  explicit InternalCheckFailed(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace gmn
