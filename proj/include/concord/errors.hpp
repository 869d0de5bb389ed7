#pragma once

#include <stdexcept>
#include <string>

namespace concord {

/// Error categories surfaced by the library. Values map 1:1 onto the
/// conditions callers are expected to distinguish programmatically.
enum class Errc {
  NonMonotoneBreaks,
  BadPermutation,
  BadEndpoints,
  BadFlipCount,
  BadMixtureWeights,
  BadCopulaSpec,
  InadmissibleC,
  ConditionViolated,
  OutOfRange,
  TooFewPoints,
  UnsupportedIntegrator,  // reserved; cannot fire for the closed expression set
};

const char* errc_name(Errc e);

class CopulaError : public std::runtime_error {
 public:
  CopulaError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw CopulaError(code, what);
}

}  // namespace concord
