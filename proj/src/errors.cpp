#include "concord/errors.hpp"

namespace concord {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::NonMonotoneBreaks: return "NonMonotoneBreaks";
    case Errc::BadPermutation: return "BadPermutation";
    case Errc::BadEndpoints: return "BadEndpoints";
    case Errc::BadFlipCount: return "BadFlipCount";
    case Errc::BadMixtureWeights: return "BadMixtureWeights";
    case Errc::BadCopulaSpec: return "BadCopulaSpec";
    case Errc::InadmissibleC: return "InadmissibleC";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::UnsupportedIntegrator: return "UnsupportedIntegrator";
  }
  return "UnknownError";
}

}  // namespace concord
