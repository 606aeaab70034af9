#ifndef INKFEAT_ERROR_HPP
#define INKFEAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace inkfeat {

enum class ErrorCode {
  kEmptyGesture,
  kNonMonotonicTime,
  kPressureOutOfRange,
  kNonFiniteValue,
  kParseError,
  kIndexOutOfRange,
  kDegenerateGeometry,
  kInsufficientSamples,
  kUnknownFeatureId,
  kUnknownSet,
  kMissingRole,
  kDegenerateTrainingSet,
  kIoError,
};

const char* ErrorCodeName(ErrorCode code);

// Domain error. CLI maps these to exit code 1 (kIoError to exit code 2).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace inkfeat

#endif  // INKFEAT_ERROR_HPP
