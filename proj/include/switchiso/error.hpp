#ifndef SWITCHISO_ERROR_HPP_
#define SWITCHISO_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace switchiso {

enum class ErrorCode {
  kInvalidEdge,
  kDuplicateEdge,
  kUnknownGraph,
  kInvalidParam,
  kTooLarge,
  kNotAnEdge,
  kInvalidVertex,
  kGraphMismatch,
  kNotAutomorphism,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception type; callers
// dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace switchiso

#endif  // SWITCHISO_ERROR_HPP_
