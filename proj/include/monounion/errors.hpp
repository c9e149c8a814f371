#ifndef MONOUNION_ERRORS_HPP_
#define MONOUNION_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace monounion {

// Failure categories. The numeric values are the CLI exit codes and are a
// stable contract: 1 parse, 2 invalid spec/structure, 3 horizon, 4
// certificate violation, 5 resource.
enum class ErrorCode {
  Document = 1,
  InvalidSpec = 2,
  Horizon = 3,
  Certificate = 4,
  Resource = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A reduction hit the configured step budget. Signals an invalid table or an
// insufficient bound, never a hang.
struct DepthExceeded : Error {
  explicit DepthExceeded(const std::string& msg)
      : Error(ErrorCode::InvalidSpec, msg) {}
};

struct ExponentOverflow : Error {
  explicit ExponentOverflow(const std::string& msg)
      : Error(ErrorCode::Resource, msg) {}
};

// No target repeated and no period certified within the trajectory horizon;
// retry with a larger horizon or larger return bounds.
struct HorizonExhausted : Error {
  explicit HorizonExhausted(const std::string& msg)
      : Error(ErrorCode::Horizon, msg) {}
};

// A return z^t y^q = z^s with s < t; contradicts exponent monotonicity and
// marks the table invalid.
struct NegativeMultiplier : Error {
  explicit NegativeMultiplier(const std::string& msg)
      : Error(ErrorCode::InvalidSpec, msg) {}
};

struct IntraClassInconsistency : Error {
  explicit IntraClassInconsistency(const std::string& msg)
      : Error(ErrorCode::InvalidSpec, msg) {}
};

struct CertificateViolation : Error {
  explicit CertificateViolation(const std::string& msg)
      : Error(ErrorCode::Certificate, msg) {}
};

struct ResourceExceeded : Error {
  explicit ResourceExceeded(const std::string& msg)
      : Error(ErrorCode::Resource, msg) {}
};

struct DocumentError : Error {
  explicit DocumentError(const std::string& msg)
      : Error(ErrorCode::Document, msg) {}
};

struct UnknownFixture : Error {
  explicit UnknownFixture(const std::string& msg)
      : Error(ErrorCode::Document, msg) {}
};

}  // namespace monounion

#endif  // MONOUNION_ERRORS_HPP_
