#ifndef POWMAT_ERROR_HPP
#define POWMAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace powmat {

enum class ErrorKind {
  NonPrime,
  Reducible,
  SizeLimit,
  DivideByZero,
  CtxMismatch,
  NotPermutation,
  DegreeZero,
  PCharObstruction,
  NotDiagonalizableInput,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::DivideByZero: return "DivideByZero";
    case ErrorKind::CtxMismatch: return "CtxMismatch";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::PCharObstruction: return "PCharObstruction";
    case ErrorKind::NotDiagonalizableInput: return "NotDiagonalizableInput";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace powmat

#endif  // POWMAT_ERROR_HPP
