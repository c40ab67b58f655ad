#pragma once

#include <stdexcept>
#include <string>

namespace qhd {

enum class ErrorKind {
  TailTooHeavy,
  NotNilpotent,
  BadParams,
  SingularCosh,
  NotConverged,
  NonNormalizable,
  ZeroNorm,
  IllConditioned,
  NotPositiveDefinite
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::TailTooHeavy: return "TailTooHeavy";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::SingularCosh: return "SingularCosh";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::NonNormalizable: return "NonNormalizable";
    case ErrorKind::ZeroNorm: return "ZeroNorm";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qhd
