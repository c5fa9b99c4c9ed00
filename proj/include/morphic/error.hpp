#pragma once

#include <stdexcept>
#include <string>

namespace morphic {

enum class ErrorKind {
  alphabet_mismatch,
  invalid_exponent,
  not_prolongable,
  invalid_range,
  odd_length_required,
  search_too_large,
  parse_error,
  unchecked_proof,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::alphabet_mismatch: return "alphabet-mismatch";
    case ErrorKind::invalid_exponent: return "invalid-exponent";
    case ErrorKind::not_prolongable: return "not-prolongable";
    case ErrorKind::invalid_range: return "invalid-range";
    case ErrorKind::odd_length_required: return "odd-length-required";
    case ErrorKind::search_too_large: return "search-too-large";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::unchecked_proof: return "unchecked-proof";
  }
  return "unknown";
}

// Every library failure that is not a proof-search outcome is reported
// through this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace morphic
