#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfcomb {

  enum class ErrorKind {
    invalid_argument,
    invalid_interval,
    invalid_index,
    invalid_pair,
    invalid_pairing,
    invalid_arity,
    parse_error,
    unsupported_operation,
    undefined_on_empty,
    not_well_defined,
    internal_inconsistency,
    truncation_insufficient,
    bound_exceeded,
    overflow
  };

  constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::invalid_argument: return "invalid-argument";
      case ErrorKind::invalid_interval: return "invalid-interval";
      case ErrorKind::invalid_index: return "invalid-index";
      case ErrorKind::invalid_pair: return "invalid-pair";
      case ErrorKind::invalid_pairing: return "invalid-pairing";
      case ErrorKind::invalid_arity: return "invalid-arity";
      case ErrorKind::parse_error: return "parse-error";
      case ErrorKind::unsupported_operation: return "unsupported-operation";
      case ErrorKind::undefined_on_empty: return "undefined-on-empty";
      case ErrorKind::not_well_defined: return "not-well-defined";
      case ErrorKind::internal_inconsistency: return "internal-inconsistency";
      case ErrorKind::truncation_insufficient: return "truncation-insufficient";
      case ErrorKind::bound_exceeded: return "bound-exceeded";
      case ErrorKind::overflow: return "overflow";
    }
    return "unknown";
  }

  //! Every domain failure raised by the library is an Error carrying a kind.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace hopfcomb
