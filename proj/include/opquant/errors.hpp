#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opquant {

/// Base of every error raised for an input outside the supported operator domain.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define OPQUANT_DOMAIN_ERROR(Name)                                                \
  class Name : public DomainError {                                               \
   public:                                                                        \
    explicit Name(const std::string& message) : DomainError(#Name, message) {}    \
  };

// q^a p^b with a < 0 and b < 0 has no finite normal form.
OPQUANT_DOMAIN_ERROR(MixedNegativePowers)
OPQUANT_DOMAIN_ERROR(BothIndicesNegative)
OPQUANT_DOMAIN_ERROR(WeightCountMismatch)
OPQUANT_DOMAIN_ERROR(WeightsNotNormalized)
OPQUANT_DOMAIN_ERROR(OrientationUnavailable)
OPQUANT_DOMAIN_ERROR(BasisEliminationFailed)
OPQUANT_DOMAIN_ERROR(NegativeExponentUnsupported)
OPQUANT_DOMAIN_ERROR(NegativeIndexUnsupported)
OPQUANT_DOMAIN_ERROR(FormsNotEqual)

#undef OPQUANT_DOMAIN_ERROR

/// Malformed textual input; carries the byte offset of the failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace opquant
