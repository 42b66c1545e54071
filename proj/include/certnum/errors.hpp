#pragma once

#include <stdexcept>
#include <string>

namespace certnum {

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

struct DecayUnverifiable : std::runtime_error {
  explicit DecayUnverifiable(const std::string& what) : std::runtime_error(what) {}
};

struct CertificationFailed : std::runtime_error {
  explicit CertificationFailed(const std::string& what) : std::runtime_error(what) {}
};

struct HypothesisUnverified : std::runtime_error {
  explicit HypothesisUnverified(const std::string& what) : std::runtime_error(what) {}
};

struct MissingData : std::runtime_error {
  explicit MissingData(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownName : std::runtime_error {
  explicit UnknownName(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace certnum
