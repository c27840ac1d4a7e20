#pragma once

#include <stdexcept>
#include <string>

namespace pdio {

// Shapes of vectors/matrices do not line up.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A matrix required to be symmetric positive definite is not.
class NotPositiveDefinite : public std::runtime_error {
 public:
  explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

// The coupling matrix must have full column rank.
class RankDeficientError : public std::invalid_argument {
 public:
  explicit RankDeficientError(const std::string& what) : std::invalid_argument(what) {}
};

// No contraction certificate exists at the requested parameters.
class NotCertifiable : public std::runtime_error {
 public:
  explicit NotCertifiable(const std::string& what) : std::runtime_error(what) {}
};

// An iterative routine hit its iteration cap, or every probe diverged.
class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Not enough usable data points for a fit.
class InsufficientData : public std::runtime_error {
 public:
  explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pdio
