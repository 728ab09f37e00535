#pragma once

#include <stdexcept>
#include <string>

namespace ginstat {

// Thrown when an adaptive quadrature cannot meet its tolerance budget.
class quadrature_error : public std::runtime_error {
 public:
  explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an input sits on (or too close to) a pole / removable breakdown
// of a closed-form expression, e.g. degenerate |z-a_i|^2 = |z-a_k|^2.
class singularity_error : public std::runtime_error {
 public:
  explicit singularity_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on numerical breakdown that is neither a domain nor a quadrature
// issue: eigensolver failure, missing zero mode, overflow of a guarded value.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ginstat
