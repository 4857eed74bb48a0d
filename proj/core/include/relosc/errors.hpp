#pragma once

#include <stdexcept>
#include <string>

namespace relosc {

// Gamma-function argument at (or indistinguishably close to) a non-positive
// integer, where Gamma has a pole.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// A real-valued quantity was requested where the principal branch has left
// the real axis (square-root radicand went negative).
class BranchError : public std::domain_error {
 public:
  explicit BranchError(const std::string& what) : std::domain_error(what) {}
};

// A bound-state quantity was requested in the collapse regime, where the
// energy is complex and no normalizable state exists.
class RegimeError : public std::domain_error {
 public:
  explicit RegimeError(const std::string& what) : std::domain_error(what) {}
};

// The quadrature cutoff leaves a non-negligible integrand tail.
class CutoffError : public std::runtime_error {
 public:
  explicit CutoffError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace relosc
