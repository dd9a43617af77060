// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ringcap {

// Invalid geometry, parameters out of range, malformed configuration.
// CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Too few samples / grid points for the requested operation.
class ResolutionError : public DomainError {
 public:
  explicit ResolutionError(const std::string& what) : DomainError(what) {}
};

// Iterative solver failed to reach tolerance. Carries the last residual.
// CLI maps these to exit code 3.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Level-curve extraction produced open or multiple loops; signals that the
// discretization is too coarse for the requested level. Exit code 3.
class TopologyError : public std::runtime_error {
 public:
  explicit TopologyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ringcap
