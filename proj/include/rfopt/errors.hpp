// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace rfopt {

// Base for all domain-level failures; the CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SymmetryViolation : public DomainError {
 public:
  SymmetryViolation(const std::string& msg, double worst_distance)
      : DomainError(msg), worst_distance(worst_distance) {}
  double worst_distance;
};

class InvalidInterval : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidFilter : public DomainError {
 public:
  using DomainError::DomainError;
};

class RealPole : public DomainError {
 public:
  using DomainError::DomainError;
};

class DuplicatePoles : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidWeight : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroAtOrigin : public DomainError {
 public:
  using DomainError::DomainError;
};

// A pole left the admissible region during optimization (crossed an axis,
// drifted past the overflow guard, or got too close to the real axis).
class DomainEscape : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularReduced : public DomainError {
 public:
  using DomainError::DomainError;
};

class StepRejected : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConstructionFailure : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateSpectrum : public DomainError {
 public:
  using DomainError::DomainError;
};

class InsufficientSpectrum : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroDenominator : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptyInput : public DomainError {
 public:
  using DomainError::DomainError;
};

class RankCollapse : public DomainError {
 public:
  using DomainError::DomainError;
};

class SolveFailure : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace rfopt
