#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace heegaard {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-width integer arithmetic exceeded int64.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// R x = l has no integral solution: the link is not homologically trivial.
class NoIntegralSolution : public Error {
 public:
  using Error::Error;
};

class UnbalancedVertex : public Error {
 public:
  using Error::Error;
};

class MalformedDiagram : public Error {
 public:
  using Error::Error;
};

class InsufficientCurves : public Error {
 public:
  using Error::Error;
};

class FramingMismatch : public Error {
 public:
  using Error::Error;
};

class CompileError : public Error {
 public:
  using Error::Error;
};

}  // namespace heegaard
