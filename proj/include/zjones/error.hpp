#pragma once

#include <stdexcept>
#include <string>

namespace zj {

enum class ErrorKind {
  RingMismatch,
  InvalidOrder,
  Pole,
  DivisionByZero,
  UnassignedVariable,
  MalformedDiagram,
  InvalidPositions,
  ResourceBound,
  InvalidTorus,
  SingularPrefactor,
  ContourPole,
  BranchCut,
  PrecisionBudget,
  UndefinedFit,
  DivergentTaylor,
  DirectionOutsideDomain,
  TailBound,
  Unsupported,
  Domain,
  Parse,
  Tolerance,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zj
