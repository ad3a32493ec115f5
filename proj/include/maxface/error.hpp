#pragma once

#include <stdexcept>
#include <string>

namespace maxface {

enum class ErrorKind {
  InvalidConfiguration,
  NonZeroGrowthSum,
  NotAPole,
  NoConvergence,
  SingularJacobian,
  RepeatedRoot,
  Unbalanced,
  NoMirror,
  GridTooCoarse,
  DisksOverlap,
  PoleEvaluation,
  PathThroughPole,
  UnreachablePoint,
  OutsideAnnulus,
  SeamMismatch,
  NoImprovement,
  MeshFailure,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, double value = 0.0);

  ErrorKind kind() const { return kind_; }
  // Residual or measured quantity attached to numeric failures (0 if none).
  double value() const { return value_; }

 private:
  ErrorKind kind_;
  double value_;
};

}  // namespace maxface
