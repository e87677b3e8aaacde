#pragma once
#include <stdexcept>
#include <string>

namespace resolvent {

enum class ErrKind {
  ShapeMismatch,
  DomainMismatch,
  BackendMismatch,
  InvalidObject,
  InvalidMorphism,
  NotMono,
  NotEpi,
  NotExact,
  NotInjectiveTerm,
  NonzeroDifferential,
  PreconditionViolation,
  MulticomplexCondition,
  MissingSplittings,
  DepthInsufficient,
  HypothesisViolated,
  NoLift,
  UnboundedBelow,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  ErrKind kind;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

}  // namespace resolvent
