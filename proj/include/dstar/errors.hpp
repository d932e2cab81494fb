#ifndef DSTAR_ERRORS_HPP
#define DSTAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dstar {

// Typed failure causes. Caps signal desk-scale limits; HypothesisViolated
// signals that an operation's mathematical preconditions fail for the input.
enum class Fault {
  DegreeMismatch,
  ClosureCapExceeded,
  ActionKindMismatch,
  VertexOutOfRange,
  CapExceeded,
  UnknownName,
  IndexOutOfRange,
  NotAPrefix,
  NotANeighborInStar,
  NotAStar,
  NotADoubleStar,
  NotArcTransitive,
  NotSelfPaired,
  NotArcTransitiveOrbit,
  RTooSmall,
  HypothesisViolated,
  NotSubgroup,
  AsymmetricDoubleCoset,
  NotInvariant,
  EmptyQuotient,
  NotAQuotientStar,
  NotReducible,
  LevelNotComputed,
  ParseError,
};

const char* fault_name(Fault f);

class Error : public std::runtime_error {
 public:
  Error(Fault fault, const std::string& what)
      : std::runtime_error(std::string(fault_name(fault)) + ": " + what),
        fault_(fault) {}

  Fault fault() const { return fault_; }

 private:
  Fault fault_;
};

[[noreturn]] inline void fail(Fault f, const std::string& what) {
  throw Error(f, what);
}

inline void require(bool cond, Fault f, const std::string& what) {
  if (!cond) fail(f, what);
}

}  // namespace dstar

#endif
