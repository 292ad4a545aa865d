#pragma once

#include <stdexcept>
#include <string>

namespace csf {

// Typed failure conditions surfaced by the library.
enum class Errc {
  NotInH1,                // word outside Q + H*y
  NotLeftDivisible,       // strip_left_x on a term not starting with x
  NonAdmissibleWord,      // zeta evaluation of a word outside x*H*y + Q
  DivergentIndex,         // zeta series with leading exponent 1 (or empty)
  WeightMismatch,         // inhomogeneous query against a graded system
  PreconditionViolation,  // caller broke a documented precondition
  InternalInconsistency,  // a result failed its independent cross-check
  UnknownSuite,           // verify_suite called with an unknown name
  ParseError,             // malformed word/index/poly text
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace csf
