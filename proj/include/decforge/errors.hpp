#pragma once

#include <stdexcept>
#include <string>

namespace decforge {

// Every recoverable domain failure is reported through DomainError so the CLI
// can map it to a stable exit code.  Parse/usage problems are kept separate
// (see json_io.hpp) because they signal bad input syntax, not bad mathematics.
enum class Err {
    Precondition,         // operation called outside its stated domain
    BaseMismatch,         // mixing objects over Q with objects over Q(i)
    GroupTooLarge,        // group order above the supported cap (2^20)
    SumNotZero,           // local invariants do not sum to 0 in Q/Z
    ArchimedeanViolation, // invalid invariant at a real/complex place
    NotInBrT,             // class not in the relative t-torsion Brauer group
    NotInDec,             // class not decomposable (fails the local criterion)
    SearchExhausted,      // place scan hit its bound without success
    InternalInconsistency // postcondition re-check failed (should not happen)
};

const char* err_name(Err e);

class DomainError : public std::runtime_error {
  public:
    DomainError(Err kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Err kind() const { return kind_; }

  private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& what) {
    throw DomainError(kind, what);
}

} // namespace decforge
