#pragma once

#include <stdexcept>
#include <string>

namespace latcoh {

// Domain error codes. The CLI maps any Error to exit code 1 and prints the
// code name, so the names below are part of the user-facing contract.
enum class Err {
    DuplicateId,
    DanglingEdge,
    NotNegativeDefinite,
    NotConnected,
    UnknownSite,
    NotQHS3,
    BadSubset,
    NonIntegerChi,
    Overflow,
    ShapeMismatch,
    EmptySpace,
    NotUnitJump,
    PathOutOfRange,
    FixtureMismatch,
    TooLarge,
    BadInput,
    Internal,
};

const char* err_name(Err code);

class Error : public std::runtime_error {
  public:
    Error(Err code, const std::string& message)
        : std::runtime_error(std::string(err_name(code)) + ": " + message), code_(code) {}

    Err code() const { return code_; }
    const char* name() const { return err_name(code_); }

  private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) { throw Error(code, message); }

inline void expect(bool ok, Err code, const std::string& message) {
    if (!ok) fail(code, message);
}

} // namespace latcoh
