// Exception types thrown by the boolrep library.
//
// Construction errors carry a witness (the offending triple, index, ...)
// in the message so a caller can report it verbatim.

#ifndef BOOLREP_ERROR_HPP_
#define BOOLREP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace boolrep {

// Base class for everything thrown on purpose by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad indices, ragged tables, unknown fixture names,
// width mismatches, empty generator lists.
struct InvalidInputError : Error {
  using Error::Error;
};

// The given table is not associative; message names the witness triple.
struct NonAssociativeError : InvalidInputError {
  NonAssociativeError(std::size_t s, std::size_t t, std::size_t u)
      : InvalidInputError("multiplication table is not associative: (s*t)*u != s*(t*u) for s=" +
                          std::to_string(s) + ", t=" + std::to_string(t) + ", u=" +
                          std::to_string(u)),
        s(s), t(t), u(u) {}
  std::size_t s, t, u;
};

// An enumeration would exceed its configured cap.
struct CapExceededError : Error {
  using Error::Error;
};

// Operation requires a regular J-class.
struct NotRegularError : Error {
  using Error::Error;
};

// Operation requires a nondegenerate module (M . S != 0).
struct DegenerateModuleError : Error {
  using Error::Error;
};

// Operation requires a free carrier lattice.
struct NotFreeError : Error {
  using Error::Error;
};

// A structural fact the library relies on failed to hold at runtime.
// Seeing this means a bug, not bad user input.
struct InternalCheckError : Error {
  using Error::Error;
};

}  // namespace boolrep

#endif  // BOOLREP_ERROR_HPP_
