#pragma once

#include <stdexcept>
#include <string>

namespace carlitz {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

// d_s applied to a term with m >= 1 and some k_j = 0; the image would leave
// the function space (t^{q^{-1}}).
struct MonomialEscape : Error {
  using Error::Error;
};

// hilbert_fit found no window of constant differences.
struct NoStabilization : Error {
  using Error::Error;
};

}  // namespace carlitz
