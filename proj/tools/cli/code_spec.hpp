#pragma once

#include <string>

#include "ldlab/linear_code.hpp"

namespace ldlab::cli {

/// Builds a code from a short description:
///   had:q:k          Hadamard code over GF(q)
///   rs:q:n:deg       Reed-Solomon on the first n field elements
///   tensor:A,B       A (x) B for two descriptions (no nested tensors)
///   anything else    a generator file path
/// Throws SpecInvalid on malformed descriptions.
LinearCode make_code(const std::string& description);

}  // namespace ldlab::cli
