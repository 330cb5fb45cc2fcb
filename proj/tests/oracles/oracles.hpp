#pragma once

// Brute-force reference implementations. They share only the field, matrix
// and word types with the library; every enumeration, encoding and distance
// count here is written out directly so the decoders are checked against an
// independent path.

#include <cstdint>
#include <vector>

#include "ldlab/families.hpp"
#include "ldlab/lintrans.hpp"

namespace oracle {

using ldlab::Grid;
using ldlab::LinearCode;
using ldlab::Matrix;
using ldlab::Rational;
using ldlab::Symbol;
using ldlab::Word;

/// Every codeword, message counted upward with the first coordinate most significant.
std::vector<Word> all_codewords(const LinearCode& code);

/// Codewords with at most `radius` unerased disagreements.
std::vector<Word> ball(const LinearCode& code, const Word& r, std::int64_t radius);

/// Max list size at `radius` errors: exhaustive over q^n words when q^n <= 2^16,
/// otherwise 1000 random words plus every codeword with each single-symbol change.
std::size_t max_list_size(const LinearCode& code, std::int64_t radius, std::uint64_t seed = 1);

/// n x m codeword grids with at most `radius` erroneous rows (a row is an
/// error when any unerased cell differs), sorted.
std::vector<Grid> interleaved_ball(const LinearCode& base, std::size_t m, const Grid& r, std::int64_t radius);

/// n2 x n1 tensor codewords within `radius` cell errors of r, sorted.
std::vector<Grid> tensor_ball(const LinearCode& c2, const LinearCode& c1, const Grid& r, std::int64_t radius);

/// Minimum support of an r-dimensional subcode, as a fraction of n, by
/// enumerating every r-tuple of messages.
Rational ghw(const LinearCode& code, std::size_t r);

/// Matrix rank by elimination written out here.
std::size_t rank(const ldlab::Field& f, Matrix m);

/// All k x m matrices of rank <= max_rank whose table is within `radius`
/// row mismatches of R (erased rows mismatch), sorted.
std::vector<Matrix> lin_ball(const ldlab::ReceivedTable& received, std::int64_t radius, std::size_t max_rank);

/// Binary Hadamard codewords (as message integers) with at most `radius`
/// mismatches, where * counts as a mismatch.
std::vector<std::uint64_t> hadamard_ball(const Word& r, std::size_t k, std::int64_t radius);

}  // namespace oracle
