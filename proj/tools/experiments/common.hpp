#pragma once

#include <string>
#include <vector>

#include "ldlab/families.hpp"
#include "ldlab/lintrans.hpp"

namespace ldlab::exp {

struct NamedCode {
  std::string name;
  LinearCode code;
};

FieldPtr gf(std::uint32_t q);

/// Had(2,2), Had(2,3) and RS over GF(5) on all five points with degree <= 1.
std::vector<NamedCode> interleaved_test_codes();

Word random_message(const Field& f, std::size_t k, Rng& rng);
Word random_codeword(const LinearCode& code, Rng& rng);
Grid random_codeword_grid(const InterleavedCode& ic, Rng& rng);
Grid random_grid(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);

/// Replaces `count` distinct rows with random rows that differ from the original.
Grid corrupt_rows(const Field& f, Grid g, std::size_t count, Rng& rng);
/// Replaces `count` distinct cells with different symbols.
Grid corrupt_cells(const Field& f, Grid g, std::size_t count, Rng& rng);

/// Grid rank over the field.
std::size_t grid_rank(const Field& f, const Grid& g);

}  // namespace ldlab::exp
