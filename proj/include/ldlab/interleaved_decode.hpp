#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ldlab/bounds.hpp"
#include "ldlab/families.hpp"

namespace ldlab {

/// Work counters for decode_naive.
struct NaiveCounters {
  std::uint64_t oracle_calls = 0;
  std::uint64_t candidate_checks = 0;
  std::uint64_t cell_comparisons = 0;
  std::size_t max_column_list = 0;  // max |L_i|
  std::size_t max_prefix_list = 0;  // max |L_{<=i}|

  /// m^2 n max|L_i| max|L_{<=i}|, the ceiling for cell_comparisons.
  std::uint64_t comparison_ceiling(std::size_t m, std::size_t n) const;
};

struct NaiveResult {
  std::vector<Grid> list;  // sorted
  NaiveCounters counters;
};

/// Column-by-column decoding with prefix filtering: keeps every prefix
/// (c_1..c_i) whose row-symbol distance to R_{<=i} is at most eta.
NaiveResult decode_naive(const InterleavedCode& code, const Grid& received, const Rational& eta);

enum class EdgeColor { kWhite, kBlue, kRed };
const char* color_name(EdgeColor c);

struct TreeEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Word codeword;
  std::size_t new_errors = 0;  // disagreements outside S(from)
  Rational weight;             // new_errors / n
  EdgeColor color = EdgeColor::kWhite;
};

struct TreeNode {
  std::size_t level = 0;
  std::vector<std::size_t> erased;  // S(v), ascending
  Rational mu;
  std::size_t punctured_distance = 0;  // n * delta(v)
  std::int64_t radius = 0;             // floor(eta n) - |S(v)|, errors allowed below v
  std::vector<std::size_t> out_edges;
  std::optional<std::size_t> in_edge;
  std::vector<Word> label;  // c_1 .. c_level
};

/// Execution tree of the erase-and-decode procedure: each node list decodes the
/// next column with S(v) erased, and each child erases its new disagreements.
struct DecodeTree {
  std::size_t n = 0;
  std::size_t m = 0;
  Rational delta;
  Rational eta;
  bool exact_punctured_distance = false;
  bool nesting_consistent = true;  // S(child) equals the prefix-disagreement set
  std::vector<TreeNode> nodes;
  std::vector<TreeEdge> edges;

  std::vector<Grid> leaf_labels() const;  // level-m leaves, in tree order
};

/// Punctured-distance memoisation kicks in for codes with at most this many codewords.
inline constexpr std::uint64_t kExactPuncturedLimit = std::uint64_t{1} << 12;

/// Throws RadiusTooLarge when eta >= delta.
DecodeTree erase_decode_tree(const InterleavedCode& code, const Grid& received, const Rational& eta);

struct PathColors {
  std::size_t white = 0;
  std::size_t blue = 0;
  std::size_t red = 0;
};

struct TreeStats {
  std::size_t nodes = 0;
  std::size_t leaves_at_level_m = 0;
  std::size_t dead_leaves = 0;
  std::size_t max_blue_out = 0;
  std::size_t max_blue_on_path = 0;
  std::size_t max_red_on_path = 0;
  InterleavedParams limits;
  std::vector<PathColors> per_path;  // one per level-m leaf
  // Node or leaf indices at which a check failed; all empty for a correct tree.
  std::vector<std::size_t> white_exclusivity_violations;
  std::vector<std::size_t> blue_degree_violations;
  std::vector<std::size_t> blue_path_violations;
  std::vector<std::size_t> red_path_violations;
  std::vector<std::size_t> mu_violations;
  bool nesting_consistent = true;

  bool clean() const;
};

TreeStats tree_stats(const DecodeTree& tree);

struct InterleaveWitness {
  Grid received;
  std::vector<Grid> codewords;  // 2^m grids C_T
  Rational max_distance;        // max over T of the row-symbol distance to R
};

/// R repeats a minimum-weight codeword c1 in every column; C_T puts c1 on the
/// columns in T and zero elsewhere.
InterleaveWitness interleave_lower_witness(const LinearCode& code, std::size_t m);

}  // namespace ldlab
