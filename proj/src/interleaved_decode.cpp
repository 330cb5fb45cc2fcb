#include "ldlab/interleaved_decode.hpp"

#include <algorithm>
#include <map>

namespace ldlab {

std::uint64_t NaiveCounters::comparison_ceiling(std::size_t m, std::size_t n) const {
  return static_cast<std::uint64_t>(m) * m * n * max_column_list * max_prefix_list;
}

NaiveResult decode_naive(const InterleavedCode& code, const Grid& received, const Rational& eta) {
  const std::size_t n = code.length();
  const std::size_t m = code.m();
  if (received.rows() != n || received.cols() != m) throw Error(Errc::kLengthMismatch, "received grid shape");
  NaiveResult out;
  const std::int64_t budget = max_count_at_most(eta * Rational(static_cast<std::int64_t>(n)));
  if (budget < 0) return out;

  struct Prefix {
    std::vector<Word> columns;
    std::vector<bool> bad_row;
    std::size_t bad = 0;
  };
  std::vector<Prefix> prefixes(1);
  prefixes[0].bad_row.assign(n, false);

  for (std::size_t i = 0; i < m && !prefixes.empty(); ++i) {
    const Word column = received.column(i);
    const DecodeList li = list_decode_brute(code.base(), column, budget);
    ++out.counters.oracle_calls;
    out.counters.max_column_list = std::max(out.counters.max_column_list, li.size());
    std::vector<Prefix> next;
    for (const Prefix& p : prefixes) {
      for (const ListEntry& entry : li) {
        ++out.counters.candidate_checks;
        Prefix cand;
        cand.bad_row = p.bad_row;
        cand.bad = p.bad;
        for (std::size_t j = 0; j < n; ++j) {
          ++out.counters.cell_comparisons;
          if (!cand.bad_row[j] && !is_erased(column[j]) && column[j] != entry.codeword[j]) {
            cand.bad_row[j] = true;
            ++cand.bad;
          }
        }
        if (static_cast<std::int64_t>(cand.bad) > budget) continue;
        cand.columns = p.columns;
        cand.columns.push_back(entry.codeword);
        next.push_back(std::move(cand));
      }
    }
    prefixes = std::move(next);
    out.counters.max_prefix_list = std::max(out.counters.max_prefix_list, prefixes.size());
  }
  for (const Prefix& p : prefixes)
    if (p.columns.size() == m) out.list.push_back(code.from_columns(p.columns));
  std::sort(out.list.begin(), out.list.end());
  return out;
}

const char* color_name(EdgeColor c) {
  switch (c) {
    case EdgeColor::kWhite:
      return "WHITE";
    case EdgeColor::kBlue:
      return "BLUE";
    case EdgeColor::kRed:
      return "RED";
  }
  return "?";
}

std::vector<Grid> DecodeTree::leaf_labels() const {
  std::vector<Grid> out;
  for (const TreeNode& v : nodes) {
    if (v.level != m) continue;
    Grid g(n, m);
    for (std::size_t c = 0; c < m; ++c) g.set_column(c, v.label[c]);
    out.push_back(std::move(g));
  }
  return out;
}

DecodeTree erase_decode_tree(const InterleavedCode& code, const Grid& received, const Rational& eta) {
  const LinearCode& base = code.base();
  const std::size_t n = code.length();
  const std::size_t m = code.m();
  if (received.rows() != n || received.cols() != m) throw Error(Errc::kLengthMismatch, "received grid shape");
  const std::size_t d = base.min_distance();
  DecodeTree tree;
  tree.n = n;
  tree.m = m;
  tree.delta = base.relative_distance();
  tree.eta = eta;
  if (!(eta < tree.delta))
    throw Error(Errc::kRadiusTooLarge, "eta=" + eta.str() + " must be below delta=" + tree.delta.str());
  if (eta < Rational(0)) throw Error(Errc::kDomainError, "eta must be non-negative");
  const auto n_i = static_cast<std::int64_t>(n);
  const std::int64_t budget = max_count_at_most(eta * Rational(n_i));
  const Rational white_limit = (tree.delta - eta) * Rational(n_i);  // in absolute errors

  tree.exact_punctured_distance = base.codeword_count() <= kExactPuncturedLimit;
  std::map<std::vector<std::size_t>, std::size_t> memo;
  const auto punctured_distance = [&](const std::vector<std::size_t>& erased) -> std::size_t {
    if (!tree.exact_punctured_distance) return d - erased.size();
    if (auto it = memo.find(erased); it != memo.end()) return it->second;
    std::vector<bool> skip(n, false);
    for (auto j : erased) skip[j] = true;
    std::size_t best = n + 1;
    base.for_each_codeword([&](std::uint64_t rank, const Word& cw) {
      if (rank == 0) return;
      std::size_t w = 0;
      for (std::size_t j = 0; j < n; ++j) w += (!skip[j] && cw[j] != 0) ? 1 : 0;
      best = std::min(best, w);
    });
    memo.emplace(erased, best);
    return best;
  };

  TreeNode root;
  root.punctured_distance = punctured_distance(root.erased);
  root.radius = budget;
  tree.nodes.push_back(std::move(root));

  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (tree.nodes[v].level == m || tree.nodes[v].radius < 0) continue;
    const std::size_t level = tree.nodes[v].level;
    const std::vector<std::size_t> erased = tree.nodes[v].erased;
    const Word column = received.column(level);
    Word punctured = column;
    for (auto j : erased) punctured[j] = kErased;
    const DecodeList list = list_decode_erasures(base, punctured, tree.nodes[v].radius);

    std::vector<std::size_t> children;
    for (const ListEntry& entry : list) {
      TreeNode child;
      child.level = level + 1;
      child.label = tree.nodes[v].label;
      child.label.push_back(entry.codeword);
      child.erased = erased;
      for (std::size_t j = 0; j < n; ++j)
        if (!is_erased(punctured[j]) && punctured[j] != entry.codeword[j]) child.erased.push_back(j);
      std::sort(child.erased.begin(), child.erased.end());

      // Step-3 form: rows where the prefix disagrees with R_{<=level+1}.
      std::vector<std::size_t> direct;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c <= level; ++c) {
          const Symbol r = received(j, c);
          if (!is_erased(r) && r != child.label[c][j]) {
            direct.push_back(j);
            break;
          }
        }
      if (direct != child.erased) tree.nesting_consistent = false;

      TreeEdge edge;
      edge.from = v;
      edge.codeword = entry.codeword;
      edge.new_errors = entry.errors;
      edge.weight = Rational(static_cast<std::int64_t>(entry.errors), n_i);
      child.mu = tree.nodes[v].mu + edge.weight;
      child.radius = budget - static_cast<std::int64_t>(child.erased.size());
      const std::size_t dv = tree.nodes[v].punctured_distance;
      if (Rational(static_cast<std::int64_t>(entry.errors)) < white_limit)
        edge.color = EdgeColor::kWhite;
      else if (2 * entry.errors >= dv)
        edge.color = EdgeColor::kRed;
      else
        edge.color = EdgeColor::kBlue;
      // |S| <= floor(eta n) < d keeps the punctured code injective.
      child.punctured_distance =
          child.level < m && child.radius >= 0 ? punctured_distance(child.erased) : d - std::min(d, child.erased.size());

      const std::size_t child_index = tree.nodes.size();
      edge.to = child_index;
      child.in_edge = tree.edges.size();
      tree.nodes[v].out_edges.push_back(tree.edges.size());
      tree.edges.push_back(std::move(edge));
      tree.nodes.push_back(std::move(child));
      children.push_back(child_index);
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
  }
  return tree;
}

bool TreeStats::clean() const {
  return white_exclusivity_violations.empty() && blue_degree_violations.empty() && blue_path_violations.empty() &&
         red_path_violations.empty() && mu_violations.empty() && nesting_consistent;
}

TreeStats tree_stats(const DecodeTree& tree) {
  TreeStats st;
  st.nodes = tree.nodes.size();
  st.nesting_consistent = tree.nesting_consistent;
  st.limits = interleaved_params(tree.delta, tree.eta);
  if (tree.nodes.empty()) return st;

  for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
    const TreeNode& node = tree.nodes[v];
    std::size_t white = 0;
    std::size_t blue = 0;
    for (auto e : node.out_edges) {
      const TreeEdge& edge = tree.edges[e];
      white += edge.color == EdgeColor::kWhite ? 1 : 0;
      blue += edge.color == EdgeColor::kBlue ? 1 : 0;
      if (!(tree.nodes[edge.to].mu == node.mu + edge.weight)) st.mu_violations.push_back(edge.to);
    }
    if (white > 0 && node.out_edges.size() > 1) st.white_exclusivity_violations.push_back(v);
    if (blue > 1) st.blue_degree_violations.push_back(v);
    st.max_blue_out = std::max(st.max_blue_out, blue);
    if (node.out_edges.empty() && node.level < tree.m) ++st.dead_leaves;
  }

  struct Frame {
    std::size_t node;
    PathColors colors;
  };
  std::vector<Frame> stack{{0, {}}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    st.max_blue_on_path = std::max(st.max_blue_on_path, f.colors.blue);
    st.max_red_on_path = std::max(st.max_red_on_path, f.colors.red);
    if (static_cast<std::int64_t>(f.colors.blue) > st.limits.b) st.blue_path_violations.push_back(f.node);
    if (static_cast<std::int64_t>(f.colors.red) > st.limits.r) st.red_path_violations.push_back(f.node);
    const TreeNode& node = tree.nodes[f.node];
    if (node.level == tree.m) {
      ++st.leaves_at_level_m;
      st.per_path.push_back(f.colors);
      continue;
    }
    for (auto it = node.out_edges.rbegin(); it != node.out_edges.rend(); ++it) {
      const TreeEdge& edge = tree.edges[*it];
      PathColors c = f.colors;
      if (edge.color == EdgeColor::kWhite) ++c.white;
      if (edge.color == EdgeColor::kBlue) ++c.blue;
      if (edge.color == EdgeColor::kRed) ++c.red;
      stack.push_back({edge.to, c});
    }
  }
  return st;
}

InterleaveWitness interleave_lower_witness(const LinearCode& code, std::size_t m) {
  if (code.codeword_count() < 2) throw Error(Errc::kTrivialCode, "witness needs at least two codewords");
  if (m == 0) throw Error(Errc::kDomainError, "m must be at least 1");
  if (m >= 63) throw Error(Errc::kDomainError, "m too large for 2^m witnesses");
  const InterleavedCode ic(code, m);
  const Word c1 = code.min_weight_codeword();
  const Word zero(code.length(), 0);
  InterleaveWitness w;
  w.received = ic.from_columns(std::vector<Word>(m, c1));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Word> cols;
    for (std::size_t i = 0; i < m; ++i) cols.push_back((mask >> i) & 1u ? c1 : zero);
    Grid g = ic.from_columns(cols);
    const Distance dist = row_distance(g, w.received);
    w.max_distance = max(w.max_distance, Rational(static_cast<std::int64_t>(dist.errors),
                                                  static_cast<std::int64_t>(code.length())));
    w.codewords.push_back(std::move(g));
  }
  return w;
}

}  // namespace ldlab
