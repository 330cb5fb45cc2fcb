#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include "code_spec.hpp"
#include "experiments.hpp"
#include "ldlab/bounds.hpp"
#include "ldlab/error.hpp"
#include "ldlab/families.hpp"
#include "ldlab/interleaved_decode.hpp"
#include "ldlab/io.hpp"
#include "ldlab/lintrans.hpp"
#include "ldlab/tensor_decode.hpp"

namespace {

using json = nlohmann::json;
using namespace ldlab;

struct Globals {
  std::string out;
  std::uint64_t seed = 1;
};

void emit(const Globals& g, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (g.out.empty())
    std::cout << text;
  else
    write_text_file(g.out, text);
}

json words_json(const std::vector<Grid>& grids) {
  json out = json::array();
  for (const Grid& g : grids) out.push_back(format_grid(g));
  return out;
}

json code_json(const LinearCode& code) {
  return {{"tag", code.tag()},
          {"q", code.field().order()},
          {"n", code.length()},
          {"k", code.dimension()},
          {"d", code.min_distance()},
          {"relative_distance", code.relative_distance().str()},
          {"generator", format_code(code)}};
}

JohnsonVariant parse_variant(const std::string& name) {
  if (name == "alphabet-free") return JohnsonVariant::kAlphabetFree;
  if (name == "binary") return JohnsonVariant::kBinary;
  if (name == "qary") return JohnsonVariant::kQary;
  throw Error(Errc::kSpecInvalid, "unknown Johnson variant '" + name + "'");
}

json bound_json(const BoundReport& rep) {
  return {{"name", rep.name}, {"params", rep.params},         {"extras", rep.extras},
          {"value", rep.value}, {"log_domain", rep.log_domain}, {"formula", rep.formula}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"List decoding laboratory for interleaved, tensor and linear-transformation codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--out", g.out, "write JSON output to this path instead of stdout");
  app.add_option("--seed", g.seed, "base seed; per-trial seeds are derived from it");

  // code make | info
  auto* code = app.add_subcommand("code", "construct or describe codes");
  code->require_subcommand(1);
  std::string code_desc, save_path;
  auto* make = code->add_subcommand("make", "build a code and print its generator");
  make->add_option("code", code_desc, "had:q:k, rs:q:n:deg, tensor:A,B or a generator file")->required();
  make->add_option("--save", save_path, "also write the generator file here");
  auto* info = code->add_subcommand("info", "parameters of a code");
  info->add_option("code", code_desc, "code description")->required();

  // corrupt
  auto* corrupt_cmd = app.add_subcommand("corrupt", "corrupt a random codeword or a given word");
  std::size_t errors = 0, erasures = 0;
  std::string word_path;
  corrupt_cmd->add_option("code", code_desc, "code description")->required();
  corrupt_cmd->add_option("--errors", errors, "symbols replaced by a different symbol");
  corrupt_cmd->add_option("--erasures", erasures, "further positions set to *");
  corrupt_cmd->add_option("--word", word_path, "word file to corrupt instead of a random codeword");

  // decode interleaved | tensor | lintrans | list
  auto* decode = app.add_subcommand("decode", "list decoders");
  decode->require_subcommand(1);
  std::string grid_path, planted_path, eta_text = "1/4", eta1_text = "3/8", eta2_text = "3/8", eps_text = "1/16";
  std::string c1_desc, c2_desc, mode = "full";
  std::size_t k = 2;
  std::uint32_t q = 2;
  std::int64_t radius = 0;
  auto* dec_int = decode->add_subcommand("interleaved", "all interleaved codewords within eta (row metric)");
  dec_int->add_option("code", code_desc, "base code")->required();
  dec_int->add_option("--grid", grid_path, "received n x m grid file")->required();
  dec_int->add_option("--eta", eta_text, "relative radius p/q");
  dec_int->add_flag("--tree", "report erase-decode tree statistics as well");
  auto* dec_ten = decode->add_subcommand("tensor", "four-phase tensor decoder");
  dec_ten->add_option("--c1", c1_desc, "row code (length n1)")->required();
  dec_ten->add_option("--c2", c2_desc, "column code (length n2)")->required();
  dec_ten->add_option("--grid", grid_path, "received n2 x n1 grid file")->required();
  dec_ten->add_option("--eta1", eta1_text, "row-code radius p/q");
  dec_ten->add_option("--eta2", eta2_text, "column-code radius p/q");
  dec_ten->add_option("--eps", eps_text, "slack p/q");
  dec_ten->add_option("--planted", planted_path, "planted codeword grid; enables planted advice");
  auto* dec_lin = decode->add_subcommand("lintrans", "linear transformations near a received table");
  dec_lin->add_option("--q", q, "field size");
  dec_lin->add_option("--k", k, "input dimension");
  dec_lin->add_option("--grid", grid_path, "received q^k x m table")->required();
  dec_lin->add_option("--eps", eps_text, "slack p/q");
  dec_lin->add_option("--mode", mode, "rank1, rank1q, rank2 or full")
      ->check(CLI::IsMember({"rank1", "rank1q", "rank2", "full"}));
  auto* dec_list = decode->add_subcommand("list", "brute-force errors-and-erasures list decoding");
  dec_list->add_option("code", code_desc, "code description")->required();
  dec_list->add_option("--word", word_path, "received word file")->required();
  dec_list->add_option("--radius", radius, "maximum number of errors")->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "bound formulas");
  bounds->require_subcommand(1);
  std::string delta_text = "1/2", variant = "alphabet-free";
  double delta = 0.5, ell = 2, eps = 0.1, eta_real = 0.1;
  std::uint64_t ell_int = 2, rr = 1, mm = 2;
  auto* b_j = bounds->add_subcommand("johnson", "Johnson radius");
  b_j->add_option("--delta", delta, "relative distance");
  b_j->add_option("--variant", variant, "alphabet-free, binary or qary");
  b_j->add_option("--q", q, "alphabet size for qary");
  auto* b_int = bounds->add_subcommand("interleaved", "interleaved list-size bound C(b+r,r) ell^r");
  b_int->add_option("--delta", delta_text, "relative distance p/q");
  b_int->add_option("--eta", eta_text, "radius p/q");
  b_int->add_option("--ell", ell_int, "base list size");
  auto* b_ghw = bounds->add_subcommand("ghw", "generalized Hamming weight and its lower bound");
  b_ghw->add_option("code", code_desc, "code description")->required();
  b_ghw->add_option("--r", rr, "subcode dimension");
  auto* b_tensor = bounds->add_subcommand("tensor", "tensor list-size formula");
  b_tensor->add_option("--q", q, "alphabet size");
  b_tensor->add_option("--delta", delta, "row-code relative distance");
  b_tensor->add_option("--ell", ell, "row and column list size");
  b_tensor->add_option("--eps", eps, "slack");
  auto* b_rep = bounds->add_subcommand("repeated-tensor", "doubling recursion for C^{(x)m}");
  b_rep->add_option("--q", q, "alphabet size");
  b_rep->add_option("--delta", delta, "relative distance");
  b_rep->add_option("--ell", ell, "list size");
  b_rep->add_option("--eps", eps, "slack");
  b_rep->add_option("--m", mm, "tensor power, a power of two");
  auto* b_bin = bounds->add_subcommand("binary-interleaved", "binary interleaved bounds with Johnson list sizes");
  b_bin->add_option("--delta", delta, "relative distance");
  b_bin->add_option("--eta", eta_real, "radius");
  b_bin->add_option("--eps", eps, "slack");

  // experiment run | list
  auto* experiment = app.add_subcommand("experiment", "acceptance experiments");
  experiment->require_subcommand(1);
  auto* e_list = experiment->add_subcommand("list", "available experiments");
  auto* e_run = experiment->add_subcommand("run", "run one experiment; exit code 0 iff every verdict passes");
  std::string exp_name, spec_path, csv_path;
  std::uint64_t trials = 0;
  std::vector<std::string> params;
  e_run->add_option("name", exp_name, "experiment name");
  e_run->add_option("--spec", spec_path, "JSON spec file (name, params, seed, trials, out, csv)");
  e_run->add_option("--trials", trials, "override the default trial count");
  e_run->add_option("--param", params, "key=value parameter override (value as JSON or p/q)");
  e_run->add_option("--csv", csv_path, "CSV export path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (make->parsed()) {
      const LinearCode c = cli::make_code(code_desc);
      if (!save_path.empty()) write_text_file(save_path, format_code(c));
      emit(g, code_json(c));
    } else if (info->parsed()) {
      emit(g, code_json(cli::make_code(code_desc)));
    } else if (corrupt_cmd->parsed()) {
      const LinearCode c = cli::make_code(code_desc);
      Rng rng(derive_seed(g.seed, 0));
      Word original;
      if (!word_path.empty()) {
        original = read_word_file(word_path);
      } else {
        Word msg(c.dimension());
        for (Symbol& s : msg) s = static_cast<Symbol>(uniform_below(rng, c.field().order()));
        original = c.encode(msg);
      }
      if (errors + erasures > original.size()) throw Error(Errc::kDomainError, "more corruptions than positions");
      Word received = corrupt(c.field(), original, errors, rng);
      std::size_t placed = 0;
      for (std::size_t pos : sample_subset(rng, received.size(), received.size())) {
        if (placed == erasures) break;
        if (received[pos] == original[pos] && !is_erased(received[pos])) {
          received[pos] = kErased;
          ++placed;
        }
      }
      emit(g, {{"code", c.tag()}, {"seed", g.seed}, {"original", format_word(original)},
               {"received", format_word(received)}, {"errors", errors}, {"erasures", placed}});
    } else if (dec_int->parsed()) {
      const LinearCode base = cli::make_code(code_desc);
      const Grid r = read_grid_file(grid_path);
      const InterleavedCode ic(base, r.cols());
      const Rational eta = Rational::parse(eta_text);
      const NaiveResult res = decode_naive(ic, r, eta);
      json doc = {{"code", base.tag()},
                  {"m", r.cols()},
                  {"eta", eta.str()},
                  {"list_size", res.list.size()},
                  {"list", words_json(res.list)},
                  {"counters",
                   {{"oracle_calls", res.counters.oracle_calls},
                    {"candidate_checks", res.counters.candidate_checks},
                    {"cell_comparisons", res.counters.cell_comparisons},
                    {"max_column_list", res.counters.max_column_list},
                    {"max_prefix_list", res.counters.max_prefix_list}}}};
      if (dec_int->count("--tree") > 0) {
        const TreeStats st = tree_stats(erase_decode_tree(ic, r, eta));
        doc["tree"] = {{"leaves_at_level_m", st.leaves_at_level_m}, {"invariants_clean", st.clean()}};
      }
      emit(g, doc);
    } else if (dec_ten->parsed()) {
      const LinearCode c1 = cli::make_code(c1_desc);
      const LinearCode c2 = cli::make_code(c2_desc);
      TensorDecodeOptions opt;
      opt.eta1 = Rational::parse(eta1_text);
      opt.eta2 = Rational::parse(eta2_text);
      opt.eps = Rational::parse(eps_text);
      opt.seed = derive_seed(g.seed, 0);
      if (!planted_path.empty()) {
        opt.mode = AdviceMode::kPlanted;
        opt.planted = read_grid_file(planted_path);
      } else {
        opt.mode = AdviceMode::kEnumerate;
      }
      const TensorDecodeResult res = tensor_decode(c1, c2, read_grid_file(grid_path), opt);
      emit(g, {{"c1", c1.tag()},
               {"c2", c2.tag()},
               {"eta_star", res.eta_star.str()},
               {"target", res.target.str()},
               {"m1", res.sizes.m1},
               {"m2", res.sizes.m2},
               {"advice_tried", res.advice_tried},
               {"list_size", res.list.size()},
               {"list", words_json(res.list)}});
    } else if (dec_lin->parsed()) {
      const FieldPtr f = make_field(q);
      const ReceivedTable r = make_received(f, k, read_grid_file(grid_path));
      const Rational e = Rational::parse(eps_text);
      LinDecodeResult res;
      json extra = json::object();
      if (mode == "rank1") {
        res = decode_rank1(r, e);
      } else if (mode == "rank1q") {
        res = decode_rank1_q(r, e);
      } else if (mode == "rank2") {
        res = decode_rank2(r, e);
      } else {
        const FullDecodeResult full = decode_full(r, e);
        res = full.result;
        extra = {{"rank_le2", full.rank_le2}, {"rank2_checked", full.rank2_checked},
                 {"rank2_consistent", full.rank2_consistent}};
      }
      json list = json::array();
      for (const LinEntry& entry : res.list) {
        Grid mg(entry.M.rows(), entry.M.cols());
        for (std::size_t i = 0; i < entry.M.rows(); ++i) mg.set_row(i, entry.M.row(i));
        list.push_back({{"matrix", format_grid(mg)}, {"rank", entry.rank}, {"errors", entry.errors}});
      }
      emit(g, {{"q", q}, {"k", k}, {"m", r.m}, {"eps", e.str()}, {"mode", mode}, {"budget", res.budget},
               {"list_size", res.list.size()}, {"list", list}, {"bound", res.bound},
               {"within_bound", res.within_bound}, {"full", extra}});
    } else if (dec_list->parsed()) {
      const LinearCode c = cli::make_code(code_desc);
      const DecodeList list = list_decode_erasures(c, read_word_file(word_path), radius);
      json out = json::array();
      for (const ListEntry& e : list)
        out.push_back({{"message_rank", e.message_rank}, {"codeword", format_word(e.codeword)}, {"errors", e.errors}});
      emit(g, {{"code", c.tag()}, {"radius", radius}, {"list_size", list.size()}, {"list", out}});
    } else if (b_j->parsed()) {
      emit(g, {{"variant", variant}, {"delta", delta}, {"q", q},
               {"radius", johnson_radius(parse_variant(variant), delta, q)}});
    } else if (b_int->parsed()) {
      const Rational d = Rational::parse(delta_text), e = Rational::parse(eta_text);
      const InterleavedParams p = interleaved_params(d, e);
      json doc = bound_json(interleaved_bound(d, e, ell_int));
      doc["b"] = p.b;
      doc["r"] = p.r;
      emit(g, doc);
    } else if (b_ghw->parsed()) {
      const LinearCode c = cli::make_code(code_desc);
      emit(g, {{"code", c.tag()}, {"r", rr}, {"ghw", ghw(c, rr).str()},
               {"lower_bound", ghw_lower_bound(c.field().order(), c.relative_distance(), rr).str()}});
    } else if (b_tensor->parsed()) {
      emit(g, bound_json(tensor_listsize_formula(q, delta, ell, ell, eps)));
    } else if (b_rep->parsed()) {
      emit(g, bound_json(repeated_tensor_bound(q, delta, ell, eps, mm)));
    } else if (b_bin->parsed()) {
      json doc = json::array();
      for (const BoundReport& rep : binary_interleaved_bounds_johnson(delta, eta_real, eps)) doc.push_back(bound_json(rep));
      emit(g, doc);
    } else if (e_list->parsed()) {
      json doc = json::array();
      for (const exp::ExperimentInfo& e : exp::experiment_list())
        doc.push_back({{"name", e.name}, {"criterion", e.criterion}, {"summary", e.summary}});
      emit(g, doc);
    } else if (e_run->parsed()) {
      exp::ExperimentSpec spec;
      if (!spec_path.empty()) spec = exp::spec_from_json(json::parse(read_text_file(spec_path)));
      if (!exp_name.empty()) spec.name = exp_name;
      if (spec.name.empty()) throw Error(Errc::kSpecInvalid, "no experiment name given");
      if (app.get_option("--seed")->count() > 0) spec.seed = g.seed;
      if (trials > 0) spec.trials = trials;
      if (!csv_path.empty()) spec.csv = csv_path;
      if (!g.out.empty()) spec.out = g.out;
      for (const std::string& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) throw Error(Errc::kSpecInvalid, "parameter '" + p + "' is not key=value");
        const std::string key = p.substr(0, eq), value = p.substr(eq + 1);
        json parsed = json::parse(value, nullptr, false);
        spec.params[key] = parsed.is_discarded() ? json(value) : parsed;
      }
      const exp::ExperimentReport report = exp::run_experiment(spec);
      if (spec.out.empty())
        std::cout << report.doc.dump(2) << "\n";
      exp::write_outputs(spec, report);
      return report.pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: SpecInvalid: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
