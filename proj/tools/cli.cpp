#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "rankdual/axioms.hpp"
#include "rankdual/duality.hpp"
#include "rankdual/tutte.hpp"
#include "rankdual/verify.hpp"

namespace rankdual::cli {

using nlohmann::json;

DocumentError::DocumentError(std::string source, std::string location, const std::string& message)
    : InputError(source + ":" + location + ": " + message), location_(std::move(location)) {}

namespace {

class Reader {
 public:
  Reader(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {
    try {
      doc_ = json::parse(text_.begin(), text_.end());
    } catch (const json::parse_error& e) {
      throw DocumentError(source_, line_col(e.byte), strip_prefix(e.what()));
    }
    if (!doc_.is_object()) fail("", "document must be a JSON object");
  }

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    throw DocumentError(source_, path.empty() ? "/" : path, message);
  }

  const json& doc() const { return doc_; }

  std::string kind() const {
    const json& k = field(doc_, "", "kind");
    if (!k.is_string()) fail("/kind", "expected a string");
    return k.get<std::string>();
  }

  void allow_only(const json& obj, const std::string& path, std::initializer_list<std::string_view> keys) const {
    for (const auto& [key, _] : obj.items()) {
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) fail(path + "/" + key, "unexpected key");
    }
  }

  const json& field(const json& obj, const std::string& path, const char* key) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing key '") + key + "'");
    return *it;
  }

  std::vector<std::string> strings(const json& arr, const std::string& path) const {
    if (!arr.is_array()) fail(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_string()) fail(path + "/" + std::to_string(i), "expected a string");
      out.push_back(arr[i].get<std::string>());
    }
    return out;
  }

  Rank integer(const json& v, const std::string& path) const {
    if (v.is_number_unsigned()) {
      if (v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Rank>::max())) {
        fail(path, "integer out of range");
      }
      return static_cast<Rank>(v.get<std::uint64_t>());
    }
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<Rank>();
  }

  // Runs a library constructor, attributing its InputError to `path`.
  template <typename Fn>
  auto at(const std::string& path, Fn&& fn) const -> decltype(fn()) {
    try {
      return fn();
    } catch (const DocumentError&) {
      throw;
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }

 private:
  std::string line_col(std::size_t byte) const {
    const std::size_t end = std::min(byte, text_.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return std::to_string(line) + ":" + std::to_string(col);
  }

  static std::string strip_prefix(std::string what) {
    // "[json.exception.parse_error.101] parse error at line 1, column 2: ..."
    const auto colon = what.find(": ");
    return colon == std::string::npos ? what : what.substr(colon + 2);
  }

  std::string_view text_;
  std::string source_;
  json doc_;
};

RankTable read_rank_table_kind(const Reader& rd) {
  const json& doc = rd.doc();
  rd.allow_only(doc, "", {"kind", "ground", "ranks"});
  const auto labels = rd.strings(rd.field(doc, "", "ground"), "/ground");
  const GroundSet ground = rd.at("/ground", [&] { return GroundSet(labels); });
  const json& ranks = rd.field(doc, "", "ranks");
  if (!ranks.is_array()) rd.fail("/ranks", "expected an array");

  std::vector<Rank> values(ground.subset_count(), 0);
  std::vector<std::size_t> seen_at(ground.subset_count(), 0);  // entry index + 1
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const std::string path = "/ranks/" + std::to_string(i);
    const json& entry = ranks[i];
    if (!entry.is_object()) rd.fail(path, "expected an object with 'set' and 'rank'");
    rd.allow_only(entry, path, {"set", "rank"});
    const auto members = rd.strings(rd.field(entry, path, "set"), path + "/set");
    const Subset s = rd.at(path + "/set", [&] { return ground.subset_of(members); });
    if (seen_at[s.bits()] != 0) {
      rd.fail(path + "/set", "duplicate subset " + ground.format(s) + " (first at /ranks/" +
                                 std::to_string(seen_at[s.bits()] - 1) + ")");
    }
    seen_at[s.bits()] = i + 1;
    values[s.bits()] = rd.integer(rd.field(entry, path, "rank"), path + "/rank");
  }
  for (std::size_t m = 0; m < seen_at.size(); ++m) {
    if (seen_at[m] == 0) rd.fail("/ranks", "missing subset " + ground.format(Subset(static_cast<Mask>(m))));
  }
  return RankTable(ground, std::move(values));
}

std::vector<LabeledEdge> read_edges(const Reader& rd) {
  const json& edges = rd.field(rd.doc(), "", "edges");
  if (!edges.is_array()) rd.fail("/edges", "expected an array");
  std::vector<LabeledEdge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "/edges/" + std::to_string(i);
    if (!edges[i].is_object()) rd.fail(path, "expected an object with 'label' and 'ends'");
    rd.allow_only(edges[i], path, {"label", "ends"});
    const json& label = rd.field(edges[i], path, "label");
    if (!label.is_string()) rd.fail(path + "/label", "expected a string");
    const auto ends = rd.strings(rd.field(edges[i], path, "ends"), path + "/ends");
    if (ends.size() != 2) rd.fail(path + "/ends", "expected exactly two endpoints");
    out.push_back({label.get<std::string>(), ends[0], ends[1]});
  }
  return out;
}

RootedGraph rooted_graph_of(const Reader& rd) {
  rd.allow_only(rd.doc(), "", {"kind", "vertices", "root", "edges"});
  auto vertices = rd.strings(rd.field(rd.doc(), "", "vertices"), "/vertices");
  const json& root = rd.field(rd.doc(), "", "root");
  if (!root.is_string()) rd.fail("/root", "expected a string");
  auto edges = read_edges(rd);
  return rd.at("", [&] { return RootedGraph(std::move(vertices), root.get<std::string>(), std::move(edges)); });
}

Tree tree_of(const Reader& rd) {
  rd.allow_only(rd.doc(), "", {"kind", "vertices", "edges"});
  auto vertices = rd.strings(rd.field(rd.doc(), "", "vertices"), "/vertices");
  auto edges = read_edges(rd);
  return rd.at("", [&] { return Tree(std::move(vertices), std::move(edges)); });
}

RankTable uniform_of(const Reader& rd) {
  rd.allow_only(rd.doc(), "", {"kind", "ground", "rank"});
  auto labels = rd.strings(rd.field(rd.doc(), "", "ground"), "/ground");
  const Rank k = rd.integer(rd.field(rd.doc(), "", "rank"), "/rank");
  if (k < 0) rd.fail("/rank", "rank must be non-negative");
  return rd.at("", [&] { return uniform_matroid(std::move(labels), static_cast<std::size_t>(k)); });
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RankTable load_table(const std::string& path) { return read_rank_table(slurp(path), path); }

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (text.back() == ',') out.emplace_back();
  return out;
}

std::string set_list(const GroundSet& ground, const std::vector<Subset>& sets) {
  std::string out;
  for (Subset s : sets) {
    out += ' ';
    out += ground.format(s);
  }
  return out;
}

struct Options {
  std::vector<std::string> inputs;
  std::string element;
  std::string contract_set;
  std::string delete_set;
  std::string method = "subset";
  std::string pivot = "lowest";
  std::string system;
  std::string s_input;
  std::size_t max_witnesses = 5;
  std::string closure_set;
  std::string structure;
  std::string ground;
  Rank rank = 0;
  std::size_t n = 0;
  std::string constraint = "all-normalized-subcardinal-monotone";
  bool count_only = false;
  Rank low = -1;
  Rank high = 3;
  std::string suite;
  std::string params;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  bool list = false;
};

int print_report(const AxiomReport& report, const GroundSet& ground, std::ostream& out) {
  out << report.to_text(ground);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int run_check(const Options& o, std::ostream& out) {
  const RankTable g = load_table(o.inputs.front());
  CheckOptions options;
  options.max_witnesses = o.max_witnesses;
  if (o.system == "matroid") return print_report(check_matroid(g, options), g.ground(), out);
  if (o.system == "greedoid") return print_report(check_greedoid(g, options), g.ground(), out);
  if (o.system == "dual-greedoid") return print_report(check_dual_greedoid(g, options), g.ground(), out);
  if (o.system == "antimatroid") return print_report(check_antimatroid(g, options), g.ground(), out);
  if (!o.s_input.empty()) {
    return print_report(check_demimatroid_triple(g, load_table(o.s_input), options), g.ground(), out);
  }
  return print_report(check_demimatroid_characterization(g, options), g.ground(), out);
}

int run_feasible(const Options& o, std::ostream& out) {
  const RankTable g = load_table(o.inputs.front());
  const auto d = feasible_descriptors(g);
  const auto& ground = g.ground();
  out << "feasible:" << set_list(ground, d.feasible.members()) << "\n";
  out << "bases:" << set_list(ground, d.bases) << "\n";
  out << "spanning:" << set_list(ground, d.spanning) << "\n";
  out << "full: " << (d.full ? "yes" : "no") << "\n";
  out << "loops: " << ground.format(d.loops) << "\n";
  return kExitOk;
}

int run_build(const Options& o, std::ostream& out) {
  if (o.structure == "uniform" && o.inputs.empty()) {
    if (o.rank < 0) throw InputError("--rank must be non-negative");
    out << write_rank_table(uniform_matroid(split_labels(o.ground), static_cast<std::size_t>(o.rank)));
    return kExitOk;
  }
  if (o.inputs.empty()) throw InputError("build " + o.structure + " needs --in");
  const std::string text = slurp(o.inputs.front());
  if (o.structure == "branching") {
    out << write_rank_table(branching_greedoid(read_rooted_graph(text, o.inputs.front())));
  } else if (o.structure == "pruning") {
    out << write_rank_table(pruning_antimatroid(read_tree(text, o.inputs.front())));
  } else {
    const RankTable g = read_rank_table(text, o.inputs.front());
    out << write_rank_table(g);
  }
  return kExitOk;
}

int run_enumerate(const Options& o, std::ostream& out) {
  EnumSpec spec{o.n, parse_constraint(o.constraint), o.low, o.high};
  if (o.count_only) {
    out << count_tables(spec) << "\n";
    return kExitOk;
  }
  enumerate_tables(spec, [&](const RankTable& g) { out << describe_table(g) << "\n"; });
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const auto& info : suite_catalog()) {
      out << info.name << (info.randomized ? " [seed]" : "") << ": " << info.summary << "\n";
    }
    return kExitOk;
  }
  if (o.suite.empty()) throw InputError("verify needs --suite (or --list)");
  SuiteParams params = SuiteParams::parse(o.params);
  if (o.seed) params.seed = o.seed;
  if (!params.has("threads")) {
    if (const char* env = std::getenv("RANKDUAL_THREADS"); env != nullptr && *env != '\0') {
      SuiteParams::integer_from(env, "RANKDUAL_THREADS");
      params.set("threads", env);
    }
  }
  const SuiteResult result = run_suite(o.suite, params);
  out << result.to_text(o.timing);
  return result.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

RankTable read_rank_table(std::string_view text, const std::string& source) {
  const Reader rd(text, source);
  const std::string kind = rd.kind();
  if (kind == "rank-table") return read_rank_table_kind(rd);
  if (kind == "rooted-graph") return branching_greedoid(rooted_graph_of(rd));
  if (kind == "tree") return pruning_antimatroid(tree_of(rd));
  if (kind == "uniform") return uniform_of(rd);
  rd.fail("/kind", "unknown document kind '" + kind + "' (expected rank-table, rooted-graph, tree, or uniform)");
}

RootedGraph read_rooted_graph(std::string_view text, const std::string& source) {
  const Reader rd(text, source);
  if (rd.kind() != "rooted-graph") rd.fail("/kind", "expected kind 'rooted-graph'");
  return rooted_graph_of(rd);
}

Tree read_tree(std::string_view text, const std::string& source) {
  const Reader rd(text, source);
  if (rd.kind() != "tree") rd.fail("/kind", "expected kind 'tree'");
  return tree_of(rd);
}

std::string write_rank_table(const RankTable& g) {
  const auto& ground = g.ground();
  std::string out = "{\n  \"kind\": \"rank-table\",\n  \"ground\": [";
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (i > 0) out += ", ";
    out += json(ground.label(i)).dump();
  }
  out += "],\n  \"ranks\": [\n";
  for (std::size_t m = 0; m < ground.subset_count(); ++m) {
    const Subset s(static_cast<Mask>(m));
    out += "    {\"set\": [";
    bool first = true;
    for (std::size_t i : s.elements()) {
      if (!first) out += ", ";
      first = false;
      out += json(ground.label(i)).dump();
    }
    out += "], \"rank\": " + std::to_string(g[s]) + "}";
    out += m + 1 < ground.subset_count() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized rank-function duality, Tutte polynomials, and axiom checks", "rankdual"};
  app.set_version_flag("--version", "rankdual 0.1.0");
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* cmd) { cmd->add_option("--in,-i", o.inputs, "input document ('-' for stdin)")->required(); };

  auto* dual_cmd = app.add_subcommand("dual", "print the dual rank table");
  input(dual_cmd);
  auto* delete_cmd = app.add_subcommand("delete", "delete one element");
  input(delete_cmd);
  delete_cmd->add_option("-p,--element", o.element, "element label")->required();
  auto* contract_cmd = app.add_subcommand("contract", "contract one element");
  input(contract_cmd);
  contract_cmd->add_option("-p,--element", o.element, "element label")->required();
  auto* minor_cmd = app.add_subcommand("minor", "contract and delete disjoint label sets");
  input(minor_cmd);
  minor_cmd->add_option("--contract", o.contract_set, "comma-separated labels");
  minor_cmd->add_option("--delete", o.delete_set, "comma-separated labels");
  auto* sum_cmd = app.add_subcommand("sum", "direct sum of two tables");
  sum_cmd->add_option("--in,-i", o.inputs, "two input documents")->required()->expected(2);
  auto* tutte_cmd = app.add_subcommand("tutte", "generalized Tutte polynomial");
  input(tutte_cmd);
  tutte_cmd->add_option("--method", o.method)->check(CLI::IsMember({"subset", "recursive"}));
  tutte_cmd->add_option("--pivot", o.pivot)->check(CLI::IsMember({"lowest", "highest", "middle"}));
  auto* check_cmd = app.add_subcommand("check", "check an axiom system");
  check_cmd->add_option("system", o.system)
      ->required()
      ->check(CLI::IsMember({"matroid", "greedoid", "dual-greedoid", "antimatroid", "demimatroid"}));
  input(check_cmd);
  check_cmd->add_option("--s", o.s_input, "second rank table for the demi-matroid triple check");
  check_cmd->add_option("--max-witnesses", o.max_witnesses, "witnesses printed per axiom")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  auto* closure_cmd = app.add_subcommand("closure", "convex closure in a full antimatroid");
  input(closure_cmd);
  closure_cmd->add_option("--set", o.closure_set, "comma-separated labels")->required();
  auto* feasible_cmd = app.add_subcommand("feasible", "feasible sets, bases, spanning sets, loops");
  input(feasible_cmd);
  auto* build_cmd = app.add_subcommand("build", "rank table of a structure");
  build_cmd->add_option("structure", o.structure)
      ->required()
      ->check(CLI::IsMember({"branching", "pruning", "uniform"}));
  build_cmd->add_option("--in,-i", o.inputs, "structure document");
  build_cmd->add_option("--ground", o.ground, "uniform: comma-separated labels");
  build_cmd->add_option("--rank", o.rank, "uniform: rank k");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list every small table of a class");
  enumerate_cmd->add_option("--n", o.n)->required();
  enumerate_cmd->add_option("--constraint", o.constraint);
  enumerate_cmd->add_flag("--count", o.count_only, "print only the number of tables");
  enumerate_cmd->add_option("--low", o.low, "window constraint: smallest rank");
  enumerate_cmd->add_option("--high", o.high, "window constraint: largest rank");
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", o.suite);
  verify_cmd->add_option("--params", o.params, "key=value,...");
  verify_cmd->add_option("--seed", o.seed);
  verify_cmd->add_flag("--timing", o.timing, "include elapsed time");
  verify_cmd->add_flag("--list", o.list, "list suites");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(dual_cmd)) {
      out << write_rank_table(dual(load_table(o.inputs.front())));
    } else if (app.got_subcommand(delete_cmd)) {
      out << write_rank_table(delete_element(load_table(o.inputs.front()), o.element));
    } else if (app.got_subcommand(contract_cmd)) {
      out << write_rank_table(contract(load_table(o.inputs.front()), o.element));
    } else if (app.got_subcommand(minor_cmd)) {
      const RankTable g = load_table(o.inputs.front());
      const MinorSpec spec{g.ground().subset_of(split_labels(o.contract_set)),
                           g.ground().subset_of(split_labels(o.delete_set))};
      out << write_rank_table(minor(g, spec));
    } else if (app.got_subcommand(sum_cmd)) {
      out << write_rank_table(direct_sum(load_table(o.inputs[0]), load_table(o.inputs[1])));
    } else if (app.got_subcommand(tutte_cmd)) {
      const RankTable g = load_table(o.inputs.front());
      const LaurentPoly2 f = o.method == "subset" ? tutte_subset(g) : tutte_recursive(g, parse_pivot_rule(o.pivot));
      out << f.to_string() << "\n";
    } else if (app.got_subcommand(check_cmd)) {
      return run_check(o, out);
    } else if (app.got_subcommand(closure_cmd)) {
      const RankTable g = load_table(o.inputs.front());
      out << g.ground().format(convex_closure(g, g.ground().subset_of(split_labels(o.closure_set)))) << "\n";
    } else if (app.got_subcommand(feasible_cmd)) {
      return run_feasible(o, out);
    } else if (app.got_subcommand(build_cmd)) {
      return run_build(o, out);
    } else if (app.got_subcommand(enumerate_cmd)) {
      return run_enumerate(o, out);
    } else if (app.got_subcommand(verify_cmd)) {
      return run_verify(o, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace rankdual::cli
