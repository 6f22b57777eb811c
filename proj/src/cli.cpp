#include "kuni/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "kuni/analysis.hpp"
#include "kuni/codes.hpp"
#include "kuni/dense.hpp"
#include "kuni/errors.hpp"
#include "kuni/graph.hpp"
#include "kuni/stabilizer.hpp"

#ifndef KUNI_VERSION
#define KUNI_VERSION "0.0.0"
#endif

namespace kuni {

namespace {

struct Options {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string levels;
  std::string method = "all";
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 1;
  bool random_b = false;
  bool state = false;
  std::string input;
  std::string pair;
  std::size_t expect_k = 0;
};

// Everything a subcommand needs about the graph it works on.
struct Construction {
  std::optional<HierarchySpec> spec;  // absent for --input
  std::optional<LinearCode> code;     // outer code
  std::optional<MatrixGF> b;          // random lower-right block
  std::optional<Adjacency> adj;
  bool plain_bipartite = false;
};

bool given(const CLI::App& sub, const std::string& flag) {
  const CLI::Option* opt = sub.get_option_no_throw(flag);
  return opt != nullptr && opt->count() > 0;
}

Json config_echo(const CLI::App& sub, const Options& o) {
  Json c;
  c["subcommand"] = sub.get_name();
  if (given(sub, "--p")) c["p"] = o.p;
  if (given(sub, "--n")) c["n"] = o.n;
  if (given(sub, "--k")) c["k"] = o.k;
  if (given(sub, "--levels")) c["levels"] = format_levels(parse_levels(o.levels));
  if (given(sub, "--random-b")) c["random_b"] = true;
  if (o.random_b || given(sub, "--seed")) c["seed"] = o.seed;
  if (sub.get_name() == "verify" || given(sub, "--method")) c["method"] = o.method;
  if (sub.get_name() == "export") c["format"] = o.format;
  if (given(sub, "--state")) c["state"] = true;
  if (given(sub, "--input")) c["input"] = std::filesystem::path(o.input).filename().string();
  if (given(sub, "--pair")) c["pair"] = o.pair;
  if (given(sub, "--expect-k")) c["expect_k"] = o.expect_k;
  return c;
}

Json header(const CLI::App& sub, const Options& o) {
  Json j;
  j["tool"] = "kuni";
  j["version"] = KUNI_VERSION;
  j["config"] = config_echo(sub, o);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + path.string());
  f << text;
  if (!f) throw InvalidInput("cannot write " + path.string());
}

// Reports go to --out when given, otherwise to the output stream.
void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("malformed JSON in " + path + ": " + e.what());
  }
}

std::vector<HierarchyLevel> requested_levels(const CLI::App& sub, const Options& o) {
  const bool has_levels = given(sub, "--levels");
  const bool has_nk = given(sub, "--n") || given(sub, "--k");
  if (has_levels && has_nk) throw InvalidInput("give either --levels or --n/--k, not both");
  if (has_levels) return parse_levels(o.levels);
  if (!given(sub, "--n") || !given(sub, "--k")) throw InvalidInput("missing --n/--k or --levels");
  return {HierarchyLevel{o.n, o.k}};
}

Construction construct(const CLI::App& sub, const Options& o) {
  Construction c;
  if (given(sub, "--input")) {
    if (given(sub, "--levels") || given(sub, "--n") || given(sub, "--k") || o.random_b) {
      throw InvalidInput("--input cannot be combined with construction flags");
    }
    const Json doc = read_json_file(o.input);
    c.adj = adjacency_from_json(doc.contains("adjacency") ? doc.at("adjacency") : doc);
    return c;
  }
  if (!given(sub, "--p")) throw InvalidInput("missing --p");
  HierarchySpec spec{PrimeField(o.p), requested_levels(sub, o)};
  const auto codes = hierarchy_codes(spec);
  c.code = codes.front();
  if (o.random_b) {
    if (spec.levels.size() > 1) throw InvalidInput("--random-b takes a single level");
    const std::size_t r = c.code->n() - c.code->k();
    c.b = random_symmetric_zero_diagonal(spec.field, r, o.seed);
    c.adj = general_adjacency(*c.code, *c.b);
  } else if (spec.levels.size() == 1) {
    c.adj = bipartite_adjacency(*c.code);
    c.plain_bipartite = true;
  } else {
    c.adj = hierarchy_adjacency(spec);
  }
  c.spec = std::move(spec);
  return c;
}

std::string dot_with_header(const CLI::App& sub, const Options& o, const Adjacency& adj) {
  return "// kuni " KUNI_VERSION "\n// config: " + config_echo(sub, o).dump() + "\n" + export_dot(adj);
}

int cmd_build(const CLI::App& sub, const Options& o, std::ostream& out) {
  const Construction c = construct(sub, o);
  if (!c.code) throw InvalidInput("build needs --p with --n/--k or --levels");
  const std::filesystem::path dir = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InvalidInput("cannot create " + dir.string() + ": " + ec.message());

  Json files = Json::array();
  auto write_doc = [&](const std::string& name, const std::string& key, Json body) {
    Json doc = header(sub, o);
    doc[key] = std::move(body);
    write_file(dir / name, dump(doc));
    files.push_back(name);
  };
  Json code_doc = to_json(*c.code);
  const auto warnings = code_warnings(*c.code);
  write_doc("code.json", "code", code_doc);
  Json adj_doc = to_json(*c.adj);
  if (c.b) adj_doc["b"] = to_json(*c.b);
  write_doc("adjacency.json", "adjacency", adj_doc);
  write_file(dir / "graph.dot", dot_with_header(sub, o, *c.adj));
  files.push_back("graph.dot");
  if (o.state) write_doc("state.json", "state", to_json(graph_state(*c.adj)));

  Json summary = header(sub, o);
  summary["q"] = o.p;
  summary["n"] = c.adj->n();
  summary["k"] = c.code->k();
  summary["edge_count"] = c.adj->edge_count();
  summary["warnings"] = warnings;
  summary["files"] = std::move(files);
  out << dump(summary);
  return kExitOk;
}

int cmd_verify(const CLI::App& sub, const Options& o, std::ostream& out) {
  const Construction c = construct(sub, o);
  const Adjacency& adj = *c.adj;
  const bool all = o.method == "all";

  std::optional<std::size_t> k_structural;
  bool structural_exact = false;
  if (all || o.method == "structural") {
    if (c.plain_bipartite) {
      // Uniformity of a code state is min(d, d_dual) - 1.
      k_structural = std::min(min_distance(*c.code), min_distance(dual_code(*c.code))) - 1;
      structural_exact = true;
    } else if (c.code) {
      // The builders already checked every square minor of A.
      k_structural = c.code->k();
    }
  }
  std::optional<UniformityResult> stab;
  if (all || o.method == "stabilizer") stab = uniformity_index(adj);
  std::optional<OracleUniformity> dense;
  if (all || o.method == "dense") dense = uniformity_by_oracle(graph_state(adj));

  std::vector<std::size_t> exact;
  if (stab) exact.push_back(stab->k);
  if (dense) exact.push_back(dense->k);
  if (k_structural && structural_exact) exact.push_back(*k_structural);
  bool agree = std::adjacent_find(exact.begin(), exact.end(), std::not_equal_to<>()) == exact.end();
  if (k_structural && !structural_exact) {
    for (std::size_t v : exact) agree = agree && *k_structural <= v;
  }
  std::optional<std::size_t> best;
  if (!exact.empty()) best = *std::min_element(exact.begin(), exact.end());
  else if (k_structural) best = k_structural;
  // Target uniformity: --expect-k, else the outer code dimension.
  std::optional<std::size_t> target;
  if (given(sub, "--expect-k")) target = o.expect_k;
  else if (c.code) target = c.code->k();
  const bool pass = agree && (!target || (best && *best >= *target));

  Json r = header(sub, o);
  r["q"] = adj.field().modulus();
  r["n"] = adj.n();
  r["expected_k"] = target ? Json(*target) : Json(nullptr);
  r["k_structural"] = k_structural ? Json(*k_structural) : Json(nullptr);
  r["structural_exact"] = structural_exact;
  r["k_stabilizer"] = stab ? Json(stab->k) : Json(nullptr);
  r["k_dense"] = dense ? Json(dense->k) : Json(nullptr);
  if (dense) {
    r["dense_subsets_checked"] = dense->subsets_checked;
    r["dense_max_deviation"] = dense->max_deviation_by_size;
  }
  r["agree"] = agree;
  if (stab) {
    const auto group = graph_generators(adj);
    Json w;
    w["witness_w_for_k_plus_1"] = stab->witness;
    w["weight"] = stab->min_weight;
    const PauliProduct element = group.element(stab->witness);
    Json idle = Json::array();
    for (std::size_t i = 0; i < adj.n(); ++i) {
      if (element.x_exp()[i] == 0 && element.z_exp()[i] == 0) idle.push_back(i + 1);
    }
    w["identity_qudits"] = std::move(idle);
    w["element"] = to_json(element);
    r["witness"] = std::move(w);
  } else {
    r["witness"] = nullptr;
  }
  r["verdict"] = pass ? "pass" : "fail";
  emit(o, dump(r), out);
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_hierarchy(const CLI::App& sub, const Options& o, std::ostream& out) {
  if (!given(sub, "--p")) throw InvalidInput("missing --p");
  HierarchySpec spec{PrimeField(o.p), requested_levels(sub, o)};
  const auto codes = hierarchy_codes(spec);
  const std::size_t n = spec.levels[0].n;
  Json r = header(sub, o);
  r["q"] = o.p;
  r["n"] = n;
  Json levels = Json::array();
  for (std::size_t l = 0; l < codes.size(); ++l) {
    HierarchySpec prefix{spec.field, {spec.levels.begin(), spec.levels.begin() + static_cast<std::ptrdiff_t>(l) + 1}};
    Json lv;
    lv["n"] = spec.levels[l].n;
    lv["k"] = spec.levels[l].k;
    lv["offset"] = n - spec.levels[l].n;
    lv["A"] = to_json(codes[l].a_matrix());
    lv["edge_count"] = hierarchy_adjacency(prefix).edge_count();
    levels.push_back(std::move(lv));
  }
  r["levels"] = std::move(levels);
  r["b_block"] = to_json(hierarchy_b_block(spec));
  const Adjacency adj = hierarchy_adjacency(spec);
  r["adjacency"] = to_json(adj);
  if (given(sub, "--method")) {
    if (o.method == "stabilizer" || o.method == "all") r["k_stabilizer"] = uniformity_index(adj).k;
    if (o.method == "dense" || o.method == "all") r["k_dense"] = uniformity_by_oracle(graph_state(adj)).k;
  }
  emit(o, dump(r), out);
  return kExitOk;
}

// One side of a --pair: levels joined by '+'.
struct PairState {
  std::string id;
  std::vector<HierarchyLevel> levels;
  StateVector state;
};

std::string trim(std::string s) {
  const auto ws = " \t";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

PairState pair_state(const PrimeField& field, const std::string& text) {
  std::string list = text;
  std::replace(list.begin(), list.end(), '+', ',');
  HierarchySpec spec{field, parse_levels(list)};
  const auto codes = hierarchy_codes(spec);
  if (codes.size() > 2) throw InvalidInput("pair states support at most one nested level: '" + text + "'");
  StateVector s = codes.size() == 1 ? state_from_code(codes[0]) : first_level_state(codes[0], codes[1]);
  return PairState{text, spec.levels, std::move(s)};
}

int cmd_slocc(const CLI::App& sub, const Options& o, std::ostream& out) {
  if (!given(sub, "--p")) throw InvalidInput("missing --p");
  if (!given(sub, "--pair")) throw InvalidInput("missing --pair");
  const auto sep = o.pair.find(" vs ");
  if (sep == std::string::npos) throw InvalidInput("--pair must look like '6:2 vs 6:2+2:1'");
  const PrimeField field(o.p);
  const PairState a = pair_state(field, trim(o.pair.substr(0, sep)));
  const PairState b = pair_state(field, trim(o.pair.substr(sep + 4)));
  if (a.state.n() != b.state.n()) throw InvalidInput("pair states must have the same number of qudits");
  const std::array<std::string, 2> ids{a.id, b.id};
  const std::size_t n = a.state.n();

  SloccReport report;
  const bool split_shape = a.levels.size() == 1 && b.levels.size() == 2 && a.levels[0] == b.levels[0] &&
                           2 * (b.levels[0].k + b.levels[1].k) <= n;
  if (split_shape) {
    report = split_subset_rank_check(a.state, b.state, b.levels[1].n, b.levels[0].k, b.levels[1].k, ids);
  } else if (n % 2 == 1 && uniformity_by_oracle(a.state).k == n / 2 && uniformity_by_oracle(b.state).k == n / 2) {
    report = odd_ame_support_check(a.state, b.state, ids);
  } else {
    const bool both_nested = a.levels.size() > 1 && b.levels.size() > 1;
    report = rank_spectrum_comparison(a.state, b.state, ids, !both_nested);
  }
  Json r = header(sub, o);
  r["q"] = o.p;
  r["n"] = n;
  const Json body = to_json(report);
  for (const auto& [key, value] : body.items()) r[key] = value;
  emit(o, dump(r), out);
  return kExitOk;
}

int cmd_export(const CLI::App& sub, const Options& o, std::ostream& out) {
  const Construction c = construct(sub, o);
  if (o.format == "dot") {
    emit(o, dot_with_header(sub, o, *c.adj), out);
    return kExitOk;
  }
  Json r = header(sub, o);
  if (o.format == "state") {
    r["state"] = to_json(graph_state(*c.adj));
  } else {
    r["adjacency"] = to_json(*c.adj);
  }
  emit(o, dump(r), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build and verify k-uniform qudit graph states from MDS codes", "kuni"};
  app.set_version_flag("--version", std::string("kuni ") + KUNI_VERSION);
  app.require_subcommand(1);
  Options o;

  auto add_field = [&](CLI::App* s) { s->add_option("--p", o.p, "Prime field size"); };
  auto add_shape = [&](CLI::App* s) {
    s->add_option("--n", o.n, "Code length");
    s->add_option("--k", o.k, "Code dimension");
    s->add_option("--levels", o.levels, "Hierarchy levels, e.g. 6:2,2:1");
  };
  auto add_random_b = [&](CLI::App* s) {
    s->add_flag("--random-b", o.random_b, "Use a seeded random lower-right block B");
    s->add_option("--seed", o.seed, "Seed for --random-b")->capture_default_str();
  };
  const std::vector<std::string> methods{"structural", "stabilizer", "dense", "all"};

  CLI::App* build = app.add_subcommand("build", "Write code, adjacency and DOT artifacts");
  add_field(build);
  add_shape(build);
  add_random_b(build);
  build->add_flag("--state", o.state, "Also write the dense graph state");
  build->add_option("--out", o.out, "Output directory (default: current directory)");

  CLI::App* verify = app.add_subcommand("verify", "Report the uniformity of a graph state");
  add_field(verify);
  add_shape(verify);
  add_random_b(verify);
  verify->add_option("--input", o.input, "Adjacency JSON instead of construction flags");
  verify->add_option("--method", o.method, "Verification method")->check(CLI::IsMember(methods))->capture_default_str();
  verify->add_option("--expect-k", o.expect_k, "Required uniformity (default: the code dimension)");
  verify->add_option("--out", o.out, "Report file (default: stdout)");

  CLI::App* hierarchy = app.add_subcommand("hierarchy", "Describe a nested hierarchy graph");
  add_field(hierarchy);
  add_shape(hierarchy);
  hierarchy->add_option("--method", o.method, "Also verify uniformity")->check(CLI::IsMember(methods));
  hierarchy->add_option("--out", o.out, "Report file (default: stdout)");

  CLI::App* slocc = app.add_subcommand("slocc", "Try to separate two states by SLOCC invariants");
  add_field(slocc);
  slocc->add_option("--pair", o.pair, "Two states, e.g. '6:2 vs 6:2+2:1'");
  slocc->add_option("--out", o.out, "Report file (default: stdout)");

  CLI::App* exp = app.add_subcommand("export", "Print an adjacency as JSON, DOT or dense state");
  add_field(exp);
  add_shape(exp);
  add_random_b(exp);
  exp->add_option("--input", o.input, "Adjacency JSON instead of construction flags");
  exp->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "state"}))
      ->capture_default_str();
  exp->add_option("--out", o.out, "Output file (default: stdout)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (build->parsed()) return cmd_build(*build, o, out);
    if (verify->parsed()) return cmd_verify(*verify, o, out);
    if (hierarchy->parsed()) return cmd_hierarchy(*hierarchy, o, out);
    if (slocc->parsed()) return cmd_slocc(*slocc, o, out);
    return cmd_export(*exp, o, out);
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace kuni
