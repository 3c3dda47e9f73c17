// Command-line front end over the C interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "idcode/idcode.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int exit_code;
};

// Library failures on malformed input are usage errors, the rest are failures.
int exit_for(idc_status s) {
  switch (s) {
    case IDC_BAD_PARAMS:
    case IDC_PARSE:
    case IDC_IO:
    case IDC_BAD_VERTEX:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

void check(idc_status s) {
  if (s == IDC_OK) return;
  std::cerr << "error: " << idc_status_name(s) << ": " << idc_last_error() << '\n';
  throw Failure{exit_for(s)};
}

struct GraphDeleter {
  void operator()(idc_graph* g) const { idc_graph_free(g); }
};
struct SetDeleter {
  void operator()(idc_set* s) const { idc_set_free(s); }
};
using GraphPtr = std::unique_ptr<idc_graph, GraphDeleter>;
using SetPtr = std::unique_ptr<idc_set, SetDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  idc_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

GraphPtr load_graph(const std::string& path) {
  idc_graph* g = nullptr;
  check(idc_graph_read(path.c_str(), &g));
  return GraphPtr(g);
}

SetPtr load_set(const std::string& path, const idc_graph* g) {
  idc_set* s = nullptr;
  check(idc_set_read(path.c_str(), idc_graph_num_vertices(g), &s));
  return SetPtr(s);
}

idc_property parse_property(const std::string& name) {
  idc_property p;
  check(idc_property_parse(name.c_str(), &p));
  return p;
}

std::string join(const json& arr) {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += ' ';
    out += x.dump();
  }
  return out;
}

std::string value_or_dash(const json& v) { return v.is_null() ? "-" : (v.is_string() ? v.get<std::string>() : v.dump()); }

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---- commands ----

struct Options {
  bool as_json = false;
  std::size_t threads = 1;

  std::string family;
  std::vector<long> params;
  long power = 0;
  std::string out;
  std::string graph_out;

  std::string product_kind, left, right;

  std::string graph_path, set_path;
  std::string property = "identifying";

  std::string variant = "pruned";
  unsigned q = 0;

  unsigned long long budget = 0;
  std::size_t max_vertices = 0;
};

int cmd_gen(const Options& o) {
  std::vector<long> params = o.params;
  if (o.power > 0) {
    if (o.family != "cycle" && o.family != "hypercube") {
      std::cerr << "error: --power applies to cycle and hypercube only\n";
      return kExitUsage;
    }
    params.push_back(o.power);
  }
  idc_graph* raw = nullptr;
  check(idc_graph_generate(o.family.c_str(), params.data(), params.size(), &raw));
  GraphPtr g(raw);
  if (o.out.empty()) {
    char* text = nullptr;
    check(idc_graph_to_string(g.get(), &text));
    std::cout << take(text);
    return kExitOk;
  }
  check(idc_graph_write(g.get(), o.out.c_str(), 1));
  if (o.as_json) {
    char* meta = nullptr;
    check(idc_graph_metadata_json(g.get(), &meta));
    std::cout << take(meta) << '\n';
  } else {
    std::cout << "wrote " << o.out << " (n=" << idc_graph_num_vertices(g.get())
              << ", m=" << idc_graph_num_edges(g.get()) << ") and " << o.out << ".json\n";
  }
  return kExitOk;
}

int cmd_product(const Options& o) {
  auto g = load_graph(o.left);
  auto h = load_graph(o.right);
  idc_graph* raw = nullptr;
  check(idc_graph_product(o.product_kind.c_str(), g.get(), h.get(), &raw));
  GraphPtr p(raw);
  if (o.out.empty()) {
    char* text = nullptr;
    check(idc_graph_to_string(p.get(), &text));
    std::cout << take(text);
    return kExitOk;
  }
  check(idc_graph_write(p.get(), o.out.c_str(), 1));
  std::cout << "wrote " << o.out << " (n=" << idc_graph_num_vertices(p.get()) << ", m=" << idc_graph_num_edges(p.get())
            << ")\n";
  return kExitOk;
}

int cmd_verify(const Options& o) {
  auto g = load_graph(o.graph_path);
  auto s = load_set(o.set_path, g.get());
  const idc_property p = parse_property(o.property);
  int holds = 0;
  char* witness = nullptr;
  check(idc_verify(g.get(), s.get(), p, &holds, &witness));
  const std::string w = take(witness);
  if (o.as_json) {
    json j{{"property", o.property}, {"size", idc_set_size(s.get())}, {"holds", holds == 1}};
    j["witness"] = holds ? json(nullptr) : json(w);
    print(j);
  } else if (holds) {
    std::cout << "holds: " << o.property << " (size " << idc_set_size(s.get()) << ")\n";
  } else {
    std::cout << "fails: " << o.property << ": " << w << '\n';
  }
  return holds ? kExitOk : kExitFail;
}

int cmd_prune(const Options& o) {
  auto g = load_graph(o.graph_path);
  auto s = load_set(o.set_path, g.get());
  idc_set* raw = nullptr;
  check(idc_prune(g.get(), s.get(), parse_property(o.property), &raw));
  SetPtr pruned(raw);
  if (!o.out.empty()) check(idc_set_write(pruned.get(), o.out.c_str()));
  std::cout << "pruned " << idc_set_size(s.get()) << " -> " << idc_set_size(pruned.get()) << '\n';
  return kExitOk;
}

int cmd_construct(const Options& o) {
  idc_graph* graw = nullptr;
  idc_set* sraw = nullptr;
  char* rep = nullptr;
  check(idc_construct(o.family.c_str(), o.q, &graw, &sraw, &rep));
  GraphPtr g(graw);
  SetPtr pruned(sraw);
  const json r = take_json(rep);

  SetPtr chosen;
  if (o.variant == "removal") {
    if (!r["removal_identifying"].get<bool>()) {
      std::cerr << "error: the removal step produced no identifying code\n";
      return kExitFail;
    }
    const auto members = r["removal_code"].get<std::vector<std::size_t>>();
    idc_set* s = nullptr;
    check(idc_set_create(idc_graph_num_vertices(g.get()), members.data(), members.size(), &s));
    chosen.reset(s);
  } else if (o.variant != "pruned") {
    std::cerr << "error: --variant is pruned or removal\n";
    return kExitUsage;
  }
  const idc_set* out_set = chosen ? chosen.get() : pruned.get();
  const long size = static_cast<long>(idc_set_size(out_set));
  const long lower = r["lower_bound"].get<long>();

  int holds = 0;
  check(idc_verify(g.get(), out_set, IDC_IDENTIFYING, &holds, nullptr));
  const bool all_ok = holds && r["pre_prune_identifying"].get<bool>() && r["pruned_identifying"].get<bool>() &&
                      size <= r["target_size"].get<long>();

  if (!o.out.empty()) check(idc_set_write(out_set, o.out.c_str()));
  if (!o.graph_out.empty()) check(idc_graph_write(g.get(), o.graph_out.c_str(), 1));

  if (o.as_json) {
    json j = r;
    j["variant"] = o.variant;
    j["size"] = size;
    j["verified"] = holds == 1;
    j["optimal"] = size == lower;
    print(j);
    return all_ok ? kExitOk : kExitFail;
  }
  std::cout << "family " << r["family"].get<std::string>() << ", q=" << o.q << ", n=" << r["n"] << '\n';
  std::cout << "pre-prune:    " << r["pre_prune_size"] << " (expected " << r["pre_prune_expected"] << "), "
            << (r["pre_prune_identifying"].get<bool>() ? "identifying" : "NOT identifying") << '\n';
  std::cout << "removal step: " << value_or_dash(r["removal_size"]) << " (target " << r["target_size"] << ")\n";
  std::cout << "pruned:       " << r["pruned_size"] << ", "
            << (r["pruned_identifying"].get<bool>() ? "identifying" : "NOT identifying") << '\n';
  std::cout << "stated lower bound: " << r["stated_lower_bound"]
            << (r["stated_lower_bound_follows"].get<bool>() ? "" : " (does not follow at this q)") << '\n';
  std::cout << "applicable lower bound: " << lower << '\n';
  std::cout << "written code (" << o.variant << "): size " << size << ", "
            << (holds ? "verified identifying" : "NOT identifying");
  if (size == lower) std::cout << ", OPTIMAL (matches lower bound " << lower << ")";
  std::cout << '\n';
  return all_ok ? kExitOk : kExitFail;
}

void print_entries(const char* title, const json& entries) {
  std::cout << title << '\n';
  for (const auto& e : entries) {
    std::cout << "  " << std::left << std::setw(18) << e["name"].get<std::string>() << std::right << std::setw(8);
    // json values are streamed as strings: operator<< on json reads the stream width as indentation.
    if (!e["applicable"].get<bool>()) {
      std::cout << "-" << "  n/a: " << e["reason"].get<std::string>() << '\n';
      continue;
    }
    if (e.contains("real_value")) {
      std::ostringstream v;
      v << std::fixed << std::setprecision(3) << e["real_value"].get<double>();
      std::cout << v.str();
    } else {
      std::cout << std::to_string(e["value"].get<long>());
    }
    std::cout << "  " << e["basis"].get<std::string>() << '\n';
  }
}

int cmd_bounds(const Options& o) {
  auto g = load_graph(o.graph_path);
  char* raw = nullptr;
  check(idc_bounds(g.get(), &raw));
  const json r = take_json(raw);
  const bool consistent = r["consistent"].get<bool>();
  if (o.as_json) {
    print(r);
    return consistent ? kExitOk : kExitFail;
  }
  std::cout << "n=" << r["n"] << " degree " << r["k_min"] << ".." << r["k_max"] << " min symdiff " << r["d"]
            << (r["twin_free"].get<bool>() ? " twin-free" : " has twins") << '\n';
  print_entries("lower bounds:", r["lower_bounds"]);
  print_entries("upper bounds:", r["upper_bounds"]);
  if (!r["frac"].is_null())
    std::cout << "fractional: " << r["frac"]["value"].get<std::string>() << " ("
              << r["frac"]["source"].get<std::string>() << ")\n";
  if (!r["srg"].is_null()) {
    const auto& s = r["srg"];
    std::cout << "srg(" << s["n"] << "," << s["k"] << "," << s["lambda"] << "," << s["mu"] << ") d=" << s["d"]
              << (s["primitive"].get<bool>() ? " primitive" : " imprimitive") << '\n';
  }
  if (!r["gq"].is_null()) {
    const auto& q = r["gq"];
    std::cout << "GQ(" << q["s"] << "," << q["t"] << ") frac " << value_or_dash(q["frac"]) << " bracket "
              << value_or_dash(q["bracket_ok"]) << '\n';
  }
  std::cout << "best lower " << r["best_lower"] << ", best upper " << value_or_dash(r["best_upper"])
            << (consistent ? "" : ", INCONSISTENT") << '\n';
  return consistent ? kExitOk : kExitFail;
}

int cmd_frac(const Options& o) {
  auto g = load_graph(o.graph_path);
  char* raw = nullptr;
  check(idc_frac(g.get(), &raw));
  const json r = take_json(raw);
  const bool mismatch = r["equal"].is_boolean() && !r["equal"].get<bool>();
  if (o.as_json) {
    print(r);
    return mismatch ? kExitFail : kExitOk;
  }
  std::cout << "closed form: "
            << (r["closed_form"].is_null() ? "n/a (" + r["closed_form_error"].get<std::string>() + ")"
                                           : r["closed_form"].get<std::string>())
            << '\n';
  std::cout << "lp:          "
            << (r["lp"].is_null() ? "n/a (" + r["lp_error"].get<std::string>() + ")" : r["lp"].get<std::string>())
            << '\n';
  if (r["equal"].is_boolean()) std::cout << (mismatch ? "MISMATCH" : "equal") << '\n';
  return mismatch ? kExitFail : kExitOk;
}

int cmd_solve(const Options& o) {
  auto g = load_graph(o.graph_path);
  char* raw = nullptr;
  check(idc_solve(g.get(), parse_property(o.property), o.budget, o.max_vertices, nullptr, &raw));
  const json r = take_json(raw);
  if (o.as_json) {
    print(r);
    return kExitOk;
  }
  std::cout << r["property"].get<std::string>() << " optimum " << r["optimum"] << '\n';
  std::cout << "witness " << join(r["witness"]) << '\n';
  std::cout << "nodes " << r["nodes_explored"] << ", proof " << r["proof"].get<std::string>() << '\n';
  return kExitOk;
}

int cmd_table2(const Options& o) {
  char* raw = nullptr;
  check(idc_table2(&raw));
  const json r = take_json(raw);
  bool all_ok = true;
  for (const auto& row : r["rows"]) all_ok = all_ok && row["ok"].get<bool>();
  if (o.as_json) {
    print(r);
    return all_ok ? kExitOk : kExitFail;
  }
  std::cout << std::left << std::setw(10) << "family" << std::right << std::setw(3) << "q" << std::setw(6) << "n"
            << std::setw(10) << "pre" << std::setw(10) << "upper" << std::setw(8) << "pruned" << std::setw(8)
            << "lower" << std::setw(8) << "best" << std::setw(8) << "frac" << "  " << std::left << std::setw(9)
            << "order" << "status\n";
  for (const auto& row : r["rows"]) {
    auto pair = [](const json& got, const json& want) {
      return got.dump() + (got == want ? "" : "!=" + want.dump());
    };
    const std::string lower = row["stated_lower"].dump() + (row["stated_lower_follows"].get<bool>() ? "" : "*");
    std::string status = "ok";
    if (!row["formulas_ok"].get<bool>()) status = "FAIL: size formula mismatch";
    else if (!row["codes_verified"].get<bool>()) status = "FAIL: code not identifying";
    else if (!row["bounds_consistent"].get<bool>()) status = "CONFLICT: lower bound exceeds a verified code";
    std::cout << std::left << std::setw(10) << row["name"].get<std::string>() << std::right << std::setw(3)
              << row["q"].dump() << std::setw(6) << pair(row["n"], row["n_formula"]) << std::setw(10)
              << pair(row["pre_prune_size"], row["pre_prune_formula"]) << std::setw(10)
              << pair(row["removal_size"], row["upper_formula"]) << std::setw(8) << row["pruned_size"].dump()
              << std::setw(8) << lower << std::setw(8) << row["best_lower"].dump() << std::setw(8)
              << row["frac"].get<std::string>() << "  " << std::left << std::setw(9)
              << row["order"].get<std::string>() << status << '\n';
  }
  std::cout << "upper: removal-step code size; pruned: greedy pruning of the same lines; "
               "*: stated bound does not follow at this q\n";
  return all_ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identifying codes on finite-geometry graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.as_json, "Machine-readable JSON output");
  app.add_option("--threads", o.threads, "Worker threads for pairwise scans")->check(CLI::Range(1, 256));

  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  gen->add_option("family", o.family,
                  "complete, path, cycle, hypercube, paley, kneser, johnson, petersen, clique-cartesian, "
                  "clique-direct, gq-t2star, gq-parabolic, gq-elliptic, gq-hermitian")
      ->required();
  gen->add_option("params", o.params, "Integer parameters of the family");
  gen->add_option("--power", o.power, "Distance power r for cycle and hypercube")->check(CLI::PositiveNumber);
  gen->add_option("-o,--out", o.out, "Output path; also writes <path>.json metadata (stdout when absent)");

  auto* product = app.add_subcommand("product", "Product of two graph files");
  product->add_option("kind", o.product_kind, "cartesian, direct or lexicographic")->required();
  product->add_option("left", o.left, "First graph file")->required()->check(CLI::ExistingFile);
  product->add_option("right", o.right, "Second graph file")->required()->check(CLI::ExistingFile);
  product->add_option("-o,--out", o.out, "Output path");

  const char* prop_help = "identifying, locating-dominating, resolving, separating or dominating";
  auto* verify = app.add_subcommand("verify", "Check a vertex set against a property");
  verify->add_option("graph", o.graph_path, "Graph file")->required();
  verify->add_option("set", o.set_path, "Vertex set file")->required();
  verify->add_option("-p,--property", o.property, prop_help);

  auto* prune = app.add_subcommand("prune", "Drop vertices while the property still holds");
  prune->add_option("graph", o.graph_path, "Graph file")->required();
  prune->add_option("set", o.set_path, "Vertex set file")->required();
  prune->add_option("-p,--property", o.property, prop_help);
  prune->add_option("-o,--out", o.out, "Output set path");

  auto* construct = app.add_subcommand("construct", "Build a quadrangle identifying code");
  construct->add_option("family", o.family, "t2star, parabolic, elliptic or hermitian")->required();
  construct->add_option("q", o.q, "Field order")->required();
  construct->add_option("-o,--out", o.out, "Write the code to this set file");
  construct->add_option("--graph-out", o.graph_out, "Write the graph (and metadata) to this path");
  construct->add_option("--variant", o.variant, "Code to write: pruned (default) or removal");

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on the identifying code number");
  bounds->add_option("graph", o.graph_path, "Graph file")->required();

  auto* frac = app.add_subcommand("frac", "Fractional identifying code number, closed form and LP");
  frac->add_option("graph", o.graph_path, "Graph file")->required();

  auto* solve = app.add_subcommand("solve", "Exact minimum by branch and bound");
  solve->add_option("graph", o.graph_path, "Graph file")->required();
  solve->add_option("-p,--property", o.property, prop_help);
  solve->add_option("--budget", o.budget, "Node budget (default IDCODE_NODE_BUDGET or 10^8)");
  solve->add_option("--max-vertices", o.max_vertices, "Refuse larger graphs (default 64)");

  auto* table2 = app.add_subcommand("table2", "Quadrangle results table, every cell computed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  idc_set_threads(o.threads);

  try {
    if (gen->parsed()) return cmd_gen(o);
    if (product->parsed()) return cmd_product(o);
    if (verify->parsed()) return cmd_verify(o);
    if (prune->parsed()) return cmd_prune(o);
    if (construct->parsed()) return cmd_construct(o);
    if (bounds->parsed()) return cmd_bounds(o);
    if (frac->parsed()) return cmd_frac(o);
    if (solve->parsed()) return cmd_solve(o);
    if (table2->parsed()) return cmd_table2(o);
  } catch (const Failure& f) {
    return f.exit_code;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed report: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
