#include "idcode/idcode.h"

#include <climits>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bounds.hpp"
#include "codes.hpp"
#include "error.hpp"
#include "families.hpp"
#include "gqcode.hpp"
#include "solve.hpp"
#include "table2.hpp"

using idcode::ErrorCode;
using json = nlohmann::ordered_json;

struct idc_graph {
  idcode::Graph g;
};

struct idc_set {
  idcode::VertexSet s;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
idc_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return IDC_OK;
  } catch (const idcode::Error& e) {
    g_last_error = e.what();
    return static_cast<idc_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return IDC_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IDC_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) idcode::fail(ErrorCode::BadParams, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const json& j) {
  if (out) *out = dup_string(j.dump(2));
}

idcode::Property to_property(idc_property p) {
  switch (p) {
    case IDC_DOMINATING: return idcode::Property::Dominating;
    case IDC_SEPARATING: return idcode::Property::Separating;
    case IDC_IDENTIFYING: return idcode::Property::Identifying;
    case IDC_LOCATING_DOMINATING: return idcode::Property::LocatingDominating;
    case IDC_RESOLVING: return idcode::Property::Resolving;
  }
  idcode::fail(ErrorCode::BadParams, "unknown property");
}

json srg_json(const idcode::SrgParams& p) {
  return {{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

std::optional<idcode::SrgParams> srg_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return idcode::SrgParams{j.at("n").get<long>(), j.at("k").get<long>(), j.at("lambda").get<long>(),
                           j.at("mu").get<long>()};
}

json metadata_json(const idcode::Graph& g) {
  const auto& m = g.meta();
  json j;
  j["family"] = m.family;
  j["params"] = m.params;
  j["n"] = g.n();
  j["m"] = g.num_edges();
  j["claimed_vertex_transitive"] = m.claimed_vertex_transitive;
  j["claimed_srg"] = m.claimed_srg ? srg_json(*m.claimed_srg) : json(nullptr);
  j["claimed_gq"] = m.claimed_gq ? json{{"s", m.claimed_gq->s}, {"t", m.claimed_gq->t}} : json(nullptr);
  auto found = idcode::check_srg(g);
  j["verified_srg"] = found ? srg_json(*found) : json(nullptr);
  json notes = json::object();
  for (const auto& [k, v] : m.notes)
    if (k != "verified_srg") notes[k] = v;
  j["notes"] = notes;
  return j;
}

void apply_metadata(idcode::Graph& g, const json& j) {
  auto& m = g.mutable_meta();
  m.family = j.value("family", "");
  m.params = j.value("params", std::vector<long>{});
  m.claimed_vertex_transitive = j.value("claimed_vertex_transitive", false);
  m.claimed_srg = srg_from_json(j.value("claimed_srg", json(nullptr)));
  if (auto gq = j.value("claimed_gq", json(nullptr)); !gq.is_null())
    m.claimed_gq = idcode::GqParams{gq.at("s").get<long>(), gq.at("t").get<long>()};
  if (j.contains("notes"))
    for (auto& [k, v] : j["notes"].items()) m.notes[k] = v.get<std::string>();
}

idcode::Graph generate(const std::string& family, const std::vector<long>& p) {
  namespace fam = idcode::families;
  auto need = [&](std::size_t count) {
    if (p.size() != count)
      idcode::fail(ErrorCode::BadParams, family + " takes " + std::to_string(count) + " parameter(s)");
    for (long x : p)
      if (x < 0) idcode::fail(ErrorCode::BadParams, "parameters must be non-negative");
  };
  auto u = [&](std::size_t i) { return static_cast<std::size_t>(p[i]); };
  if (family == "complete") return need(1), fam::complete(u(0));
  if (family == "path") return need(1), fam::path(u(0));
  if (family == "cycle") {
    if (p.size() == 1) return need(1), fam::cycle_power(u(0), 1);
    return need(2), fam::cycle_power(u(0), u(1));
  }
  if (family == "hypercube") {
    if (p.size() == 1) return need(1), fam::hypercube_power(u(0), 1);
    return need(2), fam::hypercube_power(u(0), u(1));
  }
  if (family == "paley") return need(1), fam::paley(u(0));
  if (family == "kneser") return need(1), fam::kneser2(u(0));
  if (family == "johnson") return need(1), fam::johnson2(u(0));
  if (family == "petersen") return need(0), fam::petersen();
  if (family == "clique-cartesian") return need(2), fam::clique_cartesian(u(0), u(1));
  if (family == "clique-direct") return need(2), fam::clique_direct(u(0), u(1));
  if (family.rfind("gq-", 0) == 0) {
    need(1);
    return idcode::gqcode::build_model(idcode::gqcode::parse_family(family), static_cast<std::uint32_t>(p[0])).graph;
  }
  idcode::fail(ErrorCode::BadParams, "unknown family '" + family + "'");
}

json bounds_json(const idcode::bounds::BoundsReport& r) {
  auto entries = [](const std::vector<idcode::bounds::BoundEntry>& list) {
    json a = json::array();
    for (const auto& e : list) {
      json j{{"name", e.name}, {"applicable", e.applicable}};
      if (e.applicable) {
        j["value"] = e.value;
        if (e.real_value) j["real_value"] = *e.real_value;
      } else {
        j["reason"] = e.reason;
      }
      j["basis"] = e.basis;
      a.push_back(j);
    }
    return a;
  };
  json j;
  j["n"] = r.n;
  j["k_min"] = r.k_min;
  j["k_max"] = r.k_max;
  j["d"] = r.d;
  j["twin_free"] = r.twin_free;
  j["lower_bounds"] = entries(r.lower_bounds);
  j["upper_bounds"] = entries(r.upper_bounds);
  j["best_lower"] = r.best_lower();
  const long up = r.best_upper();
  j["best_upper"] = up == LONG_MAX ? json(nullptr) : json(up);
  j["consistent"] = r.consistent();
  j["frac"] = r.frac_value ? json{{"value", r.frac_value->to_string()}, {"source", r.frac_source}} : json(nullptr);
  if (r.srg_info) {
    const auto& s = *r.srg_info;
    j["srg"] = srg_json(s.params);
    j["srg"]["d"] = s.d;
    j["srg"]["primitive"] = s.primitive;
    j["srg"]["complement"] = srg_json(s.complement);
    j["srg"]["degree_root_ok"] = s.degree_root_ok;
    j["srg"]["symdiff_root_ok"] = s.symdiff_root_ok;
  } else {
    j["srg"] = nullptr;
  }
  if (r.gq_info) {
    const auto& g = *r.gq_info;
    json q{{"s", g.s}, {"t", g.t}, {"n", g.n}, {"k", g.k}, {"d", g.d}};
    q["higman_ok"] = g.higman_ok ? json(*g.higman_ok) : json(nullptr);
    q["frac"] = g.frac ? json(g.frac->to_string()) : json(nullptr);
    q["bracket_ok"] = g.bracket_ok ? json(*g.bracket_ok) : json(nullptr);
    j["gq"] = q;
  } else {
    j["gq"] = nullptr;
  }
  return j;
}

json members_json(const idcode::VertexSet& s) { return s.members(); }

}  // namespace

extern "C" {

const char* idc_status_name(idc_status s) { return idcode::error_code_name(static_cast<ErrorCode>(s)); }

const char* idc_last_error(void) { return g_last_error.c_str(); }

void idc_string_free(char* s) { std::free(s); }

void idc_set_threads(size_t n) { idcode::set_scan_threads(n); }

idc_status idc_graph_generate(const char* family, const long* params, size_t nparams, idc_graph** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    if (nparams) require(params, "params");
    std::vector<long> p(params, params + nparams);
    *out = new idc_graph{generate(family, p)};
  });
}

idc_status idc_graph_product(const char* kind, const idc_graph* g, const idc_graph* h, idc_graph** out) {
  return guarded([&] {
    require(kind, "kind");
    require(g, "g");
    require(h, "h");
    require(out, "out");
    const std::string k = kind;
    if (k == "cartesian") *out = new idc_graph{idcode::families::cartesian(g->g, h->g)};
    else if (k == "direct") *out = new idc_graph{idcode::families::direct(g->g, h->g)};
    else if (k == "lexicographic") *out = new idc_graph{idcode::families::lexicographic(g->g, h->g)};
    else idcode::fail(ErrorCode::BadParams, "unknown product '" + k + "'");
  });
}

idc_status idc_graph_from_edges(size_t n, const size_t* edges, size_t m, idc_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (m) require(edges, "edges");
    idcode::GraphBuilder b(n);
    for (size_t i = 0; i < m; ++i) b.add_edge(edges[2 * i], edges[2 * i + 1]);
    *out = new idc_graph{std::move(b).build()};
  });
}

idc_status idc_graph_read(const char* path, idc_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    std::ifstream in(path);
    if (!in) idcode::fail(ErrorCode::Io, std::string("cannot open ") + path);
    auto g = idcode::read_graph(in);
    std::ifstream side(std::string(path) + ".json");
    if (side) {
      json j;
      try {
        side >> j;
      } catch (const std::exception& e) {
        idcode::fail(ErrorCode::Parse, std::string("metadata: ") + e.what());
      }
      apply_metadata(g, j);
    }
    *out = new idc_graph{std::move(g)};
  });
}

idc_status idc_graph_parse(const char* text, idc_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    std::istringstream in(text);
    *out = new idc_graph{idcode::read_graph(in)};
  });
}

idc_status idc_graph_write(const idc_graph* g, const char* path, int with_metadata) {
  return guarded([&] {
    require(g, "g");
    require(path, "path");
    std::ofstream os(path);
    if (!os) idcode::fail(ErrorCode::Io, std::string("cannot write ") + path);
    idcode::write_graph(g->g, os);
    if (!os) idcode::fail(ErrorCode::Io, std::string("write failed: ") + path);
    if (with_metadata) {
      std::ofstream side(std::string(path) + ".json");
      if (!side) idcode::fail(ErrorCode::Io, std::string("cannot write ") + path + ".json");
      side << metadata_json(g->g).dump(2) << '\n';
    }
  });
}

idc_status idc_graph_to_string(const idc_graph* g, char** out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    std::ostringstream os;
    idcode::write_graph(g->g, os);
    *out = dup_string(os.str());
  });
}

idc_status idc_graph_metadata_json(const idc_graph* g, char** out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    emit(out, metadata_json(g->g));
  });
}

size_t idc_graph_num_vertices(const idc_graph* g) { return g ? g->g.n() : 0; }
size_t idc_graph_num_edges(const idc_graph* g) { return g ? g->g.num_edges() : 0; }

int idc_graph_adjacent(const idc_graph* g, size_t u, size_t v) {
  if (!g || u >= g->g.n() || v >= g->g.n()) return 0;
  return g->g.adjacent(u, v) ? 1 : 0;
}

idc_status idc_graph_min_symdiff(const idc_graph* g, size_t* out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = idcode::min_symdiff(g->g);
  });
}

void idc_graph_free(idc_graph* g) { delete g; }

idc_status idc_set_create(size_t n, const size_t* members, size_t count, idc_set** out) {
  return guarded([&] {
    require(out, "out");
    if (count) require(members, "members");
    *out = new idc_set{idcode::make_vertex_set(n, std::vector<std::size_t>(members, members + count))};
  });
}

idc_status idc_set_read(const char* path, size_t n, idc_set** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    std::ifstream in(path);
    if (!in) idcode::fail(ErrorCode::Io, std::string("cannot open ") + path);
    auto sets = idcode::read_vertex_sets(in, n);
    *out = new idc_set{sets.front()};
  });
}

idc_status idc_set_write(const idc_set* s, const char* path) {
  return guarded([&] {
    require(s, "s");
    require(path, "path");
    std::ofstream os(path);
    if (!os) idcode::fail(ErrorCode::Io, std::string("cannot write ") + path);
    idcode::write_vertex_set(s->s, os);
  });
}

size_t idc_set_size(const idc_set* s) { return s ? s->s.count() : 0; }
size_t idc_set_universe(const idc_set* s) { return s ? s->s.size() : 0; }

idc_status idc_set_members(const idc_set* s, size_t* buf, size_t cap, size_t* count) {
  return guarded([&] {
    require(s, "s");
    auto m = s->s.members();
    if (count) *count = m.size();
    if (cap) require(buf, "buf");
    for (size_t i = 0; i < m.size() && i < cap; ++i) buf[i] = m[i];
  });
}

void idc_set_free(idc_set* s) { delete s; }

idc_status idc_property_parse(const char* name, idc_property* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = static_cast<idc_property>(static_cast<int>(idcode::parse_property(name)));
  });
}

idc_status idc_verify(const idc_graph* g, const idc_set* s, idc_property p, int* holds, char** witness) {
  return guarded([&] {
    require(g, "g");
    require(s, "s");
    require(holds, "holds");
    auto w = idcode::witness_failure(g->g, s->s, to_property(p));
    if (p == IDC_RESOLVING && !w && !idcode::is_resolving(g->g, s->s))
      idcode::fail(ErrorCode::Internal, "resolving witness and verifier disagree");
    *holds = w ? 0 : 1;
    if (witness) *witness = w ? dup_string(w->describe()) : nullptr;
  });
}

idc_status idc_prune(const idc_graph* g, const idc_set* s, idc_property p, idc_set** out) {
  return guarded([&] {
    require(g, "g");
    require(s, "s");
    require(out, "out");
    *out = new idc_set{idcode::prune(g->g, s->s, to_property(p))};
  });
}

idc_status idc_construct(const char* family, unsigned q, idc_graph** graph, idc_set** code, char** report_json) {
  return guarded([&] {
    require(family, "family");
    namespace gq = idcode::gqcode;
    const auto fam = gq::parse_family(family);
    auto model = gq::build_model(fam, q);
    const auto c = gq::construct(fam, model);
    const auto& g = model.graph;
    const auto rep = idcode::bounds::report(g);
    const auto fb = idcode::bounds::family_bounds(g.meta().family, q);
    const long pruned = static_cast<long>(c.code.count());

    json j;
    j["family"] = gq::family_name(fam);
    j["q"] = q;
    j["n"] = g.n();
    j["lines"] = c.lines;
    j["pre_prune_size"] = c.pre_prune.count();
    j["pre_prune_expected"] = c.expected_pre_size;
    j["pre_prune_identifying"] = c.pre_identifying;
    j["removal_size"] = c.removal_identifying ? json(c.removal.count()) : json(nullptr);
    j["removal_identifying"] = c.removal_identifying;
    j["removed"] = c.removed;
    j["removal_code"] = members_json(c.removal);
    j["pruned_size"] = pruned;
    j["pruned_identifying"] = c.code_identifying;
    j["code"] = members_json(c.code);
    j["target_size"] = c.target_size;
    j["stated_lower_bound"] = fb->lower;
    j["stated_lower_bound_follows"] = fb->lower_follows;
    j["lower_bound"] = rep.best_lower();
    j["optimal"] = pruned == rep.best_lower();
    emit(report_json, j);
    if (code) *code = new idc_set{c.code};
    if (graph) *graph = new idc_graph{std::move(model.graph)};
  });
}

idc_status idc_bounds(const idc_graph* g, char** json_out) {
  return guarded([&] {
    require(g, "g");
    require(json_out, "json");
    emit(json_out, bounds_json(idcode::bounds::report(g->g)));
  });
}

idc_status idc_frac(const idc_graph* g, char** json_out) {
  return guarded([&] {
    require(g, "g");
    require(json_out, "json");
    json j;
    j["n"] = g->g.n();
    std::optional<idcode::Rational> closed, lp;
    try {
      closed = idcode::frac_closed_form(g->g);
      j["closed_form"] = closed->to_string();
    } catch (const idcode::Error& e) {
      j["closed_form"] = nullptr;
      j["closed_form_error"] = std::string(idcode::error_code_name(e.code())) + ": " + e.what();
    }
    try {
      constexpr std::size_t kLpMaxVertices = 256;
      if (g->g.n() > kLpMaxVertices)
        idcode::fail(ErrorCode::SizeGuard, "LP limited to " + std::to_string(kLpMaxVertices) + " vertices");
      auto res = idcode::frac_lp_detailed(idcode::build_hitting_instance(g->g));
      lp = res.value;
      j["lp"] = lp->to_string();
      j["lp_constraints"] = res.constraints_used;
      j["lp_pivots"] = res.pivots;
    } catch (const idcode::Error& e) {
      if (e.code() == ErrorCode::Internal) throw;
      j["lp"] = nullptr;
      j["lp_error"] = std::string(idcode::error_code_name(e.code())) + ": " + e.what();
    }
    j["equal"] = closed && lp ? json(*closed == *lp) : json(nullptr);
    emit(json_out, j);
  });
}

idc_status idc_solve(const idc_graph* g, idc_property p, unsigned long long node_budget, size_t max_vertices,
                     idc_set** witness, char** json_out) {
  return guarded([&] {
    require(g, "g");
    idcode::SolveOptions opts;
    opts.node_budget = node_budget;
    if (max_vertices) opts.max_vertices = max_vertices;
    const auto prop = to_property(p);
    auto r = idcode::exact_min(g->g, prop, opts);
    json j;
    j["property"] = idcode::property_name(prop);
    j["n"] = g->g.n();
    j["optimum"] = r.optimum;
    j["witness"] = members_json(r.witness);
    j["nodes_explored"] = r.nodes_explored;
    j["proof"] = r.proof == idcode::SolveResult::Proof::Exhausted ? "exhausted" : "bound_matched";
    emit(json_out, j);
    if (witness) *witness = new idc_set{r.witness};
  });
}

idc_status idc_table2(char** json_out) {
  return guarded([&] {
    require(json_out, "json");
    json rows = json::array();
    for (const auto& r : idcode::compute_table2()) {
      json j;
      j["family"] = idcode::gqcode::family_name(r.family);
      j["name"] = r.name;
      j["q"] = r.q;
      j["s"] = r.s;
      j["t"] = r.t;
      j["n"] = r.n;
      j["n_formula"] = r.n_formula;
      j["pre_prune_size"] = r.pre_size;
      j["pre_prune_formula"] = r.pre_formula;
      j["removal_size"] = r.removal_size;
      j["upper_formula"] = r.upper_formula;
      j["pruned_size"] = r.pruned_size;
      j["codes_verified"] = r.codes_verified;
      j["stated_lower"] = r.lower_printed;
      j["stated_lower_follows"] = r.lower_printed_valid;
      j["discharging"] = r.discharging ? json(*r.discharging) : json(nullptr);
      j["best_lower"] = r.best_lower;
      j["frac"] = r.frac.to_string();
      j["order"] = r.order;
      j["formulas_ok"] = r.formulas_ok();
      j["bounds_consistent"] = r.bounds_consistent();
      j["ok"] = r.ok();
      rows.push_back(j);
    }
    emit(json_out, json{{"rows", rows}});
  });
}

}  // extern "C"
