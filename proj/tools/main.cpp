#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "genmat/genmat.hpp"

using json = nlohmann::ordered_json;
using namespace genmat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitInput = 3;
constexpr int kExitExploratory = 4;

struct CommonOptions {
  std::string kind_name = "hyperconnectivity";
  int dim = 1;
  std::vector<int> ab;
  int trials = 3;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
};

void add_kind_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--kind", opt.kind_name,
                  "matroid family: sym_completion, hyperconnectivity, birigidity, rigidity")
      ->capture_default_str();
  cmd->add_option("-d,--dim", opt.dim, "dimension parameter")->capture_default_str();
  cmd->add_option("--ab", opt.ab, "birigidity with separate class dimensions a and b")->expected(2);
  cmd->add_option("--trials", opt.trials, "rank evaluation repetitions")->capture_default_str();
  cmd->add_option("--prime", opt.prime, "field modulus for rank evaluation")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--seed", opt.seed, "random seed")->capture_default_str();
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opt.out, "write the report to this file instead of stdout");
}

MatroidKind resolve_kind(const CommonOptions& opt) {
  if (!opt.ab.empty()) {
    return MatroidKind::birigidity_ab(opt.ab[0], opt.ab[1]);
  }
  const std::string& name = opt.kind_name;
  if (name == "sym" || name == "sym_completion") return MatroidKind::sym_completion(opt.dim);
  if (name == "hyper" || name == "hyperconnectivity") return MatroidKind::hyperconnectivity(opt.dim);
  if (name == "birigidity") return MatroidKind::birigidity(opt.dim);
  if (name == "rigidity") return MatroidKind::rigidity(opt.dim);
  throw std::invalid_argument("unknown matroid kind: " + name);
}

RankQueryConfig resolve_config(const CommonOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("--trials must be positive");
  return RankQueryConfig{opt.trials, opt.prime, opt.seed};
}

GraphDocument load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

void write_output(const CommonOptions& opt, const std::string& payload) {
  std::string body = payload;
  if (body.empty() || body.back() != '\n') body.push_back('\n');
  if (opt.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw std::invalid_argument("cannot write output file: " + opt.out);
  out << body;
}

// Inline rendering of a JSON value for the text format: scalars verbatim,
// arrays bracketed and comma separated, objects as key=value lists.
void flatten(const json& value, std::ostream& out) {
  if (value.is_string()) {
    out << value.get<std::string>();
  } else if (value.is_null()) {
    out << "none";
  } else if (value.is_array()) {
    out << "[";
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) out << ",";
      flatten(value[i], out);
    }
    out << "]";
  } else if (value.is_object()) {
    out << "{";
    bool first = true;
    for (const auto& [key, item] : value.items()) {
      if (!first) out << ",";
      first = false;
      out << key << "=";
      flatten(item, out);
    }
    out << "}";
  } else {
    out << value.dump();
  }
}

// One line per top-level key; arrays of objects get one line per element.
std::string render_text(const json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        out << key << "[" << i << "]: ";
        flatten(value[i], out);
        out << "\n";
      }
    } else {
      out << key << ": ";
      flatten(value, out);
      out << "\n";
    }
  }
  return out.str();
}

void emit_report(const CommonOptions& opt, const json& report) {
  write_output(opt, opt.format == "json" ? report.dump(2) : render_text(report));
}

void emit_graph(const CommonOptions& opt, const GraphDocument& doc) {
  write_output(opt, opt.format == "json" ? serialize_graph_json(doc) : serialize_graph_text(doc));
}

json edges_json(const EdgeList& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

json certificate_json(const SeedCertificate& certificate) {
  json out;
  out["seed_vertices"] = certificate.seed_vertices;
  out["size"] = certificate.seed_vertices.size();
  out["elimination_order"] = certificate.elimination_order;
  out["witnesses"] = certificate.witnesses;
  out["basis_edges"] = edges_json(certificate.basis_edges);
  return out;
}

json pairing_json(const Pairing& pairing) {
  json out;
  out["domain"] = pairing.domain;
  json assignments = json::array();
  for (const auto& [x, u, v] : pairing.assignments) assignments.push_back({x, u, v});
  out["assignments"] = assignments;
  json multiplicities = json::array();
  for (const auto& [edge, count] : pairing.edge_multiplicities) {
    multiplicities.push_back({edge.first, edge.second, count});
  }
  out["edge_multiplicities"] = multiplicities;
  out["support"] = edges_json(pairing.support);
  return out;
}

json separator_json(const SeparatorReport& report) {
  json out;
  out["separator"] = report.separator;
  if (report.side_counts.first >= 0) {
    out["side_counts"] = {report.side_counts.first, report.side_counts.second};
  }
  out["components"] = report.components;
  out["spans_all_components"] = report.spans_all_components;
  return out;
}

json tau_report_json(const TauBoundReport& report) {
  json out;
  out["mode"] = report.mode;
  out["k"] = report.k;
  out["n"] = report.n;
  out["branch"] = report.branch;
  out["critical"] = report.critical;
  if (!report.critical_note.empty()) out["critical_note"] = report.critical_note;
  out["tau"] = report.tau;
  out["cover"] = report.cover;
  if (report.branch == "pipeline") {
    out["x_size"] = report.x_size;
    out["f_size"] = report.f_size;
    out["certificate_edges"] = report.certificate_edges;
    json chain = json::array();
    for (const InequalityCheck& check : report.chain) {
      chain.push_back({{"label", check.label}, {"lhs", check.lhs}, {"rhs", check.rhs}, {"holds", check.holds}});
    }
    out["chain"] = chain;
    out["pairing"] = pairing_json(report.pairing);
  }
  out["bound"] = report.bound;
  out["bound_holds"] = report.bound_holds;
  return out;
}

int run_rank(const CommonOptions& opt, const std::string& path) {
  GraphDocument doc = load_graph(path);
  MatroidKind kind = resolve_kind(opt);
  RankQueryConfig config = resolve_config(opt);
  json report;
  report["command"] = "rank";
  if (!doc.name.empty()) report["graph"] = doc.name;
  report["kind"] = kind.label();
  report["vertices"] = doc.vertex_count();
  if (doc.is_bipartite()) {
    report["classes"] = {doc.bipartite().left_count(), doc.bipartite().right_count()};
  }
  report["edges"] = doc.flat_edges().size();
  long long rank = 0;
  bool rigid = false;
  if (doc.is_bipartite()) {
    rank = generic_rank(doc.bipartite(), kind, config);
    rigid = is_rigid(doc.bipartite(), kind, config);
  } else {
    rank = generic_rank(doc.semisimple(), kind, config);
    rigid = is_rigid(doc.semisimple(), kind, config);
  }
  report["rank"] = rank;
  try {
    if (kind.bipartite_kind() && doc.is_bipartite()) {
      report["formula"] = rank_formula(kind, doc.bipartite().left_count(), doc.bipartite().right_count());
    } else {
      report["formula"] = rank_formula(kind, doc.vertex_count());
    }
  } catch (const std::invalid_argument&) {
    report["formula"] = nullptr;  // no closed form for this kind
  }
  report["rigid"] = rigid;
  emit_report(opt, report);
  return kExitOk;
}

int run_check(const CommonOptions& opt, const std::string& path) {
  GraphDocument doc = load_graph(path);
  MatroidKind kind = resolve_kind(opt);
  RankQueryConfig config = resolve_config(opt);
  json report;
  report["command"] = "check";
  if (!doc.name.empty()) report["graph"] = doc.name;
  report["kind"] = kind.label();
  if (doc.is_bipartite() && kind.bipartite_kind()) {
    const BipartiteGraph& g = doc.bipartite();
    report["independent"] = is_independent(g, kind, config);
    report["rigid"] = is_rigid(g, kind, config);
    report["closed"] = closure(g, kind, config) == g;
  } else {
    SemisimpleGraph g = doc.is_bipartite() ? doc.bipartite().to_semisimple() : doc.semisimple();
    report["independent"] = is_independent(g, kind, config);
    report["rigid"] = is_rigid(g, kind, config);
    report["closed"] = closure(g, kind, config) == g;
  }
  emit_report(opt, report);
  return kExitOk;
}

int run_closure(const CommonOptions& opt, const std::string& path) {
  GraphDocument doc = load_graph(path);
  MatroidKind kind = resolve_kind(opt);
  RankQueryConfig config = resolve_config(opt);
  GraphDocument result;
  if (doc.is_bipartite() && kind.bipartite_kind()) {
    result = GraphDocument(closure(doc.bipartite(), kind, config));
  } else if (doc.is_bipartite()) {
    result = GraphDocument(closure(doc.bipartite().to_semisimple(), kind, config));
  } else {
    result = GraphDocument(closure(doc.semisimple(), kind, config));
  }
  result.name = doc.name;
  emit_graph(opt, result);
  return kExitOk;
}

struct SeedOptions {
  std::string strategy;
  std::vector<int> x0;
  double probability = 0.5;
  int k = 0;
};

int run_seed(const CommonOptions& opt, const SeedOptions& seed_opt, const std::string& path) {
  GraphDocument doc = load_graph(path);
  MatroidKind kind = resolve_kind(opt);
  RankQueryConfig config = resolve_config(opt);
  json report;
  report["command"] = "seed";
  report["strategy"] = seed_opt.strategy;
  report["kind"] = kind.label();

  auto with_graph = [&](const auto& g) -> std::optional<SeedCertificate> {
    std::vector<int> everything(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) everything[v] = v;
    if (seed_opt.strategy == "chain") {
      if (seed_opt.x0.empty()) throw std::invalid_argument("chain strategy needs --x0");
      return find_seed(g, kind, SeedChain{{seed_opt.x0, everything}}, config);
    }
    auto rng = substream(opt.seed, 0);
    std::vector<int> sampled = sample_cover_set(g, kind.dim(), seed_opt.probability, rng);
    report["sample"] = sampled;
    return find_seed(g, kind, SeedChain{{sampled, everything}}, config);
  };

  std::optional<SeedCertificate> certificate;
  if (seed_opt.strategy == "biconnected") {
    if (!doc.is_bipartite()) throw std::invalid_argument("biconnected strategy needs a bipartite graph");
    if (seed_opt.k < 1) throw std::invalid_argument("biconnected strategy needs -k at least 1");
    auto rng = substream(opt.seed, 0);
    BiconnectedSeedOutcome outcome = biconnected_seed(doc.bipartite(), kind.dim(), seed_opt.k, config, rng);
    report["cover"] = outcome.cover;
    report["reduced_cover"] = outcome.reduced_cover;
    report["sample"] = outcome.sample;
    if (!outcome.failure.empty()) {
      report["failure"] = outcome.failure;
      emit_report(opt, report);
      return kExitExploratory;
    }
    certificate = outcome.certificate;
  } else if (doc.is_bipartite()) {
    certificate = with_graph(doc.bipartite());
  } else {
    certificate = with_graph(doc.semisimple());
  }
  report["certificate"] = certificate_json(*certificate);
  emit_report(opt, report);
  return kExitOk;
}

struct ConnectivityOptions {
  int k = 1;
  bool separators = false;
};

int run_connectivity(const CommonOptions& opt, const ConnectivityOptions& conn, const std::string& path) {
  GraphDocument doc = load_graph(path);
  json report;
  report["command"] = "connectivity";
  if (!doc.name.empty()) report["graph"] = doc.name;
  report["k"] = conn.k;
  report["vertices"] = doc.vertex_count();
  if (doc.is_bipartite()) {
    const BipartiteGraph& g = doc.bipartite();
    report["kappa"] = vertex_connectivity(g);
    report["tau"] = min_vertex_cover(g).size();
    report["critically_k_connected"] = is_critically_k_connected(g.to_semisimple(), conn.k);
    BiconnectivityResult result = is_k_biconnected(g, conn.k);
    report["k_biconnected"] = result.biconnected;
    report["biconnectivity_reason"] = result.reason;
    if (result.witness) report["witness"] = *result.witness;
    report["critically_k_biconnected"] = is_critically_k_biconnected(g, conn.k);
    if (conn.separators) {
      json list = json::array();
      for (const SeparatorReport& separator : essential_separators(g, conn.k)) {
        list.push_back(separator_json(separator));
      }
      report["essential_separators"] = list;
    }
  } else {
    const SemisimpleGraph& g = doc.semisimple();
    report["kappa"] = vertex_connectivity(g);
    report["tau"] = min_vertex_cover(g).size();
    report["critically_k_connected"] = is_critically_k_connected(g, conn.k);
    if (conn.separators) {
      json list = json::array();
      for (const SeparatorReport& separator : essential_separators(g, conn.k)) {
        list.push_back(separator_json(separator));
      }
      report["essential_separators"] = list;
    }
  }
  emit_report(opt, report);
  return kExitOk;
}

int run_certify(const CommonOptions& opt, int k, const std::string& path) {
  GraphDocument doc = load_graph(path);
  SemisimpleGraph host = doc.is_bipartite() ? doc.bipartite().to_semisimple() : doc.semisimple();
  SparseCertificate certificate = sparse_local_certificate(host, k);
  if (opt.format == "json") {
    json report;
    report["command"] = "certify";
    report["k"] = certificate.k;
    report["vertices"] = certificate.subgraph.vertex_count();
    report["edge_count"] = certificate.edge_count;
    report["edges"] = edges_json(certificate.subgraph.edges());
    write_output(opt, report.dump(2));
  } else {
    GraphDocument out_doc(certificate.subgraph);
    out_doc.name = "sparse-certificate";
    out_doc.params = {certificate.k, certificate.edge_count};
    write_output(opt, serialize_graph_text(out_doc));
  }
  return kExitOk;
}

int run_family(const CommonOptions& opt, const std::string& name, const std::vector<long long>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("family " + name + " takes " + std::to_string(count) + " parameters");
    }
  };
  auto at = [&](std::size_t i) { return static_cast<int>(params[i]); };
  GraphDocument doc;
  if (name == "complete") {
    need(1);
    doc = GraphDocument(complete_graph(at(0)));
  } else if (name == "complete-semisimple") {
    need(1);
    doc = GraphDocument(complete_semisimple(at(0)));
  } else if (name == "complete-bipartite") {
    need(2);
    doc = GraphDocument(complete_bipartite(at(0), at(1)));
  } else if (name == "complete-tripartite") {
    need(3);
    doc = GraphDocument(complete_tripartite(at(0), at(1), at(2)));
  } else if (name == "circulant-bipartite") {
    need(2);
    doc = GraphDocument(circulant_bipartite(at(0), at(1)));
  } else if (name == "ly-split") {
    need(3);
    doc = GraphDocument(ly_split_family(at(0), at(1), at(2)));
  } else if (name == "critical") {
    need(2);
    doc = GraphDocument(critical_family(at(0), at(1)));
  } else {
    throw std::invalid_argument("unknown family: " + name);
  }
  doc.name = name;
  doc.params = params;
  emit_graph(opt, doc);
  return kExitOk;
}

struct ExperimentOptions {
  std::string sweep;
  int nmin = -1;
  int nmax = -1;
  int count = 5;
  int k = 2;
  int pmin = 2;
  int pmax = 4;
  int kmin = 2;
  int kmax = 3;
  double edge_prob = 0.5;
};

SemisimpleGraph random_graph_instance(int n, double prob, std::mt19937_64& rng) {
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bernoulli(rng, prob)) edges.emplace_back(u, v);
  return SemisimpleGraph(n, std::move(edges));
}

BipartiteGraph random_bipartite_instance(int a, int b, double prob, std::mt19937_64& rng) {
  EdgeList edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (bernoulli(rng, prob)) edges.emplace_back(i, j);
  return BipartiteGraph(a, b, std::move(edges));
}

// Raises every degree to at least `floor` by joining deficient vertices to
// uniformly chosen non-neighbours.
SemisimpleGraph with_min_degree(SemisimpleGraph g, int floor, std::mt19937_64& rng) {
  if (floor > g.vertex_count() - 1) throw std::invalid_argument("minimum degree floor exceeds n - 1");
  for (int v = 0; v < g.vertex_count(); ++v) {
    while (g.degree(v) < floor) {
      std::vector<int> candidates;
      for (int w = 0; w < g.vertex_count(); ++w) {
        if (w != v && !g.has_edge(v, w)) candidates.push_back(w);
      }
      g = g.add_edge(v, candidates[uniform_int(rng, 0, static_cast<int>(candidates.size()) - 1)]);
    }
  }
  return g;
}

int finish_experiment(const CommonOptions& opt, json& report, bool exploratory_only, bool failed) {
  report["verdict"] = failed ? "violation" : (exploratory_only ? "exploratory" : "ok");
  emit_report(opt, report);
  if (failed) return kExitViolation;
  return exploratory_only ? kExitExploratory : kExitOk;
}

// Random graphs at a minimum-degree floor of (n+d-1)/2, reporting how many
// span the hyperconnectivity matroid, plus asserted tightness probes on the
// balanced tripartite families.
int sweep_min_degree(const CommonOptions& opt, const ExperimentOptions& exp, json& report) {
  int d = opt.dim;
  int nmin = exp.nmin < 0 ? 8 : exp.nmin;
  int nmax = exp.nmax < 0 ? 10 : exp.nmax;
  RankQueryConfig config = resolve_config(opt);
  std::uint64_t counter = 0;
  json instances = json::array();
  for (int n = nmin; n <= nmax; ++n) {
    int floor = (n + d) / 2;  // ceiling of (n + d - 1) / 2
    int rigid = 0;
    for (int i = 0; i < exp.count; ++i) {
      auto rng = substream(opt.seed, counter++);
      SemisimpleGraph g = with_min_degree(random_graph_instance(n, exp.edge_prob, rng), floor, rng);
      if (is_rigid(g, MatroidKind::hyperconnectivity(d), config)) ++rigid;
    }
    instances.push_back({{"n", n},
                         {"min_degree", floor},
                         {"count", exp.count},
                         {"rigid", rigid},
                         {"fraction", exp.count ? static_cast<double>(rigid) / exp.count : 0.0}});
  }
  report["instances"] = instances;
  report["exploratory_note"] = "small-n fractions only; the guarantee regime needs far larger n";

  bool failed = false;
  json tightness = json::array();
  for (int dd = 2; dd <= 3; ++dd) {
    for (int m = 3; m <= 5; ++m) {
      SemisimpleGraph hyper_case = complete_tripartite(m, m, dd - 2);
      bool hyper_holds = !is_rigid(hyper_case, MatroidKind::hyperconnectivity(dd), config);
      tightness.push_back({{"graph", "complete_tripartite(" + std::to_string(m) + "," + std::to_string(m) +
                                         "," + std::to_string(dd - 2) + ")"},
                           {"claim", "not " + std::to_string(dd) + "-hyperconnected"},
                           {"holds", hyper_holds}});
      SemisimpleGraph completion_case = complete_tripartite(m, m, dd - 1);
      bool completion_holds = !is_rigid(completion_case, MatroidKind::sym_completion(dd), config);
      tightness.push_back({{"graph", "complete_tripartite(" + std::to_string(m) + "," + std::to_string(m) +
                                         "," + std::to_string(dd - 1) + ")"},
                           {"claim", "not " + std::to_string(dd) + "-completable"},
                           {"holds", completion_holds}});
      failed = failed || !hyper_holds || !completion_holds;
    }
  }
  report["tightness"] = tightness;
  return finish_experiment(opt, report, false, failed);
}

// Random bipartite instances tabulating biconnectivity against birigidity
// and seed construction, plus the asserted split-family probe showing that
// connectivity one below 2ab does not force (a,b)-birigidity.
int sweep_biconnectivity(const CommonOptions& opt, const ExperimentOptions& exp, json& report) {
  int d = opt.dim;
  int nmin = exp.nmin < 0 ? 4 : exp.nmin;
  int nmax = exp.nmax < 0 ? 6 : exp.nmax;
  RankQueryConfig config = resolve_config(opt);
  std::uint64_t counter = 0;
  json instances = json::array();
  for (int m = nmin; m <= nmax; ++m) {
    for (int i = 0; i < exp.count; ++i) {
      auto rng = substream(opt.seed, counter++);
      BipartiteGraph g = random_bipartite_instance(m, m, exp.edge_prob, rng);
      json row;
      row["classes"] = m;
      row["index"] = i;
      row["kappa"] = vertex_connectivity(g);
      row["k_biconnected"] = is_k_biconnected(g, exp.k).biconnected;
      row["birigid"] = is_rigid(g, MatroidKind::birigidity(d), config);
      BiconnectedSeedOutcome outcome = biconnected_seed(g, d, exp.k, config, rng);
      row["seed_found"] = outcome.failure.empty();
      if (outcome.failure.empty()) {
        row["seed_size"] = outcome.certificate->seed_vertices.size();
      } else {
        row["seed_failure"] = outcome.failure;
      }
      instances.push_back(row);
    }
  }
  report["instances"] = instances;
  report["exploratory_note"] = "biconnectivity forces birigidity only at parameters beyond desk scale";

  BipartiteGraph split = ly_split_family(1, 2, 4);
  MatroidKind kind = MatroidKind::birigidity_ab(1, 2);
  long long rank = generic_rank(split, kind, config);
  long long bound = rank_formula(kind, split.left_count(), split.right_count());
  int kappa = vertex_connectivity(split);
  bool holds = kappa == 3 && rank < bound && !is_rigid(split, kind, config);
  report["tightness"] = json::array({{{"graph", "ly_split_family(1,2,4)"},
                                      {"claim", "3-connected but not (1,2)-birigid"},
                                      {"kappa", kappa},
                                      {"rank", rank},
                                      {"rigid_rank", bound},
                                      {"holds", holds}}});
  return finish_experiment(opt, report, false, !holds);
}

// Cover lower-bound pipeline over the glued-family grid, in both the
// bipartite and the general mode; every report is internally verified, so
// reaching the output at all certifies the inequality chains.
int sweep_tau_bound(const CommonOptions& opt, const ExperimentOptions& exp, json& report) {
  bool failed = false;
  json rows = json::array();
  for (int k = exp.kmin; k <= exp.kmax; ++k) {
    for (int p = exp.pmin; p <= exp.pmax; ++p) {
      BipartiteGraph g = critical_family(k, p);
      json row;
      row["k"] = k;
      row["p"] = p;
      row["critically_k_connected"] = is_critically_k_connected(g.to_semisimple(), k);
      row["bipartite"] = tau_report_json(tau_bound_report(g, k));
      row["general"] = tau_report_json(tau_bound_report(g.to_semisimple(), k));
      bool ok = row["critically_k_connected"].get<bool>() &&
                row["bipartite"]["bound_holds"].get<bool>() && row["general"]["bound_holds"].get<bool>();
      row["holds"] = ok;
      failed = failed || !ok;
      rows.push_back(row);
    }
  }
  report["instances"] = rows;
  return finish_experiment(opt, report, false, failed);
}

// Observational sweep for the conjecture that sufficiently connected graphs
// have completion and hyperconnectivity rank at least dn - d^2. Nothing is
// asserted: the conjectured connectivity threshold is unknown.
int sweep_completion_rank(const CommonOptions& opt, const ExperimentOptions& exp, json& report) {
  int d = opt.dim;
  int nmin = exp.nmin < 0 ? 8 : exp.nmin;
  int nmax = exp.nmax < 0 ? 10 : exp.nmax;
  RankQueryConfig config = resolve_config(opt);
  std::uint64_t counter = 0;
  json instances = json::array();
  for (int n = nmin; n <= nmax; ++n) {
    for (int i = 0; i < exp.count; ++i) {
      auto rng = substream(opt.seed, counter++);
      SemisimpleGraph g = random_graph_instance(n, exp.edge_prob, rng);
      long long target = static_cast<long long>(d) * n - static_cast<long long>(d) * d;
      long long sym_rank = generic_rank(g, MatroidKind::sym_completion(d), config);
      long long hyper_rank = generic_rank(g, MatroidKind::hyperconnectivity(d), config);
      instances.push_back({{"n", n},
                           {"index", i},
                           {"kappa", vertex_connectivity(g)},
                           {"sym_rank", sym_rank},
                           {"hyper_rank", hyper_rank},
                           {"target", target},
                           {"meets_target", sym_rank >= target && hyper_rank >= target}});
    }
  }
  report["instances"] = instances;
  report["exploratory_note"] = "observational only; no connectivity threshold is asserted";
  return finish_experiment(opt, report, true, false);
}

// Observational sweep for the conjecture that 2ab-connected bipartite
// graphs are (a,b)-birigid. A violating instance would be a genuine
// counterexample, so it is written to a graph file, but the sweep still
// asserts nothing.
int sweep_birigid_connectivity(const CommonOptions& opt, const ExperimentOptions& exp, json& report) {
  int a = opt.ab.empty() ? opt.dim : opt.ab[0];
  int b = opt.ab.empty() ? opt.dim : opt.ab[1];
  MatroidKind kind = MatroidKind::birigidity_ab(a, b);
  int threshold = 2 * a * b;
  int nmin = exp.nmin < 0 ? 4 : exp.nmin;
  int nmax = exp.nmax < 0 ? 6 : exp.nmax;
  RankQueryConfig config = resolve_config(opt);
  std::uint64_t counter = 0;
  json instances = json::array();
  json counterexamples = json::array();
  for (int m = nmin; m <= nmax; ++m) {
    for (int i = 0; i < exp.count; ++i) {
      auto rng = substream(opt.seed, counter++);
      BipartiteGraph g = random_bipartite_instance(m, m, exp.edge_prob, rng);
      int kappa = vertex_connectivity(g);
      bool birigid = is_rigid(g, kind, config);
      bool applies = kappa >= threshold;
      instances.push_back({{"classes", m},
                           {"index", i},
                           {"kappa", kappa},
                           {"threshold", threshold},
                           {"birigid", birigid},
                           {"consistent", !applies || birigid}});
      if (applies && !birigid) {
        std::filesystem::path dir =
            opt.out.empty() ? std::filesystem::path(".") : std::filesystem::path(opt.out).parent_path();
        if (dir.empty()) dir = ".";
        std::filesystem::path file =
            dir / ("birigid-connectivity-counterexample-" + std::to_string(m) + "-" + std::to_string(i) + ".txt");
        GraphDocument doc(g);
        doc.name = "counterexample";
        std::ofstream out(file);
        out << serialize_graph_text(doc);
        counterexamples.push_back(file.string());
      }
    }
  }
  report["instances"] = instances;
  if (!counterexamples.empty()) report["counterexamples"] = counterexamples;
  report["exploratory_note"] = "observational only; the conjectured threshold is not asserted";
  return finish_experiment(opt, report, true, false);
}

int run_experiment(const CommonOptions& opt, const ExperimentOptions& exp) {
  if (exp.count < 1) throw std::invalid_argument("--count must be positive");
  if (exp.nmin >= 0 && exp.nmax >= 0 && exp.nmin > exp.nmax) {
    throw std::invalid_argument("--nmin exceeds --nmax");
  }
  if (exp.kmin > exp.kmax || exp.pmin > exp.pmax) {
    throw std::invalid_argument("empty parameter range");
  }
  if (exp.edge_prob < 0.0 || exp.edge_prob > 1.0) {
    throw std::invalid_argument("--edge-prob outside [0, 1]");
  }
  json report;
  report["command"] = "experiment";
  report["sweep"] = exp.sweep;
  report["dim"] = opt.dim;
  report["seed"] = opt.seed;
  report["trials"] = opt.trials;
  if (exp.sweep == "min-degree") return sweep_min_degree(opt, exp, report);
  if (exp.sweep == "biconnectivity") return sweep_biconnectivity(opt, exp, report);
  if (exp.sweep == "tau-bound") return sweep_tau_bound(opt, exp, report);
  if (exp.sweep == "completion-rank") return sweep_completion_rank(opt, exp, report);
  if (exp.sweep == "birigid-connectivity") return sweep_birigid_connectivity(opt, exp, report);
  throw std::invalid_argument("unknown sweep: " + exp.sweep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generic matroid rank, seed, and connectivity toolkit"};
  app.require_subcommand(1);
  CommonOptions common;

  std::string graph_path;
  CLI::App* rank_cmd = app.add_subcommand("rank", "generic rank of a graph in a matroid family");
  rank_cmd->add_option("graph", graph_path, "graph file")->required()->check(CLI::ExistingFile);
  add_kind_flags(rank_cmd, common);
  add_output_flags(rank_cmd, common);

  CLI::App* check_cmd = app.add_subcommand("check", "independence, rigidity, and closedness of a graph");
  check_cmd->add_option("graph", graph_path, "graph file")->required()->check(CLI::ExistingFile);
  add_kind_flags(check_cmd, common);
  add_output_flags(check_cmd, common);

  CLI::App* closure_cmd = app.add_subcommand("closure", "matroid closure of a graph, as a graph file");
  closure_cmd->add_option("graph", graph_path, "graph file")->required()->check(CLI::ExistingFile);
  add_kind_flags(closure_cmd, common);
  add_output_flags(closure_cmd, common);

  SeedOptions seed_opt;
  CLI::App* seed_cmd = app.add_subcommand("seed", "construct a seed certificate");
  seed_cmd->add_option("graph", graph_path, "graph file")->required()->check(CLI::ExistingFile);
  seed_cmd->add_option("--strategy", seed_opt.strategy, "chain, sample, or biconnected")
      ->required()
      ->check(CLI::IsMember({"chain", "sample", "biconnected"}));
  seed_cmd->add_option("--x0", seed_opt.x0, "starting level for the chain strategy")->delimiter(',');
  seed_cmd->add_option("--prob", seed_opt.probability, "sampling probability")->capture_default_str();
  seed_cmd->add_option("-k", seed_opt.k, "biconnectivity parameter for the biconnected strategy");
  add_kind_flags(seed_cmd, common);
  add_output_flags(seed_cmd, common);

  ConnectivityOptions conn_opt;
  CLI::App* conn_cmd = app.add_subcommand("connectivity", "connectivity, biconnectivity, and cover report");
  conn_cmd->add_option("graph", graph_path, "graph file")->required()->check(CLI::ExistingFile);
  conn_cmd->add_option("-k", conn_opt.k, "connectivity parameter")->capture_default_str();
  conn_cmd->add_flag("--separators", conn_opt.separators, "list essential separators");
  add_output_flags(conn_cmd, common);

  int certify_k = 1;
  CLI::App* certify_cmd = app.add_subcommand("certify", "sparse certificate preserving connectivity up to k");
  certify_cmd->add_option("graph", graph_path, "graph file")->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("-k", certify_k, "connectivity parameter")->capture_default_str();
  add_output_flags(certify_cmd, common);

  std::string family_name;
  std::vector<long long> family_params;
  CLI::App* family_cmd = app.add_subcommand("family", "generate a named graph family");
  family_cmd->add_option("name", family_name, "family name")->required();
  family_cmd->add_option("params", family_params, "family parameters");
  add_output_flags(family_cmd, common);

  ExperimentOptions exp_opt;
  CLI::App* exp_cmd = app.add_subcommand("experiment", "randomized sweeps with machine-readable reports");
  exp_cmd->add_option("--sweep", exp_opt.sweep, "sweep name")
      ->required()
      ->check(CLI::IsMember(
          {"min-degree", "biconnectivity", "tau-bound", "completion-rank", "birigid-connectivity"}));
  exp_cmd->add_option("--nmin", exp_opt.nmin, "smallest instance size");
  exp_cmd->add_option("--nmax", exp_opt.nmax, "largest instance size");
  exp_cmd->add_option("--count", exp_opt.count, "instances per size")->capture_default_str();
  exp_cmd->add_option("-k", exp_opt.k, "connectivity parameter")->capture_default_str();
  exp_cmd->add_option("--kmin", exp_opt.kmin, "smallest k for grid sweeps")->capture_default_str();
  exp_cmd->add_option("--kmax", exp_opt.kmax, "largest k for grid sweeps")->capture_default_str();
  exp_cmd->add_option("--pmin", exp_opt.pmin, "smallest p for grid sweeps")->capture_default_str();
  exp_cmd->add_option("--pmax", exp_opt.pmax, "largest p for grid sweeps")->capture_default_str();
  exp_cmd->add_option("--edge-prob", exp_opt.edge_prob, "edge probability for random instances")
      ->capture_default_str();
  add_kind_flags(exp_cmd, common);
  add_output_flags(exp_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(rank_cmd)) return run_rank(common, graph_path);
    if (app.got_subcommand(check_cmd)) return run_check(common, graph_path);
    if (app.got_subcommand(closure_cmd)) return run_closure(common, graph_path);
    if (app.got_subcommand(seed_cmd)) return run_seed(common, seed_opt, graph_path);
    if (app.got_subcommand(conn_cmd)) return run_connectivity(common, conn_opt, graph_path);
    if (app.got_subcommand(certify_cmd)) return run_certify(common, certify_k, graph_path);
    if (app.got_subcommand(family_cmd)) return run_family(common, family_name, family_params);
    if (app.got_subcommand(exp_cmd)) return run_experiment(common, exp_opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}
