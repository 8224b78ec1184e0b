// Command-line front end: exact values, order evaluation, decompositions,
// bound verification and sweeps.

#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcn/decomposition.hpp"
#include "gcn/error.hpp"
#include "gcn/experiment.hpp"
#include "gcn/generators.hpp"
#include "gcn/graph_io.hpp"
#include "gcn/minor_builders.hpp"
#include "gcn/planar.hpp"
#include "gcn/reachability.hpp"

namespace {

using gcn::Graph;
using json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string embedding;
  std::string r = "1..5";
  std::string mode = "strong";
  std::vector<std::string> strategies;
  int t = 5;
  std::string H;
  int apex = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::string order;
  std::string family = "triangulation";
  std::vector<int> params;
  int count = 50;
  bool count_given = false;
  unsigned threads = 0;
  int max_vertices = 10;
  std::string parts;
};

struct RadiusRange {
  int lo = 1;
  int hi = 1;
  bool infinite = false;
};

RadiusRange parse_range(const std::string& text) {
  RadiusRange rr;
  if (text == "inf" || text == "infinity") {
    rr.infinite = true;
    return rr;
  }
  std::smatch m;
  static const std::regex range(R"((\d+)\.\.(\d+))");
  static const std::regex single(R"(\d+)");
  if (std::regex_match(text, m, range)) {
    rr.lo = std::stoi(m[1]);
    rr.hi = std::stoi(m[2]);
  } else if (std::regex_match(text, single)) {
    rr.lo = rr.hi = std::stoi(text);
  } else {
    throw gcn::InputError("--r expects N, A..B or inf, got '" + text + "'");
  }
  if (rr.lo > rr.hi) throw gcn::InputError("--r range is empty");
  return rr;
}

gcn::Mode parse_mode(const std::string& m) {
  if (m == "strong") return gcn::Mode::Strong;
  if (m == "weak") return gcn::Mode::Weak;
  throw gcn::InputError("--mode must be weak or strong");
}

// "K5", "K1,3" or a graph file.
Graph load_h(const std::string& spec) {
  std::smatch m;
  static const std::regex complete(R"(K(\d+))");
  static const std::regex bipartite(R"(K(\d+),(\d+))");
  if (std::regex_match(spec, m, complete)) return gcn::complete_graph(std::stoi(m[1]));
  if (std::regex_match(spec, m, bipartite)) {
    const int a = std::stoi(m[1]);
    const int b = std::stoi(m[2]);
    std::vector<gcn::Edge> e;
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    }
    return Graph(a + b, e);
  }
  return gcn::load_graph(spec);
}

gcn::Instance load_instance(const Options& o) {
  if (o.input.empty()) throw gcn::InputError("--input is required");
  gcn::Instance inst{o.input, "file", gcn::load_graph(o.input), std::nullopt};
  if (!o.embedding.empty()) {
    auto rf = gcn::read_rotation_file(o.embedding);
    inst.embedding = gcn::validate_embedding(inst.graph, std::move(rf.rotation), rf.outer);
  }
  return inst;
}

gcn::StrategyParams strategy_params(const Options& o) {
  gcn::StrategyParams p;
  p.t = o.t;
  p.apex = o.apex;
  if (!o.H.empty()) p.H = load_h(o.H);
  return p;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw gcn::InputError("cannot write " + o.out);
  f << text;
}

json order_json(const gcn::LinearOrder& L) {
  return json(std::vector<int>(L.sequence().begin(), L.sequence().end()));
}

int cmd_exact(const Options& o) {
  const Graph g = gcn::load_graph(o.input);
  const auto rr = parse_range(o.r);
  const auto mode = parse_mode(o.mode);
  json out;
  out["n"] = g.order();
  out["mode"] = o.mode;
  json rows = json::array();
  auto solve = [&](gcn::Radius r, json label) {
    auto res = gcn::exact_gcn(g, r, mode, {o.max_vertices});
    rows.push_back(json{{"r", label}, {"value", res.value}, {"order", order_json(res.order)}});
  };
  if (rr.infinite) {
    solve(gcn::Radius::infinite(), "inf");
  } else {
    for (int r = rr.lo; r <= rr.hi; ++r) solve(r, r);
  }
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << "r,value\n";
    for (const auto& row : rows) csv << (row["r"].is_string() ? row["r"].get<std::string>() : row["r"].dump()) << ',' << row["value"] << '\n';
    emit(o, csv.str());
  } else {
    out["results"] = std::move(rows);
    emit(o, out.dump(2) + "\n");
  }
  return 0;
}

gcn::LinearOrder read_order(const std::string& path, int n) {
  if (path.empty()) return gcn::LinearOrder::identity(n);
  std::ifstream f(path);
  if (!f) throw gcn::InputError("cannot open order file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  std::string text = buf.str();
  for (char& c : text) {
    if (c == '\n' || c == '\r' || c == ',') c = ' ';
  }
  auto L = gcn::LinearOrder::parse(text);
  if (L.size() != n) throw gcn::InputError("order has " + std::to_string(L.size()) + " vertices, graph has " + std::to_string(n));
  return L;
}

int cmd_evaluate(const Options& o) {
  const Graph g = gcn::load_graph(o.input);
  const auto L = read_order(o.order, g.order());
  const auto rr = parse_range(o.r);
  std::vector<std::pair<json, gcn::Radius>> radii;
  if (rr.infinite) {
    radii.emplace_back("inf", gcn::Radius::infinite());
  } else {
    for (int r = rr.lo; r <= rr.hi; ++r) radii.emplace_back(r, r);
  }
  json rows = json::array();
  for (const auto& [label, r] : radii) {
    rows.push_back(json{{"r", label},
                        {"cost_strong", gcn::cost_of_order(g, L, r, gcn::Mode::Strong)},
                        {"cost_weak", gcn::cost_of_order(g, L, r, gcn::Mode::Weak)}});
  }
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << "r,cost_strong,cost_weak\n";
    for (const auto& row : rows) {
      csv << (row["r"].is_string() ? row["r"].get<std::string>() : row["r"].dump()) << ',' << row["cost_strong"] << ','
          << row["cost_weak"] << '\n';
    }
    emit(o, csv.str());
  } else {
    emit(o, json{{"n", g.order()}, {"order", order_json(L)}, {"results", rows}}.dump(2) + "\n");
  }
  return 0;
}

int cmd_decompose(const Options& o) {
  if (o.strategies.size() != 1) throw gcn::InputError("decompose takes exactly one --strategy");
  auto inst = load_instance(o);
  const auto strategy = gcn::parse_strategy(o.strategies.front());
  const auto params = strategy_params(o);
  const auto rr = parse_range(o.r);
  if (rr.infinite) throw gcn::InputError("decompose needs a finite --r range");

  json out;
  out["strategy"] = o.strategies.front();
  out["n"] = inst.graph.order();
  if (strategy == gcn::Strategy::HIpd) {
    if (!params.H) throw gcn::InputError("h-ipd needs --H");
    auto res = gcn::h_ipd(inst.graph, *params.H, params.apex);
    out["h"] = res.h;
    out["alpha"] = res.alpha;
    out["trace"] = res.trace.steps;
    if (res.certificate) {
      out["minor_found"] = true;
      out["branch_sets"] = res.certificate->branch_sets;
      emit(o, out.dump(2) + "\n");
      return 0;
    }
    gcn::CertifyOptions copt{rr.lo, rr.hi, 3 * res.h + res.alpha, 14};
    auto report = gcn::certify(inst.graph, *res.decomposition, gcn::SpreadFunction::affine(1), copt);
    out["minor_found"] = false;
    out["parts"] = res.decomposition->vertex_sets();
    out["order"] = order_json(gcn::order_from_decomposition(*res.decomposition));
    out["certificate"] = report.to_json();
    if (!o.parts.empty()) std::ofstream(o.parts) << res.decomposition->to_text();
    emit(o, out.dump(2) + "\n");
    return report.passed() ? 0 : 1;
  }

  auto run = gcn::run_strategy(inst, strategy, params);
  out["details"] = run.details;
  if (run.certificate) {
    out["minor_found"] = true;
    out["branch_sets"] = run.certificate->branch_sets;
    emit(o, out.dump(2) + "\n");
    return 0;
  }
  out["order"] = order_json(run.order);
  bool ok = true;
  if (run.decomposition) {
    std::optional<int> bound;
    gcn::SpreadFunction f = gcn::SpreadFunction::affine(1);
    if (strategy == gcn::Strategy::IpdPlanar) bound = 2;
    if (strategy == gcn::Strategy::KtFlat) {
      bound = params.t - 2;
      f = gcn::kt_spread(params.t);
    }
    out["parts"] = run.decomposition->vertex_sets();
    if (run.decomposition->vertex_count() == inst.graph.order() && strategy != gcn::Strategy::IpdPlanar) {
      auto report = gcn::certify(inst.graph, *run.decomposition, f, {rr.lo, rr.hi, bound, 14});
      out["certificate"] = report.to_json();
      ok = report.passed();
    } else {
      out["certificate"] = json{{"note", "decomposition of the triangulation; see verify for measured costs"}};
      if (!run.details.value("triangulated", false)) {
        auto report = gcn::certify(inst.graph, *run.decomposition, f, {rr.lo, rr.hi, bound, 14});
        out["certificate"] = report.to_json();
        ok = report.passed();
      }
    }
    if (!o.parts.empty()) std::ofstream(o.parts) << run.decomposition->to_text();
  }
  emit(o, out.dump(2) + "\n");
  return ok ? 0 : 1;
}

std::vector<gcn::Instance> instances_for(const Options& o) {
  if (!o.input.empty()) return {load_instance(o)};
  static const std::set<std::string> fixed{"path", "cycle", "complete", "grid", "triangulated-grid"};
  const int count = !o.count_given && fixed.count(o.family) ? 1 : o.count;
  return gcn::make_instances(o.family, o.params, o.seed, count);
}

std::vector<gcn::Strategy> strategies_for(const Options& o, std::vector<std::string> fallback) {
  std::vector<gcn::Strategy> out;
  for (const auto& s : o.strategies.empty() ? fallback : o.strategies) out.push_back(gcn::parse_strategy(s));
  return out;
}

int report_rows(const Options& o, const std::vector<gcn::BoundRow>& rows, const std::vector<gcn::Strategy>& strategies,
                const RadiusRange& rr) {
  bool all = true;
  for (const auto& row : rows) all = all && row.pass();
  if (o.format == "csv") {
    emit(o, gcn::rows_to_csv(rows));
  } else {
    json out;
    out["seed"] = o.seed;
    out["source"] = o.input.empty() ? o.family : o.input;
    out["r_min"] = rr.lo;
    out["r_max"] = rr.hi;
    json names = json::array();
    json forms = json::object();
    for (auto s : strategies) {
      names.push_back(gcn::to_string(s));
      forms[gcn::to_string(s)] = json{{"strong", gcn::strategy_bound_form(s, gcn::Mode::Strong)},
                                      {"weak", gcn::strategy_bound_form(s, gcn::Mode::Weak)}};
    }
    out["strategies"] = std::move(names);
    out["bounds"] = std::move(forms);
    out["rows"] = gcn::rows_to_json(rows);
    out["all_pass"] = all;
    emit(o, out.dump(2) + "\n");
  }
  return all ? 0 : 1;
}

int cmd_matrix(const Options& o, std::vector<std::string> fallback) {
  const auto rr = parse_range(o.r);
  if (rr.infinite) throw gcn::InputError("--r must be finite here");
  const auto strategies = strategies_for(o, std::move(fallback));
  const auto rows = gcn::run_matrix(instances_for(o), strategies, strategy_params(o), rr.lo, rr.hi, o.threads);
  return report_rows(o, rows, strategies, rr);
}

int cmd_generate(const Options& o) {
  auto eg = gcn::generate(o.family, o.params, o.seed);
  const bool g6 = o.out.size() >= 3 && o.out.compare(o.out.size() - 3, 3, ".g6") == 0;
  emit(o, g6 ? gcn::to_graph6(eg.graph) + "\n" : gcn::to_edge_list(eg.graph));
  if (!o.embedding.empty()) {
    if (!eg.embedding) throw gcn::InputError("family " + o.family + " has no embedding");
    std::ofstream(o.embedding) << gcn::to_rotation_text(*eg.embedding);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalised colouring numbers: exact values, constructive orders and bound checks"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* c) {
    c->add_option("--input", o.input, "graph file (graph6 or edge list)");
    c->add_option("--out", o.out, "output path (default stdout)");
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_strategy = [&](CLI::App* c) {
    c->add_option("--strategy", o.strategies, "ipd-planar|lexbfs-planar|kt-flat|h-ipd|degeneracy");
    c->add_option("--embedding", o.embedding, "rotation system file");
    c->add_option("--t", o.t, "excluded clique size for kt-flat");
    c->add_option("--H", o.H, "excluded graph for h-ipd: file, Kn or Ka,b");
    c->add_option("--apex", o.apex, "apex vertex of H");
    c->add_option("--r", o.r, "radius range A..B");
  };

  auto* exact = app.add_subcommand("exact", "exact col_r / wcol_r by branch and bound");
  add_input(exact);
  exact->add_option("--r", o.r, "radius N, A..B or inf");
  exact->add_option("--mode", o.mode, "weak or strong");
  exact->add_option("--max-vertices", o.max_vertices, "size guard (at most 64)");

  auto* evaluate = app.add_subcommand("evaluate", "cost of a given order");
  add_input(evaluate);
  evaluate->add_option("--order", o.order, "file with the vertex sequence (default identity)");
  evaluate->add_option("--r", o.r, "radius N, A..B or inf");

  auto* decompose = app.add_subcommand("decompose", "run a builder and certify its decomposition");
  add_input(decompose);
  add_strategy(decompose);
  decompose->add_option("--parts", o.parts, "also write the decomposition, one part per line");

  auto* verify = app.add_subcommand("verify", "measured costs against closed-form bounds");
  auto* sweep = app.add_subcommand("sweep", "cost against r per strategy");
  for (auto* c : {verify, sweep}) {
    add_input(c);
    add_strategy(c);
    c->add_option("--seed", o.seed, "seed for generated instances");
    c->add_option("--family", o.family, "generated family when no --input is given");
    c->add_option("--params", o.params, "family parameters");
    c->add_option("--count", o.count, "number of generated instances");
    c->add_option("--threads", o.threads, "worker threads (default: hardware)");
  }

  auto* generate = app.add_subcommand("generate", "write a generated graph (and embedding)");
  generate->add_option("--family", o.family, "family name")->required();
  generate->add_option("--params", o.params, "family parameters");
  generate->add_option("--seed", o.seed, "seed");
  generate->add_option("--out", o.out, "output path; .g6 selects graph6");
  generate->add_option("--embedding", o.embedding, "also write the rotation system here");

  CLI11_PARSE(app, argc, argv);
  o.count_given = verify->count("--count") > 0 || sweep->count("--count") > 0;
  try {
    if (*exact) return cmd_exact(o);
    if (*evaluate) return cmd_evaluate(o);
    if (*decompose) return cmd_decompose(o);
    if (*verify) return cmd_matrix(o, {"ipd-planar", "lexbfs-planar"});
    if (*sweep) {
      if (!sweep->count("--format")) o.format = "csv";
      return cmd_matrix(o, {"ipd-planar", "lexbfs-planar"});
    }
    if (*generate) return cmd_generate(o);
  } catch (const gcn::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << " (raise --max-vertices up to 64 or use a smaller graph)\n";
    return 2;
  } catch (const gcn::EmbeddingError& e) {
    std::cerr << "embedding: " << e.what() << '\n';
    return 2;
  } catch (const gcn::InputError& e) {
    std::cerr << "input: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
