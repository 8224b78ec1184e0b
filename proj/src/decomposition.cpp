#include "gcn/decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gcn/error.hpp"
#include "gcn/reachability.hpp"
#include "gcn/traversal.hpp"

namespace gcn {

Decomposition::Decomposition(int n, std::vector<Part> parts) : parts_(std::move(parts)) {
  if (n < 0) throw InputError("negative vertex count");
  part_of_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].vertices.empty()) throw InputError("part " + std::to_string(i) + " is empty");
    for (Vertex v : parts_[i].vertices) {
      if (v < 0 || v >= n) throw InputError("part vertex " + std::to_string(v) + " out of range");
      if (part_of_[v] != -1) throw InputError("vertex " + std::to_string(v) + " lies in two parts");
      part_of_[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (part_of_[v] == -1) throw InputError("vertex " + std::to_string(v) + " is in no part");
  }
}

std::vector<std::vector<Vertex>> Decomposition::vertex_sets() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) out.push_back(p.vertices);
  return out;
}

std::string Decomposition::to_text() const {
  std::ostringstream out;
  for (const auto& p : parts_) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      if (i) out << ' ';
      out << p.vertices[i];
    }
    out << '\n';
  }
  return out.str();
}

Decomposition Decomposition::parse(int n, const std::string& text) {
  std::istringstream in(text);
  std::vector<Part> parts;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Part p;
    int v = 0;
    while (ls >> v) p.vertices.push_back(v);
    if (!ls.eof()) throw InputError("malformed decomposition line: " + line);
    if (!p.vertices.empty()) parts.push_back(std::move(p));
  }
  return Decomposition(n, std::move(parts));
}

SpreadFunction SpreadFunction::affine(long long paths, long long offset) {
  std::ostringstream form;
  form << paths << "*(2r+1)";
  if (offset) form << (offset > 0 ? "+" : "") << offset;
  SpreadFunction f;
  f.form_ = form.str();
  f.f_ = [paths, offset](int r) { return paths * (2LL * r + 1) + offset; };
  return f;
}

SpreadFunction SpreadFunction::custom(std::string form, std::function<long long(int)> fn) {
  SpreadFunction f;
  f.form_ = std::move(form);
  f.f_ = std::move(fn);
  return f;
}

void for_each_residual_component(
    const Graph& g, const Decomposition& d,
    const std::function<void(int, const std::vector<Vertex>&, const std::vector<int>&)>& visit) {
  if (d.vertex_count() != g.order()) throw InputError("decomposition does not match graph order");
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::uint8_t> alive(n, 1);
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<Vertex>> members;

  auto emit = [&](int stage, std::vector<Vertex> pool) {
    // Splits `pool` (alive vertices) into components and reports each.
    std::vector<std::uint8_t> in_pool(n, 0);
    for (Vertex v : pool) in_pool[v] = 1;
    std::sort(pool.begin(), pool.end());
    std::vector<std::uint8_t> seen(n, 0);
    std::set<int> attached;
    for (Vertex s : pool) {
      if (seen[s]) continue;
      std::vector<Vertex> comp{s};
      seen[s] = 1;
      attached.clear();
      for (std::size_t head = 0; head < comp.size(); ++head) {
        for (Vertex y : g.neighbors(comp[head])) {
          if (!alive[y]) {
            attached.insert(d.part_of(y));
          } else if (in_pool[y] && !seen[y]) {
            seen[y] = 1;
            comp.push_back(y);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      const int id = static_cast<int>(members.size());
      for (Vertex v : comp) comp_of[v] = id;
      visit(stage, comp, std::vector<int>(attached.begin(), attached.end()));
      members.push_back(std::move(comp));
    }
  };

  std::vector<Vertex> everything(n);
  for (std::size_t v = 0; v < n; ++v) everything[v] = static_cast<Vertex>(v);
  emit(0, everything);
  for (int stage = 1; stage < d.size(); ++stage) {
    const auto& removed = d.part(stage - 1).vertices;
    std::set<int> affected;
    for (Vertex v : removed) affected.insert(comp_of[v]);
    for (Vertex v : removed) alive[v] = 0;
    std::vector<Vertex> pool;
    for (int id : affected) {
      for (Vertex v : members[id]) {
        if (alive[v]) pool.push_back(v);
      }
      members[id].clear();
      members[id].shrink_to_fit();
    }
    if (!pool.empty()) emit(stage, std::move(pool));
  }
}

WidthReport width(const Graph& g, const Decomposition& d) {
  WidthReport report;
  for_each_residual_component(g, d, [&](int stage, const std::vector<Vertex>& comp, const std::vector<int>& attached) {
    if (report.stage < 0 || static_cast<int>(attached.size()) > report.width) {
      report.width = static_cast<int>(attached.size());
      report.stage = stage;
      report.component = comp;
      report.attached = attached;
    }
  });
  return report;
}

FlatnessReport check_f_flat(const Graph& g, const Decomposition& d, const SpreadFunction& f, int r_max) {
  if (d.vertex_count() != g.order()) throw InputError("decomposition does not match graph order");
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::uint8_t> alive(n, 1);
  std::vector<std::vector<int>> hist(n);
  std::vector<Vertex> touched;
  for (int i = 0; i < d.size(); ++i) {
    const auto& part = d.part(i).vertices;
    const auto size = static_cast<long long>(part.size());
    // f is non-decreasing, so only radii with f(r) < |H_i| can be violated.
    int limit = -1;
    for (int r = 0; r <= r_max && f(r) < size; ++r) limit = r;
    if (limit >= 0) {
      GraphView residual(g, alive);
      for (Vertex h : part) {
        auto dist = distances(residual, h, limit);
        for (Vertex v = 0; v < g.order(); ++v) {
          if (dist[v] < 0) continue;
          if (hist[v].empty()) {
            hist[v].assign(static_cast<std::size_t>(limit) + 1, 0);
            touched.push_back(v);
          }
          ++hist[v][dist[v]];
        }
      }
      for (Vertex v : touched) {
        long long running = 0;
        for (int r = 0; r <= limit; ++r) {
          running += hist[v][r];
          if (running > f(r)) return {false, i, v, r, running, f(r)};
        }
      }
      for (Vertex v : touched) hist[v].clear();
      touched.clear();
    }
    for (Vertex v : part) alive[v] = 0;
  }
  return {};
}

LinearOrder order_from_decomposition(const Decomposition& d, WithinPartRule rule) {
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(d.vertex_count()));
  for (const auto& p : d.parts()) {
    const bool path_order = rule == WithinPartRule::PathOrderElseAscending && p.paths.size() == 1 &&
                            p.paths.front().size() == p.vertices.size();
    if (path_order) {
      seq.insert(seq.end(), p.paths.front().begin(), p.paths.front().end());
    } else {
      auto sorted = p.vertices;
      std::sort(sorted.begin(), sorted.end());
      seq.insert(seq.end(), sorted.begin(), sorted.end());
    }
  }
  return LinearOrder(std::move(seq));
}

long long bound_spd(const SpreadFunction& f, int k, int r) { return static_cast<long long>(k + 1) * f(r); }

long long bound_spdwcol(const SpreadFunction& f, int k, int r) {
  return static_cast<long long>(binomial(r + k, k)) * f(r);
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

bool CertificateReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* CertificateReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::ordered_json CertificateReport::to_json() const {
  nlohmann::ordered_json out;
  out["passed"] = passed();
  auto& list = out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["status"] = to_string(c.status);
    item["detail"] = c.detail;
    list.push_back(std::move(item));
  }
  return out;
}

CertificateReport certify(const Graph& g, const Decomposition& d, const SpreadFunction& f, CertifyOptions options) {
  using json = nlohmann::ordered_json;
  CertificateReport report;
  auto add = [&](std::string name, bool ok, json detail) {
    report.checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  };
  auto skip = [&](std::string name, std::string why) {
    report.checks.push_back({std::move(name), CheckStatus::Skipped, json{{"reason", std::move(why)}}});
  };

  add("partition", d.vertex_count() == g.order(), json{{"parts", d.size()}, {"vertices", d.vertex_count()}});
  if (d.vertex_count() != g.order()) return report;

  std::vector<int> disconnected;
  for (int i = 0; i < d.size(); ++i) {
    if (!is_connected_set(g, d.part(i).vertices)) disconnected.push_back(i);
  }
  const bool connected = disconnected.empty();
  add("connected", connected, json{{"disconnected_parts", disconnected}});

  const auto w = width(g, d);
  {
    json detail{{"width", w.width}, {"stage", w.stage}, {"attached_parts", w.attached}, {"component_size", w.component.size()}};
    if (options.width_bound) detail["bound"] = *options.width_bound;
    add("width", !options.width_bound || w.width <= *options.width_bound, std::move(detail));
  }

  {
    auto flat = check_f_flat(g, d, f, options.r_max);
    json detail{{"spread", f.form()}, {"r_max", options.r_max}};
    if (!flat.ok) {
      detail["violation"] = json{{"part", flat.part}, {"vertex", flat.center}, {"r", flat.radius},
                                 {"count", flat.count}, {"allowed", flat.allowed}};
    }
    add("flatness", flat.ok, std::move(detail));
  }

  {
    bool any_paths = false;
    std::vector<int> bad;
    std::vector<std::uint8_t> alive(static_cast<std::size_t>(g.order()), 1);
    for (int i = 0; i < d.size(); ++i) {
      const auto& part = d.part(i);
      if (!part.paths.empty()) {
        any_paths = true;
        GraphView residual(g, alive);
        std::set<Vertex> covered;
        bool ok = true;
        for (const auto& p : part.paths) {
          if (!is_path(residual, p) || !is_isometric_path(residual, p)) {
            ok = false;
            break;
          }
          covered.insert(p.begin(), p.end());
        }
        ok = ok && covered == std::set<Vertex>(part.vertices.begin(), part.vertices.end());
        if (!ok) bad.push_back(i);
      }
      for (Vertex v : part.vertices) alive[v] = 0;
    }
    if (any_paths) {
      add("isometric_paths", bad.empty(), json{{"failing_parts", bad}});
    } else {
      skip("isometric_paths", "no path metadata");
    }
  }

  if (!connected) {
    skip("contraction_treewidth", "decomposition not connected");
  } else if (d.size() > options.contraction_limit) {
    skip("contraction_treewidth", "contracted graph exceeds exact tree-width limit");
  } else {
    const int tw = treewidth_exact(contract_parts(g, d.vertex_sets()), {options.contraction_limit});
    add("contraction_treewidth", tw <= w.width, json{{"treewidth", tw}, {"width", w.width}});
  }

  const auto order = order_from_decomposition(d);
  {
    json rows = json::array();
    bool ok = true;
    for (int r = options.r_min; r <= options.r_max; ++r) {
      const int cost = cost_of_order(g, order, r, Mode::Strong);
      const long long bound = bound_spd(f, w.width, r);
      ok = ok && cost <= bound;
      rows.push_back(json{{"r", r}, {"cost", cost}, {"bound", bound}});
    }
    add("strong_cost", ok, json{{"formula", "(k+1)*f(r)"}, {"rows", rows}});
  }
  if (!connected) {
    skip("weak_cost", "weak bound needs a connected decomposition");
  } else {
    json rows = json::array();
    bool ok = true;
    for (int r = options.r_min; r <= options.r_max; ++r) {
      const int cost = cost_of_order(g, order, r, Mode::Weak);
      const long long bound = bound_spdwcol(f, w.width, r);
      ok = ok && cost <= bound;
      rows.push_back(json{{"r", r}, {"cost", cost}, {"bound", bound}});
    }
    add("weak_cost", ok, json{{"formula", "C(r+k,k)*f(r)"}, {"rows", rows}});
  }
  return report;
}

}  // namespace gcn
