#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gcn/graph.hpp"
#include "gcn/linear_order.hpp"

namespace gcn {

/// One part H_i of a decomposition. `paths` optionally lists constituent
/// paths (isometric in the residual graph at the time the part was placed);
/// for a single-path part the first path also fixes the within-part order.
struct Part {
  std::vector<Vertex> vertices;
  std::vector<Path> paths;
};

/// Ordered sequence of non-empty parts partitioning V(G).
class Decomposition {
 public:
  Decomposition() = default;
  /// Throws InputError unless the parts are non-empty and partition 0..n-1.
  Decomposition(int n, std::vector<Part> parts);

  int vertex_count() const { return static_cast<int>(part_of_.size()); }
  int size() const { return static_cast<int>(parts_.size()); }
  const Part& part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<Part>& parts() const { return parts_; }
  int part_of(Vertex v) const { return part_of_[static_cast<std::size_t>(v)]; }
  std::vector<std::vector<Vertex>> vertex_sets() const;

  /// One part per line, space-separated vertex ids, in sequence order.
  std::string to_text() const;
  static Decomposition parse(int n, const std::string& text);

 private:
  std::vector<Part> parts_;
  std::vector<int> part_of_;
};

/// Spread function f: N -> N carried with a printable closed form.
class SpreadFunction {
 public:
  /// f(r) = paths * (2r + 1) + offset.
  static SpreadFunction affine(long long paths, long long offset = 0);
  static SpreadFunction custom(std::string form, std::function<long long(int)> f);

  long long operator()(int r) const { return f_(r); }
  const std::string& form() const { return form_; }

 private:
  std::string form_;
  std::function<long long(int)> f_;
};

struct WidthReport {
  int width = 0;
  /// Witness: the stage (number of parts removed) at which the component was
  /// created, the component itself, and the earlier parts attached to it.
  int stage = -1;
  std::vector<Vertex> component;
  std::vector<int> attached;
};

/// Maximum separating number over all residual components. Each component is
/// evaluated once, at the stage where it first appears.
WidthReport width(const Graph& g, const Decomposition& d);

/// Invokes `visit(stage, component, attached)` for every residual component
/// at the stage it first appears (the machinery behind `width`).
void for_each_residual_component(
    const Graph& g, const Decomposition& d,
    const std::function<void(int, const std::vector<Vertex>&, const std::vector<int>&)>& visit);

struct FlatnessReport {
  bool ok = true;
  int part = -1;  // witness of the first violation
  Vertex center = -1;
  int radius = -1;
  long long count = 0;
  long long allowed = 0;
};

/// For every part i, residual vertex v and r <= r_max checks
/// |N_r[v] ∩ H_i| <= f(r) in G minus the earlier parts.
FlatnessReport check_f_flat(const Graph& g, const Decomposition& d, const SpreadFunction& f, int r_max);

enum class WithinPartRule {
  PathOrderElseAscending,  // single-path parts follow their path, others ascending id
  Ascending,
};

/// Linear order placing earlier parts first.
LinearOrder order_from_decomposition(const Decomposition& d, WithinPartRule rule = WithinPartRule::PathOrderElseAscending);

/// (k + 1) * f(r).
long long bound_spd(const SpreadFunction& f, int k, int r);
/// C(r + k, k) * f(r).
long long bound_spdwcol(const SpreadFunction& f, int k, int r);

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  nlohmann::ordered_json detail;
};

struct CertificateReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::ordered_json to_json() const;
};

struct CertifyOptions {
  int r_min = 1;
  int r_max = 5;
  /// Width bound the decomposition should meet; unset means report only.
  std::optional<int> width_bound;
  /// Largest contracted graph handed to the exact tree-width check.
  int contraction_limit = 14;
};

/// Bundles partition validity, connectivity, width, flatness, path isometry,
/// the contraction tree-width check and measured costs of the derived order
/// against (k+1) f(r) and C(r+k, k) f(r).
CertificateReport certify(const Graph& g, const Decomposition& d, const SpreadFunction& f, CertifyOptions options = {});

const char* to_string(CheckStatus s);

}  // namespace gcn
