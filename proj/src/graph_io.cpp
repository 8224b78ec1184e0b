#include "gcn/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "gcn/error.hpp"

namespace gcn {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.order());
  append_size(out, n);
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view line) {
  std::string s = trim(line);
  if (s.rfind(kHeader, 0) == 0) s.erase(0, kHeader.size());
  if (s.empty()) throw InputError("empty graph6 string");
  for (char c : s) {
    if (c < 63 || c > 126) throw InputError("invalid graph6 character");
  }
  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take6 = [&](int count) {
    std::uint64_t v = 0;
    for (int k = 0; k < count; ++k) {
      if (pos >= s.size()) throw InputError("truncated graph6 size field");
      v = (v << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
    }
    return v;
  };
  if (s[0] != 126) {
    n = take6(1);
  } else if (s.size() > 1 && s[1] == 126) {
    pos = 2;
    n = take6(6);
  } else {
    pos = 1;
    n = take6(3);
  }
  if (n > 100000000) throw InputError("graph6 vertex count too large");
  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (pairs + 5) / 6;
  if (s.size() - pos != need) throw InputError("graph6 edge field has wrong length");

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; static_cast<std::uint64_t>(j) < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (pairs % 6 != 0) {
    int last = s.back() - 63;
    int padding = static_cast<int>(6 - pairs % 6);
    if ((last & ((1 << padding) - 1)) != 0) throw InputError("graph6 padding bits not zero");
  }
  return Graph(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (a == "n") {
      if (!(ls >> declared) || declared < 0 || !edges.empty()) {
        throw InputError("line " + std::to_string(lineno) + ": bad vertex-count line");
      }
      continue;
    }
    if (!(ls >> b) || (ls >> extra)) throw InputError("line " + std::to_string(lineno) + ": expected 'u v'");
    int u = 0, v = 0;
    try {
      std::size_t ua = 0, ub = 0;
      u = std::stoi(a, &ua);
      v = std::stoi(b, &ub);
      if (ua != a.size() || ub != b.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("line " + std::to_string(lineno) + ": non-integer vertex id");
    }
    if (u < 0 || v < 0) throw InputError("line " + std::to_string(lineno) + ": negative vertex id");
    max_id = std::max({max_id, u, v});
    edges.emplace_back(u, v);
  }
  int n = declared >= 0 ? declared : max_id + 1;
  if (max_id >= n) throw InputError("edge endpoint exceeds declared vertex count");
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::string first;
  {
    std::istringstream ls(text);
    while (std::getline(ls, first) && trim(first).empty()) {
    }
  }
  first = trim(first);
  bool looks_graph6 = !first.empty() && first.find(' ') == std::string::npos && first.find('\t') == std::string::npos &&
                      std::all_of(first.begin(), first.end(), [](char c) { return c >= 63 && c <= 126; });
  if (first.rfind(kHeader, 0) == 0) looks_graph6 = true;
  if (looks_graph6) return from_graph6(first);
  std::istringstream ls(text);
  return read_edge_list(ls);
}

}  // namespace gcn
