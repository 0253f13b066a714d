#include "domtree/tree.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "domtree/error.hpp"
#include "domtree/rng.hpp"

namespace domtree {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::WrongEdgeCount: return "WrongEdgeCount";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::NotDominating: return "NotDominating";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::NotInA1: return "NotInA1";
    case ErrorKind::XNotInN2: return "XNotInN2";
    case ErrorKind::NotConnectedSubtree: return "NotConnectedSubtree";
    case ErrorKind::XNotIndependent: return "XNotIndependent";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::EngineMismatch: return "EngineMismatch";
    case ErrorKind::BadSpec: return "BadSpec";
  }
  return "Error";
}

Tree tree_from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "need n >= 1");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorKind::OutOfRange, "edge endpoint outside 0.." +
                                             std::to_string(n - 1));
    if (u == v)
      throw Error(ErrorKind::SelfLoop, "self loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw Error(ErrorKind::DuplicateEdge,
                  "duplicate edge (" + std::to_string(edges[i].first) + "," +
                      std::to_string(edges[i].second) + ")");
  if ((int)edges.size() != n - 1)
    throw Error(ErrorKind::WrongEdgeCount,
                std::to_string(edges.size()) + " edges on " +
                    std::to_string(n) + " vertices (need n-1)");

  Tree t;
  t.n = n;
  t.edges = std::move(edges);
  t.adj.assign(n, {});
  for (auto [u, v] : t.edges) {
    t.adj[u].push_back(v);
    t.adj[v].push_back(u);
  }
  for (auto& a : t.adj) std::sort(a.begin(), a.end());

  // n-1 edges and no duplicates: connected <=> acyclic.
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : t.adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  if (reached != n)
    throw Error(ErrorKind::Disconnected,
                "only " + std::to_string(reached) + " of " +
                    std::to_string(n) + " vertices reachable");
  return t;
}

Tree path_tree(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return tree_from_edges(n, std::move(edges));
}

Tree star_tree(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return tree_from_edges(n, std::move(edges));
}

Tree tree_from_prufer(const std::vector<int>& seq) {
  int n = (int)seq.size() + 2;
  for (int s : seq)
    if (s < 0 || s >= n)
      throw Error(ErrorKind::OutOfRange, "code entry outside 0..n-1");

  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];

  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return tree_from_edges(n, std::move(edges));
}

std::vector<int> prufer_code(const Tree& t) {
  int n = t.n;
  if (n < 2) throw Error(ErrorKind::OutOfRange, "code needs n >= 2");
  std::vector<int> degree(n), parent(n, -1);
  for (int v = 0; v < n; ++v) degree[v] = t.degree(v);

  // Orient toward n-1 so the "neighbor of the removed leaf" lookup is O(1).
  {
    std::deque<int> queue{n - 1};
    std::vector<char> seen(n, 0);
    seen[n - 1] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : t.adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = u;
          queue.push_back(w);
        }
    }
  }

  std::vector<int> code;
  code.reserve(n - 2);
  int ptr = 0;
  while (degree[ptr] != 1 || ptr == n - 1) ++ptr;
  int leaf = ptr;
  for (int step = 0; step < n - 2; ++step) {
    int next = parent[leaf];
    code.push_back(next);
    if (--degree[next] == 1 && next < ptr && next != n - 1) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1 || ptr == n - 1) ++ptr;
      leaf = ptr;
    }
  }
  return code;
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "random_tree needs n >= 2");
  Rng rng(seed);
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = (int)rng.below((std::uint64_t)n);
  return tree_from_prufer(seq);
}

int LabeledTree::id_of(const std::string& name) const {
  for (const auto& [label, id] : labels)
    if (label == name) return id;
  throw Error(ErrorKind::OutOfRange, "no vertex labeled " + name);
}

LabeledTree build_t_k(int k) {
  if (k < 1) throw Error(ErrorKind::OutOfRange, "build_t_k needs k >= 1");
  // Ids layered by depth: root, hubs, then the x/y/z rows, so BFS order from
  // the root coincides with the id order.
  auto x_id = [&](int i, int j) { return 3 + (i - 1) * k + j; };
  auto y_id = [&](int i, int j) { return 3 + 3 * k + (i - 1) * k + j; };
  auto z_id = [&](int i, int j) { return 3 + 6 * k + (i - 1) * k + j; };

  std::vector<std::pair<int, int>> edges;
  LabeledTree out;
  out.labels.emplace_back("v0", 0);
  for (int i = 1; i <= 3; ++i) {
    edges.emplace_back(0, i);
    out.labels.emplace_back("v" + std::to_string(i), i);
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= k; ++j) {
      edges.emplace_back(i, x_id(i, j));
      edges.emplace_back(x_id(i, j), y_id(i, j));
      edges.emplace_back(y_id(i, j), z_id(i, j));
      std::string suffix = std::to_string(i) + "_" + std::to_string(j);
      out.labels.emplace_back("x" + suffix, x_id(i, j));
      out.labels.emplace_back("y" + suffix, y_id(i, j));
      out.labels.emplace_back("z" + suffix, z_id(i, j));
    }
  out.tree = tree_from_edges(9 * k + 4, std::move(edges));
  return out;
}

RootedTree root_at(const Tree& t, int root) {
  if (root < 0 || root >= t.n)
    throw Error(ErrorKind::OutOfRange, "root " + std::to_string(root));
  RootedTree rt;
  rt.tree = t;
  rt.root = root;
  rt.parent.assign(t.n, -1);
  rt.depth.assign(t.n, 0);
  rt.children.assign(t.n, {});
  rt.order.reserve(t.n);

  std::deque<int> queue{root};
  std::vector<char> seen(t.n, 0);
  seen[root] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    rt.order.push_back(u);
    for (int w : t.adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        rt.parent[w] = u;
        rt.depth[w] = rt.depth[u] + 1;
        rt.children[u].push_back(w);
        queue.push_back(w);
      }
  }
  return rt;
}

bool is_descendant(const RootedTree& rt, int x, int y) {
  if (x < 0 || x >= rt.n() || y < 0 || y >= rt.n())
    throw Error(ErrorKind::OutOfRange, "vertex outside tree");
  if (x == y) return false;
  if (rt.depth[y] >= rt.depth[x]) return false;
  int cur = rt.parent[x];
  while (cur != -1 && rt.depth[cur] >= rt.depth[y]) {
    if (cur == y) return true;
    cur = rt.parent[cur];
  }
  return false;
}

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

Tree read_edge_list(std::istream& in) {
  std::string line;
  long n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream ss(body);
    if (n < 0) {
      if (!(ss >> n) || n < 1)
        throw Error(ErrorKind::BadSpec, "expected vertex count, got: " + body);
      continue;
    }
    int u, v;
    if (!(ss >> u >> v))
      throw Error(ErrorKind::BadSpec, "expected edge 'u v', got: " + body);
    edges.emplace_back(u, v);
  }
  if (n < 0) throw Error(ErrorKind::BadSpec, "empty edge-list input");
  return tree_from_edges((int)n, std::move(edges));
}

Tree read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadSpec, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Tree& t,
                     const std::vector<std::pair<std::string, int>>& labels) {
  for (const auto& [name, id] : labels)
    out << "# label " << name << " " << id << "\n";
  out << t.n << "\n";
  for (auto [u, v] : t.edges) out << u << " " << v << "\n";
}

VertexSet read_vertex_set(std::istream& in, int capacity) {
  VertexSet s(capacity);
  std::string line;
  while (std::getline(in, line)) {
    std::string body = strip_comment(line);
    for (char& c : body)
      if (c == ',') c = ' ';
    std::istringstream ss(body);
    int v;
    while (ss >> v) s.insert(v);
  }
  return s;
}

VertexSet read_vertex_set_file(const std::string& path, int capacity) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadSpec, "cannot open " + path);
  return read_vertex_set(in, capacity);
}

VertexSet parse_vertex_set(const std::string& text, int capacity) {
  std::istringstream in(text);
  return read_vertex_set(in, capacity);
}

InducedSubtree induced_component(const Tree& t, const std::vector<char>& keep,
                                 int anchor) {
  InducedSubtree out;
  out.to_local.assign(t.n, -1);
  std::deque<int> queue{anchor};
  out.to_local[anchor] = 0;
  out.to_global.push_back(anchor);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : t.adj[u])
      if (keep[w] && out.to_local[w] < 0) {
        out.to_local[w] = (int)out.to_global.size();
        out.to_global.push_back(w);
        queue.push_back(w);
      }
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : t.edges)
    if (out.to_local[u] >= 0 && out.to_local[v] >= 0)
      edges.emplace_back(out.to_local[u], out.to_local[v]);
  out.tree = tree_from_edges((int)out.to_global.size(), std::move(edges));
  return out;
}

}  // namespace domtree
