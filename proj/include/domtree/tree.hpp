#ifndef DOMTREE_TREE_HPP
#define DOMTREE_TREE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "domtree/vertex_set.hpp"

namespace domtree {

// Immutable tree on vertices 0..n-1. Construct through tree_from_edges (or a
// generator), which validates the tree invariants.
struct Tree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted
  std::vector<std::vector<int>> adj;       // ascending neighbor lists

  int degree(int v) const { return (int)adj[v].size(); }
};

// Validates: endpoints in range, no self loops, no duplicate edges, exactly
// n-1 edges, connected.
Tree tree_from_edges(int n, std::vector<std::pair<int, int>> edges);

Tree path_tree(int n);
Tree star_tree(int n);  // center 0

// Unique labeled tree with the given Prüfer code (length n-2, entries in
// 0..n-1). n = seq.size() + 2.
Tree tree_from_prufer(const std::vector<int>& seq);
// Inverse of tree_from_prufer; requires n >= 2.
std::vector<int> prufer_code(const Tree& t);

// Decodes a uniformly random Prüfer sequence drawn from Rng(seed). n >= 2.
Tree random_tree(int n, std::uint64_t seed);

struct LabeledTree {
  Tree tree;
  std::vector<std::pair<std::string, int>> labels;  // name -> vertex id
  int id_of(const std::string& name) const;
};

// Spider with root adjacent to three hubs, each hub carrying k pendant
// 3-paths. 9k+4 vertices, ids in BFS order from the root. Labels follow the
// scheme v0..v3, x{i}_{j}, y{i}_{j}, z{i}_{j}.
LabeledTree build_t_k(int k);

struct RootedTree {
  Tree tree;
  int root = 0;
  std::vector<int> parent;  // -1 at root
  std::vector<int> depth;
  std::vector<std::vector<int>> children;  // ascending
  std::vector<int> order;                  // BFS visitation sequence

  int n() const { return tree.n; }
};

// BFS tables with ascending-id tie-breaking; deterministic.
RootedTree root_at(const Tree& t, int root);

// True iff y lies strictly on the path from x to the root (x itself excluded).
bool is_descendant(const RootedTree& rt, int x, int y);

// Edge-list text format: first significant line is n, then one "u v" per
// line; '#' starts a comment, blank lines are skipped.
Tree read_edge_list(std::istream& in);
Tree read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Tree& t,
                     const std::vector<std::pair<std::string, int>>& labels = {});

// Vertex-set text: ids separated by whitespace or commas, '#' comments.
VertexSet read_vertex_set(std::istream& in, int capacity);
VertexSet read_vertex_set_file(const std::string& path, int capacity);
VertexSet parse_vertex_set(const std::string& text, int capacity);

// Induced subgraph plumbing for the reconfiguration algorithms.
struct InducedSubtree {
  Tree tree;                  // local ids 0..m-1
  std::vector<int> to_global;  // local -> global
  std::vector<int> to_local;   // global -> local, -1 if absent
};

// Component of 'anchor' in the subgraph induced by {v : keep[v]}; must form a
// tree (it always does for an induced connected subgraph of a tree).
InducedSubtree induced_component(const Tree& t, const std::vector<char>& keep,
                                 int anchor);

}  // namespace domtree

#endif
