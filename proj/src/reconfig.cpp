#include "domtree/reconfig.hpp"

#include <algorithm>

#include "domtree/domination.hpp"
#include "domtree/error.hpp"

namespace domtree {

std::string PreconditionReport::describe() const {
  if (ok()) return "preconditions hold";
  std::string s;
  if (!parent_condition_ok)
    s += "supported vertex " + std::to_string(*parent_witness) +
         " has its parent in the set";
  if (!nesting_condition_ok) {
    if (!s.empty()) s += "; ";
    s += "supported vertex " + std::to_string(nesting_witness->first) +
         " descends from supported vertex " +
         std::to_string(nesting_witness->second);
  }
  return s;
}

PreconditionReport check_algterm_preconditions(const RootedTree& rt,
                                               const VertexSet& m0) {
  if (!is_dominating(rt.tree, m0))
    throw Error(ErrorKind::NotDominating, "set is not dominating");
  auto dec = decompose(rt.tree, m0);
  auto supported = dec.supported.ids();

  PreconditionReport rep;
  for (int s : supported) {
    int p = rt.parent[s];
    if (p != -1 && m0.contains(p)) {
      rep.parent_condition_ok = false;
      rep.parent_witness = s;
      break;
    }
  }
  for (int x : supported) {
    for (int y : supported) {
      if (x != y && is_descendant(rt, x, y)) {
        rep.nesting_condition_ok = false;
        rep.nesting_witness = {x, y};
        break;
      }
    }
    if (!rep.nesting_condition_ok) break;
  }
  return rep;
}

ReconfigTrace make_minimal(const RootedTree& rt, const VertexSet& m0,
                           int step_cap, bool force) {
  const Tree& t = rt.tree;
  auto pre = check_algterm_preconditions(rt, m0);  // throws if not dominating
  if (!pre.ok() && !force) throw PreconditionError(pre);
  if (step_cap < 0) step_cap = 2 * t.n;

  ReconfigTrace tr;
  tr.input = m0;
  tr.preconditions_ok = pre.ok();

  VertexSet m = m0;
  int iter = 0;
  for (;;) {
    if (!is_dominating(t, m)) break;  // force mode can go off the rails
    auto dec = decompose(t, m);
    if (dec.supported.empty()) {
      tr.terminated = true;
      break;
    }
    if (iter >= step_cap) {
      tr.step_cap_hit = true;
      break;
    }

    // Supported vertex of least depth, lowest id on ties.
    int pivot = -1;
    for (int s : dec.supported.ids())
      if (pivot == -1 || rt.depth[s] < rt.depth[pivot]) pivot = s;

    VertexSet removed(t.n);
    VertexSet in_set_neighbors(t.n);
    for (int w : t.adj[pivot]) {
      if (dec.a1.contains(w)) removed.insert(w);
      if (m.contains(w)) in_set_neighbors.insert(w);
    }
    if (tr.preconditions_ok && removed != in_set_neighbors)
      tr.swap_scope_mismatches.push_back(iter);

    VertexSet added(t.n);
    for (int a : removed.ids())
      for (int w : t.adj[a])
        if (dec.n1.contains(w)) added.insert(w);

    if (removed.empty() && added.empty()) break;  // no progress possible

    m = (m - removed) | added;
    tr.steps.push_back({iter, pivot, removed.ids(), added.ids(), m});
    ++iter;
  }
  tr.output = m;
  return tr;
}

namespace {

void append_shifted(ReconfigTrace& tr, const ReconfigTrace& inner) {
  int base = (int)tr.steps.size();
  for (const auto& st : inner.steps) {
    ReconfigStep shifted = st;
    shifted.index = base + st.index;
    tr.steps.push_back(std::move(shifted));
  }
  for (int i : inner.swap_scope_mismatches)
    tr.swap_scope_mismatches.push_back(base + i);
}

}  // namespace

ReconfigTrace reconfigure_a1(const Tree& t, const VertexSet& m, int v) {
  if (!is_minimal_dominating(t, m))
    throw Error(ErrorKind::NotMinimal, "set is not a minimal dominating set");
  auto dec = decompose(t, m);
  if (!dec.a1.contains(v))
    throw Error(ErrorKind::NotInA1,
                "vertex " + std::to_string(v) + " is not in a1 of the set");

  VertexSet added(t.n);
  for (int w : t.adj[v])
    if (dec.n1.contains(w)) added.insert(w);
  VertexSet m0 = m;
  m0.erase(v);
  m0 |= added;

  ReconfigTrace tr;
  tr.input = m;
  tr.steps.push_back({0, v, {v}, added.ids(), m0});

  auto inner = make_minimal(root_at(t, v), m0);
  append_shifted(tr, inner);
  tr.output = inner.output;
  tr.terminated = inner.terminated;
  tr.preconditions_ok = inner.preconditions_ok;
  tr.step_cap_hit = inner.step_cap_hit;
  return tr;
}

A2Reconfig reconfigure_a2_subset(const Tree& t, const VertexSet& m,
                                 const VertexSet& x) {
  if (!is_minimal_dominating(t, m))
    throw Error(ErrorKind::NotMinimal, "set is not a minimal dominating set");
  auto dec = decompose(t, m);
  if (x.empty() || !x.is_subset_of(dec.n2))
    throw Error(ErrorKind::XNotInN2,
                "X must be a nonempty subset of n2 of the set");
  for (int u : x.ids())
    for (int w : t.adj[u])
      if (x.contains(w))
        throw Error(ErrorKind::XNotIndependent,
                    "X contains edge (" + std::to_string(u) + "," +
                        std::to_string(w) + ")");

  VertexSet removed_a(t.n), removed_a2(t.n);
  for (int u : x.ids())
    for (int w : t.adj[u]) {
      if (dec.a.contains(w)) removed_a.insert(w);
      if (dec.a2.contains(w)) removed_a2.insert(w);
    }

  // X with its a2 neighborhood must induce a connected subtree.
  {
    VertexSet zone = x | removed_a2;
    auto members = zone.ids();
    std::vector<int> stack{members.front()};
    VertexSet seen(t.n);
    seen.insert(members.front());
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : t.adj[u])
        if (zone.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != (int)members.size())
      throw Error(ErrorKind::NotConnectedSubtree,
                  "X with its a2 neighborhood does not induce a connected "
                  "subtree");
  }

  VertexSet added_n(t.n);
  for (int a : removed_a.ids())
    for (int w : t.adj[a])
      if (dec.n1.contains(w)) added_n.insert(w);

  A2Reconfig out;
  out.removed_a = removed_a.ids();
  out.removed_a2 = removed_a2.ids();
  out.added_n = added_n.ids();

  VertexSet current = ((m | x) - removed_a) | added_n;
  out.trace.input = m;
  out.trace.steps.push_back(
      {0, std::nullopt, removed_a.ids(), (x | added_n).ids(), current});

  bool all_terminated = true;
  for (int anchor : x.ids()) {
    auto rooted = root_at(t, anchor);
    // Drop each a2 vertex together with everything below it.
    std::vector<char> keep(t.n, 1);
    for (int a : removed_a2.ids()) {
      if (!keep[a]) continue;
      std::vector<int> stack{a};
      keep[a] = 0;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int c : rooted.children[u])
          if (keep[c]) {
            keep[c] = 0;
            stack.push_back(c);
          }
      }
    }
    SubtreeRun run;
    run.anchor = anchor;
    run.subtree = induced_component(t, keep, anchor);

    VertexSet local_m(run.subtree.tree.n);
    for (int local = 0; local < run.subtree.tree.n; ++local)
      if (current.contains(run.subtree.to_global[local])) local_m.insert(local);

    run.local_trace = make_minimal(
        root_at(run.subtree.tree, run.subtree.to_local[anchor]), local_m);
    all_terminated = all_terminated && run.local_trace.terminated;

    // Splice each local swap back into the global set.
    for (const auto& st : run.local_trace.steps) {
      ReconfigStep global_step;
      global_step.index = (int)out.trace.steps.size();
      global_step.pivot = run.subtree.to_global[*st.pivot];
      for (int v : st.removed)
        global_step.removed.push_back(run.subtree.to_global[v]);
      for (int v : st.added)
        global_step.added.push_back(run.subtree.to_global[v]);
      std::sort(global_step.removed.begin(), global_step.removed.end());
      std::sort(global_step.added.begin(), global_step.added.end());
      for (int v : global_step.removed) current.erase(v);
      for (int v : global_step.added) current.insert(v);
      global_step.result = current;
      out.trace.steps.push_back(std::move(global_step));
    }
    for (int i : run.local_trace.swap_scope_mismatches)
      out.trace.swap_scope_mismatches.push_back(
          (int)out.trace.steps.size() - (int)run.local_trace.steps.size() + i);
    out.runs.push_back(std::move(run));
  }

  out.trace.output = current;
  out.trace.terminated = all_terminated;
  return out;
}

std::optional<VertexSet> find_larger_minimal(const Tree& t, const VertexSet& m,
                                             int guard) {
  if (!is_minimal_dominating(t, m))
    throw Error(ErrorKind::NotMinimal, "set is not a minimal dominating set");
  auto dec = decompose(t, m);

  if (dec.a1.size() < dec.n1.size()) {
    // Pigeonhole: some a1 vertex sees at least two n1 vertices; swapping
    // there grows the set strictly.
    for (int v : dec.a1.ids()) {
      int n1_neighbors = 0;
      for (int w : t.adj[v])
        if (dec.n1.contains(w)) ++n1_neighbors;
      if (n1_neighbors >= 2) return reconfigure_a1(t, m, v).output;
    }
    throw Error(ErrorKind::BadSpec, "pigeonhole vertex missing");  // unreachable
  }

  auto n2 = dec.n2.ids();
  if ((int)n2.size() > guard)
    throw Error(ErrorKind::GuardExceeded,
                "n2 has " + std::to_string(n2.size()) +
                    " vertices; subset search guard is " +
                    std::to_string(guard));
  // Smallest violating X first; sizes ascend, combinations advance in
  // lexicographic order over ascending ids.
  for (int k = 1; k <= (int)n2.size(); ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      VertexSet xs(t.n);
      for (int i : pick) xs.insert(n2[i]);
      VertexSet hit(t.n);
      for (int u : xs.ids())
        for (int w : t.adj[u])
          if (dec.a2.contains(w)) hit.insert(w);
      if (hit.size() < xs.size()) {
        bool independent = true;
        for (int u : xs.ids())
          for (int w : t.adj[u])
            if (xs.contains(w)) independent = false;
        if (independent) {
          try {
            return reconfigure_a2_subset(t, m, xs).trace.output;
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotConnectedSubtree) throw;
            // A smaller violating subset inside this one will qualify later.
          }
        }
      }
      // next combination
      int i = k - 1;
      while (i >= 0 && pick[i] == (int)n2.size() - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::vector<std::string> check_trace_invariants(const RootedTree& rt,
                                                const ReconfigTrace& trace) {
  const Tree& t = rt.tree;
  std::vector<std::string> violations;
  auto flag = [&](int step, const std::string& what) {
    violations.push_back("step " + std::to_string(step) + ": " + what);
  };

  VertexSet prev = trace.input;
  int last_pivot_depth = -1;
  for (const auto& st : trace.steps) {
    VertexSet expected = prev;
    for (int v : st.removed) expected.erase(v);
    for (int v : st.added) expected.insert(v);
    if (expected != st.result) flag(st.index, "result != (prev - A) | N");
    if (!is_dominating(t, st.result))
      flag(st.index, "intermediate set is not dominating");
    if (st.result.size() < prev.size()) flag(st.index, "size decreased");

    bool added_are_children_of_removed = !st.added.empty();
    for (int v : st.added) {
      int p = rt.parent[v];
      added_are_children_of_removed &=
          (p != -1 && std::find(st.removed.begin(), st.removed.end(), p) !=
                          st.removed.end());
    }
    if (added_are_children_of_removed && is_dominating(t, st.result)) {
      // Added vertices must be isolated within the new set...
      for (int v : st.added)
        for (int w : t.adj[v])
          if (st.result.contains(w))
            flag(st.index, "added vertex " + std::to_string(v) +
                               " has neighbor " + std::to_string(w) +
                               " in the new set");
      // ...and anything that lost criticality sits exactly two levels below
      // an added vertex, with its parent outside the new set.
      auto before = critical_set(t, prev);
      auto after_crit = critical_set(t, st.result);
      for (int v : before.ids()) {
        if (!st.result.contains(v) || after_crit.contains(v)) continue;
        bool grandchild = false;
        for (int nv : st.added)
          if (rt.depth[v] == rt.depth[nv] + 2 && is_descendant(rt, v, nv))
            grandchild = true;
        if (!grandchild)
          flag(st.index, "newly supported " + std::to_string(v) +
                             " is not a grandchild of an added vertex");
        int p = rt.parent[v];
        if (p != -1 && st.result.contains(p))
          flag(st.index, "newly supported " + std::to_string(v) +
                             " keeps its parent in the set");
      }
    }

    if (st.pivot) {
      int d = rt.depth[*st.pivot];
      if (d < last_pivot_depth)
        flag(st.index, "pivot depth decreased from " +
                           std::to_string(last_pivot_depth) + " to " +
                           std::to_string(d));
      last_pivot_depth = d;
    }
    prev = st.result;
  }
  if (prev != trace.output) violations.push_back("output != last step result");
  if (trace.terminated && !is_minimal_dominating(t, trace.output))
    violations.push_back("terminated trace output is not minimal");
  return violations;
}

}  // namespace domtree
