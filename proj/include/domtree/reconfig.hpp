#ifndef DOMTREE_RECONFIG_HPP
#define DOMTREE_RECONFIG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domtree/critical.hpp"
#include "domtree/tree.hpp"
#include "domtree/vertex_set.hpp"

namespace domtree {

// One swap round: result = (previous - removed) | added.
struct ReconfigStep {
  int index = 0;
  std::optional<int> pivot;  // chosen supported vertex; absent on bulk swaps
  std::vector<int> removed;
  std::vector<int> added;
  VertexSet result;
};

struct ReconfigTrace {
  VertexSet input;
  VertexSet output;
  bool terminated = false;     // loop exited on a minimal dominating set
  bool step_cap_hit = false;   // only reachable in force mode
  bool preconditions_ok = true;
  std::vector<ReconfigStep> steps;
  // Iterations where the a1-restricted removal set differed from the full
  // in-set neighborhood of the pivot. Expected empty whenever the entry
  // preconditions held; recorded rather than assumed.
  std::vector<int> swap_scope_mismatches;
};

// Entry conditions for make_minimal:
//  (a) no supported vertex has its parent in the set,
//  (b) no supported vertex is a (strict) descendant of another one.
struct PreconditionReport {
  bool parent_condition_ok = true;
  std::optional<int> parent_witness;  // supported vertex whose parent is in m0
  bool nesting_condition_ok = true;
  std::optional<std::pair<int, int>> nesting_witness;  // (descendant, ancestor)
  bool ok() const { return parent_condition_ok && nesting_condition_ok; }
  std::string describe() const;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(PreconditionReport rep)
      : Error(ErrorKind::PreconditionViolated, rep.describe()),
        report_(std::move(rep)) {}
  const PreconditionReport& report() const { return report_; }

 private:
  PreconditionReport report_;
};

PreconditionReport check_algterm_preconditions(const RootedTree& rt,
                                               const VertexSet& m0);

// Iterated swap loop: while the set has a supported vertex, pick the one of
// least depth (ties to the lowest id), remove its a1 neighbors, add their n1
// neighbors. With valid entry preconditions this terminates on a minimal
// dominating set at least as large as m0. step_cap < 0 means 2n. force=true
// runs despite failed preconditions; such traces may hit the cap or stop
// early without minimality.
ReconfigTrace make_minimal(const RootedTree& rt, const VertexSet& m0,
                           int step_cap = -1, bool force = false);

// Swap a1-vertex v for its n1 neighborhood, then minimalize with the tree
// rooted at v. Output is minimal with |output| >= |m|; strict growth when v
// has two or more n1 neighbors.
ReconfigTrace reconfigure_a1(const Tree& t, const VertexSet& m, int v);

struct SubtreeRun {
  int anchor = -1;           // global id the subtree was rooted at
  InducedSubtree subtree;    // retained component, local ids
  ReconfigTrace local_trace; // minimalization inside the subtree (local ids)
};

struct A2Reconfig {
  std::vector<int> removed_a;   // N(X) & a(M)
  std::vector<int> removed_a2;  // N(X) & a2(M)
  std::vector<int> added_n;     // N(A) & N1(M)
  std::vector<SubtreeRun> runs;
  ReconfigTrace trace;          // global steps: bulk swap, then spliced runs
};

// Bulk swap for a subset X of n2(m): remove A = N(X) & a(M), add X and
// N(A) & n1(M), then minimalize each retained component rooted at its X
// vertex and splice the results back. Preconditions: m minimal, X nonempty
// subset of n2(m), X independent, X together with A2 = N(X) & a2(M) inducing
// a connected subtree. Guarantees |output| >= |m| - |A2| + |X|.
A2Reconfig reconfigure_a2_subset(const Tree& t, const VertexSet& m,
                                 const VertexSet& x);

// Growth search combining both routes: if |a1(m)| < |n1(m)|, swap at an a1
// vertex with two or more n1 neighbors; otherwise hunt (smallest first) for
// X in n2(m) with |X| > |N(X) & a2(m)| and apply the subset swap. Returns
// absent when neither route applies (then |m| = Gamma).
std::optional<VertexSet> find_larger_minimal(const Tree& t, const VertexSet& m,
                                             int guard = kDefaultGuard);

// Re-derives every step of a single-rooting trace and lists violated step
// properties (set algebra, domination of intermediates, non-decreasing size,
// isolation of added vertices, grandchild rule for newly supported vertices,
// monotone pivot depth, terminal minimality). Empty result = clean trace.
std::vector<std::string> check_trace_invariants(const RootedTree& rt,
                                                const ReconfigTrace& trace);

}  // namespace domtree

#endif
