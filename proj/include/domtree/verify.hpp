#ifndef DOMTREE_VERIFY_HPP
#define DOMTREE_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "domtree/analysis.hpp"
#include "domtree/tree.hpp"

// Batch verification drivers: run a per-tree check over a tree scope
// (exhaustive over all labeled trees up to n, seeded random samples, or a
// single file) and collect violations. Violating trees are identified by
// their Prüfer code so a finding reproduces from the report alone.
namespace domtree::verify {

struct Scope {
  enum class Kind { Exhaustive, Random, File } kind = Kind::Exhaustive;
  int n = 0;
  int count = 0;           // random only
  std::uint64_t seed = 0;  // random only
  std::string path;        // file only
};

// "exhaustive:N" | "random:N:COUNT:SEED" | "file:PATH"
Scope parse_scope(const std::string& text);

struct Finding {
  std::string tree_id;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t trees = 0;
  std::vector<Finding> findings;
  std::vector<std::string> notes;
  bool ok() const { return findings.empty(); }
};

std::uint64_t labeled_tree_count(int n);
// Index into the Prüfer codes of trees on n vertices, base-n digits.
Tree labeled_tree_at(int n, std::uint64_t index);
std::string tree_id(const Tree& t);

// Violation details for one tree; empty = clean.
using TreeCheck = std::function<std::vector<std::string>(const Tree&)>;

// Applies the check to every tree in scope, parallel at the per-tree level;
// findings come back in deterministic (n, index) order.
SuiteResult run_tree_suite(const std::string& name, const Scope& scope,
                           const TreeCheck& check);

std::vector<std::string> check_aidi(const Tree& t, int guard);
std::vector<std::string> check_bounds(const Tree& t, int guard);
std::vector<std::string> check_segments(const Tree& t, int guard);
std::vector<std::string> check_corollary(const Tree& t, int guard);
std::vector<std::string> check_avd(const Tree& t, int guard);
std::vector<std::string> check_unimodality(const Tree& t);

SuiteResult run_tk_suite(int k);

// suite in {aidi, bounds, segments, corollary, avd, search}; "all" expands to
// the five tree suites.
SuiteResult run_suite(const std::string& suite, const Scope& scope, int guard);
std::vector<SuiteResult> run_suites(const std::string& suite,
                                    const Scope& scope, int guard);

}  // namespace domtree::verify

#endif
