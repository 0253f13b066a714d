#ifndef DOMTREE_CLI_HPP
#define DOMTREE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "domtree/tree.hpp"

namespace domtree {

// Command-line front end. args excludes the program name. Exit codes:
//   0 success / everything verified
//   1 violation found (verify findings, engine mismatch, search hit)
//   2 usage error, invalid input, or violated precondition
//   3 enumeration guard exceeded
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Resolves "path:N", "star:N", "tk:K", "random:N:SEED", "prufer:..." or an
// edge-list file path. seed backs "random:N" when the spec omits one.
LabeledTree resolve_tree_input(const std::string& input,
                               std::uint64_t seed = 0);

}  // namespace domtree

#endif
