#ifndef DOMTREE_ERROR_HPP
#define DOMTREE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace domtree {

enum class ErrorKind {
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  WrongEdgeCount,
  Disconnected,
  GuardExceeded,
  NotDominating,
  NotMinimal,
  NotInA1,
  XNotInN2,
  NotConnectedSubtree,
  XNotIndependent,
  PreconditionViolated,
  EngineMismatch,
  BadSpec,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace domtree

#endif
