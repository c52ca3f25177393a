#ifndef HYPERD_ERROR_HPP
#define HYPERD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperd {

enum class ErrorKind {
  Pole,
  NoConvergence,
  BranchCut,
  Domain,
  ParameterSingular,
  PoleAtOrigin,
  RouteInapplicable,
  DivergedImmediately,
  UnknownRelation,
  Inapplicable,
  ExtrapolationUnstable,
  RoutesDisagree,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI in particular) can map it to a structured record.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace hyperd

#endif  // HYPERD_ERROR_HPP
