#pragma once

#include <stdexcept>
#include <string>

namespace jkres {

// Violated precondition of a library operation. The CLI maps these to
// exit code 2; ParseError maps to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define JKRES_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  };

JKRES_DEFINE_ERROR(SingularPoint)
JKRES_DEFINE_ERROR(NotSpanning)
JKRES_DEFINE_ERROR(NotABasis)
JKRES_DEFINE_ERROR(AlphaInSigma)
JKRES_DEFINE_ERROR(RankTooLarge)
JKRES_DEFINE_ERROR(OnWall)
JKRES_DEFINE_ERROR(Degenerate)
JKRES_DEFINE_ERROR(NotRepresentable)
JKRES_DEFINE_ERROR(ChamberMismatch)
JKRES_DEFINE_ERROR(InvalidArgument)

#undef JKRES_DEFINE_ERROR

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jkres
