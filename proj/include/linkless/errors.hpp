#pragma once

#include <stdexcept>
#include <string>

namespace linkless {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LINKLESS_DEFINE_ERROR(Name)              \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(std::string(#Name ": ") + what) {} \
  }

LINKLESS_DEFINE_ERROR(NotAnEdge);
LINKLESS_DEFINE_ERROR(NotAForest);
LINKLESS_DEFINE_ERROR(NotAClique);
LINKLESS_DEFINE_ERROR(NotConnected);
LINKLESS_DEFINE_ERROR(NotATriangle);
LINKLESS_DEFINE_ERROR(NotDegreeThree);
LINKLESS_DEFINE_ERROR(NotDisjoint);
LINKLESS_DEFINE_ERROR(NotMaximalPlanar);
LINKLESS_DEFINE_ERROR(CapacityExceeded);
LINKLESS_DEFINE_ERROR(TooSmall);
LINKLESS_DEFINE_ERROR(InvalidArgument);
LINKLESS_DEFINE_ERROR(PropositionViolation);
LINKLESS_DEFINE_ERROR(UnsupportedOrder);
LINKLESS_DEFINE_ERROR(IncompleteSource);
LINKLESS_DEFINE_ERROR(DeadlineExceeded);

#undef LINKLESS_DEFINE_ERROR

}  // namespace linkless
