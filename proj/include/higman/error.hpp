#pragma once

#include <stdexcept>
#include <string>

namespace higman {

/// Base class of every error raised by the library. The CLI maps these to
/// exit code 2 (usage) or passes the message through.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HIGMAN_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

HIGMAN_DEFINE_ERROR(NegativeSupport);
HIGMAN_DEFINE_ERROR(BoundTooTight);
HIGMAN_DEFINE_ERROR(EnumerationTooLarge);
HIGMAN_DEFINE_ERROR(UnknownGenerator);
HIGMAN_DEFINE_ERROR(ForeignGenerator);
HIGMAN_DEFINE_ERROR(SupportOutOfRange);
HIGMAN_DEFINE_ERROR(MalformedRule);
HIGMAN_DEFINE_ERROR(NameCollision);
HIGMAN_DEFINE_ERROR(NonTermination);
HIGMAN_DEFINE_ERROR(BlockNotInB);
HIGMAN_DEFINE_ERROR(UnknownName);
HIGMAN_DEFINE_ERROR(UnknownCase);
HIGMAN_DEFINE_ERROR(ParseError);

#undef HIGMAN_DEFINE_ERROR

}  // namespace higman
