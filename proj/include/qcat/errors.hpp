#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define QCAT_ERROR_TYPE(Name)                                 \
  struct Name : Error {                                       \
    explicit Name(const std::string& msg) : Error(msg) {}     \
  }

QCAT_ERROR_TYPE(CycleError);
QCAT_ERROR_TYPE(NumberingError);
QCAT_ERROR_TYPE(DisconnectedError);
QCAT_ERROR_TYPE(NotFiniteType);
QCAT_ERROR_TYPE(CapExceeded);
QCAT_ERROR_TYPE(NotASubword);
QCAT_ERROR_TYPE(ZeroModuleHit);
QCAT_ERROR_TYPE(NotReduced);
QCAT_ERROR_TYPE(NotARoot);
QCAT_ERROR_TYPE(NotDynkin);
QCAT_ERROR_TYPE(DecompositionFailure);
QCAT_ERROR_TYPE(FieldTooLargeForEnumeration);
QCAT_ERROR_TYPE(NotSortable);
QCAT_ERROR_TYPE(CrossCheckMismatch);
QCAT_ERROR_TYPE(CriterionMismatch);
QCAT_ERROR_TYPE(AmbiguousMaximum);
QCAT_ERROR_TYPE(ParseError);
QCAT_ERROR_TYPE(InvalidIndex);
QCAT_ERROR_TYPE(InternalError);

#undef QCAT_ERROR_TYPE

}  // namespace qcat
