#pragma once

#include <stdexcept>
#include <string>

namespace drinfeld {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define DRINFELD_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                                \
      public:                                                                  \
        explicit Name(std::string const & what) : Error(#Name ": " + what) {}  \
    }

DRINFELD_DEFINE_ERROR(DivisionByZero);
DRINFELD_DEFINE_ERROR(ContextError);
DRINFELD_DEFINE_ERROR(RankError);
DRINFELD_DEFINE_ERROR(NotSublattice);
DRINFELD_DEFINE_ERROR(EmptyIdeal);
DRINFELD_DEFINE_ERROR(NonCommutativeEndomorphismRing);
DRINFELD_DEFINE_ERROR(InseparableExtension);
DRINFELD_DEFINE_ERROR(InternalError);
DRINFELD_DEFINE_ERROR(TooLarge);
DRINFELD_DEFINE_ERROR(InputError);
DRINFELD_DEFINE_ERROR(CensusViolation);

#undef DRINFELD_DEFINE_ERROR

} // namespace drinfeld
