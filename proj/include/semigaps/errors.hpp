// semigaps - gap-structure analytics for numerical semigroups
//
// Exception hierarchy. Every error raised by the library derives from
// semigaps::Error so callers (the CLI in particular) can map them to exit
// codes in one place.

#ifndef SEMIGAPS_ERRORS_HPP_
#define SEMIGAPS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace semigaps {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define SEMIGAPS_DEFINE_ERROR(NAME)            \
  class NAME : public Error {                  \
   public:                                     \
    explicit NAME(std::string const& what_arg) \
        : Error(#NAME ": " + what_arg) {}      \
  };

  SEMIGAPS_DEFINE_ERROR(InvalidArgument)
  SEMIGAPS_DEFINE_ERROR(GcdNotOne)
  SEMIGAPS_DEFINE_ERROR(NotMinimalGenerator)
  SEMIGAPS_DEFINE_ERROR(NoSecondKindGap)
  SEMIGAPS_DEFINE_ERROR(NotASubset)
  SEMIGAPS_DEFINE_ERROR(NotIrreducible)
  SEMIGAPS_DEFINE_ERROR(NotTwoSemigroup)
  SEMIGAPS_DEFINE_ERROR(NotThreeSemigroup)
  SEMIGAPS_DEFINE_ERROR(BoundExceeded)
  SEMIGAPS_DEFINE_ERROR(BudgetExceeded)

#undef SEMIGAPS_DEFINE_ERROR

  // Raised by from_gap_set; i and j lie in the candidate set while i + j is
  // one of the requested gaps.
  class NotClosed : public Error {
   public:
    NotClosed(int i, int j)
        : Error("NotClosed: " + std::to_string(i) + " + " + std::to_string(j)
                + " = " + std::to_string(i + j) + " is listed as a gap"),
          _i(i),
          _j(j) {}

    int first() const noexcept {
      return _i;
    }
    int second() const noexcept {
      return _j;
    }

   private:
    int _i;
    int _j;
  };

}  // namespace semigaps

#endif  // SEMIGAPS_ERRORS_HPP_
