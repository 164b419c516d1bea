// semigaps - gap-structure analytics for numerical semigroups
//
// Irreducibility classes, URSY/URPSY detection, the exceptional family U,
// and pseudo-Frobenius numbers (generic and the closed forms available for
// semigroups with two or three gaps of second kind).

#ifndef SEMIGAPS_CLASSIFY_HPP_
#define SEMIGAPS_CLASSIFY_HPP_

#include <optional>
#include <vector>

#include "core.hpp"

namespace semigaps {

  struct PseudoFrobeniusSet {
    std::vector<int> values;  // ascending

    int type_count() const noexcept {
      return static_cast<int>(values.size());
    }

    bool operator==(PseudoFrobeniusSet const&) const = default;
  };

  struct ClassificationReport {
    int  l_count          = 0;
    bool symmetric        = false;
    bool pseudo_symmetric = false;
    bool irreducible      = false;
    bool ursy             = false;
    bool urpsy            = false;
    bool in_family_U      = false;
  };

  //! A parent T and minimal generator x of T with S = T \ {x}.
  struct RemovalWitness {
    NumericalSemigroup parent;
    int                removed;
  };

  //! PF(S): gaps x with x + g in S for every minimal generator g. For N the
  //! result is {-1}.
  PseudoFrobeniusSet pseudo_frobenius(NumericalSemigroup const& s);

  //! Symmetric iff l(S) = 0, pseudo-symmetric iff l(S) = 1. The genus and
  //! Frobenius-pair characterisations are checked as well; a disagreement
  //! throws std::logic_error.
  ClassificationReport classify(NumericalSemigroup const& s);

  bool is_symmetric(NumericalSemigroup const& s);
  bool is_pseudo_symmetric(NumericalSemigroup const& s);
  bool is_irreducible(NumericalSemigroup const& s);

  //! Some symmetric T and x in msg(T) with S = T \ {x}, if any exists.
  std::optional<RemovalWitness> ursy_witness(NumericalSemigroup const& s);
  //! As ursy_witness, with a pseudo-symmetric parent.
  std::optional<RemovalWitness> urpsy_witness(NumericalSemigroup const& s);

  inline bool is_ursy(NumericalSemigroup const& s) {
    return ursy_witness(s).has_value();
  }
  inline bool is_urpsy(NumericalSemigroup const& s) {
    return urpsy_witness(s).has_value();
  }

  //! Membership in the exceptional family
  //! {<3,5,7>, <4,5,6,7>, <4,5,11>} u {<3,b> : b > 3, 3 does not divide b}
  //!   u {<m, m+1, ..., 2m-3> : m >= 5},
  //! decided on msg(S).
  bool in_family_U(NumericalSemigroup const& s);

  //! PF(S) for l(S) = 2: {F, h} plus F - h exactly when 2h - F is not in S.
  //! Throws NotTwoSemigroup otherwise.
  PseudoFrobeniusSet pf_fast_2sg(NumericalSemigroup const& s);

  //! PF(S) for l(S) = 3: {F, h}, plus F/2 when h - F/2 is not in S, plus
  //! F - h when 2h - F is not in S. Throws NotThreeSemigroup otherwise.
  PseudoFrobeniusSet pf_fast_3sg(NumericalSemigroup const& s);

}  // namespace semigaps

#endif  // SEMIGAPS_CLASSIFY_HPP_
