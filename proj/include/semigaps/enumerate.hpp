// semigaps - gap-structure analytics for numerical semigroups
//
// All numerical semigroups with Frobenius number F and exactly K gaps of
// second kind. The irreducible tree of F, pruned to roots I with
// #(I \ theta(I)) >= floor(K/2), supplies the roots; the floor(K/2)-level
// of each root's interval tree is its share of the answer. Distinct roots
// give disjoint shares.

#ifndef SEMIGAPS_ENUMERATE_HPP_
#define SEMIGAPS_ENUMERATE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace semigaps {

  enum class EnumerationMode { Full, CountOnly };

  struct EnumerationRequest {
    int                          k         = 0;
    int                          frobenius = 0;
    EnumerationMode              mode      = EnumerationMode::Full;
    std::optional<std::uint64_t> max_work;
    unsigned                     threads = 1;
  };

  struct EnumerationGroup {
    NumericalSemigroup              root;
    std::vector<NumericalSemigroup> members;  // empty in CountOnly mode
    std::uint64_t                   count = 0;
  };

  struct EnumerationResult {
    std::vector<EnumerationGroup> groups;
    std::uint64_t                 total    = 0;
    bool                          feasible = false;
    // Why an infeasible request was rejected, e.g. "K+F even".
    std::string reason;
  };

  //! Some semigroup with Frobenius number f has exactly k gaps of second
  //! kind iff k + f is odd and f >= k + 1.
  bool feasible(int k, int f) noexcept;

  //! Groups follow the breadth-first order of the irreducible tree; members
  //! within a group are in canonical order. Roots whose share is empty are
  //! omitted. Throws BudgetExceeded when req.max_work tree expansions are
  //! not enough, and InvalidArgument for negative k or f.
  EnumerationResult enumerate_k_semigroups(EnumerationRequest const& req);

  //! C(f) minus its floor(k/2) largest nonzero members below f, checked to
  //! have exactly k gaps of second kind; nullopt when infeasible.
  std::optional<NumericalSemigroup> witness_k_semigroup(int k, int f);

}  // namespace semigaps

#endif  // SEMIGAPS_ENUMERATE_HPP_
