// semigaps - gap-structure analytics for numerical semigroups
//
// Canonical representation of a numerical semigroup and its first-order
// analytics: membership, gaps, small elements, gaps of first and second
// kind, minimal generators, and the single-element mutations used by the
// tree constructions.

#ifndef SEMIGAPS_CORE_HPP_
#define SEMIGAPS_CORE_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "bitset.hpp"

namespace semigaps {

  //! A numerical semigroup S, stored as its membership table on
  //! [0, F(S) + 1]. Every integer above the table is implicitly a member.
  //!
  //! Values are immutable after construction. The minimal generating set is
  //! computed on first request and cached; copies share the cache, and the
  //! computation is guarded so concurrent readers see a single result.
  //!
  //! The default-constructed value is the whole of N, whose Frobenius number
  //! is -1.
  class NumericalSemigroup {
   public:
    NumericalSemigroup();

    //! The semigroup generated by \p gens. Throws InvalidArgument on an
    //! empty list or a non-positive generator, GcdNotOne when the
    //! generators share a common factor.
    static NumericalSemigroup from_generators(std::span<int const> gens);
    static NumericalSemigroup from_generators(std::initializer_list<int> gens) {
      return from_generators(std::span<int const>(gens.begin(), gens.size()));
    }

    //! N minus \p gaps. Throws NotClosed with a witness pair when the
    //! complement is not closed under addition.
    static NumericalSemigroup from_gap_set(std::span<int const> gaps);
    static NumericalSemigroup from_gap_set(std::initializer_list<int> gaps) {
      return from_gap_set(std::span<int const>(gaps.begin(), gaps.size()));
    }

    //! Wraps a membership table on [0, F + 1] where F = members.size() - 2.
    //! Only the boundary invariants are checked; additive closure is the
    //! caller's responsibility.
    static NumericalSemigroup from_members(Bitset members);

    int frobenius() const noexcept {
      return _frobenius;
    }

    //! Smallest positive member; 1 for N.
    int multiplicity() const noexcept;

    int genus() const noexcept;

    bool contains(int x) const noexcept {
      if (x < 0) {
        return false;
      }
      if (x > _frobenius) {
        return true;
      }
      return _members.test(static_cast<std::size_t>(x));
    }

    Bitset const& members() const noexcept {
      return _members;
    }

    std::vector<int> gaps() const;
    std::vector<int> small_elements() const;

    //! msg(S), ascending.
    std::vector<int> const& min_generators() const;

    std::size_t embedding_dimension() const {
      return min_generators().size();
    }

    bool operator==(NumericalSemigroup const& that) const noexcept {
      return _frobenius == that._frobenius && _members == that._members;
    }

    //! Canonical order: lexicographic on the ascending gap list.
    std::strong_ordering operator<=>(NumericalSemigroup const& that) const;

   private:
    struct GeneratorCache {
      std::once_flag   once;
      std::vector<int> gens;
    };

    NumericalSemigroup(int frobenius, Bitset members);

    int                             _frobenius;
    Bitset                          _members;
    std::shared_ptr<GeneratorCache> _cache;
  };

  //! Gap analytics of S. For N every set is empty and h is -1.
  struct GapProfile {
    std::vector<int> gaps;
    std::vector<int> small_elements;  // N(S)
    std::vector<int> first_kind;      // H(S)
    std::vector<int> second_kind;     // L(S)
    int              genus   = 0;
    int              n_count = 0;
    int              l_count = 0;
    // Largest x in L(S) with 2x != F, or -1 when there is none. This is
    // max L(S) whenever l(S) >= 2 and -1 for every irreducible S.
    int h_value = -1;
  };

  inline bool contains(NumericalSemigroup const& s, int x) noexcept {
    return s.contains(x);
  }

  GapProfile gap_profile(NumericalSemigroup const& s);

  inline std::vector<int> const& minimal_generators(NumericalSemigroup const& s) {
    return s.min_generators();
  }

  // l(S) alone, without building the profile vectors.
  int second_kind_count(NumericalSemigroup const& s) noexcept;

  // h(S) alone; see GapProfile::h_value.
  int h_value(NumericalSemigroup const& s) noexcept;

  //! S \ {x}. Throws NotMinimalGenerator unless x is in msg(S).
  NumericalSemigroup remove_element(NumericalSemigroup const& s, int x);

  //! S u {h(S)}. Throws NoSecondKindGap when l(S) <= 1.
  NumericalSemigroup adjoin_h(NumericalSemigroup const& s);

  //! Members s with 2s < F(S), ascending. Always contains 0 when F >= 1.
  std::vector<int> delta(NumericalSemigroup const& s);

  //! "<5,7,9,11>"
  std::string to_string(NumericalSemigroup const& s);

}  // namespace semigaps

#endif  // SEMIGAPS_CORE_HPP_
