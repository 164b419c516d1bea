// semigaps - gap-structure analytics for numerical semigroups
//
// Brute-force ground truth. Everything in semigaps::oracle is written
// directly against the definitions and uses its own membership-table type;
// nothing here calls the fast-path code except crosscheck(), whose job is
// to compare the two.

#ifndef SEMIGAPS_ORACLE_HPP_
#define SEMIGAPS_ORACLE_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace semigaps::oracle {

  // Largest Frobenius number the exhaustive enumeration accepts.
  constexpr int max_frobenius = 22;

  struct BruteSemigroup {
    int               frobenius = -1;
    std::vector<char> member;  // [0, frobenius + 1]

    bool contains(int x) const {
      return x >= 0 && (x > frobenius || member[static_cast<std::size_t>(x)] != 0);
    }

    bool operator==(BruteSemigroup const&) const = default;
  };

  //! Every numerical semigroup with Frobenius number f, sorted by gap list.
  //! Throws BoundExceeded above max_frobenius.
  std::vector<BruteSemigroup> all_with_frobenius(int f);

  //! N minus gaps; the caller guarantees closure.
  BruteSemigroup from_gaps(std::vector<int> const& gaps);

  //! True iff the table on [0, F + 1] describes a numerical semigroup with
  //! Frobenius number F.
  bool is_semigroup(std::vector<char> const& member);

  std::vector<int> brute_gaps(BruteSemigroup const& s);
  std::vector<int> brute_small(BruteSemigroup const& s);
  std::vector<int> brute_first_kind(BruteSemigroup const& s);
  std::vector<int> brute_second_kind(BruteSemigroup const& s);
  int              brute_l(BruteSemigroup const& s);
  // max{x in L(S) : 2x != F}, or -1.
  int              brute_h(BruteSemigroup const& s);
  std::vector<int> brute_pf(BruteSemigroup const& s);
  std::vector<int> brute_msg(BruteSemigroup const& s);
  std::vector<int> brute_delta(BruteSemigroup const& s);
  // #(S \ theta(S)), with <Delta(S)> closed by repeated pairwise sums.
  int brute_theta_gap_count(BruteSemigroup const& s);

  //! x and F - x are never both gaps, nor both members.
  bool brute_symmetric(BruteSemigroup const& s);
  //! F even; for x != F/2, exactly one of x, F - x is a gap.
  bool brute_pseudo_symmetric(BruteSemigroup const& s);
  //! Maximal among semigroups with the same Frobenius number: no gap y < F
  //! can be added.
  bool brute_irreducible(BruteSemigroup const& s);
  //! Some gap y of S makes S u {y} a symmetric semigroup in which y is a
  //! minimal generator.
  bool brute_ursy(BruteSemigroup const& s);
  bool brute_urpsy(BruteSemigroup const& s);

  //! a is a subset of b.
  bool brute_subset(BruteSemigroup const& a, BruteSemigroup const& b);

  enum class Verdict { Match, Mismatch };

  struct OracleReport {
    std::string input;      // semigroup or request, with generators
    std::string operation;  // fast-path operation under test
    std::string expected;   // brute-force value
    std::string actual;     // fast-path value
    Verdict     verdict = Verdict::Mismatch;
  };

  struct CrosscheckStats {
    std::size_t semigroups  = 0;
    std::size_t comparisons = 0;
  };

  //! Compares every fast-path operation with the brute-force values on all
  //! semigroups with Frobenius number in [1, f_max]. Returns the mismatches
  //! only. Throws BoundExceeded above max_frobenius.
  std::vector<OracleReport> crosscheck(int f_max, CrosscheckStats* stats = nullptr);

  std::string to_string(OracleReport const& r);

}  // namespace semigaps::oracle

#endif  // SEMIGAPS_ORACLE_HPP_
