// semigaps - gap-structure analytics for numerical semigroups
//
// The two rooted trees used for enumeration:
//
//  * the interval tree of an irreducible I, whose vertices are the numerical
//    semigroups S with theta(I) <= S <= I and whose edges remove one minimal
//    generator x with F/2 < x < F larger than the label of the incoming
//    edge;
//  * the irreducible tree of a Frobenius number F, rooted at C(F), whose
//    edges swap a minimal generator x for F - x.
//
// Both are built breadth first, one level at a time, with children ordered
// by edge label. Expansion of a level may be spread over several threads;
// the resulting node order never depends on the thread count.

#ifndef SEMIGAPS_TREES_HPP_
#define SEMIGAPS_TREES_HPP_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core.hpp"

namespace semigaps {

  // Shared count of expanded tree nodes; throws BudgetExceeded once the
  // limit is passed. Safe to charge from several threads.
  class WorkBudget {
   public:
    explicit WorkBudget(std::optional<std::uint64_t> limit = std::nullopt) : _limit(limit) {}

    void charge(std::uint64_t nodes = 1);

    std::uint64_t used() const noexcept {
      return _used.load();
    }

   private:
    std::optional<std::uint64_t> _limit;
    std::atomic<std::uint64_t>   _used{0};
  };

  struct TraversalOptions {
    unsigned    threads = 1;
    WorkBudget* budget  = nullptr;
  };

  enum class TreeKind { IntervalTree, IrreducibleTree };

  struct TreeNode {
    NumericalSemigroup semigroup;
    int                depth;
    // Generator x on the edge to the parent; -1 at the root.
    int label;
    // Index of the parent in SemigroupTree::nodes(); -1 at the root.
    std::ptrdiff_t parent;
  };

  class SemigroupTree {
   public:
    SemigroupTree(TreeKind kind, std::vector<TreeNode> nodes);

    TreeKind kind() const noexcept {
      return _kind;
    }

    bool empty() const noexcept {
      return _nodes.empty();
    }

    std::size_t size() const noexcept {
      return _nodes.size();
    }

    // Nodes in breadth-first order.
    std::vector<TreeNode> const& nodes() const noexcept {
      return _nodes;
    }

    TreeNode const& root() const;

    // Largest depth; -1 for an empty tree.
    int height() const noexcept {
      return static_cast<int>(_level_start.size()) - 2;
    }

    std::span<TreeNode const> level(int depth) const;

   private:
    TreeKind              _kind;
    std::vector<TreeNode> _nodes;
    std::vector<std::size_t> _level_start;
  };

  //! max(B \ A), or -1 when A = B. Throws NotASubset unless A <= B.
  int relative_frobenius(NumericalSemigroup const& b, NumericalSemigroup const& a);

  //! <Delta(S)> u {F(S) + 1, ...}. theta(N) = N.
  NumericalSemigroup theta(NumericalSemigroup const& s);

  //! #(S \ theta(S)), counted on the membership tables without building
  //! theta(S) as a semigroup.
  int theta_gap_count(NumericalSemigroup const& s);

  //! C(F): the irreducible semigroup with Frobenius number F and
  //! multiplicity above F/2. Throws InvalidArgument when F < 1.
  NumericalSemigroup canonical_irreducible(int frobenius);

  //! Children of P in the interval tree: P \ {x} for x in msg(P) with
  //! F/2 < x < F and x > edge_label. Ordered by x.
  std::vector<std::pair<NumericalSemigroup, int>> interval_children(NumericalSemigroup const& p,
                                                                    int edge_label);

  //! Throws NotIrreducible unless l(I) <= 1.
  SemigroupTree interval_tree(NumericalSemigroup const& irreducible,
                              TraversalOptions const&   opts = {});

  //! Depth-n vertices of the interval tree of I, in breadth-first order,
  //! keeping only one level in memory at a time.
  std::vector<NumericalSemigroup> interval_level(NumericalSemigroup const& irreducible,
                                                 int                       depth,
                                                 TraversalOptions const&   opts = {});

  //! Children of an irreducible S in the irreducible tree: (S \ {x}) u {F - x}
  //! for x in msg(S) with F/2 < x < F, 2x - F not in S, 3x != 2F, 4x != 3F
  //! and F - x < m(S). Ordered by x.
  std::vector<std::pair<NumericalSemigroup, int>> irreducible_children(
      NumericalSemigroup const& s);

  //! All irreducible semigroups with Frobenius number F. With a threshold
  //! t, nodes with theta_gap_count below t are dropped together with their
  //! subtrees; the count strictly decreases along edges, so the result is
  //! exactly the irreducibles whose count is at least t.
  SemigroupTree irreducible_tree(int                     frobenius,
                                 std::optional<int>      prune_threshold = std::nullopt,
                                 TraversalOptions const& opts            = {});

}  // namespace semigaps

#endif  // SEMIGAPS_TREES_HPP_
