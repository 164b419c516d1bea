// semigaps - gap-structure analytics for numerical semigroups

#include "semigaps/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "semigaps/errors.hpp"
#include "semigaps/parallel.hpp"
#include "semigaps/trees.hpp"

namespace semigaps {

  bool feasible(int k, int f) noexcept {
    return k >= 0 && f >= 0 && (k + f) % 2 == 1 && f >= k + 1;
  }

  EnumerationResult enumerate_k_semigroups(EnumerationRequest const& req) {
    if (req.k < 0 || req.frobenius < 0) {
      throw InvalidArgument("K and F must be non-negative");
    }
    EnumerationResult result;
    if ((req.k + req.frobenius) % 2 == 0) {
      result.reason = "K+F even";
      return result;
    }
    if (req.frobenius < req.k + 1) {
      result.reason = "F < K+1";
      return result;
    }
    result.feasible = true;

    int const        depth = req.k / 2;
    WorkBudget       budget(req.max_work);
    TraversalOptions opts{req.threads, &budget};

    auto const roots = irreducible_tree(req.frobenius, depth, opts);

    // One level per root, computed independently; each root's traversal
    // runs single-threaded while roots are spread over the workers.
    TraversalOptions const inner{1, &budget};
    std::vector<EnumerationGroup> groups(roots.size());
    detail::parallel_for(roots.size(), req.threads, [&](std::size_t i) {
      auto const& root    = roots.nodes()[i].semigroup;
      auto        members = interval_level(root, depth, inner);
      std::sort(members.begin(), members.end());
      groups[i].root  = root;
      groups[i].count = members.size();
      if (req.mode == EnumerationMode::Full) {
        groups[i].members = std::move(members);
      }
    });

    for (auto& g : groups) {
      if (g.count == 0) {
        continue;
      }
      result.total += g.count;
      result.groups.push_back(std::move(g));
    }
    return result;
  }

  std::optional<NumericalSemigroup> witness_k_semigroup(int k, int f) {
    if (!feasible(k, f)) {
      return std::nullopt;
    }
    auto const c       = canonical_irreducible(f);
    Bitset     members = c.members();
    int        removed = 0;
    for (int x = f - 1; x > 0 && removed < k / 2; --x) {
      if (members.test(static_cast<std::size_t>(x))) {
        members.reset(static_cast<std::size_t>(x));
        ++removed;
      }
    }
    auto s = NumericalSemigroup::from_members(std::move(members));
    if (removed != k / 2 || second_kind_count(s) != k) {
      throw std::logic_error("witness construction failed for K=" + std::to_string(k)
                             + ", F=" + std::to_string(f));
    }
    return s;
  }

}  // namespace semigaps
