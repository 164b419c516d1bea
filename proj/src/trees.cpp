// semigaps - gap-structure analytics for numerical semigroups

#include "semigaps/trees.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "semigaps/errors.hpp"
#include "semigaps/parallel.hpp"

namespace semigaps {

  namespace {

    std::size_t idx(int x) {
      return static_cast<std::size_t>(x);
    }

    // Membership table of <Delta(S)> restricted to [0, F + 1], with F + 1
    // forced in.
    Bitset theta_table(NumericalSemigroup const& s) {
      int const        f = s.frobenius();
      std::vector<int> d = delta(s);
      d.erase(d.begin());  // drop 0
      Bitset t(idx(f + 2));
      t.set(0);
      for (int i = 1; i <= f; ++i) {
        for (int x : d) {
          if (x > i) {
            break;
          }
          if (t.test(idx(i - x))) {
            t.set(idx(i));
            break;
          }
        }
      }
      t.set(idx(f + 1));
      return t;
    }

    struct Frontier {
      NumericalSemigroup semigroup;
      int                label;
      std::ptrdiff_t     index;
    };

    // Expands one level. Children of level[i] land in out[i], so the
    // concatenation is in breadth-first order for any thread count.
    template <typename Expand>
    std::vector<std::vector<std::pair<NumericalSemigroup, int>>> expand_level(
        std::vector<Frontier> const& level,
        TraversalOptions const&      opts,
        Expand&&                     expand) {
      std::vector<std::vector<std::pair<NumericalSemigroup, int>>> out(level.size());
      detail::parallel_for(level.size(), opts.threads, [&](std::size_t i) {
        if (opts.budget != nullptr) {
          opts.budget->charge();
        }
        out[i] = expand(level[i].semigroup, level[i].label);
      });
      return out;
    }

    void require_irreducible(NumericalSemigroup const& s) {
      if (second_kind_count(s) > 1) {
        throw NotIrreducible(to_string(s) + " has more than one gap of second kind");
      }
    }

  }  // namespace

  void WorkBudget::charge(std::uint64_t nodes) {
    auto const total = _used.fetch_add(nodes) + nodes;
    if (_limit && total > *_limit) {
      throw BudgetExceeded("expanded more than " + std::to_string(*_limit) + " tree nodes");
    }
  }

  SemigroupTree::SemigroupTree(TreeKind kind, std::vector<TreeNode> nodes)
      : _kind(kind), _nodes(std::move(nodes)) {
    for (std::size_t i = 0; i < _nodes.size(); ++i) {
      auto const levels = static_cast<int>(_level_start.size());
      if (_nodes[i].depth == levels) {
        _level_start.push_back(i);
      } else if (_nodes[i].depth != levels - 1) {
        throw std::invalid_argument("tree nodes must be in breadth-first order");
      }
    }
    _level_start.push_back(_nodes.size());
  }

  TreeNode const& SemigroupTree::root() const {
    if (_nodes.empty()) {
      throw std::out_of_range("empty tree has no root");
    }
    return _nodes.front();
  }

  std::span<TreeNode const> SemigroupTree::level(int depth) const {
    if (depth < 0 || depth > height()) {
      return {};
    }
    std::size_t const begin = _level_start[idx(depth)];
    std::size_t const end   = _level_start[idx(depth) + 1];
    return {_nodes.data() + begin, end - begin};
  }

  int relative_frobenius(NumericalSemigroup const& b, NumericalSemigroup const& a) {
    int const top = std::max(a.frobenius(), b.frobenius());
    int       out = -1;
    for (int i = 0; i <= top; ++i) {
      bool const in_a = a.contains(i);
      bool const in_b = b.contains(i);
      if (in_a && !in_b) {
        throw NotASubset(to_string(a) + " is not contained in " + to_string(b)
                         + " (witness " + std::to_string(i) + ")");
      }
      if (in_b && !in_a) {
        out = i;
      }
    }
    return out;
  }

  NumericalSemigroup theta(NumericalSemigroup const& s) {
    if (s.frobenius() < 1) {
      return s;
    }
    return NumericalSemigroup::from_members(theta_table(s));
  }

  int theta_gap_count(NumericalSemigroup const& s) {
    if (s.frobenius() < 1) {
      return 0;
    }
    return static_cast<int>(s.members().count_and_not(theta_table(s)));
  }

  NumericalSemigroup canonical_irreducible(int frobenius) {
    if (frobenius < 1) {
      throw InvalidArgument("Frobenius number must be positive, got " + std::to_string(frobenius));
    }
    int const start = frobenius % 2 == 1 ? (frobenius + 1) / 2 : frobenius / 2 + 1;
    Bitset    members(idx(frobenius + 2));
    members.set(0);
    for (int i = start; i <= frobenius + 1; ++i) {
      if (i != frobenius) {
        members.set(idx(i));
      }
    }
    return NumericalSemigroup::from_members(std::move(members));
  }

  std::vector<std::pair<NumericalSemigroup, int>> interval_children(NumericalSemigroup const& p,
                                                                    int edge_label) {
    std::vector<std::pair<NumericalSemigroup, int>> out;
    int const                                       f = p.frobenius();
    for (int x : p.min_generators()) {
      if (2 * x > f && x < f && x > edge_label) {
        Bitset members = p.members();
        members.reset(idx(x));
        out.emplace_back(NumericalSemigroup::from_members(std::move(members)), x);
      }
    }
    return out;
  }

  SemigroupTree interval_tree(NumericalSemigroup const& irreducible, TraversalOptions const& opts) {
    require_irreducible(irreducible);
    std::vector<TreeNode> nodes{{irreducible, 0, -1, -1}};
    std::vector<Frontier> level{{irreducible, -1, 0}};
    for (int depth = 1; !level.empty(); ++depth) {
      auto const            children = expand_level(level, opts, interval_children);
      std::vector<Frontier> next;
      for (std::size_t i = 0; i < level.size(); ++i) {
        for (auto const& [child, x] : children[i]) {
          next.push_back({child, x, static_cast<std::ptrdiff_t>(nodes.size())});
          nodes.push_back({child, depth, x, level[i].index});
        }
      }
      level = std::move(next);
    }
    return SemigroupTree(TreeKind::IntervalTree, std::move(nodes));
  }

  std::vector<NumericalSemigroup> interval_level(NumericalSemigroup const& irreducible,
                                                 int                       depth,
                                                 TraversalOptions const&   opts) {
    require_irreducible(irreducible);
    std::vector<Frontier> level{{irreducible, -1, 0}};
    for (int d = 0; d < depth && !level.empty(); ++d) {
      auto const            children = expand_level(level, opts, interval_children);
      std::vector<Frontier> next;
      for (auto const& c : children) {
        for (auto const& [child, x] : c) {
          next.push_back({child, x, -1});
        }
      }
      level = std::move(next);
    }
    std::vector<NumericalSemigroup> out;
    out.reserve(level.size());
    for (auto& node : level) {
      out.push_back(std::move(node.semigroup));
    }
    return out;
  }

  std::vector<std::pair<NumericalSemigroup, int>> irreducible_children(
      NumericalSemigroup const& s) {
    std::vector<std::pair<NumericalSemigroup, int>> out;
    int const                                       f = s.frobenius();
    int const                                       m = s.multiplicity();
    for (int x : s.min_generators()) {
      if (2 * x > f && x < f && !s.contains(2 * x - f) && 3 * x != 2 * f && 4 * x != 3 * f
          && f - x < m) {
        Bitset members = s.members();
        members.reset(idx(x));
        members.set(idx(f - x));
        out.emplace_back(NumericalSemigroup::from_members(std::move(members)), x);
      }
    }
    return out;
  }

  SemigroupTree irreducible_tree(int                     frobenius,
                                 std::optional<int>      prune_threshold,
                                 TraversalOptions const& opts) {
    auto const root = canonical_irreducible(frobenius);
    auto const keep = [&](NumericalSemigroup const& s) {
      return !prune_threshold || theta_gap_count(s) >= *prune_threshold;
    };
    std::vector<TreeNode> nodes;
    std::vector<Frontier> level;
    if (keep(root)) {
      nodes.push_back({root, 0, -1, -1});
      level.push_back({root, -1, 0});
    }
    auto const expand = [&](NumericalSemigroup const& s, int) {
      auto children = irreducible_children(s);
      std::erase_if(children, [&](auto const& c) { return !keep(c.first); });
      return children;
    };
    for (int depth = 1; !level.empty(); ++depth) {
      auto const            children = expand_level(level, opts, expand);
      std::vector<Frontier> next;
      for (std::size_t i = 0; i < level.size(); ++i) {
        for (auto const& [child, x] : children[i]) {
          next.push_back({child, x, static_cast<std::ptrdiff_t>(nodes.size())});
          nodes.push_back({child, depth, x, level[i].index});
        }
      }
      level = std::move(next);
    }
    return SemigroupTree(TreeKind::IrreducibleTree, std::move(nodes));
  }

}  // namespace semigaps
