// semigaps - gap-structure analytics for numerical semigroups

#include "semigaps/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "semigaps/errors.hpp"

namespace semigaps {

  namespace {

    // S u {y} for a gap y of S, provided the result is a semigroup.
    // y must be pseudo-Frobenius and 2y must already lie in S.
    std::optional<NumericalSemigroup> adjoin_gap(NumericalSemigroup const& s, int y) {
      if (!s.contains(2 * y)) {
        return std::nullopt;
      }
      int f = s.frobenius();
      if (y == f) {
        f = -1;
        for (int x = y - 1; x >= 1; --x) {
          if (!s.contains(x)) {
            f = x;
            break;
          }
        }
      }
      Bitset members(static_cast<std::size_t>(f + 2));
      for (int i = 0; i <= f + 1; ++i) {
        members.assign(static_cast<std::size_t>(i), i == y || s.contains(i));
      }
      return NumericalSemigroup::from_members(std::move(members));
    }

    template <typename Pred>
    std::optional<RemovalWitness> removal_witness(NumericalSemigroup const& s, Pred parent_ok) {
      if (s.frobenius() < 1) {
        return std::nullopt;
      }
      // T = S u {y} with y minimal in T forces y in PF(S) and 2y in S.
      for (int y : pseudo_frobenius(s).values) {
        auto t = adjoin_gap(s, y);
        if (t && parent_ok(*t)) {
          return RemovalWitness{std::move(*t), y};
        }
      }
      return std::nullopt;
    }

    bool msg_equals(NumericalSemigroup const& s, std::initializer_list<int> gens) {
      auto const& g = s.min_generators();
      return std::equal(g.begin(), g.end(), gens.begin(), gens.end());
    }

  }  // namespace

  PseudoFrobeniusSet pseudo_frobenius(NumericalSemigroup const& s) {
    PseudoFrobeniusSet out;
    if (s.frobenius() < 0) {
      out.values.push_back(-1);
      return out;
    }
    auto const& gens = s.min_generators();
    for (int x = 1; x <= s.frobenius(); ++x) {
      if (s.contains(x)) {
        continue;
      }
      if (std::all_of(gens.begin(), gens.end(), [&](int g) { return s.contains(x + g); })) {
        out.values.push_back(x);
      }
    }
    return out;
  }

  bool is_symmetric(NumericalSemigroup const& s) {
    return second_kind_count(s) == 0;
  }

  bool is_pseudo_symmetric(NumericalSemigroup const& s) {
    return second_kind_count(s) == 1;
  }

  bool is_irreducible(NumericalSemigroup const& s) {
    return second_kind_count(s) <= 1;
  }

  ClassificationReport classify(NumericalSemigroup const& s) {
    ClassificationReport r;
    int const            f = s.frobenius();
    r.l_count              = second_kind_count(s);
    r.symmetric            = r.l_count == 0;
    r.pseudo_symmetric     = r.l_count == 1;
    r.irreducible          = r.l_count <= 1;

    int const g = s.genus();
    if (r.symmetric != (2 * g == f + 1) || r.pseudo_symmetric != (2 * g == f + 2)) {
      throw std::logic_error("genus characterisation disagrees with l(S) for " + to_string(s));
    }
    // Irreducible iff there is no gap x != F/2 with F - x also a gap.
    bool paired = false;
    for (int x = 1; x < f && !paired; ++x) {
      paired = 2 * x != f && !s.contains(x) && !s.contains(f - x);
    }
    if (r.irreducible == paired) {
      throw std::logic_error("gap-pair characterisation disagrees with l(S) for " + to_string(s));
    }

    r.ursy        = is_ursy(s);
    r.urpsy       = is_urpsy(s);
    r.in_family_U = in_family_U(s);
    return r;
  }

  std::optional<RemovalWitness> ursy_witness(NumericalSemigroup const& s) {
    return removal_witness(s, [](NumericalSemigroup const& t) { return is_symmetric(t); });
  }

  std::optional<RemovalWitness> urpsy_witness(NumericalSemigroup const& s) {
    return removal_witness(s, [](NumericalSemigroup const& t) { return is_pseudo_symmetric(t); });
  }

  bool in_family_U(NumericalSemigroup const& s) {
    if (msg_equals(s, {3, 5, 7}) || msg_equals(s, {4, 5, 6, 7}) || msg_equals(s, {4, 5, 11})) {
      return true;
    }
    auto const& g = s.min_generators();
    if (g.size() == 2 && g[0] == 3) {
      return true;  // <3, x + 3> with 3 not dividing x; gcd = 1 forces the latter
    }
    int const m = g.front();
    if (m < 5 || g.size() != static_cast<std::size_t>(m - 2)) {
      return false;
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] != m + static_cast<int>(i)) {
        return false;
      }
    }
    return true;
  }

  PseudoFrobeniusSet pf_fast_2sg(NumericalSemigroup const& s) {
    if (second_kind_count(s) != 2) {
      throw NotTwoSemigroup(to_string(s) + " does not have exactly two gaps of second kind");
    }
    int const        f = s.frobenius();
    int const        h = h_value(s);
    std::vector<int> v{f, h};
    if (!s.contains(2 * h - f)) {
      v.push_back(f - h);
    }
    std::sort(v.begin(), v.end());
    return {v};
  }

  PseudoFrobeniusSet pf_fast_3sg(NumericalSemigroup const& s) {
    if (second_kind_count(s) != 3) {
      throw NotThreeSemigroup(to_string(s) + " does not have exactly three gaps of second kind");
    }
    int const        f = s.frobenius();
    int const        h = h_value(s);
    std::vector<int> v{f, h};
    if (!s.contains(h - f / 2)) {
      v.push_back(f / 2);
    }
    if (!s.contains(2 * h - f)) {
      v.push_back(f - h);
    }
    std::sort(v.begin(), v.end());
    return {v};
  }

}  // namespace semigaps
