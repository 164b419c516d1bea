// semigaps - gap-structure analytics for numerical semigroups

#include "semigaps/core.hpp"

#include <algorithm>
#include <numeric>

#include "semigaps/errors.hpp"

namespace semigaps {

  namespace {
    std::size_t idx(int x) {
      return static_cast<std::size_t>(x);
    }
  }  // namespace

  NumericalSemigroup::NumericalSemigroup() : NumericalSemigroup(-1, Bitset(1, true)) {}

  NumericalSemigroup::NumericalSemigroup(int frobenius, Bitset members)
      : _frobenius(frobenius),
        _members(std::move(members)),
        _cache(std::make_shared<GeneratorCache>()) {}

  NumericalSemigroup NumericalSemigroup::from_generators(std::span<int const> gens) {
    if (gens.empty()) {
      throw InvalidArgument("the generating set must be non-empty");
    }
    std::vector<int> g(gens.begin(), gens.end());
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (g.front() <= 0) {
      throw InvalidArgument("generators must be positive, found " + std::to_string(g.front()));
    }
    int d = 0;
    for (int x : g) {
      d = std::gcd(d, x);
    }
    if (d != 1) {
      throw GcdNotOne("the generators have gcd " + std::to_string(d));
    }
    int const m = g.front();
    if (m == 1) {
      return NumericalSemigroup();
    }
    // Sieve until m consecutive members appear; from then on every integer
    // is a member. The run must start below m * max(gens).
    long long const bound = static_cast<long long>(m) * g.back() + m;
    std::vector<char> sieve{1};
    int               run = 0;
    for (long long i = 1; run < m; ++i) {
      if (i > bound) {
        throw InvalidArgument("sieve bound exceeded");  // unreachable when gcd = 1
      }
      bool member = false;
      for (int x : g) {
        if (x > i) {
          break;
        }
        if (sieve[static_cast<std::size_t>(i - x)]) {
          member = true;
          break;
        }
      }
      sieve.push_back(member);
      run = member ? run + 1 : 0;
    }
    int const f = static_cast<int>(sieve.size()) - 1 - m;
    Bitset    members(idx(f + 2));
    for (int i = 0; i <= f + 1; ++i) {
      members.assign(idx(i), sieve[idx(i)]);
    }
    return NumericalSemigroup(f, std::move(members));
  }

  NumericalSemigroup NumericalSemigroup::from_gap_set(std::span<int const> gaps) {
    int f = -1;
    for (int x : gaps) {
      if (x <= 0) {
        throw InvalidArgument("gaps must be positive, found " + std::to_string(x));
      }
      f = std::max(f, x);
    }
    if (f == -1) {
      return NumericalSemigroup();
    }
    Bitset members(idx(f + 2), true);
    for (int x : gaps) {
      members.reset(idx(x));
    }
    for (int i = 1; i <= f / 2; ++i) {
      if (!members.test(idx(i))) {
        continue;
      }
      for (int j = i; i + j <= f; ++j) {
        if (members.test(idx(j)) && !members.test(idx(i + j))) {
          throw NotClosed(i, j);
        }
      }
    }
    return NumericalSemigroup(f, std::move(members));
  }

  NumericalSemigroup NumericalSemigroup::from_members(Bitset members) {
    if (members.size() < 1) {
      throw InvalidArgument("membership table must cover at least [0, F + 1]");
    }
    int const f = static_cast<int>(members.size()) - 2;
    if (!members.test(0) || !members.test(idx(f + 1)) || (f >= 0 && members.test(idx(f)))) {
      throw InvalidArgument("membership table violates 0 in S, F not in S, F + 1 in S");
    }
    return NumericalSemigroup(f, std::move(members));
  }

  int NumericalSemigroup::multiplicity() const noexcept {
    if (_frobenius < 0) {
      return 1;
    }
    for (int i = 1; i <= _frobenius; ++i) {
      if (_members.test(idx(i))) {
        return i;
      }
    }
    return _frobenius + 1;
  }

  int NumericalSemigroup::genus() const noexcept {
    // Table covers F + 2 integers of which F + 2 - g are members.
    return _frobenius + 2 - static_cast<int>(_members.count());
  }

  std::vector<int> NumericalSemigroup::gaps() const {
    std::vector<int> out;
    for (int i = 1; i <= _frobenius; ++i) {
      if (!_members.test(idx(i))) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<int> NumericalSemigroup::small_elements() const {
    std::vector<int> out;
    for (int i = 0; i < _frobenius; ++i) {
      if (_members.test(idx(i))) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<int> const& NumericalSemigroup::min_generators() const {
    std::call_once(_cache->once, [this] {
      int const m = multiplicity();
      // Every minimal generator is below F + m + 1: anything larger is
      // m plus a member.
      int const top = std::max(_frobenius + m, m);
      for (int s = m; s <= top; ++s) {
        if (!contains(s)) {
          continue;
        }
        bool decomposable = false;
        for (int a = m; 2 * a <= s; ++a) {
          if (contains(a) && contains(s - a)) {
            decomposable = true;
            break;
          }
        }
        if (!decomposable) {
          _cache->gens.push_back(s);
        }
      }
    });
    return _cache->gens;
  }

  std::strong_ordering NumericalSemigroup::operator<=>(NumericalSemigroup const& that) const {
    auto const a = gaps();
    auto const b = that.gaps();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

  GapProfile gap_profile(NumericalSemigroup const& s) {
    GapProfile p;
    int const  f = s.frobenius();
    for (int x = 0; x <= f; ++x) {
      if (s.contains(x)) {
        if (x < f) {
          p.small_elements.push_back(x);
        }
        continue;
      }
      p.gaps.push_back(x);
      if (s.contains(f - x)) {
        p.first_kind.push_back(x);
      } else {
        p.second_kind.push_back(x);
        if (2 * x != f) {
          p.h_value = x;
        }
      }
    }
    p.genus   = static_cast<int>(p.gaps.size());
    p.n_count = static_cast<int>(p.small_elements.size());
    p.l_count = static_cast<int>(p.second_kind.size());
    return p;
  }

  int second_kind_count(NumericalSemigroup const& s) noexcept {
    int const f = s.frobenius();
    int       l = 0;
    for (int x = 1; x < f; ++x) {
      l += !s.contains(x) && !s.contains(f - x);
    }
    return l;
  }

  int h_value(NumericalSemigroup const& s) noexcept {
    int const f = s.frobenius();
    for (int x = f - 1; 2 * x > f; --x) {
      if (!s.contains(x) && !s.contains(f - x)) {
        return x;
      }
    }
    return -1;
  }

  NumericalSemigroup remove_element(NumericalSemigroup const& s, int x) {
    auto const& gens = s.min_generators();
    if (!std::binary_search(gens.begin(), gens.end(), x)) {
      throw NotMinimalGenerator(std::to_string(x) + " is not a minimal generator of "
                                + to_string(s));
    }
    int const f = std::max(s.frobenius(), x);
    Bitset    members(idx(f + 2));
    for (int i = 0; i <= f + 1; ++i) {
      members.assign(idx(i), i != x && s.contains(i));
    }
    return NumericalSemigroup::from_members(std::move(members));
  }

  NumericalSemigroup adjoin_h(NumericalSemigroup const& s) {
    int const h = h_value(s);
    if (h < 0) {
      throw NoSecondKindGap(to_string(s) + " has fewer than two gaps of second kind");
    }
    Bitset members = s.members();
    members.set(idx(h));
    return NumericalSemigroup::from_members(std::move(members));
  }

  std::vector<int> delta(NumericalSemigroup const& s) {
    std::vector<int> out;
    for (int x = 0; 2 * x < s.frobenius(); ++x) {
      if (s.contains(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::string to_string(NumericalSemigroup const& s) {
    std::string out = "<";
    bool        first = true;
    for (int x : s.min_generators()) {
      if (!first) {
        out += ',';
      }
      out += std::to_string(x);
      first = false;
    }
    return out + ">";
  }

}  // namespace semigaps
