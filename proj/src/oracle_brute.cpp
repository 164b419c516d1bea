// semigaps - gap-structure analytics for numerical semigroups
//
// Definition-level computations. Deliberately slow and free of shortcuts;
// must not include any fast-path header.

#include <algorithm>
#include <string>

#include "semigaps/errors.hpp"
#include "semigaps/oracle.hpp"

namespace semigaps::oracle {

  namespace {

    std::size_t idx(int x) {
      return static_cast<std::size_t>(x);
    }

    // Members are fixed for x+1..F; decide x, then recurse downwards.
    // Adding x is allowed when x + y stays in S for every member y >= x
    // with x + y <= F (x + y = F is thereby excluded).
    void assign(std::vector<char>& member, int x, int f, std::vector<BruteSemigroup>& out) {
      if (x == 0) {
        out.push_back({f, member});
        return;
      }
      member[idx(x)] = 0;
      assign(member, x - 1, f, out);

      bool ok = true;
      for (int y = x; x + y <= f && ok; ++y) {
        bool const y_in = y == x || member[idx(y)] != 0;
        if (y_in && member[idx(x + y)] == 0) {
          ok = false;
        }
      }
      if (ok) {
        member[idx(x)] = 1;
        assign(member, x - 1, f, out);
        member[idx(x)] = 0;
      }
    }

    BruteSemigroup with_added(BruteSemigroup const& s, int y) {
      // y is a gap; the Frobenius number may drop when y = F.
      int f = s.frobenius;
      if (y == f) {
        f = -1;
        for (int x = y - 1; x >= 1; --x) {
          if (!s.contains(x)) {
            f = x;
            break;
          }
        }
      }
      BruteSemigroup t{f, std::vector<char>(idx(f + 2), 0)};
      for (int i = 0; i <= f + 1; ++i) {
        t.member[idx(i)] = (i == y || s.contains(i)) ? 1 : 0;
      }
      return t;
    }

    template <typename ParentOk>
    bool brute_removal(BruteSemigroup const& s, ParentOk parent_ok) {
      for (int y : brute_gaps(s)) {
        auto const t = with_added(s, y);
        if (!is_semigroup(t.member)) {
          continue;
        }
        auto const msg = brute_msg(t);
        if (parent_ok(t) && std::find(msg.begin(), msg.end(), y) != msg.end()) {
          return true;
        }
      }
      return false;
    }

  }  // namespace

  std::vector<BruteSemigroup> all_with_frobenius(int f) {
    if (f > max_frobenius) {
      throw BoundExceeded("oracle enumeration is limited to F <= " + std::to_string(max_frobenius)
                          + ", got " + std::to_string(f));
    }
    if (f < 1) {
      throw InvalidArgument("oracle enumeration needs F >= 1, got " + std::to_string(f));
    }
    std::vector<char> member(idx(f + 2), 0);
    member[0]          = 1;
    member[idx(f + 1)] = 1;
    std::vector<BruteSemigroup> out;
    assign(member, f - 1, f, out);
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return brute_gaps(a) < brute_gaps(b);
    });
    return out;
  }

  BruteSemigroup from_gaps(std::vector<int> const& gaps) {
    int f = gaps.empty() ? -1 : *std::max_element(gaps.begin(), gaps.end());
    BruteSemigroup s{f, std::vector<char>(idx(f + 2), 1)};
    for (int x : gaps) {
      s.member[idx(x)] = 0;
    }
    return s;
  }

  bool is_semigroup(std::vector<char> const& member) {
    int const f = static_cast<int>(member.size()) - 2;
    if (member.empty() || member[0] == 0 || member.back() == 0 || (f >= 0 && member[idx(f)])) {
      return false;
    }
    for (int i = 1; i <= f; ++i) {
      for (int j = 1; i + j <= f; ++j) {
        if (member[idx(i)] && member[idx(j)] && !member[idx(i + j)]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<int> brute_gaps(BruteSemigroup const& s) {
    std::vector<int> out;
    for (int x = 0; x <= s.frobenius; ++x) {
      if (!s.contains(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<int> brute_small(BruteSemigroup const& s) {
    std::vector<int> out;
    for (int x = 0; x < s.frobenius; ++x) {
      if (s.contains(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<int> brute_first_kind(BruteSemigroup const& s) {
    // {F - s : s in N(S)}
    std::vector<int> out;
    for (int n : brute_small(s)) {
      out.push_back(s.frobenius - n);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> brute_second_kind(BruteSemigroup const& s) {
    // {x not in S : F - x not in N(S)}
    auto const       small = brute_small(s);
    std::vector<int> out;
    for (int x : brute_gaps(s)) {
      if (std::find(small.begin(), small.end(), s.frobenius - x) == small.end()) {
        out.push_back(x);
      }
    }
    return out;
  }

  int brute_l(BruteSemigroup const& s) {
    return static_cast<int>(brute_second_kind(s).size());
  }

  int brute_h(BruteSemigroup const& s) {
    int h = -1;
    for (int x : brute_second_kind(s)) {
      if (2 * x != s.frobenius) {
        h = std::max(h, x);
      }
    }
    return h;
  }

  std::vector<int> brute_pf(BruteSemigroup const& s) {
    int const        f = s.frobenius;
    std::vector<int> out;
    // x + t lies in S automatically once it exceeds F, so testing nonzero
    // members t <= F - x suffices; x below -(F + 1) fails at t = F + 1.
    for (int x = -(f + 2); x <= f; ++x) {
      if (s.contains(x)) {
        continue;
      }
      bool ok = true;
      for (int t = 1; t <= std::max(f - x, f + 1) && ok; ++t) {
        if (s.contains(t) && !s.contains(x + t)) {
          ok = false;
        }
      }
      if (ok) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<int> brute_msg(BruteSemigroup const& s) {
    std::vector<int> out;
    // Anything above 2F + 3 is (F + 1) plus a member of at least F + 2.
    for (int x = 1; x <= 2 * s.frobenius + 3; ++x) {
      if (!s.contains(x)) {
        continue;
      }
      bool sum = false;
      for (int a = 1; a < x && !sum; ++a) {
        sum = s.contains(a) && s.contains(x - a);
      }
      if (!sum) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<int> brute_delta(BruteSemigroup const& s) {
    std::vector<int> out;
    for (int x = 0; 2 * x < s.frobenius; ++x) {
      if (s.contains(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  int brute_theta_gap_count(BruteSemigroup const& s) {
    int const         f = s.frobenius;
    std::vector<char> gen(idx(f + 1), 0);
    for (int d : brute_delta(s)) {
      gen[idx(d)] = 1;
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (int a = 0; a <= f; ++a) {
        for (int b = 0; a + b <= f; ++b) {
          if (gen[idx(a)] && gen[idx(b)] && !gen[idx(a + b)]) {
            gen[idx(a + b)] = 1;
            changed         = true;
          }
        }
      }
    }
    int count = 0;
    for (int x = 0; x <= f; ++x) {
      count += s.contains(x) && !gen[idx(x)];
    }
    return count;
  }

  bool brute_symmetric(BruteSemigroup const& s) {
    for (int x = 0; x <= s.frobenius; ++x) {
      if (s.contains(x) == s.contains(s.frobenius - x)) {
        return false;
      }
    }
    return true;
  }

  bool brute_pseudo_symmetric(BruteSemigroup const& s) {
    int const f = s.frobenius;
    if (f < 0 || f % 2 != 0) {
      return false;
    }
    for (int x = 0; x <= f; ++x) {
      if (2 * x != f && s.contains(x) == s.contains(f - x)) {
        return false;
      }
    }
    return !s.contains(f / 2);
  }

  bool brute_irreducible(BruteSemigroup const& s) {
    for (int y = 1; y < s.frobenius; ++y) {
      if (!s.contains(y) && is_semigroup(with_added(s, y).member)) {
        return false;
      }
    }
    return true;
  }

  bool brute_ursy(BruteSemigroup const& s) {
    return brute_removal(s, [](BruteSemigroup const& t) { return brute_symmetric(t); });
  }

  bool brute_urpsy(BruteSemigroup const& s) {
    return brute_removal(s, [](BruteSemigroup const& t) { return brute_pseudo_symmetric(t); });
  }

  bool brute_subset(BruteSemigroup const& a, BruteSemigroup const& b) {
    int const top = std::max(a.frobenius, b.frobenius);
    for (int x = 0; x <= top; ++x) {
      if (a.contains(x) && !b.contains(x)) {
        return false;
      }
    }
    return true;
  }

  std::string to_string(OracleReport const& r) {
    return (r.verdict == Verdict::Match ? "MATCH    " : "MISMATCH ") + r.operation + " on "
           + r.input + ": expected " + r.expected + ", got " + r.actual;
  }

}  // namespace semigaps::oracle
