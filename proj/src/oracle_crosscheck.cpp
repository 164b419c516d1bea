// semigaps - gap-structure analytics for numerical semigroups

#include <algorithm>
#include <map>
#include <sstream>

#include "semigaps/classify.hpp"
#include "semigaps/core.hpp"
#include "semigaps/enumerate.hpp"
#include "semigaps/errors.hpp"
#include "semigaps/oracle.hpp"
#include "semigaps/trees.hpp"

namespace semigaps::oracle {

  namespace {

    std::string str(std::vector<int> const& v) {
      std::ostringstream os;
      os << '{';
      for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
      }
      os << '}';
      return os.str();
    }

    std::string str(int v) {
      return std::to_string(v);
    }

    std::string str(bool v) {
      return v ? "true" : "false";
    }

    std::string describe(BruteSemigroup const& s) {
      auto gens = str(brute_msg(s));
      gens.front() = '<';
      gens.back()  = '>';
      return gens + " gaps " + str(brute_gaps(s));
    }

    using GapSets = std::vector<std::vector<int>>;

    GapSets gap_sets(std::vector<NumericalSemigroup> const& v) {
      GapSets out;
      for (auto const& s : v) {
        out.push_back(s.gaps());
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    GapSets gap_sets(std::vector<BruteSemigroup const*> const& v) {
      GapSets out;
      for (auto const* s : v) {
        out.push_back(brute_gaps(*s));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::string str(GapSets const& v) {
      std::string out = "[" + std::to_string(v.size()) + " semigroups:";
      for (auto const& g : v) {
        out += " " + str(g);
      }
      return out + "]";
    }

    class Checker {
     public:
      explicit Checker(CrosscheckStats& stats) : _stats(stats) {}

      template <typename T>
      void check(std::string const& input, std::string const& op, T const& expected,
                 T const& actual) {
        ++_stats.comparisons;
        if (!(expected == actual)) {
          _mismatches.push_back({input, op, str(expected), str(actual), Verdict::Mismatch});
        }
      }

      std::vector<OracleReport> take() {
        return std::move(_mismatches);
      }

     private:
      CrosscheckStats&          _stats;
      std::vector<OracleReport> _mismatches;
    };

    void check_semigroup(Checker& c, BruteSemigroup const& b) {
      auto const                 gaps = brute_gaps(b);
      auto const                 s    = NumericalSemigroup::from_gap_set(gaps);
      std::string const          in   = describe(b);
      GapProfile const           p    = gap_profile(s);
      std::vector<int> const     pf   = brute_pf(b);
      int const                  l    = brute_l(b);

      c.check(in, "gap_profile.gaps", gaps, p.gaps);
      c.check(in, "gap_profile.small_elements", brute_small(b), p.small_elements);
      c.check(in, "gap_profile.first_kind", brute_first_kind(b), p.first_kind);
      c.check(in, "gap_profile.second_kind", brute_second_kind(b), p.second_kind);
      c.check(in, "gap_profile.genus", static_cast<int>(gaps.size()), p.genus);
      c.check(in, "gap_profile.n_count", static_cast<int>(brute_small(b).size()), p.n_count);
      c.check(in, "gap_profile.l_count", l, p.l_count);
      c.check(in, "gap_profile.h_value", brute_h(b), p.h_value);
      c.check(in, "minimal_generators", brute_msg(b), s.min_generators());
      c.check(in, "delta", brute_delta(b), delta(s));
      c.check(in, "theta_gap_count", brute_theta_gap_count(b), theta_gap_count(s));
      c.check(in, "pseudo_frobenius", pf, pseudo_frobenius(s).values);

      auto const r = classify(s);
      c.check(in, "classify.l_count", l, r.l_count);
      c.check(in, "classify.symmetric", brute_symmetric(b), r.symmetric);
      c.check(in, "classify.pseudo_symmetric", brute_pseudo_symmetric(b), r.pseudo_symmetric);
      c.check(in, "classify.irreducible", brute_irreducible(b), r.irreducible);
      c.check(in, "classify.ursy", brute_ursy(b), r.ursy);
      c.check(in, "classify.urpsy", brute_urpsy(b), r.urpsy);

      if (l == 2) {
        c.check(in, "pf_fast_2sg", pf, pf_fast_2sg(s).values);
      }
      if (l == 3) {
        c.check(in, "pf_fast_3sg", pf, pf_fast_3sg(s).values);
      }
    }

    void check_frobenius(Checker& c, int f, std::vector<BruteSemigroup> const& all) {
      std::string const in = "F=" + std::to_string(f);

      std::vector<BruteSemigroup const*> irreducibles;
      for (auto const& b : all) {
        if (brute_irreducible(b)) {
          irreducibles.push_back(&b);
        }
      }

      auto const nodes_of = [](SemigroupTree const& t) {
        std::vector<NumericalSemigroup> v;
        for (auto const& n : t.nodes()) {
          v.push_back(n.semigroup);
        }
        return v;
      };

      c.check(in, "irreducible_tree", gap_sets(irreducibles),
              gap_sets(nodes_of(irreducible_tree(f))));

      for (int t = 0; t <= (f - 1) / 2 + 1; ++t) {
        std::vector<BruteSemigroup const*> kept;
        for (auto const* b : irreducibles) {
          if (brute_theta_gap_count(*b) >= t) {
            kept.push_back(b);
          }
        }
        c.check(in + " threshold=" + std::to_string(t), "irreducible_tree(pruned)",
                gap_sets(kept), gap_sets(nodes_of(irreducible_tree(f, t))));
      }

      for (auto const* ib : irreducibles) {
        auto const i     = NumericalSemigroup::from_gap_set(brute_gaps(*ib));
        auto const dlt   = brute_delta(*ib);
        auto const li    = brute_l(*ib);
        std::vector<BruteSemigroup const*> expected;
        for (auto const& b : all) {
          if (brute_subset(b, *ib) && brute_delta(b) == dlt) {
            expected.push_back(&b);
          }
        }
        auto const tree = interval_tree(i);
        c.check(describe(*ib), "interval_tree", gap_sets(expected), gap_sets(nodes_of(tree)));
        for (auto const& n : tree.nodes()) {
          c.check(describe(*ib) + " node " + to_string(n.semigroup), "interval_tree.depth_l",
                  2 * n.depth + li, second_kind_count(n.semigroup));
          if (n.parent >= 0) {
            auto const& parent = tree.nodes()[static_cast<std::size_t>(n.parent)].semigroup;
            c.check(describe(*ib) + " node " + to_string(n.semigroup), "interval_tree.edge_label",
                    relative_frobenius(i, n.semigroup), n.label);
            c.check(describe(*ib) + " node " + to_string(n.semigroup), "interval_tree.h",
                    h_value(n.semigroup), n.label);
            c.check(describe(*ib) + " node " + to_string(n.semigroup), "interval_tree.parent",
                    parent.gaps(), adjoin_h(n.semigroup).gaps());
          }
        }
      }

      std::map<int, std::vector<BruteSemigroup const*>> by_l;
      for (auto const& b : all) {
        by_l[brute_l(b)].push_back(&b);
      }
      std::uint64_t sum = 0;
      for (int k = 0; k <= f; ++k) {
        auto const r = enumerate_k_semigroups({k, f, EnumerationMode::Full, std::nullopt, 1});
        std::vector<NumericalSemigroup> got;
        for (auto const& g : r.groups) {
          got.insert(got.end(), g.members.begin(), g.members.end());
        }
        std::string const req = "K=" + std::to_string(k) + " F=" + std::to_string(f);
        c.check(req, "enumerate_k_semigroups", gap_sets(by_l[k]), gap_sets(got));
        c.check(req, "enumerate_k_semigroups.total", static_cast<int>(got.size()),
                static_cast<int>(r.total));
        c.check(req, "feasible", !by_l[k].empty(), r.feasible);
        sum += r.total;
      }
      c.check(in, "sum over K of enumerate_k_semigroups", static_cast<int>(all.size()),
              static_cast<int>(sum));
    }

  }  // namespace

  std::vector<OracleReport> crosscheck(int f_max, CrosscheckStats* stats) {
    if (f_max > max_frobenius) {
      throw BoundExceeded("crosscheck is limited to F <= " + std::to_string(max_frobenius)
                          + ", got " + std::to_string(f_max));
    }
    CrosscheckStats local;
    Checker         c(stats != nullptr ? *stats : local);
    for (int f = 1; f <= f_max; ++f) {
      auto const all = all_with_frobenius(f);
      for (auto const& b : all) {
        check_semigroup(c, b);
        ++(stats != nullptr ? *stats : local).semigroups;
      }
      check_frobenius(c, f, all);
    }
    return c.take();
  }

}  // namespace semigaps::oracle
