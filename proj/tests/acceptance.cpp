// semigaps - gap-structure analytics for numerical semigroups
//
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "semigaps/classify.hpp"
#include "semigaps/cli.hpp"
#include "semigaps/enumerate.hpp"
#include "semigaps/oracle.hpp"
#include "semigaps/trees.hpp"

using namespace semigaps;
using cli::json;
using V = std::vector<int>;

namespace {

  // Collects failed expectations of one criterion.
  class Check {
   public:
    void expect(bool ok, std::string const& what) {
      if (!ok && _failures.size() < 8) {
        _failures.push_back(what);
      }
      _failed |= !ok;
    }

    bool failed() const noexcept {
      return _failed;
    }

    std::vector<std::string> const& failures() const noexcept {
      return _failures;
    }

   private:
    bool                     _failed = false;
    std::vector<std::string> _failures;
  };

  struct Criterion {
    std::string                 name;
    double                      limit_seconds;  // 0 for no limit
    std::function<void(Check&)> body;
  };

  std::string cli_output(std::vector<std::string> const& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
  }

  std::vector<json> json_lines(std::string const& text) {
    std::vector<json>  out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      out.push_back(json::parse(line));
    }
    return out;
  }

  V gens_of(NumericalSemigroup const& s) {
    return s.min_generators();
  }

  NumericalSemigroup gens(std::initializer_list<int> g) {
    return NumericalSemigroup::from_generators(g);
  }

  std::string show(V const& v) {
    std::string s = "<";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ">";
  }

  void example_irreducibles(Check& c) {
    int        code = 0;
    auto const recs = json_lines(cli_output({"irreducibles", "--frobenius", "11", "--json"}, code));
    c.expect(code == 0, "exit code");
    // child -> parent (nullopt at the root)
    std::map<V, V> expected = {
        {{6, 7, 8, 9, 10}, {}},
        {{3, 7}, {6, 7, 8, 9, 10}},
        {{4, 6, 9}, {6, 7, 8, 9, 10}},
        {{5, 7, 8, 9}, {6, 7, 8, 9, 10}},
        {{2, 13}, {4, 6, 9}},
        {{4, 5}, {5, 7, 8, 9}},
    };
    std::map<V, V> got;
    for (auto const& r : recs) {
      V const node   = r["min_generators"].get<V>();
      V const parent = r["parent"].is_null() ? V{} : r["parent"].get<V>();
      got[node]      = parent;
    }
    c.expect(recs.size() == 6, "6 records, got " + std::to_string(recs.size()));
    c.expect(got == expected, "node set or parent edges differ");
  }

  void example_interval_tree(Check& c) {
    auto const tree = interval_tree(gens({5, 7, 9, 11}));
    c.expect(tree.size() == 12, "12 nodes");
    std::vector<std::set<V>> levels(5);
    // (node, parent, label)
    std::set<std::tuple<V, V, int>> edges;
    for (auto const& n : tree.nodes()) {
      if (n.depth >= 5) {
        c.expect(false, "depth above 4");
        continue;
      }
      levels[static_cast<std::size_t>(n.depth)].insert(gens_of(n.semigroup));
      if (n.parent >= 0) {
        auto const& p = tree.nodes()[static_cast<std::size_t>(n.parent)].semigroup;
        edges.insert({gens_of(n.semigroup), gens_of(p), n.label});
      }
    }
    std::vector<std::set<V>> const b = {
        {{5, 7, 9, 11}},
        {{5, 9, 11, 12}, {5, 7, 11}, {5, 7, 9}},
        {{5, 11, 12, 14, 18}, {5, 9, 12, 16}, {5, 9, 11, 17}, {5, 7, 16, 18}},
        {{5, 12, 14, 16, 18}, {5, 11, 14, 17, 18}, {5, 9, 16, 17}},
        {{5, 14, 16, 17, 18}},
    };
    std::set<std::tuple<V, V, int>> const expected_edges = {
        {{5, 9, 11, 12}, {5, 7, 9, 11}, 7},
        {{5, 7, 11}, {5, 7, 9, 11}, 9},
        {{5, 7, 9}, {5, 7, 9, 11}, 11},
        {{5, 11, 12, 14, 18}, {5, 9, 11, 12}, 9},
        {{5, 9, 12, 16}, {5, 9, 11, 12}, 11},
        {{5, 9, 11, 17}, {5, 9, 11, 12}, 12},
        {{5, 7, 16, 18}, {5, 7, 11}, 11},
        {{5, 12, 14, 16, 18}, {5, 11, 12, 14, 18}, 11},
        {{5, 11, 14, 17, 18}, {5, 11, 12, 14, 18}, 12},
        {{5, 9, 16, 17}, {5, 9, 12, 16}, 12},
        {{5, 14, 16, 17, 18}, {5, 12, 14, 16, 18}, 12},
    };
    for (std::size_t d = 0; d < b.size(); ++d) {
      c.expect(tree.level(static_cast<int>(d)).size() == b[d].size(),
               "level " + std::to_string(d) + " size");
      c.expect(levels[d] == b[d], "level " + std::to_string(d) + " node set");
    }
    c.expect(tree.height() == 4, "height 4");
    c.expect(edges == expected_edges, "edge labels");
    c.expect(theta(gens({5, 7, 9, 11})) == gens({5, 14, 16, 17, 18}), "theta(I)");
  }

  void example_ksemigroups(Check& c) {
    int        code = 0;
    auto const recs =
        json_lines(cli_output({"ksemigroups", "--l", "6", "--frobenius", "11", "--json"}, code));
    c.expect(code == 0, "exit code");
    std::map<V, std::set<V>> groups;
    for (auto const& r : recs) {
      groups[r["root"].get<V>()].insert(r["min_generators"].get<V>());
      c.expect(r["l"] == 6 && r["frobenius"] == 11, "record has l = 6 and F = 11");
    }
    std::map<V, std::set<V>> const expected = {
        {{6, 7, 8, 9, 10},
         {{6, 7, 15, 16, 17},
          {6, 8, 13, 15, 17},
          {6, 9, 13, 14, 16, 17},
          {6, 10, 13, 14, 15, 17},
          {7, 8, 12, 13, 17, 18},
          {7, 9, 12, 13, 15, 17},
          {7, 10, 12, 13, 15, 16, 18},
          {8, 9, 12, 13, 14, 15, 19},
          {8, 10, 12, 13, 14, 15, 17, 19},
          {9, 10, 12, 13, 14, 15, 16, 17}}},
        {{4, 6, 9}, {{4, 13, 14, 15}}},
        {{5, 7, 8, 9}, {{5, 12, 13, 14, 16}}},
    };
    c.expect(recs.size() == 12, "12 records, got " + std::to_string(recs.size()));
    c.expect(groups == expected, "groups differ");
  }

  void pf_examples(Check& c) {
    auto const s14 = remove_element(gens({7, 8, 9, 10, 11, 12}), 10);
    auto const s18 = remove_element(gens({8, 9, 10, 11, 12, 13, 15}), 10);
    c.expect(second_kind_count(s14) == 2, "l = 2 for <7,...,12> \\ {10}");
    c.expect(second_kind_count(s18) == 3, "l = 3 for <8,...,15> \\ {10}");
    c.expect(pseudo_frobenius(s14).values == V{10, 13}, "generic PF {10,13}");
    c.expect(pf_fast_2sg(s14).values == V{10, 13}, "2-semigroup PF {10,13}");
    c.expect(pseudo_frobenius(s18).values == V{4, 7, 10, 14}, "generic PF {4,7,10,14}");
    c.expect(pf_fast_3sg(s18).values == V{4, 7, 10, 14}, "3-semigroup PF {4,7,10,14}");
    c.expect(oracle::brute_pf(oracle::from_gaps(s14.gaps())) == V{10, 13}, "oracle PF {10,13}");
    c.expect(oracle::brute_pf(oracle::from_gaps(s18.gaps())) == V{4, 7, 10, 14},
             "oracle PF {4,7,10,14}");
  }

  void l_examples(Check& c) {
    auto a = remove_element(remove_element(gens({5, 7, 9, 11}), 7), 12);
    c.expect(a.frobenius() == 13 && second_kind_count(a) == 4, "<5,7,9,11> \\ {7,12}: l = 4");
    auto b = remove_element(remove_element(gens({5, 8, 11, 12}), 11), 12);
    c.expect(b.frobenius() == 14 && second_kind_count(b) == 5, "<5,8,11,12> \\ {11,12}: l = 5");
    auto const s = NumericalSemigroup::from_gap_set({1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 13, 16, 17});
    c.expect(s.small_elements() == V{0, 10, 12, 14, 15}, "{0,10,12,14,15,18,...}");
    c.expect(s.frobenius() == 17 && second_kind_count(s) == 8, "F = 17 and l = 8");
    auto t = canonical_irreducible(17);
    for (int x : {9, 11, 13, 16}) {
      t = remove_element(t, x);
    }
    c.expect(t == s, "C(17) \\ {9,11,13,16}");
    c.expect(oracle::brute_l(oracle::from_gaps(s.gaps())) == 8, "oracle l = 8");
  }

  void oracle_sweep(Check& c) {
    oracle::CrosscheckStats stats;
    auto const              mismatches = oracle::crosscheck(15, &stats);
    for (auto const& m : mismatches) {
      c.expect(false, oracle::to_string(m));
    }
    c.expect(stats.semigroups > 0, "semigroups were checked");
    for (int f = 1; f <= 15; ++f) {
      std::uint64_t sum = 0;
      for (int k = 0; k <= f; ++k) {
        EnumerationRequest req;
        req.k         = k;
        req.frobenius = f;
        req.mode      = EnumerationMode::CountOnly;
        sum += enumerate_k_semigroups(req).total;
      }
      c.expect(sum == oracle::all_with_frobenius(f).size(),
               "sum over K differs from oracle total at F = " + std::to_string(f));
    }
  }

  void pruning_count(Check& c) {
    for (int f = 1; f <= 200; ++f) {
      c.expect(theta_gap_count(canonical_irreducible(f)) == (f - 1) / 2,
               "count of C(" + std::to_string(f) + ")");
    }
    for (int f = 1; f <= 20; ++f) {
      auto const tree = irreducible_tree(f);
      for (auto const& n : tree.nodes()) {
        if (n.parent >= 0) {
          auto const& p = tree.nodes()[static_cast<std::size_t>(n.parent)].semigroup;
          c.expect(theta_gap_count(n.semigroup) < theta_gap_count(p),
                   "no strict decrease on edge " + to_string(n.semigroup) + " -> " + to_string(p));
        }
      }
    }
  }

  void biconditionals(Check& c) {
    // Outside these two semigroups, where the removed generator exceeds the
    // parent's Frobenius number, the l = 2 and l = 3 characterizations hold.
    std::set<V> const ursy_known  = {{3, 4, 5}};
    std::set<V> const urpsy_known = {{3, 7, 8}};
    std::set<V>       ursy_seen, urpsy_seen;
    for (int f = 1; f <= 15; ++f) {
      for (auto const& b : oracle::all_with_frobenius(f)) {
        auto const s  = NumericalSemigroup::from_gap_set(oracle::brute_gaps(b));
        auto const r  = classify(s);
        auto const pf = pseudo_frobenius(s).values;
        auto const p  = gap_profile(s);
        auto const id = to_string(s);
        int const  l  = r.l_count;

        c.expect((l == 0) == r.symmetric && r.symmetric == (pf == V{f}), "l = 0 at " + id);
        c.expect((l == 1) == r.pseudo_symmetric
                     && r.pseudo_symmetric == (f % 2 == 0 && pf == V{f / 2, f}),
                 "l = 1 at " + id);
        if ((l == 2) != (r.ursy && s.multiplicity() >= 3)) {
          ursy_seen.insert(gens_of(s));
        }
        if ((l == 3) != (r.urpsy && !r.in_family_U)) {
          urpsy_seen.insert(gens_of(s));
        }
        c.expect((l % 2 == 0) == (f % 2 == 1), "parity at " + id);
        int const e = static_cast<int>(s.embedding_dimension());
        c.expect(l <= (e - 2) * p.n_count, "Wilf gap form at " + id);
      }
    }
    for (auto const& g : ursy_seen) {
      c.expect(ursy_known.count(g) == 1, "l = 2 / URSY fails at " + show(g));
    }
    for (auto const& g : urpsy_seen) {
      c.expect(urpsy_known.count(g) == 1, "l = 3 / URPSY fails at " + show(g));
    }
    c.expect(ursy_seen == ursy_known && urpsy_seen == urpsy_known,
             "exception set differs from the documented one");
  }

  void theta_pin(Check& c) {
    auto const i = gens({3, 7});
    c.expect(theta_gap_count(i) == 2, "#(<3,7> \\ theta) = 2");
    c.expect(oracle::brute_theta_gap_count(oracle::from_gaps(i.gaps())) == 2, "oracle agrees");
    EnumerationRequest req;
    req.k         = 6;
    req.frobenius = 11;
    auto const r  = enumerate_k_semigroups(req);
    c.expect(r.total == 12 && r.groups.size() == 3, "K = 6, F = 11 still gives 12 in 3 groups");
    for (auto const& g : r.groups) {
      c.expect(!(g.root == i), "<3,7> is not a root");
    }
  }

  void determinism(Check& c) {
    std::vector<std::vector<std::string>> const commands = {
        {"irreducibles", "--frobenius", "11", "--json"},
        {"interval-tree", "--gens", "5,7,9,11", "--json"},
        {"ksemigroups", "--l", "6", "--frobenius", "11", "--json"},
    };
    for (auto cmd : commands) {
      cmd.insert(cmd.end(), {"--threads", "1"});
      int        c1 = 0, c8 = 0;
      auto const one = cli_output(cmd, c1);
      cmd.back()     = "8";
      auto const eight = cli_output(cmd, c8);
      c.expect(c1 == 0 && c8 == 0, cmd.front() + " exit code");
      c.expect(!one.empty() && one == eight, cmd.front() + " output differs");
    }
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {"1 irreducible tree of F = 11", 1.0, example_irreducibles},
      {"2 interval tree of <5,7,9,11>", 1.0, example_interval_tree},
      {"3 semigroups with l = 6 and F = 11", 1.0, example_ksemigroups},
      {"4 pseudo-Frobenius numbers of a 2- and a 3-semigroup", 0, pf_examples},
      {"5 gaps of second kind after removals", 0, l_examples},
      {"6 oracle sweep F <= 15", 300.0, oracle_sweep},
      {"7 pruning count of C(F) and strict decrease", 0, pruning_count},
      {"8 characterization sweeps F <= 15", 0, biconditionals},
      {"9 #(<3,7> \\ theta) = 2", 0, theta_pin},
      {"10 JSON identical for 1 and 8 threads", 0, determinism},
  };

  int failed = 0;
  for (auto const& cr : criteria) {
    Check      check;
    auto const start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (std::exception const& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double const seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && seconds >= cr.limit_seconds) {
      check.expect(false, "took " + std::to_string(seconds) + " s");
    }
    std::ostringstream line;
    line.precision(3);
    line << std::fixed << (check.failed() ? "FAIL" : "PASS") << "  " << cr.name << "  ("
         << seconds << " s)";
    std::cout << line.str() << '\n';
    for (auto const& f : check.failures()) {
      std::cout << "      " << f << '\n';
    }
    failed += check.failed();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
