// semigaps - gap-structure analytics for numerical semigroups

#include "semigaps/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "semigaps/classify.hpp"
#include "semigaps/enumerate.hpp"
#include "semigaps/errors.hpp"
#include "semigaps/oracle.hpp"

namespace semigaps::cli {

  namespace {

    std::string join(std::vector<int> const& v, char const* sep = ",") {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? sep : "") + std::to_string(v[i]);
      }
      return out;
    }

    std::string text_line(NumericalSemigroup const& s) {
      auto const          p  = gap_profile(s);
      auto const          pf = pseudo_frobenius(s);
      std::ostringstream os;
      os << to_string(s) << "  F=" << s.frobenius() << " g=" << p.genus << " l=" << p.l_count
         << " m=" << s.multiplicity() << " e=" << s.embedding_dimension()
         << " t=" << pf.type_count() << " PF={" << join(pf.values) << "}";
      if (p.l_count == 0) {
        os << " symmetric";
      } else if (p.l_count == 1) {
        os << " pseudo-symmetric";
      }
      return os.str();
    }

    void write_dot(std::string const& path, SemigroupTree const& tree) {
      std::ofstream file(path);
      if (!file) {
        throw InvalidArgument("cannot open " + path + " for writing");
      }
      file << to_dot(tree);
    }

    json tree_record(SemigroupTree const& tree, TreeNode const& node) {
      json r     = to_record(node.semigroup);
      r["depth"] = node.depth;
      r["label"] = node.label;
      if (node.parent >= 0) {
        r["parent"]
            = tree.nodes()[static_cast<std::size_t>(node.parent)].semigroup.min_generators();
      } else {
        r["parent"] = nullptr;
      }
      return r;
    }

    void print_tree_nodes(std::ostream&            out,
                          SemigroupTree const&     tree,
                          std::span<TreeNode const> nodes,
                          bool                     as_json) {
      for (auto const& n : nodes) {
        if (as_json) {
          out << tree_record(tree, n).dump() << '\n';
        } else {
          out << std::string(static_cast<std::size_t>(2 * n.depth), ' ') << text_line(n.semigroup);
          if (n.parent >= 0) {
            auto const& parent = tree.nodes()[static_cast<std::size_t>(n.parent)].semigroup;
            out << "  (x=" << n.label << ", parent " << to_string(parent) << ")";
          }
          out << '\n';
        }
      }
    }

    struct Options {
      std::vector<int>             gens;
      int                          frobenius = 0;
      std::optional<int>           min_delta;
      std::optional<int>           level;
      int                          k = 0;
      int                          max_frobenius = 0;
      std::optional<std::uint64_t> max_work;
      std::string                  dot;
      bool                         as_json = false;
      bool                         count   = false;
      unsigned                     threads = 1;
    };

    int cmd_info(Options const& o, std::ostream& out) {
      auto const s = NumericalSemigroup::from_generators(o.gens);
      out << (o.as_json ? to_record(s).dump() : text_line(s)) << '\n';
      return 0;
    }

    int cmd_irreducibles(Options const& o, std::ostream& out) {
      if (o.frobenius < 1) {
        throw InvalidArgument("--frobenius must be at least 1");
      }
      auto const tree = irreducible_tree(o.frobenius, o.min_delta, {o.threads, nullptr});
      print_tree_nodes(out, tree, tree.nodes(), o.as_json);
      if (!o.dot.empty()) {
        write_dot(o.dot, tree);
      }
      return 0;
    }

    int cmd_interval_tree(Options const& o, std::ostream& out) {
      auto const i = NumericalSemigroup::from_generators(o.gens);
      if (o.level) {
        if (*o.level < 0) {
          throw InvalidArgument("--level must be non-negative");
        }
        auto const level = interval_level(i, *o.level, {o.threads, nullptr});
        for (auto const& s : level) {
          out << (o.as_json ? to_record(s).dump() : text_line(s)) << '\n';
        }
        if (!o.dot.empty()) {
          // A single level has no edges among its vertices; emit the full
          // tree so the file is meaningful.
          write_dot(o.dot, interval_tree(i, {o.threads, nullptr}));
        }
        return 0;
      }
      auto const tree = interval_tree(i, {o.threads, nullptr});
      print_tree_nodes(out, tree, tree.nodes(), o.as_json);
      if (!o.dot.empty()) {
        write_dot(o.dot, tree);
      }
      return 0;
    }

    int cmd_ksemigroups(Options const& o, std::ostream& out, std::ostream& err) {
      EnumerationRequest req;
      req.k         = o.k;
      req.frobenius = o.frobenius;
      req.mode      = o.count ? EnumerationMode::CountOnly : EnumerationMode::Full;
      req.max_work  = o.max_work;
      req.threads   = o.threads;
      auto const r  = enumerate_k_semigroups(req);
      if (!r.feasible) {
        err << "infeasible: " << r.reason << '\n';
      }
      if (o.count) {
        if (o.as_json) {
          json j{{"k", o.k},
                 {"frobenius", o.frobenius},
                 {"feasible", r.feasible},
                 {"total", r.total},
                 {"groups", json::array()}};
          for (auto const& g : r.groups) {
            j["groups"].push_back({{"root", g.root.min_generators()}, {"count", g.count}});
          }
          out << j.dump() << '\n';
        } else {
          out << r.total << '\n';
        }
        return 0;
      }
      for (auto const& g : r.groups) {
        if (!o.as_json) {
          out << "# root " << to_string(g.root) << " (" << g.count << ")\n";
        }
        for (auto const& s : g.members) {
          if (o.as_json) {
            json rec    = to_record(s);
            rec["root"] = g.root.min_generators();
            out << rec.dump() << '\n';
          } else {
            out << text_line(s) << '\n';
          }
        }
      }
      return 0;
    }

    int cmd_verify(Options const& o, std::ostream& out) {
      if (o.max_frobenius < 1) {
        throw InvalidArgument("--max-frobenius must be at least 1");
      }
      oracle::CrosscheckStats stats;
      auto const              mismatches = oracle::crosscheck(o.max_frobenius, &stats);
      for (auto const& m : mismatches) {
        out << oracle::to_string(m) << '\n';
      }
      out << "checked " << stats.semigroups << " semigroups with F <= " << o.max_frobenius << ", "
          << stats.comparisons << " comparisons, " << mismatches.size() << " mismatches\n";
      return mismatches.empty() ? 0 : 1;
    }

  }  // namespace

  json to_record(NumericalSemigroup const& s) {
    auto const c  = classify(s);
    auto const pf = pseudo_frobenius(s);
    json       r;
    r["frobenius"]           = s.frobenius();
    r["genus"]               = s.genus();
    r["l"]                   = c.l_count;
    r["multiplicity"]        = s.multiplicity();
    r["embedding_dimension"] = s.embedding_dimension();
    r["type"]                = pf.type_count();
    r["min_generators"]      = s.min_generators();
    r["gaps"]                = s.gaps();
    r["pseudo_frobenius"]    = pf.values;
    r["flags"]               = {{"symmetric", c.symmetric},
                                {"pseudo_symmetric", c.pseudo_symmetric},
                                {"irreducible", c.irreducible}};
    return r;
  }

  NumericalSemigroup from_record(json const& record) {
    return NumericalSemigroup::from_generators(record.at("min_generators").get<std::vector<int>>());
  }

  std::string to_dot(SemigroupTree const& tree) {
    std::ostringstream os;
    os << "digraph \""
       << (tree.kind() == TreeKind::IntervalTree ? "interval_tree" : "irreducible_tree")
       << "\" {\n  rankdir=BT;\n";
    for (auto const& n : tree.nodes()) {
      os << "  \"" << join(n.semigroup.min_generators()) << "\";\n";
    }
    for (auto const& n : tree.nodes()) {
      if (n.parent < 0) {
        continue;
      }
      auto const& parent = tree.nodes()[static_cast<std::size_t>(n.parent)].semigroup;
      os << "  \"" << join(n.semigroup.min_generators()) << "\" -> \""
         << join(parent.min_generators()) << "\" [label=\"" << n.label << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gap-structure analytics and K-semigroup enumeration for numerical semigroups",
                 "semigaps"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
      sub->add_flag("--json", o.as_json, "Emit JSON lines");
      sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1U, 1024U));
    };

    auto* info = app.add_subcommand("info", "Analytics of one semigroup");
    info->add_option("--gens", o.gens, "Generators, comma separated")
        ->required()
        ->delimiter(',');
    add_common(info);

    auto* irr = app.add_subcommand("irreducibles", "Irreducible semigroups with Frobenius number F");
    irr->add_option("--frobenius", o.frobenius, "Frobenius number")->required();
    irr->add_option("--min-delta", o.min_delta, "Keep only I with #(I \\ theta(I)) >= T");
    irr->add_option("--dot", o.dot, "Write the tree as Graphviz DOT");
    add_common(irr);

    auto* itree = app.add_subcommand("interval-tree", "Tree of [theta(I), I] for irreducible I");
    itree->add_option("--gens", o.gens, "Generators of I, comma separated")
        ->required()
        ->delimiter(',');
    itree->add_option("--level", o.level, "Print only this depth");
    itree->add_option("--dot", o.dot, "Write the tree as Graphviz DOT");
    add_common(itree);

    auto* ks = app.add_subcommand("ksemigroups", "Semigroups with Frobenius number F and l = K");
    ks->add_option("--l", o.k, "Number K of gaps of second kind")->required();
    ks->add_option("--frobenius", o.frobenius, "Frobenius number")->required();
    ks->add_flag("--count", o.count, "Print counts only");
    ks->add_option("--max-work", o.max_work, "Abort after this many tree expansions");
    add_common(ks);

    auto* verify = app.add_subcommand("verify", "Cross-check against brute force");
    verify->add_option("--max-frobenius", o.max_frobenius, "Largest Frobenius number")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    try {
      if (info->parsed()) {
        return cmd_info(o, out);
      }
      if (irr->parsed()) {
        return cmd_irreducibles(o, out);
      }
      if (itree->parsed()) {
        return cmd_interval_tree(o, out);
      }
      if (ks->parsed()) {
        return cmd_ksemigroups(o, out, err);
      }
      return cmd_verify(o, out);
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
  }

}  // namespace semigaps::cli
