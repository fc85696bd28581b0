#include "shellkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "shellkit/io.hpp"
#include "shellkit/shellkit.hpp"
#include "shellkit/verify.hpp"

namespace shellkit {
namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
};

GraphKind graph_kind(const std::string& s) { return s == "hasse" ? GraphKind::Hasse : GraphKind::Dual; }

FacetFile load_sorted(const std::string& path, std::string_view command) {
  FacetFile f = parse_file(path);
  if (f.mode != Mode::Sorted) throw UsageError(std::string(command) + " expects mode=sorted input");
  return f;
}

FacetFile load_tuple(const std::string& path, std::string_view command) {
  FacetFile f = parse_file(path);
  if (f.mode != Mode::Tuple) throw UsageError(std::string(command) + " expects mode=tuple input");
  return f;
}

int verdict(Context& c, bool holds) {
  c.out << (holds ? "holds\n" : "fails\n");
  return holds ? kExitHolds : kExitFails;
}

template <class F>
int report_shelling(Context& c, std::span<const F> seq) {
  const ShellingResult r = is_shelling_order(seq);
  if (r) {
    c.out << "holds\n";
    for (const auto& s : r.witness->steps) c.out << "  i=" << s.i << " j=" << s.j << " z=" << s.z << "\n";
    return kExitHolds;
  }
  const auto [j, i] = *r.failure;
  c.out << "fails\n  no z < " << j << " covers i=" << i << " (C_" << i << "=" << seq[static_cast<std::size_t>(i - 1)].to_string()
        << ", C_" << j << "=" << seq[static_cast<std::size_t>(j - 1)].to_string() << ")\n";
  return kExitFails;
}

int report_exchange(Context& c, const MatroidVerdict& v) {
  if (v.holds) return verdict(c, true);
  c.out << "fails\n  A=" << v.witness->a_set.to_string() << " B=" << v.witness->b_set.to_string()
        << " element=" << v.witness->element << "\n";
  return kExitFails;
}

template <class F>
void print_sequences(Context& c, const std::vector<std::vector<F>>& seqs) {
  for (const auto& s : seqs) c.out << to_string(std::span<const F>(s)) << "\n";
  c.out << "# " << seqs.size() << " linear extension" << (seqs.size() == 1 ? "" : "s") << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Shelling orders, Bruhat orders, matroids and promotion on pure simplicial complexes", "shellkit"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  std::string graph = "dual";
  bool perm = false;
  bool timing = false;
  std::string suite;
  SuiteOptions opts;

  std::function<int()> action;
  const auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "facet file")->required(); };
  const auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", graph, "graph used for promotion")->check(CLI::IsMember({"dual", "hasse"}));
  };

  auto* s = app.add_subcommand("check-shelling", "is the sequence a shelling order");
  add_file(s);
  s->callback([&] {
    action = [&] {
      const auto f = load_sorted(file, "check-shelling");
      return report_shelling(ctx, std::span<const KSubset>(f.subsets));
    };
  });

  s = app.add_subcommand("check-flag-shelling", "is (P(L_1), P(L_2), ...) a shelling order");
  add_file(s);
  s->callback([&] {
    action = [&] {
      const auto f = load_tuple(file, "check-flag-shelling");
      const auto facets = flag_complex(std::span<const FlagTuple>(f.tuples));
      return report_shelling(ctx, std::span<const FlagFacet>(facets));
    };
  });

  s = app.add_subcommand("check-matroid", "basis exchange property");
  add_file(s);
  s->callback([&] {
    action = [&] {
      const auto f = load_sorted(file, "check-matroid");
      return report_exchange(ctx, is_matroid(std::span<const KSubset>(f.subsets)));
    };
  });

  s = app.add_subcommand("check-quasi-exchange", "quasi-exchange property");
  add_file(s);
  s->callback([&] {
    action = [&] {
      const auto f = load_sorted(file, "check-quasi-exchange");
      return report_exchange(ctx, has_quasi_exchange(std::span<const KSubset>(f.subsets)));
    };
  });

  s = app.add_subcommand("check-coxeter-matroid", "maximality property over all of S_n");
  add_file(s);
  s->add_flag("--perm", perm, "order full permutations by the Bruhat order of S_n");
  s->callback([&] {
    action = [&] {
      const auto f = parse_file(file);
      if (f.mode == Mode::Sorted) return verdict(ctx, is_coxeter_matroid(std::span<const KSubset>(f.subsets)));
      return verdict(ctx, is_coxeter_matroid(std::span<const FlagTuple>(f.tuples), perm ? Order::Perm : Order::Conf));
    };
  });

  s = app.add_subcommand("check-order-ideal", "is the complex down-closed in its quotient");
  add_file(s);
  s->callback([&] {
    action = [&] {
      const auto f = parse_file(file);
      if (f.mode == Mode::Sorted) return verdict(ctx, is_order_ideal(std::span<const KSubset>(f.subsets)));
      return verdict(ctx, is_order_ideal(std::span<const FlagTuple>(f.tuples)));
    };
  });

  s = app.add_subcommand("check-linear-extension", "is the sequence a linear extension of its support");
  add_file(s);
  s->callback([&] {
    action = [&] {
      const auto f = parse_file(file);
      if (f.mode == Mode::Sorted) {
        return verdict(ctx, is_linear_extension(std::span<const KSubset>(f.subsets), Order::Gale));
      }
      return verdict(ctx, is_linear_extension(std::span<const FlagTuple>(f.tuples), Order::Conf));
    };
  });

  s = app.add_subcommand("list-extensions", "every linear extension, in enumeration order");
  add_file(s);
  s->callback([&] {
    action = [&] {
      const auto f = parse_file(file);
      if (f.mode == Mode::Sorted) {
        print_sequences(ctx, linear_extensions(std::span<const KSubset>(f.subsets), Order::Gale));
      } else {
        print_sequences(ctx, linear_extensions(std::span<const FlagTuple>(f.tuples), Order::Conf));
      }
      return kExitHolds;
    };
  });

  s = app.add_subcommand("find-shelling", "search for a (flag) shelling order");
  add_file(s);
  s->callback([&] {
    action = [&] {
      const auto f = parse_file(file);
      if (f.mode == Mode::Sorted) {
        const auto found = find_shelling_order(std::span<const KSubset>(f.subsets));
        if (!found) return ctx.out << "no shelling order\n", kExitFails;
        ctx.out << serialize_sequence(std::span<const KSubset>(*found), f.n);
        return kExitHolds;
      }
      const auto facets = flag_complex(std::span<const FlagTuple>(f.tuples));
      const auto found = find_shelling_order(std::span<const FlagFacet>(facets));
      if (!found) return ctx.out << "no flag shelling order\n", kExitFails;
      std::vector<FlagTuple> tuples;
      for (const auto& ff : *found) tuples.push_back(ff.tuple());
      ctx.out << serialize_sequence(std::span<const FlagTuple>(tuples), f.n);
      return kExitHolds;
    };
  });

  s = app.add_subcommand("barycentric", "the coset union B(X) inside Conf_k([n])");
  add_file(s);
  s->callback([&] {
    action = [&] {
      const auto f = load_sorted(file, "barycentric");
      const auto b = barycentric(std::span<const KSubset>(f.subsets));
      ctx.out << serialize_complex(std::span<const FlagTuple>(b), f.n);
      return kExitHolds;
    };
  });

  for (const char* name : {"promote", "evacuate"}) {
    s = app.add_subcommand(name, std::string(name) + " a sequence through its dual or Hasse graph");
    add_file(s);
    add_graph(s);
    const bool is_promote = std::string_view(name) == "promote";
    s->callback([&, is_promote] {
      action = [&, is_promote] {
        const auto f = parse_file(file);
        const GraphKind kind = graph_kind(graph);
        if (f.mode == Mode::Sorted) {
          const std::span<const KSubset> seq(f.subsets);
          const auto r = is_promote ? promote(seq, kind) : evacuate(seq, kind);
          ctx.out << serialize_sequence(std::span<const KSubset>(r), f.n);
        } else {
          const std::span<const FlagTuple> seq(f.tuples);
          const auto r = is_promote ? promote(seq, kind) : evacuate(seq, kind);
          ctx.out << serialize_sequence(std::span<const FlagTuple>(r), f.n);
        }
        return kExitHolds;
      };
    });
  }

  s = app.add_subcommand("isomorphic", "is some relabeling sigma in S_n mapping A onto B");
  s->add_option("a", file, "first sequence")->required();
  s->add_option("b", file2, "second sequence")->required();
  s->callback([&] {
    action = [&] {
      const auto a = load_sorted(file, "isomorphic");
      const auto b = load_sorted(file2, "isomorphic");
      return verdict(ctx, are_isomorphic(std::span<const KSubset>(a.subsets), std::span<const KSubset>(b.subsets)));
    };
  });

  s = app.add_subcommand("export-dot", "DOT rendering of the dual or Hasse graph");
  add_file(s);
  add_graph(s);
  s->callback([&] {
    action = [&] {
      const auto f = parse_file(file);
      if (f.mode == Mode::Sorted) {
        ctx.out << export_dot(std::span<const KSubset>(f.subsets), graph_kind(graph));
      } else {
        ctx.out << export_dot(std::span<const FlagTuple>(f.tuples), graph_kind(graph));
      }
      return kExitHolds;
    };
  });

  s = app.add_subcommand("verify", "run an exhaustive or randomized verification sweep");
  std::vector<std::string> names;
  for (auto n : suite_names()) names.emplace_back(n);
  s->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(names));
  s->add_option("--n", opts.n, "universe size for exhaustive sweeps");
  s->add_option("--k", opts.k, "facet size for exhaustive sweeps");
  s->add_option("--seed", opts.seed, "seed of the random corpus");
  s->add_option("--samples", opts.samples, "random shelling orders to add (corpus suites)");
  s->add_option("--max-facets", opts.max_facets, "largest exhaustive shelling order (corpus suites)");
  s->add_option("--random-n", opts.random_n, "universe of the random corpus");
  s->add_option("--random-k", opts.random_k, "facet size of the random corpus");
  s->add_option("--max-h", opts.random_max_h, "longest random shelling order");
  s->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  s->add_flag("--timing", timing, "print the wall-clock duration to stderr");
  s->callback([&] {
    action = [&] {
      const RunReport r = run_suite(suite, opts);
      ctx.out << r.to_text();
      if (timing) ctx.err << "duration_ms: " << r.duration.count() << "\n";
      return r.ok() ? kExitHolds : kExitFails;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace shellkit
