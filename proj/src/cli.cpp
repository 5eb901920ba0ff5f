#include "frames/cli.hpp"

#include <functional>
#include <vector>

#include <CLI11.hpp>

#include "frames/canonical.hpp"
#include "frames/census.hpp"
#include "frames/coproduct.hpp"
#include "frames/homs.hpp"
#include "frames/spec_io.hpp"

namespace frames::cli {

namespace {

struct Options {
  std::string frame;
  std::string source;
  std::string target;
  std::string left;
  std::string right;
  std::string format = "dot";
  std::string output;
  std::size_t budget = 0;
  std::size_t n_max = 7;
  std::size_t corpus_max = 5;
  unsigned workers = 1;
};

SearchLimits search_limits(const Options& o) {
  SearchLimits l;
  if (o.budget) l.max_elements = o.budget;
  return l;
}

CoproductLimits coproduct_limits(const Options& o) {
  CoproductLimits l;
  if (o.budget) l.max_elements = o.budget;
  return l;
}

int print_homs(std::ostream& out, const std::string& title, const HomSet& homs) {
  out << title << "\n" << format_homset(homs);
  return kOk;
}

int run_validate(const Options& o, std::ostream& out) {
  Frame f = load_frame(o.frame);
  out << "VALID: " << f.size() << " elements, " << f.poset().covers().size() << " covers\n";
  return kOk;
}

int run_reconstruct(const Options& o, std::ostream& out) {
  Frame l = load_frame(o.frame);
  auto r = arr_s_frame(l, search_limits(o));
  out << "Arr<S,L>: " << r.arrows.size() << " arrows\n" << format_homset(r.arrows);
  out << "evaluation p -> p(a): " << r.evaluation.to_string() << "\n";
  out << "inverse l -> (a -> l): " << r.inverse.to_string() << "\n";
  out << "isomorphism verified: L ≅ Arr<S,L>\n";
  return kOk;
}

int run_coproduct(const Options& o, std::ostream& out) {
  auto sum = coproduct(load_frame(o.left), load_frame(o.right), coproduct_limits(o));
  out << format_coproduct(sum);
  return kOk;
}

int run_codiag(const Options& o, std::ostream& out) {
  Frame l = load_frame(o.frame);
  auto square = coproduct(l, l, coproduct_limits(o));
  auto nabla = codiagonal(square);
  out << "L+L: " << square.size() << " elements\n";
  for (Element e = 0; e < square.size(); ++e)
    out << "  " << square.frame().label(e) << " ↦ " << l.label(nabla(e)) << "\n";
  return kOk;
}

int run_order_check(const Options& o, std::ostream& out) {
  Frame k = o.source.empty() ? sierpinski() : load_frame(o.source);
  Frame l = load_frame(o.frame);
  auto homs = enumerate_homs(k, l, search_limits(o));
  auto ks = coproduct(k, k, coproduct_limits(o));
  auto ls = coproduct(l, l, coproduct_limits(o));
  std::size_t pairs = 0, comparable = 0, disagreements = 0;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    for (std::size_t j = 0; j < homs.size(); ++j) {
      ++pairs;
      const bool folded = order_by_codiagonal(ks, ls, homs[i], homs[j]);
      if (homs.leq(i, j)) ++comparable;
      if (folded != homs.leq(i, j)) {
        ++disagreements;
        out << "mismatch: map_" << i << " vs map_" << j << "\n";
      }
    }
  }
  out << "pairs: " << pairs << ", pointwise f <= g: " << comparable
      << ", codiagonal disagreements: " << disagreements << "\n";
  out << (disagreements ? "FAIL" : "PASS") << "\n";
  return disagreements ? kClaimViolated : kOk;
}

CensusOptions census_options(const Options& o) {
  CensusOptions c;
  c.workers = o.workers;
  return c;
}

int run_census(const Options& o, std::ostream& out) {
  auto corpus = frames_corpus(o.corpus_max);
  auto records = census(o.n_max, corpus, census_options(o));
  if (o.output.empty()) {
    out << format_catalog(records);
  } else {
    write_catalog(o.output, records);
    out << "wrote " << records.size() << " records to " << o.output << "\n";
  }
  return kOk;
}

int run_check_paper(const Options& o, std::ostream& out) {
  auto corpus = frames_corpus(o.corpus_max);
  auto report = check_claims(o.n_max, corpus, census_options(o));
  out << report.format();
  return report.violated() ? kClaimViolated : kOk;
}

int run_export(const Options& o, std::ostream& out) {
  Frame f = load_frame(o.frame);
  if (o.format == "spec") {
    out << write_frame_spec(f);
  } else {
    out << to_dot(f, o.frame);
  }
  return kOk;
}

}  // namespace

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite frames: homomorphisms, coproducts and an exhaustive census"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto frame_arg = [&](CLI::App* sub) {
    sub->add_option("frame", o.frame, "Frame spec file or builtin name")->required();
  };
  auto budget_opt = [&](CLI::App* sub, const char* what) {
    sub->add_option("--budget", o.budget, what);
  };

  auto* validate = app.add_subcommand("validate", "Validate a frame spec");
  frame_arg(validate);
  validate->callback([&] { action = [&] { return run_validate(o, out); }; });

  auto* homs = app.add_subcommand("homs", "Enumerate frame maps source -> target");
  homs->add_option("--source", o.source)->required();
  homs->add_option("--target", o.target)->required();
  budget_opt(homs, "Largest frame accepted by the search (default 12)");
  homs->callback([&] {
    action = [&] {
      return print_homs(out, "homs " + o.source + " -> " + o.target,
                        enumerate_homs(load_frame(o.source), load_frame(o.target),
                                       search_limits(o)));
    };
  });

  struct Listing {
    const char* name;
    const char* help;
    HomSet (*fn)(const Frame&, SearchLimits);
  };
  for (const auto& l : {Listing{"points", "Frame maps to T", &points},
                        Listing{"endos", "Endomorphisms", &endomorphisms},
                        Listing{"autos", "Automorphisms", &automorphisms}}) {
    auto* sub = app.add_subcommand(l.name, l.help);
    frame_arg(sub);
    budget_opt(sub, "Largest frame accepted by the search (default 12)");
    sub->callback([&, l] {
      action = [&, l] {
        return print_homs(out, std::string(l.name) + " " + o.frame,
                          l.fn(load_frame(o.frame), search_limits(o)));
      };
    });
  }

  auto* reconstruct = app.add_subcommand("reconstruct", "Rebuild L from the arrows S -> L");
  frame_arg(reconstruct);
  budget_opt(reconstruct, "Largest frame accepted by the search (default 12)");
  reconstruct->callback([&] { action = [&] { return run_reconstruct(o, out); }; });

  auto* sum = app.add_subcommand("coproduct", "Dump the coproduct of two frames");
  sum->add_option("left", o.left)->required();
  sum->add_option("right", o.right)->required();
  budget_opt(sum, "Largest coproduct accepted (default 4096)");
  sum->callback([&] { action = [&] { return run_coproduct(o, out); }; });

  auto* codiag = app.add_subcommand("codiag", "Codiagonal L+L -> L");
  frame_arg(codiag);
  budget_opt(codiag, "Largest coproduct accepted (default 4096)");
  codiag->callback([&] { action = [&] { return run_codiag(o, out); }; });

  auto* order = app.add_subcommand(
      "order-check", "Compare the codiagonal order test with the pointwise order on Arr<K,L>");
  frame_arg(order);
  order->add_option("--source", o.source, "Source frame K (default S)");
  budget_opt(order, "Largest frame accepted by the hom search (default 12)");
  order->callback([&] { action = [&] { return run_order_check(o, out); }; });

  auto* cen = app.add_subcommand("census", "Catalog of all frames up to a size");
  cen->add_option("--n-max", o.n_max, "Largest frame size (default 7)");
  cen->add_option("--corpus-max", o.corpus_max, "Generator corpus: all frames up to this size");
  cen->add_option("--output", o.output, "Catalog file (default stdout)");
  cen->add_option("--workers", o.workers, "Worker threads");
  cen->callback([&] { action = [&] { return run_census(o, out); }; });

  auto* claims = app.add_subcommand("check-paper", "Check the counting and uniqueness claims");
  claims->add_option("--n-max", o.n_max, "Largest frame size (default 7)");
  claims->add_option("--corpus-max", o.corpus_max, "Generator corpus: all frames up to this size");
  claims->add_option("--workers", o.workers, "Worker threads");
  claims->callback([&] { action = [&] { return run_check_paper(o, out); }; });

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram as DOT, or the frame spec");
  frame_arg(dot);
  dot->add_option("--format", o.format, "dot or spec")
      ->check(CLI::IsMember({"dot", "spec"}));
  dot->callback([&] { action = [&] { return run_export(o, out); }; });

  std::vector<const char*> argv{"frames"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    return action();
  } catch (const BudgetExceeded& e) {
    err << "BudgetExceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const CycleDetected& e) {
    err << "CycleDetected: " << e.what() << "\n";
  } catch (const NotALattice& e) {
    err << "NotALattice: " << e.what() << "\n";
  } catch (const NotDistributive& e) {
    err << "NotDistributive: " << e.what() << "\n";
  } catch (const DegenerateFrame& e) {
    err << "DegenerateFrame: " << e.what() << "\n";
  } catch (const FrameError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace frames::cli
