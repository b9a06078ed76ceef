#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "rothkit/bundle_maps.hpp"
#include "rothkit/chow_ring.hpp"
#include "rothkit/cohomology.hpp"
#include "rothkit/error.hpp"
#include "rothkit/expr.hpp"
#include "rothkit/roth.hpp"
#include "rothkit/scrolls.hpp"
#include "rothkit/serialize.hpp"

namespace rothkit::cli {

namespace {

using nlohmann::json;

constexpr const char* kUsage =
    "usage:\n"
    "  rothkit [--json] scroll info <tuple>\n"
    "  rothkit [--json] scroll degenerates <general> <special>\n"
    "  rothkit [--json] scroll section <tuple>\n"
    "  rothkit [--json] scroll normal-bundle <tuple> --select <i>\n"
    "  rothkit [--json] bundle surjects <source> <target> [--witness] [--verify]\n"
    "  rothkit [--json] roth report --a <tuple> --b <int> [--verify]\n"
    "  rothkit [--json] chow eval --a <tuple> [--b <int>] <expr>\n"
    "  rothkit [--json] cohom --twists <tuple> --a <int> --b <int>\n"
    "  rothkit [--json] bound castelnuovo --d <int> --n <int> --N <int>\n"
    "  rothkit [--json] harris-search --n <int> --max <int>\n"
    "tuples are comma-separated integers without spaces, e.g. 0,0,2,3\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Twists tuple_arg(const std::string& text, const char* what) {
  try {
    return parse_tuple(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

struct Options {
  bool json = false;
  std::string tuple_a;
  std::string tuple_b;
  std::int64_t select = 0;
  bool witness = false;
  bool verify = false;
  std::int64_t b = 0;
  std::int64_t a = 0;
  std::int64_t d = 0;
  std::int64_t n = 0;
  std::int64_t big_n = 0;
  std::int64_t max = 0;
  std::string expression;
};

void emit(std::ostream& out, const Options& opt, const json& j, const std::string& text) {
  if (opt.json)
    out << j.dump(2) << '\n';
  else
    out << text;
}

void run_scroll_info(const Options& opt, std::ostream& out) {
  const ScrollSpec s(tuple_arg(opt.tuple_a, "scroll"));
  emit(out, opt, to_json(s), to_text(s));
}

void run_scroll_degenerates(const Options& opt, std::ostream& out) {
  const ScrollSpec g(tuple_arg(opt.tuple_a, "general"));
  const ScrollSpec s(tuple_arg(opt.tuple_b, "special"));
  const bool v = degenerates_to(g, s);
  emit(out, opt, {{"general", g.twists()}, {"special", s.twists()}, {"degenerates", v}},
       std::string(v ? "true" : "false") + "\n");
}

void run_scroll_section(const Options& opt, std::ostream& out) {
  const ScrollSpec big(tuple_arg(opt.tuple_a, "scroll"));
  const ScrollSpec g = generic_hyperplane_section(big);
  emit(out, opt, {{"scroll", big.twists()}, {"section", g.twists()}}, g.to_string() + "\n");
}

void run_scroll_normal_bundle(const Options& opt, std::ostream& out) {
  const ScrollSpec s(tuple_arg(opt.tuple_a, "scroll"));
  if (opt.select < 0) throw DomainError("summand index must be non-negative");
  const Twists t = subscroll_normal_bundle(s, static_cast<std::size_t>(opt.select));
  emit(out, opt, {{"scroll", s.twists()}, {"selected", opt.select}, {"twists", t}},
       format_tuple(t) + "\n");
}

void run_bundle_surjects(const Options& opt, std::ostream& out) {
  const BundleMapSpec spec(tuple_arg(opt.tuple_a, "source"), tuple_arg(opt.tuple_b, "target"));
  const bool v = surjection_exists(spec);
  json j{{"source", spec.source()}, {"target", spec.target()}, {"surjects", v},
         {"witness", nullptr}, {"full_rank", nullptr}};
  std::string text = std::string("surjects=") + (v ? "true" : "false") + "\n";
  if (v && (opt.witness || opt.verify)) {
    const WitnessMatrix t = witness_matrix(spec);
    if (opt.witness) {
      j["witness"] = to_json(t);
      text += "witness:\n" + t.to_string();
    }
    if (opt.verify) {
      const bool ok = verify_full_rank(t);
      j["full_rank"] = ok;
      text += std::string("full_rank=") + (ok ? "true" : "false") + "\n";
    }
  }
  emit(out, opt, j, text);
}

void run_roth_report(const Options& opt, std::ostream& out) {
  const RothData data(tuple_arg(opt.tuple_a, "--a"), opt.b);
  const RothReport r = report(data);
  json j{{"report", to_json(r)}, {"verification", nullptr}};
  std::string text = to_text(r);
  if (opt.verify) {
    const Verification v = verify_identities(data);
    j["verification"] = to_json(v);
    text += to_text(v);
  }
  emit(out, opt, j, text);
}

void run_chow_eval(const Options& opt, std::ostream& out, bool has_b) {
  const ChowContext ctx = ChowContext::roth_scroll(tuple_arg(opt.tuple_a, "--a"));
  const auto ast = expr::parse(opt.expression);
  const ChowClass c = expr::evaluate(*ast, ctx, has_b ? std::optional(opt.b) : std::nullopt);
  json j = to_json(c);
  j["expression"] = expr::print(*ast);
  std::string text = "class=" + c.to_string() + "\n";
  if (!j["degree"].is_null()) text += "degree=" + degree(c).get_str() + "\n";
  emit(out, opt, j, text);
}

void run_cohom(const Options& opt, std::ostream& out) {
  const BundleContext ctx(tuple_arg(opt.tuple_a, "--twists"));
  const CohomologyTable t = line_bundle_cohomology(ctx, opt.a, opt.b);
  json j = to_json(t);
  j["twists"] = ctx.twists();
  j["a"] = opt.a;
  j["b"] = opt.b;
  emit(out, opt, j, t.to_string() + "\n");
}

void run_castelnuovo(const Options& opt, std::ostream& out) {
  const CastelnuovoParams p = castelnuovo_params(opt.d, opt.n, opt.big_n);
  json j = to_json(p);
  j["d"] = opt.d;
  j["n"] = opt.n;
  j["N"] = opt.big_n;
  emit(out, opt, j, to_text(p));
}

void run_harris(const Options& opt, std::ostream& out) {
  const auto degrees = harris_counterexample_search(opt.n, opt.max);
  emit(out, opt, {{"n", opt.n}, {"max", opt.max}, {"degrees", degrees}},
       "degrees=" + (degrees.empty() ? std::string("none") : format_tuple(degrees)) + "\n");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  std::function<void()> action;

  CLI::App app{"Intersection theory on rational normal scrolls and Roth varieties", "rothkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Emit JSON instead of text");

  auto* scroll = app.add_subcommand("scroll", "Rational normal scroll queries");
  scroll->require_subcommand(1);
  auto* info = scroll->add_subcommand("info", "Dimension, degree, ambient space and vertex");
  info->add_option("tuple", opt.tuple_a, "Twists a_0,...,a_k")->required();
  info->callback([&] { action = [&] { run_scroll_info(opt, out); }; });

  auto* degen = scroll->add_subcommand("degenerates", "Whether <special> is a degeneration of <general>");
  degen->add_option("general", opt.tuple_a)->required();
  degen->add_option("special", opt.tuple_b)->required();
  degen->callback([&] { action = [&] { run_scroll_degenerates(opt, out); }; });

  auto* section = scroll->add_subcommand("section", "Generic hyperplane section");
  section->add_option("tuple", opt.tuple_a)->required();
  section->callback([&] { action = [&] { run_scroll_section(opt, out); }; });

  auto* normal = scroll->add_subcommand("normal-bundle", "Normal bundle of a directrix curve");
  normal->add_option("tuple", opt.tuple_a)->required();
  normal->add_option("--select", opt.select, "Index into the sorted tuple")->required();
  normal->callback([&] { action = [&] { run_scroll_normal_bundle(opt, out); }; });

  auto* bundle = app.add_subcommand("bundle", "Maps of split bundles on P^1");
  bundle->require_subcommand(1);
  auto* surj = bundle->add_subcommand("surjects", "Whether O(source) -> O(target) can be onto");
  surj->add_option("source", opt.tuple_a)->required();
  surj->add_option("target", opt.tuple_b)->required();
  surj->add_flag("--witness", opt.witness, "Print the explicit surjection matrix");
  surj->add_flag("--verify", opt.verify, "Check the witness has full rank everywhere");
  surj->callback([&] { action = [&] { run_bundle_surjects(opt, out); }; });

  auto* roth = app.add_subcommand("roth", "Roth variety invariants");
  roth->require_subcommand(1);
  auto* rep = roth->add_subcommand("report", "All invariants of X in |bH + F|");
  rep->add_option("--a", opt.tuple_a, "Positive scroll twists a_1,...,a_{n-1}")->required();
  rep->add_option("--b", opt.b, "Coefficient b")->required();
  rep->add_flag("--verify", opt.verify, "Recompute the identities in the Chow ring");
  rep->callback([&] { action = [&] { run_roth_report(opt, out); }; });

  auto* chow = app.add_subcommand("chow", "Chow ring of the desingularized scroll");
  chow->require_subcommand(1);
  auto* eval = chow->add_subcommand("eval", "Evaluate a ring expression");
  eval->add_option("--a", opt.tuple_a, "Positive scroll twists a_1,...,a_{n-1}")->required();
  auto* b_opt = eval->add_option("--b", opt.b, "Coefficient b for X and CX");
  eval->add_option("expr", opt.expression, "Expression over H F K X PL B C CX")->required();
  eval->callback([&] { action = [&] { run_chow_eval(opt, out, b_opt->count() > 0); }; });

  auto* cohom = app.add_subcommand("cohom", "Cohomology of O(aH + bF) on P(E*)");
  cohom->add_option("--twists", opt.tuple_a, "Twists of E")->required();
  cohom->add_option("--a", opt.a)->required();
  cohom->add_option("--b", opt.b)->required();
  cohom->callback([&] { action = [&] { run_cohom(opt, out); }; });

  auto* bound = app.add_subcommand("bound", "Genus bounds");
  bound->require_subcommand(1);
  auto* castel = bound->add_subcommand("castelnuovo", "Harris' geometric genus bound");
  castel->add_option("--d", opt.d)->required();
  castel->add_option("--n", opt.n)->required();
  castel->add_option("--N", opt.big_n)->required();
  castel->callback([&] { action = [&] { run_castelnuovo(opt, out); }; });

  auto* harris = app.add_subcommand("harris-search", "Counterexamples A x P^{n-1} to the vanishing claim");
  harris->add_option("--n", opt.n)->required();
  harris->add_option("--max", opt.max)->required();
  harris->callback([&] { action = [&] { run_harris(opt, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << kUsage;
    return 2;
  }

  try {
    if (!action) throw UsageError("no command given");
    action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << kUsage;
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n' << kUsage;
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace rothkit::cli
