#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "circlet/caps.hpp"
#include "circlet/contraction.hpp"
#include "circlet/errors.hpp"
#include "circlet/facet.hpp"
#include "circlet/inequality.hpp"
#include "circlet/oracle.hpp"
#include "circlet/separation.hpp"
#include "circlet/subtour.hpp"
#include "circlet/text_format.hpp"

namespace circlet::cli {
namespace {

template <typename Range>
std::string join(const Range& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ' ';
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>)
      out += to_string(v);
    else
      out += std::to_string(v);
  }
  return out;
}

const char* boolean(bool v) { return v ? "true" : "false"; }

Document read_document(const std::string& path, std::istream& in) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw DomainError("cannot open " + path);
    buffer << file.rdbuf();
  }
  return parse_document(buffer.str());
}

struct Context {
  std::istream& in;
  std::ostream& out;
  Caps caps;
  int threads = 1;
};

int cmd_coeffs(Context& cx, int n) {
  const Instance inst = Instance::circlet(n);
  const auto c = circlet_coeffs(inst);
  const auto f = tt_coeffs(inst);
  cx.out << "c: " << join(c.c) << "\n"
         << "rhs: " << c.rhs << "\n"
         << "f: " << join(f.f) << "\n"
         << "tt_rhs: " << f.rhs << "\n";
  return kOk;
}

int report_profile(Context& cx, const Instance& inst, const LengthProfile& p) {
  const auto check = check_circlet(inst, p);
  cx.out << "profile: " << join(p.totals()) << "\n"
         << "value=" << to_string(check.value) << " rhs=" << inst.n() - 2
         << " slack=" << to_string(check.slack)
         << " satisfied=" << boolean(check.satisfied) << "\n";
  return check.satisfied ? kOk : kViolation;
}

int cmd_check(Context& cx, const std::string& path) {
  const Document doc = read_document(path, cx.in);
  if (const auto* tour = std::get_if<Tour>(&doc)) {
    const Instance inst = Instance::circlet(tour->size());
    return report_profile(cx, inst, length_profile(inst, *tour));
  }
  if (const auto* x = std::get_if<FractionalPoint>(&doc)) {
    const Instance inst = Instance::circlet(x->n());
    return report_profile(cx, inst, project_weights(inst, *x));
  }
  throw DomainError("check needs a tour or weighted edges, not a bare instance");
}

int cmd_verify(Context& cx, int n) {
  const Instance inst = Instance::circlet(n);
  const auto k = circlet_coeffs(inst);
  const std::vector<Rational> cost(k.c.begin(), k.c.end());
  const Rational min = min_tour_cost(inst, cost, cx.caps);
  bool valid = min == k.rhs;
  cx.out << "min=" << to_string(min) << " rhs=" << k.rhs
         << " valid=" << boolean(valid) << "\n";
  if (n <= cx.caps.enumeration) {
    const auto scan = exhaustive_min_cost(inst, k.c, cx.caps, cx.threads);
    const bool ok = scan.min_cost == k.rhs;
    valid = valid && ok;
    cx.out << "exhaustive tours=" << scan.tours << " min=" << scan.min_cost
           << " tight=" << scan.argmin_count << " valid=" << boolean(ok) << "\n";
  }
  return valid ? kOk : kViolation;
}

int cmd_facet(Context& cx, int n) {
  const auto cert = certify_facet(Instance::circlet(n), cx.caps);
  cx.out << format_certificate(cert) << "\n";
  return cert.valid() ? kOk : kViolation;
}

int cmd_strength(Context& cx, int n) {
  const Instance inst = Instance::circlet(n);
  const Rational circlet = circlet_strength(inst);
  const Rational min_fx = min_fx_at_half_one(inst);
  cx.out << "circlet=" << to_string(circlet) << " tt_rhs=" << tt_coeffs(inst).rhs
         << " min_fx=" << to_string(min_fx) << "\n";
  if (n < 8) {
    cx.out << "crown=undefined\n";
    return kOk;
  }
  const Rational crown = crown_strength(inst);
  const auto bounds = lambda_bounds(inst);
  const char* stronger = circlet > crown ? "circlet" : circlet < crown ? "crown" : "equal";
  cx.out << "crown=" << to_string(crown) << " stronger=" << stronger << "\n"
         << "lambda circlet=" << to_string(bounds.circlet)
         << " crown=" << to_string(bounds.crown) << "\n";
  return kOk;
}

int cmd_contract(Context& cx, const std::string& path, bool verbose) {
  const Document doc = read_document(path, cx.in);
  const auto* tour = std::get_if<Tour>(&doc);
  if (tour == nullptr) throw DomainError("contract needs a tour");
  Instance::circlet(tour->size());
  const auto hits = detect_structures(*tour);
  cx.out << "hits=" << hits.size() << "\n";
  bool ok = true;
  for (const auto& hit : hits) {
    if (!hit.contractible) {
      cx.out << "skip " << to_string(hit.kind) << " u=" << hit.u << " j=" << hit.j
             << " k=" << hit.k << " noncontractible\n";
      continue;
    }
    const auto report = analyze_hit(*tour, hit);
    cx.out << format_report(report, verbose);
    if (!report.bound_holds() || report.aggregate_delta != report.direct_delta)
      ok = false;
  }
  return ok ? kOk : kViolation;
}

int cmd_separate(Context& cx, const std::string& path, const std::string& mode,
                 int budget, std::uint64_t seed) {
  const Document doc = read_document(path, cx.in);
  if (std::holds_alternative<Instance>(doc))
    throw DomainError("separate needs a point or tour");
  const FractionalPoint x = std::holds_alternative<Tour>(doc)
                                ? indicator(std::get<Tour>(doc))
                                : std::get<FractionalPoint>(doc);
  SeparationOptions options;
  options.mode = mode == "heuristic" ? SeparationMode::kHeuristic
                                     : SeparationMode::kExhaustive;
  options.budget = budget;
  options.seed = seed;
  options.threads = cx.threads;
  options.caps = cx.caps;
  const auto r = separate(x, options);
  cx.out << "mode=" << to_string(r.mode) << " candidates=" << r.candidates
         << " value=" << to_string(r.value) << " rhs=" << x.n() - 2
         << " violation=" << to_string(r.violation)
         << " violated=" << boolean(r.violated()) << "\n"
         << "labeling: " << join(r.labeling) << "\n";
  return r.violated() ? kViolation : kOk;
}

int cmd_el(Context& cx, int n) {
  const Instance inst(n);
  const auto points = el_points(inst, cx.caps);
  for (const auto& p : points) cx.out << "t: " << join(p) << "\n";
  cx.out << "count=" << points.size() << "\n";
  return kOk;
}

int cmd_buratti(Context& cx, int n, const std::vector<int>& lengths,
                const std::string& kind) {
  const Instance inst(n);
  const auto L = LengthMultiset::from_lengths(inst, lengths);
  const WalkKind walk = kind == "cycle" ? WalkKind::kCycle : WalkKind::kPath;
  bool ok = true;
  if (walk == WalkKind::kPath) {
    const auto cond = buratti_condition(inst, L);
    cx.out << "condition=" << (cond.holds ? "holds" : "fails");
    if (cond.violated_q) cx.out << " q=" << *cond.violated_q;
    cx.out << "\n";
    ok = cond.holds;
  }
  const bool feasible = edge_length_feasible(inst, L, walk, cx.caps);
  cx.out << "feasible=" << boolean(feasible) << " kind=" << kind << "\n";
  return ok && feasible ? kOk : kViolation;
}

int cmd_subtour(Context& cx, int n, const std::string& lambda_text) {
  const Instance inst = Instance::circlet(n);
  FractionalPoint x(inst);
  if (lambda_text.empty()) {
    x = half_one_point(inst);
    cx.out << "point=half-one\n";
  } else {
    const auto lambda = parse_rational(lambda_text);
    if (!lambda) throw DomainError("bad lambda '" + lambda_text + "'");
    const auto lp = lambda_point(inst, *lambda);
    x = lp.point;
    cx.out << "point=lambda lambda=" << to_string(*lambda)
           << " box=" << boolean(lp.box_feasible) << "\n";
  }
  const auto check = subtour_feasible(x, cx.caps);
  cx.out << "subtour=" << (check.feasible ? "feasible" : "infeasible")
         << " witness=" << check.describe() << "\n";
  const int circlet = report_profile(cx, inst, project_weights(inst, x));
  return check.feasible && circlet == kOk ? kOk : kViolation;
}

int cmd_gap(Context& cx, int n) {
  const Instance inst = Instance::circlet(n);
  const auto g = gap_instance(inst);
  const auto r = gap_ratio(inst, cx.caps);
  const auto e = eulerian_counterexample(inst);
  cx.out << "cost: " << join(g.cost) << "\n"
         << "tour_opt=" << to_string(r.tour_opt) << " lp_value="
         << to_string(r.lp_value) << " ratio=" << to_string(r.ratio) << "\n"
         << "eulerian edges=" << e.edge_count() << " cost=" << e.cost(g.cost)
         << " even=" << boolean(e.all_degrees_even())
         << " connected=" << boolean(e.connected()) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Circlet inequality toolkit", "circlet"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  int n = 0;
  std::string path;
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("n", n, "City count")->required();
  };
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", path, "Input file, '-' for stdin")->required();
  };

  auto* coeffs = app.add_subcommand("coeffs", "Circlet and TT coefficients");
  add_n(coeffs);
  auto* check = app.add_subcommand("check", "Circlet check of a tour or point");
  add_file(check);
  auto* verify = app.add_subcommand("verify", "Minimum circlet cost over all tours");
  add_n(verify);
  auto* facet = app.add_subcommand("facet", "Facet certificate");
  add_n(facet);
  auto* strength = app.add_subcommand("strength", "Circlet vs crown strength");
  add_n(strength);

  bool verbose = false;
  auto* contract = app.add_subcommand("contract", "Detect and contract structures");
  add_file(contract);
  contract->add_flag("--verbose", verbose, "Per-edge table");

  std::string mode = "exhaustive";
  int budget = 64;
  std::uint64_t seed = 1;
  auto* separate = app.add_subcommand("separate", "Search labelings for a violation");
  add_file(separate);
  separate->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "heuristic"}));
  separate->add_option("--budget", budget)->check(CLI::PositiveNumber);
  separate->add_option("--seed", seed);

  auto* el = app.add_subcommand("el", "Length profiles of all tours");
  add_n(el);

  std::vector<int> lengths;
  std::string kind = "path";
  auto* buratti = app.add_subcommand("buratti", "Length-multiset condition and feasibility");
  add_n(buratti);
  buratti->add_option("lengths", lengths, "Edge lengths")->required();
  buratti->add_option("--kind", kind)->check(CLI::IsMember({"path", "cycle"}));

  std::string lambda;
  auto* subtour = app.add_subcommand("subtour", "Subtour-LP check of the half/one or lambda point");
  add_n(subtour);
  subtour->add_option("--lambda", lambda, "p/q");

  auto* gap = app.add_subcommand("gap", "Integrality-gap instance");
  add_n(gap);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Context cx{in, out, Caps::from_env(), threads};
  try {
    if (*coeffs) return cmd_coeffs(cx, n);
    if (*check) return cmd_check(cx, path);
    if (*verify) return cmd_verify(cx, n);
    if (*facet) return cmd_facet(cx, n);
    if (*strength) return cmd_strength(cx, n);
    if (*contract) return cmd_contract(cx, path, verbose);
    if (*separate) return cmd_separate(cx, path, mode, budget, seed);
    if (*el) return cmd_el(cx, n);
    if (*buratti) return cmd_buratti(cx, n, lengths, kind);
    if (*subtour) return cmd_subtour(cx, n, lambda);
    if (*gap) return cmd_gap(cx, n);
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace circlet::cli
