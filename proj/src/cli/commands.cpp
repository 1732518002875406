#include "hedgelab/cli/commands.hpp"

#include "hedgelab/arbitrage.hpp"
#include "hedgelab/maxingale.hpp"
#include "hedgelab/pricing.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace hedgelab {

namespace {

struct Context {
  const CommandRequest& request;
  ModelDocument doc;
};

Json stopping_time_json(const FilteredSpace& space, const StoppingTime& tau) {
  Json out = Json::object();
  for (std::size_t w = 0; w < tau.size(); ++w) out[space.outcome_label(w)] = space.time_label(tau[w]);
  return out;
}

Json cell_json(const FilteredSpace& space, const std::vector<std::size_t>& cell) {
  Json out = Json::array();
  for (auto w : cell) out.push_back(space.outcome_label(w));
  return out;
}

Json strategy_json(const MarketModel& model, const ArbitrageWitness& witness) {
  const auto& space = model.space();
  Json revisions = Json::array();
  for (const auto& tau : witness.strategy.revisions) revisions.push_back(stopping_time_json(space, tau));
  Json positions = Json::array();
  for (const auto& theta : witness.strategy.positions) {
    Json per = Json::object();
    for (std::size_t w = 0; w < theta.size(); ++w) per[space.outcome_label(w)] = point_json(theta[w]);
    positions.push_back(std::move(per));
  }
  Json out{{"kind", to_string(witness.kind)},
           {"revisions", std::move(revisions)},
           {"positions", std::move(positions)},
           {"terminal_value", variable_json(space, witness.terminal_value)}};
  if (witness.price) out["price"] = variable_json(space, *witness.price);
  return out;
}

Json hull_json(const HullMembership& hull) {
  if (hull.member) {
    Json w = Json::array();
    for (const auto& v : hull.weights) w.push_back(format_rational(v));
    return Json{{"member", true}, {"weights", std::move(w)}};
  }
  return Json{{"member", false}, {"normal", point_json(hull.normal)}, {"offset", format_rational(hull.offset)}};
}

Json emm_json(const FilteredSpace& space, const EmmWitness& emm) {
  return Json{{"q", variable_json(space, RandomVariable(emm.q))}, {"margin", format_rational(emm.margin)}};
}

std::size_t time_or(const FilteredSpace& space, const std::optional<std::string>& label, std::size_t fallback) {
  return label ? space.time_index(*label) : fallback;
}

const std::string& required(const std::optional<std::string>& value, const char* option) {
  if (!value) throw InputError(std::string("missing option --") + option);
  return *value;
}

ScalarProcess select_process(const Context& ctx, const FilteredSpace& space, const std::string& name) {
  const bool negate = !name.empty() && name.front() == '-';
  const std::string base = negate ? name.substr(1) : name;
  ScalarProcess m;
  if (base == "S") {
    const auto model = build_model(ctx.doc);
    if (model.dim() != 1) throw InputError("process S needs a single-asset model");
    m = model.prices().coordinate(0);
  } else {
    m = find_process(ctx.doc, base);
  }
  if (negate) {
    for (auto& x : m) x = -x;
  }
  require_adapted(space, m);
  return m;
}

const RandomVariable& claim_of(const Context& ctx) {
  return find_variable(ctx.doc, ctx.request.claim.value_or("payoff"));
}

// Each handler fills verdict and certificates.
using Handler = std::function<void(const Context&, Json&)>;

void check_aip_cmd(const Context& ctx, Json& r) {
  const auto model = build_model(ctx.doc);
  const auto& space = model.space();
  const auto v = check_aip(model);
  r["verdict"] = v.holds ? "holds" : "fails";
  Json c{{"atoms_checked", v.atoms_checked}};
  if (!v.holds) {
    c["step"] = {space.time_label(*v.step), space.time_label(*v.step + 1)};
    c["atom"] = cell_json(space, space.partition(*v.step).cell(*v.atom));
    c["separator"] = hull_json(*v.certificate);
    c["witness"] = strategy_json(model, *v.witness);
  }
  r["certificates"] = std::move(c);
}

void check_aip_stopping_cmd(const Context& ctx, Json& r) {
  const auto model = build_model(ctx.doc);
  const auto& space = model.space();
  const auto v = check_aip_stopping(model, ctx.request.budget, ctx.request.seed);
  r["verdict"] = v.holds ? "holds" : "fails";
  Json c{{"exhaustive", v.exhaustive}, {"pairs_checked", v.pairs_checked}};
  if (!v.holds) {
    c["tau1"] = stopping_time_json(space, v.failing_pair->first);
    c["tau2"] = stopping_time_json(space, v.failing_pair->second);
    c["cell"] = cell_json(space, *v.failing_cell);
    c["separator"] = hull_json(*v.certificate);
  }
  r["certificates"] = std::move(c);
}

Json emm_result_json(const MarketModel& model, const EmmResult& e) {
  Json c{{"epsilon", format_rational(e.epsilon)}};
  if (e.emm) c["emm"] = emm_json(model.space(), *e.emm);
  if (e.arbitrage) c["arbitrage"] = strategy_json(model, *e.arbitrage);
  return c;
}

void check_na_cmd(const Context& ctx, Json& r) {
  const auto model = build_model(ctx.doc);
  const auto e = find_emm(model);
  r["verdict"] = e.emm ? "holds" : "fails";
  r["certificates"] = emm_result_json(model, e);
}

void find_emm_cmd(const Context& ctx, Json& r) {
  const auto model = build_model(ctx.doc);
  const auto e = find_emm(model);
  r["verdict"] = e.emm ? "found" : "none";
  r["certificates"] = emm_result_json(model, e);
}

void check_nupbr_cmd(const Context& ctx, Json& r) {
  const auto model = build_model(ctx.doc);
  const Rational floor = parse_rational(ctx.request.floor);
  const auto v = check_nupbr(model, floor);
  r["verdict"] = v.holds ? "holds" : "fails";
  Json c{{"floor", format_rational(floor)}, {"optimum", format_rational(v.optimum)}};
  if (v.witness) c["cone_direction"] = strategy_json(model, *v.witness);
  r["certificates"] = std::move(c);
}

void price_cmd(const Context& ctx, Json& r) {
  const auto model = build_model(ctx.doc);
  const auto& space = model.space();
  const auto res = superhedge_dp(model, claim_of(ctx));
  r["verdict"] = res.price.finite_everywhere() ? "finite" : "unbounded-below";
  Json prices = Json::object();
  for (std::size_t t = 0; t < space.time_count(); ++t) {
    prices[space.time_label(t)] = extended_json(space, res.price.values[t]);
  }
  Json hedges = Json::object();
  for (std::size_t k = 0; k < res.hedge.size(); ++k) {
    Json per = Json::array();
    const auto& cells = space.partition(k).cells();
    for (std::size_t a = 0; a < cells.size(); ++a) {
      per.push_back(Json{{"atom", cell_json(space, cells[a])},
                         {"theta", res.hedge[k][a] ? point_json(*res.hedge[k][a]) : Json(nullptr)}});
    }
    hedges[space.time_label(k)] = std::move(per);
  }
  r["certificates"] = Json{{"claim", ctx.request.claim.value_or("payoff")},
                           {"price_process", std::move(prices)},
                           {"hedge", std::move(hedges)}};
}

Json description_json(const FilteredSpace& space, const PortfolioMenu& menu, const MenuPricing& mp) {
  const auto& d = mp.description;
  Json lambda = Json::array();
  for (std::size_t w = 0; w < d.lambda.size(); ++w) {
    if (d.lambda[w]) lambda.push_back(space.outcome_label(w));
  }
  Json attaining = Json::array();
  const auto& cells = space.partition(d.time).cells();
  for (std::size_t a = 0; a < d.attaining.size(); ++a) {
    attaining.push_back(Json{{"atom", cell_json(space, cells[a])}, {"entry", menu.names[d.attaining[a]]}});
  }
  return Json{{"time", space.time_label(d.time)},
              {"pi", extended_json(space, d.pi)},
              {"lambda", std::move(lambda)},
              {"attaining", std::move(attaining)}};
}

void price_menu_cmd(const Context& ctx, Json& r) {
  const auto space = build_space(ctx.doc);
  const auto menu = build_menu(space, ctx.doc);
  const auto& claim = claim_of(ctx);
  const auto mp = menu_price_set(space, menu, claim);
  r["verdict"] = menu.entries.empty() ? "empty" : "priced";
  Json entries = Json::object();
  for (std::size_t i = 0; i < menu.entries.size(); ++i) {
    entries[menu.names[i]] = variable_json(space, mp.entry_prices[i]);
  }
  Json ext = Json::array();
  for (const auto& a : all_id_assignments(space, menu)) {
    Json names = Json::array();
    for (auto i : a) names.push_back(menu.names[i]);
    const auto v = menu_id_entry(space, menu, a);
    ext.push_back(Json{{"assignment", std::move(names)},
                       {"value", variable_json(space, v)},
                       {"price", variable_json(space, entry_price(space, menu.anchor, claim, v))}});
  }
  r["certificates"] = Json{{"entry_prices", std::move(entries)},
                           {"id_extension", std::move(ext)},
                           {"price_set", description_json(space, menu, mp)}};
}

void price_membership_cmd(const Context& ctx, Json& r) {
  const auto space = build_space(ctx.doc);
  const auto menu = build_menu(space, ctx.doc);
  const auto& claim = claim_of(ctx);
  const auto& p = find_variable(ctx.doc, required(ctx.request.price, "price"));
  const auto mp = menu_price_set(space, menu, claim);
  const bool member = menu_price_membership(space, mp.description, p);
  r["verdict"] = member ? "member" : "not-member";
  r["certificates"] = Json{{"price", variable_json(space, p)},
                           {"raw_menu_member", raw_menu_membership(space, menu, claim, p)},
                           {"price_set", description_json(space, menu, mp)}};
}

void closed_price_cmd(const Context& ctx, Json& r) {
  const auto space = build_space(ctx.doc);
  const auto menu = build_menu(space, ctx.doc);
  std::vector<SequenceSpec> seqs;
  std::vector<std::optional<RandomVariable>> chosen;
  for (const auto& s : ctx.doc.sequences) {
    seqs.push_back(s.spec);
    chosen.push_back(s.limit);
  }
  const auto rep = closed_price_invariance(space, menu, claim_of(ctx), seqs, chosen);
  r["verdict"] = rep.invariant ? "invariant" : "changed";
  Json limits = Json::array();
  for (std::size_t i = 0; i < rep.limits.size(); ++i) {
    limits.push_back(Json{{"sequence", ctx.doc.sequences[i].name},
                          {"canonical", rep.limits[i].canonical},
                          {"limit", variable_json(space, rep.limits[i].limit)},
                          {"price", variable_json(space, rep.limits[i].price)}});
  }
  r["certificates"] = Json{{"pi_before", extended_json(space, rep.pi_before)},
                           {"pi_after", extended_json(space, rep.pi_after)},
                           {"limits", std::move(limits)}};
}

Json alpha_json(const FilteredSpace& space, const LimitWitness& w) {
  Json prefix = Json::array();
  for (const auto& a : w.alpha_prefix) prefix.push_back(variable_json(space, a));
  Json tail = Json::array();
  for (const auto& a : w.alpha_tail) tail.push_back(variable_json(space, a));
  return Json{{"prefix", std::move(prefix)}, {"tail_kind", to_string(w.tail_kind)}, {"tail", std::move(tail)}};
}

void topology_cmd(const Context& ctx, Json& r) {
  const auto space = build_space(ctx.doc);
  const auto t = time_or(space, ctx.request.time, 0);
  const auto& op = ctx.request.subcommand;
  Json c{{"time", space.time_label(t)}};
  if (op == "pdist") {
    const auto& x = find_variable(ctx.doc, required(ctx.request.lhs, "lhs"));
    const auto& y = find_variable(ctx.doc, required(ctx.request.rhs, "rhs"));
    const auto hat = pdist_hat(space, t, x, y);
    r["verdict"] = format_rational(hat);
    c["pdist"] = format_rational(pdist(space, x, y));
    c["pdist_hat"] = format_rational(hat);
  } else if (op == "converges") {
    const auto& s = find_sequence(ctx.doc, required(ctx.request.sequence, "sequence"));
    const auto conv = converges(space, t, s.spec);
    r["verdict"] = conv.convergent ? "convergent" : "divergent";
    c["infimum"] = extended_json(space, conv.infimum);
    if (conv.limit) c["limit"] = variable_json(space, *conv.limit);
    if (conv.violating_outcome) c["violating_outcome"] = space.outcome_label(*conv.violating_outcome);
  } else if (op == "is-limit") {
    const auto& s = find_sequence(ctx.doc, required(ctx.request.sequence, "sequence"));
    RandomVariable z;
    if (ctx.request.limit) {
      z = find_variable(ctx.doc, *ctx.request.limit);
    } else if (s.limit) {
      z = *s.limit;
    } else {
      throw InputError("missing option --limit and the sequence declares no limit");
    }
    const auto w = is_limit(space, t, s.spec, z);
    r["verdict"] = w.accepted ? "limit" : "not-limit";
    c["candidate"] = variable_json(space, z);
    c["alpha"] = alpha_json(space, w);
    if (w.accepted) {
      const auto f = fatou_check(space, t, s.spec, z);
      c["fatou"] = Json{{"holds", f.holds}, {"first", f.first}, {"step", f.step},
                        {"liminf", extended_json(space, f.liminf)}};
    }
  } else if (op == "cauchy") {
    const auto& s = find_sequence(ctx.doc, required(ctx.request.sequence, "sequence"));
    const auto v = is_cauchy(space, t, s.spec);
    r["verdict"] = v.cauchy ? "cauchy" : "not-cauchy";
    if (!v.cauchy) c["pair"] = Json{{"n", v.n}, {"m", v.m}, {"distance", format_rational(v.distance)}};
  } else {
    throw InputError("unknown topology operation \"" + op + "\" (pdist, converges, is-limit, cauchy)");
  }
  r["certificates"] = std::move(c);
}

Json violation_json(const FilteredSpace& space, const MaxingaleViolation& v) {
  return Json{{"u", space.time_label(v.u)},
              {"t", space.time_label(v.t)},
              {"atom", cell_json(space, space.partition(v.u).cell(v.atom))},
              {"outcome", space.outcome_label(v.outcome)}};
}

void maxingale_cmd(const Context& ctx, Json& r) {
  const auto space = build_space(ctx.doc);
  const auto& name = required(ctx.request.process, "process");
  const auto m = select_process(ctx, space, name);
  const auto& op = ctx.request.subcommand;
  Json c{{"process", name}};
  if (op == "sub") {
    const auto sub = sub_maxingale_violation(space, m);
    const auto super = super_maxingale_violation(space, m);
    r["verdict"] = sub ? "not-sub-maxingale" : "sub-maxingale";
    c["super_maxingale"] = !super;
    if (sub) c["violation"] = violation_json(space, *sub);
    if (super) c["super_violation"] = violation_json(space, *super);
  } else if (op == "strong") {
    const auto v = is_strong_sub_maxingale(space, m, ctx.request.budget, ctx.request.seed);
    r["verdict"] = v.strong ? "strong-sub-maxingale" : "not-strong";
    c["exhaustive"] = v.exhaustive;
    c["pairs_checked"] = v.pairs_checked;
    c["stopping_times"] = v.stopping_times;
    if (v.definition_verdict) c["definition_verdict"] = *v.definition_verdict;
    if (v.violating_pair) {
      c["S"] = stopping_time_json(space, v.violating_pair->first);
      c["tau"] = stopping_time_json(space, v.violating_pair->second);
      c["outcome"] = space.outcome_label(*v.violating_outcome);
    }
  } else if (op == "lemma-suite") {
    std::vector<RandomVariable> xs;
    if (ctx.doc.payoff) xs.push_back(*ctx.doc.payoff);
    for (const auto& [n, x] : ctx.doc.claims) xs.push_back(x);
    for (const auto& [n, x] : ctx.doc.variables) xs.push_back(x);
    xs.push_back(m.back());
    const auto rep = run_lemma_suite(space, m, xs, ctx.request.budget, ctx.request.seed);
    r["verdict"] = rep.violations() == 0 ? "verified" : "violated";
    c["sub_maxingale"] = rep.sub_maxingale;
    c["exhaustive"] = rep.exhaustive;
    c["stopping_times"] = rep.stopping_times;
    Json checks = Json::array();
    for (const auto& check : rep.checks) {
      Json entry{{"name", check.name}, {"checks", check.checks}, {"violations", check.violations}};
      if (check.violations) entry["first_violation"] = check.first_violation;
      checks.push_back(std::move(entry));
    }
    c["checks"] = std::move(checks);
  } else {
    throw InputError("unknown maxingale operation \"" + op + "\" (sub, strong, lemma-suite)");
  }
  r["certificates"] = std::move(c);
}

// Searches adapted processes with atom values in {0, 1, 2} for a sub-maxingale
// that is not a strong sub-maxingale.
void strong_gap_cmd(const Context& ctx, Json& r) {
  if (ctx.request.subcommand != "strong-gap") {
    throw InputError("unknown experiment \"" + ctx.request.subcommand + "\" (strong-gap)");
  }
  const FilteredSpace space = ctx.request.model_path.empty()
                                  ? make_tree_space(uniform_shape(ctx.request.depth, 2))
                                  : build_space(ctx.doc);
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (time, atom)
  for (std::size_t t = 0; t < space.time_count(); ++t) {
    for (std::size_t a = 0; a < space.partition(t).size(); ++a) slots.emplace_back(t, a);
  }
  std::vector<int> digits(slots.size(), 0);
  std::size_t examined = 0, sub = 0, gaps = 0;
  bool exhaustive = true;
  std::optional<ScalarProcess> first_gap;
  for (;;) {
    if (examined == ctx.request.budget) {
      exhaustive = false;
      break;
    }
    ScalarProcess m(space.time_count(), RandomVariable(space.outcome_count()));
    for (std::size_t i = 0; i < slots.size(); ++i) {
      for (auto w : space.partition(slots[i].first).cell(slots[i].second)) m[slots[i].first][w] = digits[i];
    }
    ++examined;
    if (is_sub_maxingale(space, m)) {
      ++sub;
      if (!is_strong_sub_maxingale(space, m, 1u << 20, ctx.request.seed).strong) {
        ++gaps;
        if (!first_gap) first_gap = m;
      }
    }
    std::size_t pos = 0;
    while (pos < digits.size() && digits[pos] == 2) digits[pos++] = 0;
    if (pos == digits.size()) break;
    ++digits[pos];
  }
  r["verdict"] = gaps ? "gap-found" : "no-gap-found";
  Json c{{"outcomes", space.outcome_count()},
         {"times", space.time_count()},
         {"value_range", {0, 1, 2}},
         {"processes_examined", examined},
         {"exhaustive", exhaustive},
         {"sub_maxingales", sub},
         {"gaps", gaps},
         {"note", "exploratory search; no resolution of the open question is claimed"}};
  if (first_gap) {
    Json slices = Json::object();
    for (std::size_t t = 0; t < first_gap->size(); ++t) slices[space.time_label(t)] = variable_json(space, (*first_gap)[t]);
    c["first_gap"] = std::move(slices);
  }
  r["certificates"] = std::move(c);
}

void validate_cmd(const Json& document, Json& r) {
  const auto problems = check_document(document);
  r["verdict"] = problems.empty() ? "valid" : "invalid";
  r["certificates"] = Json{{"violations", problems}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"check-aip", check_aip_cmd},
      {"check-aip-stopping", check_aip_stopping_cmd},
      {"check-na", check_na_cmd},
      {"find-emm", find_emm_cmd},
      {"check-nupbr", check_nupbr_cmd},
      {"price", price_cmd},
      {"price-menu", price_menu_cmd},
      {"price-membership", price_membership_cmd},
      {"closed-price", closed_price_cmd},
      {"topology", topology_cmd},
      {"maxingale", maxingale_cmd},
      {"experiment", strong_gap_cmd},
  };
  return table;
}

void render(const Json& j, int indent, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    out << pad;
    if (j.is_object()) out << it.key() << ":";
    else out << "-";
    if (v.is_structured() && !v.empty()) {
      out << "\n";
      render(v, indent + 1, out);
    } else {
      out << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

Json run_command(const CommandRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  Json report;
  report["command"] = request.subcommand.empty() ? request.command : request.command + " " + request.subcommand;
  report["verdict"] = nullptr;
  report["certificates"] = Json::object();

  if (request.command == "validate") {
    validate_cmd(read_json_file(request.model_path), report);
  } else {
    const auto it = handlers().find(request.command);
    if (it == handlers().end()) throw InputError("unknown command \"" + request.command + "\"");
    const bool model_optional = request.command == "experiment";
    if (request.model_path.empty() && !model_optional) throw InputError("missing option --model");
    Context ctx{request, {}};
    if (!request.model_path.empty()) {
      const auto json = read_json_file(request.model_path);
      const auto problems = check_document(json);
      if (!problems.empty()) throw InputError(request.model_path + ": " + problems.front());
      ctx.doc = parse_document(json);
    }
    it->second(ctx, report);
  }

  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  report["timing"] = Json{{"elapsed_ms", elapsed.count()}};
  report["tool_version"] = HEDGELAB_VERSION;
  report["seed"] = request.seed;
  return report;
}

std::string render_human(const Json& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

std::uint64_t seed_from_environment() {
  const char* raw = std::getenv("HEDGELAB_SEED");
  if (!raw || !*raw) return 0;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(raw, &used);
    if (used == std::string(raw).size()) return value;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("HEDGELAB_SEED is not an unsigned integer: ") + raw);
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact no-arbitrage, super-hedging and maxingale checks on finite market models", "hedgelab"};
  CommandRequest req;
  bool human = false;
  std::string time, claim, price, lhs, rhs, sequence, limit, process;
  app.add_option("command", req.command,
                 "check-aip | check-aip-stopping | check-na | find-emm | check-nupbr | price | "
                 "price-menu | price-membership | closed-price | topology | maxingale | experiment | validate")
      ->required();
  app.add_option("operation", req.subcommand,
                 "topology: pdist | converges | is-limit | cauchy; maxingale: sub | strong | lemma-suite; "
                 "experiment: strong-gap");
  app.add_option("--model", req.model_path, "model document (JSON)");
  app.add_option("--time", time, "time label");
  app.add_option("--claim", claim, "claim name (default: payoff)");
  app.add_option("--budget", req.budget, "stopping-time pair budget, or process budget for experiments");
  app.add_option("--m", req.floor, "NUPBR loss floor m > 0");
  app.add_option("--price", price, "variable holding the candidate price");
  app.add_option("--lhs", lhs, "first variable of pdist");
  app.add_option("--rhs", rhs, "second variable of pdist");
  app.add_option("--sequence", sequence, "sequence name");
  app.add_option("--limit", limit, "variable proposed as a limit");
  app.add_option("--process", process, "process name; S and -S read the single-asset price");
  app.add_option("--depth", req.depth, "tree depth for experiments without a model");
  app.add_flag("--human", human, "indented text instead of JSON");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  auto set = [](std::optional<std::string>& dst, const std::string& v) {
    if (!v.empty()) dst = v;
  };
  set(req.time, time);
  set(req.claim, claim);
  set(req.price, price);
  set(req.lhs, lhs);
  set(req.rhs, rhs);
  set(req.sequence, sequence);
  set(req.limit, limit);
  set(req.process, process);

  try {
    req.seed = seed_from_environment();
    const auto report = run_command(req);
    out << (human ? render_human(report) : report.dump(2) + "\n");
    return 0;
  } catch (const InputError& e) {
    err << "hedgelab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "hedgelab: internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace hedgelab
