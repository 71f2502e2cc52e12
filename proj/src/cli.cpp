#include "basekit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <limits>
#include <optional>
#include <set>

#include "basekit/base_reg.hpp"
#include "basekit/catalog.hpp"
#include "basekit/error.hpp"
#include "basekit/group_struct.hpp"
#include "basekit/partition.hpp"
#include "basekit/randbase.hpp"
#include "basekit/wreath.hpp"

namespace basekit::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string group;
  std::string subgroup;
  std::string top;
  std::optional<std::size_t> k;
  std::size_t reps = 5;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100'000'000;
  std::size_t cap = Group::kDefaultCap;
  unsigned threads = 0;
  std::string format = "text";
  bool no_timing = false;
};

// Product groups up to this order are also checked by enumeration.
constexpr std::uint64_t kEnumerationCheckLimit = 100'000;

Json tuple_json(std::span<const Point> t) {
  Json a = Json::array();
  for (Point p : t) a.push_back(p + 1);
  return a;
}

Json perm_list_json(std::span<const Permutation> ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(format_cycles(p));
  return a;
}

std::string to_string(unsigned __int128 v) {
  std::string out;
  do {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  } while (v != 0);
  return out;
}

// "s*|G/H_G| / n^k" as an unreduced fraction, or null past 128 bits.
Json epsilon_rational(std::uint64_t s, std::uint64_t order, std::uint64_t n, std::size_t k) {
  using Wide = unsigned __int128;
  const Wide max = ~Wide{0};
  Wide num = Wide{s} * order;
  Wide den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (den > max / n) return nullptr;
    den *= n;
  }
  return to_string(num) + "/" + to_string(den);
}

Group with_cap(const Group& g, std::size_t cap) { return Group(g.degree(), g.generators(), cap); }

class Runner {
 public:
  explicit Runner(const Config& cfg) : cfg_(cfg) {
    scan_.budget = cfg.budget;
    scan_.threads = cfg.threads ? cfg.threads : default_threads();
    scan_.rep_cap = cfg.reps;
  }

  Group group() const {
    if (cfg_.group.empty()) throw ParseError("--group is required");
    return with_cap(load_group(cfg_.group), cfg_.cap);
  }

  CosetSpace space(const Group& g) const {
    if (cfg_.subgroup.empty()) {
      if (!g.is_transitive()) throw HypothesisError("group is not transitive; pass --subgroup");
      return CosetSpace::natural(g);
    }
    return CosetSpace::build(g, with_cap(load_group(cfg_.subgroup), cfg_.cap));
  }

  Json describe(const std::string& command, const CosetSpace& s) const {
    Json j;
    j["command"] = command;
    j["group"] = {{"source", cfg_.group}, {"degree", s.group().degree()}, {"order", s.group().order()}};
    j["subgroup"] = {{"source", cfg_.subgroup.empty() ? std::string("stabilizer of point 1") : cfg_.subgroup},
                     {"order", s.subgroup().order()}};
    j["index"] = s.size();
    return j;
  }

  double timing(double ms) const { return cfg_.no_timing ? 0.0 : ms; }

  Json orbit_report(const RegularOrbitReport& r) const {
    Json j;
    j["k"] = r.k;
    j["base_size"] = r.base_size ? Json(*r.base_size) : Json(nullptr);
    j["trivial_action"] = r.trivial_action;
    j["reg_count"] = r.reg_count;
    j["total_orbits"] = r.total_orbits;
    Json reps = Json::array();
    for (const auto& t : r.representatives) reps.push_back(tuple_json(t));
    j["representatives"] = reps;
    j["method"] = r.method;
    j["budget_used"] = r.budget_used;
    j["elapsed_ms"] = timing(r.elapsed_ms);
    return j;
  }

  Json base_size_cmd() const {
    const auto s = space(group());
    Json j = describe("base-size", s);
    j["result"] = orbit_report(base_size(s, scan_));
    return j;
  }

  Json reg_count_cmd() const {
    if (!cfg_.k) throw ParseError("reg-count requires --k");
    const auto s = space(group());
    Json j = describe("reg-count", s);
    j["result"] = orbit_report(reg_count(s, *cfg_.k, scan_));
    return j;
  }

  Json intersections_cmd() const {
    const Group g = group();
    const auto s = space(g);
    Json j = describe("intersections", s);
    Json searches = Json::array();
    auto attempt = [&](std::size_t k) {
      auto found = base_by_intersections(s.group(), s.subgroup(), k);
      Json a;
      a["k"] = k;
      a["witness"] = found ? perm_list_json(*found) : Json("none");
      searches.push_back(a);
      return found.has_value();
    };
    if (cfg_.k) {
      attempt(*cfg_.k);
    } else {
      std::size_t k = s.size() < 2 ? 0 : base_lower_bound(s.size(), s.image().stabilizer_elements().size());
      // Record the failed length just below the bound as well when it is not vacuous.
      if (k >= 2) attempt(k - 1);
      while (!attempt(k)) ++k;
      j["minimal_k"] = k;
    }
    j["searches"] = searches;
    return j;
  }

  Json partition_cmd() const {
    const Group m = group();
    const auto part = asymmetric_partition(m);
    Json j;
    j["command"] = "partition";
    j["group"] = {{"source", cfg_.group}, {"degree", m.degree()}, {"order", m.order()}};
    Json cells = Json::array();
    for (const auto& c : part.cells()) cells.push_back(tuple_json(c));
    j["cell_count"] = part.cell_count();
    j["cells"] = cells;
    j["verified_asymmetric"] = is_asymmetric(m, part);
    j["minimal"] = m.degree() <= PartitionSearchOptions{}.exhaustive_limit;
    return j;
  }

  Json wreath_lift_cmd() const {
    if (cfg_.top.empty()) throw ParseError("wreath-lift requires --top");
    const auto s = space(group());
    const Group top = with_cap(load_group(cfg_.top), cfg_.cap);
    Json j = describe("wreath-lift", s);
    j["top"] = {{"source", cfg_.top}, {"degree", top.degree()}, {"order", top.order()}};

    std::size_t k = 0;
    if (cfg_.k) {
      k = *cfg_.k;
    } else {
      const auto b = base_size(s, scan_);
      k = std::max<std::size_t>(b.base_size.value_or(0), 6);
    }
    ScanOptions opts = scan_;
    opts.rep_cap = std::max<std::size_t>(cfg_.reps, 5);
    const auto reg = reg_count(s, k, opts);
    const auto part = asymmetric_partition(top);
    const WreathSpace w(s, top);

    j["k"] = k;
    j["base_reg_count"] = reg.reg_count;
    Json reps = Json::array();
    for (const auto& t : reg.representatives) reps.push_back(tuple_json(t));
    j["base_representatives"] = reps;
    Json cells = Json::array();
    for (const auto& c : part.cells()) cells.push_back(tuple_json(c));
    j["partition"] = cells;
    const bool saturated = w.group_order() == std::numeric_limits<std::uint64_t>::max();
    j["wreath_order"] = saturated ? Json(nullptr) : Json(w.group_order());
    j["wreath_order_exceeds_64_bits"] = saturated;
    j["product_points"] = w.product_size();

    const auto lift = lift_regular_point(w, reg.representatives, part);
    j["lift"] = tuple_json(lift);
    Json blocks = Json::array();
    for (std::size_t b = 0; b < w.copies(); ++b) blocks.push_back(tuple_json(w.block_tuple(lift, b)));
    j["lift_blocks"] = blocks;
    j["lift_structured_regular"] = structured_regularity_check(w, lift);
    if (reg.representatives.size() >= 5) {
      const auto lifts = distinct_regular_lifts(w, reg.representatives, part);
      Json arr = Json::array();
      for (const auto& t : lifts) arr.push_back(tuple_json(t));
      j["distinct_lifts"] = arr;
      j["distinct_lifts_certified"] = true;
    }
    if (w.group_order() <= kEnumerationCheckLimit) {
      const Group product = w.product_action_group();
      bool regular = true;
      for (const auto& g : product.elements()) {
        if (g.is_identity()) continue;
        if (std::all_of(lift.begin(), lift.end(), [&](Point p) { return g[p] == p; })) regular = false;
      }
      j["lift_enumerated_regular"] = regular;
    }
    return j;
  }

  Json random_base_cmd() const {
    if (!cfg_.k) throw ParseError("random-base requires --k");
    const auto s = space(group());
    SampleOptions opts;
    opts.threads = scan_.threads;
    opts.scan_budget = cfg_.budget;
    const auto run = random_base_search(s, *cfg_.k, cfg_.trials, cfg_.seed, opts);
    Json j = describe("random-base", s);
    Json r;
    r["k"] = run.k;
    r["trials"] = run.trials;
    r["hits"] = run.hits;
    r["seed"] = run.seed;
    r["rng"] = run.rng;
    r["rate"] = run.rate;
    r["rate_interval_99"] = {run.rate_interval.lo, run.rate_interval.hi};
    r["witness"] = run.witness ? tuple_json(*run.witness) : Json(nullptr);
    r["reg_count"] = run.reg ? Json(*run.reg) : Json(nullptr);
    r["epsilon"] = run.epsilon ? Json(*run.epsilon) : Json(nullptr);
    r["epsilon_weak"] = run.epsilon_weak ? Json(*run.epsilon_weak) : Json(nullptr);
    r["epsilon_rational"] = run.reg ? epsilon_rational(*run.reg, s.image().order(), s.size(), run.k) : Json(nullptr);
    j["result"] = r;
    return j;
  }

  Json verify_examples_cmd(bool& all_pass) const {
    Json checks = Json::array();
    all_pass = true;
    auto check = [&](const std::string& claim, Json value, bool pass) {
      checks.push_back({{"claim", claim}, {"value", value}, {"status", pass ? "PASS" : "FAIL"}});
      all_pass = all_pass && pass;
    };
    ScanOptions opts = scan_;
    opts.rep_cap = 1;

    const auto s5 = CosetSpace::build(symmetric_group(5), catalog("stab(sym(5),5)"));
    const auto r54 = reg_count(s5, 4, opts);
    check("Reg_{Sym4}(Sym5, 4) = 1", r54.reg_count, r54.reg_count == 1);

    const auto ex1 = CosetSpace::build(catalog("wreath(sym(5),sym(2))"),
                                       catalog("wreath(embed(sym(4),5),sym(2))"));
    const auto r4 = reg_count(ex1, 4, opts);
    check("Sym5 wr Sym2 on cosets of Sym4 wr Sym2: no regular 4-tuple", r4.reg_count, r4.reg_count == 0);
    const auto b1 = base_size(ex1, opts);
    check("Sym5 wr Sym2 on cosets of Sym4 wr Sym2: base size 5", *b1.base_size, b1.base_size == 5u);
    const bool none4 = !base_by_intersections(ex1.group(), ex1.subgroup(), 4);
    const auto w5 = base_by_intersections(ex1.group(), ex1.subgroup(), 5);
    check("every four conjugates of Sym4 wr Sym2 intersect nontrivially", none4 ? "none" : "found", none4);
    check("five conjugates of Sym4 wr Sym2 intersect in the core", w5 ? perm_list_json(*w5) : Json("none"),
          w5.has_value());

    const auto ex2 = CosetSpace::build(symmetric_group(8), catalog("young-wreath(4,2)"));
    const auto b2 = base_size(ex2, opts);
    check("Sym8 on cosets of Sym4 wr Sym2: base size 5", *b2.base_size, b2.base_size == 5u);
    check("Sym8 on cosets of Sym4 wr Sym2: Reg(5) >= 12", b2.reg_count, b2.reg_count >= 12);
    const std::uint64_t order = ex2.subgroup().order();
    const std::uint64_t index = ex2.size();
    const std::size_t lb = base_lower_bound(index, ex2.image().stabilizer_elements().size());
    check("|S| < |G:S|^2", Json::array({order, index * index}), order < index * index);
    check("index lower bound is strictly below the base size", lb, lb < b2.base_size.value_or(0));

    Json j;
    j["command"] = "verify-examples";
    j["checks"] = checks;
    j["all_pass"] = all_pass;
    return j;
  }

  Json analyze_cmd() const {
    const Group g = group();
    const auto s = space(g);
    const auto start = std::chrono::steady_clock::now();
    Json j = describe("analyze", s);
    auto q = [](Json value, const std::string& definition) {
      return Json{{"value", std::move(value)}, {"definition", definition}};
    };
    Json r;
    const Group core_group = core(s.group(), s.subgroup());
    const bool solvable = is_solvable(s.subgroup());
    r["order"] = q(s.group().order(), "|G|");
    r["subgroup_order"] = q(s.subgroup().order(), "|H|");
    r["index"] = q(s.size(), "|G:H|");
    r["core_order"] = q(core_group.order(), "|H_G|, the intersection of all conjugates of H");
    r["core_trivial"] = q(core_group.order() == 1, "H_G = 1");
    r["subgroup_solvable"] = q(solvable, "derived series of H reaches 1");
    r["maximal_solvable"] = q(solvable ? Json(is_maximal_solvable(s.subgroup(), s.group())) : Json(nullptr),
                              "H solvable and contained in no larger solvable subgroup of G");
    if (s.size() >= 2) {
      const auto m = s.image().stabilizer_elements().size();
      r["lower_bound"] = q(base_lower_bound(s.size(), m), "min{k : |G:H|^(k-1) > |H/H_G|}");
    } else {
      r["lower_bound"] = q(0, "min{k : |G:H|^(k-1) > |H/H_G|}");
    }
    const auto b = base_size(s, scan_);
    r["base_size"] = q(*b.base_size, "Base_H(G), least k with a regular point in Omega^k");
    r["trivial_action"] = q(b.trivial_action, "|G:H| = 1");
    if (b.trivial_action) {
      r["note"] = "action trivial";
    } else {
      r["reg_at_base"] = q(b.reg_count, "Reg_H(G, Base_H(G))");
      ScanOptions opts = scan_;
      opts.rep_cap = 0;
      try {
        r["reg_at_base_plus_1"] = q(reg_count(s, *b.base_size + 1, opts).reg_count, "Reg_H(G, Base_H(G) + 1)");
      } catch (const BudgetExceeded&) {
        r["reg_at_base_plus_1"] = q(nullptr, "Reg_H(G, Base_H(G) + 1)");
      }
      const auto w = base_by_intersections(s.group(), s.subgroup(), *b.base_size);
      r["intersections_witness"] =
          q(w ? perm_list_json(*w) : Json("none"), "x_1 .. x_k with H^x_1 ∩ .. ∩ H^x_k = H_G");
    }
    j["result"] = r;
    j["elapsed_ms"] =
        timing(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    return j;
  }

 private:
  const Config& cfg_;
  ScanOptions scan_;
};

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_text(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--group,-g", cfg.group, "group file or catalog spec");
  sub->add_option("--subgroup,-s", cfg.subgroup, "subgroup file or catalog spec (default: point stabilizer)");
  sub->add_option("--budget", cfg.budget, "largest tuple scan accepted")->check(CLI::PositiveNumber);
  sub->add_option("--cap", cfg.cap, "group enumeration cap")->check(CLI::PositiveNumber);
  sub->add_option("--threads", cfg.threads, "worker threads (default: BASEKIT_THREADS or all cores)");
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--no-timing", cfg.no_timing, "report elapsed times as 0");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"basekit: base sizes and regular orbits of permutation groups"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"base-size", "least k with a regular orbit on Omega^k"},
      {"reg-count", "number of regular orbits on Omega^k"},
      {"intersections", "conjugates of H intersecting in the core"},
      {"partition", "asymmetric partition with at most 5 cells"},
      {"wreath-lift", "regular points of G wr M from regular points of G"},
      {"random-base", "randomized base search"},
      {"verify-examples", "check the two worked examples"},
      {"analyze", "composite report"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, cfg);
    if (name == "reg-count" || name == "intersections" || name == "wreath-lift" || name == "random-base") {
      sub->add_option("--k", cfg.k, "tuple length")->check(CLI::NonNegativeNumber);
    }
    if (name == "base-size" || name == "reg-count" || name == "wreath-lift") {
      sub->add_option("--reps", cfg.reps, "orbit representatives to report");
    }
    if (name == "wreath-lift") sub->add_option("--top,-m", cfg.top, "top group acting on blocks");
    if (name == "random-base") {
      sub->add_option("--trials", cfg.trials, "number of sampled tuples");
      sub->add_option("--seed", cfg.seed, "RNG seed");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kParse;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Runner runner(cfg);
  Json report;
  int code = kOk;
  try {
    if (command == "base-size") report = runner.base_size_cmd();
    else if (command == "reg-count") report = runner.reg_count_cmd();
    else if (command == "intersections") report = runner.intersections_cmd();
    else if (command == "partition") report = runner.partition_cmd();
    else if (command == "wreath-lift") report = runner.wreath_lift_cmd();
    else if (command == "random-base") report = runner.random_base_cmd();
    else if (command == "analyze") report = runner.analyze_cmd();
    else {
      bool all_pass = false;
      report = runner.verify_examples_cmd(all_pass);
      if (!all_pass) code = kHypothesis;
    }
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kParse;
  } catch (const HypothesisError& e) {
    err << "error: hypothesis: " << e.what() << '\n';
    return kHypothesis;
  } catch (const BudgetExceeded& e) {
    err << "error: budget: " << e.what() << '\n';
    return kBudget;
  }

  if (cfg.format == "json") {
    out << report.dump(2) << '\n';
  } else {
    render_text(report, "", out);
  }
  return code;
}

}  // namespace basekit::cli
