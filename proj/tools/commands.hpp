#pragma once

// Subcommands of the lozenge tool. Everything writes to the streams it is
// given so the test suite can drive the tool in-process.

#include "lozenge/lozenge.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace lozenge::cli {

enum Exit : int { kOk = 0, kDisagree = 1, kUsage = 2 };

inline constexpr int kDefaultBruteMaxSum = 14;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Range {
  int lo = 0;
  int hi = -1;  // -1: unbounded above
  bool contains(int v) const { return v >= lo && (hi < 0 || v <= hi); }
};

inline Range parse_range(const std::string& text) {
  if (text.empty()) return {};
  try {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    Range r;
    if (colon > 0) r.lo = std::stoi(text.substr(0, colon));
    if (colon + 1 < text.size()) r.hi = std::stoi(text.substr(colon + 1));
    if (r.lo < 0 || (r.hi >= 0 && r.hi < r.lo)) throw UsageError("bad range '" + text + "'");
    return r;
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "' (expected N or LO:HI)");
  }
}

inline Family family_arg(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "' (expected hex, B or Bprime)");
  return *f;
}

inline RegionParams params_from(Family f, const std::vector<int>& nums, int gap) {
  if (f == Family::Hexagon && nums.size() != 3 && nums.size() != 4)
    throw UsageError("hex needs x y z");
  if (f != Family::Hexagon && nums.size() != 4) throw UsageError(family_name(f) + " needs x y z k");
  RegionParams p{f, nums[0], nums[1], nums[2], nums.size() == 4 ? nums[3] : 0, gap};
  if (f == Family::Hexagon) p.k = 0;
  if (auto why = params_problem(p); !why.empty()) throw UsageError(describe(p) + ": " + why);
  return p;
}

/// Symmetric hexagon count through the bowtie recurrence (k = 0), after
/// relabelling sides so the odd one out sits in the y slot. nullopt when all
/// sides are odd.
inline std::optional<BigInt> hexagon_symmetric_recurrence(int x, int y, int z, RecurrenceSolver& solver) {
  const std::array<int, 3> s{x, y, z};
  const int odd = x % 2 + y % 2 + z % 2;
  if (odd == 3) return std::nullopt;
  if (odd == 0) return solver.count({Family::Bowtie, x, y, z, 0, 1});
  std::size_t lone = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if ((s[i] % 2 == 1) == (odd == 1)) lone = i;
  return solver.count({Family::DisconnectedBowtie, s[(lone + 1) % 3], s[lone], s[(lone + 2) % 3], 0, 1});
}

inline std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  return file;
}

/// Runs jobs on `threads` workers and hands results to `sink` in job order as
/// soon as each prefix is complete.
inline void run_ordered(std::size_t jobs, unsigned threads, const std::function<std::string(std::size_t)>& work,
                        const std::function<void(std::size_t, const std::string&)>& sink) {
  threads = std::max(1U, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < jobs; ++i) sink(i, work(i));
    return;
  }
  std::vector<std::optional<std::string>> results(jobs);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs; i = next++) {
        std::string r = work(i);
        std::lock_guard lock(mu);
        results[i] = std::move(r);
        ready.notify_all();
      }
    });
  }
  for (std::size_t i = 0; i < jobs; ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return results[i].has_value(); });
    std::string r = std::move(*results[i]);
    lock.unlock();
    sink(i, r);
  }
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// count

struct CountArgs {
  std::string family;
  std::vector<int> nums;
  std::string method = "brute";
  bool symmetric = false;
  bool json = false;
  int max_sum = kDefaultBruteMaxSum;
  int gap = 1;
};

inline int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
  const RegionParams p = params_from(family_arg(a.family), a.nums, a.gap);
  const bool hex = p.family == Family::Hexagon;
  const bool symmetric = !hex || a.symmetric;
  std::vector<std::string> methods;
  if (a.method == "all") {
    methods = {"brute", "formula"};
    if (symmetric) methods.push_back("recurrence");
  } else if (a.method == "brute" || a.method == "formula" || a.method == "recurrence") {
    methods = {a.method};
  } else {
    throw UsageError("unknown method '" + a.method + "' (expected brute, formula, recurrence or all)");
  }
  if (hex && !symmetric && a.method == "recurrence") throw UsageError("no recurrence for unrestricted hexagon counts");
  if (p.family == Family::DisconnectedBowtie && p.gap != 1) {
    std::erase_if(methods, [](const std::string& m) { return m != "brute"; });
    if (methods.empty()) throw UsageError("only brute force is available for a widened gap");
  }
  const bool wants_brute = std::find(methods.begin(), methods.end(), "brute") != methods.end();
  if (wants_brute && p.x + p.y + p.z > a.max_sum)
    throw UsageError("brute force is limited to x+y+z <= " + std::to_string(a.max_sum) + "; raise --max-sum");

  RecurrenceSolver solver;
  std::vector<std::pair<std::string, BigInt>> values;
  for (const auto& m : methods) {
    BigInt v;
    if (m == "brute") {
      const DualGraph g = dual_graph(build_region(p));
      v = symmetric ? count_symmetric_matchings(g) : count_matchings(g);
    } else if (m == "formula") {
      v = hex ? (symmetric ? stanley_sc(p.x, p.y, p.z) : macmahon(p.x, p.y, p.z)) : formula_count(p);
    } else {
      if (hex) {
        auto r = hexagon_symmetric_recurrence(p.x, p.y, p.z, solver);
        v = r ? *r : BigInt(0);
      } else {
        v = solver.count(p);
      }
    }
    values.emplace_back(m, v);
  }
  bool agree = true;
  for (const auto& [m, v] : values) agree = agree && v == values.front().second;

  if (a.json) {
    Json j = to_json(p);
    j["symmetric"] = symmetric;
    for (const auto& [m, v] : values) j[m] = to_string(v);
    if (values.size() > 1) j["agree"] = agree;
    out << j.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << to_string(values[i].second);
    if (values.size() > 1) out << (agree ? " agree" : " DISAGREE");
    out << "\n";
  }
  if (!agree) err << "methods disagree on " << describe(p) << "\n";
  return agree ? kOk : kDisagree;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string identity;
  std::string family;
  int max_sum = 10;
  std::string x, y, z, k;
  int gap = 1;
  std::size_t cap = kDefaultEnumerationCap;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  bool random_weight = false;
  bool json = false;
  std::string out;
};

inline std::vector<RegionParams> sweep(Family f, int max_sum, const Range& rx, const Range& ry, const Range& rz,
                                       const Range& rk, int gap, std::size_t& parity_invalid) {
  std::vector<RegionParams> out;
  parity_invalid = 0;
  for (int s = 0; s <= max_sum; ++s) {
    for (int x = 0; x <= s; ++x) {
      for (int y = 0; x + y <= s; ++y) {
        const int z = s - x - y;
        if (!rx.contains(x) || !ry.contains(y) || !rz.contains(z)) continue;
        const int kmax = f == Family::Hexagon ? 0 : std::min({x, y, z});
        for (int k = 0; k <= kmax; ++k) {
          if (!rk.contains(k) && f != Family::Hexagon) continue;
          RegionParams p{f, x, y, z, k, f == Family::DisconnectedBowtie ? gap : 1};
          if (params_valid(p)) out.push_back(p);
          else ++parity_invalid;
        }
      }
    }
  }
  return out;
}

/// One sweep instance; returns the JSON record with a "status" field.
inline Json verify_instance(const VerifyArgs& a, const RegionParams& p) {
  auto skipped = [&](const std::string& why) {
    Json j{{"identity", a.identity}, {"params", to_json(p)}, {"status", "skipped"}, {"reason", why}};
    return j;
  };
  try {
    if (a.identity == "recurrence") {
      RecurrenceSolver solver;
      const BigInt rec_v = solver.count(p);
      const BigInt brute_v = count_symmetric_matchings(dual_graph(build_region(p)));
      Json j{{"identity", "recurrence"}, {"params", to_json(p)}, {"recurrence", to_string(rec_v)},
             {"brute", to_string(brute_v)}};
      bool ok = rec_v == brute_v;
      if (p.family != Family::DisconnectedBowtie || p.gap == 1) {
        const BigInt f = formula_count(p);
        j["formula"] = to_string(f);
        ok = ok && f == rec_v;
      }
      j["recursive_steps"] = solver.stats().recursive;
      j["holds"] = ok;
      j["status"] = ok ? "pass" : "fail";
      return j;
    }
    const MarkedRegion mr = marked_region(p);
    if (!mr.marks) return skipped("marks inadmissible: " + mr.problem);
    IdentityReport rep;
    Json extra = Json::object();
    if (a.identity == "T1") {
      for (EdgeId e = 0; e < mr.graph.edge_count(); ++e)
        if (mr.graph.edge_invariant(e)) return skipped("orbit graph undefined: sigma-invariant edge");
      OrbitGraph og = orbit_graph(mr.graph);
      const FourMarks fm = orbit_marks(og, *mr.marks);
      const auto hyp = check_odd_path_hypothesis(og.graph, fm, a.cap);
      extra["hypothesis"] = hyp.holds;
      extra["pairs_checked"] = hyp.pairs_checked;
      DualGraph g = og.graph;
      if (a.random_weight && g.edge_count() > 0) {
        std::mt19937_64 rng(a.seed ^ (static_cast<std::uint64_t>(p.x) << 24 | p.y << 16 | p.z << 8 | p.k));
        std::uniform_int_distribution<long> num(1, 97);
        std::uniform_int_distribution<long> den(1, 89);
        std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
        const EdgeId target = pick(rng);
        const Rational w(num(rng), den(rng));
        DualGraph weighted(g.vertex_count(), std::vector<Color>(g.colors().begin(), g.colors().end()));
        for (EdgeId e = 0; e < g.edge_count(); ++e)
          weighted.add_edge(g.edge(e).u, g.edge(e).v, e == target ? w : g.edge(e).weight);
        g = std::move(weighted);
        extra["weighted_edge"] = target;
        extra["weight"] = to_string(w);
      }
      rep = verify_theorem1(g, fm);
      if (!hyp.holds) rep.note = "odd-path hypothesis fails";
    } else if (a.identity == "T2") {
      rep = verify_theorem2(mr.graph, *mr.marks);
    } else {
      const auto st = special_pair_stats(mr.graph, *mr.marks, a.cap);
      rep = verify_theorem2(mr.graph, *mr.marks);
      rep.identity = "T3";
      rep.correction = st.weight;
      rep.holds = rep.lhs == rep.rhs_total() - rep.correction;
      extra["special_pairs"] = st.special_pairs;
    }
    rep.params = p;
    Json j = report_to_json(rep);
    for (auto& [key, v] : extra.items()) j[key] = v;
    const bool ok = rep.holds && j.value("hypothesis", true);
    j["status"] = ok ? "pass" : "fail";
    return j;
  } catch (const CapExceeded& e) {
    return skipped(std::string("enumeration cap exceeded: ") + e.what());
  }
}

inline std::string verify_text(const Json& j) {
  std::string s = j.at("identity").get<std::string>() + " ";
  const Json& p = j.at("params");
  RegionParams rp{*parse_family(p.at("family").get<std::string>()), p.at("x"), p.at("y"), p.at("z"), p.at("k"),
                  p.value("gap", 1)};
  s += describe(rp) + " " + j.at("status").get<std::string>();
  if (j.contains("reason")) return s + " (" + j.at("reason").get<std::string>() + ")";
  if (j.contains("lhs")) {
    s += "  lhs=" + j.at("lhs").get<std::string>() + " rhs=" + j.at("rhs")[0].get<std::string>() + "+" +
         j.at("rhs")[1].get<std::string>() + "+" + j.at("rhs")[2].get<std::string>();
    if (j.at("identity") == "T3") s += " W=" + j.at("correction").get<std::string>();
  }
  if (j.contains("recurrence")) s += "  value=" + j.at("recurrence").get<std::string>();
  return s;
}

inline int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.identity != "T1" && a.identity != "T2" && a.identity != "T3" && a.identity != "recurrence")
    throw UsageError("unknown identity '" + a.identity + "' (expected T1, T2, T3 or recurrence)");
  std::string fam = a.family;
  if (fam.empty()) fam = a.identity == "T3" ? "Bprime" : "B";
  const Family f = family_arg(fam);
  if (f == Family::Hexagon) throw UsageError("verify sweeps the B and Bprime families");
  if (a.gap < 1 || a.gap % 2 == 0) throw UsageError("--gap must be a positive odd integer");
  std::size_t parity_invalid = 0;
  const auto instances =
      sweep(f, a.max_sum, parse_range(a.x), parse_range(a.y), parse_range(a.z), parse_range(a.k), a.gap, parity_invalid);
  std::ofstream file;
  std::ostream& sink = open_output(a.out, file, out);
  if (a.random_weight) sink << (a.json ? Json{{"seed", a.seed}}.dump() : "seed " + std::to_string(a.seed)) << "\n";
  std::size_t pass = 0, fail = 0, skip = 0;
  run_ordered(
      instances.size(), a.threads, [&](std::size_t i) { return verify_instance(a, instances[i]).dump(); },
      [&](std::size_t, const std::string& line) {
        const Json j = Json::parse(line);
        const std::string st = j.at("status");
        (st == "pass" ? pass : st == "fail" ? fail : skip)++;
        sink << (a.json ? line : verify_text(j)) << "\n";
        sink.flush();
      });
  Json summary{{"summary", a.identity}, {"family", family_name(f)}, {"max_sum", a.max_sum}, {"pass", pass},
               {"fail", fail}, {"skipped", skip}, {"parity_invalid", parity_invalid}};
  if (a.json) {
    sink << summary.dump() << "\n";
  } else {
    sink << "summary " << a.identity << " " << family_name(f) << ": " << pass << " pass, " << fail << " fail, "
         << skip << " skipped (" << parity_invalid << " parity-invalid tuples not run)\n";
  }
  if (fail) err << fail << " instance(s) failed\n";
  return fail ? kDisagree : kOk;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  std::string family = "hex";
  int max = 5;
  int max_sum = kDefaultBruteMaxSum;
  std::string out;
};

inline int cmd_table(const TableArgs& a, std::ostream& out, std::ostream&) {
  const Family f = family_arg(a.family);
  if (a.max < 0) throw UsageError("--max must be nonnegative");
  std::ofstream file;
  std::ostream& sink = open_output(a.out, file, out);
  sink << "family,x,y,z,k,formula_count,brute_count,recurrence_count,agree\n";
  RecurrenceSolver solver;
  bool all_agree = true;
  for (int x = 0; x <= a.max; ++x) {
    for (int y = 0; y <= a.max; ++y) {
      for (int z = 0; z <= a.max; ++z) {
        const int kmax = f == Family::Hexagon ? 0 : std::min({x, y, z});
        for (int k = 0; k <= kmax; ++k) {
          const RegionParams p{f, x, y, z, k, 1};
          if (!params_valid(p)) continue;
          std::optional<BigInt> formula, brute, rec;
          if (f == Family::Hexagon) {
            formula = stanley_sc(x, y, z);
            rec = hexagon_symmetric_recurrence(x, y, z, solver);
          } else {
            formula = formula_count(p);
            rec = solver.count(p);
          }
          if (x + y + z <= a.max_sum) brute = count_symmetric_matchings(dual_graph(build_region(p)));
          bool agree = true;
          for (const auto* v : {&brute, &rec})
            if (*v && **v != *formula) agree = false;
          all_agree = all_agree && agree;
          auto cell = [](const std::optional<BigInt>& v) { return v ? to_string(*v) : std::string(); };
          sink << family_name(f) << "," << x << "," << y << "," << z << "," << k << "," << cell(formula) << ","
               << cell(brute) << "," << cell(rec) << "," << (agree ? "true" : "false") << "\n";
        }
      }
    }
  }
  return all_agree ? kOk : kDisagree;
}

// ---------------------------------------------------------------------------
// render

struct RenderArgs {
  std::string family;
  std::vector<int> nums;
  std::string tiling = "none";
  std::string out;
  std::uint64_t seed = 0;
  std::size_t cap = 100000;
  int gap = 1;
};

inline int cmd_render(const RenderArgs& a, std::ostream& out, std::ostream& err) {
  const RegionParams p = params_from(family_arg(a.family), a.nums, a.gap);
  if (a.tiling != "none" && a.tiling != "sample-symmetric")
    throw UsageError("--tiling must be none or sample-symmetric");
  const Region region = build_region(p);
  std::optional<Matching> tiling;
  if (a.tiling == "sample-symmetric") {
    const DualGraph g = dual_graph(region);
    std::mt19937_64 rng(a.seed);
    std::size_t seen = 0;
    try {
      for_each_symmetric_matching(
          g,
          [&](const Matching& m) {
            ++seen;
            if (std::uniform_int_distribution<std::size_t>(1, seen)(rng) == 1) tiling = m;
          },
          a.cap);
    } catch (const CapExceeded&) {
      err << "sampled among the first " << a.cap << " symmetric tilings\n";
    }
    err << "seed " << a.seed << "\n";
    if (!tiling) err << describe(p) << " has no centrally symmetric tiling; rendering the region only\n";
  }
  std::ofstream file;
  std::ostream& sink = open_output(a.out, file, out);
  sink << render_svg(region, removed_cells(p), tiling);
  return kOk;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lozenge-tiling counts for hexagons with central bowtie holes"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "count (centrally symmetric) tilings of one region");
  c->add_option("family", count.family, "hex, B or Bprime")->required();
  c->add_option("params", count.nums, "x y z [k]")->required()->expected(3, 4);
  c->add_option("--method", count.method, "brute, formula, recurrence or all")->capture_default_str();
  c->add_flag("--symmetric", count.symmetric, "hexagons: count centrally symmetric tilings");
  c->add_flag("--json", count.json, "JSON output");
  c->add_option("--max-sum", count.max_sum, "largest x+y+z allowed for brute force")->capture_default_str();
  c->add_option("--gap", count.gap, "Bprime: lobe separation (odd)")->capture_default_str();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check an identity across a parameter sweep");
  v->add_option("identity", verify.identity, "T1, T2, T3 or recurrence")->required();
  v->add_option("--family", verify.family, "B or Bprime (default: Bprime for T3, B otherwise)");
  v->add_option("--max-sum", verify.max_sum, "largest x+y+z in the sweep")->capture_default_str();
  v->add_option("--x", verify.x, "x range N or LO:HI");
  v->add_option("--y", verify.y, "y range N or LO:HI");
  v->add_option("--z", verify.z, "z range N or LO:HI");
  v->add_option("--k", verify.k, "k range N or LO:HI");
  v->add_option("--gap", verify.gap, "Bprime lobe separation (odd)")->capture_default_str();
  v->add_option("--cap", verify.cap, "enumeration cap per instance")->capture_default_str();
  v->add_option("--threads", verify.threads, "worker threads")->capture_default_str();
  v->add_option("--seed", verify.seed, "seed for --random-weight")->capture_default_str();
  v->add_flag("--random-weight", verify.random_weight, "T1: put a random rational weight on one edge");
  v->add_flag("--json", verify.json, "JSON-lines output");
  v->add_option("--out", verify.out, "output file");

  TableArgs table;
  auto* t = app.add_subcommand("table", "CSV of closed-form, brute-force and recurrence counts");
  t->add_option("--family", table.family, "hex, B or Bprime")->capture_default_str();
  t->add_option("--max", table.max, "largest side length")->capture_default_str();
  t->add_option("--max-sum", table.max_sum, "largest x+y+z for brute force")->capture_default_str();
  t->add_option("--out", table.out, "output file");

  RenderArgs render;
  auto* r = app.add_subcommand("render", "SVG picture of a region, optionally with a symmetric tiling");
  r->add_option("family", render.family, "hex, B or Bprime")->required();
  r->add_option("params", render.nums, "x y z [k]")->required()->expected(3, 4);
  r->add_option("--tiling", render.tiling, "none or sample-symmetric")->capture_default_str();
  r->add_option("--out", render.out, "output file (default stdout)");
  r->add_option("--seed", render.seed, "sampling seed")->capture_default_str();
  r->add_option("--cap", render.cap, "tilings enumerated before sampling stops")->capture_default_str();
  r->add_option("--gap", render.gap, "Bprime lobe separation (odd)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (c->parsed()) return cmd_count(count, out, err);
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (t->parsed()) return cmd_table(table, out, err);
    if (r->parsed()) return cmd_render(render, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace lozenge::cli
