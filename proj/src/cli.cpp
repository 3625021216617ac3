#include "kmodal/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kmodal/experiments.hpp"
#include "kmodal/labeling.hpp"
#include "kmodal/lattice.hpp"

namespace kmodal::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public Error {
public:
  using Error::Error;
};

std::size_t parse_count(std::string_view s, const std::string& whole) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw UsageError("bad range '" + whole + "'");
  return v;
}

template <class F>
auto for_flag(const char* flag, F&& f) {
  try {
    return f();
  } catch (const InvalidParams& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  } catch (const UsageError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f)
    throw Error("cannot open '" + path + "' for writing");
  f << text;
  if (!f)
    throw Error("write to '" + path + "' failed");
}

Permutation load(const std::string& path, std::istream& in) {
  if (!path.empty())
    return read_permutation_file(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_permutation(buf.str());
}

std::string dump(const json& j) {
  return j.dump(2) + "\n";
}

json profile_json(const ModalityProfile& m) {
  return {{"min_changes", m.min_changes},
          {"min_changes_inc_first", m.min_changes_inc_first},
          {"min_changes_dec_first", m.min_changes_dec_first},
          {"first_direction", to_string(m.first_direction)}};
}

json point_json(LatticePoint p) {
  return json::array({p.x, p.y});
}

json points_json(const std::vector<LatticePoint>& pts) {
  json a = json::array();
  for (LatticePoint p : pts)
    a.push_back(point_json(p));
  return a;
}

json row_json(const SweepRow& r) {
  return {{"theorem", to_string(r.theorem)},
          {"family", r.family},
          {"seed", r.seed ? json(*r.seed) : json(nullptr)},
          {"n", r.n},
          {"k", r.k},
          {"t", r.t ? json(*r.t) : json(nullptr)},
          {"mode", r.mode},
          {"achieved_N", r.achieved},
          {"target", r.target},
          {"slack", r.slack},
          {"pass", r.pass}};
}

SweepRow row_of(const BoundReport& b) {
  return {b.theorem, "input", std::nullopt, b.n,           b.k, std::nullopt,
          std::string(mode_label(b.theorem)),  b.achieved,  b.target, b.slack, b.pass};
}

std::vector<Theorem> parse_theorems(const std::string& text) {
  std::vector<Theorem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_theorem(item));
  if (out.empty())
    throw UsageError("no theorems given");
  return out;
}

LabelScheme parse_scheme(const std::string& s, std::size_t k) {
  switch (parse_theorem(s)) {
  case Theorem::T1:
    return LabelScheme::theorem1(k);
  case Theorem::T2:
    return LabelScheme::theorem2(k);
  case Theorem::T3:
    break;
  }
  return LabelScheme::theorem3(k);
}

struct Options {
  std::string input;
  std::string out;
  std::string mode = "any";
  std::string scheme = "t2";
  std::string family;
  std::string theorem = "t1";
  std::string theorems = "t1,t2,t3";
  std::string points;
  std::string ks, ns, ts;
  std::size_t k = 1;
  std::size_t t = 1;
  std::size_t side = 0;
  std::size_t slack = default_slack;
  std::size_t samples = 1;
  std::size_t threads = 0;
  std::uint64_t seed = 0;
  bool json = false;
  bool witness = false;
  bool strict = false;
};

int cmd_solve(const Options& o, std::istream& in, std::ostream& out) {
  const SolveMode mode = for_flag("--mode", [&] { return parse_solve_mode(o.mode); });
  const Permutation p = load(o.input, in);
  const Witness w = longest_kmodal(p, o.k, mode);
  std::string text;
  if (o.json) {
    json j = {{"n", p.size()}, {"k", o.k}, {"mode", to_string(mode)}, {"length", w.length()}};
    j["indices"] = w.indices;
    if (o.witness)
      j["values"] = w.values;
    j["profile"] = profile_json(w.profile);
    text = dump(j);
  } else {
    std::ostringstream ss;
    ss << "n " << p.size() << "\nk " << o.k << "\nmode " << to_string(mode) << "\nlength "
       << w.length() << '\n';
    if (o.witness) {
      ss << "indices";
      for (std::size_t i : w.indices)
        ss << ' ' << i;
      ss << "\nvalues";
      for (Value v : w.values)
        ss << ' ' << v;
      ss << '\n';
    }
    text = ss.str();
  }
  emit(text, o.out, out);
  return exit_ok;
}

int cmd_labels(const Options& o, std::istream& in, std::ostream& out) {
  const LabelScheme scheme = for_flag("--scheme", [&] { return parse_scheme(o.scheme, o.k); });
  const Permutation p = load(o.input, in);
  const LabelSet ls = label_pairs(p, scheme);
  const auto collision = injectivity_check(ls);
  std::ostringstream ss;
  if (o.json) {
    json rows = json::array();
    for (std::size_t i = 0; i < ls.pairs.size(); ++i)
      rows.push_back({{"pos", i + 1}, {"value", p[i + 1]}, {"x", ls.pairs[i].x},
                      {"y", ls.pairs[i].y}});
    json j = {{"scheme", for_flag("--scheme", [&] { return to_string(parse_theorem(o.scheme)); })},
              {"k", o.k},
              {"n", p.size()},
              {"injective", !collision.has_value()},
              {"labels", rows}};
    ss << dump(j);
  } else {
    ss << "pos,value,x,y\n";
    for (std::size_t i = 0; i < ls.pairs.size(); ++i)
      ss << i + 1 << ',' << p[i + 1] << ',' << ls.pairs[i].x << ',' << ls.pairs[i].y << '\n';
  }
  emit(ss.str(), o.out, out);
  return o.strict && collision ? exit_failed_check : exit_ok;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const Family f = for_flag("--family", [&] { return parse_family(o.family); });
  const Permutation p = for_flag("--k/--t", [&] { return generate(f, o.k, o.t); });
  emit(format_permutation(p) + "\n", o.out, out);
  return exit_ok;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const Theorem th = for_flag("--theorem", [&] { return parse_theorem(o.theorem); });
  const Permutation p = load(o.input, in);
  const BoundReport b = for_flag("--k", [&] { return check_theorem(p, o.k, th, o.slack); });
  const SweepRow row = row_of(b);
  if (o.json) {
    json j = row_json(row);
    if (const auto* w = std::get_if<Witness>(&b.witness))
      j["witness"] = {{"indices", w->indices}, {"values", w->values}};
    else {
      const auto& a = std::get<JointAnchor>(b.witness);
      j["witness"] = {{"position", a.position}, {"inc_len", a.inc_len}, {"dec_len", a.dec_len}};
    }
    emit(dump(json::array({j})), o.out, out);
  } else {
    emit(sweep_csv({row}), o.out, out);
  }
  return o.strict && !b.pass ? exit_failed_check : exit_ok;
}

int cmd_minimize(const Options& o, std::ostream& out) {
  const auto ns = for_flag("--n", [&] { return parse_range(o.ns); });
  const auto ks = for_flag("--k", [&] { return parse_range(o.ks); });
  const auto ths = for_flag("--theorems", [&] { return parse_theorems(o.theorems); });
  for (std::size_t k : ks)
    if (k == 0)
      throw UsageError("--k: k must be positive");
  json rows = json::array();
  std::ostringstream csv;
  csv << "n,k,theorem,mode,minimum,required,slack,pass,argmin\n";
  bool all_pass = true;
  for (std::size_t n : ns)
    for (std::size_t k : ks) {
      const auto mins = min_over_all_perms_all(n, k, o.threads);
      for (Theorem th : ths) {
        const PermutationMinimum& m = mins[static_cast<std::size_t>(th)];
        const std::size_t req = required_length(theorem_target(th, n, k), o.slack);
        const bool pass = m.minimum >= req;
        all_pass = all_pass && pass;
        rows.push_back({{"n", n},
                        {"k", k},
                        {"theorem", to_string(th)},
                        {"mode", mode_label(th)},
                        {"minimum", m.minimum},
                        {"required", req},
                        {"slack", o.slack},
                        {"pass", pass},
                        {"argmin", std::vector<Value>(m.argmin.values().begin(),
                                                      m.argmin.values().end())}});
        csv << n << ',' << k << ',' << to_string(th) << ',' << mode_label(th) << ','
            << m.minimum << ',' << req << ',' << o.slack << ',' << (pass ? "true" : "false")
            << ',' << format_permutation(m.argmin) << '\n';
      }
    }
  emit(o.json ? dump(rows) : csv.str(), o.out, out);
  return o.strict && !all_pass ? exit_failed_check : exit_ok;
}

int cmd_tightness(const Options& o, std::ostream& out) {
  const Family f = for_flag("--family", [&] { return parse_family(o.family); });
  const auto ks = for_flag("--k", [&] { return parse_range(o.ks); });
  const auto ts = for_flag("--t", [&] { return parse_range(o.ts); });
  json rows = json::array();
  std::ostringstream csv;
  csv << "family,k,t,n,mode,achieved_N,cap,ratio,pass\n";
  bool all_pass = true;
  for (std::size_t k : ks)
    for (std::size_t t : ts) {
      const TightnessRecord r = for_flag("--k/--t", [&] { return tightness_report(f, k, t); });
      all_pass = all_pass && r.pass;
      rows.push_back({{"family", to_string(r.family)},
                      {"k", r.k},
                      {"t", r.t},
                      {"n", r.n},
                      {"mode", to_string(r.mode)},
                      {"achieved_N", r.achieved},
                      {"cap", r.cap},
                      {"ratio", r.ratio},
                      {"pass", r.pass}});
      csv << to_string(r.family) << ',' << r.k << ',' << r.t << ',' << r.n << ','
          << to_string(r.mode) << ',' << r.achieved << ',' << r.cap << ','
          << format_target(r.ratio) << ',' << (r.pass ? "true" : "false") << '\n';
    }
  emit(o.json ? dump(rows) : csv.str(), o.out, out);
  return o.strict && !all_pass ? exit_failed_check : exit_ok;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  SweepConfig cfg;
  cfg.ks = for_flag("--k", [&] { return parse_range(o.ks); });
  if (!o.family.empty()) {
    cfg.family = for_flag("--family", [&] { return parse_family(o.family); });
    if (o.ts.empty())
      throw UsageError("--t is required with --family");
    if (!o.ns.empty())
      throw UsageError("--n cannot be combined with --family");
    cfg.ts = for_flag("--t", [&] { return parse_range(o.ts); });
  } else {
    if (o.ns.empty())
      throw UsageError("--n is required without --family");
    if (!o.ts.empty())
      throw UsageError("--t requires --family");
    cfg.ns = for_flag("--n", [&] { return parse_range(o.ns); });
  }
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.slack = o.slack;
  cfg.theorems = for_flag("--theorems", [&] { return parse_theorems(o.theorems); });
  const std::vector<SweepRow> rows = sweep(cfg, o.threads);
  bool all_pass = true;
  for (const SweepRow& r : rows)
    all_pass = all_pass && r.pass;
  if (o.json) {
    json a = json::array();
    for (const SweepRow& r : rows)
      a.push_back(row_json(r));
    emit(dump(a), o.out, out);
  } else {
    emit(sweep_csv(rows), o.out, out);
  }
  return o.strict && !all_pass ? exit_failed_check : exit_ok;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  if (o.mode != "scan" && o.mode != "maxfree" && o.mode != "shift")
    throw UsageError("--mode: expected scan, maxfree or shift, got '" + o.mode + "'");
  if (o.side == 0)
    throw UsageError("--N: N must be positive");
  std::ostringstream ss;
  json j = {{"mode", o.mode}, {"N", o.side}};
  bool ok = true;

  if (o.mode == "maxfree") {
    const ConditionFreeMax m = max_condition_free(o.side);
    j["size"] = m.size;
    j["triangle_size"] = o.side * (o.side + 1) / 2;
    j["witness"] = points_json(m.witness.points());
    ss << "# size " << m.size << '\n';
    for (LatticePoint p : m.witness.points())
      ss << p.x << ' ' << p.y << '\n';
  } else {
    if (o.points.empty())
      throw UsageError("--points is required for --mode " + o.mode);
    const LatticePointSet s = read_lattice_points(o.points, o.side);
    j["points"] = points_json(s.points());
    if (o.mode == "scan") {
      const ConditionScan c = condition_scan(s);
      j["triggered"] = c.triggered_at.has_value();
      j["trigger"] = c.triggered_at ? point_json(*c.triggered_at) : json(nullptr);
      j["a_count"] = c.a_count;
      j["b_count"] = c.b_count;
      ok = !c.triggered_at;
      if (c.triggered_at)
        ss << "triggered " << c.triggered_at->x << ' ' << c.triggered_at->y;
      else
        ss << "condition-free";
      ss << "\na_count " << c.a_count << "\nb_count " << c.b_count << '\n';
    } else {
      const ShiftTrace tr = shift_into_triangle(s);
      auto moves = [](const std::vector<ShiftMove>& ms) {
        json a = json::array();
        for (const ShiftMove& m : ms)
          a.push_back({{"from", point_json(m.from)}, {"to", point_json(m.to)}});
        return a;
      };
      j["qualifying"] = points_json(tr.qualifying);
      j["step1"] = moves(tr.step1_moves);
      j["step2"] = moves(tr.step2_moves);
      j["success"] = tr.success();
      if (tr.failure)
        j["failure"] = {{"point", point_json(tr.failure->point)},
                        {"step", tr.failure->step},
                        {"reason", tr.failure->reason}};
      else
        j["failure"] = nullptr;
      j["result"] = points_json(tr.result.points());
      ok = tr.success();
      ss << "# qualifying " << tr.qualifying.size() << '\n';
      for (const auto* ms : {&tr.step1_moves, &tr.step2_moves})
        for (const ShiftMove& m : *ms)
          if (m.from != m.to)
            ss << "# step " << (ms == &tr.step1_moves ? 1 : 2) << ": " << m.from.x << ' '
               << m.from.y << " -> " << m.to.x << ' ' << m.to.y << '\n';
      if (tr.failure)
        ss << "# failed at step " << tr.failure->step << " on " << tr.failure->point.x << ' '
           << tr.failure->point.y << ": " << tr.failure->reason << '\n';
      for (LatticePoint p : tr.result.points())
        ss << p.x << ' ' << p.y << '\n';
    }
  }
  emit(o.json ? dump(j) : ss.str(), o.out, out);
  return o.strict && !ok ? exit_failed_check : exit_ok;
}

} // namespace

std::vector<std::size_t> parse_range(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_count(item, text));
      continue;
    }
    const std::size_t lo = parse_count(std::string_view(item).substr(0, dots), text);
    const std::size_t hi = parse_count(std::string_view(item).substr(dots + 2), text);
    if (lo > hi)
      throw UsageError("empty range '" + text + "'");
    for (std::size_t v = lo; v <= hi; ++v)
      out.push_back(v);
  }
  if (out.empty())
    throw UsageError("empty range '" + text + "'");
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"k-modal subsequence toolkit", "kmodal"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* s) { s->add_option("--out", o.out, "Write output to FILE"); };
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json, "Emit JSON"); };
  auto add_strict = [&](CLI::App* s) {
    s->add_flag("--strict", o.strict, "Exit 1 when a check fails");
  };
  auto add_input = [&](CLI::App* s) {
    s->add_option("--input", o.input, "Permutation file (default: stdin)");
  };
  auto add_threads = [&](CLI::App* s) {
    s->add_option("--threads", o.threads, "Worker threads (0: KMODAL_THREADS or all cores)");
  };

  CLI::App* solve = app.add_subcommand("solve", "Longest k-modal subsequence");
  solve->add_option("--k", o.k, "Maximum direction changes")->required();
  solve->add_option("--mode", o.mode, "inc, dec or any");
  add_input(solve);
  solve->add_flag("--witness", o.witness, "Include the witness");
  add_json(solve);
  add_out(solve);

  CLI::App* labels = app.add_subcommand("labels", "Per-position label pairs");
  labels->add_option("--scheme", o.scheme, "Label scheme: t1, t2 or t3");
  labels->add_option("--k", o.k, "Modal budget")->required();
  add_input(labels);
  add_json(labels);
  add_strict(labels);
  add_out(labels);

  CLI::App* gen = app.add_subcommand("generate", "Extremal constructions");
  gen->add_option("--family", o.family, "strong or perm")->required();
  gen->add_option("--k", o.k, "k")->required();
  gen->add_option("--t", o.t, "Block parameter")->required();
  add_out(gen);

  CLI::App* check = app.add_subcommand("check", "Check one bound on a permutation");
  check->add_option("--theorem", o.theorem, "t1, t2 or t3");
  check->add_option("--k", o.k, "k")->required();
  check->add_option("--slack", o.slack, "Allowed shortfall from the ceiling of the target");
  add_input(check);
  add_json(check);
  add_strict(check);
  add_out(check);

  CLI::App* minimize = app.add_subcommand("minimize", "Exact minima over all permutations");
  minimize->add_option("--n", o.ns, "Sizes, e.g. 1..9")->required();
  minimize->add_option("--k", o.ks, "Values of k, e.g. 1..3")->required();
  minimize->add_option("--theorems", o.theorems, "Comma-separated list of t1, t2, t3");
  minimize->add_option("--slack", o.slack, "Allowed shortfall");
  add_threads(minimize);
  add_json(minimize);
  add_strict(minimize);
  add_out(minimize);

  CLI::App* tight = app.add_subcommand("tightness", "Construction lengths against their caps");
  tight->add_option("--family", o.family, "strong or perm")->required();
  tight->add_option("--k", o.ks, "Values of k")->required();
  tight->add_option("--t", o.ts, "Values of t")->required();
  add_json(tight);
  add_strict(tight);
  add_out(tight);

  CLI::App* sw = app.add_subcommand("sweep", "Seeded random or family sweep");
  sw->add_option("--k", o.ks, "Values of k")->required();
  sw->add_option("--n", o.ns, "Sizes of random permutations");
  sw->add_option("--family", o.family, "strong or perm instead of random permutations");
  sw->add_option("--t", o.ts, "Values of t for --family");
  sw->add_option("--samples", o.samples, "Permutations per cell");
  sw->add_option("--seed", o.seed, "Base seed");
  sw->add_option("--slack", o.slack, "Allowed shortfall");
  sw->add_option("--theorems", o.theorems, "Comma-separated list of t1, t2, t3");
  add_threads(sw);
  add_json(sw);
  add_strict(sw);
  add_out(sw);

  CLI::App* lat = app.add_subcommand("lattice", "Lattice condition tools");
  lat->add_option("--N", o.side, "Grid side")->required();
  lat->add_option("--mode", o.mode, "scan, maxfree or shift")->required();
  lat->add_option("--points", o.points, "File of \"x y\" lines");
  add_json(lat);
  add_strict(lat);
  add_out(lat);

  if (args.empty()) {
    err << app.help();
    return exit_usage;
  }
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*solve)
      return cmd_solve(o, in, out);
    if (*labels)
      return cmd_labels(o, in, out);
    if (*gen)
      return cmd_generate(o, out);
    if (*check)
      return cmd_check(o, in, out);
    if (*minimize)
      return cmd_minimize(o, out);
    if (*tight)
      return cmd_tightness(o, out);
    if (*sw)
      return cmd_sweep(o, out);
    return cmd_lattice(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

} // namespace kmodal::cli
