#include "kmodal/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>

#include "kmodal/parallel.hpp"
#include "kmodal/random.hpp"

namespace kmodal {

std::string_view to_string(Theorem t) noexcept {
  switch (t) {
  case Theorem::T1:
    return "T1";
  case Theorem::T2:
    return "T2";
  case Theorem::T3:
    break;
  }
  return "T3";
}

Theorem parse_theorem(std::string_view s) {
  if (s == "T1" || s == "t1" || s == "1")
    return Theorem::T1;
  if (s == "T2" || s == "t2" || s == "2")
    return Theorem::T2;
  if (s == "T3" || s == "t3" || s == "3")
    return Theorem::T3;
  throw InvalidParams("unknown theorem '" + std::string(s) + "'");
}

std::string_view mode_label(Theorem t) noexcept {
  switch (t) {
  case Theorem::T1:
    return "inc";
  case Theorem::T2:
    return "joint";
  case Theorem::T3:
    break;
  }
  return "any";
}

double theorem_target(Theorem theorem, std::size_t n, std::size_t k) {
  const double c = theorem == Theorem::T3 ? 2.0 * k + 1.0 : 2.0 * k;
  return std::sqrt(c * static_cast<double>(n));
}

std::size_t required_length(double target, std::size_t slack) {
  const auto need = static_cast<std::size_t>(std::max(0.0, std::ceil(target - 1e-9)));
  return need > slack ? need - slack : 0;
}

BoundReport check_theorem(const Permutation& p, std::size_t k, Theorem theorem,
                          std::size_t slack) {
  if (k == 0)
    throw InvalidParams("theorem checks need k >= 1");
  if (p.empty())
    throw EmptyPermutation();
  BoundReport r;
  r.theorem = theorem;
  r.n = p.size();
  r.k = k;
  r.slack = slack;
  r.target = theorem_target(theorem, p.size(), k);
  switch (theorem) {
  case Theorem::T1: {
    Witness w = longest_kmodal(p, k, SolveMode::IncFirst);
    r.achieved = w.length();
    r.witness = std::move(w);
    break;
  }
  case Theorem::T2: {
    const JointAnchor a = best_joint_anchor(p, k);
    r.achieved = a.joint();
    r.witness = a;
    break;
  }
  case Theorem::T3: {
    Witness w = longest_kmodal(p, k, SolveMode::Any);
    r.achieved = w.length();
    r.witness = std::move(w);
    break;
  }
  }
  r.pass = r.achieved >= required_length(r.target, slack);
  return r;
}

namespace {

struct PerPermValues {
  std::array<std::size_t, 3> achieved;
};

PerPermValues achieved_all(const Permutation& p, std::size_t k) {
  const auto inc = kmodal_ending_lengths(p, k, Direction::Inc);
  const auto dec = kmodal_ending_lengths(p, k, Direction::Dec);
  std::size_t best_inc = 0, best_dec = 0, joint = 0;
  for (std::size_t i = 0; i < inc.size(); ++i) {
    best_inc = std::max(best_inc, inc[i]);
    best_dec = std::max(best_dec, dec[i]);
    joint = std::max(joint, std::min(inc[i], dec[i]));
  }
  return {{best_inc, joint, std::max(best_inc, best_dec)}};
}

} // namespace

std::array<PermutationMinimum, 3> min_over_all_perms_all(std::size_t n, std::size_t k,
                                                         std::size_t threads) {
  if (n == 0)
    throw InvalidParams("min_over_all_perms needs n >= 1");
  if (n > min_over_all_limit)
    throw TooLarge("min_over_all_perms supports n <= " + std::to_string(min_over_all_limit));
  if (k == 0)
    throw InvalidParams("theorem checks need k >= 1");

  // One job per leading value; jobs in ascending order cover the permutations
  // in lexicographic order, so the first strict minimum is the lexicographic one.
  struct JobResult {
    std::array<std::size_t, 3> minimum{};
    std::array<std::vector<Value>, 3> argmin;
  };
  std::vector<JobResult> jobs(n);
  parallel_for(n, resolve_threads(threads), [&](std::size_t job) {
    std::vector<Value> v(n);
    v[0] = static_cast<Value>(job + 1);
    Value next = 1;
    for (std::size_t i = 1; i < n; ++i, ++next) {
      if (next == v[0])
        ++next;
      v[i] = next;
    }
    JobResult& res = jobs[job];
    res.minimum.fill(SIZE_MAX);
    do {
      const Permutation p = make_permutation(v);
      const PerPermValues vals = achieved_all(p, k);
      for (std::size_t t = 0; t < 3; ++t)
        if (vals.achieved[t] < res.minimum[t]) {
          res.minimum[t] = vals.achieved[t];
          res.argmin[t] = v;
        }
    } while (std::next_permutation(v.begin() + 1, v.end()));
  });

  std::array<PermutationMinimum, 3> out;
  for (std::size_t t = 0; t < 3; ++t) {
    std::size_t best_job = 0;
    for (std::size_t j = 1; j < n; ++j)
      if (jobs[j].minimum[t] < jobs[best_job].minimum[t])
        best_job = j;
    out[t].minimum = jobs[best_job].minimum[t];
    out[t].argmin = make_permutation(jobs[best_job].argmin[t]);
  }
  return out;
}

PermutationMinimum min_over_all_perms(std::size_t n, std::size_t k, Theorem theorem,
                                      std::size_t threads) {
  auto all = min_over_all_perms_all(n, k, threads);
  return std::move(all[static_cast<std::size_t>(theorem)]);
}

TightnessRecord tightness_report(Family family, std::size_t k, std::size_t t) {
  TightnessRecord r;
  r.family = family;
  r.k = k;
  r.t = t;
  const Permutation p = generate(family, k, t);
  r.n = p.size();
  r.mode = family == Family::Strong ? SolveMode::IncFirst : SolveMode::Any;
  r.cap = family == Family::Strong ? k * t : (2 * k + 1) * t;
  r.achieved = p.empty() ? 0 : longest_kmodal(p, k, r.mode).length();
  const double c = family == Family::Strong ? 2.0 * k : 2.0 * k + 1.0;
  r.ratio = r.n == 0 ? 0.0 : static_cast<double>(r.achieved) / std::sqrt(c * r.n);
  r.pass = r.achieved <= r.cap;
  return r;
}

namespace {

void validate(const SweepConfig& cfg) {
  auto positive = [](const std::vector<std::size_t>& v, const char* what) {
    if (v.empty())
      throw ConfigError(std::string("empty ") + what + " range");
    if (std::find(v.begin(), v.end(), std::size_t{0}) != v.end())
      throw ConfigError(std::string(what) + " values must be positive");
  };
  positive(cfg.ks, "k");
  if (cfg.family) {
    positive(cfg.ts, "t");
    return;
  }
  positive(cfg.ns, "n");
  if (cfg.samples == 0)
    throw ConfigError("empty sample range (samples must be >= 1)");
  if (cfg.theorems.empty())
    throw ConfigError("empty theorem set");
}

} // namespace

std::vector<SweepRow> sweep(const SweepConfig& cfg, std::size_t threads) {
  validate(cfg);
  const std::size_t workers = resolve_threads(threads);

  if (cfg.family) {
    const Family fam = *cfg.family;
    const std::size_t cells = cfg.ks.size() * cfg.ts.size();
    std::vector<SweepRow> rows(cells);
    parallel_for(cells, workers, [&](std::size_t cell) {
      const std::size_t k = cfg.ks[cell / cfg.ts.size()];
      const std::size_t t = cfg.ts[cell % cfg.ts.size()];
      const TightnessRecord rec = tightness_report(fam, k, t);
      SweepRow& row = rows[cell];
      row.theorem = fam == Family::Strong ? Theorem::T1 : Theorem::T3;
      row.family = std::string(to_string(fam));
      row.n = rec.n;
      row.k = k;
      row.t = t;
      row.mode = std::string(to_string(rec.mode));
      row.achieved = rec.achieved;
      row.target = static_cast<double>(rec.cap);
      row.slack = 0;
      row.pass = rec.pass;
    });
    return rows;
  }

  const std::size_t cells = cfg.ks.size() * cfg.ns.size();
  const std::size_t units = cells * cfg.samples;
  const std::size_t per_unit = cfg.theorems.size();
  std::vector<SweepRow> rows(units * per_unit);
  parallel_for(units, workers, [&](std::size_t unit) {
    const std::size_t cell = unit / cfg.samples;
    const std::size_t sample = unit % cfg.samples;
    const std::size_t k = cfg.ks[cell / cfg.ns.size()];
    const std::size_t n = cfg.ns[cell % cfg.ns.size()];
    const std::uint64_t seed = derive_seed(cfg.seed, cell, sample);
    const Permutation p = random_permutation(n, seed);
    for (std::size_t th = 0; th < per_unit; ++th) {
      const BoundReport rep = check_theorem(p, k, cfg.theorems[th], cfg.slack);
      SweepRow& row = rows[unit * per_unit + th];
      row.theorem = rep.theorem;
      row.family = "random";
      row.seed = seed;
      row.n = n;
      row.k = k;
      row.mode = std::string(mode_label(rep.theorem));
      row.achieved = rep.achieved;
      row.target = rep.target;
      row.slack = rep.slack;
      row.pass = rep.pass;
    }
  });
  return rows;
}

std::string format_target(double target) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", target);
  return buf;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << sweep_csv_header << '\n';
  for (const SweepRow& r : rows) {
    os << to_string(r.theorem) << ',' << r.family << ',';
    if (r.seed)
      os << *r.seed;
    os << ',' << r.n << ',' << r.k << ',';
    if (r.t)
      os << *r.t;
    os << ',' << r.mode << ',' << r.achieved << ',' << format_target(r.target) << ','
       << r.slack << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  write_sweep_csv(os, rows);
  return os.str();
}

} // namespace kmodal
