#include "commands.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

#include "permorder/checks.hpp"
#include "permorder/montecarlo.hpp"
#include "permorder/parallel.hpp"

namespace permorder::cli {

json cmd_exact(const ExactArgs& args) {
  Engine engine;
  json payload{{"n", args.n}, {"m", args.m}, {"s", args.s.str()}};
  payload["total"] = rat_json(engine.proportion(args.n, args.m));
  json strata = json::array();
  for (const Int& count : engine.stratified_counts(args.n, args.m, args.s)) {
    strata.push_back(count.get_str());
  }
  payload["strata_counts"] = strata;
  payload["pge4_upper_bound"] = rat_json(engine.pge4_upper_bound(args.n, args.m, args.s));
  if (args.n >= 3) {
    payload["breakdown"] = breakdown_json(engine.breakdown(args.n, args.m, args.s));
  }
  return payload;
}

json cmd_divisors(const DivisorsArgs& args) {
  const DivisorSplit split = split_small_large(args.m, args.n, args.s);
  json payload{{"m", args.m},
               {"n", args.n},
               {"s", args.s.str()},
               {"divisor_count", divisor_count(args.m)},
               {"divisors", split.all()},
               {"small", split.small},
               {"large", split.large}};
  std::optional<i64> r = args.r;
  if (!r && args.m >= args.n) r = args.m / args.n;
  if (r) {
    payload["regime_r"] = *r;
    json classes = json::array();
    for (i64 d : split.all()) {
      classes.push_back(
          json{{"d", d}, {"class", top_divisor_class_name(classify_top_divisor(d, args.m, args.n, *r))}});
    }
    payload["classification"] = classes;
    json pairs = json::array();
    for (const BoundaryPair& p : boundary_pairs(args.m, args.n, *r)) {
      pairs.push_back(json{{"d1", p.d1}, {"d2", p.d2}, {"c1", p.c1}, {"c2", p.c2}});
    }
    payload["boundary_pairs"] = pairs;
  }
  return payload;
}

json cmd_asympt(const AsymptArgs& args) {
  Engine engine;
  return prediction_json(predict(args.n, args.m, engine, args.t, args.rule));
}

json cmd_coeff(const CoeffArgs& args) { return pair_set_json(pair_set(args.kind, args.r, args.m)); }

json cmd_conditional(const ConditionalArgs& args) {
  Engine engine;
  const Rat value = conditional_probability(args.n, args.m, args.t, engine);
  return json{{"n", args.n},
              {"m", args.m},
              {"t", args.t},
              {"event", args.t == 0 ? "n-cycle" : "(n-t)-cycle"},
              {"event_probability", rat_json(rat_of(1, args.n - args.t))},
              {"proportion", rat_json(engine.proportion(args.n, args.m))},
              {"conditional", rat_json(value)}};
}

json cmd_oracle(const OracleArgs& args) { return crosscheck_json(crosscheck(args.n, args.m, args.s)); }

json cmd_mc(const McArgs& args) {
  const SampleEstimate est = estimate(args.n, args.m, args.trials, args.seed);
  return json{{"n", est.n},         {"m", est.m},           {"trials", est.trials},
              {"seed", est.seed},   {"hits", est.hits},     {"estimate", est.estimate},
              {"std_error", est.std_error}};
}

const char* const kTableCsvHeader =
    "n,m,r,exact_num,exact_den,predicted_num,predicted_den,residual_approx,scaled_residual_approx";

namespace {

struct TableRow {
  i64 n = 0, m = 0, r = 0;
  Rat exact, predicted, residual;
  double scaled = 0.0;
};

json row_json(const TableRow& row) {
  return json{{"n", row.n},
              {"m", row.m},
              {"r", row.r},
              {"exact", rat_json(row.exact)},
              {"predicted", rat_json(row.predicted)},
              {"residual_approx", decimal_string(row.residual, 12)},
              {"scaled_residual_approx", row.scaled}};
}

void row_csv(const TableRow& row, std::ostream& out) {
  out << row.n << ',' << row.m << ',' << row.r << ',' << row.exact.get_num().get_str() << ','
      << row.exact.get_den().get_str() << ',' << row.predicted.get_num().get_str() << ','
      << row.predicted.get_den().get_str() << ',' << decimal_string(row.residual, 12) << ','
      << row.scaled << '\n';
}

double scaled_residual(const Rat& residual, i64 n, double exponent) {
  return to_double(residual) * std::pow(static_cast<double>(n), exponent);
}

}  // namespace

int cmd_table(const TableArgs& args, std::ostream& out) {
  if (args.n_min < 1 || args.n_max < args.n_min || args.step < 1) {
    throw std::invalid_argument("table: need 1 <= n-min <= n-max and step >= 1");
  }
  std::vector<i64> grid;
  for (i64 n = args.n_min; n <= args.n_max; n += args.step) grid.push_back(n);

  std::vector<std::vector<TableRow>> rows_by_point(grid.size());
  if (args.family == "rn") {
    if (args.r < 1) throw std::invalid_argument("table: --r must be >= 1 for family rn");
    parallel_for(0, static_cast<i64>(grid.size()), [&](i64 idx) {
      const i64 n = grid[static_cast<std::size_t>(idx)];
      Engine engine;
      const auto p = predict(n, args.r * n, engine);
      rows_by_point[static_cast<std::size_t>(idx)].push_back(
          {n, args.r * n, args.r, p.exact, p.predicted, p.residual,
           scaled_residual(p.residual, n, 2.4)});
    });
  } else if (args.family == "tfact") {
    Family family{Family::Kind::tfact, args.t};
    if (args.t < 2 || args.t > 7) throw std::invalid_argument("table: --t must be in [2,7]");
    if (!family.admissible(args.n_min)) {
      throw std::invalid_argument("table: n-min must exceed t*t! for family tfact");
    }
    parallel_for(0, static_cast<i64>(grid.size()), [&](i64 idx) {
      const i64 n = grid[static_cast<std::size_t>(idx)];
      Engine engine;
      const i64 m = family.m_for(n);
      const auto p = predict(n, m, engine, args.t);
      rows_by_point[static_cast<std::size_t>(idx)].push_back(
          {n, m, p.regime.r, p.exact, p.predicted, p.residual, scaled_residual(p.residual, n, 2.4)});
    });
  } else if (args.family == "range") {
    if (args.r < 1) throw std::invalid_argument("table: --r must be >= 1 for family range");
    parallel_for(0, static_cast<i64>(grid.size()), [&](i64 idx) {
      const i64 n = grid[static_cast<std::size_t>(idx)];
      Engine engine;
      auto& rows = rows_by_point[static_cast<std::size_t>(idx)];
      for (i64 m = args.r * n + 1; m < (args.r + 1) * n; ++m) {
        const auto p = predict(n, m, engine);
        rows.push_back({n, m, args.r, p.exact, p.predicted, p.residual,
                        scaled_residual(p.residual, n, 1.5)});
      }
    });
  } else {
    throw std::invalid_argument("table: unknown family '" + args.family + "'");
  }

  if (args.format == "csv") {
    out << kTableCsvHeader << '\n';
    for (const auto& rows : rows_by_point) {
      for (const TableRow& row : rows) row_csv(row, out);
    }
  } else if (args.format == "json") {
    json rows = json::array();
    for (const auto& chunk : rows_by_point) {
      for (const TableRow& row : chunk) rows.push_back(row_json(row));
    }
    json doc{{"command", "table"},
             {"params",
              {{"family", args.family},
               {"r", args.r},
               {"t", args.t},
               {"n_min", args.n_min},
               {"n_max", args.n_max},
               {"step", args.step}}},
             {"rows", rows}};
    out << doc.dump(2) << '\n';
  } else {
    throw std::invalid_argument("table: unknown format '" + args.format + "'");
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const checks::SuiteReport report = checks::run_suite(args.suite);
  json checks_json = json::array();
  for (const auto& check : report.checks) {
    checks_json.push_back(json{{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
  }
  json doc{{"command", "verify"},
           {"params", {{"suite", args.suite}}},
           {"pass", report.pass()},
           {"checks", checks_json}};
  out << doc.dump(2) << '\n';
  if (!report.pass()) {
    err << "error: verification failed: " << report.first_failure() << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace permorder::cli
