#include "output.hpp"

namespace permorder::cli {

json rat_json(const Rat& value) {
  return json{{"num", value.get_num().get_str()},
              {"den", value.get_den().get_str()},
              {"approx", decimal_string(value, 12)}};
}

std::string approx_from_strings(const std::string& num, const std::string& den) {
  return decimal_string(make_rat(Int(num), Int(den)), 12);
}

json regime_json(const Regime& regime) {
  return json{{"n", regime.n},
              {"m", regime.m},
              {"r", regime.r},
              {"alpha", regime.alpha ? 1 : 0},
              {"alpha_prime", regime.alpha_prime ? 1 : 0}};
}

json pair_set_json(const PairSet& set) {
  json pairs = json::array();
  for (auto [i, j] : set.pairs) pairs.push_back(json::array({i, j}));
  return json{{"kind", set.kind == PairSetKind::T ? "c" : "cprime"},
              {"r", set.r},
              {"m", set.m},
              {"pairs", pairs},
              {"coefficient", rat_json(set.coefficient)}};
}

json prediction_json(const AsymptoticPrediction& prediction) {
  const char* form = prediction.form == PredictionForm::leading_rn      ? "leading_rn"
                     : prediction.form == PredictionForm::leading_tfact ? "leading_tfact"
                                                                        : "upper_bound";
  json out{{"regime", regime_json(prediction.regime)},
           {"t_count", prediction.tk.t},
           {"k", rat_json(prediction.tk.k)},
           {"k_bound", rat_json(prediction.tk.k_bound)},
           {"pair_set", pair_set_json(prediction.pairs)},
           {"coefficient", rat_json(prediction.coefficient)},
           {"form", form},
           {"bound_not_estimate", prediction.form == PredictionForm::upper_bound},
           {"predicted", rat_json(prediction.predicted)},
           {"exact", rat_json(prediction.exact)},
           {"residual", rat_json(prediction.residual)}};
  if (prediction.family_t) out["family_t"] = *prediction.family_t;
  return out;
}

json breakdown_json(const ProportionBreakdown& b) {
  return json{{"p_total", rat_json(b.p_total)}, {"p0", rat_json(b.p0)},
              {"p0_1", rat_json(b.p0_1)},       {"p0_2", rat_json(b.p0_2)},
              {"p0_3", rat_json(b.p0_3)},       {"p1", rat_json(b.p1)},
              {"p2", rat_json(b.p2)},           {"p3", rat_json(b.p3)},
              {"p_ge4", rat_json(b.p_ge4)}};
}

json crosscheck_json(const CrosscheckReport& report) {
  auto strata_json = [](const std::array<Int, 5>& strata) {
    json arr = json::array();
    for (const Int& v : strata) arr.push_back(v.get_str());
    return arr;
  };
  json out{{"n", report.n},
           {"m", report.m},
           {"s", report.s.str()},
           {"pass", report.pass},
           {"type_total", report.type_total.get_str()},
           {"recurrence_total", report.dp_total.get_str()},
           {"type_strata", strata_json(report.type_strata)},
           {"recurrence_strata", strata_json(report.dp_strata)},
           {"marked_split_checked", report.marked_split_checked}};
  if (report.brute_total) out["exhaustive_total"] = report.brute_total->get_str();
  if (!report.pass) out["first_discrepancy"] = report.first_discrepancy;
  return out;
}

const char* top_divisor_class_name(TopDivisorClass cls) {
  switch (cls) {
    case TopDivisorClass::EqualsDegree:
      return "equals_degree";
    case TopDivisorClass::QuotientRPlus1:
      return "quotient_r_plus_1";
    case TopDivisorClass::QuotientAtLeastRPlus2:
      return "quotient_at_least_r_plus_2";
  }
  return "unknown";
}

}  // namespace permorder::cli
