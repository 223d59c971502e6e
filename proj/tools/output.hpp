#pragma once

#include <json.hpp>

#include "permorder/asymptotics.hpp"
#include "permorder/divisors.hpp"
#include "permorder/engine.hpp"
#include "permorder/oracle.hpp"
#include "permorder/rational.hpp"

namespace permorder::cli {

using json = nlohmann::json;

/// Rationals serialize as decimal strings plus a 12-significant-digit
/// approximation; numerators and denominators routinely exceed any native
/// numeric type, so they are never emitted as JSON numbers.
json rat_json(const Rat& value);

/// Recomputes what rat_json would emit for "approx" from the num/den strings
/// (the round-trip contract).
std::string approx_from_strings(const std::string& num, const std::string& den);

json regime_json(const Regime& regime);
json pair_set_json(const PairSet& set);
json prediction_json(const AsymptoticPrediction& prediction);
json breakdown_json(const ProportionBreakdown& breakdown);
json crosscheck_json(const CrosscheckReport& report);

const char* top_divisor_class_name(TopDivisorClass cls);

}  // namespace permorder::cli
