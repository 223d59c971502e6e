#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "output.hpp"

namespace permorder::cli {

/// Exit codes: 0 success, 1 verification failure, 2 flag/validation error.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct ExactArgs {
  i64 n = 0, m = 0;
  ThresholdExponent s;
};
json cmd_exact(const ExactArgs& args);

struct DivisorsArgs {
  i64 m = 0, n = 0;
  ThresholdExponent s;
  std::optional<i64> r;
};
json cmd_divisors(const DivisorsArgs& args);

struct AsymptArgs {
  i64 n = 0, m = 0;
  std::optional<i64> t;
  AlphaPrimeRule rule = AlphaPrimeRule::definition;
};
json cmd_asympt(const AsymptArgs& args);

struct CoeffArgs {
  PairSetKind kind = PairSetKind::T;
  i64 r = 1, m = 1;
};
json cmd_coeff(const CoeffArgs& args);

struct ConditionalArgs {
  i64 n = 0, m = 0, t = 0;
};
json cmd_conditional(const ConditionalArgs& args);

struct OracleArgs {
  i64 n = 0, m = 0;
  ThresholdExponent s;
};
json cmd_oracle(const OracleArgs& args);  // payload["pass"] decides the exit code

struct McArgs {
  i64 n = 0, m = 0;
  u64 trials = 0, seed = 0;
};
json cmd_mc(const McArgs& args);

struct TableArgs {
  std::string family;  // rn | tfact | range
  i64 r = 1;
  i64 t = 2;
  i64 n_min = 0, n_max = 0, step = 1;
  std::string format = "json";  // json | csv
};
/// Emits rows (CSV with header, or a JSON document); returns an exit code.
int cmd_table(const TableArgs& args, std::ostream& out);

/// CSV column order, fixed:
/// n,m,r,exact_num,exact_den,predicted_num,predicted_den,residual_approx,scaled_residual_approx
extern const char* const kTableCsvHeader;

struct VerifyArgs {
  std::string suite;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace permorder::cli
