#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "commands.hpp"

namespace {

using namespace permorder;
using namespace permorder::cli;

void emit(const std::string& command, const json& params, const json& payload) {
  json doc{{"command", command}, {"params", params}, {"payload", payload}};
  std::cout << doc.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and asymptotic statistics of permutation orders dividing m"};
  app.require_subcommand(1);

  std::string s_text = "3/4";
  i64 n = 0, m = 0;

  auto* exact = app.add_subcommand("exact", "exact proportion P(n,m) with its full breakdown");
  exact->add_option("--n", n, "degree")->required();
  exact->add_option("--m", m, "order bound")->required();
  exact->add_option("--s", s_text, "threshold exponent P/Q in (1/2,1)");

  auto* divisors = app.add_subcommand("divisors", "divisor split and near-n classification");
  divisors->add_option("--m", m, "modulus")->required();
  divisors->add_option("--n", n, "degree")->required();
  divisors->add_option("--s", s_text, "threshold exponent P/Q");
  i64 r_flag = 0;
  auto* r_opt = divisors->add_option("--r", r_flag, "regime index (default floor(m/n) when m >= n)");

  auto* asympt = app.add_subcommand("asympt", "second-order prediction or upper bound vs exact");
  asympt->add_option("--n", n, "degree")->required();
  asympt->add_option("--m", m, "order bound")->required();
  i64 t_flag = 0;
  auto* t_opt = asympt->add_option("--t", t_flag, "factorial family parameter (m = t!(n-t))");
  std::string rule_text = "definition";
  asympt->add_option("--alpha-prime-rule", rule_text, "alpha' threshold variant")
      ->check(CLI::IsMember({"definition", "remark"}));

  auto* coeff = app.add_subcommand("coeff", "two-long-cycle pair set and coefficient");
  std::string kind_text;
  coeff->add_option("--kind", kind_text, "c or cprime")
      ->required()
      ->check(CLI::IsMember({"c", "cprime"}));
  i64 coeff_r = 1;
  coeff->add_option("--r", coeff_r, "regime index")->required();
  coeff->add_option("--m", m, "modulus")->required();

  auto* conditional = app.add_subcommand("conditional", "P(contains an (n-t)-cycle | order divides m)");
  conditional->add_option("--n", n, "degree")->required();
  conditional->add_option("--m", m, "order bound")->required();
  i64 cond_t = 0;
  conditional->add_option("--t", cond_t, "t (0 = n-cycle event)");

  auto* oracle = app.add_subcommand("oracle", "cross-certify the engine against enumeration");
  oracle->add_option("--n", n, "degree (<= 30)")->required();
  oracle->add_option("--m", m, "order bound")->required();
  oracle->add_option("--s", s_text, "threshold exponent P/Q");

  auto* mc = app.add_subcommand("mc", "seeded Monte Carlo estimate of P(n,m)");
  mc->add_option("--n", n, "degree")->required();
  mc->add_option("--m", m, "order bound")->required();
  u64 trials = 0, seed = 0;
  mc->add_option("--trials", trials, "number of samples")->required();
  mc->add_option("--seed", seed, "64-bit seed")->required();

  auto* table = app.add_subcommand("table", "per-n table of exact vs predicted values");
  TableArgs table_args;
  table->add_option("--family", table_args.family, "rn | tfact | range")
      ->required()
      ->check(CLI::IsMember({"rn", "tfact", "range"}));
  table->add_option("--r", table_args.r, "regime index for rn/range");
  table->add_option("--t", table_args.t, "factorial parameter for tfact");
  table->add_option("--n-min", table_args.n_min, "first n")->required();
  table->add_option("--n-max", table_args.n_max, "last n")->required();
  table->add_option("--step", table_args.step, "n stride");
  table->add_option("--format", table_args.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("--suite", suite, "identities|oracle|thm1a|thm1b|thm2|lemma24|corollary")
      ->required()
      ->check(CLI::IsMember({"identities", "oracle", "thm1a", "thm1b", "thm2", "lemma24",
                             "corollary"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*exact) {
      const ExactArgs args{n, m, ThresholdExponent::parse(s_text)};
      emit("exact", {{"n", n}, {"m", m}, {"s", s_text}}, cmd_exact(args));
    } else if (*divisors) {
      DivisorsArgs args{m, n, ThresholdExponent::parse(s_text), std::nullopt};
      if (*r_opt) args.r = r_flag;
      emit("divisors", {{"m", m}, {"n", n}, {"s", s_text}}, cmd_divisors(args));
    } else if (*asympt) {
      AsymptArgs args{n, m, std::nullopt,
                      rule_text == "remark" ? AlphaPrimeRule::remark : AlphaPrimeRule::definition};
      if (*t_opt) args.t = t_flag;
      emit("asympt", {{"n", n}, {"m", m}, {"alpha_prime_rule", rule_text}}, cmd_asympt(args));
    } else if (*coeff) {
      const CoeffArgs args{kind_text == "c" ? PairSetKind::T : PairSetKind::TPrime, coeff_r, m};
      emit("coeff", {{"kind", kind_text}, {"r", coeff_r}, {"m", m}}, cmd_coeff(args));
    } else if (*conditional) {
      emit("conditional", {{"n", n}, {"m", m}, {"t", cond_t}},
           cmd_conditional(ConditionalArgs{n, m, cond_t}));
    } else if (*oracle) {
      const json payload = cmd_oracle(OracleArgs{n, m, ThresholdExponent::parse(s_text)});
      emit("oracle", {{"n", n}, {"m", m}, {"s", s_text}}, payload);
      if (!payload.at("pass").get<bool>()) {
        std::cerr << "error: crosscheck failed: " << payload.value("first_discrepancy", "") << '\n';
        return kExitVerifyFailed;
      }
    } else if (*mc) {
      emit("mc", {{"n", n}, {"m", m}, {"trials", trials}, {"seed", seed}},
           cmd_mc(McArgs{n, m, trials, seed}));
    } else if (*table) {
      return cmd_table(table_args, std::cout);
    } else if (*verify) {
      return cmd_verify(VerifyArgs{suite}, std::cout, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}
