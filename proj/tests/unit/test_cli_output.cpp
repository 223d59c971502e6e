#include <doctest.h>

#include <sstream>
#include <string>

#include "commands.hpp"
#include "output.hpp"

using namespace permorder;
using namespace permorder::cli;

TEST_CASE("rational JSON round-trips its approx field") {
  const Rat values[] = {rat_of(2, 3), rat_of(1, 98304), rat_of(-7, 72), rat_of(45, 64), rat_of(0),
                        make_rat(Int(1), factorial(60))};
  for (const Rat& v : values) {
    const json j = rat_json(v);
    CHECK(approx_from_strings(j.at("num"), j.at("den")) == j.at("approx").get<std::string>());
    CHECK(make_rat(Int(j.at("num").get<std::string>()), Int(j.at("den").get<std::string>())) == v);
  }
}

TEST_CASE("exact payload pins P(4,4) = 2/3") {
  const json payload = cmd_exact({4, 4, {}});
  CHECK(payload.at("total").at("num") == "2");
  CHECK(payload.at("total").at("den") == "3");
  CHECK(payload.at("strata_counts")[0] == "10");
  CHECK(payload.at("strata_counts")[1] == "6");
  CHECK(payload.at("breakdown").at("p0_2").at("num") == "1");
  CHECK(payload.at("breakdown").at("p0_2").at("den") == "4");
}

TEST_CASE("exact payload omits the three-point block below n = 3") {
  const json payload = cmd_exact({2, 4, {}});
  CHECK_FALSE(payload.contains("breakdown"));
  CHECK(payload.at("total").at("num") == "1");  // identity + transposition
}

TEST_CASE("coeff payload pins c(1) for even m") {
  const json payload = cmd_coeff({PairSetKind::T, 1, 12});
  CHECK(payload.at("pairs") == json::array({json::array({1, 1})}));
  CHECK(payload.at("coefficient").at("num") == "2");
  CHECK(payload.at("coefficient").at("den") == "1");
}

TEST_CASE("divisors payload carries split and classifications") {
  const json payload = cmd_divisors({12, 12, {}, std::nullopt});
  CHECK(payload.at("small") == json::array({1, 2, 3, 4, 6}));
  CHECK(payload.at("large") == json::array({12}));
  CHECK(payload.at("regime_r") == 1);
  bool found = false;
  for (const auto& row : payload.at("boundary_pairs")) {
    if (row.at("d1") == 6 && row.at("d2") == 6) found = true;
  }
  CHECK(found);
}

TEST_CASE("table CSV uses the documented column order") {
  CHECK(std::string(kTableCsvHeader) ==
        "n,m,r,exact_num,exact_den,predicted_num,predicted_den,residual_approx,"
        "scaled_residual_approx");
  std::ostringstream out;
  TableArgs args;
  args.family = "rn";
  args.r = 1;
  args.n_min = 10;
  args.n_max = 14;
  args.step = 2;
  args.format = "csv";
  CHECK(cmd_table(args, out) == kExitOk);
  const std::string text = out.str();
  CHECK(text.rfind(kTableCsvHeader, 0) == 0);
  CHECK(text.find("\n10,10,1,") != std::string::npos);
  CHECK(text.find("\n12,12,1,") != std::string::npos);
  std::size_t rows = 0;
  for (char ch : text) rows += (ch == '\n');
  CHECK(rows == 4);  // header + 3 grid points
}

TEST_CASE("table rejects bad parameters") {
  std::ostringstream out;
  TableArgs args;
  args.family = "rn";
  args.n_min = 20;
  args.n_max = 10;
  CHECK_THROWS_AS(cmd_table(args, out), std::invalid_argument);
  args.n_min = 1;
  args.n_max = 10;
  args.family = "nope";
  CHECK_THROWS_AS(cmd_table(args, out), std::invalid_argument);
  args.family = "tfact";
  args.t = 2;
  args.n_min = 3;  // below t * t!
  CHECK_THROWS_AS(cmd_table(args, out), std::invalid_argument);
}

TEST_CASE("mc payload reproduces hits for a fixed seed") {
  const json a = cmd_mc({10, 10, 50000, 123});
  const json b = cmd_mc({10, 10, 50000, 123});
  CHECK(a.at("hits") == b.at("hits"));
  CHECK(a.at("trials") == 50000);
}

TEST_CASE("oracle payload flags pass") {
  const json payload = cmd_oracle({8, 4, {}});
  CHECK(payload.at("pass") == true);
  CHECK(payload.at("recurrence_strata")[2] == "1260");
}
