#include "permorder/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permorder {

i64 CycleType::degree() const {
  i64 n = 0;
  for (auto [d, k] : parts) n += d * k;
  return n;
}

i64 CycleType::large_part_count(i64 m, ThresholdExponent s) const {
  i64 count = 0;
  for (auto [d, k] : parts) {
    if (s.is_large(d, m)) count += k;
  }
  return count;
}

Int count_of_type(const CycleType& type) {
  const i64 n = type.degree();
  Int denom(1);
  for (auto [d, k] : type.parts) {
    if (d < 1 || k < 1) throw std::invalid_argument("count_of_type: malformed type");
    Int dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    denom *= dp * factorial(k);
  }
  return factorial(n) / denom;
}

void for_each_cycle_type(i64 n, const std::vector<i64>& parts,
                         const std::function<void(const CycleType&)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_cycle_type: n >= 0 required");
  std::vector<i64> desc(parts.rbegin(), parts.rend());  // largest first
  std::vector<i64> stack;
  CycleType scratch;
  auto emit = [&] {
    scratch.parts.clear();
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {  // ascending
      if (!scratch.parts.empty() && scratch.parts.back().first == *it) {
        scratch.parts.back().second += 1;
      } else {
        scratch.parts.emplace_back(*it, 1);
      }
    }
    fn(scratch);
  };
  auto rec = [&](auto&& self, i64 remaining, std::size_t start) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (std::size_t i = start; i < desc.size(); ++i) {
      if (desc[i] > remaining) continue;
      stack.push_back(desc[i]);
      self(self, remaining - desc[i], i);
      stack.pop_back();
    }
  };
  rec(rec, n, 0);
}

namespace {

constexpr i64 kBruteLimit = 8;

// Calls fn(cycle_lengths) for every permutation of {0, ..., n-1}; the first
// three cycle lengths listed are those of the cycles containing 0, 1, 2
// (deduplicated), so callers can classify the marked points.
template <typename Fn>
void for_each_permutation(i64 n, Fn&& fn) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<i64> lengths;
  std::vector<char> seen(static_cast<std::size_t>(n));
  do {
    std::fill(seen.begin(), seen.end(), 0);
    lengths.clear();
    i64 marked_cycles = 0;
    for (int start = 0; start < n; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      i64 len = 0;
      bool marked = start < 3;
      for (int x = start; !seen[static_cast<std::size_t>(x)]; x = perm[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        ++len;
      }
      lengths.push_back(len);
      if (marked) ++marked_cycles;
    }
    fn(lengths, marked_cycles);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

Int brute_count(i64 n, i64 m) {
  if (n < 1 || m < 1) throw std::invalid_argument("brute_count: n, m >= 1 required");
  if (n > kBruteLimit) throw std::invalid_argument("brute_count: n exceeds the exhaustive limit 8");
  i64 count = 0;
  for_each_permutation(n, [&](const std::vector<i64>& lengths, i64) {
    for (i64 len : lengths) {
      if (m % len != 0) return;
    }
    ++count;
  });
  return Int(count);
}

Int brute_event_count(i64 n, i64 m, i64 t) {
  if (n < 1 || m < 1 || t < 0) throw std::invalid_argument("brute_event_count: bad arguments");
  if (n > kBruteLimit) throw std::invalid_argument("brute_event_count: n exceeds the exhaustive limit 8");
  if (n <= 2 * t) throw std::invalid_argument("brute_event_count: n > 2t required");
  const i64 target = n - t;
  i64 count = 0;
  for_each_permutation(n, [&](const std::vector<i64>& lengths, i64) {
    bool has_target = false;
    for (i64 len : lengths) {
      if (m % len != 0) return;
      if (len == target) has_target = true;
    }
    if (has_target) ++count;
  });
  return Int(count);
}

BruteStats brute_stats(i64 n, i64 m, ThresholdExponent s) {
  if (n < 1 || m < 1) throw std::invalid_argument("brute_stats: n, m >= 1 required");
  if (n > kBruteLimit) throw std::invalid_argument("brute_stats: n exceeds the exhaustive limit 8");
  // Precompute largeness of every possible length.
  std::vector<char> is_large(static_cast<std::size_t>(n) + 1, 0);
  for (i64 d = 1; d <= n; ++d) {
    if (m % d == 0) is_large[static_cast<std::size_t>(d)] = s.is_large(d, m) ? 1 : 0;
  }
  i64 total = 0;
  std::array<i64, 5> strata{};
  std::array<i64, 3> split{};
  for_each_permutation(n, [&](const std::vector<i64>& lengths, i64 marked_cycles) {
    i64 large = 0;
    for (i64 len : lengths) {
      if (m % len != 0) return;
      if (is_large[static_cast<std::size_t>(len)]) ++large;
    }
    ++total;
    strata[static_cast<std::size_t>(std::min<i64>(large, 4))] += 1;
    if (large == 0 && n >= 3) split[static_cast<std::size_t>(marked_cycles - 1)] += 1;
  });
  BruteStats out;
  out.total = total;
  for (int j = 0; j < 5; ++j) out.strata[static_cast<std::size_t>(j)] = strata[static_cast<std::size_t>(j)];
  for (int j = 0; j < 3; ++j) out.marked_split[static_cast<std::size_t>(j)] = split[static_cast<std::size_t>(j)];
  return out;
}

CrosscheckReport crosscheck(i64 n, i64 m, ThresholdExponent s) {
  if (n < 1 || m < 1) throw std::invalid_argument("crosscheck: n, m >= 1 required");
  if (n > 30) throw std::invalid_argument("crosscheck: n exceeds the type-enumeration limit 30");

  CrosscheckReport report;
  report.n = n;
  report.m = m;
  report.s = s;

  Engine engine;
  const auto divisors = divisors_up_to(m, n);
  report.dp_total = engine.count_all_cycles_in(n, divisors);
  report.dp_strata = engine.stratified_counts(n, m, s);

  report.type_total = 0;
  for (auto& v : report.type_strata) v = 0;
  for_each_cycle_type(n, divisors, [&](const CycleType& type) {
    const Int c = count_of_type(type);
    report.type_total += c;
    const i64 j = std::min<i64>(type.large_part_count(m, s), 4);
    report.type_strata[static_cast<std::size_t>(j)] += c;
  });

  std::ostringstream why;
  auto fail = [&](const std::string& msg) {
    if (report.first_discrepancy.empty()) report.first_discrepancy = msg;
  };

  if (report.type_total != report.dp_total) {
    why << "type-enumeration total " << report.type_total.get_str() << " != recurrence total "
        << report.dp_total.get_str();
    fail(why.str());
  }
  for (int j = 0; j < 5; ++j) {
    if (report.type_strata[static_cast<std::size_t>(j)] != report.dp_strata[static_cast<std::size_t>(j)]) {
      fail("stratum " + std::to_string(j) + ": types " +
           report.type_strata[static_cast<std::size_t>(j)].get_str() + " != recurrence " +
           report.dp_strata[static_cast<std::size_t>(j)].get_str());
      break;
    }
  }

  if (n <= kBruteLimit) {
    const BruteStats brute = brute_stats(n, m, s);
    report.brute_total = brute.total;
    if (brute.total != report.dp_total) {
      fail("exhaustive count " + brute.total.get_str() + " != recurrence total " +
           report.dp_total.get_str());
    }
    for (int j = 0; j < 5; ++j) {
      if (brute.strata[static_cast<std::size_t>(j)] != report.dp_strata[static_cast<std::size_t>(j)]) {
        fail("exhaustive stratum " + std::to_string(j) + " disagrees with recurrence");
        break;
      }
    }
    if (n >= 3) {
      try {
        const auto b = engine.breakdown(n, m, s);
        const Rat split_props[3] = {b.p0_1, b.p0_2, b.p0_3};
        for (int j = 0; j < 3; ++j) {
          if (split_props[j] != make_rat(brute.marked_split[static_cast<std::size_t>(j)], factorial(n))) {
            fail("marked-point split " + std::to_string(j + 1) + " disagrees with exhaustive count");
            break;
          }
        }
        report.marked_split_checked = true;
      } catch (const std::logic_error& e) {
        fail(e.what());
      }
    }
  }

  report.pass = report.first_discrepancy.empty();
  return report;
}

}  // namespace permorder
