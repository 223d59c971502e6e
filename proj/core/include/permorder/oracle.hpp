#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permorder/divisors.hpp"
#include "permorder/engine.hpp"
#include "permorder/rational.hpp"

namespace permorder {

/// Multiset of cycle lengths, stored as (length, multiplicity) ascending.
struct CycleType {
  std::vector<std::pair<i64, i64>> parts;

  i64 degree() const;  // sum of length * multiplicity
  i64 large_part_count(i64 m, ThresholdExponent s) const;
};

/// Number of permutations of degree() points with this cycle type:
/// n! / prod(d^k_d * k_d!).
Int count_of_type(const CycleType& type);

/// Streams every partition of n into parts drawn from `parts` (each exactly
/// once, largest part first); the empty partition for n = 0. The CycleType
/// passed to the callback is reused between calls — copy it to keep it.
void for_each_cycle_type(i64 n, const std::vector<i64>& parts,
                         const std::function<void(const CycleType&)>& fn);

/// Literal ground truth: iterates all n! permutations and counts those whose
/// cycle lengths all divide m. Guarded to n <= 8.
Int brute_count(i64 n, i64 m);

/// Among permutations of order dividing m, how many contain an (n-t)-cycle
/// (t = 0: are an n-cycle). Guarded to n <= 8; requires n - t > n/2 so the
/// event cycle is unique.
Int brute_event_count(i64 n, i64 m, i64 t);

/// Exhaustive per-permutation statistics for n <= 8.
struct BruteStats {
  Int total;                         // order divides m
  std::array<Int, 5> strata;         // by number of large cycles (4 = >= 4)
  std::array<Int, 3> marked_split;   // all-small permutations by how many
                                     // cycles hold the points 1,2,3 (n >= 3)
};
BruteStats brute_stats(i64 n, i64 m, ThresholdExponent s = {});

/// Cross-certification of the exact engine against the cycle-type oracle
/// (n <= 30) and, for n <= 8, against literal permutation enumeration.
struct CrosscheckReport {
  i64 n = 0, m = 0;
  ThresholdExponent s;
  bool pass = false;
  Int type_total;                // sum of count_of_type over all types
  Int dp_total;                  // count_all_cycles_in
  std::array<Int, 5> type_strata;
  std::array<Int, 5> dp_strata;
  std::optional<Int> brute_total;
  bool marked_split_checked = false;
  std::string first_discrepancy;  // empty when pass
};

CrosscheckReport crosscheck(i64 n, i64 m, ThresholdExponent s = {});

}  // namespace permorder
