#pragma once

#include <functional>
#include <vector>

#include "umbra/check_report.hpp"
#include "umbra/poly.hpp"
#include "umbra/rational.hpp"

namespace umbra {

// Statistics on set partitions, computed by exhaustive enumeration over
// restricted growth strings (RGS).  A partition of an n-element ground set
// is encoded as w[0..n-1] with w[0] = 0 and w[i] <= 1 + max(w[0..i-1]);
// w[i] is the block label of the i-th smallest element.
//
// Two statistics are supported:
//   Inv:  ground set {1..n}.  Blocks are sorted by their maxima; with b_i
//         the 1-based index of the block containing i, inv counts pairs
//         i > j with b_i < b_j.
//   Cigl: ground set {0..n-1}.  The statistic is the sum of the nonzero
//         elements lying in the block that contains 0.

enum class Statistic { Inv, Cigl };

const char* statistic_name(Statistic s);

// Hard cap on the ground-set size for enumeration (Bell(12) = 4213597).
inline constexpr long kMaxPartitionN = 12;

struct SetPartition {
  // Blocks in standard form: each block ascending, blocks ordered by
  // their maxima.  Element values start at `base` (1 for Inv, 0 for Cigl).
  std::vector<std::vector<long>> blocks;
};

SetPartition partition_from_rgs(const std::vector<int>& rgs, long base);

long inv_statistic(const SetPartition& p);
long cigl_statistic(const SetPartition& p);

// Same statistics computed directly on the RGS encoding (used by the
// enumeration kernels; agrees with the SetPartition versions).
long inv_of_rgs(const std::vector<int>& rgs);
long cigl_of_rgs(const std::vector<int>& rgs);

// Streams all RGS of length n in lexicographic order.
void for_each_rgs(int n, const std::function<void(const std::vector<int>&)>& visit);

// Streams partitions of an n-element ground set in RGS-lexicographic
// order; k < 0 streams all block counts.
void for_each_partition(int n, int k, long base,
                        const std::function<void(const SetPartition&)>& visit);

// Distribution tables: per_k[k][v] counts partitions of [n] into k blocks
// with statistic value v.
struct StatTables {
  int n = 0;
  Statistic stat = Statistic::Inv;
  std::vector<std::vector<long>> per_k;  // index 0..n
};

StatTables statistic_tables_serial(int n, Statistic s);
// OpenMP kernel sharded over RGS prefixes; falls back to the serial
// reference when OpenMP is unavailable.  Identical output either way.
StatTables statistic_tables_parallel(int n, Statistic s);
StatTables statistic_tables(int n, Statistic s);

// Generating polynomials in q built from the tables.
Poly<Rat> statistic_stirling(int n, int k, Statistic s);
Poly<Rat> statistic_bell(int n, Statistic s);

// inv recurrence: {n+1,k}^inv = sum_{l=0}^{n} qbinom(n,l) {n-l,k-1}^inv
// checked for all rows n+1 <= n_max.
CheckReport check_inv_recurrence(long n_max);

// Two reports on the cigl statistic:
//   [0] id "cigl-product-identity":
//       x(x-1+q)(x-1+q^2)...(x-1+q^{n-1}) = sum_k {n,k}^cigl x^(x-1)...,
//       with ordinary falling factorials on the right.  Asserted.
//   [1] id "cigl-recurrence":
//       {n+1,k}^cigl = sum_l qbinom(n,l) q^C(n-l+1,2) {n-l,k-1}^cigl,
//       as printed.  Erratum detector; fails at n=1, k=1.
std::vector<CheckReport> check_cigl(long n_max);

// Comparison of a statistic distribution against the q-Stirling families.
struct FamilyMatchCell {
  long n = 0;
  long k = 0;
  bool tilde = false;             // equals {n,k}~ for the q-Gauss sequence
  bool carlitz = false;           // equals Carlitz {n,k}_q
  bool carlitz_rescaled = false;  // equals q^{-C(k,2)} {n,k}_q
};

struct FamilyMatchReport {
  Statistic stat = Statistic::Inv;
  long n_max = 0;
  std::vector<FamilyMatchCell> cells;
  bool all_tilde = true;
  bool all_carlitz = true;
  bool all_carlitz_rescaled = true;
};

FamilyMatchReport family_match_report(Statistic s, long n_max);

// q = 1 collapse: every statistic distribution specializes to the
// classical Stirling numbers.  Verified against the recurrence table.
CheckReport check_partition_specialization(long n_max);

}  // namespace umbra
