#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "umbra/partition_stats.hpp"

using namespace umbra;

// Times the RGS enumeration kernels against each other and verifies they
// produce the same distribution tables.  Default n = 12 (Bell(12) = 4213597
// partitions per statistic).
int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 12;
  if (n < 1 || n > kMaxPartitionN) {
    std::fprintf(stderr, "n must be in 1..%ld\n", kMaxPartitionN);
    return 2;
  }

  auto timed = [&](const char* name, StatTables (*fn)(int, Statistic)) {
    auto t0 = std::chrono::steady_clock::now();
    StatTables t = fn(n, Statistic::Inv);
    auto t1 = std::chrono::steady_clock::now();
    long cells = 0;
    for (const auto& row : t.per_k) cells += static_cast<long>(row.size());
    std::printf("%-8s n=%d  %6lld ms  (%ld distribution cells)\n", name, n,
                static_cast<long long>(
                    std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()),
                cells);
    return t;
  };

  StatTables serial = timed("serial", statistic_tables_serial);
  StatTables parallel = timed("parallel", statistic_tables_parallel);

  bool same = serial.per_k == parallel.per_k;
  std::printf("outputs identical: %s\n", same ? "yes" : "no");
  return same ? 0 : 1;
}
