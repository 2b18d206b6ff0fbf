// The master dimension oracle: every closed-form theorem checked against the
// constructive (defining-set) dimension over its whole validity domain within
// the configured size limits.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lcdbch {

struct OracleLimits {
    uint64_t qm_max = 6561;        // 3^8: all theorems, all prime powers
    uint32_t q2_m_max = 20;        // q = 2 defining-set-only extension
    uint64_t run_qm_max = 65536;  // 2^16 ceiling for the run-count bounds sweep
    bool include_run_bounds = true;
    std::optional<uint64_t> only_q;
    std::optional<std::pair<uint32_t, uint32_t>> m_range;
    std::string only_theorem;  // substring filter on theorem tags; empty = all
};

struct OracleSummary {
    uint64_t checked = 0;
    uint64_t skipped = 0;  // parameter tuples outside a theorem's domain
    std::vector<std::string> mismatches;
    void merge(OracleSummary&& other);
};

// (q, m, run_all_theorems, run_run_bounds) work items for the sweep.
struct OracleTask {
    uint64_t q = 0;
    uint32_t m = 0;
    bool all_theorems = false;
    bool run_bounds = false;
};
std::vector<OracleTask> oracle_tasks(const OracleLimits& lim);

OracleSummary run_master_oracle(const OracleLimits& lim, unsigned threads);

// LCDBCH_THREADS override, else hardware concurrency.
unsigned default_thread_count();

}  // namespace lcdbch
