#include "lcdbch/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "lcdbch/dimensions.hpp"

namespace lcdbch {

void OracleSummary::merge(OracleSummary&& other) {
    checked += other.checked;
    skipped += other.skipped;
    mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("LCDBCH_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::vector<OracleTask> oracle_tasks(const OracleLimits& lim) {
    std::vector<OracleTask> tasks;
    const uint64_t cap = std::max(lim.qm_max, lim.include_run_bounds ? lim.run_qm_max : 0);
    for (uint64_t q = 2; q * q <= cap; ++q) {
        if (!is_prime_power(q)) continue;
        if (lim.only_q && *lim.only_q != q) continue;
        uint64_t qm = q * q;
        for (uint32_t m = 2;; ++m) {
            const bool all = qm <= lim.qm_max || (q == 2 && m <= lim.q2_m_max);
            const bool run_bounds = lim.include_run_bounds && qm <= lim.run_qm_max;
            const bool in_mrange =
                !lim.m_range || (m >= lim.m_range->first && m <= lim.m_range->second);
            if ((all || run_bounds) && in_mrange) tasks.push_back({q, m, all, run_bounds});
            if (!all && !run_bounds) break;
            if (qm > cap / q && !(q == 2 && m < lim.q2_m_max)) break;
            qm *= q;
        }
    }
    return tasks;
}

namespace {

// Grows a union of cyclotomic cosets one base exponent at a time.
class DefiningSetSweeper {
public:
    explicit DefiningSetSweeper(const CosetParams& p) : params_(p) {}
    void add(uint64_t e) {
        uint64_t lead = e, size = 1;
        for (uint64_t x = mulmod(e, params_.q, params_.n); x != e;
             x = mulmod(x, params_.q, params_.n)) {
            lead = std::min(lead, x);
            ++size;
        }
        if (seen_.insert(lead).second) total_ += size;
    }
    uint64_t size() const { return total_; }

private:
    CosetParams params_;
    std::unordered_set<uint64_t> seen_;
    uint64_t total_ = 0;
};

struct QmChecker {
    const OracleLimits& lim;
    OracleSummary s;
    CosetParams params;

    bool want(const std::string& tag) const {
        return lim.only_theorem.empty() || tag.find(lim.only_theorem) != std::string::npos;
    }

    void mismatch(const std::string& tag, uint64_t param, const DimPrediction& p,
                  uint64_t constructive) {
        std::ostringstream os;
        os << tag << " q=" << params.q << " m=" << params.m << " param=" << param
           << " formula=";
        if (p.kind == PredKind::Exact) os << p.k;
        else os << '[' << p.k_lower << ',' << p.k_upper << ']';
        os << " constructive=" << constructive << " (" << p.source << ")";
        s.mismatches.push_back(os.str());
    }

    void check(const std::string& tag, uint64_t param, const DimPrediction& p,
               const CodeSpec& spec) {
        if (!p.covered()) {
            ++s.skipped;
            return;
        }
        const uint64_t kc = dimension_constructive(spec);
        const bool ok = p.kind == PredKind::Exact
                            ? p.k == kc
                            : (p.k_lower <= kc && kc <= p.k_upper);
        ++s.checked;
        if (!ok) mismatch(tag, param, p, kc);
    }

    void check_against(const std::string& tag, uint64_t param, const DimPrediction& p,
                       uint64_t kc) {
        if (!p.covered()) {
            ++s.skipped;
            return;
        }
        const bool ok = p.kind == PredKind::Exact
                            ? p.k == kc
                            : (p.k_lower <= kc && kc <= p.k_upper);
        ++s.checked;
        if (!ok) mismatch(tag, param, p, kc);
    }

    void run_all() {
        const uint64_t q = params.q;
        const uint32_t m = params.m;
        const uint64_t n = params.n;
        const uint64_t mid = q % 2 == 1 ? n / 2 : (n + 1) / 2;

        if (want("narrow"))
            for (uint64_t u = 1; u <= q - 1; ++u) {
                const DimPrediction p = dim_narrow(q, m, u);
                if (!p.covered()) {
                    ++s.skipped;
                    continue;
                }
                check("narrow", u, p, make_spec(Family::Narrow, params, p.designed));
            }

        if (want("familyA"))
            for (uint64_t u = 1; u <= q - 1; ++u) {
                const DimPrediction p = dim_familyA_onesided(q, m, u);
                if (!p.covered()) {
                    ++s.skipped;
                    continue;
                }
                const uint64_t dp = p.designed;  // the one-sided delta
                const uint64_t b_hi = q % 2 == 1 ? mid + 1 : mid;
                check("familyA-hi", u, p,
                      make_spec(Family::Generic, params, dp, b_hi));
                if (dp - 1 <= mid)
                    check("familyA-lo", u, p,
                          make_spec(Family::Generic, params, dp, mid - (dp - 1)));
            }

        if (want("lcdA"))
            for (uint64_t u = 1; u <= q - 1; ++u) {
                const DimPrediction p = dim_lcd_A(q, m, u);
                if (!p.covered()) {
                    ++s.skipped;
                    continue;
                }
                const uint64_t delta = q % 2 == 1 ? (p.designed / 2) : (p.designed + 1) / 2;
                const Family fam = q % 2 == 1 ? Family::LcdAEvenN : Family::LcdAOddN;
                try {
                    check("lcdA", u, p, make_spec(fam, params, delta));
                } catch (const std::invalid_argument&) {
                    ++s.skipped;  // delta outside the family window
                }
            }

        if (want("designed-qt"))
            for (uint32_t t = 1; t <= params.m_half; ++t) {
                const DimPrediction p = dim_designed_qt(q, m, t);
                if (!p.covered()) {
                    ++s.skipped;
                    continue;
                }
                const uint64_t qt = ipow_checked(q, t);
                const Family fam = q % 2 == 1 ? Family::LcdAEvenN : Family::LcdAOddN;
                const uint64_t delta = q % 2 == 1 ? (qt - 1) / 2 : qt / 2;
                try {
                    check("designed-qt", t, p, make_spec(fam, params, delta));
                } catch (const std::invalid_argument&) {
                    ++s.skipped;
                }
            }

        if (want("small-delta-table")) {
            const uint64_t window = m % 2 == 1 ? ipow_checked(q, (m + 1) / 2) + 1
                                               : 2 * ipow_checked(q, m / 2) + 1;
            const uint64_t dmax = std::min(window, (n + 1) / 2 - 1);
            DefiningSetSweeper sweeper(params);
            sweeper.add(0);
            for (uint64_t delta = 2; delta <= dmax; ++delta) {
                sweeper.add(delta - 1);
                sweeper.add(n - (delta - 1));
                const DimPrediction p = dim_lcd_B_small_delta(q, m, delta);
                check_against("small-delta-table", delta, p, n - sweeper.size());
            }
        }

        if (want("lcdB-u") && q % 2 == 1)
            for (uint64_t u = 1; u <= q - 1; ++u) {
                const DimPrediction p = dim_lcd_B_u(q, m, u);
                if (!p.covered()) {
                    ++s.skipped;
                    continue;
                }
                const uint64_t delta = u * ipow_checked(q, params.m_half) + 1;
                check("lcdB-u", u, p, make_spec(Family::LcdB, params, delta));
            }

        if (want("small-delta"))
            for (uint64_t delta : {2ull, 3ull, 4ull}) {
                const DimPrediction p = dim_small_delta(q, m, delta);
                if (!p.covered()) {
                    ++s.skipped;
                    continue;
                }
                if (delta >= (n + 1) / 2) {
                    ++s.skipped;
                    continue;
                }
                check("small-delta", delta, p, make_spec(Family::LcdB, params, delta));
            }

        if (want("melas") && q % 2 == 1)
            check("melas", 2, dim_melas_evenlike(q, m),
                  make_spec(Family::MelasEvenlike, params, 2));
    }

    void run_run_bounds() {
        const uint64_t q = params.q;
        const uint32_t m = params.m;
        for (uint32_t lambda = params.m_half; lambda + 1 <= m; ++lambda) {
            uint64_t deg = 0;
            const DimPrediction p = dim_lcd_B_run_bounds(q, m, lambda, &deg);
            if (!p.covered()) {
                ++s.skipped;
                continue;
            }
            const uint64_t delta = ipow_checked(q, lambda);
            if (want("run-count-bounds")) {
                try {
                    check("run-count-bounds", lambda, p, make_spec(Family::LcdB, params, delta));
                } catch (const std::invalid_argument&) {
                    ++s.skipped;  // delta = q^lambda outside the family window
                }
            }
            if (want("run-count-narrow-degree")) {
                const CodeSpec narrow = make_spec(Family::Narrow, params, delta);
                const DimPrediction exact = DimPrediction::exact(
                    params.n - deg, delta, "run-count-narrow-degree", "run-count degree");
                check("run-count-narrow-degree", lambda, exact, narrow);
            }
        }
    }
};

}  // namespace

OracleSummary run_master_oracle(const OracleLimits& lim, unsigned threads) {
    const std::vector<OracleTask> tasks = oracle_tasks(lim);
    std::atomic<size_t> next{0};
    std::mutex merge_mu;
    OracleSummary total;
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const OracleTask& t = tasks[i];
            QmChecker checker{lim, {}, CosetParams::make(t.q, t.m)};
            try {
                if (t.all_theorems) checker.run_all();
                if (t.run_bounds) checker.run_run_bounds();
            } catch (const std::exception& e) {
                checker.s.mismatches.push_back("exception at q=" + std::to_string(t.q) +
                                               " m=" + std::to_string(t.m) + ": " +
                                               e.what());
            }
            std::lock_guard<std::mutex> lock(merge_mu);
            total.merge(std::move(checker.s));
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::sort(total.mismatches.begin(), total.mismatches.end());
    return total;
}

}  // namespace lcdbch
