// Closed-form dimension results with explicit validity gates. Out-of-domain
// parameters produce a first-class NotCovered value, never an extrapolated
// number; every Exact value is cross-validated against the constructive
// dimension by the oracle sweep.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lcdbch/bchcodes.hpp"

namespace lcdbch {

enum class PredKind { Exact, Bounds, NotCovered };

struct DimPrediction {
    PredKind kind = PredKind::NotCovered;
    uint64_t k = 0;                   // Exact
    uint64_t k_lower = 0;             // Bounds
    uint64_t k_upper = 0;
    uint64_t designed = 0;            // designed distance of the covered code
    std::optional<uint64_t> d_exact;  // set when the theorem pins the distance
    std::string source;               // theorem tag
    std::string domain;               // condition that held (or failed)

    bool covered() const { return kind != PredKind::NotCovered; }
    static DimPrediction not_covered(std::string why);
    static DimPrediction exact(uint64_t k, uint64_t designed, std::string source,
                               std::string domain);
    static DimPrediction bounds(uint64_t lo, uint64_t hi, uint64_t designed,
                                std::string source, std::string domain);
};

// Narrow-sense C_(q,n,delta,1) with delta = u q^ceil(m/2) + 1.
DimPrediction dim_narrow(uint64_t q, uint32_t m, uint64_t u);

// Single consecutive-range constituents of the LCD-A construction:
// q odd: b in {n/2+1, n/2-(delta-1)}, delta = u q^mbar + 1;
// q even: b in {(n+1)/2, (n+1)/2-(delta-1)}, delta = u q^mbar / 2 + 1.
DimPrediction dim_familyA_onesided(uint64_t q, uint32_t m, uint64_t u);

// The LCD-A codes themselves (u-parameterized).
DimPrediction dim_lcd_A(uint64_t q, uint32_t m, uint64_t u);

// LCD-A codes with designed distance q^t - 1, 1 <= t <= ceil(m/2).
DimPrediction dim_designed_qt(uint64_t q, uint32_t m, uint32_t t);

// C_(q,n,2delta,n-delta+1) for delta up to about sqrt(n) (piecewise table).
// The (delta_q, delta_0) split of delta-1 = delta_q q + delta_0 is exposed
// for testing.
struct SmallDeltaSplit {
    uint64_t delta_q = 0;
    uint64_t delta_0 = 0;
};
DimPrediction dim_lcd_B_small_delta(uint64_t q, uint32_t m, uint64_t delta,
                                    SmallDeltaSplit* split = nullptr);

// C_(q,n,2delta,n-delta+1) with q odd and delta = u q^ceil(m/2) + 1
// (monomially equivalent to the family-A code).
DimPrediction dim_lcd_B_u(uint64_t q, uint32_t m, uint64_t u);

// Run-count bounds for delta = q^lambda, ceil(m/2) <= lambda <= m-1. Also
// exposes the exact degree of g_(q,n,delta,1) from the same run-count result.
DimPrediction dim_lcd_B_run_bounds(uint64_t q, uint32_t m, uint32_t lambda,
                             uint64_t* deg_narrow_out = nullptr);

// Even-like subcode of the Melas code, q odd: [q^m-1, q^m-2-2m, 4].
DimPrediction dim_melas_evenlike(uint64_t q, uint32_t m);

// The small-delta distance theorems for C_(q,n,2delta,n-delta+1),
// delta in {2, 3, 4} with their per-theorem gates.
DimPrediction dim_small_delta(uint64_t q, uint32_t m, uint64_t delta);

// Routes a spec to the most specific covered theorem.
DimPrediction predict(const CodeSpec& spec);

}  // namespace lcdbch
