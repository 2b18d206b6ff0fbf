// The worked examples quoted in the source material, frozen as a golden table:
// construction parameters, expected (n, k), and the quoted distance when one
// was stated exactly (paper_d = -1 when only a bound was quoted; those stay
// bounds here too).
#pragma once

#include <cstdint>
#include <vector>

#include "lcdbch/bchcodes.hpp"

namespace lcdbch {

enum class ExampleKind {
    NarrowU,      // narrow-sense, delta = u q^mbar + 1
    OnesidedU,    // one-sided constituent, b = (n+1)/2 resp. n/2 + 1
    LcdAU,        // LCD family A, u-parameterized
    LcdAT,        // LCD family A, designed distance q^t - 1
    LcdBDelta,    // LCD family B, explicit delta
};

struct PaperExample {
    ExampleKind kind;
    uint64_t q;
    uint32_t m;
    uint64_t param;  // u, t or delta
    uint64_t n;
    uint64_t k;
    int64_t paper_d;  // exact quoted distance, or -1 when only a bound is quoted
};

const std::vector<PaperExample>& paper_examples();

// Builds the code spec an example refers to.
CodeSpec spec_from_example(const PaperExample& ex);

}  // namespace lcdbch
