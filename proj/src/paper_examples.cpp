#include "lcdbch/paper_examples.hpp"

#include <stdexcept>

namespace lcdbch {

const std::vector<PaperExample>& paper_examples() {
    using K = ExampleKind;
    static const std::vector<PaperExample> table = {
        {K::NarrowU, 2, 5, 1, 31, 11, 11},
        {K::NarrowU, 2, 7, 1, 127, 71, 19},
        {K::NarrowU, 2, 4, 1, 15, 7, 5},
        {K::NarrowU, 3, 4, 1, 80, 56, 10},
        {K::NarrowU, 3, 4, 2, 80, 34, 20},
        {K::NarrowU, 3, 5, 1, 242, 152, -1},
        {K::NarrowU, 3, 5, 2, 242, 82, -1},
        {K::NarrowU, 4, 4, 1, 255, 207, -1},
        {K::OnesidedU, 4, 5, 1, 1023, 863, -1},
        {K::OnesidedU, 4, 5, 2, 1023, 723, -1},
        {K::OnesidedU, 4, 5, 3, 1023, 573, -1},
        {K::OnesidedU, 2, 6, 1, 63, 39, 9},
        {K::OnesidedU, 4, 4, 1, 255, 223, -1},
        {K::OnesidedU, 4, 4, 2, 255, 193, -1},
        {K::OnesidedU, 4, 4, 3, 255, 161, -1},
        {K::LcdAU, 3, 7, 1, 2186, 1457, -1},
        {K::LcdAU, 3, 7, 2, 2186, 841, -1},
        {K::LcdAU, 5, 2, 1, 24, 9, 12},
        {K::LcdAU, 7, 2, 1, 48, 25, 16},
        {K::LcdAU, 2, 7, 1, 127, 29, 37},
        {K::LcdAU, 4, 5, 2, 1023, 463, -1},
        {K::LcdAU, 4, 5, 3, 1023, 243, -1},
        {K::LcdAU, 2, 4, 1, 15, 3, 5},
        {K::LcdAU, 4, 4, 1, 255, 195, 17},
        {K::LcdAU, 4, 4, 2, 255, 135, -1},
        {K::LcdAU, 4, 4, 3, 255, 83, -1},
        {K::LcdAT, 3, 5, 1, 242, 241, 2},
        {K::LcdAT, 3, 5, 2, 242, 221, 8},
        {K::LcdAT, 3, 5, 3, 242, 161, 26},
        {K::LcdAT, 3, 4, 1, 80, 79, 2},
        {K::LcdAT, 3, 4, 2, 80, 63, 8},
        {K::LcdAT, 2, 7, 2, 127, 113, 5},
        {K::LcdAT, 2, 7, 3, 127, 85, 11},
        {K::LcdAT, 2, 6, 2, 63, 51, 3},
        {K::LcdAT, 2, 6, 3, 63, 27, 7},
        {K::LcdBDelta, 2, 5, 3, 31, 20, 6},
        {K::LcdBDelta, 3, 3, 4, 26, 13, 8},
    };
    return table;
}

CodeSpec spec_from_example(const PaperExample& ex) {
    const CosetParams params = CosetParams::make(ex.q, ex.m);
    const uint64_t qmb = ipow_checked(ex.q, params.m_half);
    switch (ex.kind) {
        case ExampleKind::NarrowU:
            return make_spec(Family::Narrow, params, ex.param * qmb + 1);
        case ExampleKind::OnesidedU: {
            const uint64_t delta =
                ex.q % 2 == 1 ? ex.param * qmb + 1 : ex.param * qmb / 2 + 1;
            const uint64_t b = ex.q % 2 == 1 ? params.n / 2 + 1 : (params.n + 1) / 2;
            return make_spec(Family::Generic, params, delta, b);
        }
        case ExampleKind::LcdAU: {
            if (ex.q % 2 == 1)
                return make_spec(Family::LcdAEvenN, params, ex.param * qmb + 1);
            return make_spec(Family::LcdAOddN, params, ex.param * qmb / 2 + 1);
        }
        case ExampleKind::LcdAT: {
            const uint64_t qt = ipow_checked(ex.q, static_cast<uint32_t>(ex.param));
            if (ex.q % 2 == 1)
                return make_spec(Family::LcdAEvenN, params, (qt - 1) / 2);
            return make_spec(Family::LcdAOddN, params, qt / 2);
        }
        case ExampleKind::LcdBDelta:
            return make_spec(Family::LcdB, params, ex.param);
    }
    throw std::logic_error("unknown example kind");
}

}  // namespace lcdbch
