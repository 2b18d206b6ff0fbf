#include <doctest.h>

#include <stdexcept>

#include "lcdbch/distance.hpp"

using namespace lcdbch;

namespace {

struct Tower {
    FieldCtx big, sub;
    SubfieldEmbedding emb;
    static Tower make(uint64_t q, uint32_t m) {
        uint64_t p = 0;
        uint32_t k = 0;
        is_prime_power(q, &p, &k);
        Tower t{FieldCtx::make(p, k * m), FieldCtx::make(p, k), {}};
        t.emb = subfield_embedding(t.big, t.sub);
        return t;
    }
};

}  // namespace

TEST_CASE("bch lower bound with run improvement") {
    // family A even n: designed 2*delta
    CHECK(bch_lower(make_spec(Family::LcdAEvenN, CosetParams::make(5, 2), 6)) == 12);
    // tilde: delta when delta | n, delta + 1 otherwise
    CHECK(bch_lower(make_spec(Family::LcdBTilde, CosetParams::make(3, 4), 4)) == 4);
    CHECK(bch_lower(make_spec(Family::LcdBTilde, CosetParams::make(2, 5), 3)) == 4);
    // melas even-like, q odd
    CHECK(bch_lower(make_spec(Family::MelasEvenlike, CosetParams::make(3, 3), 2)) == 4);
    // [63, 39]: defining set closure contains the run 1..8
    CHECK(bch_lower(make_spec(Family::Generic, CosetParams::make(2, 6), 5, 32)) == 9);
    // [127, 71]: closure of C_1..C_16 contains 17 and 18
    CHECK(bch_lower(make_spec(Family::Narrow, CosetParams::make(2, 7), 17)) == 19);
}

TEST_CASE("sphere packing cap, exact big integers") {
    CHECK(sphere_packing_implies_le(255, 255 - 2 - 16, 2, 3));    // m=8 delta=3
    CHECK(sphere_packing_implies_le((1 << 20) - 1, (1 << 20) - 162, 2, 9));
    CHECK_FALSE(sphere_packing_implies_le(31, 10, 2, 5));         // m=5 delta=5
}

TEST_CASE("divides witness") {
    SUBCASE("[48,25,16]: family A, q=7 m=2 u=1") {
        const auto spec = make_spec(Family::LcdAEvenN, CosetParams::make(7, 2), 8);
        REQUIRE(has_divisibility_witness(spec));
        const auto res = witness_delta_divides(spec);
        CHECK(res.exact == 16);
        CHECK(res.witness->weight() == 16);
        auto tw = Tower::make(7, 2);
        CHECK(verify_witness_by_eval(spec, *res.witness, tw.big, tw.emb));
    }
    SUBCASE("[80,56,10]: narrow u=1 even m") {
        const auto spec = make_spec(Family::Narrow, CosetParams::make(3, 4), 10);
        const auto res = witness_delta_divides(spec);
        CHECK(res.exact == 10);
        auto tw = Tower::make(3, 4);
        CHECK(verify_witness_by_eval(spec, *res.witness, tw.big, tw.emb));
    }
    SUBCASE("family B (3,4,delta=4): d = 8 with weight-8 witness") {
        const auto spec = make_spec(Family::LcdB, CosetParams::make(3, 4), 4);
        const auto res = witness_delta_divides(spec);
        CHECK(res.exact == 8);
        CHECK(res.witness->weight() == 8);
        auto tw = Tower::make(3, 4);
        CHECK(verify_witness_by_eval(spec, *res.witness, tw.big, tw.emb));
        // the witness is (x-1)c(x): coefficient -1 on the comb, +1 shifted
        CHECK(res.witness->terms[0] == std::pair<uint64_t, uint32_t>{0, 2});
        CHECK(res.witness->terms[1] == std::pair<uint64_t, uint32_t>{1, 1});
    }
    SUBCASE("tilde (3,4,delta=4): d = delta with the comb itself") {
        const auto spec = make_spec(Family::LcdBTilde, CosetParams::make(3, 4), 4);
        const auto res = witness_delta_divides(spec);
        CHECK(res.exact == 4);
        CHECK(res.witness->weight() == 4);
    }
    SUBCASE("melas even-like (3,3): d = 4") {
        const auto spec = make_spec(Family::MelasEvenlike, CosetParams::make(3, 3), 2);
        const auto res = witness_delta_divides(spec);
        CHECK(res.exact == 4);
    }
    SUBCASE("precondition failure throws") {
        const auto spec = make_spec(Family::LcdB, CosetParams::make(2, 5), 3);  // 3 !| 31
        CHECK_FALSE(has_divisibility_witness(spec));
        CHECK_THROWS_AS(witness_delta_divides(spec), std::domain_error);
    }
}

TEST_CASE("exact distance by message enumeration") {
    SUBCASE("narrow [15,7,5]") {
        const auto spec = make_spec(Family::Narrow, CosetParams::make(2, 4), 5);
        auto tw = Tower::make(2, 4);
        const auto gen = generator_poly(spec, tw.big, tw.emb);
        const auto res = exact_distance(spec, *gen, tw.sub);
        CHECK(res.exact == 5);
        CHECK(res.method == DistMethod::ExhaustiveMessages);
    }
    SUBCASE("lcd-a odd n [15,3,5]") {
        const auto spec = make_spec(Family::LcdAOddN, CosetParams::make(2, 4), 3);
        auto tw = Tower::make(2, 4);
        const auto res = exact_distance(spec, *generator_poly(spec, tw.big, tw.emb), tw.sub);
        CHECK(res.exact == 5);
    }
    SUBCASE("lcd-b [31,20,6]") {
        const auto spec = make_spec(Family::LcdB, CosetParams::make(2, 5), 3);
        auto tw = Tower::make(2, 5);
        const auto res = exact_distance(spec, *generator_poly(spec, tw.big, tw.emb), tw.sub);
        CHECK(res.exact == 6);
    }
    SUBCASE("small ternary code") {
        const auto spec = make_spec(Family::Narrow, CosetParams::make(3, 2), 2);
        auto tw = Tower::make(3, 2);
        const auto res = exact_distance(spec, *generator_poly(spec, tw.big, tw.emb), tw.sub);
        CHECK(res.exact == 2);  // [8, 6, 2]
    }
}

TEST_CASE("low-weight support search agrees with message enumeration") {
    const auto spec = make_spec(Family::LcdB, CosetParams::make(2, 5), 3);
    auto tw = Tower::make(2, 5);
    const auto gen = generator_poly(spec, tw.big, tw.emb);
    SearchBudget tight;
    tight.max_messages = 64;  // force the support path for k = 20
    const auto res = exact_distance(spec, *gen, tw.sub, tight);
    CHECK(res.method == DistMethod::LowWeightSearch);
    CHECK(res.exact == 6);
    SUBCASE("budget exhaustion is a typed outcome") {
        tight.max_support_candidates = 10;
        const auto give_up = exact_distance(spec, *gen, tw.sub, tight);
        CHECK_FALSE(give_up.exact.has_value());
        CHECK(give_up.lower >= 6);
        CHECK(give_up.note.find("budget") != std::string::npos);
    }
}

TEST_CASE("reed-muller subspace witness, paper instance [31,20,6]") {
    // GF(2^5) with modulus x^5 + x^2 + 1 (the deterministic default)
    auto tw = Tower::make(2, 5);
    REQUIRE(tw.big.modulus() == std::vector<uint32_t>{1, 0, 1, 0, 0, 1});
    const uint64_t a = tw.big.alpha().rep;
    auto el = [&](uint64_t e) { return tw.big.pow_rep(a, e); };
    const auto spec = make_spec(Family::LcdB, CosetParams::make(2, 5), 3);
    RmSubspaces h;
    h.h1 = {0, el(1), el(2), el(19)};
    h.h2 = {0, el(8), el(12), el(18)};
    h.h3 = {0, el(12), el(13), el(30)};
    h.h4 = {0, el(19), el(23), el(29)};
    const auto res = rm_subspace_witness(spec, tw.big, tw.emb, h);
    CHECK(res.exact == 6);
    CHECK(res.witness->weight() == 6);

    SUBCASE("closure violation is a typed error") {
        RmSubspaces bad = h;
        bad.h1 = {0, el(1), el(2), el(3)};  // not closed under addition
        CHECK_THROWS_WITH_AS(rm_subspace_witness(spec, tw.big, tw.emb, bad),
                             doctest::Contains("closed under addition"),
                             std::invalid_argument);
    }
    SUBCASE("inverse-set violation names the offender") {
        RmSubspaces bad = h;
        bad.h3 = {0, el(1), el(2), el(19)};  // a subspace, but not the inverse set
        CHECK_THROWS_AS(rm_subspace_witness(spec, tw.big, tw.emb, bad),
                        std::invalid_argument);
    }
}

TEST_CASE("subspace search finds a witness for m = 5") {
    auto tw = Tower::make(2, 5);
    const auto subs = find_rm_subspaces(tw.big);
    REQUIRE(subs.has_value());
    const auto spec = make_spec(Family::LcdB, CosetParams::make(2, 5), 3);
    const auto res = rm_subspace_witness(spec, tw.big, tw.emb, *subs);
    CHECK(res.exact == 6);
}

TEST_CASE("auto distance selects sensible methods") {
    SUBCASE("witness first") {
        auto tw = Tower::make(3, 3);
        const auto spec = make_spec(Family::MelasEvenlike, CosetParams::make(3, 3), 2);
        const auto res = auto_distance(spec, &tw.big, &tw.emb);
        CHECK(res.method == DistMethod::Witness);
        CHECK(res.exact == 4);
    }
    SUBCASE("witness when 3 | n: [255,238] delta=3") {
        const auto spec = make_spec(Family::LcdB, CosetParams::make(2, 8), 3);
        const auto res = auto_distance(spec, nullptr, nullptr);
        CHECK(res.method == DistMethod::Witness);
        CHECK(res.exact == 6);
    }
    SUBCASE("sphere packing closes [511,492] delta=3 (3 does not divide n)") {
        const auto spec = make_spec(Family::LcdB, CosetParams::make(2, 9), 3);
        const auto res = auto_distance(spec, nullptr, nullptr);
        CHECK(res.method == DistMethod::SpherePacking);
        CHECK(res.exact == 6);
    }
    SUBCASE("search fallback") {
        auto tw = Tower::make(3, 3);
        const auto spec = make_spec(Family::LcdB, CosetParams::make(3, 3), 4);
        const auto res = auto_distance(spec, &tw.big, &tw.emb);
        CHECK(res.exact == 8);
        CHECK(res.method == DistMethod::ExhaustiveMessages);
    }
}

TEST_CASE("search agrees with witness-based exact values on overlapping cases") {
    for (auto [fam, q, m, delta] : std::vector<std::tuple<Family, uint64_t, uint32_t, uint64_t>>{
             {Family::Narrow, 2, 4, 5},
             {Family::LcdB, 3, 2, 2},
             {Family::LcdAOddN, 2, 4, 3},
             {Family::MelasEvenlike, 3, 2, 2}}) {
        const auto spec = make_spec(fam, CosetParams::make(q, m), delta);
        REQUIRE(has_divisibility_witness(spec));
        const auto via_witness = witness_delta_divides(spec);
        auto tw = Tower::make(q, m);
        const auto via_search =
            exact_distance(spec, *generator_poly(spec, tw.big, tw.emb), tw.sub);
        REQUIRE(via_search.exact.has_value());
        CHECK(*via_search.exact == *via_witness.exact);
        CHECK(*via_search.exact >= bch_lower(spec));
    }
}

TEST_CASE("witness re-verification catches corruption") {
    const auto spec = make_spec(Family::LcdB, CosetParams::make(3, 4), 4);
    auto tw = Tower::make(3, 4);
    auto res = witness_delta_divides(spec);
    REQUIRE(verify_witness_by_eval(spec, *res.witness, tw.big, tw.emb));
    res.witness->terms[0].second = 1;  // corrupt one coefficient
    CHECK_FALSE(verify_witness_by_eval(spec, *res.witness, tw.big, tw.emb));
}
