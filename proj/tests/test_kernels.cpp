#include <doctest.h>

#include <random>
#include <vector>

#include "lcdbch/kernels.hpp"

using namespace lcdbch::kernels;

namespace {

struct IsaGuard {
    Isa saved = active_isa();
    ~IsaGuard() { force_isa(saved); }
};

}  // namespace

TEST_CASE("word kernels: dispatched variant matches the scalar reference") {
    IsaGuard guard;
    std::mt19937_64 rng(11);
    for (size_t n : {0ull, 1ull, 3ull, 4ull, 31ull, 64ull, 257ull}) {
        std::vector<uint64_t> a(n), b(n);
        for (auto& x : a) x = rng();
        for (auto& x : b) x = rng();
        const uint64_t want_pop = scalar::popcount_words(a.data(), n);
        std::vector<uint64_t> want_xor = a;
        scalar::xor_into(want_xor.data(), b.data(), n);
        for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
            force_isa(isa);
            CHECK(popcount_words(a.data(), n) == want_pop);
            std::vector<uint64_t> got = a;
            xor_into(got.data(), b.data(), n);
            CHECK(got == want_xor);
        }
    }
}

TEST_CASE("byte kernels: add/sub/addmul mod p match scalar for all small p") {
    IsaGuard guard;
    std::mt19937_64 rng(13);
    for (uint8_t p : {2, 3, 5, 7, 11, 31, 113, 127}) {
        for (size_t n : {1ull, 16ull, 32ull, 33ull, 100ull, 1024ull}) {
            std::vector<uint8_t> a(n), b(n);
            for (auto& x : a) x = static_cast<uint8_t>(rng() % p);
            for (auto& x : b) x = static_cast<uint8_t>(rng() % p);
            for (uint8_t scale = 0; scale < p; scale = static_cast<uint8_t>(scale + 1 + p / 5)) {
                std::vector<uint8_t> want_add = a, want_sub = a, want_mul = a;
                scalar::add_row_mod(want_add.data(), b.data(), n, p);
                scalar::sub_row_mod(want_sub.data(), b.data(), n, p);
                scalar::addmul_row_mod(want_mul.data(), b.data(), n, scale, p);
                for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
                    force_isa(isa);
                    std::vector<uint8_t> g1 = a, g2 = a, g3 = a;
                    add_row_mod(g1.data(), b.data(), n, p);
                    sub_row_mod(g2.data(), b.data(), n, p);
                    addmul_row_mod(g3.data(), b.data(), n, scale, p);
                    REQUIRE(g1 == want_add);
                    REQUIRE(g2 == want_sub);
                    REQUIRE(g3 == want_mul);
                }
            }
        }
    }
}

TEST_CASE("addmul reduction is exact over the whole operand range") {
    // every (dst, src) byte pair at the lane boundaries, worst-case scale
    IsaGuard guard;
    for (uint8_t p : {3, 127}) {
        const uint8_t a = static_cast<uint8_t>(p - 1);
        std::vector<uint8_t> dst(static_cast<size_t>(p) * p), src(dst.size());
        for (size_t i = 0; i < dst.size(); ++i) {
            dst[i] = static_cast<uint8_t>(i / p);
            src[i] = static_cast<uint8_t>(i % p);
        }
        std::vector<uint8_t> want = dst;
        scalar::addmul_row_mod(want.data(), src.data(), want.size(), a, p);
        force_isa(Isa::Avx2);
        std::vector<uint8_t> got = dst;
        addmul_row_mod(got.data(), src.data(), got.size(), a, p);
        REQUIRE(got == want);
    }
}

TEST_CASE("count_nonzero_bytes") {
    IsaGuard guard;
    std::vector<uint8_t> v(1000, 0);
    for (size_t i = 0; i < v.size(); i += 3) v[i] = static_cast<uint8_t>(i % 7);
    const size_t want = scalar::count_nonzero_bytes(v.data(), v.size());
    for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
        force_isa(isa);
        CHECK(count_nonzero_bytes(v.data(), v.size()) == want);
    }
    CHECK(scalar::count_nonzero_bytes(v.data(), 0) == 0);
}

TEST_CASE("forcing an unsupported ISA falls back to scalar") {
    IsaGuard guard;
    force_isa(Isa::Avx2);
    if (!avx2_supported()) CHECK(active_isa() == Isa::Scalar);
    force_isa(Isa::Scalar);
    CHECK(active_isa() == Isa::Scalar);
}
