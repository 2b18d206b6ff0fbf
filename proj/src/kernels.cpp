#include "lcdbch/kernels.hpp"

#include <atomic>
#include <bit>

#if defined(__x86_64__) || defined(__i386__)
#define LCDBCH_X86 1
#else
#define LCDBCH_X86 0
#endif

namespace lcdbch::kernels {

namespace scalar {

uint64_t popcount_words(const uint64_t* w, size_t n) {
    uint64_t c = 0;
    for (size_t i = 0; i < n; ++i) c += static_cast<uint64_t>(std::popcount(w[i]));
    return c;
}

void xor_into(uint64_t* dst, const uint64_t* src, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

size_t count_nonzero_bytes(const uint8_t* v, size_t n) {
    size_t c = 0;
    for (size_t i = 0; i < n; ++i) c += (v[i] != 0);
    return c;
}

void add_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t p) {
    for (size_t i = 0; i < n; ++i) {
        uint8_t v = static_cast<uint8_t>(dst[i] + src[i]);
        dst[i] = v >= p ? static_cast<uint8_t>(v - p) : v;
    }
}

void sub_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t p) {
    for (size_t i = 0; i < n; ++i) {
        uint8_t v = static_cast<uint8_t>(dst[i] + p - src[i]);
        dst[i] = v >= p ? static_cast<uint8_t>(v - p) : v;
    }
}

void addmul_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t a, uint8_t p) {
    for (size_t i = 0; i < n; ++i)
        dst[i] = static_cast<uint8_t>((dst[i] + a * src[i]) % p);
}

}  // namespace scalar

#if LCDBCH_X86
namespace avx2 {
uint64_t popcount_words(const uint64_t* w, size_t n);
void xor_into(uint64_t* dst, const uint64_t* src, size_t n);
size_t count_nonzero_bytes(const uint8_t* v, size_t n);
void add_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t p);
void sub_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t p);
void addmul_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t a, uint8_t p);
}  // namespace avx2
#endif

namespace {

Isa detect() {
#if LCDBCH_X86
    if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
    return Isa::Scalar;
}

std::atomic<Isa> g_isa{detect()};

}  // namespace

bool avx2_supported() { return detect() == Isa::Avx2; }
Isa active_isa() { return g_isa.load(std::memory_order_relaxed); }
void force_isa(Isa isa) {
    if (isa == Isa::Avx2 && !avx2_supported()) isa = Isa::Scalar;
    g_isa.store(isa, std::memory_order_relaxed);
}

uint64_t popcount_words(const uint64_t* w, size_t n) {
#if LCDBCH_X86
    if (active_isa() == Isa::Avx2) return avx2::popcount_words(w, n);
#endif
    return scalar::popcount_words(w, n);
}

void xor_into(uint64_t* dst, const uint64_t* src, size_t n) {
#if LCDBCH_X86
    if (active_isa() == Isa::Avx2) return avx2::xor_into(dst, src, n);
#endif
    scalar::xor_into(dst, src, n);
}

size_t count_nonzero_bytes(const uint8_t* v, size_t n) {
#if LCDBCH_X86
    if (active_isa() == Isa::Avx2) return avx2::count_nonzero_bytes(v, n);
#endif
    return scalar::count_nonzero_bytes(v, n);
}

void add_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t p) {
#if LCDBCH_X86
    if (active_isa() == Isa::Avx2) return avx2::add_row_mod(dst, src, n, p);
#endif
    scalar::add_row_mod(dst, src, n, p);
}

void sub_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t p) {
#if LCDBCH_X86
    if (active_isa() == Isa::Avx2) return avx2::sub_row_mod(dst, src, n, p);
#endif
    scalar::sub_row_mod(dst, src, n, p);
}

void addmul_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t a, uint8_t p) {
#if LCDBCH_X86
    if (active_isa() == Isa::Avx2) return avx2::addmul_row_mod(dst, src, n, a, p);
#endif
    scalar::addmul_row_mod(dst, src, n, a, p);
}

}  // namespace lcdbch::kernels
