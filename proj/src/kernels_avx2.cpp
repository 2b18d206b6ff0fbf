// AVX2 variants of the row kernels. Compiled with per-function target
// attributes so the rest of the build stays baseline; only reached after the
// runtime CPU check in kernels.cpp.
#include <cstddef>
#include <cstdint>

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <bit>

#define AVX2_FN __attribute__((target("avx2")))

namespace lcdbch::kernels::avx2 {

AVX2_FN uint64_t popcount_words(const uint64_t* w, size_t n) {
    // nibble-LUT popcount, accumulated via sad_epu8
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        const __m256i lo = _mm256_and_si256(v, low_mask);
        const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
        const __m256i cnt =
            _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) total += static_cast<uint64_t>(std::popcount(w[i]));
    return total;
}

AVX2_FN void xor_into(uint64_t* dst, const uint64_t* src, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

AVX2_FN size_t count_nonzero_bytes(const uint8_t* v, size_t n) {
    size_t zeros = 0, i = 0;
    const __m256i zero = _mm256_setzero_si256();
    for (; i + 32 <= n; i += 32) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        const uint32_t mask =
            static_cast<uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(x, zero)));
        zeros += static_cast<size_t>(std::popcount(mask));
    }
    size_t nonzero = i - zeros;
    for (; i < n; ++i) nonzero += (v[i] != 0);
    return nonzero;
}

namespace {

// conditional subtract of p wherever v >= p (unsigned bytes)
AVX2_FN inline __m256i reduce_once_u8(__m256i v, __m256i pv) {
    const __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(v, pv), v);
    return _mm256_sub_epi8(v, _mm256_and_si256(ge, pv));
}

}  // namespace

AVX2_FN void add_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t p) {
    const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i v = reduce_once_u8(_mm256_add_epi8(a, b), pv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    }
    for (; i < n; ++i) {
        uint8_t v = static_cast<uint8_t>(dst[i] + src[i]);
        dst[i] = v >= p ? static_cast<uint8_t>(v - p) : v;
    }
}

AVX2_FN void sub_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t p) {
    const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        // a + p - b stays below 256 for p <= 127, then one reduction
        const __m256i v = reduce_once_u8(_mm256_sub_epi8(_mm256_add_epi8(a, pv), b), pv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    }
    for (; i < n; ++i) {
        uint8_t v = static_cast<uint8_t>(dst[i] + p - src[i]);
        dst[i] = v >= p ? static_cast<uint8_t>(v - p) : v;
    }
}

namespace {

// v in [0, 2^15): v mod p via Barrett-style mulhi, then one fixup subtract
AVX2_FN inline __m256i mod_u16(__m256i v, __m256i pv16, __m256i magic) {
    const __m256i quot = _mm256_mulhi_epu16(v, magic);
    __m256i rem = _mm256_sub_epi16(v, _mm256_mullo_epi16(quot, pv16));
    const __m256i lt = _mm256_cmpgt_epi16(pv16, rem);  // values < 2^15, signed ok
    rem = _mm256_sub_epi16(rem, _mm256_andnot_si256(lt, pv16));
    return rem;
}

}  // namespace

AVX2_FN void addmul_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t a, uint8_t p) {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i a16 = _mm256_set1_epi16(a);
    const __m256i pv16 = _mm256_set1_epi16(p);
    const __m256i magic = _mm256_set1_epi16(static_cast<short>(65536u / p));
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i s_lo = _mm256_unpacklo_epi8(s, zero);
        const __m256i s_hi = _mm256_unpackhi_epi8(s, zero);
        const __m256i d_lo = _mm256_unpacklo_epi8(d, zero);
        const __m256i d_hi = _mm256_unpackhi_epi8(d, zero);
        const __m256i v_lo =
            mod_u16(_mm256_add_epi16(d_lo, _mm256_mullo_epi16(s_lo, a16)), pv16, magic);
        const __m256i v_hi =
            mod_u16(_mm256_add_epi16(d_hi, _mm256_mullo_epi16(s_hi, a16)), pv16, magic);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_packus_epi16(v_lo, v_hi));
    }
    for (; i < n; ++i) dst[i] = static_cast<uint8_t>((dst[i] + a * src[i]) % p);
}

}  // namespace lcdbch::kernels::avx2

#endif  // x86
