// Data-parallel inner-loop primitives behind the distance search and the GF(q)
// rank computations: word XOR/popcount for the binary paths and bytewise
// mod-p row operations for odd characteristic. Each primitive has a scalar
// reference implementation and an AVX2 variant selected at runtime; the two
// are equivalence-tested against each other.
#pragma once

#include <cstddef>
#include <cstdint>

namespace lcdbch::kernels {

enum class Isa { Scalar, Avx2 };

bool avx2_supported();
Isa active_isa();
// Testing hook; requesting Avx2 on hardware without it falls back to Scalar.
void force_isa(Isa isa);

uint64_t popcount_words(const uint64_t* w, size_t n);
void xor_into(uint64_t* dst, const uint64_t* src, size_t n);
size_t count_nonzero_bytes(const uint8_t* v, size_t n);
// Entrywise dst = (dst + src) mod p, entries in [0, p), p <= 127.
void add_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t p);
// Entrywise dst = (dst - src) mod p.
void sub_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t p);
// Entrywise dst = (dst + a*src) mod p, a in [0, p).
void addmul_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t a, uint8_t p);

// Reference implementations (always scalar), used directly by the
// equivalence tests.
namespace scalar {
uint64_t popcount_words(const uint64_t* w, size_t n);
void xor_into(uint64_t* dst, const uint64_t* src, size_t n);
size_t count_nonzero_bytes(const uint8_t* v, size_t n);
void add_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t p);
void sub_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t p);
void addmul_row_mod(uint8_t* dst, const uint8_t* src, size_t n, uint8_t a, uint8_t p);
}  // namespace scalar

}  // namespace lcdbch::kernels
