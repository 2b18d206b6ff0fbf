// q-cyclotomic cosets modulo n = q^m - 1 and the combinatorics built on them:
// coset leaders, exception sets, intersection sets, negation-closure counts and
// straight-run counting. Everything in this header is plain integer arithmetic;
// no finite-field elements appear.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lcdbch {

// Parameters of the ambient ring Z_n with n = q^m - 1.
// m_half = ceil(m/2), n_half = ceil(n/2).
struct CosetParams {
    uint64_t q = 0;
    uint32_t m = 0;
    uint64_t n = 0;
    uint32_t m_half = 0;
    uint64_t n_half = 0;

    // Validates that q is a prime power >= 2, m >= 2 and q^m - 1 fits in 63 bits.
    static CosetParams make(uint64_t q, uint32_t m);

    bool q_odd() const { return (q & 1) != 0; }
};

// Decides whether x = p^k for a prime p; reports p and k on success.
bool is_prime_power(uint64_t x, uint64_t* p_out = nullptr, uint32_t* k_out = nullptr);

// Checked q^e for internal use; throws std::overflow_error past 2^63.
uint64_t ipow_checked(uint64_t q, uint32_t e);

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t n);

// The orbit of s under multiplication by q, sorted ascending.
struct Coset {
    uint64_t leader = 0;
    std::vector<uint64_t> elements;
    size_t size() const { return elements.size(); }
};

Coset coset(const CosetParams& params, uint64_t s);
uint64_t coset_leader(const CosetParams& params, uint64_t s);
uint32_t coset_size(const CosetParams& params, uint64_t s);

// Full partition of Z_n into cosets; materialized only for n <= 2^20.
struct CosetTable {
    std::vector<uint64_t> leaders;     // sorted ascending
    std::vector<uint32_t> sizes;       // sizes[i] = |C_{leaders[i]}|
};
CosetTable coset_table(const CosetParams& params);

// q-ary expansion of s as m digits, digits[i] = coefficient of q^i.
struct QaryExpansion {
    std::vector<uint32_t> digits;
    uint32_t weight() const;
    std::vector<uint32_t> support() const;
    uint64_t value(uint64_t q) const;
};
QaryExpansion q_ary_expansion(const CosetParams& params, uint64_t s);

// Non-leaders among {1 <= j <= u q^m_half, q !| j} for odd m >= 5.
// J1 = { j_mb q^mb + j1 q + j0 },  J2 = { j_mb q^mb + j_{mb-1} q^{mb-1} + j0 }
// with the index ranges characterizing odd-m coset leaders.
struct ExceptionSetsOddM {
    std::vector<uint64_t> j1;
    std::vector<uint64_t> j2;
};
ExceptionSetsOddM exception_sets_odd_m(const CosetParams& params, uint64_t u);

// Non-leaders for even m >= 2, plus the half-size coset representatives
// v (q^{m/2} + 1), 1 <= v <= u-1, whose cosets have size m/2.
struct ExceptionSetEvenM {
    std::vector<uint64_t> j;
    std::vector<uint64_t> half_size_reps;
};
ExceptionSetEvenM exception_set_even_m(const CosetParams& params, uint64_t u);

// The set J_O indexing the disjoint decomposition of J+ cap J- for q odd,
// m >= 5 odd: J+ cap J- = union over l in J_O of (C_{n_half+l} cup C_{n_half-l}).
std::vector<uint64_t> intersection_set_odd(const CosetParams& params, uint64_t u);

// The set J_E for q odd, m even: J+ cap J- = union over l in J_E of C_{n_half-l}.
// Requires u <= (q-1)/2 when m = 2.
std::vector<uint64_t> intersection_set_even(const CosetParams& params, uint64_t u);

// The tilde sets for q even: odd m >= 5 yields the set indexing
// C_{n_half+(l-1)/2} cup C_{n_half-(l+1)/2}; even m yields the set indexing
// C_{n_half-(l+1)/2}. Requires u <= q/2 when m = 2.
std::vector<uint64_t> tilde_set(const CosetParams& params, uint64_t u);

// lambda_1 = #odd coset leaders in [1, u q^m_half - 1],
// lambda_2 = #odd non-leaders there whose leader is even (q even, m >= 5 odd).
std::pair<uint64_t, uint64_t> lambda_counts(const CosetParams& params, uint64_t u);

// theta_1/theta_2 = #odd coset leaders in [1, u q^m_half - 1] with coset size
// m resp. m/2; theta_3 = #odd non-leaders there with even leader (q, m even).
struct ThetaCounts {
    uint64_t theta1 = 0;
    uint64_t theta2 = 0;
    uint64_t theta3 = 0;
};
ThetaCounts theta_counts(const CosetParams& params, uint64_t u);

// |{(cl(i), cl(j)) : -j in C_i, 1 <= i, j <= l}| by the piecewise case table.
// Returns nullopt when l lies outside the covered range (never extrapolates).
std::optional<uint64_t> negated_pair_count(const CosetParams& params, uint64_t l);

// All (i, j) pairs with -j in C_i inside the characterized ranges, emitted as
// digit patterns. Instantiating any pair must satisfy -j in C_i; brute force
// finds no others in range.
std::vector<std::pair<QaryExpansion, QaryExpansion>>
negated_pair_profiles(const CosetParams& params);

// l_r(s): number of length-s sequences over an alphabet of size q containing a
// straight run of >= r consecutive occurrences of one fixed symbol.
// l_r(0) = 0, l_r(s) = 0 for s < r, l_r(r) = 1,
// l_r(s) = q l_r(s-1) + (q-1)(q^{s-r-1} - l_r(s-r-1)) for s > r.
uint64_t run_count(uint64_t q, uint32_t r, uint32_t s);

}  // namespace lcdbch
