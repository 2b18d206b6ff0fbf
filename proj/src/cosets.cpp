#include "lcdbch/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lcdbch {

namespace {

uint64_t smallest_prime_factor(uint64_t x) {
    if (x % 2 == 0) return 2;
    for (uint64_t d = 3; d * d <= x; d += 2)
        if (x % d == 0) return d;
    return x;
}

void sort_unique(std::vector<uint64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// (q-1) * (q^a + q^(a+1) + ... + q^b); empty when a > b.
uint64_t all_top_digits(uint64_t q, uint32_t a, uint32_t b) {
    uint64_t s = 0;
    for (uint32_t t = a; t <= b && b != UINT32_MAX; ++t) s += (q - 1) * ipow_checked(q, t);
    return s;
}

}  // namespace

bool is_prime_power(uint64_t x, uint64_t* p_out, uint32_t* k_out) {
    if (x < 2) return false;
    const uint64_t p = smallest_prime_factor(x);
    uint32_t k = 0;
    uint64_t y = x;
    while (y % p == 0) {
        y /= p;
        ++k;
    }
    if (y != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

uint64_t ipow_checked(uint64_t q, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (q != 0 && r > (UINT64_MAX >> 1) / q)
            throw std::overflow_error("ipow_checked: q^e exceeds 2^63");
        r *= q;
    }
    return r;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

CosetParams CosetParams::make(uint64_t q, uint32_t m) {
    if (!is_prime_power(q))
        throw std::invalid_argument("CosetParams: q must be a prime power >= 2");
    if (m < 2) throw std::invalid_argument("CosetParams: m must be >= 2");
    CosetParams p;
    p.q = q;
    p.m = m;
    p.n = ipow_checked(q, m) - 1;
    p.m_half = (m + 1) / 2;
    p.n_half = (p.n + 1) / 2;
    if (std::gcd(p.n, q) != 1) throw std::logic_error("CosetParams: gcd(n, q) != 1");
    return p;
}

Coset coset(const CosetParams& params, uint64_t s) {
    if (s >= params.n) throw std::invalid_argument("coset: s out of range");
    Coset c;
    c.elements.push_back(s);
    for (uint64_t x = mulmod(s, params.q, params.n); x != s; x = mulmod(x, params.q, params.n))
        c.elements.push_back(x);
    std::sort(c.elements.begin(), c.elements.end());
    c.leader = c.elements.front();
    return c;
}

uint64_t coset_leader(const CosetParams& params, uint64_t s) {
    if (s >= params.n) throw std::invalid_argument("coset_leader: s out of range");
    uint64_t best = s;
    for (uint64_t x = mulmod(s, params.q, params.n); x != s; x = mulmod(x, params.q, params.n))
        best = std::min(best, x);
    return best;
}

uint32_t coset_size(const CosetParams& params, uint64_t s) {
    if (s >= params.n) throw std::invalid_argument("coset_size: s out of range");
    uint32_t len = 1;
    for (uint64_t x = mulmod(s, params.q, params.n); x != s; x = mulmod(x, params.q, params.n))
        ++len;
    return len;
}

CosetTable coset_table(const CosetParams& params) {
    if (params.n > (1ull << 20))
        throw std::domain_error("coset_table: materialized only for n <= 2^20");
    CosetTable t;
    std::vector<bool> seen(params.n, false);
    for (uint64_t s = 0; s < params.n; ++s) {
        if (seen[s]) continue;
        uint32_t len = 0;
        uint64_t x = s;
        do {
            seen[x] = true;
            ++len;
            x = mulmod(x, params.q, params.n);
        } while (x != s);
        t.leaders.push_back(s);
        t.sizes.push_back(len);
    }
    return t;
}

uint32_t QaryExpansion::weight() const {
    uint32_t w = 0;
    for (uint32_t d : digits) w += (d != 0);
    return w;
}

std::vector<uint32_t> QaryExpansion::support() const {
    std::vector<uint32_t> s;
    for (uint32_t i = 0; i < digits.size(); ++i)
        if (digits[i] != 0) s.push_back(i);
    return s;
}

uint64_t QaryExpansion::value(uint64_t q) const {
    uint64_t v = 0;
    for (size_t i = digits.size(); i-- > 0;) v = v * q + digits[i];
    return v;
}

QaryExpansion q_ary_expansion(const CosetParams& params, uint64_t s) {
    if (s > params.n) throw std::invalid_argument("q_ary_expansion: s out of range");
    QaryExpansion e;
    e.digits.assign(params.m, 0);
    for (uint32_t i = 0; i < params.m; ++i) {
        e.digits[i] = static_cast<uint32_t>(s % params.q);
        s /= params.q;
    }
    return e;
}

ExceptionSetsOddM exception_sets_odd_m(const CosetParams& params, uint64_t u) {
    if (params.m < 5 || params.m % 2 == 0)
        throw std::invalid_argument("exception_sets_odd_m: requires odd m >= 5");
    if (u < 1 || u > params.q - 1)
        throw std::invalid_argument("exception_sets_odd_m: u out of range");
    const uint64_t q = params.q;
    const uint64_t qmb = ipow_checked(q, params.m_half);
    const uint64_t qmb1 = qmb / q;
    ExceptionSetsOddM out;
    for (uint64_t jm = 1; jm + 1 <= u; ++jm) {
        for (uint64_t j1 = 0; j1 < jm; ++j1)
            for (uint64_t j0 = 1; j0 <= q - 1; ++j0)
                out.j1.push_back(jm * qmb + j1 * q + j0);
        for (uint64_t jm1 = 1; jm1 <= q - 1; ++jm1)
            for (uint64_t j0 = 1; j0 <= jm; ++j0)
                out.j2.push_back(jm * qmb + jm1 * qmb1 + j0);
    }
    sort_unique(out.j1);
    sort_unique(out.j2);
    return out;
}

ExceptionSetEvenM exception_set_even_m(const CosetParams& params, uint64_t u) {
    if (params.m % 2 != 0)
        throw std::invalid_argument("exception_set_even_m: requires even m");
    if (u < 1 || u > params.q - 1)
        throw std::invalid_argument("exception_set_even_m: u out of range");
    const uint64_t qmb = ipow_checked(params.q, params.m_half);
    ExceptionSetEvenM out;
    for (uint64_t jm = 1; jm + 1 <= u; ++jm)
        for (uint64_t j0 = 1; j0 < jm; ++j0)
            out.j.push_back(jm * qmb + j0);
    for (uint64_t v = 1; v + 1 <= u; ++v) out.half_size_reps.push_back(v * (qmb + 1));
    sort_unique(out.j);
    return out;
}

std::vector<uint64_t> intersection_set_odd(const CosetParams& params, uint64_t u) {
    if (!params.q_odd()) throw std::invalid_argument("intersection_set_odd: requires odd q");
    if (params.m < 5 || params.m % 2 == 0)
        throw std::invalid_argument("intersection_set_odd: requires odd m >= 5");
    if (u < 1 || u > params.q - 1)
        throw std::invalid_argument("intersection_set_odd: u out of range");
    const uint64_t q = params.q;
    const uint32_t mb = params.m_half;
    const uint64_t mid = all_top_digits(q, 1, mb - 2);
    std::vector<uint64_t> out;
    for (uint64_t lm = 0; lm + 1 <= u; ++lm)
        for (uint64_t lm1 = 0; lm1 + 1 <= q - 1; ++lm1)
            for (uint64_t l0 = q - u; l0 <= q - 1; ++l0)
                out.push_back(lm * ipow_checked(q, mb) + lm1 * ipow_checked(q, mb - 1) + mid + l0);
    sort_unique(out);
    return out;
}

std::vector<uint64_t> intersection_set_even(const CosetParams& params, uint64_t u) {
    if (!params.q_odd()) throw std::invalid_argument("intersection_set_even: requires odd q");
    if (params.m % 2 != 0)
        throw std::invalid_argument("intersection_set_even: requires even m");
    const uint64_t umax = params.m == 2 ? (params.q - 1) / 2 : params.q - 1;
    if (u < 1 || u > umax)
        throw std::invalid_argument("intersection_set_even: u out of range");
    const uint64_t q = params.q;
    const uint32_t mb = params.m_half;
    const uint64_t mid = all_top_digits(q, 1, mb - 1);
    std::vector<uint64_t> out;
    for (uint64_t lm = 0; lm + 1 <= u; ++lm)
        for (uint64_t l0 = q - u; l0 <= q - 1; ++l0)
            out.push_back(lm * ipow_checked(q, mb) + mid + l0);
    sort_unique(out);
    return out;
}

std::vector<uint64_t> tilde_set(const CosetParams& params, uint64_t u) {
    if (params.q_odd()) throw std::invalid_argument("tilde_set: requires even q");
    const uint64_t q = params.q;
    const uint32_t mb = params.m_half;
    std::vector<uint64_t> out;
    if (params.m % 2 != 0) {
        if (params.m < 5) throw std::invalid_argument("tilde_set: requires odd m >= 5");
        if (u < 1 || u > q - 1) throw std::invalid_argument("tilde_set: u out of range");
        const uint64_t mid = all_top_digits(q, 1, mb - 2);
        for (uint64_t lm = 0; lm + 1 <= u; ++lm)
            for (uint64_t lm1 = 0; lm1 + 1 <= q - 1; lm1 += 2)
                for (uint64_t l0 = (q - u) | 1; l0 <= q - 1; l0 += 2)
                    out.push_back(lm * ipow_checked(q, mb) + lm1 * ipow_checked(q, mb - 1) +
                                  mid + l0);
    } else {
        const uint64_t umax = params.m == 2 ? q / 2 : q - 1;
        if (u < 1 || u > umax) throw std::invalid_argument("tilde_set: u out of range");
        const uint64_t mid = all_top_digits(q, 1, mb - 1);
        for (uint64_t jm = 0; jm + 1 <= u; jm += 2)
            for (uint64_t j0 = (q - u) | 1; j0 <= q - 1; j0 += 2)
                out.push_back(jm * ipow_checked(q, mb) + mid + j0);
    }
    sort_unique(out);
    return out;
}

std::pair<uint64_t, uint64_t> lambda_counts(const CosetParams& params, uint64_t u) {
    if (params.q_odd()) throw std::invalid_argument("lambda_counts: requires even q");
    if (params.m < 5 || params.m % 2 == 0)
        throw std::invalid_argument("lambda_counts: requires odd m >= 5");
    if (u < 1 || u > params.q - 1) throw std::invalid_argument("lambda_counts: u out of range");
    const uint64_t q = params.q;
    const uint64_t qmb = ipow_checked(q, params.m_half);
    uint64_t lambda1, lambda2;
    if (u % 2 == 0) {
        lambda1 = u * qmb / 2 - (u * u - u) * q / 4 - u * u * (q - 1) / 4;
        lambda2 = ((u * u - u) * q - u * u) / 4;
    } else {
        lambda1 = u * qmb / 2 - (u * u - u) * q / 4 - (u * u - 1) * (q - 1) / 4;
        lambda2 = (u * u - 1) * (q - 1) / 4;
    }
    return {lambda1, lambda2};
}

ThetaCounts theta_counts(const CosetParams& params, uint64_t u) {
    if (params.q_odd()) throw std::invalid_argument("theta_counts: requires even q");
    if (params.m % 2 != 0) throw std::invalid_argument("theta_counts: requires even m");
    if (u < 1 || u > params.q - 1) throw std::invalid_argument("theta_counts: u out of range");
    const uint64_t q = params.q;
    const uint64_t qmb = ipow_checked(q, params.m_half);
    ThetaCounts t;
    if (u % 2 == 0) {
        t.theta1 = u * qmb / 2 - u * u / 4;
        t.theta2 = u / 2;
        t.theta3 = u * (u - 2) / 8;
    } else {
        t.theta1 = u * qmb / 2 - (u * u - 1) / 4;
        t.theta2 = (u - 1) / 2;
        t.theta3 = (u * u - 1) / 8;
    }
    return t;
}

std::optional<uint64_t> negated_pair_count(const CosetParams& params, uint64_t l) {
    const uint64_t q = params.q;
    if (l < 1) return std::nullopt;
    if (params.m % 2 != 0) {
        const uint64_t top = ipow_checked(q, (params.m + 1) / 2);
        if (l > top) return std::nullopt;
        if (l <= top - q) return 0;
        if (l <= top - 2) return 2 * (l - (top - q));  // l = top - q + h, h <= q-2
        return 2 * (q - 1);
    }
    if (q > 2) {
        const uint64_t half = ipow_checked(q, params.m / 2);
        if (l > 2 * half) return std::nullopt;
        if (l <= half - 2) return 0;
        if (l <= 2 * half - 3) return 1;
        if (l == 2 * half - 2) return 2;
        return 4;
    }
    // q = 2, m even. The full case table needs m >= 6; for m = 4 the two
    // high-l pattern pairs coincide and the table's 3/5 rows do not hold, so
    // only the low rows are covered there.
    if (params.m < 4) return std::nullopt;
    const uint64_t half = ipow_checked(q, params.m / 2);
    if (params.m == 4 && l > 2 * half - 4) return std::nullopt;
    if (l > 2 * half) return std::nullopt;
    if (l <= half - 2) return 0;
    if (l <= 2 * half - 4) return 1;
    if (l <= 2 * half - 2) return 3;
    return 5;
}

std::vector<std::pair<QaryExpansion, QaryExpansion>>
negated_pair_profiles(const CosetParams& params) {
    const uint64_t q = params.q;
    auto expand = [&](uint64_t v) { return q_ary_expansion(params, v); };
    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    if (params.m % 2 != 0) {
        const uint32_t h = (params.m - 1) / 2;
        const uint64_t qh = ipow_checked(q, h);
        for (uint64_t u = 0; u <= q - 1; ++u) {
            const uint64_t i = u + qh * q - q;          // (q-1) at digits 1..h, u at digit 0
            const uint64_t j = (q - u) * qh - 1;        // (q-1-u) at digit h, (q-1) below
            pairs.emplace_back(i, j);
            pairs.emplace_back(j, i);
        }
    } else if (q > 2) {
        const uint64_t half = ipow_checked(q, params.m / 2);
        pairs.emplace_back(2 * half - 2, 2 * half - 2);
        pairs.emplace_back(half - 2, 2 * half - 1);
        pairs.emplace_back(2 * half - 1, half - 2);
        pairs.emplace_back(half - 1, half - 1);
    } else {
        if (params.m < 4)
            throw std::invalid_argument("negated_pair_profiles: q=2 requires even m >= 4");
        const uint64_t half = ipow_checked(q, params.m / 2);
        pairs.emplace_back(half / 2 - 1, 2 * half - 1);
        pairs.emplace_back(2 * half - 1, half / 2 - 1);
        pairs.emplace_back(half - 1, half - 1);
        pairs.emplace_back(half + half / 2 - 1, 2 * half - 3);
        pairs.emplace_back(2 * half - 3, half + half / 2 - 1);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<std::pair<QaryExpansion, QaryExpansion>> out;
    out.reserve(pairs.size());
    for (auto [i, j] : pairs) out.emplace_back(expand(i), expand(j));
    return out;
}

uint64_t run_count(uint64_t q, uint32_t r, uint32_t s) {
    if (q < 2) throw std::invalid_argument("run_count: q must be >= 2");
    if (s == 0 || s < r) return 0;
    std::vector<uint64_t> l(s + 1, 0);  // l[0] = 0 even when r = 0
    if (r >= 1 && r <= s) l[r] = 1;
    for (uint32_t t = std::max<uint32_t>(r + 1, 1); t <= s; ++t) {
        const uint64_t tail = ipow_checked(q, t - r - 1) - l[t - r - 1];
        l[t] = q * l[t - 1] + (q - 1) * tail;
    }
    return l[s];
}

}  // namespace lcdbch
