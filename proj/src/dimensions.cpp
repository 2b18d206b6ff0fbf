#include "lcdbch/dimensions.hpp"

#include <stdexcept>

namespace lcdbch {

namespace {

uint64_t checked_sub(uint64_t a, uint64_t b, const char* where) {
    if (b > a) throw std::logic_error(std::string("dimension underflow in ") + where);
    return a - b;
}

// for formulas with a positive correction term after the subtraction
uint64_t to_k(int64_t v, const char* where) {
    if (v < 0) throw std::logic_error(std::string("dimension underflow in ") + where);
    return static_cast<uint64_t>(v);
}

bool valid_u(uint64_t q, uint64_t u) { return u >= 1 && u <= q - 1; }

// u with delta = u*base + 1, if it exists and is in [1, q-1].
std::optional<uint64_t> u_from_delta(uint64_t q, uint64_t delta, uint64_t base) {
    if (delta < 2 || (delta - 1) % base != 0) return std::nullopt;
    const uint64_t u = (delta - 1) / base;
    if (!valid_u(q, u)) return std::nullopt;
    return u;
}

std::optional<uint32_t> t_from_designed(uint64_t q, uint32_t m, uint64_t designed) {
    uint64_t pw = 1;
    for (uint32_t t = 1; t <= (m + 1) / 2; ++t) {
        pw *= q;
        if (pw - 1 == designed) return t;
    }
    return std::nullopt;
}

std::optional<uint32_t> lambda_from_delta(uint64_t q, uint32_t m, uint64_t delta) {
    uint64_t pw = 1;
    for (uint32_t l = 0; l <= m; ++l) {
        if (pw == delta && l >= (m + 1) / 2 && l <= m - 1) return l;
        pw *= q;
    }
    return std::nullopt;
}

}  // namespace

DimPrediction DimPrediction::not_covered(std::string why) {
    DimPrediction p;
    p.kind = PredKind::NotCovered;
    p.domain = std::move(why);
    return p;
}

DimPrediction DimPrediction::exact(uint64_t k, uint64_t designed, std::string source,
                                   std::string domain) {
    DimPrediction p;
    p.kind = PredKind::Exact;
    p.k = k;
    p.designed = designed;
    p.source = std::move(source);
    p.domain = std::move(domain);
    return p;
}

DimPrediction DimPrediction::bounds(uint64_t lo, uint64_t hi, uint64_t designed,
                                    std::string source, std::string domain) {
    DimPrediction p;
    p.kind = PredKind::Bounds;
    p.k_lower = lo;
    p.k_upper = hi;
    p.designed = designed;
    p.source = std::move(source);
    p.domain = std::move(domain);
    return p;
}

DimPrediction dim_narrow(uint64_t q, uint32_t m, uint64_t u) {
    if (!valid_u(q, u)) return DimPrediction::not_covered("u out of [1, q-1]");
    const uint64_t qm = ipow_checked(q, m);
    if (m >= 5 && m % 2 == 1) {
        const uint64_t qh = ipow_checked(q, (m - 1) / 2);
        const uint64_t k =
            checked_sub(qm - 1, (u * qh - u * u + u) * (q - 1) * m, "dim_narrow odd");
        return DimPrediction::exact(k, u * qh * q + 1, "narrow-odd-m",
                                    "m >= 5 odd, delta = u q^((m+1)/2) + 1");
    }
    if (m >= 2 && m % 2 == 0) {
        const uint64_t qh = ipow_checked(q, m / 2);
        const uint64_t k =
            to_k(static_cast<int64_t>(qm - 1) -
                     static_cast<int64_t>(u * (qh / q) * (q - 1) * m) +
                     static_cast<int64_t>((u - 1) * (u - 1) * (m / 2)),
                 "dim_narrow even");
        auto p = DimPrediction::exact(k, u * qh + 1, "narrow-even-m",
                                      "m >= 2 even, delta = u q^(m/2) + 1");
        if (u == 1) p.d_exact = qh + 1;  // delta | n
        return p;
    }
    return DimPrediction::not_covered("narrow-sense theorems need m >= 5 odd or m even");
}

DimPrediction dim_familyA_onesided(uint64_t q, uint32_t m, uint64_t u) {
    if (m < 2) return DimPrediction::not_covered("m >= 2 required");
    if (!valid_u(q, u)) return DimPrediction::not_covered("u out of [1, q-1]");
    const uint64_t qm = ipow_checked(q, m);
    if (q % 2 == 1) {
        DimPrediction p = dim_narrow(q, m, u);  // same closed forms
        if (!p.covered()) return p;
        p.d_exact.reset();
        p.source = "familyA-onesided-q-odd";
        return p;
    }
    if (m >= 5 && m % 2 == 1) {
        const uint64_t qh = ipow_checked(q, (m + 1) / 2);
        const uint64_t drop =
            u % 2 == 0 ? (u * qh / 2 - u * u * q / 4) * m
                       : (u * qh / 2 - (u * u - u) * q / 4) * m;
        return DimPrediction::exact(checked_sub(qm - 1, drop, "familyA q even m odd"),
                                    u * qh / 2 + 1, "familyA-onesided-q-even-m-odd",
                                    "q even, m >= 5 odd, delta = u q^((m+1)/2)/2 + 1");
    }
    if (m % 2 == 0) {
        const uint64_t qh = ipow_checked(q, m / 2);
        const uint64_t drop = u % 2 == 0 ? (u * qh - u * u / 4) * (m / 2)
                                         : (u * qh - (u - 1) * (u - 1) / 4) * (m / 2);
        return DimPrediction::exact(checked_sub(qm - 1, drop, "familyA q even m even"),
                                    u * qh / 2 + 1, "familyA-onesided-q-even-m-even",
                                    "q even, m >= 2 even, delta = u q^(m/2)/2 + 1");
    }
    return DimPrediction::not_covered("one-sided family-A theorems need m >= 5 odd or m even");
}

DimPrediction dim_lcd_A(uint64_t q, uint32_t m, uint64_t u) {
    if (m < 2) return DimPrediction::not_covered("m >= 2 required");
    const uint64_t qm = ipow_checked(q, m);
    if (q % 2 == 1) {
        if (!valid_u(q, u)) return DimPrediction::not_covered("u out of [1, q-1]");
        if (m >= 5 && m % 2 == 1) {
            const uint64_t qh = ipow_checked(q, (m - 1) / 2);
            const uint64_t k = checked_sub(
                qm - 2, 2 * (u * qh - 2 * u * u + u) * (q - 1) * m, "lcdA q odd m odd");
            return DimPrediction::exact(k, 2 * (u * qh * q + 1), "lcdA-q-odd-m-odd",
                                        "q odd, m >= 5 odd, delta = u q^((m+1)/2) + 1");
        }
        if (m % 2 == 0) {
            if (m == 2 && u > (q - 1) / 2)
                return DimPrediction::not_covered("m = 2 requires u <= (q-1)/2");
            const uint64_t qh = ipow_checked(q, m / 2);
            const uint64_t k =
                to_k(static_cast<int64_t>(qm - 2) -
                         static_cast<int64_t>(2 * u * (qh / q) * (q - 1) * m) +
                         static_cast<int64_t>((2 * u * u - 2 * u + 1) * m),
                     "lcdA q odd m even");
            auto p = DimPrediction::exact(k, 2 * (u * qh + 1), "lcdA-q-odd-m-even",
                                          "q odd, m even, delta = u q^(m/2) + 1");
            if (u == 1 && q % 4 == 3 && m % 4 == 2) p.d_exact = 2 * (qh + 1);
            return p;
        }
        return DimPrediction::not_covered("lcd-A (q odd) needs m >= 5 odd or m even");
    }
    if (!valid_u(q, u)) return DimPrediction::not_covered("u out of [1, q-1]");
    if (m >= 5 && m % 2 == 1) {
        const uint64_t qh = ipow_checked(q, (m + 1) / 2);
        const uint64_t k =
            checked_sub(qm - 1, (u * qh - u * u * q) * m, "lcdA q even m odd");
        return DimPrediction::exact(k, u * qh + 1, "lcdA-q-even-m-odd",
                                    "q even, m >= 5 odd, delta = u q^((m+1)/2)/2 + 1");
    }
    if (m % 2 == 0) {
        if (m == 2 && u > q / 2) return DimPrediction::not_covered("m = 2 requires u <= q/2");
        const uint64_t qh = ipow_checked(q, m / 2);
        const uint64_t drop = u % 2 == 0 ? (u * qh - u * u / 2) * m
                                         : (u * qh - (u * u + 1) / 2) * m;
        auto p = DimPrediction::exact(checked_sub(qm - 1, drop, "lcdA q even m even"),
                                      u * qh + 1, "lcdA-q-even-m-even",
                                      "q even, m even, delta = u q^(m/2)/2 + 1");
        if (u == 1) p.d_exact = qh + 1;  // (2 delta - 1) | gcd(n, b-1)
        return p;
    }
    return DimPrediction::not_covered("lcd-A (q even) needs m >= 5 odd or m even");
}

DimPrediction dim_designed_qt(uint64_t q, uint32_t m, uint32_t t) {
    if (m < 2) return DimPrediction::not_covered("m >= 2 required");
    if (t < 1 || t > (m + 1) / 2)
        return DimPrediction::not_covered("t out of [1, ceil(m/2)]");
    const uint64_t qm = ipow_checked(q, m);
    const uint64_t qt = ipow_checked(q, t);
    if (q % 2 == 1) {
        const uint64_t k =
            checked_sub(qm - 2, (qt - qt / q - 2) * m, "designed-qt q odd");
        return DimPrediction::exact(k, qt - 1, "designed-qt-q-odd",
                                    "q odd, designed distance q^t - 1");
    }
    if (m == 3) return DimPrediction::not_covered("q even excludes m = 3");
    uint64_t k;
    if (m >= 5 && m % 2 == 1 && t == (m + 1) / 2)
        k = checked_sub(qm - 1, (ipow_checked(q, (m + 1) / 2) - q) * m,
                        "designed-qt q even top");
    else
        k = checked_sub(qm - 1, (qt - 2) * m, "designed-qt q even");
    return DimPrediction::exact(k, qt - 1, "designed-qt-q-even",
                                "q even, m != 3, designed distance q^t - 1");
}

DimPrediction dim_lcd_B_small_delta(uint64_t q, uint32_t m, uint64_t delta,
                                    SmallDeltaSplit* split) {
    if (m < 2) return DimPrediction::not_covered("m >= 2 required");
    if (delta < 2) return DimPrediction::not_covered("delta >= 2 required");
    const uint64_t n = ipow_checked(q, m) - 1;
    if (delta >= (n + 1) / 2) return DimPrediction::not_covered("delta >= floor((n+1)/2)");
    const uint64_t dq = (delta - 1) / q, d0 = (delta - 1) % q;
    if (split) *split = {dq, d0};
    const uint64_t qm = n + 1;
    const uint64_t base = dq * (q - 1) + d0;
    if (m % 2 == 1 && m >= 3) {
        const uint64_t top = ipow_checked(q, (m + 1) / 2);
        if (delta > top + 1) return DimPrediction::not_covered("delta > q^((m+1)/2) + 1");
        uint64_t k;
        if (delta <= top - q)
            k = checked_sub(qm - 2, 2 * m * base, "thm-gene odd low");
        else
            k = checked_sub(qm - 2, 2 * m * (top / q - 1) * (q - 1), "thm-gene odd high");
        return DimPrediction::exact(k, 2 * delta, "small-delta-table-m-odd",
                                    "m odd, 2 <= delta <= q^((m+1)/2) + 1");
    }
    if (m % 2 == 0 && q > 2) {
        const uint64_t half = ipow_checked(q, m / 2);
        if (delta > 2 * half + 1) return DimPrediction::not_covered("delta > 2q^(m/2) + 1");
        uint64_t corr;
        if (delta <= half - 1) corr = 0;
        else if (delta <= half + 1) corr = m;
        else if (delta <= 2 * half - 2) corr = 2 * m;
        else if (delta == 2 * half - 1) corr = 3 * m;
        else corr = 5 * m;
        const uint64_t k = to_k(static_cast<int64_t>(qm - 2) -
                                    static_cast<int64_t>(2 * m * base) +
                                    static_cast<int64_t>(corr),
                                "thm-gene even");
        return DimPrediction::exact(k, 2 * delta, "small-delta-table-m-even",
                                    "m even, q > 2, 2 <= delta <= 2q^(m/2) + 1");
    }
    if (m % 2 == 0 && q == 2 && m >= 4) {
        const uint64_t half = ipow_checked(q, m / 2);
        if (delta > 2 * half + 1) return DimPrediction::not_covered("delta > 2^(m/2+1) + 1");
        uint64_t corr;
        if (delta <= half - 1) corr = 0;
        else if (delta <= half + 1) corr = m;
        else if (delta <= 2 * half - 3) corr = 2 * m;
        else if (delta <= 2 * half - 1) {
            if (m < 6) return DimPrediction::not_covered("q = 2 high rows need m >= 6");
            corr = 4 * m;
        } else {
            if (m < 6) return DimPrediction::not_covered("q = 2 high rows need m >= 6");
            corr = 6 * m;
        }
        const uint64_t k = to_k(static_cast<int64_t>(qm - 2) -
                                    static_cast<int64_t>(2 * m * base) +
                                    static_cast<int64_t>(corr),
                                "thm-gene q=2");
        return DimPrediction::exact(k, 2 * delta, "small-delta-table-q2",
                                    "q = 2, m >= 4 even, 2 <= delta <= 2^(m/2+1) + 1");
    }
    return DimPrediction::not_covered("small-delta table: no matching case");
}

DimPrediction dim_lcd_B_u(uint64_t q, uint32_t m, uint64_t u) {
    if (q % 2 == 0) return DimPrediction::not_covered("stated for q odd");
    if (!valid_u(q, u)) return DimPrediction::not_covered("u out of [1, q-1]");
    if (m == 2 && u > (q - 1) / 2)
        return DimPrediction::not_covered("m = 2 requires u <= (q-1)/2");
    const uint64_t delta = u * ipow_checked(q, (m + 1) / 2) + 1;
    const uint64_t n = ipow_checked(q, m) - 1;
    if (delta >= (n + 1) / 2)
        return DimPrediction::not_covered("delta outside the family-B window");
    DimPrediction p = dim_lcd_A(q, m, u);  // monomially equivalent, q odd
    if (!p.covered()) return p;
    p.source = "lcdB-u-equivalence";
    p.d_exact.reset();
    return p;
}

DimPrediction dim_lcd_B_run_bounds(uint64_t q, uint32_t m, uint32_t lambda,
                             uint64_t* deg_narrow_out) {
    if (lambda < (m + 1) / 2 || lambda > m - 1)
        return DimPrediction::not_covered("lambda out of [ceil(m/2), m-1]");
    const uint32_t r = m - lambda;
    const uint64_t qm = ipow_checked(q, m);
    uint64_t deg = run_count(q, r, m) - 1;
    for (uint32_t u = 0; r >= 2 && u <= r - 2; ++u)
        deg += (q - 1) * (q - 1) * (r - u - 1) *
               (ipow_checked(q, m - r - u - 2) - run_count(q, r, m - r - u - 2));
    if (deg_narrow_out) *deg_narrow_out = deg;
    const uint64_t shifts = run_count(q, r, m - r);  // |N'|
    const __int128 base = static_cast<__int128>(qm) - 2 - 2 * static_cast<__int128>(deg);
    const __int128 lo = base + 2 * static_cast<__int128>(shifts);
    const __int128 hi = base + static_cast<__int128>(m) * shifts;
    const uint64_t k_lo = lo < 0 ? 0 : static_cast<uint64_t>(lo);
    const uint64_t k_hi = hi < 0 ? 0 : static_cast<uint64_t>(hi);
    return DimPrediction::bounds(k_lo, k_hi, 2 * ipow_checked(q, lambda), "run-count-bounds",
                                 "delta = q^lambda, ceil(m/2) <= lambda <= m-1");
}

DimPrediction dim_melas_evenlike(uint64_t q, uint32_t m) {
    if (q % 2 == 0) return DimPrediction::not_covered("stated for q odd");
    if (m < 2) return DimPrediction::not_covered("m >= 2 required");
    const uint64_t qm = ipow_checked(q, m);
    auto p = DimPrediction::exact(checked_sub(qm - 2, 2 * m, "melas"), 4, "melas-evenlike",
                                  "q odd, m >= 2, delta = 2");
    p.d_exact = 4;
    return p;
}

DimPrediction dim_small_delta(uint64_t q, uint32_t m, uint64_t delta) {
    const uint64_t qm = ipow_checked(q, m);
    if (delta == 2) {
        if (q % 2 == 0) return DimPrediction::not_covered("delta = 2 theorem needs q odd");
        return dim_melas_evenlike(q, m);
    }
    if (delta == 3) {
        if (q == 2 && m >= 4) {
            auto p = DimPrediction::exact(checked_sub(qm - 2, 2 * m, "small-delta q2 d3"), 6,
                                          "small-delta-3-q2", "q = 2, m >= 4");
            p.d_exact = 6;
            return p;
        }
        if (q > 2 && m >= 4 && qm % 3 == 1) {
            auto p = DimPrediction::exact(checked_sub(qm - 2, 4 * m, "small-delta d3"), 6,
                                          "small-delta-3", "q^m = 1 mod 3, m >= 4");
            p.d_exact = 6;
            return p;
        }
        return DimPrediction::not_covered("delta = 3 needs q = 2 or q^m = 1 mod 3, m >= 4");
    }
    if (delta == 4) {
        if (q != 3 || m < 3) return DimPrediction::not_covered("delta = 4 theorem needs q = 3, m >= 3");
        auto p = DimPrediction::exact(checked_sub(qm - 2, 4 * m, "small-delta q3 d4"), 8,
                                      "small-delta-4-q3", "q = 3, m >= 3");
        if (m % 2 == 0) p.d_exact = 8;  // 4 | n; odd m gives d >= 8 only
        return p;
    }
    return DimPrediction::not_covered("no small-delta theorem for this delta");
}

DimPrediction predict(const CodeSpec& spec) {
    const uint64_t q = spec.params.q;
    const uint32_t m = spec.params.m;
    const uint64_t qmb = ipow_checked(q, spec.params.m_half);
    switch (spec.family) {
        case Family::Narrow: {
            if (auto u = u_from_delta(q, spec.delta, qmb)) return dim_narrow(q, m, *u);
            if (auto l = lambda_from_delta(q, m, spec.delta)) {
                uint64_t deg = 0;
                auto b = dim_lcd_B_run_bounds(q, m, *l, &deg);
                if (b.covered())
                    return DimPrediction::exact(spec.params.n - deg, spec.delta,
                                                "run-count-narrow-degree",
                                                "delta = q^lambda, run-count degree");
            }
            return DimPrediction::not_covered("narrow-sense: delta matches no theorem");
        }
        case Family::Generic: {
            if (spec.b == 1) {
                CodeSpec narrow = spec;
                narrow.family = Family::Narrow;
                return predict(narrow);
            }
            const uint64_t n = spec.params.n;
            const uint64_t base = q % 2 == 1 ? qmb : qmb / 2;
            if (auto u = u_from_delta(q, spec.delta, base)) {
                const uint64_t mid = q % 2 == 1 ? n / 2 : (n + 1) / 2;
                const uint64_t hi_b = q % 2 == 1 ? mid + 1 : mid;
                const bool lo_b = spec.delta - 1 <= mid &&
                                  spec.b == mid - (spec.delta - 1);
                if (spec.b == hi_b || lo_b) return dim_familyA_onesided(q, m, *u);
            }
            return DimPrediction::not_covered("generic: not a recognized one-sided range");
        }
        case Family::LcdAEvenN: {
            if (auto t = t_from_designed(q, m, 2 * spec.delta))
                return dim_designed_qt(q, m, *t);
            if (auto u = u_from_delta(q, spec.delta, qmb)) return dim_lcd_A(q, m, *u);
            return DimPrediction::not_covered("lcd-a: delta matches no theorem");
        }
        case Family::LcdAOddN: {
            if (auto t = t_from_designed(q, m, 2 * spec.delta - 1))
                return dim_designed_qt(q, m, *t);
            if (auto u = u_from_delta(q, spec.delta, qmb / 2)) return dim_lcd_A(q, m, *u);
            return DimPrediction::not_covered("lcd-a: delta matches no theorem");
        }
        case Family::LcdB: {
            if (auto p = dim_small_delta(q, m, spec.delta); p.covered()) return p;
            if (auto p = dim_lcd_B_small_delta(q, m, spec.delta); p.covered()) return p;
            if (q % 2 == 1)
                if (auto u = u_from_delta(q, spec.delta, qmb)) {
                    if (auto p = dim_lcd_B_u(q, m, *u); p.covered()) return p;
                }
            if (auto l = lambda_from_delta(q, m, spec.delta))
                if (auto p = dim_lcd_B_run_bounds(q, m, *l); p.covered()) return p;
            return DimPrediction::not_covered("lcd-b: delta matches no theorem");
        }
        case Family::LcdBTilde: {
            // T-tilde = T \ {0} always, so predictions shift by one dimension.
            CodeSpec b = spec;
            b.family = Family::LcdB;
            DimPrediction p = predict(b);
            if (p.kind == PredKind::Exact) p.k += 1;
            if (p.kind == PredKind::Bounds) {
                p.k_lower += 1;
                p.k_upper += 1;
            }
            if (p.covered()) {
                p.source += "+evenlike-complement";
                p.designed = spec.delta;
                p.d_exact.reset();
            }
            return p;
        }
        case Family::MelasEvenlike: {
            if (q % 2 == 1) return dim_melas_evenlike(q, m);
            if (q == 2 && m >= 4) return dim_small_delta(q, m, 3);  // same defining set
            return dim_lcd_B_small_delta(q, m, 2);
        }
    }
    return DimPrediction::not_covered("unknown family");
}

}  // namespace lcdbch
