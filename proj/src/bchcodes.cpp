#include "lcdbch/bchcodes.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace lcdbch {

const char* family_name(Family f) {
    switch (f) {
        case Family::Narrow: return "narrow";
        case Family::Generic: return "generic";
        case Family::LcdAEvenN: return "lcd-a-even-n";
        case Family::LcdAOddN: return "lcd-a-odd-n";
        case Family::LcdB: return "lcd-b";
        case Family::LcdBTilde: return "lcd-b-tilde";
        case Family::MelasEvenlike: return "melas-evenlike";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::Narrow, Family::Generic, Family::LcdAEvenN, Family::LcdAOddN,
                     Family::LcdB, Family::LcdBTilde, Family::MelasEvenlike})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

CodeSpec make_spec(Family f, const CosetParams& params, uint64_t delta,
                   std::optional<uint64_t> b_for_generic) {
    const uint64_t n = params.n;
    CodeSpec spec;
    spec.family = f;
    spec.params = params;
    spec.delta = delta;
    switch (f) {
        case Family::Narrow:
            if (delta < 2 || delta > n)
                throw std::invalid_argument("narrow-sense: need 2 <= delta <= n");
            spec.b = 1;
            break;
        case Family::Generic:
            if (delta < 2 || delta > n)
                throw std::invalid_argument("generic: need 2 <= delta <= n");
            if (!b_for_generic) throw std::invalid_argument("generic: b required");
            spec.b = *b_for_generic % n;
            break;
        case Family::LcdAEvenN:
            if (params.q_odd() == false)
                throw std::invalid_argument("lcd-a-even-n: requires odd q (even n)");
            if (delta < 1 || delta > n / 2)
                throw std::invalid_argument("lcd-a-even-n: need 1 <= delta <= n/2");
            spec.b = n / 2 - delta + 1;
            break;
        case Family::LcdAOddN:
            if (params.q_odd())
                throw std::invalid_argument("lcd-a-odd-n: requires even q (odd n)");
            if (delta < 1 || delta > (n + 1) / 2)
                throw std::invalid_argument("lcd-a-odd-n: need 1 <= delta <= (n+1)/2");
            spec.b = (n + 1) / 2 - delta + 1;
            break;
        case Family::LcdB:
        case Family::LcdBTilde:
            if (delta < 2 || delta >= (n + 1) / 2)
                throw std::invalid_argument("lcd-b: need 2 <= delta < floor((n+1)/2)");
            spec.b = n - delta + 1;
            break;
        case Family::MelasEvenlike:
            if (delta != 0 && delta != 2)
                throw std::invalid_argument("melas-evenlike: delta is fixed at 2");
            spec.delta = 2;
            spec.b = n - 1;
            break;
    }
    return spec;
}

uint64_t designed_distance(const CodeSpec& spec) {
    switch (spec.family) {
        case Family::Narrow:
        case Family::Generic: return spec.delta;
        case Family::LcdAEvenN: return 2 * spec.delta;
        case Family::LcdAOddN: return 2 * spec.delta - 1;
        case Family::LcdB: return 2 * spec.delta;
        case Family::LcdBTilde: return spec.delta;
        case Family::MelasEvenlike: return 4;
    }
    return 0;
}

namespace {

// Applies fn to every base exponent whose coset closure forms the defining set.
template <typename Fn>
void for_each_base_exponent(const CodeSpec& spec, Fn fn) {
    const uint64_t n = spec.params.n;
    const uint64_t d = spec.delta;
    switch (spec.family) {
        case Family::Narrow:
        case Family::Generic:
            for (uint64_t i = 0; i + 1 < d; ++i) fn((spec.b + i) % n);
            break;
        case Family::LcdAEvenN:
            for (uint64_t i = 0; i < 2 * d - 1; ++i) fn(spec.b + i);
            break;
        case Family::LcdAOddN:
            for (uint64_t i = 0; i + 2 < 2 * d; ++i) fn(spec.b + i);
            break;
        case Family::LcdB:
            for (uint64_t i = 0; i < 2 * d - 1; ++i) fn((spec.b + i) % n);
            break;
        case Family::LcdBTilde:
            for (uint64_t i = 0; i < 2 * d - 1; ++i) {
                const uint64_t e = (spec.b + i) % n;
                if (e != 0) fn(e);
            }
            break;
        case Family::MelasEvenlike:
            fn(0);
            fn(1);
            fn(n - 1);
            break;
    }
}

}  // namespace

DefiningSet defining_set(const CodeSpec& spec) {
    DefiningSet t;
    std::unordered_set<uint64_t> seen;
    for_each_base_exponent(spec, [&](uint64_t e) {
        const uint64_t lead = coset_leader(spec.params, e);
        if (!seen.insert(lead).second) return;
        t.leaders.push_back(lead);
        uint64_t x = lead;
        do {
            t.exponents.push_back(x);
            x = mulmod(x, spec.params.q, spec.params.n);
        } while (x != lead);
    });
    std::sort(t.exponents.begin(), t.exponents.end());
    std::sort(t.leaders.begin(), t.leaders.end());
    return t;
}

uint64_t dimension_constructive(const CodeSpec& spec) {
    std::unordered_set<uint64_t> seen;
    uint64_t total = 0;
    for_each_base_exponent(spec, [&](uint64_t e) {
        const uint64_t lead = coset_leader(spec.params, e);
        if (seen.insert(lead).second) total += coset_size(spec.params, lead);
    });
    return spec.params.n - total;
}

bool is_lcd(const DefiningSet& t, uint64_t n) {
    for (uint64_t e : t.exponents) {
        const uint64_t neg = e == 0 ? 0 : n - e;
        if (!std::binary_search(t.exponents.begin(), t.exponents.end(), neg)) return false;
    }
    return true;
}

bool is_lcd(const CodeSpec& spec) { return is_lcd(defining_set(spec), spec.params.n); }

bool can_materialize(const CodeSpec& spec) { return spec.params.n <= kMaterializeLimit; }

std::optional<Poly> generator_poly(const CodeSpec& spec, const FieldCtx& big,
                                   const SubfieldEmbedding& emb) {
    if (!can_materialize(spec)) return std::nullopt;
    if (big.size() != spec.params.n + 1 || emb.q != spec.params.q)
        throw std::invalid_argument("generator_poly: field does not match code params");
    const DefiningSet t = defining_set(spec);
    Poly g = Poly::one();
    for (uint64_t lead : t.leaders)
        g = poly_mul(*emb.sub, g, minimal_poly(spec.params, big, emb, lead));
    if (g.degree() != static_cast<int64_t>(t.exponents.size()))
        throw std::logic_error("generator_poly: degree != |defining set|");
    return g;
}

bool monomial_equivalence_check(const CosetParams& params, uint64_t delta) {
    if (!params.q_odd())
        throw std::invalid_argument(
            "monomial_equivalence_check: stated for odd q only");
    const CodeSpec a = make_spec(Family::LcdAEvenN, params, delta);
    const CodeSpec b = make_spec(Family::LcdB, params, delta);
    return dimension_constructive(a) == dimension_constructive(b);
}

}  // namespace lcdbch
