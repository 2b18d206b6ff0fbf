// Code families as defining sets and, at materializable sizes, generator
// polynomials. Dimensions come from defining-set cardinality alone; fields are
// only needed when a generator or witness is materialized.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcdbch/cosets.hpp"
#include "lcdbch/field.hpp"
#include "lcdbch/polyring.hpp"

namespace lcdbch {

enum class Family {
    Narrow,         // C_(q,n,delta,1)
    Generic,        // C_(q,n,delta,b)
    LcdAEvenN,      // C_(q,n,2delta,n/2-delta+1), q odd
    LcdAOddN,       // C_(q,n,2delta-1,(n+1)/2-delta+1), q even
    LcdB,           // C_(q,n,2delta,n-delta+1)
    LcdBTilde,      // same without the (x-1) factor
    MelasEvenlike,  // generator (x-1) m_1(x) m_{-1}(x)
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct CodeSpec {
    Family family = Family::Narrow;
    CosetParams params;
    // Narrow/Generic/LcdB/LcdBTilde carry delta directly; the two
    // LCD-A families carry the half-range delta (designed distance 2*delta or
    // 2*delta-1 respectively).
    uint64_t delta = 0;
    uint64_t b = 0;  // first exponent of the consecutive root range, in [0, n)
};

// Validates the family gates (delta window, parity of q) and derives b.
CodeSpec make_spec(Family f, const CosetParams& params, uint64_t delta,
                   std::optional<uint64_t> b_for_generic = std::nullopt);

uint64_t designed_distance(const CodeSpec& spec);

struct DefiningSet {
    std::vector<uint64_t> exponents;  // sorted; closed under multiplication by q
    std::vector<uint64_t> leaders;    // sorted leaders of the involved cosets
};

DefiningSet defining_set(const CodeSpec& spec);
// n - |T| without materializing the exponent list.
uint64_t dimension_constructive(const CodeSpec& spec);

// T = -T (mod n); with a materialized generator this coincides with
// self-reciprocality of g.
bool is_lcd(const DefiningSet& t, uint64_t n);
bool is_lcd(const CodeSpec& spec);

// Largest n for which polynomials are materialized.
inline constexpr uint64_t kMaterializeLimit = 1ull << 14;
bool can_materialize(const CodeSpec& spec);

// Monic generator of degree |T| dividing x^n - 1; nullopt above the
// materialization ceiling (defining-set-only regime).
std::optional<Poly> generator_poly(const CodeSpec& spec, const FieldCtx& big,
                                   const SubfieldEmbedding& emb);

// Same-(q,m,delta) family-A/family-B dimension agreement (monomial
// equivalence); q must be odd.
bool monomial_equivalence_check(const CosetParams& params, uint64_t delta);

}  // namespace lcdbch
