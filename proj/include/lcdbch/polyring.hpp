// Dense univariate polynomials over GF(q). Coefficients are GF(q) labels, i.e.
// packed reps of a standalone GF(q) FieldCtx, lowest degree first, with no
// trailing zeros stored. The zero polynomial has an empty coefficient vector.
#pragma once

#include <cstdint>
#include <vector>

#include "lcdbch/cosets.hpp"
#include "lcdbch/field.hpp"

namespace lcdbch {

struct Poly {
    std::vector<uint32_t> c;

    bool is_zero() const { return c.empty(); }
    int64_t degree() const { return static_cast<int64_t>(c.size()) - 1; }
    uint32_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
    uint64_t weight() const;

    static Poly zero() { return {}; }
    static Poly one() { return {{1}}; }
    static Poly monomial(size_t deg, uint32_t coef = 1);
};

bool operator==(const Poly& a, const Poly& b);

void poly_normalize(Poly& f);
Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b);
// Quotient and remainder; throws std::domain_error on zero divisor.
std::pair<Poly, Poly> poly_divrem(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_make_monic(const FieldCtx& F, const Poly& f);
Poly poly_gcd(const FieldCtx& F, Poly a, Poly b);              // monic
Poly poly_lcm(const FieldCtx& F, const std::vector<Poly>& fs); // monic
Poly x_pow_n_minus_1(const FieldCtx& F, uint64_t n);

// x^deg(f) * f(1/x): coefficient reversal. Throws on the zero polynomial.
Poly reciprocal(const FieldCtx& F, const Poly& f);
// True iff f equals its reciprocal up to monic normalization.
bool is_self_reciprocal(const FieldCtx& F, const Poly& f);

// Minimal polynomial of beta^i over GF(q), beta = alpha since n = q^m - 1:
// the product over j in C_i of (x - beta^j), assembled in GF(q^m). Every
// coefficient must land in the embedded GF(q); a coefficient outside it is an
// internal consistency failure and throws std::logic_error.
Poly minimal_poly(const CosetParams& params, const FieldCtx& big,
                  const SubfieldEmbedding& emb, uint64_t i);

// Horner evaluation of f (coefficients over GF(q)) at a point of GF(q^m),
// mapping coefficients through the embedding.
FieldElem poly_eval_embedded(const Poly& f, const FieldCtx& big,
                             const SubfieldEmbedding& emb, FieldElem x);

}  // namespace lcdbch
