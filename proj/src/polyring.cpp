#include "lcdbch/polyring.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcdbch {

uint64_t Poly::weight() const {
    uint64_t w = 0;
    for (uint32_t x : c) w += (x != 0);
    return w;
}

Poly Poly::monomial(size_t deg, uint32_t coef) {
    Poly f;
    if (coef != 0) {
        f.c.assign(deg + 1, 0);
        f.c[deg] = coef;
    }
    return f;
}

bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

void poly_normalize(Poly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = static_cast<uint32_t>(F.add_rep(a.coeff(i), b.coeff(i)));
    poly_normalize(r);
    return r;
}

Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = static_cast<uint32_t>(F.sub_rep(a.coeff(i), b.coeff(i)));
    poly_normalize(r);
    return r;
}

Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            r.c[i + j] = static_cast<uint32_t>(
                F.add_rep(r.c[i + j], F.mul_rep(a.c[i], b.c[j])));
        }
    }
    poly_normalize(r);
    return r;
}

std::pair<Poly, Poly> poly_divrem(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    Poly rem = a, quo;
    if (a.degree() < b.degree()) return {quo, rem};
    quo.c.assign(a.c.size() - b.c.size() + 1, 0);
    const uint64_t lead_inv = F.inv_rep(b.c.back());
    for (size_t d = rem.c.size(); d-- >= b.c.size();) {
        if (rem.c[d] == 0) continue;
        const uint64_t coef = F.mul_rep(rem.c[d], lead_inv);
        const size_t shift = d - (b.c.size() - 1);
        quo.c[shift] = static_cast<uint32_t>(coef);
        for (size_t j = 0; j < b.c.size(); ++j)
            rem.c[shift + j] = static_cast<uint32_t>(
                F.sub_rep(rem.c[shift + j], F.mul_rep(coef, b.c[j])));
    }
    poly_normalize(quo);
    poly_normalize(rem);
    return {quo, rem};
}

Poly poly_make_monic(const FieldCtx& F, const Poly& f) {
    if (f.is_zero()) return f;
    if (f.c.back() == 1) return f;
    Poly r = f;
    const uint64_t inv = F.inv_rep(f.c.back());
    for (auto& x : r.c) x = static_cast<uint32_t>(F.mul_rep(x, inv));
    return r;
}

Poly poly_gcd(const FieldCtx& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divrem(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(F, a);
}

Poly poly_lcm(const FieldCtx& F, const std::vector<Poly>& fs) {
    Poly acc = Poly::one();
    for (const Poly& f : fs) {
        if (f.is_zero()) throw std::domain_error("poly_lcm: zero polynomial");
        const Poly g = poly_gcd(F, acc, f);
        acc = poly_mul(F, poly_divrem(F, acc, g).first, f);
    }
    return poly_make_monic(F, acc);
}

Poly x_pow_n_minus_1(const FieldCtx& F, uint64_t n) {
    Poly f;
    f.c.assign(n + 1, 0);
    f.c[0] = static_cast<uint32_t>(F.neg_rep(1));
    f.c[n] = 1;
    return f;
}

Poly reciprocal(const FieldCtx& F, const Poly& f) {
    (void)F;
    if (f.is_zero()) throw std::domain_error("reciprocal: zero polynomial");
    Poly r = f;
    std::reverse(r.c.begin(), r.c.end());
    poly_normalize(r);
    return r;
}

bool is_self_reciprocal(const FieldCtx& F, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("is_self_reciprocal: zero polynomial");
    return poly_make_monic(F, reciprocal(F, f)) == poly_make_monic(F, f);
}

Poly minimal_poly(const CosetParams& params, const FieldCtx& big,
                  const SubfieldEmbedding& emb, uint64_t i) {
    if (emb.big != &big || emb.q != params.q || big.size() != params.n + 1)
        throw std::invalid_argument("minimal_poly: field/embedding/params mismatch");
    if (i >= params.n) throw std::invalid_argument("minimal_poly: exponent out of range");
    const uint64_t beta = big.alpha().rep;  // n = q^m - 1, so beta = alpha
    // product over the coset of (x - beta^j), in the big field
    std::vector<uint64_t> acc{1};
    uint64_t j = i;
    do {
        const uint64_t root = big.pow_rep(beta, j);
        const uint64_t neg_root = big.neg_rep(root);
        // acc *= (x - root): new[d+1] += old[d], new[d] = old[d]*(-root)
        acc.push_back(0);
        for (size_t d = acc.size() - 1; d-- > 0;) {
            const uint64_t keep = big.mul_rep(acc[d], neg_root);
            acc[d + 1] = big.add_rep(acc[d + 1], acc[d]);
            acc[d] = keep;
        }
        j = mulmod(j, params.q, params.n);
    } while (j != i);
    Poly out;
    out.c.resize(acc.size());
    for (size_t d = 0; d < acc.size(); ++d)
        out.c[d] = emb.label_of(acc[d]);  // throws if outside GF(q): field bug
    poly_normalize(out);
    return out;
}

FieldElem poly_eval_embedded(const Poly& f, const FieldCtx& big,
                             const SubfieldEmbedding& emb, FieldElem x) {
    if (emb.big != &big) throw std::invalid_argument("poly_eval_embedded: context mismatch");
    if (x.ctx_id != big.id())
        throw std::invalid_argument("poly_eval_embedded: point from another field");
    uint64_t acc = 0;
    for (size_t i = f.c.size(); i-- > 0;)
        acc = big.add_rep(big.mul_rep(acc, x.rep), emb.embed(f.c[i]));
    return big.from_rep(acc);
}

}  // namespace lcdbch
