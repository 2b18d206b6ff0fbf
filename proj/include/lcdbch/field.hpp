// Explicit GF(p^e) arithmetic in polynomial basis, with a designated primitive
// element, plus the GF(q) subfield embedding used to express minimal-polynomial
// coefficients over GF(q). Elements are packed reps: sum of digit_i * p^i.
#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace lcdbch {

struct FieldElem {
    uint64_t rep = 0;
    uint32_t ctx_id = 0;
};

class FieldCtx {
public:
    // Deterministic construction. seed = 0 searches monic moduli in ascending
    // packed order and takes the first primitive one (so alpha = x for e >= 2);
    // a nonzero seed drives a reproducible randomized search instead.
    static FieldCtx make(uint64_t p, uint32_t e, uint64_t seed = 0);

    // Uses the given monic irreducible modulus (coefficients low to high,
    // length e+1). The primitive alpha is searched deterministically; x is
    // preferred when it generates.
    static FieldCtx make_with_modulus(uint64_t p, const std::vector<uint32_t>& modulus);

    uint64_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint64_t size() const { return size_; }
    uint64_t order() const { return size_ - 1; }
    uint32_t id() const { return id_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    const std::vector<uint64_t>& order_prime_factors() const { return order_factors_; }

    FieldElem zero() const { return {0, id_}; }
    FieldElem one() const { return {1, id_}; }
    FieldElem alpha() const { return {alpha_rep_, id_}; }
    FieldElem from_rep(uint64_t rep) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;  // throws on zero
    FieldElem pow(FieldElem a, uint64_t k) const;

    // Rep-level arithmetic for inner loops; no context checking.
    uint64_t add_rep(uint64_t a, uint64_t b) const;
    uint64_t sub_rep(uint64_t a, uint64_t b) const;
    uint64_t neg_rep(uint64_t a) const;
    uint64_t mul_rep(uint64_t a, uint64_t b) const;
    uint64_t inv_rep(uint64_t a) const;
    uint64_t pow_rep(uint64_t a, uint64_t k) const;

    std::vector<uint32_t> unpack(uint64_t rep) const;
    uint64_t pack(const std::vector<uint32_t>& digits) const;

    // Multiplicative order of a nonzero element.
    uint64_t element_order(uint64_t rep) const;

    bool has_log_tables() const { return !log_.empty(); }

private:
    FieldCtx() = default;
    void init_tables();
    void check(FieldElem a) const;

    uint64_t p_ = 0, size_ = 0;
    uint32_t e_ = 0, id_ = 0;
    std::vector<uint32_t> modulus_;
    uint64_t alpha_rep_ = 0;
    std::vector<uint64_t> order_factors_;
    std::vector<uint32_t> log_;   // size p^e; log_[0] unused
    std::vector<uint64_t> exp_;   // size 2*order when tables built
};

// Identification of the GF(q) subfield inside GF(q^m) = GF(p^e), q = p^k, k | e.
// Labels are packed reps of a standalone GF(q) context; the label map is a
// field isomorphism between the embedded subfield and that context.
struct SubfieldEmbedding {
    const FieldCtx* big = nullptr;
    const FieldCtx* sub = nullptr;
    uint64_t q = 0;
    uint64_t beta0_rep = 0;  // alpha_big^((p^e-1)/(q-1)), generator of the subfield
    std::vector<uint64_t> from_label;
    std::unordered_map<uint64_t, uint32_t> to_label;

    bool contains(uint64_t big_rep) const { return to_label.count(big_rep) != 0; }
    uint32_t label_of(uint64_t big_rep) const;  // throws if outside the subfield
    uint64_t embed(uint32_t label) const { return from_label.at(label); }
};

SubfieldEmbedding subfield_embedding(const FieldCtx& big, const FieldCtx& sub);

}  // namespace lcdbch
