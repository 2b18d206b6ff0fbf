// Minimum-distance machinery: the BCH bound with run improvement, the exact
// big-integer sphere-packing cap, explicit witness codewords, and exact search
// at desk scale with hard budgets.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcdbch/bchcodes.hpp"

namespace lcdbch {

enum class DistMethod {
    Bch,
    SpherePacking,
    Witness,
    ExhaustiveMessages,
    LowWeightSearch,
    RmWitness,
    None,
};
const char* dist_method_name(DistMethod m);

// Codeword as a sparse exponent -> coefficient-label map.
struct SparseWitness {
    std::vector<std::pair<uint64_t, uint32_t>> terms;  // sorted by exponent
    uint64_t weight() const;
};

struct DistanceResult {
    uint64_t lower = 1;
    std::optional<uint64_t> upper;
    std::optional<uint64_t> exact;
    DistMethod method = DistMethod::None;
    std::optional<SparseWitness> witness;
    std::string note;
};

// Designed distance, improved to run+1 for the longest circular run of
// consecutive exponents in the defining set; for the tilde family also the
// delta+1 improvement when delta does not divide n.
uint64_t bch_lower(const CodeSpec& spec);

// True iff sum_{i<=delta} C(n,i)(q-1)^i > q^(n-k), evaluated in exact
// big-integer arithmetic. True means d <= 2*delta.
bool sphere_packing_implies_le(uint64_t n, uint64_t k, uint64_t q, uint64_t delta);

// Whether the divides-witness applies to this spec (without constructing it).
bool has_divisibility_witness(const CodeSpec& spec);

// Exact distance via the weight-D codeword c(x) = sum_i x^(i n / D) when the
// (possibly run-improved) designed distance D divides gcd(n, b0-1); for the
// family-B codes the witness is (x-1)c(x) with weight 2*delta when delta | n.
// Membership is checked exactly (no defining-set exponent is a multiple of D).
// Throws std::domain_error when the divisibility precondition fails.
DistanceResult witness_delta_divides(const CodeSpec& spec);

struct SearchBudget {
    uint64_t max_messages = 1ull << 24;
    uint64_t max_support_candidates = 1ull << 26;
};

// Exhaustive minimum weight: full message enumeration when q^k fits the
// budget, otherwise a colex low-weight support search against the parity
// check; otherwise a typed bounds-only outcome (not an error).
DistanceResult exact_distance(const CodeSpec& spec, const Poly& gen,
                              const FieldCtx& gf_q, SearchBudget budget = {});

// Witness from four r-dimensional GF(2)-subspaces per the punctured
// Reed-Muller construction; spec must be the q=2 family-B code with
// delta = 2^r - 1. Subspaces are given as big-field element reps with 0
// included. Throws std::invalid_argument naming the violated condition.
struct RmSubspaces {
    std::vector<uint64_t> h1, h2, h3, h4;
};
DistanceResult rm_subspace_witness(const CodeSpec& spec, const FieldCtx& big,
                                   const SubfieldEmbedding& emb, const RmSubspaces& h);

// Exhaustive search for suitable subspaces, r = 2 and m <= 6 only.
std::optional<RmSubspaces> find_rm_subspaces(const FieldCtx& big);

// Re-verifies a witness by evaluation: every defining-set root vanishes.
bool verify_witness_by_eval(const CodeSpec& spec, const SparseWitness& w,
                            const FieldCtx& big, const SubfieldEmbedding& emb);

// Orchestrates the methods above: witness, sphere-packing cap, then search if
// the fields are supplied and budgets allow.
DistanceResult auto_distance(const CodeSpec& spec, const FieldCtx* big,
                             const SubfieldEmbedding* emb, SearchBudget budget = {});

}  // namespace lcdbch
