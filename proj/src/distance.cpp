#include "lcdbch/distance.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcdbch/kernels.hpp"

namespace lcdbch {

using boost::multiprecision::cpp_int;

const char* dist_method_name(DistMethod m) {
    switch (m) {
        case DistMethod::Bch: return "bch";
        case DistMethod::SpherePacking: return "sphere-packing";
        case DistMethod::Witness: return "witness";
        case DistMethod::ExhaustiveMessages: return "exhaustive-messages";
        case DistMethod::LowWeightSearch: return "low-weight-search";
        case DistMethod::RmWitness: return "rm-witness";
        case DistMethod::None: return "none";
    }
    return "?";
}

uint64_t SparseWitness::weight() const {
    uint64_t w = 0;
    for (auto& [e, c] : terms) w += (c != 0);
    return w;
}

namespace {

// Longest circular run of consecutive residues inside sorted exponents.
uint64_t longest_circular_run(const std::vector<uint64_t>& sorted, uint64_t n,
                              uint64_t* start_out = nullptr) {
    if (sorted.empty()) return 0;
    if (sorted.size() == n) {
        if (start_out) *start_out = 0;
        return n;
    }
    uint64_t best = 0, best_start = sorted[0];
    uint64_t run = 1, run_start = sorted[0];
    for (size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1] + 1) {
            ++run;
        } else {
            if (run > best) {
                best = run;
                best_start = run_start;
            }
            run = 1;
            run_start = sorted[i];
        }
    }
    if (run > best) {
        best = run;
        best_start = run_start;
    }
    // wrap: a tail ending at n-1 glues to a head starting at 0
    if (sorted.front() == 0 && sorted.back() == n - 1) {
        uint64_t head = 1;
        while (head < sorted.size() && sorted[head] == sorted[head - 1] + 1) ++head;
        uint64_t tail = 1;
        while (tail < sorted.size() &&
               sorted[sorted.size() - tail - 1] + 1 == sorted[sorted.size() - tail])
            ++tail;
        if (head + tail <= sorted.size() && head + tail > best) {
            best = head + tail;
            best_start = n - tail;
        }
    }
    if (start_out) *start_out = best_start;
    return best;
}

// All maximal circular runs as (start, length), unsorted.
std::vector<std::pair<uint64_t, uint64_t>> circular_runs(const std::vector<uint64_t>& sorted,
                                                         uint64_t n) {
    std::vector<std::pair<uint64_t, uint64_t>> runs;
    if (sorted.empty() || sorted.size() == n) return runs;
    uint64_t run = 1, run_start = sorted[0];
    for (size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1] + 1) {
            ++run;
        } else {
            runs.push_back({run_start, run});
            run = 1;
            run_start = sorted[i];
        }
    }
    runs.push_back({run_start, run});
    if (runs.size() >= 2 && sorted.front() == 0 && sorted.back() == n - 1) {
        // glue the wrap-around pair
        runs.front().first = runs.back().first;
        runs.front().second += runs.back().second;
        runs.pop_back();
    }
    return runs;
}

}  // namespace

uint64_t bch_lower(const CodeSpec& spec) {
    const uint64_t n = spec.params.n;
    const DefiningSet t = defining_set(spec);
    if (t.exponents.size() == n) return n + 1;  // zero code
    uint64_t bound = std::max<uint64_t>(designed_distance(spec), 1);
    bound = std::max(bound, longest_circular_run(t.exponents, n) + 1);
    if (spec.family == Family::LcdBTilde && n % spec.delta != 0)
        bound = std::max(bound, spec.delta + 1);
    return bound;
}

bool sphere_packing_implies_le(uint64_t n, uint64_t k, uint64_t q, uint64_t delta) {
    cpp_int sum = 1, binom = 1, qm1pow = 1;
    for (uint64_t i = 1; i <= delta; ++i) {
        binom *= n - i + 1;
        binom /= i;
        qm1pow *= q - 1;
        sum += binom * qm1pow;
    }
    cpp_int rhs = 1;
    for (uint64_t i = 0; i < n - k; ++i) rhs *= q;
    return sum > rhs;
}

namespace {

struct DividesPlan {
    uint64_t d = 0;          // witness weight = exact distance
    uint64_t period = 0;     // n / D
    bool even_like = false;  // multiply the comb by (x - 1)
};

// The comb c(x) = sum_i x^(i n/D) lies in the code iff no defining-set
// exponent is a multiple of D; that is checked exactly here.
std::optional<DividesPlan> divides_plan(const CodeSpec& spec) {
    const uint64_t n = spec.params.n;
    const DefiningSet t = defining_set(spec);
    if (t.exponents.size() == n) return std::nullopt;
    auto all_nondivisible = [&](uint64_t d, bool skip_zero) {
        for (uint64_t e : t.exponents) {
            if (e == 0 && skip_zero) continue;
            if (e % d == 0) return false;
        }
        return true;
    };
    if (spec.family == Family::LcdB || spec.family == Family::MelasEvenlike) {
        const uint64_t delta = spec.family == Family::MelasEvenlike ? 2 : spec.delta;
        if (n % delta != 0 || !all_nondivisible(delta, true)) return std::nullopt;
        return DividesPlan{2 * delta, n / delta, true};
    }
    if (spec.family == Family::LcdBTilde) {
        if (n % spec.delta != 0 || !all_nondivisible(spec.delta, false)) return std::nullopt;
        return DividesPlan{spec.delta, n / spec.delta, false};
    }
    // consecutive-range families: try every maximal circular run (b0, D = run+1)
    const uint64_t best = longest_circular_run(t.exponents, n);
    const uint64_t d = best + 1;
    if (d < 2 || n % d != 0 || !all_nondivisible(d, false)) return std::nullopt;
    for (const auto& [b0, len] : circular_runs(t.exponents, n)) {
        if (len != best) continue;
        const uint64_t b_minus_1 = (b0 + n - 1) % n;
        if (b_minus_1 % d == 0)  // D | gcd(n, b0 - 1)
            return DividesPlan{d, n / d, false};
    }
    return std::nullopt;
}

}  // namespace

bool has_divisibility_witness(const CodeSpec& spec) { return divides_plan(spec).has_value(); }

DistanceResult witness_delta_divides(const CodeSpec& spec) {
    auto plan = divides_plan(spec);
    if (!plan)
        throw std::domain_error(
            "witness_delta_divides: divisibility precondition unmet for this spec");
    const uint64_t n = spec.params.n;
    const uint64_t count = n / plan->period;
    uint64_t p = 0;
    uint32_t pk = 0;
    is_prime_power(spec.params.q, &p, &pk);
    SparseWitness w;
    if (plan->even_like) {
        // (x - 1) c(x): -1 sits in the prime subfield, label p - 1
        const uint32_t minus_one = static_cast<uint32_t>(p - 1);
        for (uint64_t i = 0; i < count; ++i) {
            w.terms.emplace_back(i * plan->period, minus_one);
            w.terms.emplace_back(i * plan->period + 1, 1);
        }
    } else {
        for (uint64_t i = 0; i < count; ++i) w.terms.emplace_back(i * plan->period, 1);
    }
    std::sort(w.terms.begin(), w.terms.end());
    DistanceResult res;
    res.lower = bch_lower(spec);
    res.exact = plan->d;
    res.upper = plan->d;
    res.method = DistMethod::Witness;
    res.witness = std::move(w);
    if (res.lower != plan->d)
        throw std::logic_error("witness weight disagrees with the BCH lower bound");
    return res;
}

namespace {

// q = 2: Gray-code walk over all nonzero messages.
uint64_t min_weight_binary(const Poly& gen, uint64_t n, uint64_t k) {
    const size_t words = (n + 63) / 64;
    std::vector<uint64_t> rows(k * words, 0);
    for (uint64_t i = 0; i < k; ++i)
        for (size_t j = 0; j < gen.c.size(); ++j)
            if (gen.c[j]) rows[i * words + (i + j) / 64] |= 1ull << ((i + j) % 64);
    std::vector<uint64_t> cur(words, 0);
    uint64_t best = UINT64_MAX;
    const uint64_t total = 1ull << k;
    for (uint64_t step = 1; step < total; ++step) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(step));
        kernels::xor_into(cur.data(), rows.data() + bit * words, words);
        best = std::min(best, kernels::popcount_words(cur.data(), words));
    }
    return best;
}

// generic q <= 255: depth-first message enumeration with per-depth partials.
uint64_t min_weight_generic(const Poly& gen, const FieldCtx& gf_q, uint64_t n, uint64_t k) {
    const uint64_t q = gf_q.size();
    std::vector<std::vector<uint8_t>> scaled(q, std::vector<uint8_t>(gen.c.size()));
    for (uint64_t lab = 0; lab < q; ++lab)
        for (size_t j = 0; j < gen.c.size(); ++j)
            scaled[lab][j] = static_cast<uint8_t>(gf_q.mul_rep(lab, gen.c[j]));
    std::vector<std::vector<uint8_t>> add(q, std::vector<uint8_t>(q));
    for (uint64_t a = 0; a < q; ++a)
        for (uint64_t b = 0; b < q; ++b)
            add[a][b] = static_cast<uint8_t>(gf_q.add_rep(a, b));
    std::vector<std::vector<uint8_t>> partial(k + 1, std::vector<uint8_t>(n, 0));
    uint64_t best = UINT64_MAX;
    auto rec = [&](auto&& self, uint64_t depth) -> void {
        if (depth == k) {
            const uint64_t w = kernels::count_nonzero_bytes(partial[k].data(), n);
            if (w != 0 && w < best) best = w;
            return;
        }
        const auto& src = partial[depth];
        auto& dst = partial[depth + 1];
        for (uint64_t lab = 0; lab < q; ++lab) {
            std::copy(src.begin(), src.end(), dst.begin());
            if (lab != 0) {
                const auto& row = scaled[lab];
                for (size_t j = 0; j < row.size(); ++j)
                    if (row[j]) dst[depth + j] = add[dst[depth + j]][row[j]];
            }
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return best;
}

// Rank test: do the parity-check columns on this support admit a nontrivial
// kernel vector (equivalently, a codeword supported there)?
bool support_carries_codeword(const std::vector<std::vector<uint8_t>>& hcols,
                              const std::vector<uint64_t>& support, const FieldCtx& gf_q,
                              std::vector<std::vector<uint8_t>>& scratch) {
    const size_t w = support.size();
    const size_t rows = hcols.empty() ? 0 : hcols[0].size();
    scratch.assign(w, {});
    size_t rank = 0;
    std::vector<size_t> pivot_row(w, 0);
    for (size_t j = 0; j < w; ++j) {
        scratch[j] = hcols[support[j]];
        auto& col = scratch[j];
        for (size_t t = 0; t < rank; ++t) {
            const uint8_t v = col[pivot_row[t]];
            if (v == 0) continue;
            const uint64_t factor = gf_q.mul_rep(v, gf_q.inv_rep(scratch[t][pivot_row[t]]));
            for (size_t r = 0; r < rows; ++r)
                col[r] = static_cast<uint8_t>(
                    gf_q.sub_rep(col[r], gf_q.mul_rep(factor, scratch[t][r])));
        }
        size_t nz = rows;
        for (size_t r = 0; r < rows; ++r)
            if (col[r] != 0) {
                nz = r;
                break;
            }
        if (nz == rows) return true;  // dependent columns
        std::swap(scratch[j], scratch[rank]);
        pivot_row[rank] = nz;
        ++rank;
    }
    return false;
}

}  // namespace

DistanceResult exact_distance(const CodeSpec& spec, const Poly& gen, const FieldCtx& gf_q,
                              SearchBudget budget) {
    const uint64_t n = spec.params.n;
    const uint64_t q = spec.params.q;
    if (gf_q.size() != q)
        throw std::invalid_argument("exact_distance: wrong coefficient field");
    if (gen.is_zero() || gen.degree() > static_cast<int64_t>(n))
        throw std::invalid_argument("exact_distance: bad generator");
    if (q > 255) throw std::domain_error("exact_distance: q <= 255 only");
    const uint64_t k = n - static_cast<uint64_t>(gen.degree());
    DistanceResult res;
    res.lower = bch_lower(spec);
    if (k == 0) {
        res.note = "zero code";
        return res;
    }

    bool messages_fit = true;
    uint64_t qk = 1;
    for (uint64_t i = 0; i < k && messages_fit; ++i) {
        if (qk > budget.max_messages / q) messages_fit = false;
        else qk *= q;
    }
    if (messages_fit) {
        const uint64_t best =
            q == 2 ? min_weight_binary(gen, n, k) : min_weight_generic(gen, gf_q, n, k);
        res.exact = best;
        res.upper = best;
        res.method = DistMethod::ExhaustiveMessages;
        if (best < res.lower)
            throw std::logic_error("search found weight below the BCH bound");
        return res;
    }

    // low-weight support search, colex order, against the parity check
    const Poly h = poly_divrem(gf_q, x_pow_n_minus_1(gf_q, n), gen).first;
    const Poly hrev = reciprocal(gf_q, h);
    const uint64_t rows = n - k;
    std::vector<std::vector<uint8_t>> hcols(n, std::vector<uint8_t>(rows, 0));
    for (uint64_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < hrev.c.size(); ++j)
            hcols[i + j][i] = static_cast<uint8_t>(hrev.c[j]);
    cpp_int spent = 0;
    std::vector<std::vector<uint8_t>> scratch;
    for (uint64_t w = std::max<uint64_t>(res.lower, 1); w <= n; ++w) {
        cpp_int cost = 1;
        for (uint64_t i = 0; i < w; ++i) cost = cost * (n - i) / (i + 1);
        for (uint64_t i = 0; i < w; ++i) cost *= (q - 1);
        if (spent + cost > budget.max_support_candidates) {
            res.note = "support budget exhausted before weight " + std::to_string(w);
            res.lower = std::max(res.lower, w);
            res.method = DistMethod::LowWeightSearch;
            return res;
        }
        spent += cost;
        std::vector<uint64_t> support(w);
        std::iota(support.begin(), support.end(), 0);
        auto next_colex = [&]() {
            for (size_t i = 0; i < w; ++i) {
                const uint64_t limit = i + 1 < w ? support[i + 1] : n;
                if (support[i] + 1 < limit) {
                    ++support[i];
                    for (size_t j = 0; j < i; ++j) support[j] = j;
                    return true;
                }
            }
            return false;
        };
        do {
            if (support_carries_codeword(hcols, support, gf_q, scratch)) {
                res.exact = w;
                res.upper = w;
                res.method = DistMethod::LowWeightSearch;
                return res;
            }
        } while (next_colex());
    }
    res.note = "exhausted all weights";  // unreachable for nonzero codes
    return res;
}

DistanceResult rm_subspace_witness(const CodeSpec& spec, const FieldCtx& big,
                                   const SubfieldEmbedding& emb, const RmSubspaces& h) {
    if (spec.family != Family::LcdB || spec.params.q != 2)
        throw std::invalid_argument("rm witness: spec must be the binary family-B code");
    const uint32_t m = spec.params.m;
    auto check_subspace = [&](const std::vector<uint64_t>& hs, const char* name) {
        std::unordered_set<uint64_t> s(hs.begin(), hs.end());
        if (!s.count(0)) throw std::invalid_argument(std::string(name) + " must contain 0");
        if (s.size() != hs.size())
            throw std::invalid_argument(std::string(name) + " has repeated elements");
        if ((hs.size() & (hs.size() - 1)) != 0)
            throw std::invalid_argument(std::string(name) + " size is not a power of two");
        for (uint64_t a : hs)
            for (uint64_t b : hs)
                if (!s.count(a ^ b))  // char 2: packed addition is xor
                    throw std::invalid_argument(std::string(name) +
                                                " is not closed under addition");
        return s;
    };
    check_subspace(h.h1, "H1");
    const auto s2 = check_subspace(h.h2, "H2");
    check_subspace(h.h3, "H3");
    const auto s4 = check_subspace(h.h4, "H4");
    if (h.h2.size() != h.h1.size() || h.h3.size() != h.h1.size() || h.h4.size() != h.h1.size())
        throw std::invalid_argument("subspaces must share dimension r");
    const uint32_t r = static_cast<uint32_t>(std::countr_zero(h.h1.size()));
    if (r > m / 2) throw std::invalid_argument("need r <= floor(m/2)");
    if (spec.delta != (1ull << r) - 1)
        throw std::invalid_argument("spec delta must equal 2^r - 1");
    for (uint64_t a : h.h1)
        if (a != 0 && s2.count(a))
            throw std::invalid_argument("H1 and H2 intersect beyond 0 at rep " +
                                        std::to_string(a));
    for (uint64_t a : h.h3)
        if (a != 0 && s4.count(a))
            throw std::invalid_argument("H3 and H4 intersect beyond 0 at rep " +
                                        std::to_string(a));
    std::unordered_set<uint64_t> inv_union, target;
    for (uint64_t a : h.h1)
        if (a) inv_union.insert(big.inv_rep(a));
    for (uint64_t a : h.h2)
        if (a) inv_union.insert(big.inv_rep(a));
    for (uint64_t a : h.h3)
        if (a) target.insert(a);
    for (uint64_t a : h.h4)
        if (a) target.insert(a);
    for (uint64_t a : inv_union)
        if (!target.count(a))
            throw std::invalid_argument("inverse-set condition violated at rep " +
                                        std::to_string(a));
    if (inv_union.size() != target.size())
        throw std::invalid_argument("inverse-set condition violated: size mismatch");

    // support of c1 + c2, coordinates indexed by ascending powers of alpha
    std::unordered_map<uint64_t, uint64_t> dlog;
    {
        uint64_t x = 1;
        for (uint64_t i = 0; i < big.order(); ++i) {
            dlog.emplace(x, i);
            x = big.mul_rep(x, big.alpha().rep);
        }
    }
    std::vector<uint64_t> support;
    for (uint64_t a : h.h1)
        if (a) support.push_back(dlog.at(a));
    for (uint64_t a : h.h2)
        if (a) support.push_back(dlog.at(a));
    std::sort(support.begin(), support.end());
    SparseWitness w;
    for (uint64_t e : support) w.terms.emplace_back(e, 1);
    if (w.weight() != 2 * spec.delta) throw std::logic_error("rm witness: unexpected weight");
    if (!verify_witness_by_eval(spec, w, big, emb))
        throw std::logic_error("rm witness failed root verification");
    DistanceResult res;
    res.lower = bch_lower(spec);
    res.exact = 2 * spec.delta;
    res.upper = res.exact;
    res.method = DistMethod::RmWitness;
    res.witness = std::move(w);
    return res;
}

std::optional<RmSubspaces> find_rm_subspaces(const FieldCtx& big) {
    const uint32_t m = big.e();
    if (big.p() != 2 || m > 6 || m < 4) return std::nullopt;
    const uint64_t n = big.order();
    std::vector<std::array<uint64_t, 3>> subs;  // 2-dim subspaces minus zero
    for (uint64_t a = 1; a <= n; ++a)
        for (uint64_t b = a + 1; b <= n; ++b) {
            const uint64_t c = a ^ b;
            if (c > b) subs.push_back({a, b, c});
        }
    auto disjoint = [](const std::array<uint64_t, 3>& x, const std::array<uint64_t, 3>& y) {
        for (uint64_t u : x)
            for (uint64_t v : y)
                if (u == v) return false;
        return true;
    };
    for (size_t i = 0; i < subs.size(); ++i) {
        for (size_t j = i + 1; j < subs.size(); ++j) {
            if (!disjoint(subs[i], subs[j])) continue;
            std::unordered_set<uint64_t> inv;
            for (uint64_t v : subs[i]) inv.insert(big.inv_rep(v));
            for (uint64_t v : subs[j]) inv.insert(big.inv_rep(v));
            for (const auto& s3 : subs) {
                if (!inv.count(s3[0]) || !inv.count(s3[1]) || !inv.count(s3[2])) continue;
                std::array<uint64_t, 3> rest{};
                size_t idx = 0;
                bool overflow = false;
                for (uint64_t v : inv)
                    if (v != s3[0] && v != s3[1] && v != s3[2]) {
                        if (idx == 3) {
                            overflow = true;
                            break;
                        }
                        rest[idx++] = v;
                    }
                if (overflow || idx != 3) continue;
                std::sort(rest.begin(), rest.end());
                if ((rest[0] ^ rest[1]) != rest[2]) continue;
                RmSubspaces out;
                out.h1 = {0, subs[i][0], subs[i][1], subs[i][2]};
                out.h2 = {0, subs[j][0], subs[j][1], subs[j][2]};
                out.h3 = {0, s3[0], s3[1], s3[2]};
                out.h4 = {0, rest[0], rest[1], rest[2]};
                return out;
            }
        }
    }
    return std::nullopt;
}

bool verify_witness_by_eval(const CodeSpec& spec, const SparseWitness& w,
                            const FieldCtx& big, const SubfieldEmbedding& emb) {
    if (big.size() != spec.params.n + 1 || emb.q != spec.params.q)
        throw std::invalid_argument("verify_witness_by_eval: field mismatch");
    const uint64_t n = spec.params.n;
    const DefiningSet t = defining_set(spec);
    const uint64_t beta = big.alpha().rep;
    for (uint64_t e : t.exponents) {
        uint64_t acc = 0;
        for (auto& [exp, coef] : w.terms) {
            if (coef == 0) continue;
            const uint64_t point = big.pow_rep(beta, mulmod(e, exp, n));
            acc = big.add_rep(acc, big.mul_rep(emb.embed(coef), point));
        }
        if (acc != 0) return false;
    }
    return true;
}

DistanceResult auto_distance(const CodeSpec& spec, const FieldCtx* big,
                             const SubfieldEmbedding* emb, SearchBudget budget) {
    DistanceResult res;
    res.lower = bch_lower(spec);
    res.method = DistMethod::Bch;
    if (has_divisibility_witness(spec)) {
        DistanceResult w = witness_delta_divides(spec);
        if (big && emb && spec.params.n <= kMaterializeLimit &&
            !verify_witness_by_eval(spec, *w.witness, *big, *emb))
            throw std::logic_error("divides-witness failed root verification");
        return w;
    }
    const uint64_t k = dimension_constructive(spec);
    if (k > 0 && res.lower % 2 == 0 &&
        sphere_packing_implies_le(spec.params.n, k, spec.params.q, res.lower / 2)) {
        res.exact = res.lower;
        res.upper = res.lower;
        res.method = DistMethod::SpherePacking;
        return res;
    }
    if (big && emb && can_materialize(spec)) {
        if (auto gen = generator_poly(spec, *big, *emb))
            return exact_distance(spec, *gen, *emb->sub, budget);
    }
    res.note = "bounds only";
    return res;
}

}  // namespace lcdbch
