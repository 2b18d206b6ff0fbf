#include "lcdbch/field.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "lcdbch/cosets.hpp"  // ipow_checked, mulmod

namespace lcdbch {

namespace {

std::atomic<uint32_t> g_next_ctx_id{1};

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::vector<uint64_t> prime_factors(uint64_t x) {
    std::vector<uint64_t> f;
    for (uint64_t d = 2; d * d <= x; d += (d == 2 ? 1 : 2)) {
        if (x % d == 0) {
            f.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) f.push_back(x);
    return f;
}

// Dense polynomials over GF(p) as digit vectors (low first), used only while
// bootstrapping a context (irreducibility / primitivity tests).
using PVec = std::vector<uint64_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    const size_t e = f.size() - 1;
    for (size_t d = c.size(); d-- > e;) {
        const uint64_t top = c[d];
        if (top == 0) continue;
        c[d] = 0;
        for (size_t j = 0; j < e; ++j)
            c[d - e + j] = (c[d - e + j] + (p - f[j] % p) * top) % p;
    }
    c.resize(std::min(c.size(), e));
    ptrim(c);
    return c;
}

PVec ppowmod(PVec base, uint64_t k, const PVec& f, uint64_t p) {
    PVec r{1};
    while (k) {
        if (k & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        k >>= 1;
    }
    return r;
}

PVec pgcd(PVec a, PVec b, uint64_t p) {
    auto inv_mod_p = [&](uint64_t x) {
        uint64_t r = 1, e = p - 2;  // p prime
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b
        const uint64_t lead_inv = inv_mod_p(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            const uint64_t coef = a.back() * lead_inv % p;
            const size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = (a[shift + j] + (p - coef * b[j] % p)) % p;
            ptrim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const PVec& f, uint64_t p, uint32_t e) {
    // x^(p^e) == x mod f, and gcd(x^(p^(e/r)) - x, f) = 1 for prime r | e.
    PVec x{0, 1};
    PVec frob = x;
    for (uint32_t i = 0; i < e; ++i) frob = ppowmod(frob, p, f, p);
    if (frob != x) return false;
    for (uint64_t r : prime_factors(e)) {
        PVec g = x;
        for (uint32_t i = 0; i < e / r; ++i) g = ppowmod(g, p, f, p);
        // g - x
        PVec diff = g;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        ptrim(diff);
        PVec d = pgcd(diff, f, p);
        if (d.size() != 1) return false;
    }
    return true;
}

bool rep_has_full_order(const PVec& a, const PVec& f, uint64_t p,
                        uint64_t order, const std::vector<uint64_t>& factors) {
    for (uint64_t r : factors) {
        PVec t = ppowmod(a, order / r, f, p);
        if (t.size() == 1 && t[0] == 1) return false;
    }
    return true;
}

uint64_t smallest_primitive_root(uint64_t p, const std::vector<uint64_t>& factors) {
    for (uint64_t g = 1; g < p; ++g) {
        bool ok = true;
        for (uint64_t r : factors) {
            uint64_t t = 1, b = g, k = (p - 1) / r;
            while (k) {
                if (k & 1) t = t * b % p;
                b = b * b % p;
                k >>= 1;
            }
            if (t == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");  // unreachable for prime p
}

}  // namespace

FieldElem FieldCtx::from_rep(uint64_t rep) const {
    if (rep >= size_) throw std::invalid_argument("from_rep: rep out of range");
    return {rep, id_};
}

void FieldCtx::check(FieldElem a) const {
    if (a.ctx_id != id_)
        throw std::invalid_argument("field element bound to a different context");
    if (a.rep >= size_) throw std::invalid_argument("field element rep out of range");
}

std::vector<uint32_t> FieldCtx::unpack(uint64_t rep) const {
    std::vector<uint32_t> d(e_);
    for (uint32_t i = 0; i < e_; ++i) {
        d[i] = static_cast<uint32_t>(rep % p_);
        rep /= p_;
    }
    return d;
}

uint64_t FieldCtx::pack(const std::vector<uint32_t>& digits) const {
    uint64_t rep = 0;
    for (size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= p_) throw std::invalid_argument("pack: digit out of range");
        rep = rep * p_ + digits[i];
    }
    return rep;
}

uint64_t FieldCtx::add_rep(uint64_t a, uint64_t b) const {
    if (p_ == 2) return a ^ b;
    uint64_t r = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        const uint64_t s = (a % p_ + b % p_) % p_;
        r += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

uint64_t FieldCtx::neg_rep(uint64_t a) const {
    if (p_ == 2) return a;
    uint64_t r = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        const uint64_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
        a /= p_;
    }
    return r;
}

uint64_t FieldCtx::sub_rep(uint64_t a, uint64_t b) const { return add_rep(a, neg_rep(b)); }

uint64_t FieldCtx::mul_rep(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
        return exp_[static_cast<uint64_t>(log_[a]) + log_[b]];
    }
    PVec pa, pb;
    for (uint64_t x = a; x; x /= p_) pa.push_back(x % p_);
    for (uint64_t x = b; x; x /= p_) pb.push_back(x % p_);
    PVec f(modulus_.begin(), modulus_.end());
    PVec c = pmulmod(pa, pb, f, p_);
    uint64_t rep = 0;
    for (size_t i = c.size(); i-- > 0;) rep = rep * p_ + c[i];
    return rep;
}

uint64_t FieldCtx::inv_rep(uint64_t a) const {
    if (a == 0) throw std::domain_error("inv: division by zero in GF(p^e)");
    if (!log_.empty()) return exp_[order() - log_[a]];
    return pow_rep(a, order() - 1);
}

uint64_t FieldCtx::pow_rep(uint64_t a, uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    if (!log_.empty()) {
        const uint64_t l = mulmod(log_[a], k % order(), order());
        return exp_[l];
    }
    uint64_t r = 1;
    while (k) {
        if (k & 1) r = mul_rep(r, a);
        a = mul_rep(a, a);
        k >>= 1;
    }
    return r;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    return {add_rep(a.rep, b.rep), id_};
}
FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    return {sub_rep(a.rep, b.rep), id_};
}
FieldElem FieldCtx::neg(FieldElem a) const {
    check(a);
    return {neg_rep(a.rep), id_};
}
FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    return {mul_rep(a.rep, b.rep), id_};
}
FieldElem FieldCtx::inv(FieldElem a) const {
    check(a);
    return {inv_rep(a.rep), id_};
}
FieldElem FieldCtx::pow(FieldElem a, uint64_t k) const {
    check(a);
    return {pow_rep(a.rep, k), id_};
}

uint64_t FieldCtx::element_order(uint64_t rep) const {
    if (rep == 0) throw std::domain_error("element_order: zero element");
    uint64_t ord = order();
    for (uint64_t r : order_factors_) {
        while (ord % r == 0 && pow_rep(rep, ord / r) == 1) ord /= r;
    }
    return ord;
}

void FieldCtx::init_tables() {
    if (size_ > (1ull << 16)) return;
    exp_.assign(2 * order(), 0);
    log_.assign(size_, 0);
    uint64_t x = 1;
    for (uint64_t i = 0; i < order(); ++i) {
        exp_[i] = x;
        log_[x] = static_cast<uint32_t>(i);
        // table-free multiply by alpha while the tables are being built
        PVec pa, pb;
        for (uint64_t t = x; t; t /= p_) pa.push_back(t % p_);
        for (uint64_t t = alpha_rep_; t; t /= p_) pb.push_back(t % p_);
        PVec f(modulus_.begin(), modulus_.end());
        PVec c = pmulmod(pa, pb, f, p_);
        uint64_t rep = 0;
        for (size_t i2 = c.size(); i2-- > 0;) rep = rep * p_ + c[i2];
        x = rep;
    }
    if (x != 1) throw std::logic_error("alpha order mismatch while building tables");
    for (uint64_t i = 0; i < order(); ++i) exp_[order() + i] = exp_[i];
}

FieldCtx FieldCtx::make(uint64_t p, uint32_t e, uint64_t seed) {
    uint64_t pp;
    uint32_t pk;
    if (!is_prime_power(p, &pp, &pk) || pk != 1)
        throw std::invalid_argument("make_field: p must be prime");
    if (e < 1) throw std::invalid_argument("make_field: e must be >= 1");
    const uint64_t size = ipow_checked(p, e);
    if (size > (1ull << 32)) throw std::domain_error("make_field: p^e exceeds 2^32");

    FieldCtx ctx;
    ctx.p_ = p;
    ctx.e_ = e;
    ctx.size_ = size;
    ctx.id_ = g_next_ctx_id.fetch_add(1);
    ctx.order_factors_ = prime_factors(size - 1);
    if (size == 2) ctx.order_factors_.clear();

    if (e == 1) {
        const uint64_t g = p == 2 ? 1 : smallest_primitive_root(p, ctx.order_factors_);
        ctx.modulus_ = {static_cast<uint32_t>((p - g) % p), 1};  // x - g
        ctx.alpha_rep_ = g;
        ctx.init_tables();
        return ctx;
    }

    // Search for a monic modulus with x primitive. Low coefficients are scanned
    // as a packed base-p integer; seeded mode draws them pseudo-randomly.
    uint64_t rng = seed;
    const uint64_t span = ipow_checked(p, e);
    for (uint64_t tries = 0; tries < span * 4; ++tries) {
        uint64_t low = seed == 0 ? tries : splitmix64(rng) % span;
        if (low % p == 0) continue;  // constant term must be nonzero
        PVec f(e + 1, 0);
        f[e] = 1;
        for (uint32_t i = 0; i < e; ++i) {
            f[i] = low % p;
            low /= p;
        }
        if (!is_irreducible(f, p, e)) continue;
        if (!rep_has_full_order(PVec{0, 1}, f, p, size - 1, ctx.order_factors_)) continue;
        ctx.modulus_.assign(f.begin(), f.end());
        ctx.alpha_rep_ = p;  // the class of x
        ctx.init_tables();
        return ctx;
    }
    throw std::runtime_error("make_field: no primitive modulus found");
}

FieldCtx FieldCtx::make_with_modulus(uint64_t p, const std::vector<uint32_t>& modulus) {
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("make_with_modulus: modulus must be monic of degree >= 1");
    const uint32_t e = static_cast<uint32_t>(modulus.size() - 1);
    const uint64_t size = ipow_checked(p, e);
    if (size > (1ull << 32)) throw std::domain_error("make_with_modulus: p^e exceeds 2^32");
    PVec f(modulus.begin(), modulus.end());
    if (e >= 2 && !is_irreducible(f, p, e))
        throw std::invalid_argument("make_with_modulus: modulus is reducible");

    FieldCtx ctx;
    ctx.p_ = p;
    ctx.e_ = e;
    ctx.size_ = size;
    ctx.id_ = g_next_ctx_id.fetch_add(1);
    ctx.modulus_.assign(modulus.begin(), modulus.end());
    ctx.order_factors_ = prime_factors(size - 1);
    if (size == 2) ctx.order_factors_.clear();

    if (e == 1) {
        const uint64_t g = (p - modulus[0] % p) % p;  // root of x - g
        uint64_t alpha = g;
        if (p == 2) alpha = 1;
        else if (g == 0 || !rep_has_full_order(PVec{g}, f, p, size - 1, ctx.order_factors_))
            alpha = smallest_primitive_root(p, ctx.order_factors_);
        ctx.alpha_rep_ = alpha;
        ctx.init_tables();
        return ctx;
    }
    // Prefer alpha = x; otherwise take the smallest primitive rep.
    auto try_alpha = [&](uint64_t cand) {
        PVec a;
        for (uint64_t t = cand; t; t /= p) a.push_back(t % p);
        return rep_has_full_order(a, f, p, size - 1, ctx.order_factors_);
    };
    uint64_t found = 0;
    if (try_alpha(p)) found = p;
    for (uint64_t cand = 2; found == 0 && cand < size; ++cand)
        if (cand != p && try_alpha(cand)) found = cand;
    if (found == 0)
        throw std::invalid_argument("make_with_modulus: no primitive element found");
    ctx.alpha_rep_ = found;
    ctx.init_tables();
    return ctx;
}

uint32_t SubfieldEmbedding::label_of(uint64_t big_rep) const {
    auto it = to_label.find(big_rep);
    if (it == to_label.end())
        throw std::logic_error("subfield embedding: element outside GF(q)");
    return it->second;
}

SubfieldEmbedding subfield_embedding(const FieldCtx& big, const FieldCtx& sub) {
    if (big.p() != sub.p())
        throw std::invalid_argument("subfield_embedding: different characteristics");
    if (big.e() % sub.e() != 0)
        throw std::invalid_argument("subfield_embedding: subfield degree does not divide");
    const uint64_t q = sub.size();
    if (q > (1ull << 12))
        throw std::domain_error("subfield_embedding: q too large to label");

    SubfieldEmbedding emb;
    emb.big = &big;
    emb.sub = &sub;
    emb.q = q;

    if (big.e() == sub.e()) {
        if (big.modulus() != sub.modulus())
            throw std::invalid_argument(
                "subfield_embedding: same degree but different moduli");
        emb.beta0_rep = big.alpha().rep;
        emb.from_label.resize(q);
        for (uint64_t r = 0; r < q; ++r) {
            emb.from_label[r] = r;
            emb.to_label.emplace(r, static_cast<uint32_t>(r));
        }
        return emb;
    }

    emb.beta0_rep = big.pow_rep(big.alpha().rep, big.order() / (q - 1));
    std::vector<uint64_t> sub_elems{0};  // beta0^[0..q-2], plus zero
    uint64_t x = 1;
    for (uint64_t i = 0; i + 1 < q; ++i) {
        sub_elems.push_back(x);
        x = big.mul_rep(x, emb.beta0_rep);
    }
    if (x != 1) throw std::logic_error("subfield generator has wrong order");

    // Pick the image g of beta0 in the standalone GF(q): the smallest-rep
    // generator making i -> (beta0^i -> g^i) additive. Such a g exists because
    // both sides are GF(q).
    for (uint64_t g = 1; g < q; ++g) {
        if (sub.element_order(g) != q - 1) continue;
        std::unordered_map<uint64_t, uint32_t> to_label;
        std::vector<uint64_t> from_label(q, 0);
        to_label.emplace(0, 0);
        uint64_t pw_big = 1, pw_sub = 1;
        for (uint64_t i = 0; i + 1 < q; ++i) {
            to_label.emplace(pw_big, static_cast<uint32_t>(pw_sub));
            from_label[pw_sub] = pw_big;
            pw_big = big.mul_rep(pw_big, emb.beta0_rep);
            pw_sub = sub.mul_rep(pw_sub, g);
        }
        bool additive = true;
        for (size_t i = 0; i < sub_elems.size() && additive; ++i)
            for (size_t j = i; j < sub_elems.size(); ++j) {
                const uint64_t s = big.add_rep(sub_elems[i], sub_elems[j]);
                const uint64_t want =
                    sub.add_rep(to_label.at(sub_elems[i]), to_label.at(sub_elems[j]));
                if (to_label.at(s) != want) {
                    additive = false;
                    break;
                }
            }
        if (additive) {
            emb.to_label = std::move(to_label);
            emb.from_label = std::move(from_label);
            return emb;
        }
    }
    throw std::logic_error("subfield_embedding: no additive labeling found");
}

}  // namespace lcdbch
