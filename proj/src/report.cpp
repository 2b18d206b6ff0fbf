#include "lcdbch/report.hpp"

#include <sstream>

namespace lcdbch {

using nlohmann::json;

CodeReport build_report(const CodeSpec& spec, const ReportOptions& opt) {
    CodeReport r;
    r.spec = spec;
    r.n = spec.params.n;
    r.k = dimension_constructive(spec);
    r.designed = designed_distance(spec);
    r.bch = bch_lower(spec);
    r.lcd = is_lcd(spec);
    r.distance.lower = r.bch;
    r.distance.method = DistMethod::Bch;
    if (opt.with_prediction) r.prediction = predict(spec);

    const bool needs_field =
        can_materialize(spec) &&
        (opt.with_generator || opt.distance == DistanceMode::Auto ||
         opt.distance == DistanceMode::Search);
    std::optional<FieldCtx> big, sub;
    std::optional<SubfieldEmbedding> emb;
    if (needs_field) {
        uint64_t p = 0;
        uint32_t pk = 0;
        is_prime_power(spec.params.q, &p, &pk);
        big.emplace(FieldCtx::make(p, pk * spec.params.m));
        sub.emplace(FieldCtx::make(p, pk));
        emb.emplace(subfield_embedding(*big, *sub));
        if (opt.with_generator) {
            r.generator = generator_poly(spec, *big, *emb);
            r.field = field_to_json(*big);
        }
    }

    switch (opt.distance) {
        case DistanceMode::None: break;
        case DistanceMode::Auto:
            r.distance = auto_distance(spec, big ? &*big : nullptr,
                                       emb ? &*emb : nullptr, opt.budget);
            break;
        case DistanceMode::Witness:
            r.distance = witness_delta_divides(spec);
            break;
        case DistanceMode::Search: {
            if (!big) throw std::domain_error("search: length above materialization ceiling");
            auto gen = r.generator ? r.generator : generator_poly(spec, *big, *emb);
            r.distance = exact_distance(spec, *gen, *sub, opt.budget);
            break;
        }
    }
    return r;
}

json field_to_json(const FieldCtx& f) {
    return json{{"p", f.p()},
                {"e", f.e()},
                {"modulus", f.modulus()},
                {"alpha", f.unpack(f.alpha().rep)}};
}

json report_to_json(const CodeReport& r) {
    json j;
    j["family"] = family_name(r.spec.family);
    j["q"] = r.spec.params.q;
    j["m"] = r.spec.params.m;
    j["n"] = r.n;
    j["delta"] = r.spec.delta;
    j["b"] = r.spec.b;
    j["k"] = r.k;
    j["lcd"] = r.lcd;
    j["designed_distance"] = r.designed;
    j["bch_lower"] = r.bch;
    json dist;
    if (r.distance.exact) {
        dist["exact"] = *r.distance.exact;
    } else {
        dist["lower"] = r.distance.lower;
        if (r.distance.upper) dist["upper"] = *r.distance.upper;
    }
    dist["method"] = dist_method_name(r.distance.method);
    if (!r.distance.note.empty()) dist["note"] = r.distance.note;
    j["distance"] = dist;
    if (r.generator) j["generator"] = r.generator->c;
    if (r.field) j["field"] = *r.field;
    json witnesses = json::array();
    if (r.distance.witness) {
        json terms = json::object();
        for (auto& [e, c] : r.distance.witness->terms)
            terms[std::to_string(e)] = c;
        witnesses.push_back({{"method", dist_method_name(r.distance.method)},
                             {"weight", r.distance.witness->weight()},
                             {"terms", terms}});
    }
    j["witnesses"] = witnesses;
    if (r.prediction) {
        json p;
        switch (r.prediction->kind) {
            case PredKind::Exact:
                p["kind"] = "exact";
                p["k"] = r.prediction->k;
                break;
            case PredKind::Bounds:
                p["kind"] = "bounds";
                p["k_lower"] = r.prediction->k_lower;
                p["k_upper"] = r.prediction->k_upper;
                break;
            case PredKind::NotCovered:
                p["kind"] = "not-covered";
                break;
        }
        if (r.prediction->covered()) {
            p["source_theorem"] = r.prediction->source;
            if (r.prediction->d_exact) p["d_exact"] = *r.prediction->d_exact;
        }
        p["domain"] = r.prediction->domain;
        j["prediction"] = p;
    }
    return j;
}

std::string report_csv_header() {
    return "family,q,m,n,delta,b,k,lcd,designed_distance,bch_lower,d_exact,d_lower,d_upper,"
           "distance_method,prediction_kind,prediction_k,prediction_source";
}

std::string report_csv_row(const CodeReport& r) {
    std::ostringstream os;
    os << family_name(r.spec.family) << ',' << r.spec.params.q << ',' << r.spec.params.m
       << ',' << r.n << ',' << r.spec.delta << ',' << r.spec.b << ',' << r.k << ','
       << (r.lcd ? "true" : "false") << ',' << r.designed << ',' << r.bch << ',';
    if (r.distance.exact) os << *r.distance.exact;
    os << ',' << r.distance.lower << ',';
    if (r.distance.upper) os << *r.distance.upper;
    os << ',' << dist_method_name(r.distance.method) << ',';
    if (!r.prediction) {
        os << ",,";
    } else {
        switch (r.prediction->kind) {
            case PredKind::Exact:
                os << "exact," << r.prediction->k << ',' << r.prediction->source;
                break;
            case PredKind::Bounds:
                os << "bounds," << r.prediction->k_lower << '-' << r.prediction->k_upper
                   << ',' << r.prediction->source;
                break;
            case PredKind::NotCovered: os << "not-covered,,"; break;
        }
    }
    return os.str();
}

}  // namespace lcdbch
