// Command-line front door: cosets tables, code construction, theorem
// verification sweeps, machine-readable example tables and distance queries.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcdbch/oracle.hpp"
#include "lcdbch/paper_examples.hpp"
#include "lcdbch/report.hpp"

using namespace lcdbch;
using nlohmann::json;

namespace {

struct Range {
    uint64_t lo = 0, hi = 0;
};

// "a:b" or a single value; an inverted range is a legal empty range.
Range parse_range(const std::string& s) {
    Range r;
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        r.lo = r.hi = std::stoull(s);
        return r;
    }
    r.lo = std::stoull(s.substr(0, colon));
    r.hi = std::stoull(s.substr(colon + 1));
    return r;
}

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

// Resolves a family name plus one of (--delta, --u, --t, --designed) into a spec.
CodeSpec resolve_spec(const std::string& family, uint64_t q, uint32_t m, uint64_t delta,
                      uint64_t u, uint64_t t, uint64_t designed, uint64_t b) {
    const CosetParams params = CosetParams::make(q, m);
    const uint64_t qmb = ipow_checked(q, params.m_half);
    std::string fam = family;
    if (fam == "lcd-a") fam = q % 2 == 1 ? "lcd-a-even-n" : "lcd-a-odd-n";
    if (fam == "melas") fam = "melas-evenlike";
    const auto f = family_from_name(fam);
    if (!f) throw CLI::ValidationError("--family", "unknown family " + family);
    uint64_t d = delta;
    if (u != 0) {
        switch (*f) {
            case Family::Narrow:
            case Family::Generic:
            case Family::LcdB:
            case Family::LcdBTilde:
            case Family::LcdAEvenN: d = u * qmb + 1; break;
            case Family::LcdAOddN: d = u * qmb / 2 + 1; break;
            case Family::MelasEvenlike: d = 2; break;
        }
    } else if (t != 0) {
        const uint64_t qt = ipow_checked(q, static_cast<uint32_t>(t));
        if (*f == Family::LcdAEvenN) d = (qt - 1) / 2;
        else if (*f == Family::LcdAOddN) d = qt / 2;
        else throw CLI::ValidationError("--t", "designed q^t-1 applies to lcd-a only");
    } else if (designed != 0) {
        switch (*f) {
            case Family::Narrow:
            case Family::Generic: d = designed; break;
            case Family::LcdAEvenN:
                if (designed % 2 != 0)
                    throw CLI::ValidationError("--designed", "even n: designed is 2*delta");
                d = designed / 2;
                break;
            case Family::LcdAOddN:
                if (designed % 2 != 1)
                    throw CLI::ValidationError("--designed", "odd n: designed is 2*delta-1");
                d = (designed + 1) / 2;
                break;
            case Family::LcdB:
                if (designed % 2 != 0)
                    throw CLI::ValidationError("--designed", "family B designed is 2*delta");
                d = designed / 2;
                break;
            case Family::LcdBTilde: d = designed; break;
            case Family::MelasEvenlike: d = 2; break;
        }
    }
    if (*f == Family::MelasEvenlike) d = 2;
    if (d == 0) throw CLI::ValidationError("--delta", "one of --delta/--u/--t/--designed required");
    return make_spec(*f, params, d, *f == Family::Generic ? std::optional<uint64_t>(b)
                                                          : std::nullopt);
}

void emit_reports(const std::vector<CodeReport>& reports, const std::string& format,
                  std::ostream& os) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        os << (reports.size() == 1 ? report_to_json(reports[0]).dump(2) : arr.dump(2))
           << "\n";
    } else if (format == "csv") {
        os << report_csv_header() << "\r\n";
        for (const auto& r : reports) os << report_csv_row(r) << "\r\n";
    } else {
        for (const auto& r : reports) {
            os << family_name(r.spec.family) << " q=" << r.spec.params.q
               << " m=" << r.spec.params.m << " delta=" << r.spec.delta
               << " b=" << r.spec.b << ": [" << r.n << ", " << r.k;
            if (r.distance.exact) os << ", " << *r.distance.exact;
            else os << ", >=" << r.distance.lower;
            os << "]" << (r.lcd ? " lcd" : "")
               << " designed=" << r.designed << " bch>=" << r.bch;
            if (r.prediction && r.prediction->covered()) {
                os << " predicted_k=";
                if (r.prediction->kind == PredKind::Exact) os << r.prediction->k;
                else os << r.prediction->k_lower << ".." << r.prediction->k_upper;
                os << " (" << r.prediction->source << ")";
            }
            os << "\n";
        }
    }
}

int cmd_cosets(uint64_t q, uint32_t m, const std::string& range_str, uint64_t u,
               const std::string& format, const std::string& out) {
    const CosetParams params = CosetParams::make(q, m);
    Range range = parse_range(range_str.empty() ? "1:" + std::to_string(params.n - 1)
                                                : range_str);
    range.hi = std::min(range.hi, params.n - 1);
    const bool empty_range = range.lo > range.hi;
    const uint64_t except_cap = (u ? u : q - 1) * ipow_checked(q, params.m_half);
    std::ofstream file;
    std::ostream& os = open_sink(file, out);
    if (format == "csv") os << "s,leader,size,is_leader,q_divides,in_exception_range\r\n";
    json arr = json::array();
    for (uint64_t s = range.lo; !empty_range && s <= range.hi; ++s) {
        const Coset c = coset(params, s);
        const bool is_leader = c.leader == s;
        const bool qdiv = s % q == 0;
        const bool exception = !is_leader && !qdiv && s >= 1 && s <= except_cap;
        if (format == "json") {
            arr.push_back({{"s", s},
                           {"leader", c.leader},
                           {"size", c.size()},
                           {"is_leader", is_leader},
                           {"q_divides", qdiv},
                           {"in_exception_range", exception}});
        } else if (format == "csv") {
            os << s << ',' << c.leader << ',' << c.size() << ',' << is_leader << ','
               << qdiv << ',' << exception << "\r\n";
        } else {
            os << "s=" << s << " leader=" << c.leader << " size=" << c.size()
               << (is_leader ? " leader" : "") << (exception ? " exception" : "") << "\n";
        }
    }
    if (format == "json") os << arr.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LCD BCH code construction and verification"};
    app.require_subcommand(1);

    // ---- cosets ----
    auto* sc_cosets = app.add_subcommand("cosets", "q-cyclotomic coset table");
    uint64_t q = 2;
    uint32_t m = 4;
    std::string range_str, format = "text", out;
    uint64_t u_flag = 0;
    sc_cosets->add_option("--q", q, "field size (prime power)")->required();
    sc_cosets->add_option("--m", m, "extension degree")->required();
    sc_cosets->add_option("--range", range_str, "s range a:b (default all)");
    sc_cosets->add_option("--u", u_flag, "u for the exception-range column");
    sc_cosets->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    sc_cosets->add_option("--out", out, "output path (default stdout)");

    // ---- construct ----
    auto* sc_con = app.add_subcommand("construct", "construct one code and report it");
    std::string family, distance_mode = "none";
    uint64_t delta = 0, u = 0, tpar = 0, designed = 0, b = 1;
    bool with_gen = false, check = false;
    uint64_t max_messages = 1ull << 24, max_supports = 1ull << 26;
    sc_con->add_option("--family", family,
                       "narrow|generic|lcd-a|lcd-b|lcd-b-tilde|melas")->required();
    sc_con->add_option("--q", q)->required();
    sc_con->add_option("--m", m)->required();
    sc_con->add_option("--delta", delta, "family delta parameter");
    sc_con->add_option("--u", u, "u parameter (delta = u q^ceil(m/2) + 1 style)");
    sc_con->add_option("--t", tpar, "designed distance q^t - 1 (lcd-a)");
    sc_con->add_option("--designed", designed, "designed distance");
    sc_con->add_option("--b", b, "first exponent (generic family)");
    sc_con->add_option("--distance", distance_mode)
        ->check(CLI::IsMember({"auto", "none", "witness", "search"}));
    sc_con->add_flag("--with-generator", with_gen, "materialize the generator polynomial");
    sc_con->add_flag("--check", check, "exit nonzero if formula and constructive k differ");
    sc_con->add_option("--max-messages", max_messages);
    sc_con->add_option("--max-supports", max_supports);
    sc_con->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    sc_con->add_option("--out", out);

    // ---- verify ----
    auto* sc_ver = app.add_subcommand("verify", "run the master dimension oracle");
    OracleLimits lim;
    std::string theorem, m_range_str;
    uint64_t only_q = 0;
    unsigned threads = default_thread_count();
    bool no_run_bounds = false;
    sc_ver->add_option("--qm-max", lim.qm_max, "q^m ceiling for the full sweep");
    sc_ver->add_option("--q2-m-max", lim.q2_m_max, "m ceiling for the q=2 extension");
    sc_ver->add_option("--run-qm-max", lim.run_qm_max, "q^m ceiling for run-count bounds");
    sc_ver->add_flag("--no-run-bounds", no_run_bounds, "skip the run-count bounds sweep");
    sc_ver->add_option("--theorem", theorem, "only theorems whose tag contains this");
    sc_ver->add_option("--q", only_q, "restrict to one q");
    sc_ver->add_option("--m", m_range_str, "restrict m to a:b");
    sc_ver->add_option("--threads", threads, "worker count (default LCDBCH_THREADS)");

    // ---- table ----
    auto* sc_tab = app.add_subcommand("table", "emit parameter tables");
    bool preset_examples = false;
    std::string tab_family;
    std::string u_range_str, t_range_str, delta_range_str;
    sc_tab->add_flag("--paper-examples", preset_examples,
                     "the quoted-example golden table");
    sc_tab->add_option("--family", tab_family, "narrow|lcd-a|lcd-b|onesided for sweeps");
    sc_tab->add_option("--q", q);
    sc_tab->add_option("--m", m);
    sc_tab->add_option("--u-range", u_range_str, "a:b");
    sc_tab->add_option("--t-range", t_range_str, "a:b");
    sc_tab->add_option("--delta-range", delta_range_str, "a:b");
    sc_tab->add_option("--distance", distance_mode)
        ->check(CLI::IsMember({"auto", "none", "witness", "search"}));
    sc_tab->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    sc_tab->add_option("--out", out);

    // ---- distance ----
    auto* sc_dist = app.add_subcommand("distance", "bound or determine the minimum distance");
    std::string method = "auto";
    bool rm_search = false;
    sc_dist->add_option("--family", family)->required();
    sc_dist->add_option("--q", q)->required();
    sc_dist->add_option("--m", m)->required();
    sc_dist->add_option("--delta", delta);
    sc_dist->add_option("--u", u);
    sc_dist->add_option("--t", tpar);
    sc_dist->add_option("--designed", designed);
    sc_dist->add_option("--b", b);
    sc_dist->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "witness", "search", "rm"}));
    sc_dist->add_flag("--rm-search", rm_search, "search subspaces for the rm witness");
    sc_dist->add_option("--max-messages", max_messages);
    sc_dist->add_option("--max-supports", max_supports);
    sc_dist->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    sc_dist->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_cosets->parsed())
            return cmd_cosets(q, m, range_str, u_flag, format, out);

        if (sc_con->parsed()) {
            const CodeSpec spec = resolve_spec(family, q, m, delta, u, tpar, designed, b);
            ReportOptions opt;
            opt.with_generator = with_gen;
            opt.budget = {max_messages, max_supports};
            opt.distance = distance_mode == "auto"      ? DistanceMode::Auto
                           : distance_mode == "witness" ? DistanceMode::Witness
                           : distance_mode == "search"  ? DistanceMode::Search
                                                        : DistanceMode::None;
            const CodeReport r = build_report(spec, opt);
            std::ofstream file;
            emit_reports({r}, format, open_sink(file, out));
            if (check && r.prediction && r.prediction->kind == PredKind::Exact &&
                r.prediction->k != r.k) {
                std::cerr << "MISMATCH: formula k=" << r.prediction->k
                          << " constructive k=" << r.k << "\n";
                return 2;
            }
            if (check && r.prediction && r.prediction->kind == PredKind::Bounds &&
                !(r.prediction->k_lower <= r.k && r.k <= r.prediction->k_upper)) {
                std::cerr << "MISMATCH: bounds [" << r.prediction->k_lower << ","
                          << r.prediction->k_upper << "] constructive k=" << r.k << "\n";
                return 2;
            }
            return 0;
        }

        if (sc_ver->parsed()) {
            lim.include_run_bounds = !no_run_bounds;
            lim.only_theorem = theorem;
            if (only_q) lim.only_q = only_q;
            if (!m_range_str.empty()) {
                const Range r = parse_range(m_range_str);
                lim.m_range = {static_cast<uint32_t>(r.lo), static_cast<uint32_t>(r.hi)};
            }
            const OracleSummary sum = run_master_oracle(lim, threads);
            std::cout << "checked " << sum.checked << " tuples, skipped (not covered) "
                      << sum.skipped << ", mismatches " << sum.mismatches.size() << "\n";
            for (const auto& msg : sum.mismatches) std::cout << "  MISMATCH " << msg << "\n";
            return sum.mismatches.empty() ? 0 : 1;
        }

        if (sc_tab->parsed()) {
            ReportOptions opt;
            opt.distance = distance_mode == "auto"      ? DistanceMode::Auto
                           : distance_mode == "witness" ? DistanceMode::Witness
                           : distance_mode == "search"  ? DistanceMode::Search
                                                        : DistanceMode::None;
            std::vector<CodeReport> reports;
            std::vector<int64_t> paper_d;
            if (preset_examples) {
                for (const auto& ex : paper_examples()) {
                    reports.push_back(build_report(spec_from_example(ex), opt));
                    paper_d.push_back(ex.paper_d);
                }
            } else {
                auto sweep_one = [&](uint64_t param, char kind) {
                    uint64_t uu = 0, tt = 0, dd = 0;
                    if (kind == 'u') uu = param;
                    if (kind == 't') tt = param;
                    if (kind == 'd') dd = param;
                    std::string fam = tab_family == "onesided" ? "generic" : tab_family;
                    uint64_t bb = 1;
                    if (tab_family == "onesided") {
                        const CosetParams p = CosetParams::make(q, m);
                        const uint64_t qmb = ipow_checked(q, p.m_half);
                        dd = q % 2 == 1 ? uu * qmb + 1 : uu * qmb / 2 + 1;
                        uu = 0;
                        bb = q % 2 == 1 ? p.n / 2 + 1 : (p.n + 1) / 2;
                    }
                    reports.push_back(build_report(
                        resolve_spec(fam, q, m, dd, uu, tt, 0, bb), opt));
                    paper_d.push_back(-1);
                };
                if (!u_range_str.empty()) {
                    const Range r = parse_range(u_range_str);
                    for (uint64_t v = r.lo; v <= r.hi; ++v) sweep_one(v, 'u');
                }
                if (!t_range_str.empty()) {
                    const Range r = parse_range(t_range_str);
                    for (uint64_t v = r.lo; v <= r.hi; ++v) sweep_one(v, 't');
                }
                if (!delta_range_str.empty()) {
                    const Range r = parse_range(delta_range_str);
                    for (uint64_t v = r.lo; v <= r.hi; ++v) sweep_one(v, 'd');
                }
            }
            std::ofstream file;
            std::ostream& os = open_sink(file, out);
            if (format == "json") {
                json arr = json::array();
                for (size_t i = 0; i < reports.size(); ++i) {
                    json j = report_to_json(reports[i]);
                    if (paper_d[i] >= 0) j["paper_d"] = paper_d[i];
                    arr.push_back(j);
                }
                os << arr.dump(2) << "\n";
            } else {
                os << report_csv_header() << ",paper_d\r\n";
                for (size_t i = 0; i < reports.size(); ++i) {
                    os << report_csv_row(reports[i]) << ',';
                    if (paper_d[i] >= 0) os << paper_d[i];
                    os << "\r\n";
                }
            }
            return 0;
        }

        if (sc_dist->parsed()) {
            const CodeSpec spec = resolve_spec(family, q, m, delta, u, tpar, designed, b);
            ReportOptions opt;
            opt.budget = {max_messages, max_supports};
            if (method == "rm") {
                uint64_t p = 0;
                uint32_t pk = 0;
                is_prime_power(spec.params.q, &p, &pk);
                const FieldCtx big = FieldCtx::make(p, pk * spec.params.m);
                const FieldCtx sub = FieldCtx::make(p, pk);
                const SubfieldEmbedding emb = subfield_embedding(big, sub);
                if (!rm_search)
                    throw CLI::ValidationError("--method",
                                               "rm requires --rm-search in the CLI");
                const auto subs = find_rm_subspaces(big);
                if (!subs) {
                    std::cerr << "no suitable subspaces found (m <= 6, r = 2 only)\n";
                    return 3;
                }
                const DistanceResult res = rm_subspace_witness(spec, big, emb, *subs);
                std::cout << "exact d = " << *res.exact << " via "
                          << dist_method_name(res.method) << "\n";
                return 0;
            }
            opt.distance = method == "auto"      ? DistanceMode::Auto
                           : method == "witness" ? DistanceMode::Witness
                                                 : DistanceMode::Search;
            const CodeReport r = build_report(spec, opt);
            std::ofstream file;
            emit_reports({r}, format, open_sink(file, out));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
