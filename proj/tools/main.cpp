#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cokerdist/json_io.hpp"
#include "cokerdist/verification.hpp"
#include "cokerdist/version.hpp"

namespace {

using coker::Code;
using coker::EventSpec;
using coker::EventTerm;
using coker::FieldCtx;
using coker::Int;
using coker::Json;
using coker::Partition;
using coker::PredicateKind;
using coker::Rat;
using coker::RingCtx;

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat r(coker::Int(s.substr(0, slash)), coker::Int(s.substr(slash + 1)));
        r.canonicalize();
        return r;
    }
    auto epos = s.find_first_of("eE");
    std::string mant = (epos == std::string::npos) ? s : s.substr(0, epos);
    long exp10 = (epos == std::string::npos) ? 0 : std::stol(s.substr(epos + 1));
    auto dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    Rat r{Int(digits)};
    while (exp10 > 0) {
        r *= 10;
        --exp10;
    }
    while (exp10 < 0) {
        r /= 10;
        ++exp10;
    }
    r.canonicalize();
    return r;
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) parts.push_back(std::stoi(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    return Partition(parts);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// "d=1,nu=;d=2,nu=1,1" -> [(1, {}), (2, {1,1})]
std::vector<std::pair<int, Partition>> parse_points(const std::string& s) {
    std::vector<std::pair<int, Partition>> out;
    if (s.empty()) return out;
    for (const auto& entry : split(s, ';')) {
        auto dpos = entry.find("d=");
        auto npos = entry.find("nu=");
        if (dpos == std::string::npos || npos == std::string::npos)
            throw std::invalid_argument("point entries look like d=<deg>,nu=<partition>");
        int d = std::stoi(entry.substr(dpos + 2, entry.find(',', dpos) - dpos - 2));
        Partition nu = parse_partition(entry.substr(npos + 3));
        out.emplace_back(d, nu);
    }
    return out;
}

// Polynomial coefficients: "0,1" over the prime subfield, or "[1,0],[1,1]" with one
// bracketed tuple per extension-field coefficient.
std::vector<Code> parse_poly_field(const FieldCtx::Ptr& field, const std::string& s) {
    std::vector<Code> out;
    if (s.find('[') == std::string::npos) {
        for (const auto& tok : split(s, ',')) out.push_back(field->from_int(std::stol(tok)));
        return out;
    }
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '[') {
            auto close = s.find(']', i);
            if (close == std::string::npos) throw std::invalid_argument("unbalanced bracket in polynomial");
            std::vector<Code> coeff;
            for (const auto& tok : split(s.substr(i + 1, close - i - 1), ',')) {
                long v = std::stol(tok);
                coeff.push_back(static_cast<Code>(((v % field->p()) + field->p()) % field->p()));
            }
            while (coeff.size() < field->e()) coeff.push_back(0);
            out.push_back(field->from_coeffs(coeff));
            i = close + 1;
        } else {
            ++i;
        }
    }
    return out;
}

std::vector<Code> parse_poly_ring(const RingCtx::Ptr& ring, const std::string& s) {
    std::vector<Code> out;
    for (const auto& tok : split(s, ',')) out.push_back(ring->from_int(std::stol(tok)));
    return out;
}

struct CtxFlags {
    std::string kind = "fq";
    std::uint32_t p = 2, e = 1, level = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--ctx", kind, "context kind: fq, zp, fqt, gr")->default_val("fq");
        cmd->add_option("--p", p, "residue characteristic")->default_val(2);
        cmd->add_option("--e", e, "residue extension degree")->default_val(1);
        cmd->add_option("--level", level, "quotient level N+1")->default_val(1);
    }

    void build(EventSpec& spec) const {
        if (kind == "fq")
            spec.field = FieldCtx::make(p, e);
        else if (kind == "zp")
            spec.ring = RingCtx::padic(p, level);
        else if (kind == "fqt")
            spec.ring = RingCtx::equal_char(FieldCtx::make(p, e), level);
        else if (kind == "gr")
            spec.ring = RingCtx::galois(p, level, e);
        else
            throw std::invalid_argument("unknown context kind: " + kind);
    }
};

PredicateKind parse_pred(const std::string& s) {
    if (s == "coker-vanishes" || s == "vanishes") return PredicateKind::CokerVanishes;
    if (s == "coker-type-is" || s == "type-is") return PredicateKind::CokerTypeIs;
    if (s == "p-part-is") return PredicateKind::PPartIs;
    if (s == "corank-is") return PredicateKind::CorankIs;
    throw std::invalid_argument("unknown predicate: " + s);
}

EventTerm parse_event(const EventSpec& spec, const std::string& s) {
    EventTerm t;
    std::string poly_str, pred_str = "coker-vanishes", target_str;
    for (const auto& kv : split(s, ';')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("event fields look like key=value");
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "poly")
            poly_str = val;
        else if (key == "pred")
            pred_str = val;
        else if (key == "target")
            target_str = val;
        else
            throw std::invalid_argument("unknown event field: " + key);
    }
    if (poly_str.empty()) throw std::invalid_argument("event needs poly=<coefficients>");
    t.pred = parse_pred(pred_str);
    t.poly = spec.field ? parse_poly_field(spec.field, poly_str) : parse_poly_ring(spec.ring, poly_str);
    if (t.pred == PredicateKind::CokerTypeIs || t.pred == PredicateKind::PPartIs)
        t.target = parse_partition(target_str);
    else if (t.pred == PredicateKind::CorankIs)
        t.corank = target_str.empty() ? 0 : std::stoi(target_str);
    return t;
}

Json config_json(const std::string& command, int argc, char** argv) {
    Json argv_json = Json::array();
    for (int i = 0; i < argc; ++i) argv_json.push_back(std::string(argv[i]));
    return Json{{"command", command}, {"argv", argv_json}, {"version", coker::kVersion}};
}

void emit(const Json& out, const std::string& format, const std::vector<std::pair<std::string, std::string>>& csv_rows) {
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "key,value\n";
        for (const auto& [k, v] : csv_rows) std::cout << k << "," << v << "\n";
    }
}

std::string rat_str(const Rat& r) { return r.get_str(); }

int run(int argc, char** argv) {
    CLI::App app{"exact cokernel statistics of random matrices over finite chain rings and F_q"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format: json or csv")->default_val("json");

    // bn
    auto* bn_cmd = app.add_subcommand("bn", "coefficients b_n(d) with their limit enclosure");
    std::uint64_t bn_q = 2;
    int bn_d = 1, bn_nmax = 10;
    std::string bn_tol = "1/1000000";
    bn_cmd->add_option("--q", bn_q, "residue field size")->required();
    bn_cmd->add_option("--d", bn_d, "point degree")->required();
    bn_cmd->add_option("--n-max", bn_nmax, "largest n")->required();
    bn_cmd->add_option("--tol", bn_tol, "limit enclosure width");

    // prob
    auto* prob_cmd = app.add_subcommand("prob", "evaluate a formula by id");
    std::string prob_id, prob_partition, prob_points, prob_degrees, prob_tol = "1/1000000";
    std::uint64_t prob_q = 2;
    int prob_n = 0, prob_d = 1, prob_l = 0, prob_m = 0, prob_bigN = 1;
    prob_cmd->add_option("--id", prob_id, "formula id")->required();
    prob_cmd->add_option("--q", prob_q, "residue field size");
    prob_cmd->add_option("--n", prob_n, "matrix dimension");
    prob_cmd->add_option("--d", prob_d, "point degree");
    prob_cmd->add_option("--l", prob_l, "corank");
    prob_cmd->add_option("--m", prob_m, "partition size cutoff");
    prob_cmd->add_option("--N", prob_bigN, "truncation exponent N");
    prob_cmd->add_option("--partition", prob_partition, "decreasing parts, empty for the zero module");
    prob_cmd->add_option("--points", prob_points, "semicolon list: d=<deg>,nu=<partition>");
    prob_cmd->add_option("--degrees", prob_degrees, "comma list of vanishing-point degrees");
    prob_cmd->add_option("--tol", prob_tol, "interval width for limit formulas");

    // enumerate / simulate
    CtxFlags enum_ctx, sim_ctx;
    auto* enum_cmd = app.add_subcommand("enumerate", "exact exhaustive event counting");
    int enum_n = 1;
    std::uint64_t enum_guard = (1u << 24);
    int enum_workers = 1;
    std::vector<std::string> enum_events;
    enum_ctx.attach(enum_cmd);
    enum_cmd->add_option("--n", enum_n, "matrix dimension")->required();
    enum_cmd->add_option("--event", enum_events, "poly=..;pred=..;target=.. (repeatable)")->required();
    enum_cmd->add_option("--guard", enum_guard, "largest allowed search space");
    enum_cmd->add_option("--workers", enum_workers, "parallel workers (results unchanged)");

    auto* sim_cmd = app.add_subcommand("simulate", "seeded Monte-Carlo event estimation");
    int sim_n = 1;
    std::uint64_t sim_samples = 100000, sim_seed = 7;
    int sim_workers = 1;
    std::uint32_t sim_chunk = 4096;
    std::vector<std::string> sim_events;
    sim_ctx.attach(sim_cmd);
    sim_cmd->add_option("--n", sim_n, "matrix dimension")->required();
    sim_cmd->add_option("--event", sim_events, "poly=..;pred=..;target=.. (repeatable)")->required();
    sim_cmd->add_option("--samples", sim_samples, "sample count");
    sim_cmd->add_option("--seed", sim_seed, "stream seed");
    sim_cmd->add_option("--chunk-size", sim_chunk, "samples per chunk");
    sim_cmd->add_option("--workers", sim_workers, "parallel workers (results unchanged)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification battery");
    std::string verify_suite = "all";
    coker::VerifyOptions vopts;
    verify_cmd->add_option("--suite", verify_suite, "suite id, comma list, or 'all'");
    verify_cmd->add_option("--samples", vopts.samples, "Monte-Carlo samples");
    verify_cmd->add_option("--seed", vopts.seed, "Monte-Carlo seed");
    verify_cmd->add_option("--guard", vopts.guard, "enumeration guard");
    verify_cmd->add_option("--workers", vopts.workers, "parallel workers");

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (bn_cmd->parsed()) {
        Rat tol = parse_rat(bn_tol);
        Int q(static_cast<unsigned long>(bn_q));
        auto coeffs = coker::bn_coeffs(q, bn_d, bn_nmax);
        coker::RationalInterval num = coker::limit_product(q, bn_d, tol);
        coker::RationalInterval den = coker::limit_product(q, 1, tol);
        coker::RationalInterval limit{num.lo / den.hi, num.hi / den.lo};
        Json rows = Json::array();
        std::vector<std::pair<std::string, std::string>> csv;
        for (int n = 0; n <= bn_nmax; ++n) {
            rows.push_back(Json{{"n", n}, {"bn", coker::rat_json(coeffs[static_cast<std::size_t>(n)])}});
            csv.emplace_back("bn[" + std::to_string(n) + "]", rat_str(coeffs[static_cast<std::size_t>(n)]));
        }
        csv.emplace_back("limit_lo", rat_str(limit.lo));
        csv.emplace_back("limit_hi", rat_str(limit.hi));
        Json out{{"config", config_json("bn", argc, argv)},
                 {"result", Json{{"rows", rows}, {"limit", coker::interval_json(limit)}}}};
        emit(out, format, csv);
        return 0;
    }

    if (prob_cmd->parsed()) {
        Int q(static_cast<unsigned long>(prob_q));
        Partition lam = parse_partition(prob_partition);
        Rat tol = parse_rat(prob_tol);
        Json value;
        std::string description;
        std::vector<std::pair<std::string, std::string>> csv;
        if (prob_id == "prop-fw") {
            Rat v = coker::cokernel_type_prob(q, prob_n, lam);
            value = coker::rat_json(v);
            csv.emplace_back("value", rat_str(v));
            description = "probability that a uniform square matrix over the level-(N+1) quotient has the given cokernel type";
        } else if (prob_id == "thm-main1") {
            Rat v = coker::p_part_type_prob(q, prob_d, prob_n, lam);
            value = coker::rat_json(v);
            csv.emplace_back("value", rat_str(v));
            description = "probability that the type at a degree-d point of a uniform F_q matrix equals the given partition";
        } else if (prob_id == "thm-main3x") {
            std::vector<int> degrees;
            if (!prob_degrees.empty())
                for (const auto& tok : split(prob_degrees, ',')) degrees.push_back(std::stoi(tok));
            auto iv = coker::vanishing_then_type_limit(q, degrees, lam, tol);
            value = coker::interval_json(iv);
            csv.emplace_back("lo", rat_str(iv.lo));
            csv.emplace_back("hi", rat_str(iv.hi));
            description = "large-n limit of joint vanishing at the listed degrees with a deg-1 type";
        } else if (prob_id == "conj-limit") {
            coker::LimitSpec spec{q, parse_points(prob_points)};
            auto iv = coker::joint_type_limit(spec, tol);
            value = coker::interval_json(iv);
            csv.emplace_back("lo", rat_str(iv.lo));
            csv.emplace_back("hi", rat_str(iv.hi));
            description = "predicted large-n limit for joint cokernel types at the listed points";
        } else if (prob_id == "corank") {
            Int v = coker::corank_count(q, prob_n, prob_l);
            value = v.get_str();
            csv.emplace_back("value", v.get_str());
            description = "number of n x n matrices over F_q with the given corank";
        } else if (prob_id == "lemma-count") {
            Int v = coker::cokernel_lift_count(q, prob_bigN, prob_n, lam, prob_l);
            value = v.get_str();
            csv.emplace_back("value", v.get_str());
            description = "number of level-(N+1) lifts of a fixed reduction with the given deg-1 cokernel type";
        } else if (prob_id == "cl2") {
            auto iv = coker::cl_corank_prob(q, prob_l, tol);
            value = coker::interval_json(iv);
            csv.emplace_back("lo", rat_str(iv.lo));
            csv.emplace_back("hi", rat_str(iv.hi));
            description = "aut-weighted limit mass of modules with the given minimal generator count";
        } else if (prob_id == "boreico") {
            coker::LimitSpec spec{q, parse_points(prob_points)};
            Rat v = coker::vanishing_transfer_factor(q, prob_n, spec.points);
            value = coker::rat_json(v);
            csv.emplace_back("value", rat_str(v));
            description = "exact factor relating vanishing probabilities to exact-type probabilities";
        } else if (prob_id == "cl-finite") {
            Rat v = coker::aut_weighted_level_prob(q, prob_m, lam);
            value = coker::rat_json(v);
            csv.emplace_back("value", rat_str(v));
            description = "aut-weighted probability of the partition among all partitions of size <= m";
        } else {
            throw std::invalid_argument("unknown formula id: " + prob_id);
        }
        Json out{{"config", config_json("prob", argc, argv)},
                 {"result", Json{{"id", prob_id}, {"provenance", description}, {"value", value}}}};
        emit(out, format, csv);
        return 0;
    }

    if (enum_cmd->parsed()) {
        EventSpec spec;
        enum_ctx.build(spec);
        spec.n = enum_n;
        for (const auto& e : enum_events) spec.terms.push_back(parse_event(spec, e));
        auto r = coker::enumerate_event(spec, enum_guard, enum_workers);
        Rat est(r.hits, r.total);
        est.canonicalize();
        Json out{{"config", config_json("enumerate", argc, argv)},
                 {"result", Json{{"spec", coker::event_spec_json(spec)},
                                 {"method", "enumerate"},
                                 {"hits", r.hits.get_str()},
                                 {"total", r.total.get_str()},
                                 {"estimate", coker::rat_json(est)}}}};
        emit(out, format,
             {{"hits", r.hits.get_str()}, {"total", r.total.get_str()}, {"estimate", est.get_str()}});
        return 0;
    }

    if (sim_cmd->parsed()) {
        EventSpec spec;
        sim_ctx.build(spec);
        spec.n = sim_n;
        for (const auto& e : sim_events) spec.terms.push_back(parse_event(spec, e));
        auto r = coker::mc_estimate(spec, sim_samples, sim_seed, sim_workers, sim_chunk);
        Json out{{"config", config_json("simulate", argc, argv)},
                 {"result", Json{{"spec", coker::event_spec_json(spec)}, {"method", "mc"},
                                 {"report", coker::mc_result_json(r)}}}};
        emit(out, format,
             {{"samples", std::to_string(r.samples)},
              {"hits", std::to_string(r.hits)},
              {"estimate", r.estimate.get_str()},
              {"sigma", r.sigma.get_str()}});
        return 0;
    }

    if (verify_cmd->parsed()) {
        std::vector<std::string> suites = split(verify_suite, ',');
        auto results = coker::run_verification(suites, vopts);
        bool failed = false;
        Json rows = Json::array();
        std::vector<std::pair<std::string, std::string>> csv;
        for (const auto& r : results) {
            if (!r.passed && !r.conjectural) failed = true;
            rows.push_back(Json{{"suite", r.suite},
                                {"name", r.name},
                                {"passed", r.passed},
                                {"conjectural", r.conjectural},
                                {"details", r.details}});
            csv.emplace_back(r.suite, r.passed ? "PASS" : (r.conjectural ? "FLAG" : "FAIL"));
            std::cerr << r.suite << ": " << (r.passed ? "PASS" : (r.conjectural ? "FLAG" : "FAIL")) << " (" << r.name
                      << ")\n";
        }
        Json out{{"config", config_json("verify", argc, argv)},
                 {"result", Json{{"checks", rows}, {"failed", failed}}}};
        emit(out, format, csv);
        return failed ? 1 : 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
