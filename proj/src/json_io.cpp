#include "cokerdist/json_io.hpp"

#include <stdexcept>

namespace coker {

Json rat_json(const Rat& r) {
    return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Json interval_json(const RationalInterval& iv) {
    return Json{{"lo", rat_json(iv.lo)}, {"hi", rat_json(iv.hi)}};
}

Json partition_json(const Partition& p) {
    Json arr = Json::array();
    for (int x : p.parts()) arr.push_back(x);
    return arr;
}

Partition partition_from_json(const Json& j) {
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

Json series_json(const TruncSeries& s) {
    Json arr = Json::array();
    for (int i = 0; i <= s.order(); ++i) arr.push_back(rat_json(s[i]));
    return arr;
}

Json field_json(const FieldCtx& f) {
    Json mod = Json::array();
    for (Code c : f.modulus()) mod.push_back(c);
    return Json{{"kind", "fq"}, {"p", f.p()}, {"e", f.e()}, {"q", f.q()}, {"modulus", mod}};
}

Json ring_json(const RingCtx& r) {
    Json j;
    switch (r.kind()) {
        case RingKind::PadicQuotient:
            j["kind"] = "zp";
            j["p"] = r.residue_field()->p();
            break;
        case RingKind::EqualCharQuotient:
            j["kind"] = "fqt";
            j["p"] = r.residue_field()->p();
            j["e"] = r.residue_field()->e();
            break;
        case RingKind::GaloisRing: {
            j["kind"] = "gr";
            j["p"] = r.residue_field()->p();
            j["e"] = r.residue_field()->e();
            Json lift = Json::array();
            for (auto c : r.modulus_lift()) lift.push_back(c);
            j["modulus_lift"] = lift;
            break;
        }
    }
    j["level"] = r.level();
    j["q"] = r.q();
    j["size"] = r.size();
    j["description"] = r.describe();
    return j;
}

Json fq_poly_json(const FqPoly& p) {
    Json coeffs = Json::array();
    for (Code c : p.coeffs) {
        Json elem = Json::array();
        for (Code digit : p.ctx->coeffs(c)) elem.push_back(digit);
        coeffs.push_back(elem);
    }
    Json j = field_json(*p.ctx);
    j["coeffs"] = coeffs;
    return j;
}

Json r_poly_json(const RPoly& p) {
    Json coeffs = Json::array();
    for (Code c : p.coeffs) coeffs.push_back(c);
    return Json{{"ring", ring_json(*p.ctx)}, {"coeffs", coeffs}};
}

Json type_report_json(const TypeReport& r) {
    Json points = Json::array();
    for (const auto& pr : r.points) {
        Json j{{"poly", r_poly_json(pr.poly)["coeffs"]},
               {"partition", partition_json(pr.type)},
               {"vanishes", pr.vanishes}};
        if (pr.matches_target) j["matches_target"] = *pr.matches_target;
        points.push_back(j);
    }
    return Json{{"n", r.n}, {"ring", ring_json(*r.ring)}, {"points", points}};
}

Json mc_result_json(const McResult& r) {
    return Json{{"samples", r.samples}, {"hits", r.hits},         {"estimate", rat_json(r.estimate)},
                {"sigma", rat_json(r.sigma)}, {"seed", r.seed},   {"chunk_size", r.chunk_size}};
}

namespace {
const char* pred_name(PredicateKind k) {
    switch (k) {
        case PredicateKind::CokerVanishes:
            return "coker-vanishes";
        case PredicateKind::CokerTypeIs:
            return "coker-type-is";
        case PredicateKind::PPartIs:
            return "p-part-is";
        case PredicateKind::CorankIs:
            return "corank-is";
    }
    return "?";
}

PredicateKind pred_from_name(const std::string& s) {
    if (s == "coker-vanishes") return PredicateKind::CokerVanishes;
    if (s == "coker-type-is") return PredicateKind::CokerTypeIs;
    if (s == "p-part-is") return PredicateKind::PPartIs;
    if (s == "corank-is") return PredicateKind::CorankIs;
    throw std::invalid_argument("unknown predicate: " + s);
}
}  // namespace

Json event_spec_json(const EventSpec& s) {
    Json j;
    j["ctx"] = s.field ? field_json(*s.field) : ring_json(*s.ring);
    j["n"] = s.n;
    Json terms = Json::array();
    for (const auto& t : s.terms) {
        Json poly = Json::array();
        for (Code c : t.poly) poly.push_back(c);
        Json jt{{"poly", poly}, {"pred", pred_name(t.pred)}};
        if (t.pred == PredicateKind::CokerTypeIs || t.pred == PredicateKind::PPartIs)
            jt["target"] = partition_json(t.target);
        if (t.pred == PredicateKind::CorankIs) jt["target"] = t.corank;
        terms.push_back(jt);
    }
    j["terms"] = terms;
    return j;
}

FieldCtx::Ptr field_from_json(const Json& j) {
    std::uint32_t p = j.at("p").get<std::uint32_t>();
    std::uint32_t e = j.value("e", 1u);
    if (j.contains("modulus")) {
        std::vector<Code> mod;
        for (const auto& c : j.at("modulus")) mod.push_back(c.get<Code>());
        return FieldCtx::make_with_modulus(p, std::move(mod));
    }
    return FieldCtx::make(p, e);
}

RingCtx::Ptr ring_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    std::uint32_t level = j.at("level").get<std::uint32_t>();
    std::uint32_t p = j.at("p").get<std::uint32_t>();
    if (kind == "zp") return RingCtx::padic(p, level);
    if (kind == "fqt") {
        Json fj{{"p", p}, {"e", j.value("e", 1u)}};
        if (j.contains("modulus")) fj["modulus"] = j.at("modulus");
        return RingCtx::equal_char(field_from_json(fj), level);
    }
    if (kind == "gr") {
        if (j.contains("modulus_lift")) {
            std::vector<std::uint32_t> lift;
            for (const auto& c : j.at("modulus_lift")) lift.push_back(c.get<std::uint32_t>());
            return RingCtx::galois_with_lift(p, level, std::move(lift));
        }
        return RingCtx::galois(p, level, j.at("e").get<std::uint32_t>());
    }
    throw std::invalid_argument("unknown ring kind: " + kind);
}

EventSpec event_spec_from_json(const Json& j) {
    EventSpec s;
    const Json& ctx = j.at("ctx");
    std::string kind = ctx.at("kind").get<std::string>();
    if (kind == "fq")
        s.field = field_from_json(ctx);
    else
        s.ring = ring_from_json(ctx);
    s.n = j.at("n").get<int>();
    for (const auto& jt : j.at("terms")) {
        EventTerm t;
        for (const auto& c : jt.at("poly")) t.poly.push_back(c.get<Code>());
        t.pred = pred_from_name(jt.at("pred").get<std::string>());
        if (t.pred == PredicateKind::CokerTypeIs || t.pred == PredicateKind::PPartIs) {
            if (jt.contains("target")) t.target = partition_from_json(jt.at("target"));
        } else if (t.pred == PredicateKind::CorankIs) {
            t.corank = jt.at("target").get<int>();
        }
        s.terms.push_back(std::move(t));
    }
    s.validate();
    return s;
}

}  // namespace coker
