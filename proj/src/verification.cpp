#include "cokerdist/verification.hpp"

#include <map>
#include <stdexcept>

#include "cokerdist/cycle_index.hpp"
#include "cokerdist/json_io.hpp"
#include "cokerdist/oracle.hpp"

namespace coker {

namespace {

FieldCtx::Ptr field_for_q(std::uint32_t q) {
    std::uint32_t p, e;
    factor_prime_power(q, p, e);
    return FieldCtx::make(p, e);
}

Rat enum_prob(const EventSpec& spec, const VerifyOptions& opts) {
    EnumResult r = enumerate_event(spec, opts.guard, opts.workers);
    Rat p(r.hits, r.total);
    p.canonicalize();
    return p;
}

EventTerm field_term(const FqPoly& P, PredicateKind pred, Partition target = {}, int corank = 0) {
    EventTerm t;
    t.poly = P.coeffs;
    t.pred = pred;
    t.target = std::move(target);
    t.corank = corank;
    return t;
}

EventTerm ring_term(const RingCtx::Ptr& ring, const FqPoly& P, PredicateKind pred, Partition target = {}) {
    EventTerm t;
    t.poly = lift_poly(ring, P).coeffs;
    t.pred = pred;
    t.target = std::move(target);
    return t;
}

std::vector<Partition> small_types() {
    return {Partition{}, Partition{{1}}, Partition{{2}}, Partition{{1, 1}}};
}

// Allowed set {empty, (1), (2), ..., (n)}: the event "the type has at most one part".
std::vector<Partition> one_part_types(int n) {
    std::vector<Partition> out{Partition{}};
    for (int k = 1; k <= n; ++k) out.push_back(Partition{{k}});
    return out;
}

CheckResult make_check(const std::string& suite, const std::string& name, bool passed, Json details,
                       bool conjectural = false) {
    return CheckResult{suite, name, passed, conjectural, std::move(details)};
}

// --- criterion 1 ---------------------------------------------------------
void suite_prop_fw(std::vector<CheckResult>& out, const VerifyOptions& opts) {
    bool all = true;
    Json cases = Json::array();
    for (std::uint32_t p : {2u, 3u}) {
        for (int n : {1, 2}) {
            for (const auto& lam : small_types()) {
                std::uint32_t level = static_cast<std::uint32_t>(lam.largest()) + 1;
                auto ring = RingCtx::padic(p, level);
                EventSpec spec;
                spec.ring = ring;
                spec.n = n;
                spec.terms = {ring_term(ring, poly_from_ints(ring->residue_field(), {0, 1}),
                                        PredicateKind::CokerTypeIs, lam)};
                Rat got = enum_prob(spec, opts);
                Rat expect = cokernel_type_prob(Int(p), n, lam);
                bool ok = got == expect;
                all &= ok;
                cases.push_back(Json{{"p", p},
                                     {"n", n},
                                     {"lambda", partition_json(lam)},
                                     {"level", level},
                                     {"enumerated", rat_json(got)},
                                     {"formula", rat_json(expect)},
                                     {"ok", ok}});
            }
        }
    }
    out.push_back(make_check("prop-fw", "cokernel type probability equals exhaustive count over Z/p^(N+1)", all,
                             Json{{"cases", cases}}));
}

// --- criterion 2 ---------------------------------------------------------
void suite_thm_main1(std::vector<CheckResult>& out, const VerifyOptions& opts) {
    bool all = true;
    Json cases = Json::array();
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto field = field_for_q(q);
        for (int d : {1, 2}) {
            FqPoly P = irreducible_polys(field, d).front();
            for (int n = 0; n <= 3; ++n) {
                for (const auto& nu : small_types()) {
                    EventSpec spec;
                    spec.field = field;
                    spec.n = n;
                    spec.terms = {field_term(P, PredicateKind::PPartIs, nu)};
                    Rat got = enum_prob(spec, opts);
                    Rat expect = p_part_type_prob(Int(q), d, n, nu);
                    bool ok = got == expect;
                    all &= ok;
                    if (!ok)
                        cases.push_back(Json{{"q", q}, {"d", d}, {"n", n}, {"nu", partition_json(nu)},
                                             {"enumerated", rat_json(got)}, {"formula", rat_json(expect)}});
                }
            }
        }
    }
    out.push_back(make_check("thm-main1", "finite-n type probability equals exhaustive count over Mat_n(F_q)", all,
                             Json{{"failures", cases}, {"tuples", 3 * 2 * 4 * 4}}));
}

// --- criterion 3 ---------------------------------------------------------
void suite_bn(std::vector<CheckResult>& out, const VerifyOptions& opts) {
    bool all = true;
    Json details = Json::array();
    for (std::uint32_t q : {2u, 3u}) {
        auto field = field_for_q(q);
        for (int d : {1, 2, 3}) {
            FqPoly P = irreducible_polys(field, d).front();
            auto bn = bn_coeffs(Int(q), d, 3);
            for (int n = 0; n <= 3; ++n) {
                EventSpec spec;
                spec.field = field;
                spec.n = n;
                spec.terms = {field_term(P, PredicateKind::CokerVanishes)};
                EnumResult r = enumerate_event(spec, opts.guard, opts.workers);
                Rat ratio(r.hits, gl_order(Int(q), n));
                ratio.canonicalize();
                bool ok = ratio == bn[static_cast<std::size_t>(n)];
                all &= ok;
                details.push_back(Json{{"q", q}, {"d", d}, {"n", n}, {"series", rat_json(bn[static_cast<std::size_t>(n)])},
                                       {"count_ratio", rat_json(ratio)}, {"ok", ok}});
            }
        }
        auto b1 = bn_coeffs(Int(q), 1, 10);
        for (const auto& b : b1) all &= (b == 1);
    }
    out.push_back(make_check("bn", "series coefficients equal invertible-evaluation count ratios; b_n(1) = 1", all,
                             Json{{"cases", details}}));
}

// --- criterion 4 ---------------------------------------------------------
void suite_lemma_count(std::vector<CheckResult>& out, const VerifyOptions&) {
    bool all = true;
    Json details = Json::array();
    for (std::uint32_t p : {2u, 3u}) {
        auto ring = RingCtx::padic(p, 2);  // N = 1
        auto field = ring->residue_field();
        for (int n : {1, 2}) {
            for (long shift : {0L, -1L}) {  // points t and t - 1
                RPoly P = poly_from_ints(ring, {shift, 1});
                FqPoly Pbar = reduce_poly(P);
                std::uint64_t red_count = 1;
                for (int i = 0; i < n * n; ++i) red_count *= p;
                std::uint64_t ring_count = 1;
                for (int i = 0; i < n * n; ++i) ring_count *= ring->size();

                // classify every matrix at level 2 by (reduction, capped type of P(A))
                std::map<std::pair<std::uint64_t, Partition>, Int> lifts;
                std::map<Partition, Int> totals;
                for (std::uint64_t idx = 0; idx < ring_count; ++idx) {
                    std::uint64_t rest = idx;
                    RMatrix A(ring, n);
                    for (int c = 0; c < n * n; ++c) {
                        A.a[static_cast<std::size_t>(c)] = static_cast<Code>(rest % ring->size());
                        rest /= ring->size();
                    }
                    Partition type = cokernel_type(poly_eval_matrix(P, A), false);
                    FqMatrix red = reduce_matrix(A);
                    std::uint64_t rid = 0;
                    for (int c = n * n; c-- > 0;) rid = rid * p + red.a[static_cast<std::size_t>(c)];
                    lifts[{rid, type}] += 1;
                    totals[type] += 1;
                }

                std::vector<Partition> lams{Partition{}, Partition{{1}}};
                if (n == 2) lams.push_back(Partition{{1, 1}});
                for (std::uint64_t rid = 0; rid < red_count; ++rid) {
                    std::uint64_t rest = rid;
                    FqMatrix red(field, n);
                    for (int c = 0; c < n * n; ++c) {
                        red.a[static_cast<std::size_t>(c)] = static_cast<Code>(rest % p);
                        rest /= p;
                    }
                    int corank = n - matrix_rank(poly_eval_matrix(Pbar, red));
                    for (const auto& lam : lams) {
                        Int got = 0;
                        auto it = lifts.find({rid, lam});
                        if (it != lifts.end()) got = it->second;
                        Int expect = cokernel_lift_count(Int(p), 1, n, lam, corank);
                        all &= (got == expect);
                    }
                }
                // aggregation over reductions with the matching corank
                for (const auto& lam : lams) {
                    Int agg = 0;
                    for (std::uint64_t rid = 0; rid < red_count; ++rid) {
                        auto it = lifts.find({rid, lam});
                        if (it != lifts.end()) agg += it->second;
                    }
                    Int direct = totals.count(lam) ? totals[lam] : Int(0);
                    all &= (agg == direct);
                }
                details.push_back(Json{{"p", p}, {"n", n}, {"point_shift", shift}, {"ok", all}});
            }
        }
    }
    out.push_back(
        make_check("lemma-count", "lift counts over Z/p^2 match the closed form and aggregate exactly", all,
                   Json{{"cases", details}}));
}

// --- criterion 5 ---------------------------------------------------------
void suite_lemma_key(std::vector<CheckResult>& out, const VerifyOptions&) {
    bool all = true;
    Json details = Json::array();
    const int order = 8;
    for (std::uint32_t q : {2u, 3u}) {
        for (int deg : {1, 2}) {
            Int q_pt = int_pow(Int(q), static_cast<unsigned long>(deg));
            TruncSeries lhs(order);
            for (const auto& nu : partitions_up_to(order)) lhs[nu.size()] += Rat(1) / Rat(aut_count(q_pt, nu));
            Rat x(1);
            x /= Rat(q_pt);
            TruncSeries rhs = qpoch_expand(x, x, 1, PochForm::Reciprocal, order);
            bool ok = true;
            for (int k = 0; k <= order; ++k) ok &= (lhs[k] == rhs[k]);
            all &= ok;
            details.push_back(Json{{"q", q}, {"deg", deg}, {"ok", ok}});
        }
    }
    out.push_back(make_check("lemma-key", "partition sums match the closed-form expansion through order 8", all,
                             Json{{"cases", details}}));
}

// --- criterion 6 ---------------------------------------------------------
void suite_boreico(std::vector<CheckResult>& out, const VerifyOptions& opts) {
    bool all = true;
    Json details = Json::array();
    auto field = field_for_q(2);
    auto ring = RingCtx::padic(2, 2);
    FqPoly t_poly = poly_from_ints(field, {0, 1});
    FqPoly t1_poly = poly_from_ints(field, {1, 1});

    struct Case {
        std::vector<std::pair<FqPoly, Partition>> modules;
        int n;
    };
    std::vector<Case> cases = {
        {{{t_poly, Partition{{1}}}}, 2},
        {{{t_poly, Partition{{2}}}}, 3},
        {{{t_poly, Partition{{1, 1}}}}, 3},
        {{{t_poly, Partition{}}, {t1_poly, Partition{{1}}}}, 2},
        {{{t_poly, Partition{}}, {t1_poly, Partition{{1}}}}, 3},
    };
    for (const auto& c : cases) {
        int h = 0;
        std::vector<std::pair<int, Partition>> mods;
        for (const auto& [P, nu] : c.modules) {
            h += nu.size() * P.degree();
            mods.emplace_back(P.degree(), nu);
        }
        int m = c.n - h;
        Rat factor = vanishing_transfer_factor(Int(2), c.n, mods);

        EventSpec lhs_spec;
        lhs_spec.field = field;
        lhs_spec.n = m;
        for (const auto& [P, nu] : c.modules) lhs_spec.terms.push_back(field_term(P, PredicateKind::PPartIs, {}));
        Rat lhs = enum_prob(lhs_spec, opts);

        EventSpec rhs_spec;
        rhs_spec.field = field;
        rhs_spec.n = c.n;
        for (const auto& [P, nu] : c.modules) rhs_spec.terms.push_back(field_term(P, PredicateKind::PPartIs, nu));
        Rat rhs = enum_prob(rhs_spec, opts);

        bool ok = (lhs == factor * rhs);

        // quotient-ring form: the vanishing side realized over Z/4
        EventSpec ring_spec;
        ring_spec.ring = ring;
        ring_spec.n = m;
        for (const auto& [P, nu] : c.modules) ring_spec.terms.push_back(ring_term(ring, P, PredicateKind::CokerVanishes));
        Rat lhs_ring = enum_prob(ring_spec, opts);
        ok &= (lhs_ring == factor * rhs);

        all &= ok;
        details.push_back(Json{{"n", c.n}, {"m", m}, {"factor", rat_json(factor)}, {"lhs", rat_json(lhs)},
                               {"lhs_ring", rat_json(lhs_ring)}, {"rhs", rat_json(rhs)}, {"ok", ok}});
    }
    out.push_back(make_check("boreico", "vanishing-to-type transfer identity holds exactly in both forms", all,
                             Json{{"cases", details}}));
}

// --- criterion 7 ---------------------------------------------------------
void suite_corank(std::vector<CheckResult>& out, const VerifyOptions& opts) {
    bool all = true;
    Json details = Json::array();
    for (std::uint32_t q : {2u, 3u}) {
        for (int n = 0; n <= 5; ++n) {
            Int sum = 0;
            for (int l = 0; l <= n; ++l) sum += corank_count(Int(q), n, l);
            bool ok = (sum == int_pow(Int(q), static_cast<unsigned long>(n) * n));
            all &= ok;
            details.push_back(Json{{"q", q}, {"n", n}, {"census_total_ok", ok}});
        }
        auto field = field_for_q(q);
        FqPoly t_poly = poly_from_ints(field, {0, 1});
        for (int n = 0; n <= 3; ++n) {
            for (int l = 0; l <= n; ++l) {
                EventSpec spec;
                spec.field = field;
                spec.n = n;
                spec.terms = {field_term(t_poly, PredicateKind::CorankIs, {}, l)};
                EnumResult r = enumerate_event(spec, opts.guard, opts.workers);
                all &= (r.hits == corank_count(Int(q), n, l));
            }
        }
    }
    out.push_back(make_check("corank", "corank census matches the closed form and sums to q^(n^2)", all,
                             Json{{"cases", details}}));
}

// --- criterion 8 ---------------------------------------------------------
void suite_cross_route(std::vector<CheckResult>& out, const VerifyOptions& opts) {
    bool all = true;
    Json failures = Json::array();
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto field = field_for_q(q);
        for (int d : {1, 2}) {
            FqPoly P = irreducible_polys(field, d).front();
            for (int n = 0; n <= 3; ++n) {
                for (const auto& nu : small_types()) {
                    Rat route_formula = p_part_type_prob(Int(q), d, n, nu);
                    Rat route_series = exact_partition_prob(field, P, nu, n);
                    EventSpec spec;
                    spec.field = field;
                    spec.n = n;
                    spec.terms = {field_term(P, PredicateKind::PPartIs, nu)};
                    Rat route_enum = enum_prob(spec, opts);
                    bool ok = (route_formula == route_series) && (route_series == route_enum);
                    all &= ok;
                    if (!ok)
                        failures.push_back(Json{{"q", q}, {"d", d}, {"n", n}, {"nu", partition_json(nu)},
                                                {"formula", rat_json(route_formula)},
                                                {"series", rat_json(route_series)},
                                                {"enumeration", rat_json(route_enum)}});
                }
            }
        }
    }
    out.push_back(make_check("cross-route",
                             "three independent derivations (closed form, specialized series, enumeration) agree",
                             all, Json{{"failures", failures}}));
}

// --- criterion 9 ---------------------------------------------------------
void suite_normalization(std::vector<CheckResult>& out, const VerifyOptions&) {
    Int q(2);
    const int m = 12;
    Rat tol(1, 1000000);
    Rat partial(0);
    for (const auto& nu : partitions_up_to(m)) partial += Rat(1) / Rat(aut_count(q, nu));
    RationalInterval base = limit_product(q, 1, tol);
    // tail of the aut-weighted sum: sum_{k>m} q^{-k} / prod_{j<=k}(1-q^{-j}) <= q^{-m} / ((q-1) lo)
    Rat tail = inv_pow(q, m) / ((Rat(q) - 1) * base.lo);
    RationalInterval bracket{partial * base.lo, (partial + tail) * base.hi};
    bool ok1 = bracket.contains(Rat(1)) && bracket.width() < Rat(1, 1000);

    Rat mid_sum(0);
    for (int l = 0; l <= 6; ++l) mid_sum += cl_corank_prob(q, l, tol).midpoint();
    Rat err = mid_sum - 1;
    if (err < 0) err = -err;
    bool ok2 = err < Rat(1, 1000);

    out.push_back(make_check("normalization", "aut-weighted masses bracket 1; corank masses sum to 1", ok1 && ok2,
                             Json{{"bracket", interval_json(bracket)},
                                  {"bracket_width", rat_json(bracket.width())},
                                  {"corank_mass_error", rat_json(err)}}));
}

// --- criterion 10 --------------------------------------------------------
void suite_mc(std::vector<CheckResult>& out, const VerifyOptions& opts) {
    auto field = field_for_q(2);
    auto ring = RingCtx::padic(2, 2);
    FqPoly t_poly = poly_from_ints(field, {0, 1});
    FqPoly p2 = irreducible_polys(field, 2).front();  // t^2 + t + 1
    const int n = 8;
    Rat gap_bound(2, 100);
    Rat tol(1, 1000000000);
    bool all = true;
    Json details = Json::array();

    auto run_case = [&](const std::string& label, const EventSpec& spec, const Rat& exact,
                        const RationalInterval& limit) {
        McResult mc = mc_estimate(spec, opts.samples, opts.seed, opts.workers);
        double z = 0.0;
        bool mc_ok = within_z(mc, exact, 4, &z);
        Rat gap = exact - limit.midpoint();
        if (gap < 0) gap = -gap;
        bool gap_ok = gap <= gap_bound;
        all &= mc_ok && gap_ok;
        details.push_back(Json{{"case", label},
                               {"exact", rat_json(exact)},
                               {"estimate", rat_json(mc.estimate)},
                               {"z", z},
                               {"mc_within_4_sigma", mc_ok},
                               {"limit", interval_json(limit)},
                               {"finite_n_gap", rat_json(gap)},
                               {"gap_within_0.02", gap_ok}});
    };

    {
        EventSpec spec;
        spec.field = field;
        spec.n = n;
        spec.terms = {field_term(t_poly, PredicateKind::PPartIs, {})};
        Rat exact = finite_n_event_prob(field, {{t_poly, {{Partition{}}}}}, n);
        run_case("vanishing-deg1", spec, exact, joint_type_limit({Int(2), {{1, Partition{}}}}, tol));
    }
    {
        EventSpec spec;
        spec.field = field;
        spec.n = n;
        spec.terms = {field_term(p2, PredicateKind::PPartIs, {})};
        Rat exact = finite_n_event_prob(field, {{p2, {{Partition{}}}}}, n);
        run_case("vanishing-deg2", spec, exact, joint_type_limit({Int(2), {{2, Partition{}}}}, tol));
    }
    {
        EventSpec spec;
        spec.ring = ring;
        spec.n = n;
        spec.terms = {ring_term(ring, p2, PredicateKind::CokerVanishes),
                      ring_term(ring, t_poly, PredicateKind::CokerTypeIs, Partition{{1}})};
        // Exact finite-n value through the specialized-series route: the deg-1 type
        // event at level N+1 transfers to the residue field with the exact factor
        // q^{l^2} prod_{i<=l}(1-q^{-i})^2 / w(q, lambda) applied to the corank event.
        Rat pa = finite_n_event_prob(field, {{p2, {{Partition{}}}}, {t_poly, one_part_types(n)}}, n);
        Rat pb = finite_n_event_prob(field, {{p2, {{Partition{}}}}, {t_poly, {{Partition{}}}}}, n);
        Rat factor = Rat(2) * unit_fraction_product(Int(2), 1, 1) * unit_fraction_product(Int(2), 1, 1) /
                     Rat(aut_count(Int(2), Partition{{1}}));
        Rat exact = factor * (pa - pb);
        run_case("vanishing-deg2-then-type", spec, exact,
                 vanishing_then_type_limit(Int(2), {2}, Partition{{1}}, tol));
    }
    out.push_back(make_check("mc", "seeded Monte Carlo matches exact finite-n values; finite-n near limits", all,
                             Json{{"samples", opts.samples}, {"seed", opts.seed}, {"cases", details}}));
}

// --- criterion 11 --------------------------------------------------------
void suite_determinism(std::vector<CheckResult>& out, const VerifyOptions& opts) {
    auto field = field_for_q(2);
    auto ring = RingCtx::padic(2, 2);
    FqPoly t_poly = poly_from_ints(field, {0, 1});
    FqPoly p2 = irreducible_polys(field, 2).front();

    EventSpec mc_spec;
    mc_spec.ring = ring;
    mc_spec.n = 4;
    mc_spec.terms = {ring_term(ring, p2, PredicateKind::CokerVanishes),
                     ring_term(ring, t_poly, PredicateKind::CokerTypeIs, Partition{{1}})};
    McResult one = mc_estimate(mc_spec, 20000, opts.seed, 1);
    McResult many = mc_estimate(mc_spec, 20000, opts.seed, 4);
    std::string bytes_one = mc_result_json(one).dump();
    std::string bytes_many = mc_result_json(many).dump();
    bool mc_ok = bytes_one == bytes_many;

    EventSpec en_spec;
    en_spec.field = field;
    en_spec.n = 3;
    en_spec.terms = {field_term(t_poly, PredicateKind::PPartIs, {})};
    EnumResult e1 = enumerate_event(en_spec, opts.guard, 1);
    EnumResult e4 = enumerate_event(en_spec, opts.guard, 4);
    bool enum_ok = (e1.hits == e4.hits) && (e1.total == e4.total);

    out.push_back(make_check("determinism", "identical seeds and configs are byte-identical across 1 and k workers",
                             mc_ok && enum_ok,
                             Json{{"mc_bytes_equal", mc_ok}, {"enum_equal", enum_ok}, {"report", bytes_one}}));
}

// --- conjecture reporting -------------------------------------------------
void suite_conjecture(std::vector<CheckResult>& out, const VerifyOptions& opts) {
    auto field = field_for_q(2);
    auto ring = RingCtx::padic(2, 2);
    FqPoly t_poly = poly_from_ints(field, {0, 1});
    FqPoly p2 = irreducible_polys(field, 2).front();
    const int n = 10;

    std::vector<BatteryCase> cases;
    {
        BatteryCase c;
        c.label = "proved: single deg-1 point, zero cokernel";
        c.spec.field = field;
        c.spec.n = n;
        c.spec.terms = {field_term(t_poly, PredicateKind::PPartIs, {})};
        c.prediction = {Int(2), {{1, Partition{}}}};
        c.proved = true;
        cases.push_back(std::move(c));
    }
    {
        BatteryCase c;
        c.label = "proved: deg-2 vanishing with deg-1 type (1)";
        c.spec.ring = ring;
        c.spec.n = n;
        c.spec.terms = {ring_term(ring, p2, PredicateKind::CokerVanishes),
                        ring_term(ring, t_poly, PredicateKind::CokerTypeIs, Partition{{1}})};
        c.prediction = {Int(2), {{2, Partition{}}, {1, Partition{{1}}}}};
        c.proved = true;
        cases.push_back(std::move(c));
    }
    {
        BatteryCase c;
        c.label = "conjectural: deg-2 point with type (1)";
        c.spec.ring = ring;
        c.spec.n = n;
        c.spec.terms = {ring_term(ring, p2, PredicateKind::CokerTypeIs, Partition{{1}})};
        c.prediction = {Int(2), {{2, Partition{{1}}}}};
        c.proved = false;
        cases.push_back(std::move(c));
    }

    auto outcomes = conjecture_battery(cases, opts.samples, opts.seed, opts.workers);
    for (const auto& o : outcomes) {
        Json j{{"label", o.label},
               {"estimate", rat_json(o.mc.estimate)},
               {"prediction", interval_json(o.prediction)},
               {"z", o.z},
               {"verdict", o.pass ? "PASS" : "FLAG"},
               {"conjectural", o.conjectural}};
        // conjectural cases are reported for consistency only and never fail a run
        out.push_back(make_check("conjecture", o.label, o.conjectural ? true : o.pass, std::move(j), o.conjectural));
    }
}

}  // namespace

std::vector<std::string> verification_suites() {
    return {"prop-fw", "thm-main1", "bn",            "lemma-count", "lemma-key", "boreico",
            "corank",  "cross-route", "normalization", "mc",          "determinism", "conjecture"};
}

std::vector<CheckResult> run_verification(const std::vector<std::string>& suites, const VerifyOptions& opts) {
    std::vector<std::string> wanted = suites;
    if (wanted.size() == 1 && wanted[0] == "all") wanted = verification_suites();
    std::vector<CheckResult> out;
    for (const auto& s : wanted) {
        if (s == "prop-fw")
            suite_prop_fw(out, opts);
        else if (s == "thm-main1")
            suite_thm_main1(out, opts);
        else if (s == "bn")
            suite_bn(out, opts);
        else if (s == "lemma-count")
            suite_lemma_count(out, opts);
        else if (s == "lemma-key")
            suite_lemma_key(out, opts);
        else if (s == "boreico")
            suite_boreico(out, opts);
        else if (s == "corank")
            suite_corank(out, opts);
        else if (s == "cross-route")
            suite_cross_route(out, opts);
        else if (s == "normalization")
            suite_normalization(out, opts);
        else if (s == "mc")
            suite_mc(out, opts);
        else if (s == "determinism")
            suite_determinism(out, opts);
        else if (s == "conjecture")
            suite_conjecture(out, opts);
        else
            throw std::invalid_argument("unknown verification suite: " + s);
    }
    return out;
}

}  // namespace coker
