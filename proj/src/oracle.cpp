#include "cokerdist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

namespace coker {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Counter-based stream: a pure function of (seed, chunk, position, entry, attempt),
// so samples are independent of scheduling and worker count.
std::uint64_t keyed_u64(std::uint64_t seed, std::uint64_t chunk, std::uint64_t pos, std::uint64_t entry,
                        std::uint64_t attempt) {
    std::uint64_t h = splitmix(seed ^ 0x636f6b6572646973ull);
    h = splitmix(h ^ chunk);
    h = splitmix(h ^ pos);
    h = splitmix(h ^ entry);
    h = splitmix(h ^ attempt);
    return h;
}

Code uniform_code(std::uint64_t seed, std::uint64_t chunk, std::uint64_t pos, std::uint64_t entry,
                  std::uint64_t m) {
    // rejection sampling from the top of the 64-bit range to avoid modulo bias
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % m;
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::uint64_t v = keyed_u64(seed, chunk, pos, entry, attempt);
        if (v < limit) return static_cast<Code>(v % m);
    }
}

}  // namespace

void EventSpec::validate() const {
    if ((field == nullptr) == (ring == nullptr))
        throw std::invalid_argument("event spec needs exactly one of a field or a ring context");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (terms.empty()) throw std::invalid_argument("event spec needs at least one predicate");

    FieldCtx::Ptr res = field ? field : ring->residue_field();
    std::set<std::vector<Code>> reductions;
    for (const auto& t : terms) {
        FqPoly red;
        if (field) {
            FqPoly P(field, t.poly);
            if (!P.is_monic()) throw std::invalid_argument("event polynomials must be monic");
            red = P;
        } else {
            RPoly P(ring, t.poly);
            if (!P.is_monic()) throw std::invalid_argument("event polynomials must be monic");
            red = reduce_poly(P);
        }
        if (!is_irreducible(red)) throw std::invalid_argument("event polynomial reductions must be irreducible");
        if (!reductions.insert(red.coeffs).second)
            throw std::invalid_argument("event polynomial reductions must be distinct");

        switch (t.pred) {
            case PredicateKind::CokerVanishes:
                break;
            case PredicateKind::CokerTypeIs:
                if (!ring) throw std::invalid_argument("coker-type predicates need a quotient-ring context");
                if (t.target.largest() + 1 > static_cast<int>(ring->level()))
                    throw std::invalid_argument("ring level cannot certify the target type");
                break;
            case PredicateKind::PPartIs:
                if (!field) throw std::invalid_argument("p-part predicates need a field context");
                break;
            case PredicateKind::CorankIs:
                if (!field) throw std::invalid_argument("corank predicates need a field context");
                if (t.corank < 0 || t.corank > n) throw std::invalid_argument("corank out of range");
                break;
        }
    }
}

std::uint64_t EventSpec::element_count() const { return field ? field->q() : ring->size(); }

bool EventSpec::matches(const std::vector<Code>& entries) const {
    if (field) {
        FqMatrix A(field, n, entries);
        for (const auto& t : terms) {
            FqPoly P(field, t.poly);
            switch (t.pred) {
                case PredicateKind::CokerVanishes: {
                    if (matrix_rank(poly_eval_matrix(P, A)) != n) return false;
                    break;
                }
                case PredicateKind::PPartIs: {
                    if (!(p_part_partition_unchecked(A, P) == t.target)) return false;
                    break;
                }
                case PredicateKind::CorankIs: {
                    if (n - matrix_rank(poly_eval_matrix(P, A)) != t.corank) return false;
                    break;
                }
                case PredicateKind::CokerTypeIs:
                    return false;  // rejected by validate()
            }
        }
        return true;
    }
    RMatrix A(ring, n, entries);
    for (const auto& t : terms) {
        RPoly P(ring, t.poly);
        RMatrix B = poly_eval_matrix(P, A);
        switch (t.pred) {
            case PredicateKind::CokerVanishes: {
                if (!is_invertible(B)) return false;
                break;
            }
            case PredicateKind::CokerTypeIs: {
                // capped type: exponents <= N are exact, deeper cokernels show the
                // sentinel N+1 and cannot collide with a certified target
                if (!(cokernel_type(B, /*require_exact=*/false) == t.target)) return false;
                break;
            }
            default:
                return false;
        }
    }
    return true;
}

EnumResult enumerate_event(const EventSpec& spec, std::uint64_t guard, int workers) {
    spec.validate();
    std::uint64_t m = spec.element_count();
    int cells = spec.n * spec.n;
    long double total_ld = 1.0L;
    for (int i = 0; i < cells; ++i) total_ld *= static_cast<long double>(m);
    if (total_ld > static_cast<long double>(guard)) throw std::invalid_argument("enumeration guard exceeded");
    std::uint64_t total = 1;
    for (int i = 0; i < cells; ++i) total *= m;

    workers = std::max(1, workers);
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
    auto run = [&](int w) {
        std::uint64_t begin = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
        std::uint64_t end = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
        std::vector<Code> entries(static_cast<std::size_t>(cells), 0);
        std::uint64_t hits = 0;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::uint64_t rest = idx;
            for (int e = 0; e < cells; ++e) {
                entries[static_cast<std::size_t>(e)] = static_cast<Code>(rest % m);
                rest /= m;
            }
            if (spec.matches(entries)) ++hits;
        }
        partial[static_cast<std::size_t>(w)] = hits;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::uint64_t hits = 0;
    for (auto h : partial) hits += h;
    return {Int(static_cast<unsigned long>(hits)), Int(static_cast<unsigned long>(total))};
}

McResult mc_estimate(const EventSpec& spec, std::uint64_t samples, std::uint64_t seed, int workers,
                     std::uint32_t chunk_size) {
    spec.validate();
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (chunk_size < 1) throw std::invalid_argument("chunk size must be >= 1");
    std::uint64_t m = spec.element_count();
    int cells = spec.n * spec.n;
    std::uint64_t chunks = (samples + chunk_size - 1) / chunk_size;

    workers = std::max(1, workers);
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
    auto run = [&](int w) {
        std::vector<Code> entries(static_cast<std::size_t>(cells), 0);
        std::uint64_t hits = 0;
        for (std::uint64_t chunk = static_cast<std::uint64_t>(w); chunk < chunks;
             chunk += static_cast<std::uint64_t>(workers)) {
            std::uint64_t begin = chunk * chunk_size;
            std::uint64_t end = std::min<std::uint64_t>(begin + chunk_size, samples);
            for (std::uint64_t s = begin; s < end; ++s) {
                std::uint64_t pos = s - begin;
                for (int e = 0; e < cells; ++e)
                    entries[static_cast<std::size_t>(e)] =
                        uniform_code(seed, chunk, pos, static_cast<std::uint64_t>(e), m);
                if (spec.matches(entries)) ++hits;
            }
        }
        partial[static_cast<std::size_t>(w)] = hits;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::uint64_t hits = 0;
    for (auto h : partial) hits += h;

    McResult r;
    r.samples = samples;
    r.hits = hits;
    r.seed = seed;
    r.chunk_size = chunk_size;
    r.estimate = Rat(Int(static_cast<unsigned long>(hits)), Int(static_cast<unsigned long>(samples)));
    r.estimate.canonicalize();
    // sigma = sqrt(p(1-p)/samples), reported as an exact decimal approximation via an
    // integer square root at 10^-15 resolution
    Rat var = r.estimate * (Rat(1) - r.estimate) / Rat(Int(static_cast<unsigned long>(samples)));
    Int scale = int_pow(Int(10), 30);
    Int scaled_num = var.get_num() * scale / var.get_den();
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled_num.get_mpz_t());
    r.sigma = Rat(root, int_pow(Int(10), 15));
    r.sigma.canonicalize();
    return r;
}

bool within_z(const McResult& mc, const Rat& target, int z_max, double* z_out) {
    Rat diff = mc.estimate - target;
    Rat var = mc.estimate * (Rat(1) - mc.estimate) / Rat(Int(static_cast<unsigned long>(mc.samples)));
    if (z_out) {
        double sd = std::sqrt(var.get_d());
        *z_out = sd == 0.0 ? (diff == 0 ? 0.0 : std::numeric_limits<double>::infinity())
                           : std::abs(diff.get_d()) / sd;
    }
    if (var == 0) return diff == 0;
    return diff * diff <= Rat(z_max * z_max) * var;
}

std::vector<BatteryOutcome> conjecture_battery(const std::vector<BatteryCase>& cases, std::uint64_t samples,
                                               std::uint64_t seed, int workers) {
    std::vector<BatteryOutcome> out;
    out.reserve(cases.size());
    for (const auto& c : cases) {
        BatteryOutcome o;
        o.label = c.label;
        o.conjectural = !c.proved;
        o.mc = mc_estimate(c.spec, samples, seed, workers);
        o.prediction = joint_type_limit(c.prediction, Rat(1, 1000000000));
        o.pass = within_z(o.mc, o.prediction.midpoint(), 4, &o.z);
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace coker
