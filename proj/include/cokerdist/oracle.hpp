#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cokerdist/formulas.hpp"
#include "cokerdist/module_stats.hpp"

namespace coker {

enum class PredicateKind { CokerVanishes, CokerTypeIs, PPartIs, CorankIs };

struct EventTerm {
    std::vector<Code> poly;  // little-endian codes in the spec's context; monic
    PredicateKind pred = PredicateKind::CokerVanishes;
    Partition target;        // CokerTypeIs / PPartIs
    int corank = 0;          // CorankIs
};

// A joint event over Mat_n of one context: every term's polynomial must reduce to a
// distinct monic irreducible, and each predicate must fit the context kind
// (PPartIs/CorankIs need a field; CokerTypeIs needs a quotient ring whose level
// certifies the target).
struct EventSpec {
    FieldCtx::Ptr field;  // exactly one of field/ring is set
    RingCtx::Ptr ring;
    int n = 0;
    std::vector<EventTerm> terms;

    void validate() const;
    std::uint64_t element_count() const;  // |ring or field|
    bool matches(const std::vector<Code>& entries) const;
};

struct EnumResult {
    Int hits;
    Int total;
};

// Exact count of matrices satisfying all predicates; total = |ctx|^{n^2} must not
// exceed the guard. The index range is split across workers and reduced by exact
// integer addition, so the result is independent of scheduling.
EnumResult enumerate_event(const EventSpec& spec, std::uint64_t guard = (1u << 24), int workers = 1);

struct McResult {
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    Rat estimate;   // hits / samples
    Rat sigma;      // normal-approximation standard error, exact decimal approximation
    std::uint64_t seed = 0;
    std::uint32_t chunk_size = 0;
};

// Uniform sampling with a counter-based stream keyed by (seed, chunk, position, entry):
// results are bit-identical for fixed (seed, chunk_size) regardless of worker count.
McResult mc_estimate(const EventSpec& spec, std::uint64_t samples, std::uint64_t seed, int workers = 1,
                     std::uint32_t chunk_size = 4096);

struct BatteryCase {
    std::string label;
    EventSpec spec;
    LimitSpec prediction;
    bool proved = false;  // unproven predictions are reported, never failed
};

struct BatteryOutcome {
    std::string label;
    bool conjectural = false;
    McResult mc;
    RationalInterval prediction;
    double z = 0.0;
    bool pass = true;  // |estimate - midpoint| <= 4 sigma, exact rational comparison
};

std::vector<BatteryOutcome> conjecture_battery(const std::vector<BatteryCase>& cases, std::uint64_t samples,
                                               std::uint64_t seed, int workers = 1);

// z-score bookkeeping shared by the battery and the verifier: exact rational test of
// (estimate - target)^2 <= z_max^2 * sigma^2 plus a double approximation for reports.
bool within_z(const McResult& mc, const Rat& target, int z_max, double* z_out = nullptr);

}  // namespace coker
