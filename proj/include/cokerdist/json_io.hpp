#pragma once

#include <string>

#include "json.hpp"

#include "cokerdist/cycle_index.hpp"
#include "cokerdist/module_stats.hpp"
#include "cokerdist/oracle.hpp"

namespace coker {

using Json = nlohmann::ordered_json;

// Rationals serialize as {"num", "den"} base-10 strings, intervals as {"lo", "hi"},
// partitions as decreasing integer arrays. Field polynomials carry their context
// (p, e, modulus) so payloads are self-describing; coefficients are length-e arrays.
Json rat_json(const Rat& r);
Json interval_json(const RationalInterval& iv);
Json partition_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json series_json(const TruncSeries& s);
Json field_json(const FieldCtx& f);
Json ring_json(const RingCtx& r);
Json fq_poly_json(const FqPoly& p);
Json r_poly_json(const RPoly& p);
Json type_report_json(const TypeReport& r);
Json mc_result_json(const McResult& r);
Json event_spec_json(const EventSpec& s);

// Builds an event spec from its JSON description:
//   {"ctx": {"kind": "fq"|"zp"|"fqt"|"gr", ...}, "n": int,
//    "terms": [{"poly": [ints], "pred": "coker-vanishes"|"coker-type-is"|
//               "p-part-is"|"corank-is", "target": [parts] | int}]}
EventSpec event_spec_from_json(const Json& j);

FieldCtx::Ptr field_from_json(const Json& j);
RingCtx::Ptr ring_from_json(const Json& j);

}  // namespace coker
