#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cokerdist/json_io.hpp"
#include "cokerdist/verification.hpp"
#include "cokerdist/version.hpp"

namespace py = pybind11;
using namespace coker;

namespace {

py::object frac(const Rat& r) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(r.get_str());
}

py::object big(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.get_str());
}

py::tuple interval(const RationalInterval& iv) { return py::make_tuple(frac(iv.lo), frac(iv.hi)); }

Partition partition_from(const std::vector<int>& parts) { return Partition(parts); }

Rat rat_from(py::handle h) {
    // accepts int, Fraction, or "num/den" string
    std::string s = py::str(h).cast<std::string>();
    Rat r(s);
    r.canonicalize();
    return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact cokernel statistics of random matrices over finite chain rings and F_q";
    m.attr("__version__") = kVersion;

    m.def("make_field", [](std::uint32_t p, std::uint32_t e) {
        auto f = FieldCtx::make(p, e);
        return py::module_::import("json").attr("loads")(field_json(*f).dump());
    });

    m.def("is_irreducible", [](std::uint32_t p, std::uint32_t e, const std::vector<long>& coeffs) {
        auto f = FieldCtx::make(p, e);
        return is_irreducible(poly_from_ints(f, coeffs));
    });

    m.def("conjugate", [](const std::vector<int>& parts) { return partition_from(parts).conjugate().parts(); });

    m.def("partitions_up_to", [](int mx) {
        std::vector<std::vector<int>> out;
        for (const auto& p : partitions_up_to(mx)) out.push_back(p.parts());
        return out;
    });

    m.def("aut_count",
          [](unsigned long q, const std::vector<int>& parts) { return big(aut_count(Int(q), partition_from(parts))); });

    m.def("brute_force_aut_count", [](std::uint32_t q, const std::vector<int>& parts, int degree) {
        return big(brute_force_aut_count(q, partition_from(parts), degree));
    });

    m.def("bn_coeffs", [](unsigned long q, int d, int n_max) {
        py::list out;
        for (const auto& b : bn_coeffs(Int(q), d, n_max)) out.append(frac(b));
        return out;
    });

    m.def("limit_product",
          [](unsigned long q, int d, py::handle tol) { return interval(limit_product(Int(q), d, rat_from(tol))); });

    m.def("smith_exponents", [](const std::string& ring_desc, int n, const std::vector<Code>& entries) {
        auto ring = ring_from_json(Json::parse(ring_desc));
        return smith_exponents(RMatrix(ring, n, entries));
    });

    m.def("cokernel_type", [](const std::string& ring_desc, int n, const std::vector<Code>& entries, bool exact) {
        auto ring = ring_from_json(Json::parse(ring_desc));
        return cokernel_type(RMatrix(ring, n, entries), exact).parts();
    });

    m.def("p_part_partition",
          [](std::uint32_t p, std::uint32_t e, int n, const std::vector<Code>& entries, const std::vector<long>& poly) {
              auto f = FieldCtx::make(p, e);
              return p_part_partition(FqMatrix(f, n, entries), poly_from_ints(f, poly)).parts();
          });

    m.def("formula", [](const std::string& id, py::dict params) -> py::object {
        auto geti = [&](const char* k, int dflt) { return params.contains(k) ? params[k].cast<int>() : dflt; };
        unsigned long q = params.contains("q") ? params["q"].cast<unsigned long>() : 2;
        Partition lam =
            params.contains("partition") ? partition_from(params["partition"].cast<std::vector<int>>()) : Partition{};
        Rat tol = params.contains("tol") ? rat_from(params["tol"]) : Rat(1, 1000000);
        if (id == "prop-fw") return frac(cokernel_type_prob(Int(q), geti("n", 0), lam));
        if (id == "thm-main1") return frac(p_part_type_prob(Int(q), geti("d", 1), geti("n", 0), lam));
        if (id == "corank") return big(corank_count(Int(q), geti("n", 0), geti("l", 0)));
        if (id == "lemma-count") return big(cokernel_lift_count(Int(q), geti("N", 1), geti("n", 0), lam, geti("l", 0)));
        if (id == "cl2") return interval(cl_corank_prob(Int(q), geti("l", 0), tol));
        if (id == "cl-finite") return frac(aut_weighted_level_prob(Int(q), geti("m", 0), lam));
        if (id == "thm-main3x") {
            std::vector<int> degrees;
            if (params.contains("degrees")) degrees = params["degrees"].cast<std::vector<int>>();
            return interval(vanishing_then_type_limit(Int(q), degrees, lam, tol));
        }
        if (id == "conj-limit" || id == "boreico") {
            LimitSpec spec;
            spec.q = Int(q);
            for (auto item : params["points"].cast<py::list>()) {
                auto pair = item.cast<py::tuple>();
                spec.points.emplace_back(pair[0].cast<int>(), partition_from(pair[1].cast<std::vector<int>>()));
            }
            if (id == "conj-limit") return interval(joint_type_limit(spec, tol));
            return frac(vanishing_transfer_factor(Int(q), geti("n", 0), spec.points));
        }
        throw std::invalid_argument("unknown formula id: " + id);
    });

    m.def("finite_n_event_prob",
          [](std::uint32_t p, std::uint32_t e, int n,
             const std::vector<std::pair<std::vector<long>, std::optional<std::vector<std::vector<int>>>>>& cs) {
              auto f = FieldCtx::make(p, e);
              std::vector<PointConstraint> constraints;
              for (const auto& [poly, allowed] : cs) {
                  PointConstraint pc{poly_from_ints(f, poly), std::nullopt};
                  if (allowed) {
                      std::vector<Partition> ps;
                      for (const auto& a : *allowed) ps.push_back(partition_from(a));
                      pc.allowed = std::move(ps);
                  }
                  constraints.push_back(std::move(pc));
              }
              return frac(finite_n_event_prob(f, constraints, n));
          });

    m.def("exact_partition_prob",
          [](std::uint32_t p, std::uint32_t e, const std::vector<long>& poly, const std::vector<int>& parts, int n) {
              auto f = FieldCtx::make(p, e);
              return frac(exact_partition_prob(f, poly_from_ints(f, poly), partition_from(parts), n));
          });

    // spec_json: see event_spec_from_json for the schema
    m.def("enumerate_event", [](const std::string& spec_json, std::uint64_t guard, int workers) {
        auto spec = event_spec_from_json(Json::parse(spec_json));
        auto r = enumerate_event(spec, guard, workers);
        return py::make_tuple(big(r.hits), big(r.total));
    }, py::arg("spec_json"), py::arg("guard") = (1u << 24), py::arg("workers") = 1);

    m.def("mc_estimate", [](const std::string& spec_json, std::uint64_t samples, std::uint64_t seed, int workers,
                            std::uint32_t chunk_size) {
        auto spec = event_spec_from_json(Json::parse(spec_json));
        auto r = mc_estimate(spec, samples, seed, workers, chunk_size);
        return py::module_::import("json").attr("loads")(mc_result_json(r).dump());
    }, py::arg("spec_json"), py::arg("samples"), py::arg("seed"), py::arg("workers") = 1,
       py::arg("chunk_size") = 4096);

    m.def("run_verification", [](const std::vector<std::string>& suites, std::uint64_t samples, std::uint64_t seed) {
        VerifyOptions opts;
        opts.samples = samples;
        opts.seed = seed;
        auto results = run_verification(suites, opts);
        Json rows = Json::array();
        for (const auto& r : results)
            rows.push_back(Json{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed},
                                {"conjectural", r.conjectural}});
        return py::module_::import("json").attr("loads")(rows.dump());
    }, py::arg("suites"), py::arg("samples") = 20000, py::arg("seed") = 7);
}
