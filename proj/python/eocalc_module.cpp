// Python bindings for the main operations.  Everything that can overflow a
// machine word crosses the boundary as a decimal string; structured results
// cross as plain dicts/lists so the module has no custom types to pickle.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eocalc/bigint.hpp"
#include "eocalc/cyclic2.hpp"
#include "eocalc/errors.hpp"
#include "eocalc/f2poly.hpp"
#include "eocalc/hilbert.hpp"
#include "eocalc/koszul.hpp"
#include "eocalc/kzero.hpp"
#include "eocalc/moore.hpp"
#include "eocalc/relation_file.hpp"
#include "eocalc/steenrod.hpp"

#include <json.hpp>

namespace py = pybind11;

namespace {

// nlohmann::json -> native python objects, so callers get dicts, not strings
py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

} // namespace

PYBIND11_MODULE(eocalc, mod) {
    mod.doc() = "exact symbolic computation for cyclic-2-group truncated theories";

    py::register_exception<eocalc::ResourceLimitError>(mod, "ResourceLimitError");
    py::register_exception<eocalc::SchemaError>(mod, "SchemaError");
    py::register_exception<eocalc::NonExactDivisionError>(mod, "NonExactDivisionError");

    mod.def(
        "dimension",
        [](int n, int m) {
            eocalc::hilbert::HeightContext ctx(n, m);
            return eocalc::hilbert::dimension(ctx).str();
        },
        py::arg("n"), py::arg("m"),
        "total dimension of the mod-(2, v) quotient, as a decimal string");

    mod.def(
        "poincare_series",
        [](int n, int m) {
            eocalc::hilbert::HeightContext ctx(n, m);
            eocalc::hilbert::IntPolynomial p = eocalc::hilbert::poincare_series(ctx);
            std::vector<std::string> out;
            out.reserve(p.coeffs.size());
            for (const auto& c : p.coeffs) out.push_back(c.str());
            return out;
        },
        py::arg("n"), py::arg("m"),
        "coefficient list of the Poincare series, degree 0 upward, decimal strings");

    mod.def(
        "series_division_exact",
        [](int n, int m) {
            eocalc::hilbert::HeightContext ctx(n, m);
            return eocalc::hilbert::series_division_exact(ctx);
        },
        py::arg("n"), py::arg("m"),
        "whether the defining product divides exactly (certificate, no materialization)");

    mod.def(
        "gaussian_binomial",
        [](long long N, long long M) { return eocalc::hilbert::gaussian_binomial(N, M).str(); },
        py::arg("N"), py::arg("M"), "Gaussian binomial coefficient at q = 2, decimal string");

    mod.def(
        "orbits",
        [](int n) {
            eocalc::cyclic2::CyclicGroup g(n);
            py::list out;
            for (const auto& o : eocalc::cyclic2::orbit_decompose(g)) {
                std::string bits;
                for (int j = 0; j < g.coset_count(); ++j)
                    bits += o.representative.bit(j) ? '1' : '0';
                py::dict row;
                row["representative"] = bits;
                row["stabilizer_exponent"] = o.stabilizer_exponent;
                row["orbit_size"] = o.orbit_size;
                row["n_f"] = o.n_f;
                row["grading"] = o.grading;
                out.append(row);
            }
            return out;
        },
        py::arg("n"), "marking orbits of C_{2^n}, sorted by grading");

    mod.def(
        "filtration",
        [](int n, long long k_deg) {
            return json_to_py(eocalc::koszul::to_json(eocalc::koszul::associated_graded(n, k_deg), n));
        },
        py::arg("n"), py::arg("k_deg") = 1, "associated-graded layer table");

    mod.def(
        "k0_relation",
        [](int n, long long k_deg) {
            return json_to_py(eocalc::kzero::to_json(eocalc::kzero::quotient_relation(n, k_deg)));
        },
        py::arg("n"), py::arg("k_deg") = 1, "K0 relation for the Euler-class quotient, with trace");

    mod.def(
        "height_drop",
        [](int n) {
            py::list out;
            for (const auto& rel : eocalc::kzero::derive_height_drop(n))
                out.append(json_to_py(eocalc::kzero::to_json(rel)));
            return out;
        },
        py::arg("n"), "mod-torsion height-drop relations for exponents 1..n");

    mod.def(
        "moore_gate",
        [](const std::vector<long long>& exponents) {
            eocalc::moore::MooreShape shape(exponents);
            return json_to_py(eocalc::moore::to_json(eocalc::moore::moore_gate(shape)));
        },
        py::arg("exponents"), "divisibility gate for a generalized Moore shape");

    mod.def(
        "steenrod_conjugates",
        [](int m) {
            auto table = eocalc::f2poly::steenrod_table(m);
            std::vector<std::string> out;
            for (const auto& z : eocalc::f2poly::steenrod_conjugates(m))
                out.push_back(eocalc::f2poly::to_string(table, z));
            return out;
        },
        py::arg("m"), "rendered antipodes zeta_1 .. zeta_{2m} in the truncated dual algebra");

    mod.def(
        "nilpotence",
        [](const std::string& path, const std::string& generator) {
            eocalc::f2poly::RelationFile file = eocalc::f2poly::load_relation_file(path);
            return eocalc::f2poly::generator_nilpotent(file, generator);
        },
        py::arg("path"), py::arg("generator"),
        "whether the named generator is nilpotent mod the file's truncation ideal");

    mod.def(
        "regularity",
        [](const std::string& path) {
            eocalc::f2poly::RelationFile file = eocalc::f2poly::load_relation_file(path);
            eocalc::hilbert::HeightContext ctx(file.group_n, file.m);
            eocalc::f2poly::RegularityReport r = eocalc::f2poly::verify_regularity(ctx, file);
            py::dict out;
            out["finite_quotient"] = r.finite_quotient;
            out["quotient_dimension"] = r.quotient_dimension;
            out["sequence_length"] = r.sequence_length;
            out["generator_count"] = r.generator_count;
            out["expected_length"] = r.expected_length;
            out["regular"] = r.ok();
            return out;
        },
        py::arg("path"), "regular-sequence report for a relation file");
}
