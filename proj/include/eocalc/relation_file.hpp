#pragma once

// Relation files: versioned JSON documents carrying the images of v_1..v_h in
// the truncation generators t_i and their conjugates, for a fixed group
// C_{2^n} and truncation m.  The recursion producing these images for n >= 2
// is external input; only small sample files ship with the library.
//
// Schema (schema_version 1):
//   {
//     "schema_version": 1,
//     "group_n": <int>, "m": <int>,
//     "generators":  [{"name": "t1", "degree": 1}, ...],
//     "action":      [{"to": "gt1", "sign": 1}, ...],   // gamma, per generator
//     "v_images":    [{"index": 1, "terms": [{"coefficient": 1, "exponents": [..]}]}, ...],
//     "extra_relations": [ [{"coefficient": 1, "exponents": [..]}], ... ],
//     "provenance":  "<free text>"
//   }
// Coefficients are integers reduced mod 2 on load (even terms drop out).

#include <string>
#include <vector>

#include <json.hpp>

#include "eocalc/bigint.hpp"
#include "eocalc/f2poly.hpp"
#include "eocalc/hilbert.hpp"

namespace eocalc::f2poly {

struct RelationFile {
    int schema_version = 1;
    int group_n = 1;
    int m = 0;
    GeneratorTable table;
    std::vector<Polynomial> v_images; // entry i-1 is the image of v_i
    std::vector<Polynomial> extra_relations;
    std::string provenance;

    long long h() const { return (1LL << (group_n - 1)) * m; }
};

// throws SchemaError: version, arity, degree, homogeneity (each v_i image must
// be homogeneous of degree 2^i - 1), action bijectivity, index contiguity
void validate(const RelationFile& file);

RelationFile relation_file_from_json(const nlohmann::json& doc); // validates
nlohmann::json relation_file_to_json(const RelationFile& file);
RelationFile load_relation_file(const std::string& path);
void save_relation_file(const RelationFile& file, const std::string& path);

// the ideal (v_1-image, ..., v_h-image) + extra relations, over the file's table
IdealSpec truncation_ideal(const RelationFile& file);

// Regularity via the Krull-dimension argument: the images form a regular
// sequence iff the quotient by all of them is finite-dimensional and the
// sequence is exactly as long as the number of polynomial generators.
struct RegularityReport {
    bool finite_quotient = false;
    bool length_matches = false;
    long long quotient_dimension = -1; // -1 when not finite
    long long sequence_length = 0;     // v-images supplied by the file
    long long generator_count = 0;     // polynomial generators in the table
    long long expected_length = 0;     // h from the context

    bool ok() const { return finite_quotient && length_matches; }
};

RegularityReport verify_regularity(const hilbert::HeightContext& ctx, const RelationFile& file,
                                   const Limits& limits = {});

// nilpotence of one named generator modulo the truncation ideal
bool generator_nilpotent(const RelationFile& file, const std::string& name,
                         const Limits& limits = {});

} // namespace eocalc::f2poly
