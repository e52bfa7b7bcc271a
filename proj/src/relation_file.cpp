#include "eocalc/relation_file.hpp"

#include <fstream>
#include <set>
#include <string>

#include "eocalc/errors.hpp"

namespace eocalc::f2poly {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw SchemaError("relation file: " + msg);
}

Polynomial poly_from_terms(const nlohmann::json& term_list, const MonomialOrder& ord,
                           std::size_t arity, const std::string& where) {
    require(term_list.is_array(), where + ": terms must be an array");
    std::vector<Exponents> kept;
    for (const auto& term : term_list) {
        require(term.is_object() && term.contains("coefficient") && term.contains("exponents"),
                where + ": each term needs coefficient and exponents");
        long long coeff = term.at("coefficient").get<long long>();
        const auto& exps = term.at("exponents");
        require(exps.is_array() && exps.size() == arity,
                where + ": exponents must match the generator count");
        if (coeff % 2 == 0) continue; // even coefficients vanish mod 2
        Exponents e;
        for (const auto& v : exps) {
            long long x = v.get<long long>();
            require(x >= 0 && x <= 1'000'000, where + ": exponent out of range");
            e.push_back(static_cast<unsigned>(x));
        }
        kept.push_back(std::move(e));
    }
    return make_poly(ord, std::move(kept));
}

nlohmann::json poly_to_terms(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Exponents& e : p.terms) {
        arr.push_back({{"coefficient", 1}, {"exponents", e}});
    }
    return arr;
}

} // namespace

void validate(const RelationFile& file) {
    require(file.schema_version == 1, "unsupported schema_version (expected 1)");
    require(file.group_n >= 1 && file.group_n <= 20, "group_n out of range [1, 20]");
    require(file.m >= 0 && file.m <= 64, "m out of range [0, 64]");

    const GeneratorTable& table = file.table;
    require(table.names.size() == table.degrees.size(), "generator names/degrees size mismatch");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < table.names.size(); ++i) {
        require(!table.names[i].empty(), "empty generator name");
        require(seen.insert(table.names[i]).second, "duplicate generator name " + table.names[i]);
        require(table.degrees[i] >= 1, "generator degree must be positive");
    }
    if (!table.action.empty()) {
        require(table.action.size() == table.names.size(), "action arity mismatch");
        std::set<int> targets;
        for (std::size_t i = 0; i < table.action.size(); ++i) {
            const auto& img = table.action[i];
            require(img.to >= 0 && img.to < static_cast<int>(table.names.size()),
                    "action target out of range");
            require(img.sign == 1 || img.sign == -1, "action sign must be +-1");
            require(targets.insert(img.to).second, "action is not a permutation");
            require(table.degrees[static_cast<std::size_t>(img.to)] == table.degrees[i],
                    "action must preserve degrees");
        }
    }

    MonomialOrder ord = default_order(table);
    require(file.v_images.size() <= 62, "too many v-images");
    for (std::size_t i = 0; i < file.v_images.size(); ++i) {
        const Polynomial& p = file.v_images[i];
        long long want = (1LL << (i + 1)) - 1; // deg v_{i+1} = 2^{i+1} - 1
        require(!p.is_zero(), "v_" + std::to_string(i + 1) + " image is zero");
        require(is_homogeneous(ord, p) && degree(ord, p) == want,
                "v_" + std::to_string(i + 1) + " image must be homogeneous of degree " +
                    std::to_string(want));
    }
    for (const Polynomial& p : file.extra_relations) {
        require(!p.is_zero(), "extra relation is zero");
    }
}

RelationFile relation_file_from_json(const nlohmann::json& doc) {
    require(doc.is_object(), "document must be a JSON object");
    for (const char* key : {"schema_version", "group_n", "m", "generators", "v_images"}) {
        require(doc.contains(key), std::string("missing field ") + key);
    }

    RelationFile file;
    file.schema_version = doc.at("schema_version").get<int>();
    file.group_n = doc.at("group_n").get<int>();
    file.m = doc.at("m").get<int>();

    const auto& gens = doc.at("generators");
    require(gens.is_array() && !gens.empty(), "generators must be a nonempty array");
    for (const auto& g : gens) {
        require(g.is_object() && g.contains("name") && g.contains("degree"),
                "each generator needs name and degree");
        file.table.names.push_back(g.at("name").get<std::string>());
        file.table.degrees.push_back(g.at("degree").get<long long>());
    }
    if (doc.contains("action")) {
        const auto& act = doc.at("action");
        require(act.is_array(), "action must be an array");
        for (const auto& a : act) {
            require(a.is_object() && a.contains("to") && a.contains("sign"),
                    "each action entry needs to and sign");
            GeneratorTable::ActionImage img;
            img.to = file.table.index_of(a.at("to").get<std::string>());
            require(img.to >= 0, "action target is not a generator name");
            img.sign = a.at("sign").get<int>();
            file.table.action.push_back(img);
        }
    }

    MonomialOrder ord = default_order(file.table);
    const auto& images = doc.at("v_images");
    require(images.is_array(), "v_images must be an array");
    file.v_images.resize(images.size());
    std::set<long long> indices;
    for (const auto& entry : images) {
        require(entry.is_object() && entry.contains("index") && entry.contains("terms"),
                "each v_images entry needs index and terms");
        long long idx = entry.at("index").get<long long>();
        require(idx >= 1 && idx <= static_cast<long long>(images.size()),
                "v_images indices must be 1..count");
        require(indices.insert(idx).second, "duplicate v_images index");
        file.v_images[static_cast<std::size_t>(idx - 1)] =
            poly_from_terms(entry.at("terms"), ord, file.table.arity(),
                            "v_" + std::to_string(idx));
    }
    if (doc.contains("extra_relations")) {
        for (const auto& terms : doc.at("extra_relations")) {
            file.extra_relations.push_back(
                poly_from_terms(terms, ord, file.table.arity(), "extra relation"));
        }
    }
    if (doc.contains("provenance")) file.provenance = doc.at("provenance").get<std::string>();

    validate(file);
    return file;
}

nlohmann::json relation_file_to_json(const RelationFile& file) {
    nlohmann::json doc;
    doc["schema_version"] = file.schema_version;
    doc["group_n"] = file.group_n;
    doc["m"] = file.m;
    doc["generators"] = nlohmann::json::array();
    for (std::size_t i = 0; i < file.table.names.size(); ++i) {
        doc["generators"].push_back({{"name", file.table.names[i]},
                                     {"degree", file.table.degrees[i]}});
    }
    doc["action"] = nlohmann::json::array();
    for (const auto& img : file.table.action) {
        doc["action"].push_back({{"to", file.table.names[static_cast<std::size_t>(img.to)]},
                                 {"sign", img.sign}});
    }
    doc["v_images"] = nlohmann::json::array();
    for (std::size_t i = 0; i < file.v_images.size(); ++i) {
        doc["v_images"].push_back({{"index", i + 1}, {"terms", poly_to_terms(file.v_images[i])}});
    }
    doc["extra_relations"] = nlohmann::json::array();
    for (const Polynomial& p : file.extra_relations) {
        doc["extra_relations"].push_back(poly_to_terms(p));
    }
    doc["provenance"] = file.provenance;
    return doc;
}

RelationFile load_relation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("relation file: cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("relation file: invalid JSON in " + path + ": " + e.what());
    }
    return relation_file_from_json(doc);
}

void save_relation_file(const RelationFile& file, const std::string& path) {
    validate(file);
    std::ofstream out(path);
    if (!out) throw SchemaError("relation file: cannot write " + path);
    out << relation_file_to_json(file).dump(2) << "\n";
}

IdealSpec truncation_ideal(const RelationFile& file) {
    IdealSpec spec;
    spec.table = file.table;
    spec.order = default_order(file.table);
    for (const Polynomial& p : file.v_images) {
        if (!p.is_zero()) spec.generators.push_back(p);
    }
    for (const Polynomial& p : file.extra_relations) {
        if (!p.is_zero()) spec.generators.push_back(p);
    }
    return spec;
}

RegularityReport verify_regularity(const hilbert::HeightContext& ctx, const RelationFile& file,
                                   const Limits& limits) {
    if (ctx.n != file.group_n || ctx.m != file.m) {
        throw std::invalid_argument("verify_regularity: context does not match the relation file");
    }

    RegularityReport report;
    report.sequence_length = static_cast<long long>(file.v_images.size());
    report.generator_count = static_cast<long long>(file.table.arity());
    report.expected_length = ctx.h();
    // a maximal regular sequence in a polynomial ring is as long as its Krull
    // dimension, i.e. the number of variables
    report.length_matches = report.sequence_length == report.generator_count &&
                            report.sequence_length == report.expected_length;

    QuotientDimension qd = quotient_dim(truncation_ideal(file), limits);
    report.finite_quotient = qd.finite;
    report.quotient_dimension = qd.finite ? qd.value : -1;
    return report;
}

bool generator_nilpotent(const RelationFile& file, const std::string& name, const Limits& limits) {
    int idx = file.table.index_of(name);
    if (idx < 0) throw std::invalid_argument("generator_nilpotent: unknown generator " + name);
    Exponents e(file.table.arity(), 0);
    e[static_cast<std::size_t>(idx)] = 1;
    Polynomial p;
    p.terms.push_back(std::move(e));
    return is_nilpotent(p, truncation_ideal(file), limits);
}

} // namespace eocalc::f2poly
