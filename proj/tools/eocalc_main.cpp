// eocalc: exact symbolic computations for the cyclic-2-group truncated
// theories -- quotient dimensions, Poincare series, filtration layer tables,
// K0 relations, the Moore-spectrum divisibility gate, and relation-file
// checks (nilpotence, regularity).
//
// Exit codes: 0 success; 1 mathematical verdict "false"/"ruled out";
// 2 usage or input error; 3 resource limit hit; 70 internal error.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

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

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 70;

// "C8" -> 3; the group is named by its order, which must be a power of two
int parse_group(const std::string& name) {
    if (name.size() < 2 || (name[0] != 'C' && name[0] != 'c'))
        throw CLI::ValidationError("--group", "expected C<order>, e.g. C4");
    long long order = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw CLI::ValidationError("--group", "expected C<order>, e.g. C4");
        order = order * 10 + (name[i] - '0');
        if (order > (1LL << 20)) throw CLI::ValidationError("--group", "group too large");
    }
    if (order < 2 || (order & (order - 1)) != 0)
        throw CLI::ValidationError("--group", "group order must be a power of two >= 2");
    int n = 0;
    while ((1LL << n) < order) ++n;
    return n;
}

void emit(const json& doc, const std::string& format, const std::string& table_text) {
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << table_text;
    }
}

std::string group_label(int n) { return eocalc::koszul::subgroup_name(n); }

int run_dim(int n, int m, const std::string& format) {
    eocalc::hilbert::HeightContext ctx(n, m);
    eocalc::BigInt d = eocalc::hilbert::dimension(ctx);
    json doc{{"schema_version", 1},
             {"command", "dim"},
             {"group", group_label(n)},
             {"m", m},
             {"h", ctx.h()},
             {"dimension", d.str()}};
    emit(doc, format, d.str() + "\n");
    return kExitTrue;
}

int run_series(int n, int m, const std::string& format) {
    eocalc::hilbert::HeightContext ctx(n, m);
    eocalc::hilbert::IntPolynomial p = eocalc::hilbert::poincare_series(ctx);
    json coeffs = json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(c.str());
    json doc{{"schema_version", 1},
             {"command", "series"},
             {"group", group_label(n)},
             {"m", m},
             {"h", ctx.h()},
             {"degree", p.degree()},
             {"coefficients", coeffs},
             {"coefficient_sum", p.sum().str()}};
    emit(doc, format, eocalc::hilbert::to_string(p) + "\n");
    return kExitTrue;
}

int run_binom(long long N, long long M, const std::string& format) {
    eocalc::BigInt v = eocalc::hilbert::gaussian_binomial(N, M);
    json doc{{"schema_version", 1},
             {"command", "binom"},
             {"N", N},
             {"M", M},
             {"value", v.str()}};
    emit(doc, format, v.str() + "\n");
    return kExitTrue;
}

int run_filtration(int n, long long k_deg, const std::string& format) {
    auto table = eocalc::koszul::associated_graded(n, k_deg);
    json doc = eocalc::koszul::to_json(table, n);
    doc["schema_version"] = 1;
    doc["command"] = "filtration";
    doc["k_deg"] = k_deg;
    emit(doc, format, eocalc::koszul::layer_report(table, n));
    return kExitTrue;
}

int run_orbits(int n, const std::string& format) {
    eocalc::cyclic2::CyclicGroup g(n);
    auto orbits = eocalc::cyclic2::orbit_decompose(g);
    json rows = json::array();
    std::string text;
    for (const auto& o : orbits) {
        std::string bits;
        for (int j = 0; j < g.coset_count(); ++j) bits += o.representative.bit(j) ? '1' : '0';
        rows.push_back({{"representative", bits},
                        {"stabilizer", group_label(o.stabilizer_exponent)},
                        {"orbit_size", o.orbit_size},
                        {"n_f", o.n_f},
                        {"grading", o.grading}});
        text += "grading " + std::to_string(o.grading) + ": rep " + bits + ", stabilizer " +
                group_label(o.stabilizer_exponent) + ", orbit size " + std::to_string(o.orbit_size) +
                ", n_f " + std::to_string(o.n_f) + "\n";
    }
    json doc{{"schema_version", 1},
             {"command", "orbits"},
             {"group", group_label(n)},
             {"orbit_count", orbits.size()},
             {"orbits", rows}};
    emit(doc, format, text);
    return kExitTrue;
}

int run_k0(int n, long long k_deg, bool height_drop, const std::string& format) {
    if (height_drop) {
        auto rels = eocalc::kzero::derive_height_drop(n);
        json arr = json::array();
        std::string text;
        for (const auto& rel : rels) {
            arr.push_back(eocalc::kzero::to_json(rel));
            text += eocalc::kzero::to_string(rel) + "\n";
        }
        json doc{{"schema_version", 1},
                 {"command", "k0"},
                 {"group", group_label(n)},
                 {"height_drop", true},
                 {"relations", arr}};
        emit(doc, format, text);
        return kExitTrue;
    }
    eocalc::kzero::K0Relation rel = eocalc::kzero::quotient_relation(n, k_deg);
    json doc = eocalc::kzero::to_json(rel);
    doc["schema_version"] = 1;
    doc["command"] = "k0";
    doc["height_drop"] = false;
    std::string text = eocalc::kzero::to_string(rel) + "\n";
    text += "trace:";
    for (const auto& step : rel.trace) text += " " + step.rule;
    text += "\n";
    emit(doc, format, text);
    return kExitTrue;
}

int run_moore(const std::string& exponents_csv, const std::string& format) {
    std::vector<long long> exps;
    std::string token;
    for (char c : exponents_csv + ",") {
        if (c == ',') {
            if (token.empty()) throw CLI::ValidationError("--exponents", "expected comma-separated integers");
            exps.push_back(std::stoll(token));
            token.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            token += c;
        } else {
            throw CLI::ValidationError("--exponents", "expected comma-separated integers");
        }
    }
    eocalc::moore::MooreShape shape(exps);
    eocalc::moore::Verdict v = eocalc::moore::moore_gate(shape);
    json doc = eocalc::moore::to_json(v);
    doc["schema_version"] = 1;
    doc["command"] = "moore";
    doc["exponents"] = shape.exponents;
    doc["h"] = shape.h();
    doc["chi_bp"] = eocalc::moore::chi_bp(shape).str();
    emit(doc, format, eocalc::moore::to_string(v) + "\n");
    return v.status == eocalc::moore::Status::RuledOut ? kExitFalse : kExitTrue;
}

int run_nilpotence(const std::string& path, const std::string& generator, const std::string& format) {
    eocalc::f2poly::RelationFile file = eocalc::f2poly::load_relation_file(path);
    std::vector<std::string> names;
    if (!generator.empty()) {
        names.push_back(generator);
    } else {
        names = file.table.names;
    }
    json rows = json::array();
    std::string text;
    bool all = true;
    for (const auto& name : names) {
        bool nil = eocalc::f2poly::generator_nilpotent(file, name);
        all = all && nil;
        rows.push_back({{"generator", name}, {"nilpotent", nil}});
        text += name + ": " + (nil ? "nilpotent" : "not nilpotent") + "\n";
    }
    json doc{{"schema_version", 1},
             {"command", "nilpotence"},
             {"relations", path},
             {"group", group_label(file.group_n)},
             {"m", file.m},
             {"results", rows},
             {"all_nilpotent", all}};
    emit(doc, format, text);
    return all ? kExitTrue : kExitFalse;
}

int run_regularity(const std::string& path, const std::string& format) {
    eocalc::f2poly::RelationFile file = eocalc::f2poly::load_relation_file(path);
    eocalc::hilbert::HeightContext ctx(file.group_n, file.m);
    eocalc::f2poly::RegularityReport r = eocalc::f2poly::verify_regularity(ctx, file);
    json doc{{"schema_version", 1},
             {"command", "regularity"},
             {"relations", path},
             {"group", group_label(file.group_n)},
             {"m", file.m},
             {"finite_quotient", r.finite_quotient},
             {"quotient_dimension", r.quotient_dimension},
             {"sequence_length", r.sequence_length},
             {"generator_count", r.generator_count},
             {"expected_length", r.expected_length},
             {"regular", r.ok()}};
    std::string text = std::string("regular: ") + (r.ok() ? "yes" : "no") + "\n";
    text += "  finite quotient: " + std::string(r.finite_quotient ? "yes" : "no");
    if (r.finite_quotient) text += " (dimension " + std::to_string(r.quotient_dimension) + ")";
    text += "\n  sequence length " + std::to_string(r.sequence_length) + ", generators " +
            std::to_string(r.generator_count) + ", expected " + std::to_string(r.expected_length) + "\n";
    emit(doc, format, text);
    return r.ok() ? kExitTrue : kExitFalse;
}

int run_steenrod(int m, bool with_dim, const std::string& format) {
    auto table = eocalc::f2poly::steenrod_table(m);
    auto zetas = eocalc::f2poly::steenrod_conjugates(m);
    eocalc::f2poly::IdealSpec pres = eocalc::f2poly::c4_mod2_presentation(m);
    json zeta_rows = json::array();
    std::string text;
    for (std::size_t k = 0; k < zetas.size(); ++k) {
        std::string s = eocalc::f2poly::to_string(table, zetas[k]);
        zeta_rows.push_back({{"index", k + 1}, {"polynomial", s}});
        text += "zeta" + std::to_string(k + 1) + " = " + s + "\n";
    }
    json ideal_rows = json::array();
    text += "presentation ideal:";
    for (const auto& p : pres.generators) {
        std::string s = eocalc::f2poly::to_string(table, p);
        ideal_rows.push_back(s);
        text += " " + s + ";";
    }
    text += "\n";
    json doc{{"schema_version", 1},
             {"command", "steenrod"},
             {"m", m},
             {"conjugates", zeta_rows},
             {"presentation_ideal", ideal_rows}};
    if (with_dim) {
        auto qd = eocalc::f2poly::quotient_dim(pres);
        doc["quotient_dimension"] = qd.finite ? json(qd.value) : json("infinite");
        text += "quotient dimension: " +
                (qd.finite ? std::to_string(qd.value) : std::string("infinite")) + "\n";
    }
    emit(doc, format, text);
    return kExitTrue;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic computation for cyclic-2-group truncated theories"};
    app.require_subcommand(1);

    std::string group = "C2";
    int m = 1;
    long long N = 0, M = 0;
    long long k_deg = 1;
    bool height_drop = false;
    bool with_dim = false;
    std::string exponents;
    std::string relations_path;
    std::string generator;
    std::string format = "table";

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
    };

    CLI::App* dim = app.add_subcommand("dim", "dimension of the mod-(2, v) quotient");
    dim->add_option("--group", group, "group, e.g. C4")->required();
    dim->add_option("--m", m, "truncation parameter")->required();
    add_format(dim);

    CLI::App* series = app.add_subcommand("series", "Poincare series of the quotient");
    series->add_option("--group", group)->required();
    series->add_option("--m", m)->required();
    add_format(series);

    CLI::App* binom = app.add_subcommand("binom", "Gaussian binomial at q = 2");
    binom->add_option("--N", N)->required();
    binom->add_option("--M", M)->required();
    add_format(binom);

    CLI::App* filtration = app.add_subcommand("filtration", "associated-graded layer table");
    filtration->add_option("--group", group)->required();
    filtration->add_option("--kdeg", k_deg, "rho_2-degree of the filtered variable (odd)");
    add_format(filtration);

    CLI::App* orbits = app.add_subcommand("orbits", "marking orbits of the group");
    orbits->add_option("--group", group)->required();
    add_format(orbits);

    CLI::App* k0 = app.add_subcommand("k0", "K0 quotient relation / height drops");
    k0->add_option("--group", group)->required();
    k0->add_option("--kdeg", k_deg, "suspension degree parameter (odd)");
    k0->add_flag("--height-drop", height_drop, "derive the mod-torsion height-drop relations");
    add_format(k0);

    CLI::App* moore = app.add_subcommand("moore", "Moore-spectrum divisibility gate");
    moore->add_option("--exponents", exponents, "comma-separated shape (i0, i1, ..., ih)")->required();
    add_format(moore);

    CLI::App* nilpotence = app.add_subcommand("nilpotence", "generator nilpotence mod the truncation ideal");
    nilpotence->add_option("--relations", relations_path, "relation file (JSON)")->required();
    nilpotence->add_option("--generator", generator, "single generator name (default: all)");
    add_format(nilpotence);

    CLI::App* regularity = app.add_subcommand("regularity", "regular-sequence check for a relation file");
    regularity->add_option("--relations", relations_path, "relation file (JSON)")->required();
    add_format(regularity);

    CLI::App* steenrod = app.add_subcommand("steenrod", "dual Steenrod conjugates and the finite presentation");
    steenrod->add_option("--m", m, "truncation parameter")->required();
    steenrod->add_flag("--quotient-dim", with_dim, "also compute the presentation's quotient dimension");
    add_format(steenrod);

    try {
        app.parse(argc, argv);
        if (dim->parsed()) return run_dim(parse_group(group), m, format);
        if (series->parsed()) return run_series(parse_group(group), m, format);
        if (binom->parsed()) return run_binom(N, M, format);
        if (filtration->parsed()) return run_filtration(parse_group(group), k_deg, format);
        if (orbits->parsed()) return run_orbits(parse_group(group), format);
        if (k0->parsed()) return run_k0(parse_group(group), k_deg, height_drop, format);
        if (moore->parsed()) return run_moore(exponents, format);
        if (nilpotence->parsed()) return run_nilpotence(relations_path, generator, format);
        if (regularity->parsed()) return run_regularity(relations_path, format);
        if (steenrod->parsed()) return run_steenrod(m, with_dim, format);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitTrue : kExitUsage;
    } catch (const eocalc::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const eocalc::SchemaError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
