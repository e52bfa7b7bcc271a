#include "eocalc/koszul.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "eocalc/cyclic2.hpp"

namespace eocalc::koszul {

namespace {

int coset_span(int ambient_exponent) { return 1 << (ambient_exponent - 1); }

void check_orbit(const VariableOrbit& v, int n) {
    if (v.acting_exponent < 0 || v.acting_exponent > n)
        throw std::invalid_argument("variable orbit: acting exponent outside [0, ambient]");
    for (int o : v.offsets)
        if (o < 0 || o >= coset_span(n))
            throw std::invalid_argument("variable orbit: offset outside residue range");
}

// stride between conjugates inside one C_{2^k}-orbit; also the canonical offset modulus
int orbit_stride(int acting_exponent, int n) {
    return acting_exponent >= 1 ? (1 << (n - acting_exponent)) : coset_span(n);
}

} // namespace

std::vector<int> orbit_residues(const VariableOrbit& v, int n) {
    check_orbit(v, n);
    const int L = coset_span(n);
    const int stride = orbit_stride(v.acting_exponent, n);
    const int per_orbit = v.acting_exponent >= 1 ? (1 << (v.acting_exponent - 1)) : 1;
    std::set<int> rs;
    for (int o : v.offsets)
        for (int s = 0; s < per_orbit; ++s) rs.insert((o + s * stride) % L);
    return {rs.begin(), rs.end()};
}

namespace {

// regroup a residue set into orbits of C_{2^acting}, one offset per orbit
VariableOrbit regroup(const std::string& base, const std::vector<int>& residues,
                      int acting, int n) {
    const int mod = orbit_stride(acting, n);
    std::set<int> offsets;
    for (int r : residues) offsets.insert(r % mod);
    VariableOrbit out;
    out.base_name = base;
    out.acting_exponent = acting;
    out.offsets.assign(offsets.begin(), offsets.end());
    return out;
}

} // namespace

std::vector<VariableOrbit> conjugation_normal_form(std::vector<VariableOrbit> vars, int n) {
    const int L = coset_span(n);
    // canonical offsets + merge per (base, acting), without shifting yet
    auto canonicalize = [&](const std::vector<VariableOrbit>& in, int shift) {
        std::map<std::pair<std::string, int>, std::set<int>> merged;
        for (const auto& v : in) {
            const int mod = orbit_stride(v.acting_exponent, n);
            for (int r : orbit_residues(v, n))
                merged[{v.base_name, v.acting_exponent}].insert(((r + shift) % L) % mod);
        }
        std::vector<VariableOrbit> out;
        for (auto& [key, offs] : merged)
            out.push_back(VariableOrbit{key.first, key.second, {offs.begin(), offs.end()}});
        std::sort(out.begin(), out.end());
        return out;
    };

    std::vector<VariableOrbit> best = canonicalize(vars, 0);
    for (int c = 1; c < L; ++c) {
        auto cand = canonicalize(vars, c);
        if (cand < best) best = cand;
    }
    return best;
}

QuotientDescriptor restrict_quotient(const QuotientDescriptor& desc, int target_exponent) {
    const int n = desc.ambient_exponent;
    if (n < 1) throw std::invalid_argument("restrict_quotient: ambient exponent must be >= 1");
    if (target_exponent < 0 || target_exponent > n)
        throw std::invalid_argument("restrict_quotient: target outside subgroup chain");
    QuotientDescriptor out;
    out.ambient_exponent = n;
    for (const auto& v : desc.vars) {
        int acting = std::min(v.acting_exponent, target_exponent);
        out.vars.push_back(regroup(v.base_name, orbit_residues(v, n), acting, n));
    }
    out.vars = conjugation_normal_form(out.vars, n);
    return out;
}

LayerTable associated_graded(int group_exponent, long long k_deg) {
    if (k_deg < 1) throw std::invalid_argument("associated_graded: k_deg must be positive");
    cyclic2::CyclicGroup g(group_exponent);
    LayerTable table;
    for (const auto& orbit : cyclic2::orbit_decompose(g)) {
        LayerSummand s;
        s.grading = orbit.grading;
        s.induced_from = orbit.stabilizer_exponent;
        s.suspension = Suspension{orbit.n_f * k_deg, orbit.stabilizer_exponent};
        // quotient variables: unmarked cosets within one period of the representative,
        // read as cosets of H_f
        std::vector<int> offsets;
        for (long long j = 0; j < orbit.orbit_size; ++j)
            if (!orbit.representative.bit(static_cast<int>(j))) offsets.push_back(static_cast<int>(j));
        if (!offsets.empty())
            s.quotient_vars.push_back(
                VariableOrbit{"x", orbit.stabilizer_exponent, offsets});
        table[s.grading].push_back(s);
    }
    return table;
}

std::string subgroup_name(int exponent) {
    return exponent == 0 ? std::string("e") : "C" + std::to_string(1LL << exponent);
}

std::string to_string(const VariableOrbit& v, int n) {
    check_orbit(v, n);
    std::string out;
    const int per_orbit = v.acting_exponent >= 1 ? (1 << (v.acting_exponent - 1)) : 1;
    for (size_t i = 0; i < v.offsets.size(); ++i) {
        if (i) out += ", ";
        int o = v.offsets[i];
        std::string base = o == 0 ? v.base_name : "g" + (o == 1 ? "" : std::to_string(o)) + v.base_name;
        if (per_orbit > 1) out += subgroup_name(v.acting_exponent) + "." + base;
        else out += base;
    }
    return out;
}

std::string quotient_to_string(const std::vector<VariableOrbit>& vars, int n) {
    if (vars.empty()) return "M";
    std::string out = "M/(";
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ", ";
        out += to_string(vars[i], n);
    }
    return out + ")";
}

std::string to_string(const Suspension& s, long long) {
    if (s.multiplier == 0) return "";
    std::string mult = s.multiplier == 1 ? "" : std::to_string(s.multiplier);
    return "S[" + mult + "rho(" + subgroup_name(s.rep_exponent) + ")]";
}

std::string summand_to_string(const LayerSummand& s, int n) {
    std::string out;
    if (s.induced_from != n) out += "Ind[" + subgroup_name(s.induced_from) + "] ";
    std::string sus = to_string(s.suspension);
    if (!sus.empty()) out += sus + " ";
    out += quotient_to_string(s.quotient_vars, n);
    return out;
}

std::string layer_report(const LayerTable& table, int n) {
    std::string out;
    for (const auto& [grading, summands] : table) {
        out += "gr " + std::to_string(grading) + ": ";
        for (size_t i = 0; i < summands.size(); ++i) {
            if (i) out += " (+) ";
            out += summand_to_string(summands[i], n);
        }
        out += "\n";
    }
    return out;
}

nlohmann::json to_json(const LayerTable& table, int n) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [grading, summands] : table) {
        for (const auto& s : summands) {
            nlohmann::json vars = nlohmann::json::array();
            for (const auto& v : s.quotient_vars)
                vars.push_back({{"base", v.base_name},
                                {"acting", subgroup_name(v.acting_exponent)},
                                {"offsets", v.offsets}});
            rows.push_back({{"grading", grading},
                            {"induced_from", subgroup_name(s.induced_from)},
                            {"suspension",
                             {{"multiplier", s.suspension.multiplier},
                              {"rep", subgroup_name(s.suspension.rep_exponent)}}},
                            {"quotient_vars", vars},
                            {"display", summand_to_string(s, n)}});
        }
    }
    return {{"group", subgroup_name(n)}, {"rows", rows}};
}

} // namespace eocalc::koszul
