#pragma once

// Associated-graded layer tables for the equivariant slope filtration of a
// quotient module M/x over G = C_{2^n}.  Each marking orbit contributes one
// summand: a module induced from the orbit stabilizer H_f, suspended by
// n_f*k copies of the regular representation of H_f, with quotient variables
// indexed by the unmarked H_f-cosets.
//
// Variables: the G-conjugates of x are gamma^r * x for r in [0, 2^{n-1});
// conjugating by sigma only flips a sign, which vanishes in the F2 world
// these tables feed.  An orbit of conjugates under C_{2^k} (k >= 1) is the
// residue set { o + s * 2^{n-k} mod 2^{n-1} }, written "C_{2^k}.gamma^o x".

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace eocalc::koszul {

struct VariableOrbit {
    std::string base_name = "x";
    int acting_exponent = 1;  // orbits of C_{2^k}; 0 means plain (restricted) variables
    std::vector<int> offsets; // canonical coset offsets, sorted ascending

    auto key() const { return std::tie(base_name, acting_exponent, offsets); }
    bool operator==(const VariableOrbit& o) const { return key() == o.key(); }
    bool operator<(const VariableOrbit& o) const { return key() < o.key(); }
};

struct Suspension {
    long long multiplier = 0; // number of regular-representation copies
    int rep_exponent = 0;     // the representation is rho of C_{2^rep_exponent}

    auto key() const { return std::tie(multiplier, rep_exponent); }
    bool operator==(const Suspension& o) const { return key() == o.key(); }
    bool operator<(const Suspension& o) const { return key() < o.key(); }
};

struct LayerSummand {
    int grading = 0;
    int induced_from = 0;     // stabilizer exponent k, summand is induced from C_{2^k}
    Suspension suspension;    // multiplier n_f * k_deg at rep_exponent = induced_from
    std::vector<VariableOrbit> quotient_vars;
};

// grading -> summands (a grading can carry several summands from n = 3 on)
using LayerTable = std::map<int, std::vector<LayerSummand>>;

// Layer table for G = C_{2^n} and odd-degree parameter k_deg >= 1.
// One summand per marking orbit; gradings run 0 .. 2^{n-1}.
LayerTable associated_graded(int group_exponent, long long k_deg);

// A quotient module presentation M/(orbits) inside ambient G = C_{2^n}.
struct QuotientDescriptor {
    int ambient_exponent = 1;
    std::vector<VariableOrbit> vars;
};

// Re-express the quotient variables as orbits of the subgroup C_{2^target}:
// each orbit splits into [C_{2^k} : C_{2^target}] suborbits.  target 0 yields
// plain variables (an ordinary iterated cofiber).
QuotientDescriptor restrict_quotient(const QuotientDescriptor& desc, int target_exponent);

// Canonical form of a variable-orbit list under global conjugation: offsets are
// reduced to canonical range, equal orbits merged, and the whole list is shifted
// by the gamma-power that makes it lexicographically smallest.  Idempotent.
std::vector<VariableOrbit> conjugation_normal_form(std::vector<VariableOrbit> vars,
                                                   int ambient_exponent);

// full residue set covered by one orbit, ascending
std::vector<int> orbit_residues(const VariableOrbit& v, int ambient_exponent);

// "e", "C2", "C4", ... from the subgroup exponent
std::string subgroup_name(int exponent);

std::string to_string(const VariableOrbit& v, int ambient_exponent);
std::string quotient_to_string(const std::vector<VariableOrbit>& vars, int ambient_exponent);
std::string to_string(const Suspension& s, long long k_deg_hint = 0);
std::string summand_to_string(const LayerSummand& s, int ambient_exponent);

// one row per summand: grading, induced-from, suspension, quotient variables
std::string layer_report(const LayerTable& table, int ambient_exponent);
nlohmann::json to_json(const LayerTable& table, int ambient_exponent);

} // namespace eocalc::koszul
