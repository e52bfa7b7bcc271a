#pragma once

// Formal K0 arithmetic on fixed-point classes of equivariant quotient
// modules.  An atom [M/(S)^{C_{2^k}}] carries an opaque module token, a
// conjugacy-normalized list of coned-off variable orbits S, the fixed
// subgroup, and a symbolic regular-representation suspension.  Expressions
// are integer combinations of atoms; relations between expressions carry a
// replayable trace of the rewrite rules that derived them.
//
// The two derived families: the quotient relation (the layer sum of the
// filtration, suspensions eliminated, top cell moved left) and the
// mod-torsion height drops 2^k [M^{C_{2^k}}] == [M^e].

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "eocalc/bigint.hpp"
#include "eocalc/hilbert.hpp"
#include "eocalc/koszul.hpp"

namespace eocalc::kzero {

struct K0Atom {
    std::string module_token = "M";
    std::vector<koszul::VariableOrbit> quotient_vars; // kept in conjugation normal form
    int fixed_exponent = 0;                           // the class is [ ... ^{C_{2^k}} ]
    std::vector<koszul::Suspension> suspension;       // empty = unsuspended

    auto key() const { return std::tie(module_token, fixed_exponent, quotient_vars, suspension); }
    bool operator==(const K0Atom& o) const { return key() == o.key(); }
    bool operator<(const K0Atom& o) const { return key() < o.key(); }
};

struct K0Expression {
    std::map<K0Atom, BigInt> terms; // never stores zero coefficients

    bool is_zero() const { return terms.empty(); }
    bool operator==(const K0Expression& o) const { return terms == o.terms; }
};

void add_term(K0Expression& expr, const K0Atom& atom, const BigInt& coeff);
K0Expression add(const K0Expression& a, const K0Expression& b);
K0Expression scale(const K0Expression& a, const BigInt& factor);

// one rewrite step; params are self-contained JSON so traces replay standalone
struct TraceStep {
    std::string rule;
    nlohmann::json params;
};

struct K0Relation {
    K0Expression lhs;
    K0Expression rhs;
    bool mod_torsion = false;
    int group_exponent = 1; // ambient G = C_{2^n}
    std::vector<TraceStep> trace;
};

// [(Sigma^{m rho_{C_{2^k}}} X)^{C_{2^k}}] at the atom's own subgroup:
// even m strips the suspension, odd m gives [X^{index-2 subgroup}] - [X^G]
// (quotient variables restricted along the way); at the trivial subgroup the
// suspension is ordinary and contributes the sign (-1)^m.  The atom must
// carry exactly its own subgroup's suspension (or none: identity).
K0Expression suspend_fixed_points(const K0Atom& atom, int ambient_exponent);

// The alternating isotropy-cell sum for [(Sigma^{m rho_G} X)^G] over
// G = C_{2^n}, iterated one rho_G at a time with restrictions expanded, no
// parity shortcuts; cancellation happens only by coefficient merging.
K0Expression raw_suspension_sum(int n, int m);

// 2[M^G] = [M^{G'}] + [M/(G.x)^G] + (layer terms), from the filtration layer
// sum with suspensions eliminated and the top cell moved left; k_deg must be
// odd (the suspension parities depend on it).
K0Relation quotient_relation(int n, long long k_deg);

// Mod torsion (every atom with a nonempty quotient list set to zero), the
// composed relations 2^k [M^{C_{2^k}}] == [M^e] for k = 1..n; group_exponent 0
// degenerates to the identity relation.
std::vector<K0Relation> derive_height_drop(int group_exponent);
std::vector<K0Relation> derive_height_drop(const hilbert::HeightContext& ctx);

struct NormalizeResult {
    K0Expression expression;
    bool flagged = false; // an atom carried a suspension below its own subgroup
};

// Eliminate all suspensions at-or-above each atom's fixed subgroup, restrict
// and renormalize quotient variables, merge coefficients.  Idempotent and
// linear.  Atoms with a suspension strictly below their fixed subgroup cannot
// be rewritten; they are kept as-is and flagged.
NormalizeResult normalize(const K0Expression& expr, int ambient_exponent);

// Euler-characteristic style conservation check: counting an atom at
// C_{2^j} with weight 2^{n-j} when its quotient list is empty and weight 0
// otherwise, both sides of the relation must agree.
bool rank_conserved(const K0Relation& rel);

// re-runs the trace from scratch and compares against the stored relation
bool replay_matches(const K0Relation& rel);

std::string to_string(const K0Atom& atom, int ambient_exponent);
std::string to_string(const K0Expression& expr, int ambient_exponent);
std::string to_string(const K0Relation& rel);
nlohmann::json to_json(const K0Atom& atom, int ambient_exponent);
nlohmann::json to_json(const K0Relation& rel);

} // namespace eocalc::kzero
