#pragma once

// Exact multivariate polynomial arithmetic over F2, with Buchberger's
// algorithm, ideal membership, radical membership via a slack variable,
// and staircase counting for quotient dimensions.
//
// A term over F2 is just its exponent vector (coefficient 1 encoded by
// presence), so a Polynomial is a cancellation-closed set of exponent
// vectors kept sorted descending under the active monomial order.  All
// operations take that order explicitly; mixing orders between values is
// a caller bug.

#include <cstddef>
#include <string>
#include <vector>

namespace eocalc::f2poly {

using Exponents = std::vector<unsigned>;

struct GeneratorTable {
    std::vector<std::string> names;
    std::vector<long long> degrees; // halved-degree convention, degree of t_i is 2^i - 1

    // gamma acts as a signed permutation: generator i maps to sign * generator `to`.
    // Signs cancel over F2 but are kept for validation and serialization.
    struct ActionImage {
        int to = -1;
        int sign = 1;
    };
    std::vector<ActionImage> action; // empty = trivial action

    std::size_t arity() const { return names.size(); }
    int index_of(const std::string& name) const; // -1 if absent
};

struct MonomialOrder {
    enum class Kind { GrevlexWeighted, Lex };
    Kind kind = Kind::GrevlexWeighted;
    std::vector<long long> weights; // per-generator degrees for the graded comparison
};

// grevlex refined by the generator degrees (the library-wide default)
MonomialOrder default_order(const GeneratorTable& table);

long long weighted_degree(const MonomialOrder& ord, const Exponents& e);
bool monomial_less(const MonomialOrder& ord, const Exponents& a, const Exponents& b);
bool monomial_divides(const Exponents& a, const Exponents& b); // a | b
Exponents monomial_mul(const Exponents& a, const Exponents& b);
Exponents monomial_quotient(const Exponents& num, const Exponents& den);
Exponents monomial_lcm(const Exponents& a, const Exponents& b);

struct Polynomial {
    std::vector<Exponents> terms; // sorted descending under the active order

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Polynomial& o) const { return terms == o.terms; }
    bool operator<(const Polynomial& o) const { return terms < o.terms; }
};

// canonicalize: sort descending, cancel duplicate terms mod 2
Polynomial make_poly(const MonomialOrder& ord, std::vector<Exponents> terms);
Polynomial add(const MonomialOrder& ord, const Polynomial& a, const Polynomial& b);
Polynomial mul_monomial(const MonomialOrder& ord, const Polynomial& p, const Exponents& m);
Polynomial mul(const MonomialOrder& ord, const Polynomial& a, const Polynomial& b);
const Exponents& leading_term(const Polynomial& p); // throws on zero
bool is_homogeneous(const MonomialOrder& ord, const Polynomial& p);
long long degree(const MonomialOrder& ord, const Polynomial& p); // max term degree, -1 for 0

// apply gamma^power through the table's signed permutation (signs vanish mod 2)
Polynomial apply_action(const GeneratorTable& table, const MonomialOrder& ord,
                        const Polynomial& p, int power = 1);

struct IdealSpec {
    GeneratorTable table;
    std::vector<Polynomial> generators;
    MonomialOrder order;
};

struct Limits {
    long long max_monomial_degree = 1'000'000; // weighted degree of any computed term
    std::size_t max_basis = 4096;
    std::size_t max_pair_steps = 1'000'000;
    long long max_quotient_dim = 1 << 22;
    int nilpotence_power_cap = 64; // bounded-power fast path checks p^e for e <= cap
};

// unique reduced Groebner basis, sorted ascending by leading term.
// Idempotent and independent of generator order; throws ResourceLimitError
// when a cap is hit (never silently truncates).
std::vector<Polynomial> groebner(const IdealSpec& ideal, const Limits& limits = {});

struct DivisionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients; // aligned with the divisor list
};

// multivariate division: p = sum quotients[k] * basis[k] + remainder, with no
// remainder term divisible by any divisor leading term
DivisionResult divide(const MonomialOrder& ord, const Polynomial& p,
                      const std::vector<Polynomial>& basis, const Limits& limits = {});

bool in_ideal(const Polynomial& p, const IdealSpec& ideal, const Limits& limits = {});

// nilpotence of p in table-ring / ideal: bounded-power fast path, then the
// slack-variable radical membership test (1 + z*p adjoined, check 1 in ideal)
bool is_nilpotent(const Polynomial& p, const IdealSpec& ideal, const Limits& limits = {});

struct QuotientDimension {
    bool finite = false;
    long long value = 0; // meaningful only when finite
};

// F2-dimension of table-ring / ideal by counting staircase standard monomials;
// infinite iff some generator has no pure power among the leading terms
QuotientDimension quotient_dim(const IdealSpec& ideal, const Limits& limits = {});

// "t1^3*t2 + 1" style; terms split on '+', factors on '*', powers with '^'
Polynomial parse_polynomial(const GeneratorTable& table, const MonomialOrder& ord,
                            const std::string& text);
std::string to_string(const GeneratorTable& table, const Polynomial& p);

} // namespace eocalc::f2poly
