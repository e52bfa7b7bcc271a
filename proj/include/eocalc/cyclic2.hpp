#pragma once

// Combinatorics of the cyclic 2-group G = C_{2^n} acting on C2-equivariant
// markings.  Group elements are residues 0..2^n-1 with generator gamma = 1 and
// central involution sigma = 2^{n-1}.  A marking assigns a bit to each coset
// of C2 = <sigma>; there are 2^{n-1} such cosets and G permutes them through
// the rotation action of G/C2, so marking orbits are binary necklaces of
// length 2^{n-1}.

#include <cstdint>
#include <vector>

namespace eocalc::cyclic2 {

struct CyclicGroup {
    int n = 0; // |G| = 2^n

    explicit CyclicGroup(int n_);

    long long order() const { return 1LL << n; }
    // number of C2-cosets; markings are bit-vectors of this length (n >= 1)
    int coset_count() const { return 1 << (n - 1); }
    int sigma_residue() const { return 1 << (n - 1); }
};

// exponents k of the subgroup chain e = C_{2^0} < C_2 < ... < C_{2^n} = G
std::vector<int> subgroups(const CyclicGroup& g);

// Bit-vector over C2-cosets: bit j is the value on the coset {gamma^j, sigma*gamma^j}.
struct Marking {
    std::uint32_t bits = 0;
    int coset_count = 1;

    bool bit(int j) const { return (bits >> j) & 1u; }
    int weight() const; // number of cosets marked 1
    Marking rotated(int r) const;

    bool operator==(const Marking& o) const { return bits == o.bits && coset_count == o.coset_count; }
    // lexicographic on the bit sequence b_0, b_1, ..., read from coset 0
    bool lex_less(const Marking& o) const;
};

// all 2^{2^{n-1}} markings, ascending by bit pattern
std::vector<Marking> enumerate_markings(const CyclicGroup& g);

struct MarkingOrbit {
    Marking representative;  // lex-smallest bit-vector in the orbit
    int stabilizer_exponent; // H_f = C_{2^k}; always >= 1 since sigma fixes every marking
    long long orbit_size;    // == [G : H_f]
    long long n_f;           // |f^{-1}(1) / H_f|; 0 only for the constant-0 marking
    int grading;             // marked-coset count == |f^{-1}(1)| / 2
};

// Orbit decomposition of all markings, sorted by grading, then stabilizer
// exponent descending, then representative.  Every orbit satisfies
// orbit_size * |H_f| == |G| and grading == n_f * |H_f|/2.
std::vector<MarkingOrbit> orbit_decompose(const CyclicGroup& g);

} // namespace eocalc::cyclic2
