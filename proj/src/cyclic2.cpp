#include "eocalc/cyclic2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "eocalc/errors.hpp"

namespace eocalc::cyclic2 {

namespace {
// markings are enumerable only while 2^{coset count} stays desk-sized
void check_enumerable(const CyclicGroup& g) {
    if (g.coset_count() > 20)
        throw ResourceLimitError("marking enumeration needs 2^" +
                                 std::to_string(g.coset_count()) +
                                 " bit-vectors; refusing above 2^20");
}
} // namespace

CyclicGroup::CyclicGroup(int n_) : n(n_) {
    if (n < 1 || n > 20)
        throw std::invalid_argument("CyclicGroup: exponent must be in [1, 20]");
}

std::vector<int> subgroups(const CyclicGroup& g) {
    std::vector<int> out(static_cast<size_t>(g.n) + 1);
    for (int k = 0; k <= g.n; ++k) out[static_cast<size_t>(k)] = k;
    return out;
}

int Marking::weight() const {
    std::uint32_t mask = (1u << coset_count) - 1u;
    return std::popcount(bits & mask);
}

Marking Marking::rotated(int r) const {
    int L = coset_count;
    r = ((r % L) + L) % L;
    std::uint32_t mask = (1u << L) - 1u;
    if (r == 0) return Marking{bits & mask, L};
    // coset j maps to coset j + r, so bit j of the result comes from bit j - r
    std::uint32_t b = ((bits << r) | ((bits & mask) >> (L - r))) & mask;
    return Marking{b, L};
}

bool Marking::lex_less(const Marking& o) const {
    for (int j = 0; j < coset_count; ++j)
        if (bit(j) != o.bit(j)) return !bit(j);
    return false;
}

std::vector<Marking> enumerate_markings(const CyclicGroup& g) {
    check_enumerable(g);
    int L = g.coset_count();
    std::vector<Marking> out;
    out.reserve(1u << L);
    for (std::uint32_t b = 0; b < (1u << L); ++b) out.push_back(Marking{b, L});
    return out;
}

std::vector<MarkingOrbit> orbit_decompose(const CyclicGroup& g) {
    check_enumerable(g);
    const int L = g.coset_count();
    std::vector<MarkingOrbit> orbits;
    std::vector<bool> seen(1u << L, false);

    for (const Marking& f : enumerate_markings(g)) {
        if (seen[f.bits]) continue;
        // walk the rotation orbit, finding the lex-min representative and the period
        Marking rep = f;
        int period = L;
        for (int r = 1; r <= L; ++r) {
            Marking h = f.rotated(r);
            seen[h.bits] = true;
            if (h.lex_less(rep)) rep = h;
            if (h == f && r < period) period = r;
        }
        // rotation stabilizer has order L / period; H_f also contains sigma,
        // so |H_f| = 2 * (L / period) = 2^k
        int stab_order_on_cosets = L / period;
        int k = 1;
        while ((1 << k) < 2 * stab_order_on_cosets) ++k;

        MarkingOrbit mo;
        mo.representative = rep;
        mo.stabilizer_exponent = k;
        mo.orbit_size = period;
        mo.grading = f.weight();
        // n_f = |f^{-1}(1)| / |H_f| = 2*weight / 2^k = weight / stab_order_on_cosets
        mo.n_f = f.weight() / stab_order_on_cosets;
        if (mo.n_f * stab_order_on_cosets != f.weight())
            throw std::logic_error("orbit_decompose: weight not divisible by stabilizer order");
        if (mo.orbit_size * (1LL << k) != g.order())
            throw std::logic_error("orbit_decompose: orbit-stabilizer mismatch");
        if (mo.grading != mo.n_f * (1LL << (k - 1)))
            throw std::logic_error("orbit_decompose: grading mismatch");
        orbits.push_back(mo);
    }

    std::sort(orbits.begin(), orbits.end(), [](const MarkingOrbit& a, const MarkingOrbit& b) {
        if (a.grading != b.grading) return a.grading < b.grading;
        if (a.stabilizer_exponent != b.stabilizer_exponent)
            return a.stabilizer_exponent > b.stabilizer_exponent;
        return a.representative.lex_less(b.representative);
    });
    return orbits;
}

} // namespace eocalc::cyclic2
