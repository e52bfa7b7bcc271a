#include "eocalc/steenrod.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "eocalc/errors.hpp"

namespace eocalc::f2poly {

GeneratorTable steenrod_table(int m) {
    if (m < 0 || m > 12) {
        throw std::invalid_argument("steenrod_table: m out of range [0, 12]");
    }
    GeneratorTable table;
    for (int i = 1; i <= m; ++i) {
        table.names.push_back("xi" + std::to_string(i));
        table.degrees.push_back((1LL << i) - 1);
    }
    return table;
}

std::vector<Polynomial> steenrod_conjugates(int m) {
    GeneratorTable table = steenrod_table(m);
    MonomialOrder ord = default_order(table);
    std::size_t arity = table.arity();

    auto xi_power = [&](int i, long long e) {
        // xi_i^e as a one-term polynomial (i in [1, m], e >= 1)
        Exponents mono(arity, 0);
        mono[static_cast<std::size_t>(i - 1)] = e;
        Polynomial p;
        p.terms.push_back(mono);
        return p;
    };

    Polynomial one;
    one.terms.emplace_back(arity, 0);

    // zetas[k] = zeta_k, zetas[0] = 1
    std::vector<Polynomial> zetas;
    zetas.push_back(one);
    for (int k = 1; k <= 2 * m; ++k) {
        // zeta_k = sum_{i=1}^{min(k,m)} xi_i^{2^{k-i}} * zeta_{k-i}
        Polynomial acc;
        int top = std::min(k, m);
        for (int i = 1; i <= top; ++i) {
            Polynomial term = mul(ord, xi_power(i, 1LL << (k - i)), zetas[static_cast<std::size_t>(k - i)]);
            acc = add(ord, acc, term);
        }
        long long want = (1LL << k) - 1;
        if (!acc.is_zero() && (!is_homogeneous(ord, acc) || degree(ord, acc) != want)) {
            throw std::logic_error("steenrod_conjugates: zeta_" + std::to_string(k) +
                                   " is not homogeneous of degree 2^k - 1");
        }
        zetas.push_back(std::move(acc));
    }

    zetas.erase(zetas.begin()); // drop zeta_0
    return zetas;
}

IdealSpec c4_mod2_presentation(int m) {
    IdealSpec spec;
    spec.table = steenrod_table(m);
    spec.order = default_order(spec.table);
    std::vector<Polynomial> zetas = steenrod_conjugates(m);
    for (int k = m + 1; k <= 2 * m; ++k) {
        spec.generators.push_back(zetas[static_cast<std::size_t>(k - 1)]);
    }
    return spec;
}

} // namespace eocalc::f2poly
