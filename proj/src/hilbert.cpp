#include "eocalc/hilbert.hpp"

#include <stdexcept>
#include <string>

#include "eocalc/errors.hpp"

namespace eocalc::hilbert {

HeightContext::HeightContext(int group_exponent, int truncation)
    : n(group_exponent), m(truncation) {
    if (n < 1 || n > 20) throw std::invalid_argument("HeightContext: group exponent out of range [1, 20]");
    if (m < 0 || m > 64) throw std::invalid_argument("HeightContext: truncation out of range [0, 64]");
}

void IntPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

BigInt IntPolynomial::sum() const {
    BigInt total = 0;
    for (const BigInt& c : coeffs) total += c;
    return total;
}

BigInt gaussian_binomial(long long N, long long M) {
    if (N < 0 || M < 0) throw std::invalid_argument("gaussian_binomial: negative argument");
    if (N > 4096 || M > 4096) throw ResourceLimitError("gaussian_binomial: argument beyond 4096");
    if (M > N) return 0;
    // (1 - 2^{N-t}) / (1 - 2^{t+1}) for t = 0..M-1; the M sign flips cancel
    BigInt num = 1;
    BigInt den = 1;
    for (long long t = 0; t < M; ++t) {
        num *= pow2(N - t) - 1;
        den *= pow2(t + 1) - 1;
    }
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("gaussian_binomial: product formula did not divide exactly");
    if (!is_odd(q)) throw std::logic_error("gaussian_binomial: nonzero value came out even");
    return q;
}

namespace {

// in place, descending: multiply by (1 - x^k)
void multiply_binomial(std::vector<BigInt>& p, long long& deg, long long k) {
    for (long long j = deg + k; j >= k; --j) p[static_cast<std::size_t>(j)] -= p[static_cast<std::size_t>(j - k)];
    deg += k;
}

// in place, ascending: divide by (1 - x^k); the top k coefficients must vanish
void divide_binomial(std::vector<BigInt>& p, long long& deg, long long k) {
    for (long long j = k; j <= deg; ++j) p[static_cast<std::size_t>(j)] += p[static_cast<std::size_t>(j - k)];
    for (long long j = deg - k + 1; j <= deg; ++j) {
        if (p[static_cast<std::size_t>(j)] != 0) {
            throw NonExactDivisionError("poincare_series: dividing by 1 - x^" + std::to_string(k) +
                                        " left a remainder");
        }
    }
    deg -= k;
}

long long numerator_degree(long long h) {
    // sum_{i=1}^{h} (2^i - 1) = 2^{h+1} - 2 - h
    if (h >= 62) return -1; // sentinel: past any sane cap
    return (1LL << (h + 1)) - 2 - h;
}

} // namespace

IntPolynomial poincare_series(const HeightContext& ctx, const SeriesLimits& limits) {
    long long h = ctx.h();
    long long D = numerator_degree(h);
    if (D < 0 || D > limits.max_numerator_degree) {
        throw ResourceLimitError("poincare_series: numerator degree for h = " + std::to_string(h) +
                                 " exceeds the cap " + std::to_string(limits.max_numerator_degree));
    }

    std::vector<BigInt> p(static_cast<std::size_t>(D) + 1, BigInt(0));
    p[0] = 1;
    long long deg = 0;
    for (long long i = 1; i <= h; ++i) multiply_binomial(p, deg, (1LL << i) - 1);

    long long copies = 1LL << (ctx.n - 1);
    for (long long i = 1; i <= ctx.m; ++i) {
        long long k = (1LL << i) - 1;
        for (long long c = 0; c < copies; ++c) divide_binomial(p, deg, k);
    }

    IntPolynomial out;
    out.coeffs.assign(p.begin(), p.begin() + static_cast<std::size_t>(deg) + 1);
    out.trim();
    for (const BigInt& c : out.coeffs) {
        if (c < 0) throw std::logic_error("poincare_series: negative coefficient in a dimension series");
    }
    return out;
}

bool series_division_exact(const HeightContext& ctx) {
    // 1 - x^K = -prod_{d | K} Phi_d(x).  Both sides have the same number of
    // binomial factors (h of them), so the signs cancel, and the quotient
    // is a Laurent-free product of cyclotomics iff every Phi_d appears at
    // least as often above as below.  Here K runs over 2^i - 1 and d | 2^i - 1
    // iff ord_d(2) | i, so the multiplicity of a fixed d with e = ord_d(2) is
    // floor(h/e) above and 2^{n-1} floor(m/e) below.  Every e in [1, m] is
    // realized (d = 2^e - 1), and e > m contributes nothing below.
    long long h = ctx.h();
    long long copies = 1LL << (ctx.n - 1);
    for (long long e = 1; e <= ctx.m; ++e) {
        if (h / e < copies * (ctx.m / e)) return false;
    }
    return true;
}

BigInt dimension_closed_form(const HeightContext& ctx) {
    BigInt num = 1;
    for (long long i = 1; i <= ctx.h(); ++i) num *= pow2(i) - 1;
    BigInt den = 1;
    for (long long i = 1; i <= ctx.m; ++i) den *= pow2(i) - 1;
    BigInt den_pow = 1;
    for (long long c = 0; c < (1LL << (ctx.n - 1)); ++c) den_pow *= den;
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den_pow, q, r);
    if (r != 0) throw std::logic_error("dimension_closed_form: factor-limit product did not divide exactly");
    return q;
}

BigInt dimension(const HeightContext& ctx, const SeriesLimits& limits) {
    BigInt closed = dimension_closed_form(ctx);
    long long D = numerator_degree(ctx.h());
    if (D >= 0 && D <= limits.max_numerator_degree) {
        BigInt summed = poincare_series(ctx, limits).sum();
        if (summed != closed)
            throw std::logic_error("dimension: series sum disagrees with the closed form");
    }
    if (!is_odd(closed)) throw std::logic_error("dimension: came out even");
    return closed;
}

BigInt gaussian_product(const HeightContext& ctx) {
    BigInt prod = 1;
    for (long long j = 0; j < (1LL << (ctx.n - 1)); ++j) {
        prod *= gaussian_binomial((j + 1) * ctx.m, ctx.m);
    }
    if (prod != dimension_closed_form(ctx))
        throw std::logic_error("gaussian_product: binomial product disagrees with the dimension");
    return prod;
}

std::string to_string(const IntPolynomial& p) {
    if (p.coeffs.empty()) return "0";
    std::string out;
    for (std::size_t d = 0; d < p.coeffs.size(); ++d) {
        if (p.coeffs[d] == 0) continue;
        if (!out.empty()) out += " + ";
        bool unit = p.coeffs[d] == 1;
        if (!unit || d == 0) out += p.coeffs[d].str();
        if (d > 0) {
            if (!unit) out += "*";
            out += "x";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace eocalc::hilbert
