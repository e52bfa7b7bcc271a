#pragma once

// Poincare series and dimension bookkeeping for the quotient of the height-h
// truncated theory over G = C_{2^n} by (2, v_1, ..., v_h), in the halved
// grading where deg v_i = 2^i - 1:
//
//     f_m(x) = prod_{i=1}^{h} (1 - x^{2^i - 1})
//              / ( prod_{i=1}^{m} (1 - x^{2^i - 1}) )^{2^{n-1}},  h = 2^{n-1} m.
//
// The division is exact and the coefficients are F2-dimensions; the total
// dimension f_m(1) is always odd and equals a product of Gaussian binomials
// at q = 2.

#include <string>
#include <vector>

#include "eocalc/bigint.hpp"

namespace eocalc::hilbert {

struct HeightContext {
    int n = 1; // group exponent, G = C_{2^n}
    int m = 0; // truncation parameter

    HeightContext(int group_exponent, int truncation);
    long long h() const { return (1LL << (n - 1)) * m; }
};

// dense exact-integer polynomial, index = halved degree
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    void trim();
    long long degree() const { return static_cast<long long>(coeffs.size()) - 1; }
    BigInt sum() const;
    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }
};

struct SeriesLimits {
    // largest numerator degree the dense buffer may take; 2^18 admits every
    // context up to h = 16
    long long max_numerator_degree = 1LL << 18;
};

// Gaussian q-binomial at q = 2 by the exact product formula
//   (1 - 2^N)(1 - 2^{N-1}) ... (1 - 2^{N-M+1}) / ((1 - 2) ... (1 - 2^M));
// 0 when M > N, and odd whenever it is nonzero.
BigInt gaussian_binomial(long long N, long long M);

// The quotient polynomial itself, by sparse binomial multiplication and
// in-place exact division.  Throws ResourceLimitError past the degree cap and
// NonExactDivisionError if a division step leaves a remainder (an internal
// bug, never a valid context).
IntPolynomial poincare_series(const HeightContext& ctx, const SeriesLimits& limits = {});

// Certificate that the defining division is exact, independent of any buffer:
// 1 - x^{2^i - 1} factors into distinct cyclotomics, and the factor indexed by
// an order-e divisor appears floor(h/e) times above vs 2^{n-1} floor(m/e)
// times below; exactness is the termwise inequality (checked for every e).
bool series_division_exact(const HeightContext& ctx);

// f_m(1): coefficient sum of the series when the buffer fits the cap, else the
// closed form below; cross-asserted against each other in-cap, and always odd.
BigInt dimension(const HeightContext& ctx, const SeriesLimits& limits = {});

// prod_{i=1}^{h} (2^i - 1) / ( prod_{i=1}^{m} (2^i - 1) )^{2^{n-1}}, the
// factorwise limit of the series at x -> 1; the division is exact.
BigInt dimension_closed_form(const HeightContext& ctx);

// prod_{j=0}^{2^{n-1}-1} gaussian_binomial((j+1) m, m); equals dimension(ctx)
// (asserted) -- the factors regroup the closed form's product.
BigInt gaussian_product(const HeightContext& ctx);

// sparse rendering, "1 + x + x^2" style
std::string to_string(const IntPolynomial& p);

} // namespace eocalc::hilbert
