#pragma once

// Euler characteristics of generalized Moore spectra S/(2^{i_0}, v_1^{i_1},
// ..., v_h^{i_h}) against the height-h theories, and the 2-adic divisibility
// gate: the characteristic against the truncated Brown-Peterson theory is
// prod i_k, the fixed-point theory multiplies that by an odd dimension, and
// divisibility by 2^{nu2(h)+1} is forced -- so a shape whose exponent product
// is not at least that divisible cannot exist.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "eocalc/bigint.hpp"
#include "eocalc/hilbert.hpp"

namespace eocalc::moore {

struct MooreShape {
    std::vector<long long> exponents; // (i_0, ..., i_h), every entry >= 1

    explicit MooreShape(std::vector<long long> exps);
    long long h() const { return static_cast<long long>(exponents.size()) - 1; }
};

// finitely supported |pi_i| table of a smash product, all orders powers of p
struct HomotopyTable {
    long long prime = 2;
    std::map<long long, BigInt> orders; // degree -> order
};

// sum_i (-1)^i log_p |pi_i|; throws std::invalid_argument on a non-p-power order
BigInt euler_characteristic(const HomotopyTable& table);

// prod_{k=0}^{h} i_k
BigInt chi_bp(const MooreShape& shape);

// dimension(ctx) * prod i_k; the shape's height must equal ctx.h()
BigInt chi_eo(const hilbert::HeightContext& ctx, const MooreShape& shape);

// 2^{nu2(h)+1}: the forced divisibility of the height-h characteristic
BigInt divisibility_bound(long long h);

enum class Status { RuledOut, NotRuledOut };

struct Verdict {
    Status status = Status::NotRuledOut;
    long long nu2_product = 0; // nu2(prod i_k)
    long long nu2_h = 0;
    BigInt bound;              // divisibility_bound(h)
};

// RuledOut iff nu2(prod i_k) <= nu2(h).  NotRuledOut carries no existence
// claim -- the divisibility constraint is necessary, not sufficient.
Verdict moore_gate(const MooreShape& shape);

std::string to_string(const Verdict& v);
nlohmann::json to_json(const Verdict& v);

} // namespace eocalc::moore
