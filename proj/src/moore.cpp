#include "eocalc/moore.hpp"

#include <stdexcept>

namespace eocalc::moore {

MooreShape::MooreShape(std::vector<long long> exps) : exponents(std::move(exps)) {
    if (exponents.empty()) throw std::invalid_argument("MooreShape: needs at least one exponent");
    for (long long e : exponents) {
        if (e < 1) throw std::invalid_argument("MooreShape: exponents must be >= 1");
    }
}

BigInt euler_characteristic(const HomotopyTable& table) {
    if (table.prime < 2) throw std::invalid_argument("euler_characteristic: invalid prime");
    BigInt chi = 0;
    for (const auto& [degree, order] : table.orders) {
        if (order < 1) throw std::invalid_argument("euler_characteristic: group order must be >= 1");
        BigInt rest = order;
        long long log = 0;
        while (rest > 1 && rest % table.prime == 0) {
            rest /= table.prime;
            ++log;
        }
        if (rest != 1) {
            throw std::invalid_argument("euler_characteristic: order in degree " +
                                        std::to_string(degree) + " is not a power of the prime");
        }
        if (degree % 2 == 0) chi += log; else chi -= log;
    }
    return chi;
}

BigInt chi_bp(const MooreShape& shape) {
    BigInt prod = 1;
    for (long long e : shape.exponents) prod *= e;
    return prod;
}

BigInt chi_eo(const hilbert::HeightContext& ctx, const MooreShape& shape) {
    if (shape.h() != ctx.h()) {
        throw std::invalid_argument("chi_eo: shape height " + std::to_string(shape.h()) +
                                    " does not match the context height " + std::to_string(ctx.h()));
    }
    return hilbert::dimension(ctx) * chi_bp(shape);
}

BigInt divisibility_bound(long long h) {
    if (h < 1) throw std::invalid_argument("divisibility_bound: h must be >= 1");
    return pow2(nu2(BigInt(h)) + 1);
}

Verdict moore_gate(const MooreShape& shape) {
    if (shape.h() < 1) throw std::invalid_argument("moore_gate: shape must have height >= 1");
    Verdict v;
    v.nu2_product = nu2(chi_bp(shape));
    v.nu2_h = nu2(BigInt(shape.h()));
    v.bound = divisibility_bound(shape.h());
    v.status = v.nu2_product <= v.nu2_h ? Status::RuledOut : Status::NotRuledOut;
    return v;
}

std::string to_string(const Verdict& v) {
    std::string out = v.status == Status::RuledOut ? "RuledOut" : "NotRuledOut";
    out += " (nu2(product) = " + std::to_string(v.nu2_product);
    out += ", nu2(h) = " + std::to_string(v.nu2_h);
    out += ", bound = " + v.bound.str() + ")";
    if (v.status == Status::NotRuledOut) out += " [existence not implied]";
    return out;
}

nlohmann::json to_json(const Verdict& v) {
    return {{"status", v.status == Status::RuledOut ? "RuledOut" : "NotRuledOut"},
            {"nu2_product", v.nu2_product},
            {"nu2_h", v.nu2_h},
            {"bound", v.bound.str()},
            {"existence_implied", false}};
}

} // namespace eocalc::moore
