#include "eocalc/kzero.hpp"

#include <stdexcept>
#include <utility>

#include "eocalc/errors.hpp"

namespace eocalc::kzero {

void add_term(K0Expression& expr, const K0Atom& atom, const BigInt& coeff) {
    if (coeff == 0) return;
    auto it = expr.terms.find(atom);
    if (it == expr.terms.end()) {
        expr.terms.emplace(atom, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) expr.terms.erase(it);
}

K0Expression add(const K0Expression& a, const K0Expression& b) {
    K0Expression out = a;
    for (const auto& [atom, coeff] : b.terms) add_term(out, atom, coeff);
    return out;
}

K0Expression scale(const K0Expression& a, const BigInt& factor) {
    K0Expression out;
    if (factor == 0) return out;
    for (const auto& [atom, coeff] : a.terms) out.terms.emplace(atom, coeff * factor);
    return out;
}

namespace {

K0Atom plain_atom(int fixed_exponent) {
    K0Atom a;
    a.fixed_exponent = fixed_exponent;
    return a;
}

std::vector<koszul::VariableOrbit> restrict_vars(const std::vector<koszul::VariableOrbit>& vars,
                                                 int ambient, int target) {
    if (vars.empty()) return {};
    koszul::QuotientDescriptor desc{ambient, vars};
    return koszul::restrict_quotient(desc, target).vars;
}

K0Expression drop_quotient_atoms(const K0Expression& e) {
    K0Expression out;
    for (const auto& [atom, coeff] : e.terms) {
        if (atom.quotient_vars.empty()) out.terms.emplace(atom, coeff);
    }
    return out;
}

// [M^G] = sum over filtration layers of [(gr_f)^G], with the fixed points of
// each induced layer already rewritten down to the inducing subgroup
K0Expression layer_sum(int group_exponent, long long k_deg) {
    K0Expression rhs;
    for (const auto& [grading, summands] : koszul::associated_graded(group_exponent, k_deg)) {
        for (const auto& s : summands) {
            K0Atom a;
            a.fixed_exponent = s.induced_from;
            a.quotient_vars = s.quotient_vars;
            if (s.suspension.multiplier != 0) a.suspension.push_back(s.suspension);
            add_term(rhs, a, 1);
        }
    }
    return rhs;
}

std::pair<K0Expression, bool> normalize_atom(const K0Atom& atom, int ambient) {
    // a suspension strictly below the fixed subgroup has no rewrite; keep and flag
    for (const auto& s : atom.suspension) {
        if (s.rep_exponent < atom.fixed_exponent) {
            K0Expression keep;
            add_term(keep, atom, 1);
            return {keep, true};
        }
    }

    if (atom.suspension.empty()) {
        K0Atom canon = atom;
        if (!canon.quotient_vars.empty())
            canon.quotient_vars = restrict_vars(canon.quotient_vars, ambient, canon.fixed_exponent);
        K0Expression out;
        add_term(out, canon, 1);
        return {out, false};
    }

    K0Atom rest = atom;
    koszul::Suspension entry = rest.suspension.back();
    rest.suspension.pop_back();

    if (entry.rep_exponent > atom.fixed_exponent) {
        // restriction: rho of C_{2^r} restricted to C_{2^f} is 2^{r-f} regular reps
        int shift = entry.rep_exponent - atom.fixed_exponent;
        if (shift > 40) throw ResourceLimitError("normalize: suspension restriction overflows");
        entry.multiplier <<= shift;
        entry.rep_exponent = atom.fixed_exponent;
    }

    bool odd = entry.multiplier % 2 != 0;
    if (atom.fixed_exponent == 0) {
        auto [sub, flagged] = normalize_atom(rest, ambient);
        return {odd ? scale(sub, -1) : sub, flagged};
    }
    if (!odd) return normalize_atom(rest, ambient);

    K0Atom child = rest;
    child.fixed_exponent = atom.fixed_exponent - 1;
    auto [child_expr, fl1] = normalize_atom(child, ambient);
    auto [base_expr, fl2] = normalize_atom(rest, ambient);
    return {add(child_expr, scale(base_expr, -1)), fl1 || fl2};
}

BigInt rank_weight_sum(const K0Expression& e, int n) {
    BigInt sum = 0;
    for (const auto& [atom, coeff] : e.terms) {
        if (!atom.quotient_vars.empty()) continue;
        if (atom.fixed_exponent > n)
            throw std::logic_error("rank check: atom fixed above the ambient group");
        sum += coeff * pow2(n - atom.fixed_exponent);
    }
    return sum;
}

nlohmann::json expression_to_json(const K0Expression& expr, int ambient) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [atom, coeff] : expr.terms) {
        arr.push_back({{"coefficient", eocalc::to_string(coeff)}, {"atom", to_json(atom, ambient)}});
    }
    return arr;
}

K0Atom atom_from_json(const nlohmann::json& doc) {
    K0Atom a;
    a.module_token = doc.at("module").get<std::string>();
    a.fixed_exponent = doc.at("fixed_exponent").get<int>();
    for (const auto& v : doc.at("quotient_vars")) {
        koszul::VariableOrbit orbit;
        orbit.base_name = v.at("base").get<std::string>();
        orbit.acting_exponent = v.at("acting_exponent").get<int>();
        for (const auto& o : v.at("offsets")) orbit.offsets.push_back(o.get<int>());
        a.quotient_vars.push_back(std::move(orbit));
    }
    for (const auto& s : doc.at("suspension")) {
        a.suspension.push_back(koszul::Suspension{s.at("multiplier").get<long long>(),
                                                  s.at("rep_exponent").get<int>()});
    }
    return a;
}

K0Expression expression_from_json(const nlohmann::json& doc) {
    K0Expression out;
    for (const auto& term : doc) {
        add_term(out, atom_from_json(term.at("atom")),
                 BigInt(term.at("coefficient").get<std::string>()));
    }
    return out;
}

} // namespace

K0Expression suspend_fixed_points(const K0Atom& atom, int ambient_exponent) {
    K0Expression out;
    if (atom.suspension.empty()) {
        add_term(out, atom, 1);
        return out;
    }
    if (atom.suspension.size() != 1 ||
        atom.suspension[0].rep_exponent != atom.fixed_exponent) {
        throw std::invalid_argument(
            "suspend_fixed_points: suspension subgroup does not match the atom's subgroup");
    }
    long long mult = atom.suspension[0].multiplier;
    K0Atom base = atom;
    base.suspension.clear();
    if (atom.fixed_exponent == 0) {
        // ordinary suspension: a sign per suspension
        add_term(out, base, mult % 2 == 0 ? 1 : -1);
        return out;
    }
    if (mult % 2 == 0) {
        add_term(out, base, 1);
        return out;
    }
    K0Atom child = base;
    child.fixed_exponent = atom.fixed_exponent - 1;
    child.quotient_vars = restrict_vars(base.quotient_vars, ambient_exponent, child.fixed_exponent);
    add_term(out, child, 1);
    add_term(out, base, -1);
    return out;
}

K0Expression raw_suspension_sum(int n, int m) {
    if (n < 0 || n > 10) throw std::invalid_argument("raw_suspension_sum: group exponent out of range [0, 10]");
    if (m < 0) throw std::invalid_argument("raw_suspension_sum: suspension count must be >= 0");

    // state (kappa, t) = [(Sigma^{t rho_{C_{2^kappa}}} M)^{C_{2^kappa}}], expanded by the
    // isotropy cell structure of rho one suspension at a time
    std::map<std::pair<int, long long>, K0Expression> memo;
    auto expand = [&](auto&& self, int kappa, long long t) -> const K0Expression& {
        auto key = std::make_pair(kappa, t);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        K0Expression out;
        if (t == 0) {
            add_term(out, plain_atom(kappa), 1);
        } else if (kappa == 0) {
            add_term(out, plain_atom(0), t % 2 == 0 ? 1 : -1);
        } else {
            // one rho peels off: -[previous] + the subgroup cells, where the cell
            // at C_{2^{kappa-i}} carries the remaining suspension restricted
            // ((t-1) rho becomes (t-1) 2^i copies)
            out = scale(self(self, kappa, t - 1), -1);
            for (int i = 1; i <= kappa; ++i) {
                long long child_t = (t - 1) << i;
                for (long long j = (1LL << (i - 1)) + 1; j <= (1LL << i); ++j) {
                    out = add(out, scale(self(self, kappa - i, child_t), j % 2 == 0 ? 1 : -1));
                }
            }
        }
        return memo.emplace(std::move(key), std::move(out)).first->second;
    };
    return expand(expand, n, m);
}

NormalizeResult normalize(const K0Expression& expr, int ambient_exponent) {
    NormalizeResult res;
    for (const auto& [atom, coeff] : expr.terms) {
        auto [part, flagged] = normalize_atom(atom, ambient_exponent);
        res.flagged = res.flagged || flagged;
        res.expression = add(res.expression, scale(part, coeff));
    }
    return res;
}

K0Relation quotient_relation(int n, long long k_deg) {
    if (n < 1) throw std::invalid_argument("quotient_relation: group exponent must be >= 1");
    if (k_deg < 1 || k_deg % 2 == 0)
        throw std::invalid_argument("quotient_relation: k_deg must be odd (even parities collapse the suspension sides)");

    K0Relation rel;
    rel.group_exponent = n;
    add_term(rel.lhs, plain_atom(n), 1);
    rel.rhs = layer_sum(n, k_deg);
    rel.trace.push_back({"koszul_layers",
                         {{"group_exponent", n}, {"k_deg", k_deg}}});

    NormalizeResult norm = normalize(rel.rhs, n);
    if (norm.flagged)
        throw std::logic_error("quotient_relation: a layer atom resisted suspension elimination");
    rel.rhs = norm.expression;
    rel.trace.push_back({"eliminate_suspension", {{"group_exponent", n}}});

    // the top cell contributed -[M^G]; move it across the equals sign
    K0Atom top = plain_atom(n);
    rel.trace.push_back({"move_to_lhs", {{"atom", to_json(top, n)}}});
    auto it = rel.rhs.terms.find(top);
    if (it != rel.rhs.terms.end()) {
        BigInt c = it->second;
        rel.rhs.terms.erase(it);
        add_term(rel.lhs, top, -c);
    }

    if (!rank_conserved(rel))
        throw std::logic_error("quotient_relation: rank conservation failed");
    return rel;
}

std::vector<K0Relation> derive_height_drop(int group_exponent) {
    if (group_exponent < 0 || group_exponent > 12)
        throw std::invalid_argument("derive_height_drop: group exponent out of range [0, 12]");

    std::vector<K0Relation> out;
    if (group_exponent == 0) {
        K0Relation triv;
        triv.group_exponent = 0;
        triv.mod_torsion = true;
        add_term(triv.lhs, plain_atom(0), 1);
        add_term(triv.rhs, plain_atom(0), 1);
        triv.trace.push_back({"identity", {{"atom", to_json(plain_atom(0), 0)}}});
        out.push_back(triv);
        return out;
    }

    for (int k = 1; k <= group_exponent; ++k) {
        // 2[M^{C_{2^k}}] == [M^{C_{2^{k-1}}}]: the level-k quotient relation with
        // every quotient atom declared torsion
        K0Relation rel = quotient_relation(k, 1);
        rel.mod_torsion = true;
        rel.lhs = drop_quotient_atoms(rel.lhs);
        rel.rhs = drop_quotient_atoms(rel.rhs);
        rel.trace.push_back({"drop_torsion", nlohmann::json::object()});

        if (k > 1) {
            // compose with 2^{k-1}[M^{C_{2^{k-1}}}] == [M^e]
            const K0Relation& prev = out.back();
            BigInt factor = pow2(k - 1);
            rel.lhs = scale(rel.lhs, factor);
            rel.rhs = scale(rel.rhs, factor);
            rel.trace.push_back({"scale", {{"factor", eocalc::to_string(factor)}}});

            K0Atom mid = plain_atom(k - 1);
            nlohmann::json params;
            params["atom"] = to_json(mid, rel.group_exponent);
            params["multiple"] = eocalc::to_string(factor);
            params["replacement"] = expression_to_json(prev.rhs, prev.group_exponent);
            add_term(rel.rhs, mid, -factor);
            rel.rhs = add(rel.rhs, prev.rhs);
            rel.trace.push_back({"rewrite_rhs_by_relation", params});
        }

        if (!rank_conserved(rel))
            throw std::logic_error("derive_height_drop: rank conservation failed");
        out.push_back(rel);
    }
    return out;
}

std::vector<K0Relation> derive_height_drop(const hilbert::HeightContext& ctx) {
    return derive_height_drop(ctx.n);
}

bool rank_conserved(const K0Relation& rel) {
    return rank_weight_sum(rel.lhs, rel.group_exponent) ==
           rank_weight_sum(rel.rhs, rel.group_exponent);
}

bool replay_matches(const K0Relation& rel) {
    K0Relation work;
    work.group_exponent = rel.group_exponent;
    try {
        for (const TraceStep& step : rel.trace) {
            if (step.rule == "koszul_layers") {
                int n = step.params.at("group_exponent").get<int>();
                long long k_deg = step.params.at("k_deg").get<long long>();
                work.lhs = K0Expression{};
                work.rhs = layer_sum(n, k_deg);
                add_term(work.lhs, plain_atom(n), 1);
            } else if (step.rule == "eliminate_suspension") {
                NormalizeResult norm =
                    normalize(work.rhs, step.params.at("group_exponent").get<int>());
                if (norm.flagged) return false;
                work.rhs = norm.expression;
            } else if (step.rule == "move_to_lhs") {
                K0Atom atom = atom_from_json(step.params.at("atom"));
                auto it = work.rhs.terms.find(atom);
                if (it != work.rhs.terms.end()) {
                    BigInt c = it->second;
                    work.rhs.terms.erase(it);
                    add_term(work.lhs, atom, -c);
                }
            } else if (step.rule == "drop_torsion") {
                work.lhs = drop_quotient_atoms(work.lhs);
                work.rhs = drop_quotient_atoms(work.rhs);
                work.mod_torsion = true;
            } else if (step.rule == "scale") {
                BigInt factor(step.params.at("factor").get<std::string>());
                work.lhs = scale(work.lhs, factor);
                work.rhs = scale(work.rhs, factor);
            } else if (step.rule == "rewrite_rhs_by_relation") {
                K0Atom atom = atom_from_json(step.params.at("atom"));
                BigInt multiple(step.params.at("multiple").get<std::string>());
                add_term(work.rhs, atom, -multiple);
                work.rhs = add(work.rhs, expression_from_json(step.params.at("replacement")));
            } else if (step.rule == "identity") {
                K0Atom atom = atom_from_json(step.params.at("atom"));
                work.lhs = K0Expression{};
                work.rhs = K0Expression{};
                add_term(work.lhs, atom, 1);
                add_term(work.rhs, atom, 1);
                work.mod_torsion = true;
            } else {
                return false;
            }
        }
    } catch (const std::exception&) {
        return false;
    }
    return work.lhs == rel.lhs && work.rhs == rel.rhs && work.mod_torsion == rel.mod_torsion;
}

std::string to_string(const K0Atom& atom, int ambient_exponent) {
    if (!atom.quotient_vars.empty() && ambient_exponent < 1)
        throw std::invalid_argument("K0Atom rendering needs an ambient group for quotient variables");
    std::string body;
    for (const auto& s : atom.suspension) body += koszul::to_string(s) + " ";
    body += atom.module_token;
    if (!atom.quotient_vars.empty()) {
        body += "/(";
        for (std::size_t i = 0; i < atom.quotient_vars.size(); ++i) {
            if (i) body += ", ";
            body += koszul::to_string(atom.quotient_vars[i], ambient_exponent);
        }
        body += ")";
    }
    return "[" + body + "^" + koszul::subgroup_name(atom.fixed_exponent) + "]";
}

std::string to_string(const K0Expression& expr, int ambient_exponent) {
    if (expr.is_zero()) return "0";
    std::string out;
    for (const auto& [atom, coeff] : expr.terms) {
        BigInt mag = coeff < 0 ? BigInt(-coeff) : coeff;
        if (out.empty()) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        if (mag != 1) out += eocalc::to_string(mag);
        out += to_string(atom, ambient_exponent);
    }
    return out;
}

std::string to_string(const K0Relation& rel) {
    std::string out = to_string(rel.lhs, rel.group_exponent) + " = " +
                      to_string(rel.rhs, rel.group_exponent);
    if (rel.mod_torsion) out += "  (mod torsion)";
    return out;
}

nlohmann::json to_json(const K0Atom& atom, int ambient_exponent) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : atom.quotient_vars) {
        vars.push_back({{"base", v.base_name},
                        {"acting_exponent", v.acting_exponent},
                        {"offsets", v.offsets}});
    }
    nlohmann::json susp = nlohmann::json::array();
    for (const auto& s : atom.suspension) {
        susp.push_back({{"multiplier", s.multiplier}, {"rep_exponent", s.rep_exponent}});
    }
    return {{"module", atom.module_token},
            {"fixed_exponent", atom.fixed_exponent},
            {"quotient_vars", vars},
            {"suspension", susp},
            {"display", to_string(atom, ambient_exponent < 1 ? 1 : ambient_exponent)}};
}

nlohmann::json to_json(const K0Relation& rel) {
    nlohmann::json trace = nlohmann::json::array();
    for (const TraceStep& step : rel.trace) {
        trace.push_back({{"rule", step.rule}, {"params", step.params}});
    }
    return {{"schema_version", 1},
            {"group", koszul::subgroup_name(rel.group_exponent)},
            {"group_exponent", rel.group_exponent},
            {"mod_torsion", rel.mod_torsion},
            {"lhs", expression_to_json(rel.lhs, rel.group_exponent)},
            {"rhs", expression_to_json(rel.rhs, rel.group_exponent)},
            {"display", to_string(rel)},
            {"trace", trace}};
}

} // namespace eocalc::kzero
