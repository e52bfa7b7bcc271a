#include "eocalc/f2poly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

#include "eocalc/errors.hpp"

namespace eocalc::f2poly {

int GeneratorTable::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

MonomialOrder default_order(const GeneratorTable& table) {
    return MonomialOrder{MonomialOrder::Kind::GrevlexWeighted, table.degrees};
}

long long weighted_degree(const MonomialOrder& ord, const Exponents& e) {
    long long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        long long w = i < ord.weights.size() ? ord.weights[i] : 1;
        d += w * e[i];
    }
    return d;
}

bool monomial_less(const MonomialOrder& ord, const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw std::invalid_argument("monomial_less: arity mismatch");
    if (ord.kind == MonomialOrder::Kind::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    long long da = weighted_degree(ord, a), db = weighted_degree(ord, b);
    if (da != db) return da < db;
    // grevlex tie-break: smaller is the one with the LARGER exponent at the
    // last position where they differ
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

bool monomial_divides(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw std::invalid_argument("monomial_divides: arity mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents monomial_mul(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw std::invalid_argument("monomial_mul: arity mismatch");
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
        if (out[i] < a[i]) throw std::overflow_error("monomial_mul: exponent overflow");
    }
    return out;
}

Exponents monomial_quotient(const Exponents& num, const Exponents& den) {
    if (!monomial_divides(den, num))
        throw std::invalid_argument("monomial_quotient: not divisible");
    Exponents out(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) out[i] = num[i] - den[i];
    return out;
}

Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

Polynomial make_poly(const MonomialOrder& ord, std::vector<Exponents> terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const Exponents& a, const Exponents& b) { return monomial_less(ord, b, a); });
    Polynomial out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2) out.terms.push_back(terms[i]); // mod-2 cancellation
        i = j;
    }
    return out;
}

Polynomial add(const MonomialOrder& ord, const Polynomial& a, const Polynomial& b) {
    // symmetric difference of two descending term lists
    Polynomial out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        if (a.terms[i] == b.terms[j]) {
            ++i, ++j;
        } else if (monomial_less(ord, b.terms[j], a.terms[i])) {
            out.terms.push_back(a.terms[i++]);
        } else {
            out.terms.push_back(b.terms[j++]);
        }
    }
    out.terms.insert(out.terms.end(), a.terms.begin() + i, a.terms.end());
    out.terms.insert(out.terms.end(), b.terms.begin() + j, b.terms.end());
    return out;
}

Polynomial mul_monomial(const MonomialOrder&, const Polynomial& p, const Exponents& m) {
    Polynomial out;
    out.terms.reserve(p.terms.size());
    for (const auto& t : p.terms) out.terms.push_back(monomial_mul(t, m));
    return out; // multiplying by a fixed monomial preserves the descending sort
}

Polynomial mul(const MonomialOrder& ord, const Polynomial& a, const Polynomial& b) {
    std::vector<Exponents> acc;
    acc.reserve(a.terms.size() * b.terms.size());
    for (const auto& s : a.terms)
        for (const auto& t : b.terms) acc.push_back(monomial_mul(s, t));
    return make_poly(ord, std::move(acc));
}

const Exponents& leading_term(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("leading_term of zero polynomial");
    return p.terms.front();
}

bool is_homogeneous(const MonomialOrder& ord, const Polynomial& p) {
    if (p.is_zero()) return true;
    long long d = weighted_degree(ord, p.terms.front());
    for (const auto& t : p.terms)
        if (weighted_degree(ord, t) != d) return false;
    return true;
}

long long degree(const MonomialOrder& ord, const Polynomial& p) {
    long long d = -1;
    for (const auto& t : p.terms) d = std::max(d, weighted_degree(ord, t));
    return d;
}

Polynomial apply_action(const GeneratorTable& table, const MonomialOrder& ord,
                        const Polynomial& p, int power) {
    if (table.action.empty()) return p;
    if (table.action.size() != table.arity())
        throw std::invalid_argument("apply_action: action arity mismatch");
    std::vector<Exponents> acc;
    for (const auto& t : p.terms) {
        Exponents cur = t;
        for (int step = 0; step < power; ++step) {
            Exponents next(cur.size(), 0u);
            for (std::size_t i = 0; i < cur.size(); ++i) {
                int to = table.action[i].to;
                if (to < 0 || static_cast<std::size_t>(to) >= cur.size())
                    throw std::invalid_argument("apply_action: image out of range");
                next[static_cast<std::size_t>(to)] += cur[i];
            }
            cur = std::move(next);
        }
        acc.push_back(std::move(cur));
    }
    return make_poly(ord, std::move(acc));
}

namespace {

void check_degree_cap(const MonomialOrder& ord, const Exponents& e, const Limits& limits) {
    if (weighted_degree(ord, e) > limits.max_monomial_degree)
        throw ResourceLimitError("polynomial degree cap " +
                                 std::to_string(limits.max_monomial_degree) + " exceeded");
}

} // namespace

DivisionResult divide(const MonomialOrder& ord, const Polynomial& p,
                      const std::vector<Polynomial>& basis, const Limits& limits) {
    DivisionResult out;
    out.quotients.resize(basis.size());
    Polynomial work = p;
    while (!work.is_zero()) {
        const Exponents& lt = leading_term(work);
        check_degree_cap(ord, lt, limits);
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            if (!monomial_divides(leading_term(basis[k]), lt)) continue;
            Exponents shift = monomial_quotient(lt, leading_term(basis[k]));
            out.quotients[k].terms.push_back(shift); // re-sorted at exit
            work = add(ord, work, mul_monomial(ord, basis[k], shift));
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder.terms.push_back(lt); // strictly decreasing, stays sorted
            work.terms.erase(work.terms.begin());
        }
    }
    for (auto& q : out.quotients) q = make_poly(ord, std::move(q.terms));
    return out;
}

namespace {

Polynomial normal_form(const MonomialOrder& ord, const Polynomial& p,
                       const std::vector<Polynomial>& basis, const Limits& limits) {
    return divide(ord, p, basis, limits).remainder;
}

Polynomial s_polynomial(const MonomialOrder& ord, const Polynomial& a, const Polynomial& b) {
    Exponents l = monomial_lcm(leading_term(a), leading_term(b));
    return add(ord, mul_monomial(ord, a, monomial_quotient(l, leading_term(a))),
               mul_monomial(ord, b, monomial_quotient(l, leading_term(b))));
}

} // namespace

std::vector<Polynomial> groebner(const IdealSpec& ideal, const Limits& limits) {
    const MonomialOrder& ord = ideal.order;
    std::vector<Polynomial> basis;
    for (const auto& g : ideal.generators) {
        if (g.terms.empty()) continue;
        for (const auto& t : g.terms)
            if (t.size() != ideal.table.arity())
                throw std::invalid_argument("groebner: generator arity mismatch");
        Polynomial p = make_poly(ord, g.terms);
        if (!p.is_zero()) basis.push_back(std::move(p));
    }
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    // deterministic starting order regardless of caller shuffling
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monomial_less(ord, leading_term(a), leading_term(b));
    });

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    std::size_t steps = 0;
    while (!pairs.empty()) {
        if (++steps > limits.max_pair_steps)
            throw ResourceLimitError("groebner: pair step cap exceeded");
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Exponents &li = leading_term(basis[i]), &lj = leading_term(basis[j]);
        // Buchberger's coprimality criterion
        if (monomial_lcm(li, lj) == monomial_mul(li, lj)) continue;
        Polynomial r = normal_form(ord, s_polynomial(ord, basis[i], basis[j]), basis, limits);
        if (r.is_zero()) continue;
        check_degree_cap(ord, leading_term(r), limits);
        basis.push_back(std::move(r));
        if (basis.size() > limits.max_basis)
            throw ResourceLimitError("groebner: basis size cap exceeded");
        for (std::size_t k = 0; k + 1 < basis.size(); ++k)
            pairs.emplace_back(k, basis.size() - 1);
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!monomial_divides(leading_term(basis[j]), leading_term(basis[i]))) continue;
            // on equal leading terms keep the earlier element
            if (leading_term(basis[j]) == leading_term(basis[i]) && j > i) continue;
            redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = normal_form(ord, minimal[i], others, limits);
            if (r.is_zero()) {
                minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            if (!(r == minimal[i])) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monomial_less(ord, leading_term(a), leading_term(b));
    });
    return minimal;
}

bool in_ideal(const Polynomial& p, const IdealSpec& ideal, const Limits& limits) {
    if (p.is_zero()) return true;
    auto basis = groebner(ideal, limits);
    return normal_form(ideal.order, make_poly(ideal.order, p.terms), basis, limits).is_zero();
}

bool is_nilpotent(const Polynomial& p, const IdealSpec& ideal, const Limits& limits) {
    Polynomial q = make_poly(ideal.order, p.terms);
    if (q.is_zero()) return true;
    auto basis = groebner(ideal, limits);

    // bounded-power fast path by repeated squaring of normal forms
    Polynomial s = normal_form(ideal.order, q, basis, limits);
    for (int e = 1; e <= limits.nilpotence_power_cap && !s.is_zero(); e *= 2) {
        if (2LL * degree(ideal.order, s) > limits.max_monomial_degree) break;
        s = normal_form(ideal.order, mul(ideal.order, s, s), basis, limits);
    }
    if (s.is_zero()) return true;

    // radical membership: adjoin z with 1 + z*p and test whether 1 lands in the ideal
    IdealSpec ext;
    ext.table = ideal.table;
    ext.table.names.push_back("_z");
    ext.table.degrees.push_back(1);
    ext.table.action.clear(); // the action plays no role here
    ext.order = ideal.order;
    ext.order.weights.push_back(1);
    auto lift = [](const Polynomial& f, unsigned zdeg) {
        Polynomial out;
        for (auto t : f.terms) {
            t.push_back(zdeg);
            out.terms.push_back(std::move(t));
        }
        return out;
    };
    for (const auto& g : ideal.generators) ext.generators.push_back(lift(g, 0));
    Polynomial witness = lift(q, 1);
    witness.terms.push_back(Exponents(ext.table.arity(), 0u)); // + 1
    ext.generators.push_back(make_poly(ext.order, witness.terms));

    auto ext_basis = groebner(ext, limits);
    return ext_basis.size() == 1 && ext_basis[0].terms.size() == 1 &&
           ext_basis[0].terms[0] == Exponents(ext.table.arity(), 0u);
}

QuotientDimension quotient_dim(const IdealSpec& ideal, const Limits& limits) {
    auto basis = groebner(ideal, limits);
    const std::size_t arity = ideal.table.arity();

    std::vector<Exponents> leads;
    for (const auto& b : basis) leads.push_back(leading_term(b));
    for (const auto& l : leads) {
        bool constant = std::all_of(l.begin(), l.end(), [](unsigned e) { return e == 0; });
        if (constant) return QuotientDimension{true, 0}; // unit ideal
    }

    // finiteness: every generator needs a pure power among the leading terms
    std::vector<unsigned> bound(arity, 0);
    for (std::size_t i = 0; i < arity; ++i) {
        for (const auto& l : leads) {
            bool pure = l[i] > 0;
            for (std::size_t j = 0; j < arity && pure; ++j)
                if (j != i && l[j] > 0) pure = false;
            if (pure && (bound[i] == 0 || l[i] < bound[i])) bound[i] = l[i];
        }
        if (bound[i] == 0) return QuotientDimension{false, 0};
    }

    // count staircase monomials below the pure-power box, pruning on divisibility
    // (a partial vector already divisible by a leading term stays divisible)
    long long count = 0, visited = 0;
    Exponents e(arity, 0u);
    auto divisible = [&](const Exponents& m) {
        for (const auto& l : leads)
            if (monomial_divides(l, m)) return true;
        return false;
    };
    auto dfs = [&](auto&& self, std::size_t var) -> void {
        if (++visited > limits.max_quotient_dim)
            throw ResourceLimitError("quotient_dim: staircase cap exceeded");
        if (divisible(e)) return;
        if (var == arity) {
            ++count;
            return;
        }
        for (unsigned v = 0; v < bound[var]; ++v) {
            e[var] = v;
            self(self, var + 1);
        }
        e[var] = 0;
    };
    dfs(dfs, 0);
    return QuotientDimension{true, count};
}

Polynomial parse_polynomial(const GeneratorTable& table, const MonomialOrder& ord,
                            const std::string& text) {
    std::vector<Exponents> terms;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("parse_polynomial: empty input");
    while (i < text.size()) {
        Exponents e(table.arity(), 0u);
        bool zero_factor = false;
        for (;;) { // one '*'-joined term
            skip_ws();
            if (i < text.size() && text[i] == '1') {
                ++i; // unit factor, nothing to record
            } else if (i < text.size() && text[i] == '0') {
                ++i;
                zero_factor = true;
            } else {
                std::size_t start = i;
                while (i < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                    ++i;
                if (start == i)
                    throw std::invalid_argument("parse_polynomial: expected generator at '" +
                                                text.substr(start) + "'");
                int idx = table.index_of(text.substr(start, i - start));
                if (idx < 0)
                    throw std::invalid_argument("parse_polynomial: unknown generator '" +
                                                text.substr(start, i - start) + "'");
                unsigned long long exp = 1;
                skip_ws();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip_ws();
                    std::size_t ds = i;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                    if (ds == i) throw std::invalid_argument("parse_polynomial: missing exponent");
                    exp = std::stoull(text.substr(ds, i - ds));
                }
                e[static_cast<std::size_t>(idx)] += static_cast<unsigned>(exp);
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!zero_factor) terms.push_back(e);
        skip_ws();
        if (i < text.size()) {
            if (text[i] != '+')
                throw std::invalid_argument("parse_polynomial: expected '+' at '" +
                                            text.substr(i) + "'");
            ++i;
        }
    }
    return make_poly(ord, std::move(terms));
}

std::string to_string(const GeneratorTable& table, const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.terms.size(); ++k) {
        if (k) out += " + ";
        const Exponents& e = p.terms[k];
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) out += "*";
            out += table.names[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
            any = true;
        }
        if (!any) out += "1";
    }
    return out;
}

} // namespace eocalc::f2poly
