#include "parayam/numeric.hpp"

#include <map>

namespace parayam {

namespace {

const Rational& lookup(const Assignment& point, std::uint32_t sid) {
    const auto it = point.find(SymbolId{sid});
    if (it == point.end()) throw Error("symbol without assigned value in numeric evaluation");
    return it->second;
}

Rational eval_monomial(const Monomial& m, const Assignment& point) {
    Rational out(1);
    for (const auto& [sid, e] : m.factors())
        out *= rational_pow(lookup(point, sid), static_cast<long>(e));
    return out;
}

Rational eval_poly(const Poly& p, const Assignment& point) {
    Rational out(0);
    for (const auto& [m, c] : p.terms()) out += c * eval_monomial(m, point);
    return out;
}

Float eval_expoly_numeric(const ExpPoly& f, const Assignment& point) {
    Float out(0);
    for (const auto& term : f.terms()) {
        Float value(term.coeff * eval_monomial(term.mono, point));
        if (!term.exp_arg.is_zero())
            value *= exp(Float(eval_poly(term.exp_arg, point)));
        out += value;
    }
    return out;
}

// Groups terms by the exact rational value of their exponential argument;
// returns the overall value when only the trivial group e^0 survives.
std::optional<Rational> eval_expoly_rational(const ExpPoly& f, const Assignment& point) {
    std::map<Rational, Rational> groups;
    for (const auto& term : f.terms()) {
        const Rational arg = term.exp_arg.is_zero() ? Rational(0) : eval_poly(term.exp_arg, point);
        groups[arg] += term.coeff * eval_monomial(term.mono, point);
    }
    Rational value(0);
    for (const auto& [arg, coeff] : groups) {
        if (coeff == 0) continue;
        if (arg != 0) return std::nullopt;
        value = coeff;
    }
    return value;
}

class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits)
        : saved_(Float::default_precision()) {
        Float::default_precision(digits);
    }
    ~PrecisionGuard() { Float::default_precision(saved_); }

private:
    unsigned saved_;
};

} // namespace

Float evaluate_numeric(const ScalarExpr& e, const Assignment& point, unsigned digits) {
    const PrecisionGuard guard(digits + 10);
    const Float num = eval_expoly_numeric(e.num(), point);
    if (e.den().is_one()) return num;
    const Float den = eval_expoly_numeric(e.den(), point);
    if (den == 0) throw Error("denominator vanishes at evaluation point");
    return num / den;
}

std::optional<Rational> evaluate_rational(const ScalarExpr& e, const Assignment& point) {
    const auto num = eval_expoly_rational(e.num(), point);
    if (!num) return std::nullopt;
    if (e.den().is_one()) return num;
    const auto den = eval_expoly_rational(e.den(), point);
    if (!den) return std::nullopt;
    if (*den == 0) throw Error("denominator vanishes at evaluation point");
    return *num / *den;
}

} // namespace parayam
