#include "parayam/expr.hpp"

#include "parayam/symbols.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace parayam {

namespace {

int cmp_rational(const Rational& a, const Rational& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

} // namespace

// --- Rational helpers ----------------------------------------------------

Rational rational_pow(const Rational& q, long e) {
    using boost::multiprecision::pow;
    if (e == 0) return Rational(1);
    Integer n = numerator(q);
    Integer d = denominator(q);
    if (e < 0) {
        if (q == 0) throw Error("zero raised to a negative power");
        std::swap(n, d);
        if (d < 0) { d = -d; n = -n; }
    }
    const auto k = static_cast<unsigned>(e < 0 ? -e : e);
    return Rational(pow(n, k), pow(d, k));
}

std::string to_string(const Rational& q) { return q.str(); }

// --- Monomial -------------------------------------------------------------

Monomial Monomial::symbol(SymbolId s, std::int64_t exponent) {
    Monomial m;
    if (exponent != 0) m.factors_.push_back({s.index, exponent});
    return m;
}

std::int64_t Monomial::exponent_of(SymbolId s) const {
    for (const auto& [id, e] : factors_)
        if (id == s.index) return e;
    return 0;
}

std::int64_t Monomial::total_degree() const {
    std::int64_t d = 0;
    for (const auto& [id, e] : factors_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() || j < other.factors_.size()) {
        if (j == other.factors_.size() ||
            (i < factors_.size() && factors_[i].first < other.factors_[j].first)) {
            out.factors_.push_back(factors_[i++]);
        } else if (i == factors_.size() || other.factors_[j].first < factors_[i].first) {
            out.factors_.push_back(other.factors_[j++]);
        } else {
            const std::int64_t e = factors_[i].second + other.factors_[j].second;
            if (e != 0) out.factors_.push_back({factors_[i].first, e});
            ++i, ++j;
        }
    }
    return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
        if (a.factors_[i].first < b.factors_[j].first) ++i;
        else if (b.factors_[j].first < a.factors_[i].first) ++j;
        else {
            out.factors_.push_back(
                {a.factors_[i].first, std::min(a.factors_[i].second, b.factors_[j].second)});
            ++i, ++j;
        }
    }
    return out;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < factors_.size()) {
        if (j < other.factors_.size() && other.factors_[j].first == factors_[i].first) {
            const std::int64_t e = factors_[i].second - other.factors_[j].second;
            if (e < 0) throw Error("monomial division with negative result");
            if (e != 0) out.factors_.push_back({factors_[i].first, e});
            ++i, ++j;
        } else {
            if (j < other.factors_.size() && other.factors_[j].first < factors_[i].first)
                throw Error("monomial division with negative result");
            out.factors_.push_back(factors_[i++]);
        }
    }
    if (j != other.factors_.size()) throw Error("monomial division with negative result");
    return out;
}

int Monomial::compare(const Monomial& other) const {
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < other.factors_.size()) {
        const auto [ida, ea] = factors_[i];
        const auto [idb, eb] = other.factors_[j];
        if (ida != idb) return ida < idb ? 1 : -1; // presence of an earlier symbol wins
        if (ea != eb) return ea > eb ? 1 : -1;
        ++i, ++j;
    }
    if (i < factors_.size()) return 1;
    if (j < other.factors_.size()) return -1;
    return 0;
}

// --- Poly -------------------------------------------------------------------

Poly Poly::constant(Rational c) {
    Poly p;
    if (c != 0) p.terms_.push_back({Monomial{}, std::move(c)});
    return p;
}

Poly Poly::symbol(SymbolId s) {
    Poly p;
    p.terms_.push_back({Monomial::symbol(s), Rational(1)});
    return p;
}

std::optional<Rational> Poly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.front().first.is_one()) return terms_.front().second;
    return std::nullopt;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first.compare(b.first) > 0; });
    Poly out;
    for (auto& [m, c] : terms) {
        if (!out.terms_.empty() && out.terms_.back().first == m) {
            out.terms_.back().second += c;
            if (out.terms_.back().second == 0) out.terms_.pop_back();
        } else if (c != 0) {
            out.terms_.push_back({std::move(m), std::move(c)});
        }
    }
    return out;
}

Poly Poly::plus(const Poly& other) const {
    std::vector<Term> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return from_terms(std::move(all));
}

Poly Poly::minus(const Poly& other) const { return plus(other.negated()); }

Poly Poly::times(const Poly& other) const {
    std::vector<Term> all;
    all.reserve(terms_.size() * other.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            all.push_back({ma.times(mb), ca * cb});
    return from_terms(std::move(all));
}

Poly Poly::negated() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return Poly{};
    Poly out = *this;
    for (auto& [m, k] : out.terms_) k *= c;
    return out;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly out = constant(1);
    for (std::uint64_t i = 0; i < e; ++i) out = out.times(*this);
    return out;
}

int Poly::compare(const Poly& other) const {
    const std::size_t n = std::min(terms_.size(), other.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = terms_[i].first.compare(other.terms_[i].first)) return c;
        if (int c = cmp_rational(terms_[i].second, other.terms_[i].second)) return c;
    }
    if (terms_.size() != other.terms_.size())
        return terms_.size() > other.terms_.size() ? 1 : -1;
    return 0;
}

// --- ExpPoly ----------------------------------------------------------------

namespace {

int cmp_expkey(const ExpPoly::Term& a, const ExpPoly::Term& b) {
    if (int c = a.mono.compare(b.mono)) return c;
    return a.exp_arg.compare(b.exp_arg);
}

} // namespace

ExpPoly ExpPoly::constant(Rational c) {
    ExpPoly p;
    if (c != 0) p.terms_.push_back({Monomial{}, Poly{}, std::move(c)});
    return p;
}

ExpPoly ExpPoly::symbol(SymbolId s) {
    ExpPoly p;
    p.terms_.push_back({Monomial::symbol(s), Poly{}, Rational(1)});
    return p;
}

ExpPoly ExpPoly::exponential(Poly argument) {
    if (argument.is_zero()) return constant(1);
    ExpPoly p;
    p.terms_.push_back({Monomial{}, std::move(argument), Rational(1)});
    return p;
}

ExpPoly ExpPoly::from_poly(const Poly& p) {
    ExpPoly out;
    out.terms_.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) out.terms_.push_back({m, Poly{}, c});
    return out;
}

bool ExpPoly::is_one() const {
    return terms_.size() == 1 && terms_.front().mono.is_one() &&
           terms_.front().exp_arg.is_zero() && terms_.front().coeff == 1;
}

std::optional<Rational> ExpPoly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.front().mono.is_one() && terms_.front().exp_arg.is_zero())
        return terms_.front().coeff;
    return std::nullopt;
}

std::optional<Poly> ExpPoly::as_poly() const {
    std::vector<Poly::Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!t.exp_arg.is_zero()) return std::nullopt;
        terms.push_back({t.mono, t.coeff});
    }
    return Poly::from_terms(std::move(terms));
}

ExpPoly ExpPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return cmp_expkey(a, b) > 0; });
    ExpPoly out;
    for (auto& t : terms) {
        if (!out.terms_.empty() && cmp_expkey(out.terms_.back(), t) == 0) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff == 0) out.terms_.pop_back();
        } else if (t.coeff != 0) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

ExpPoly ExpPoly::plus(const ExpPoly& other) const {
    std::vector<Term> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return from_terms(std::move(all));
}

ExpPoly ExpPoly::minus(const ExpPoly& other) const { return plus(other.negated()); }

ExpPoly ExpPoly::times(const ExpPoly& other) const {
    std::vector<Term> all;
    all.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : other.terms_)
            all.push_back({a.mono.times(b.mono), a.exp_arg.plus(b.exp_arg), a.coeff * b.coeff});
    return from_terms(std::move(all));
}

ExpPoly ExpPoly::negated() const {
    ExpPoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

ExpPoly ExpPoly::scaled(const Rational& c) const {
    if (c == 0) return ExpPoly{};
    ExpPoly out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

ExpPoly ExpPoly::pow(std::uint64_t e) const {
    ExpPoly out = constant(1);
    for (std::uint64_t i = 0; i < e; ++i) out = out.times(*this);
    return out;
}

int ExpPoly::compare(const ExpPoly& other) const {
    const std::size_t n = std::min(terms_.size(), other.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = cmp_expkey(terms_[i], other.terms_[i])) return c;
        if (int c = cmp_rational(terms_[i].coeff, other.terms_[i].coeff)) return c;
    }
    if (terms_.size() != other.terms_.size())
        return terms_.size() > other.terms_.size() ? 1 : -1;
    return 0;
}

// --- ScalarExpr ---------------------------------------------------------------

ScalarExpr ScalarExpr::constant(Rational c) {
    return ScalarExpr(ExpPoly::constant(std::move(c)), ExpPoly::constant(1), Canonical{});
}

ScalarExpr ScalarExpr::symbol(SymbolId s) {
    return ScalarExpr(ExpPoly::symbol(s), ExpPoly::constant(1), Canonical{});
}

ScalarExpr ScalarExpr::exponential(const ScalarExpr& argument) {
    if (!argument.den_.is_one())
        throw Error("exp argument must be a polynomial, got a quotient");
    const auto p = argument.num_.as_poly();
    if (!p) throw Error("exp argument must be a polynomial, got a nested exponential");
    return ScalarExpr(ExpPoly::exponential(*p), ExpPoly::constant(1), Canonical{});
}

// Translation-compatible total order on exponential arguments: compares the
// extreme coefficient of the difference, so argmin over a set of arguments is
// unchanged when all of them are shifted by a common polynomial.
static int group_cmp(const Poly& a, const Poly& b) {
    const Poly diff = a.minus(b);
    if (diff.is_zero()) return 0;
    return diff.terms().front().second > 0 ? 1 : -1;
}

ScalarExpr ScalarExpr::quotient(ExpPoly num, ExpPoly den) {
    if (den.is_zero()) throw Error("division by zero in scalar expression");
    if (num.is_zero()) return ScalarExpr();

    // Shift exponentials so the minimal exponential argument appearing in the
    // denominator becomes zero.  exp(p)*exp(-p) = 1 makes pure exponential
    // denominators fold away, and taking the minimum under a
    // translation-compatible order makes the shift a fixed point.
    const Poly* qmin = &den.terms().front().exp_arg;
    for (const auto& t : den.terms())
        if (group_cmp(t.exp_arg, *qmin) < 0) qmin = &t.exp_arg;
    if (!qmin->is_zero()) {
        const ExpPoly shift = ExpPoly::exponential(qmin->negated());
        num = num.times(shift);
        den = den.times(shift);
    }

    // Cancel shared monomial content.  Dividing every term by one monomial
    // preserves the term order, so the results stay sorted.
    Monomial content_num = num.terms().front().mono;
    for (const auto& t : num.terms()) content_num = Monomial::gcd(content_num, t.mono);
    Monomial content_den = den.terms().front().mono;
    for (const auto& t : den.terms()) content_den = Monomial::gcd(content_den, t.mono);
    const Monomial content = Monomial::gcd(content_num, content_den);
    if (!content.is_one()) {
        std::vector<ExpPoly::Term> nt = num.terms(), dt = den.terms();
        for (auto& t : nt) t.mono = t.mono.divided_by(content);
        for (auto& t : dt) t.mono = t.mono.divided_by(content);
        num = ExpPoly::from_terms(std::move(nt));
        den = ExpPoly::from_terms(std::move(dt));
    }

    // Normalize the denominator to leading coefficient 1.
    if (const Rational lc = den.leading().coeff; lc != 1) {
        const Rational inv = Rational(1) / lc;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }

    return ScalarExpr(std::move(num), std::move(den), Canonical{});
}

bool ScalarExpr::is_one() const { return num_.is_one() && den_.is_one(); }

std::optional<Rational> ScalarExpr::as_rational() const {
    if (!den_.is_one()) return std::nullopt;
    return num_.as_constant();
}

ScalarExpr ScalarExpr::operator-() const {
    return quotient(num_.negated(), den_);
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one())
        return ScalarExpr::quotient(a.num_.plus(b.num_), a.den_);
    return ScalarExpr::quotient(a.num_.times(b.den_).plus(b.num_.times(a.den_)),
                                a.den_.times(b.den_));
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) { return a + (-b); }

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    if (a.is_zero() || b.is_zero()) return ScalarExpr();
    return ScalarExpr::quotient(a.num_.times(b.num_), a.den_.times(b.den_));
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
    if (b.is_zero()) throw Error("division by zero in scalar expression");
    if (a.is_zero()) return a;
    return ScalarExpr::quotient(a.num_.times(b.den_), a.den_.times(b.num_));
}

ScalarExpr ScalarExpr::pow(long e) const {
    if (e == 0) return constant(1);
    if (e > 0)
        return quotient(num_.pow(static_cast<std::uint64_t>(e)),
                        den_.pow(static_cast<std::uint64_t>(e)));
    if (is_zero()) throw Error("zero raised to a negative power");
    return quotient(den_.pow(static_cast<std::uint64_t>(-e)),
                    num_.pow(static_cast<std::uint64_t>(-e)));
}

int ScalarExpr::compare(const ScalarExpr& other) const {
    if (int c = num_.compare(other.num_)) return c;
    return den_.compare(other.den_);
}

// --- Differentiation ---------------------------------------------------------

namespace {

ScalarExpr lift(ExpPoly p) {
    return ScalarExpr::quotient(std::move(p), ExpPoly::constant(1));
}

// d/d(direction) of a polynomial; the result may be a quotient because
// declared partial rules are arbitrary scalar expressions.
ScalarExpr d_poly(const Poly& p, std::size_t direction, const SymbolTable& table) {
    ScalarExpr acc;
    for (const auto& [mono, coeff] : p.terms()) {
        for (const auto& [sid, e] : mono.factors()) {
            const ScalarExpr& rule = table.partial(SymbolId{sid}, direction);
            if (rule.is_zero()) continue;
            const Monomial reduced = mono.divided_by(Monomial::symbol(SymbolId{sid}));
            acc += lift(ExpPoly::from_terms({{reduced, Poly{}, coeff * Rational(e)}})) * rule;
        }
    }
    return acc;
}

ScalarExpr d_exppoly(const ExpPoly& f, std::size_t direction, const SymbolTable& table) {
    ScalarExpr acc;
    for (const auto& term : f.terms()) {
        for (const auto& [sid, e] : term.mono.factors()) {
            const ScalarExpr& rule = table.partial(SymbolId{sid}, direction);
            if (rule.is_zero()) continue;
            const Monomial reduced = term.mono.divided_by(Monomial::symbol(SymbolId{sid}));
            acc += lift(ExpPoly::from_terms({{reduced, term.exp_arg, term.coeff * Rational(e)}})) *
                   rule;
        }
        if (!term.exp_arg.is_zero()) {
            const ScalarExpr darg = d_poly(term.exp_arg, direction, table);
            if (!darg.is_zero())
                acc += lift(ExpPoly::from_terms({term})) * darg;
        }
    }
    return acc;
}

} // namespace

ScalarExpr differentiate(const ScalarExpr& e, std::size_t direction, const SymbolTable& table) {
    if (direction >= table.directions())
        throw Error("derivative direction out of range");
    const ScalarExpr dn = d_exppoly(e.num(), direction, table);
    if (e.den().is_one()) return dn;
    const ScalarExpr dd = d_exppoly(e.den(), direction, table);
    if (dd.is_zero()) return dn / lift(e.den());
    const ScalarExpr den = lift(e.den());
    return (dn * den - lift(e.num()) * dd) / (den * den);
}

bool is_differentially_constant(const ScalarExpr& e, const SymbolTable& table) {
    for (std::size_t d = 0; d < table.directions(); ++d)
        if (!differentiate(e, d, table).is_zero()) return false;
    return true;
}

// --- Printing ------------------------------------------------------------------

namespace {

std::string format_poly(const Poly& p, const SymbolTable& table);

// One term without its sign; the coefficient passed in is already |coeff|.
std::string format_term(const Monomial& mono, const Poly& exp_arg, const Rational& abs_coeff,
                        const SymbolTable& table) {
    std::vector<std::string> factors;
    if (abs_coeff != 1 || (mono.is_one() && exp_arg.is_zero()))
        factors.push_back(to_string(abs_coeff));
    for (const auto& [sid, e] : mono.factors()) {
        std::string f = table.name(SymbolId{sid});
        if (e != 1) f += "^" + std::to_string(e);
        factors.push_back(std::move(f));
    }
    if (!exp_arg.is_zero())
        factors.push_back("exp(" + format_poly(exp_arg, table) + ")");
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        out += factors[i];
    }
    return out;
}

std::string format_expoly(const ExpPoly& f, const SymbolTable& table) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& term : f.terms()) {
        const bool negative = term.coeff < 0;
        const Rational abs_coeff = negative ? Rational(-term.coeff) : term.coeff;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        out += format_term(term.mono, term.exp_arg, abs_coeff, table);
    }
    return out;
}

std::string format_poly(const Poly& p, const SymbolTable& table) {
    return format_expoly(ExpPoly::from_poly(p), table);
}

} // namespace

std::string to_string(const ScalarExpr& e, const SymbolTable& table) {
    if (e.den().is_one()) return format_expoly(e.num(), table);
    return "(" + format_expoly(e.num(), table) + ")/(" + format_expoly(e.den(), table) + ")";
}

std::string to_string(const Poly& p, const SymbolTable& table) {
    return format_poly(p, table);
}

// --- SymbolTable -----------------------------------------------------------------

bool is_valid_symbol_name(std::string_view name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char ch : name.substr(1))
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

SymbolId SymbolTable::declare(std::string name) {
    if (!is_valid_symbol_name(name))
        throw SemanticError("invalid symbol name '" + name + "'");
    if (name == "exp")
        throw SemanticError("'exp' is reserved and cannot be a symbol name");
    if (index_.contains(name))
        throw SemanticError("symbol '" + name + "' declared twice");
    const SymbolId id{static_cast<std::uint32_t>(names_.size())};
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    partials_.emplace_back();
    return id;
}

SymbolId SymbolTable::declare_coordinate(std::string name, std::size_t direction) {
    const SymbolId id = declare(std::move(name));
    set_partial(id, direction, ScalarExpr::integer(1));
    return id;
}

void SymbolTable::set_partial(SymbolId s, std::size_t direction, ScalarExpr rule) {
    if (s.index >= names_.size()) throw Error("unknown symbol id");
    if (direction >= directions_) throw Error("derivative direction out of range");
    auto& rules = partials_[s.index];
    if (rules.empty()) rules.resize(directions_);
    rules[direction] = std::move(rule);
}

std::optional<SymbolId> SymbolTable::find(std::string_view name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::string& SymbolTable::name(SymbolId s) const {
    if (s.index >= names_.size()) throw Error("unknown symbol id");
    return names_[s.index];
}

const ScalarExpr& SymbolTable::partial(SymbolId s, std::size_t direction) const {
    static const ScalarExpr zero;
    if (s.index >= names_.size()) throw Error("unknown symbol id");
    if (direction >= directions_) throw Error("derivative direction out of range");
    const auto& rules = partials_[s.index];
    return rules.empty() ? zero : rules[direction];
}

} // namespace parayam
