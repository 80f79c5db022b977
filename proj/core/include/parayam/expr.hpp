#pragma once

#include "parayam/error.hpp"
#include "parayam/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parayam {

class SymbolTable;

// Identifies a symbol inside one SymbolTable.  Ids are dense and ordered by
// declaration, which fixes the printing and canonical term order of a model.
struct SymbolId {
    std::uint32_t index = 0;
    friend bool operator==(SymbolId a, SymbolId b) { return a.index == b.index; }
    friend auto operator<=>(SymbolId a, SymbolId b) { return a.index <=> b.index; }
};

// Power product x^a * y^b * ...  Factors are sorted by symbol id and carry
// strictly positive exponents; the empty product is 1.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::int64_t>; // (symbol id, exponent > 0)

    Monomial() = default;
    static Monomial symbol(SymbolId s, std::int64_t exponent = 1);

    bool is_one() const { return factors_.empty(); }
    std::int64_t exponent_of(SymbolId s) const;
    std::int64_t total_degree() const;
    const std::vector<Factor>& factors() const { return factors_; }

    Monomial times(const Monomial& other) const;
    // Componentwise min of exponents (the gcd of the two power products).
    static Monomial gcd(const Monomial& a, const Monomial& b);
    // Requires `other` to divide *this componentwise.
    Monomial divided_by(const Monomial& other) const;

    // Lexicographic order with earlier-declared symbols weighing more.
    // Returns <0, 0, >0.
    int compare(const Monomial& other) const;
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<Factor> factors_;
};

// Multivariate polynomial over the rationals in canonical form: terms sorted
// in descending monomial order, no zero coefficients.
class Poly {
public:
    using Term = std::pair<Monomial, Rational>;

    Poly() = default;
    static Poly constant(Rational c);
    static Poly symbol(SymbolId s);

    bool is_zero() const { return terms_.empty(); }
    std::optional<Rational> as_constant() const;
    const std::vector<Term>& terms() const { return terms_; }

    Poly plus(const Poly& other) const;
    Poly minus(const Poly& other) const;
    Poly times(const Poly& other) const;
    Poly negated() const;
    Poly scaled(const Rational& c) const;
    Poly pow(std::uint64_t e) const;

    // Deterministic total order used wherever polynomials act as keys.
    int compare(const Poly& other) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    // Builds a canonical polynomial from arbitrary (monomial, coeff) pairs.
    static Poly from_terms(std::vector<Term> terms);

private:
    std::vector<Term> terms_;
};

// Element of the group ring Q[symbols][exp(Poly)]: a sum of terms
// coeff * monomial * exp(argument).  exp(p)*exp(q) folds to exp(p+q) and
// exp(0) disappears, so declared inverse pairs like exp(w)*exp(-w) = 1 hold
// by construction.  Distinct arguments are linearly independent over the
// rational functions, which keeps zero-testing decidable.
class ExpPoly {
public:
    struct Term {
        Monomial mono;
        Poly exp_arg; // zero polynomial means no exponential factor
        Rational coeff;

        friend bool operator==(const Term& a, const Term& b) {
            return a.coeff == b.coeff && a.mono == b.mono && a.exp_arg == b.exp_arg;
        }
    };

    ExpPoly() = default;
    static ExpPoly constant(Rational c);
    static ExpPoly symbol(SymbolId s);
    static ExpPoly exponential(Poly argument);
    static ExpPoly from_poly(const Poly& p);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::optional<Rational> as_constant() const;
    // Succeeds when no term carries an exponential factor.
    std::optional<Poly> as_poly() const;
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }

    ExpPoly plus(const ExpPoly& other) const;
    ExpPoly minus(const ExpPoly& other) const;
    ExpPoly times(const ExpPoly& other) const;
    ExpPoly negated() const;
    ExpPoly scaled(const Rational& c) const;
    ExpPoly pow(std::uint64_t e) const;

    int compare(const ExpPoly& other) const;
    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

    static ExpPoly from_terms(std::vector<Term> terms);

private:
    std::vector<Term> terms_;
};

// The expression class of the engine: quotients num/den of ExpPoly values,
// kept in a canonical form (den != 0; zero is 0/1; shared exponential and
// monomial content cancelled; den has leading coefficient 1).  Equality of
// canonical forms decides equality of the functions they denote.
class ScalarExpr {
public:
    ScalarExpr() : ScalarExpr(ExpPoly{}, ExpPoly::constant(1), Canonical{}) {}

    static ScalarExpr constant(Rational c);
    static ScalarExpr integer(long n) { return constant(Rational(n)); }
    static ScalarExpr symbol(SymbolId s);
    // argument must lie in the polynomial subring (no division, no nested exp).
    static ScalarExpr exponential(const ScalarExpr& argument);
    static ScalarExpr quotient(ExpPoly num, ExpPoly den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    std::optional<Rational> as_rational() const;
    const ExpPoly& num() const { return num_; }
    const ExpPoly& den() const { return den_; }

    ScalarExpr operator-() const;
    friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
    // Throws Error when b is (identically) zero.
    friend ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
    ScalarExpr pow(long e) const;

    ScalarExpr& operator+=(const ScalarExpr& b) { return *this = *this + b; }
    ScalarExpr& operator-=(const ScalarExpr& b) { return *this = *this - b; }
    ScalarExpr& operator*=(const ScalarExpr& b) { return *this = *this * b; }
    ScalarExpr& operator/=(const ScalarExpr& b) { return *this = *this / b; }

    // Structural equality of canonical forms (== equality of denoted
    // functions; `equivalent` below is the self-checking spelling).
    friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    int compare(const ScalarExpr& other) const;

    // Re-runs canonicalization from the stored parts; used by tests to check
    // idempotence of the normal form.
    ScalarExpr renormalized() const { return quotient(num_, den_); }

private:
    struct Canonical {};
    ScalarExpr(ExpPoly num, ExpPoly den, Canonical)
        : num_(std::move(num)), den_(std::move(den)) {}

    ExpPoly num_;
    ExpPoly den_;
};

inline ScalarExpr operator*(const Rational& c, const ScalarExpr& e) {
    return ScalarExpr::constant(c) * e;
}
inline ScalarExpr operator*(long c, const ScalarExpr& e) {
    return ScalarExpr::integer(c) * e;
}

// True iff a and b denote the same function (decided via is_zero(a - b)).
inline bool equivalent(const ScalarExpr& a, const ScalarExpr& b) { return (a - b).is_zero(); }

// Partial derivative along the given direction, under the derivative rules
// declared in `table` (coordinates, declared partials, chain rule through
// exponentials and quotients).
ScalarExpr differentiate(const ScalarExpr& e, std::size_t direction, const SymbolTable& table);

// True iff every directional derivative of e vanishes identically.
bool is_differentially_constant(const ScalarExpr& e, const SymbolTable& table);

// Canonical text form, parseable back by parse_expr.
std::string to_string(const ScalarExpr& e, const SymbolTable& table);
std::string to_string(const Poly& p, const SymbolTable& table);

} // namespace parayam
