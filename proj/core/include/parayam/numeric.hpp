#pragma once

#include "parayam/expr.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <map>

namespace parayam {

// Arbitrary-precision float used only for numeric spot checks; all symbolic
// work stays exact.
using Float = boost::multiprecision::mpfr_float;

using Assignment = std::map<SymbolId, Rational>;

// Evaluates e at the given rational point with (at least) `digits` decimal
// digits of working precision.  Every symbol occurring in e must be assigned;
// exponential arguments are evaluated exactly in rational arithmetic before
// the single rounding step through exp().  Throws Error on a missing
// assignment or a vanishing denominator.
Float evaluate_numeric(const ScalarExpr& e, const Assignment& point, unsigned digits = 50);

// Exact rational evaluation for expressions whose exponential factors all
// cancel at the point (in particular anything exp-free).  Returns nullopt
// when a genuinely transcendental factor survives.
std::optional<Rational> evaluate_rational(const ScalarExpr& e, const Assignment& point);

} // namespace parayam
