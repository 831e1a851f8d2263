#ifndef PREDIM_CONTROL_FUNCTION_HPP
#define PREDIM_CONTROL_FUNCTION_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "predim/error.hpp"

namespace predim {

using Rational = mpq_class;

/// coeff * ln(arg) with a positive rational argument.
struct LogTerm {
    Rational coeff;
    Rational arg;
    bool operator==(const LogTerm&) const = default;
};

/// rat + coeff * ln(arg); exactly representable constants only.
struct SymbolicValue {
    Rational rat;
    std::optional<LogTerm> log;

    bool operator==(const SymbolicValue&) const = default;
};

/// Growth bound used to trim an amalgamation class.  Piecewise linear
/// through the knots up to the last knot, then p * ln(q x + r) + s.
struct ControlFunction {
    std::vector<std::pair<Rational, Rational>> knots;   // (x, value)
    Rational tail_p, tail_q, tail_r;
    SymbolicValue tail_s;

    const Rational& tail_start() const { return knots.back().first; }

    /// Structural sanity: nonempty knots starting at x = 0 with
    /// strictly increasing x, q > 0, positive tail argument.  Throws.
    void check_well_formed() const;

    /// 0 -> 0, 1 -> 2, 2 -> 3, then (1/4) ln(8x + 1) + 3 - (1/4) ln 17.
    static ControlFunction reference();
    bool is_reference() const;

    bool operator==(const ControlFunction&) const = default;
};

struct CertifiedInterval {
    Rational lo, hi;    // exact rational endpoints enclosing F(x)
    Rational width() const { return hi - lo; }
};

/// Encloses F(x) within 2^-precision_bits.  Exact (zero width) on the
/// linear part.
CertifiedInterval eval_bounds(const ControlFunction& f, const Rational& x,
                              int precision_bits);

enum class Order { Less, Equal, Greater, Unknown };

/// Exact order of a rational value against F(x).  On the tail the
/// comparison reduces to a rational w versus ln(R) with R rational;
/// equality there forces w = 0 and R = 1, so the interval refinement
/// below either terminates or the answer is Equal.  Unknown is only
/// reported when max_precision_bits is exhausted, which no rational
/// input can trigger in exact position.
Order compare_value_F(const Rational& value, const Rational& x,
                      const ControlFunction& f,
                      int max_precision_bits = 1 << 14);

enum class DeltaCompare { GE, LT, Undecidable };

/// Decides delta >= F(n) for integer predimension delta and size n.
DeltaCompare compare_delta_F(long delta, long n, const ControlFunction& f,
                             int max_precision_bits = 1 << 14);

/// Least integer d with d >= F(n).
long min_delta_for_size(const ControlFunction& f, long n);

/// Least integer m >= 0 with F(m) >= y.  Requires an increasing,
/// unbounded control function.
long inverse_bound(const ControlFunction& f, long y);

struct ValidationCheck {
    std::string name;
    bool ok;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool ok() const;
    const ValidationCheck* find(const std::string& name) const;
};

/// Certifies the properties the amalgamation machinery relies on:
/// pinned values at 0, 1, 2; continuity at the linear/log junction;
/// strict monotonicity (symbolically, plus an exact integer sweep up to
/// the horizon); nonincreasing right derivative; the derivative
/// envelope 2/(8x + 1) past x = 2; unbounded growth.
ValidationReport validate_control_function(const ControlFunction& f,
                                           long horizon = 10000);

} // namespace predim

#endif
