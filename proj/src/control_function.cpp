#include "predim/control_function.hpp"

#include <mpfr.h>

#include <algorithm>

namespace predim {
namespace {

Rational mpfr_to_rational(mpfr_t x) {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Rational out(q);
    mpq_clear(q);
    return out;
}

struct Bounds {
    Rational lo, hi;
};

// Encloses ln(t) for rational t > 0 with exact rational endpoints: the
// only roundings are the two directed mpfr evaluations, which convert
// back to rationals losslessly.
Bounds ln_bounds(const Rational& t, mpfr_prec_t prec) {
    if (t <= 0)
        throw PreconditionError("logarithm argument must be positive");
    mpfr_t a, b;
    mpfr_init2(a, prec);
    mpfr_init2(b, prec);
    mpfr_set_q(a, t.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(b, t.get_mpq_t(), MPFR_RNDU);
    if (mpfr_sgn(a) <= 0) {
        // t rounded down to zero at this precision; widen the enclosure
        // artificially so the caller escalates.
        mpfr_clear(a);
        mpfr_clear(b);
        return {Rational(-(1 << 30)), Rational(1 << 30)};
    }
    mpfr_log(a, a, MPFR_RNDD);
    mpfr_log(b, b, MPFR_RNDU);
    Bounds out{mpfr_to_rational(a), mpfr_to_rational(b)};
    mpfr_clear(a);
    mpfr_clear(b);
    return out;
}

Bounds scale(const Rational& c, const Bounds& b) {
    if (c >= 0) return {c * b.lo, c * b.hi};
    return {c * b.hi, c * b.lo};
}

Rational pow2_neg(int bits) {
    Rational r(mpz_class(1), mpz_class(1) << bits);
    r.canonicalize();
    return r;
}

Rational pow_rational(const Rational& base, const mpz_class& e) {
    if (base <= 0)
        throw PreconditionError("rational power needs a positive base");
    mpz_class ae = abs(e);
    if (!ae.fits_ulong_p() || ae > 1000000)
        throw BudgetError("rational power exponent out of range");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), ae.get_ui());
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), ae.get_ui());
    Rational out = e >= 0 ? Rational(num, den) : Rational(den, num);
    out.canonicalize();
    return out;
}

// Exact value on the piecewise-linear head; pre: 0 <= x <= last knot.
Rational linear_value(const ControlFunction& f, const Rational& x) {
    const auto& ks = f.knots;
    for (std::size_t i = 1; i < ks.size(); ++i) {
        if (x <= ks[i].first) {
            const auto& [x0, y0] = ks[i - 1];
            const auto& [x1, y1] = ks[i];
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
        }
    }
    return ks.back().second;   // single-knot head, x == 0
}

// Tail enclosure p * ln(q x + r) + s at a given working precision.
Bounds tail_bounds(const ControlFunction& f, const Rational& x,
                   mpfr_prec_t prec) {
    Rational t = f.tail_q * x + f.tail_r;
    if (t <= 0)
        throw PreconditionError("tail argument q x + r not positive");
    Bounds b = scale(f.tail_p, ln_bounds(t, prec));
    b.lo += f.tail_s.rat;
    b.hi += f.tail_s.rat;
    if (f.tail_s.log) {
        Bounds extra = scale(f.tail_s.log->coeff,
                             ln_bounds(f.tail_s.log->arg, prec));
        b.lo += extra.lo;
        b.hi += extra.hi;
    }
    return b;
}

// Order of rational w against ln(R) for rational R > 0.  Equality is
// possible only when both sides are zero; otherwise the enclosure
// eventually separates them.
Order order_vs_log(const Rational& w, const Rational& R, int max_bits) {
    if (R <= 0)
        throw PreconditionError("logarithm argument must be positive");
    if (R == 1) {
        if (w == 0) return Order::Equal;
        return w > 0 ? Order::Greater : Order::Less;
    }
    if (w == 0) return R < 1 ? Order::Greater : Order::Less;
    for (mpfr_prec_t prec = 64;
         prec <= std::max(64, max_bits); prec *= 2) {
        Bounds b = ln_bounds(R, prec);
        if (w > b.hi) return Order::Greater;
        if (w < b.lo) return Order::Less;
    }
    return Order::Unknown;
}

Order order_of(const Rational& a, const Rational& b) {
    int c = cmp(a, b);
    if (c < 0) return Order::Less;
    if (c > 0) return Order::Greater;
    return Order::Equal;
}

} // namespace

void ControlFunction::check_well_formed() const {
    if (knots.empty())
        throw PreconditionError("control function needs at least one knot");
    if (knots.front().first != 0)
        throw PreconditionError("first knot must sit at x = 0");
    for (std::size_t i = 1; i < knots.size(); ++i)
        if (!(knots[i - 1].first < knots[i].first))
            throw PreconditionError("knot positions must strictly increase");
    if (tail_q <= 0)
        throw PreconditionError("tail coefficient q must be positive");
    if (tail_q * tail_start() + tail_r <= 0)
        throw PreconditionError("tail argument not positive at the junction");
    if (tail_s.log && tail_s.log->arg <= 0)
        throw PreconditionError("symbolic log argument must be positive");
}

ControlFunction ControlFunction::reference() {
    ControlFunction f;
    f.knots = {{Rational(0), Rational(0)},
               {Rational(1), Rational(2)},
               {Rational(2), Rational(3)}};
    f.tail_p = Rational(1, 4);
    f.tail_q = Rational(8);
    f.tail_r = Rational(1);
    f.tail_s.rat = Rational(3);
    f.tail_s.log = LogTerm{Rational(-1, 4), Rational(17)};
    return f;
}

bool ControlFunction::is_reference() const {
    return *this == reference();
}

CertifiedInterval eval_bounds(const ControlFunction& f, const Rational& x,
                              int precision_bits) {
    f.check_well_formed();
    if (x < 0)
        throw PreconditionError("control function domain is x >= 0");
    if (precision_bits < 1 || precision_bits > (1 << 20))
        throw PreconditionError("precision bits out of range");
    if (x <= f.tail_start()) {
        Rational v = linear_value(f, x);
        return {v, v};
    }
    Rational target = pow2_neg(precision_bits);
    for (mpfr_prec_t prec = precision_bits + 64;; prec *= 2) {
        Bounds b = tail_bounds(f, x, prec);
        if (b.hi - b.lo <= target) return {b.lo, b.hi};
        if (prec > (1 << 22))
            throw BudgetError("interval refinement exceeded precision cap");
    }
}

Order compare_value_F(const Rational& value, const Rational& x,
                      const ControlFunction& f, int max_precision_bits) {
    f.check_well_formed();
    if (x < 0)
        throw PreconditionError("control function domain is x >= 0");
    if (x <= f.tail_start())
        return order_of(value, linear_value(f, x));

    Rational T = f.tail_q * x + f.tail_r;
    if (T <= 0)
        throw PreconditionError("tail argument q x + r not positive");
    Rational c = f.tail_s.log ? f.tail_s.log->coeff : Rational(0);
    Rational a = f.tail_s.log ? f.tail_s.log->arg : Rational(1);

    // value >= p ln T + c ln a + s.rat  <=>  D (value - s.rat) >= ln R
    // with D clearing both denominators and R = T^(Dp) a^(Dc) rational.
    mpz_class D;
    mpz_lcm(D.get_mpz_t(), f.tail_p.get_den().get_mpz_t(),
            c.get_den().get_mpz_t());
    Rational dp = Rational(D) * f.tail_p;
    Rational dc = Rational(D) * c;
    Rational R = pow_rational(T, dp.get_num()) * pow_rational(a, dc.get_num());
    Rational w = Rational(D) * (value - f.tail_s.rat);
    return order_vs_log(w, R, max_precision_bits);
}

DeltaCompare compare_delta_F(long delta, long n, const ControlFunction& f,
                             int max_precision_bits) {
    if (n < 0) throw PreconditionError("size must be nonnegative");
    switch (compare_value_F(Rational(delta), Rational(n), f,
                            max_precision_bits)) {
        case Order::Less: return DeltaCompare::LT;
        case Order::Unknown: return DeltaCompare::Undecidable;
        default: return DeltaCompare::GE;
    }
}

long min_delta_for_size(const ControlFunction& f, long n) {
    if (n < 0) throw PreconditionError("size must be nonnegative");
    auto at_least = [&](long d) {
        Order o = compare_value_F(Rational(d), Rational(n), f);
        if (o == Order::Unknown)
            throw BudgetError("comparison undecidable at precision cap");
        return o != Order::Less;
    };
    long hi = 1;
    while (!at_least(hi)) hi *= 2;
    long lo = -1;
    while (at_least(lo)) {
        lo *= 2;
        if (lo < -(1L << 40))
            throw BudgetError("control function unbounded below");
    }
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        (at_least(mid) ? hi : lo) = mid;
    }
    return hi;
}

long inverse_bound(const ControlFunction& f, long y) {
    auto reached = [&](long m) {
        // F(m) >= y  <=>  y <= F(m)
        Order o = compare_value_F(Rational(y), Rational(m), f);
        if (o == Order::Unknown)
            throw BudgetError("comparison undecidable at precision cap");
        return o != Order::Greater;
    };
    if (reached(0)) return 0;
    long hi = 1;
    while (!reached(hi)) {
        hi *= 2;
        if (hi > (1L << 40))
            throw BudgetError("control function appears bounded below " +
                              std::to_string(y));
    }
    long lo = hi / 2;   // reached(lo) false
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        (reached(mid) ? hi : lo) = mid;
    }
    return hi;
}

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

ValidationReport validate_control_function(const ControlFunction& f,
                                           long horizon) {
    f.check_well_formed();
    if (horizon < 3) throw PreconditionError("horizon too small");
    ValidationReport rep;
    auto add = [&](std::string name, bool ok, std::string detail) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    auto value_is = [&](long n, long want) {
        Order o = compare_value_F(Rational(want), Rational(n), f);
        return o == Order::Equal;
    };

    add("value at 0", value_is(0, 0), "F(0) = 0 required");
    add("value at 1", value_is(1, 2), "F(1) = 2 required");
    add("value at 2", value_is(2, 3), "F(2) = 3 required");

    bool knots_up = true;
    for (std::size_t i = 1; i < f.knots.size(); ++i)
        if (!(f.knots[i - 1].second < f.knots[i].second)) knots_up = false;
    add("knot values strictly increase", knots_up, "");

    // continuity where the linear head meets the log tail
    Rational t = f.tail_start();
    Rational junction_value = linear_value(f, t);
    Rational T0 = f.tail_q * t + f.tail_r;
    Order cont;
    {
        // reuse the exact comparator with x pushed into the tail branch:
        // evaluate the tail expression at x = t by direct reduction
        Rational c = f.tail_s.log ? f.tail_s.log->coeff : Rational(0);
        Rational a = f.tail_s.log ? f.tail_s.log->arg : Rational(1);
        mpz_class D;
        mpz_lcm(D.get_mpz_t(), f.tail_p.get_den().get_mpz_t(),
                c.get_den().get_mpz_t());
        Rational dp = Rational(D) * f.tail_p;
        Rational dc = Rational(D) * c;
        Rational R =
            pow_rational(T0, dp.get_num()) * pow_rational(a, dc.get_num());
        Rational w = Rational(D) * (junction_value - f.tail_s.rat);
        cont = order_vs_log(w, R, 1 << 14);
    }
    add("continuous at junction", cont == Order::Equal,
        cont == Order::Equal ? "tail value matches last knot exactly"
                             : "tail value differs from last knot");

    // strict monotonicity: symbolic certificate plus an exact sweep
    // over integer pairs up to the horizon
    bool slopes_positive = true;
    for (std::size_t i = 1; i < f.knots.size(); ++i)
        if (!(f.knots[i].second > f.knots[i - 1].second))
            slopes_positive = false;
    bool tail_up = f.tail_p > 0 && f.tail_q > 0;
    add("increasing (symbolic)", slopes_positive && tail_up,
        "linear slopes positive and p, q > 0");
    {
        bool sweep = true;
        long bad = -1;
        for (long i = 0; i < horizon && sweep; ++i) {
            Rational xi(i), xj(i + 1);
            Order o;
            if (xj <= t) {
                o = order_of(linear_value(f, xi), linear_value(f, xj));
            } else if (xi >= t) {
                // F(i+1) - F(i) = p ln(T_j / T_i): sign is exact
                Rational Ti = f.tail_q * xi + f.tail_r;
                Rational Tj = f.tail_q * xj + f.tail_r;
                int s = sgn(f.tail_p) * cmp(Tj, Ti);
                o = s > 0 ? Order::Less : (s == 0 ? Order::Equal
                                                  : Order::Greater);
            } else {
                o = compare_value_F(linear_value(f, xi), xj, f);
            }
            if (o != Order::Less) { sweep = false; bad = i; }
        }
        add("increasing on integers to horizon", sweep,
            sweep ? "checked exactly up to " + std::to_string(horizon)
                  : "fails between " + std::to_string(bad) + " and " +
                        std::to_string(bad + 1));
    }

    // right derivative never increases: linear slopes nonincreasing,
    // then the tail starts at or below the last slope and decays
    {
        bool ok = true;
        std::string why;
        Rational prev_slope;
        bool have_prev = false;
        for (std::size_t i = 1; i < f.knots.size(); ++i) {
            Rational slope = (f.knots[i].second - f.knots[i - 1].second) /
                             (f.knots[i].first - f.knots[i - 1].first);
            if (have_prev && slope > prev_slope) {
                ok = false;
                why = "linear slope increases at knot " + std::to_string(i);
            }
            prev_slope = slope;
            have_prev = true;
        }
        // tail derivative p q / (q x + r) at the junction
        Rational tail_d0 = f.tail_p * f.tail_q / T0;
        if (ok && have_prev && f.knots.size() > 1 && tail_d0 > prev_slope) {
            ok = false;
            why = "tail derivative exceeds last linear slope";
        }
        if (ok && !(f.tail_p > 0 && f.tail_q > 0)) {
            ok = false;
            why = "tail derivative not decreasing";
        }
        add("right derivative nonincreasing", ok,
            ok ? "slopes nonincreasing; p q / (q x + r) decays" : why);
    }

    // derivative envelope F'(x) <= 2 / (8 x + 1) for x >= 2:
    // p q (8 x + 1) - 2 (q x + r) <= 0 is linear in x, so checking the
    // leading coefficient and the left end of the range is exact
    {
        bool ok = true;
        std::string why;
        Rational x0 = std::max(Rational(2), t);
        Rational c1 = 8 * f.tail_p * f.tail_q - 2 * f.tail_q;
        Rational c0v = c1 * x0 + f.tail_p * f.tail_q - 2 * f.tail_r;
        if (c1 > 0) { ok = false; why = "envelope violated as x grows"; }
        if (ok && c0v > 0) { ok = false; why = "envelope violated at start"; }
        // linear pieces that overlap [2, t]
        for (std::size_t i = 1; ok && i < f.knots.size(); ++i) {
            Rational lo = std::max(Rational(2), f.knots[i - 1].first);
            if (!(lo < f.knots[i].first)) continue;
            Rational slope = (f.knots[i].second - f.knots[i - 1].second) /
                             (f.knots[i].first - f.knots[i - 1].first);
            if (slope * (8 * lo + 1) > 2) {
                ok = false;
                why = "linear slope breaks envelope after x = 2";
            }
        }
        // spot-check integer difference quotients F(i+1) - F(i), which
        // the envelope dominates for a concave increasing tail
        for (long i = 2; ok && i < horizon; i = (i < 34 ? i + 1 : i * 2)) {
            Rational xi(i), xj(i + 1);
            if (xi < t) continue;
            Rational diff_bound = Rational(2) / Rational(8 * i + 1);
            // p ln(T_j / T_i) <= 2/(8i+1), decided exactly
            Rational Ti = f.tail_q * xi + f.tail_r;
            Rational Tj = f.tail_q * xj + f.tail_r;
            mpz_class D(f.tail_p.get_den());
            Rational dp = Rational(D) * f.tail_p;
            Rational R = pow_rational(Tj / Ti, dp.get_num());
            Order o = order_vs_log(Rational(D) * diff_bound, R, 1 << 14);
            if (o == Order::Less) {
                ok = false;
                why = "difference quotient exceeds envelope at " +
                      std::to_string(i);
            }
        }
        add("derivative envelope 2/(8x+1)", ok,
            ok ? "exact linear check plus sampled difference quotients"
               : why);
    }

    add("unbounded growth", f.tail_p > 0 && f.tail_q > 0,
        "p > 0 and q > 0 force the tail to infinity");
    return rep;
}

} // namespace predim
