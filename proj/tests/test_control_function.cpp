#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "predim/control_function.hpp"

using namespace predim;

TEST_CASE("the reference function pins its knot values exactly") {
    ControlFunction f = ControlFunction::reference();
    f.check_well_formed();
    CHECK(f.is_reference());
    CHECK(compare_value_F(Rational(0), Rational(0), f) == Order::Equal);
    CHECK(compare_value_F(Rational(2), Rational(1), f) == Order::Equal);
    CHECK(compare_value_F(Rational(3), Rational(2), f) == Order::Equal);
    // halfway along the first segment: F(1/2) = 1
    CHECK(compare_value_F(Rational(1), Rational(1, 2), f) == Order::Equal);
    CHECK(compare_value_F(Rational(99, 100), Rational(1, 2), f) ==
          Order::Less);
    CHECK(compare_value_F(Rational(101, 100), Rational(1, 2), f) ==
          Order::Greater);
}

TEST_CASE("tail comparisons are decided, never punted") {
    ControlFunction f = ControlFunction::reference();
    // F(3) = (1/4) ln(25/17) + 3, strictly between 3 and 4
    CHECK(compare_value_F(Rational(3), Rational(3), f) == Order::Less);
    CHECK(compare_value_F(Rational(4), Rational(3), f) == Order::Greater);
    CHECK(compare_value_F(Rational(4), Rational(4), f) == Order::Greater);
    CHECK(compare_value_F(Rational(4), Rational(5), f) == Order::Greater);
    CHECK(compare_value_F(Rational(4), Rational(6), f) == Order::Greater);
    // a razor-thin rational near F(100) still resolves
    CHECK(compare_value_F(Rational(332861, 100000), Rational(100), f) !=
          Order::Unknown);
}

TEST_CASE("tail equality is recognised symbolically") {
    // make the tail exactly (1/2) ln(x) + 1 so F(e^2...) style probes
    // stay rational-free; instead probe the junction point where the
    // log term vanishes: F(1) = 1
    ControlFunction f;
    f.knots = {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}};
    f.tail_p = Rational(1, 2);
    f.tail_q = 1;
    f.tail_r = 0;
    f.tail_s.rat = 1;
    f.check_well_formed();
    CHECK(compare_value_F(Rational(1), Rational(1), f) == Order::Equal);
    CHECK(compare_value_F(Rational(1), Rational(2), f) == Order::Less);
}

TEST_CASE("interval evaluation narrows with precision") {
    ControlFunction f = ControlFunction::reference();
    auto coarse = eval_bounds(f, Rational(10), 8);
    auto fine = eval_bounds(f, Rational(10), 64);
    CHECK(coarse.lo <= fine.lo);
    CHECK(fine.hi <= coarse.hi);
    CHECK(fine.width() < Rational(1, 1000000));
    CHECK(coarse.lo <= coarse.hi);
    // exact on the linear part
    auto linear = eval_bounds(f, Rational(3, 2), 8);
    CHECK(linear.width() == 0);
    CHECK(linear.lo == Rational(5, 2));
}

TEST_CASE("delta comparisons match the spec examples") {
    ControlFunction f = ControlFunction::reference();
    CHECK(compare_delta_F(2, 1, f) == DeltaCompare::GE);
    CHECK(compare_delta_F(4, 6, f) == DeltaCompare::GE);
    CHECK(compare_delta_F(3, 3, f) == DeltaCompare::LT);
    CHECK(compare_delta_F(0, 0, f) == DeltaCompare::GE);
    CHECK(compare_delta_F(1, 1, f) == DeltaCompare::LT);
    CHECK(compare_delta_F(4, 115, f) == DeltaCompare::GE);
    CHECK(compare_delta_F(4, 116, f) == DeltaCompare::LT);
}

TEST_CASE("integer thresholds of the reference function") {
    ControlFunction f = ControlFunction::reference();
    CHECK(min_delta_for_size(f, 0) == 0);
    CHECK(min_delta_for_size(f, 1) == 2);
    CHECK(min_delta_for_size(f, 2) == 3);
    for (long n = 3; n <= 115; ++n) CHECK(min_delta_for_size(f, n) == 4);
    CHECK(min_delta_for_size(f, 116) == 5);
    CHECK(min_delta_for_size(f, 117) == 5);

    CHECK(inverse_bound(f, 0) == 0);
    CHECK(inverse_bound(f, 2) == 1);
    CHECK(inverse_bound(f, 3) == 2);
    CHECK(inverse_bound(f, 4) == 116);
}

TEST_CASE("the reference function passes its own validation") {
    auto report = validate_control_function(ControlFunction::reference());
    CHECK(report.ok());
    for (const auto& c : report.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.ok);
    }
    CHECK(report.find("value at 1") != nullptr);
}

TEST_CASE("a flat tail fails the growth checks") {
    ControlFunction f = ControlFunction::reference();
    f.tail_p = 0;   // tail becomes the constant s
    auto report = validate_control_function(f);
    CHECK_FALSE(report.ok());
}

TEST_CASE("a junction jump fails continuity") {
    ControlFunction f = ControlFunction::reference();
    f.tail_s.rat += 1;   // shift the log branch up by one
    auto report = validate_control_function(f);
    CHECK_FALSE(report.ok());
}

TEST_CASE("malformed knot lists are rejected outright") {
    ControlFunction f = ControlFunction::reference();
    f.knots[1].first = Rational(0);   // duplicate x
    CHECK_THROWS_AS(f.check_well_formed(), Error);

    ControlFunction g = ControlFunction::reference();
    g.knots.erase(g.knots.begin());   // no knot at x = 0
    CHECK_THROWS_AS(g.check_well_formed(), Error);

    ControlFunction h = ControlFunction::reference();
    h.tail_q = -1;   // log argument eventually negative
    CHECK_THROWS_AS(h.check_well_formed(), Error);
}

TEST_CASE("a decreasing segment is caught by validation") {
    ControlFunction f;
    f.knots = {{Rational(0), Rational(0)},
               {Rational(1), Rational(2)},
               {Rational(2), Rational(1)}};   // drops
    f.tail_p = Rational(1, 4);
    f.tail_q = 8;
    f.tail_r = 1;
    f.tail_s.rat = 1;
    f.tail_s.log = LogTerm{Rational(-1, 4), Rational(17)};
    f.check_well_formed();   // structurally fine
    auto report = validate_control_function(f);
    CHECK_FALSE(report.ok());
}
