#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stein/errors.hpp"
#include "stein/front.hpp"
#include "support/fronts.hpp"

using namespace stein;

namespace {

FrontDiagram word(const std::string& events, std::vector<int> slots = {}) {
    FrontDiagram d;
    d.slots = std::move(slots);
    d.events = parse_events(events);
    FrontTrace t(d);
    for (int c = 1; c <= t.components(); ++c) d.orientation[c] = 1;
    return d;
}

const char* kUnknot = "L1 R1";
const char* kRightTrefoil = "L1 L3 X2 X2 X2 R3 R1";
const char* kHopf = "L1 L3 X2 X2 R1 R1";

}  // namespace

TEST_CASE("unknot invariants") {
    auto s = component_stats(word(kUnknot), 1);
    CHECK(s.tb == -1);
    CHECK(s.r == 0);
    CHECK(s.w == 0);
    CHECK(s.lambda == 1);
    CHECK(s.rho == 1);
}

TEST_CASE("right trefoil invariants") {
    FrontDiagram d = word(kRightTrefoil);
    REQUIRE(validate(d).ok());
    auto s = component_stats(d, 1);
    CHECK(s.w == 3);
    CHECK(s.lambda == 2);
    CHECK(s.tb == 1);
    CHECK(s.r == 0);
    CHECK(s.t_plus == 2);
    CHECK(s.t_minus == 2);
    d.orientation[1] = -1;
    CHECK(component_stats(d, 1).tb == 1);
    CHECK(component_stats(d, 1).r == 0);
}

TEST_CASE("three crossings between the inner cusp branches give a stabilized unknot") {
    auto s = component_stats(word("L1 L3 X2 X2 X2 R2 R1"), 1);
    CHECK(s.w == -3);
    CHECK(s.tb == -5);
}

TEST_CASE("validation fixtures") {
    CHECK(validate(word(kUnknot)).ok());
    FrontDiagram bad;
    bad.events = parse_events("R1");
    auto v = validate(bad);
    REQUIRE_FALSE(v.ok());
    CHECK(v.violations[0].find("height out of range") != std::string::npos);
    FrontDiagram pairing;
    pairing.slots = {2};
    pairing.events = parse_events("R1");
    auto pv = validate(pairing);
    REQUIRE_FALSE(pv.ok());
    CHECK(pv.violations[0].find("slot pairing") != std::string::npos);
    FrontDiagram unoriented;
    unoriented.events = parse_events(kUnknot);
    CHECK_FALSE(validate(unoriented).ok());
}

TEST_CASE("component ids follow first occurrence") {
    FrontDiagram d = word("L1 L3 R3 R1");
    FrontTrace t(d);
    CHECK(t.components() == 2);
    CHECK(t.component({1, 1}) == 1);
    CHECK(t.component({2, 3}) == 2);
}

TEST_CASE("linking numbers") {
    CHECK(linking_number(word("L1 R1 L1 R1"), 1, 2) == 0);
    FrontDiagram hopf = word(kHopf);
    int l = linking_number(hopf, 1, 2);
    CHECK(std::abs(l) == 1);
    CHECK(linking_number(hopf, 2, 1) == l);
    hopf.orientation[2] = -1;
    CHECK(linking_number(hopf, 1, 2) == -l);
    // two parallel strands through one handle
    CHECK(linking_number(word("", {2}), 1, 2) == 0);
    CHECK_THROWS(linking_number(hopf, 1, 1));
}

TEST_CASE("stabilization fixtures") {
    FrontDiagram u = word(kUnknot);
    auto up = component_stats(stabilize(u, 1, {1, 1}, StabilizationDirection::up), 1);
    CHECK(up.tb == -2);
    CHECK(up.r == -1);
    auto down = component_stats(stabilize(u, 1, {1, 2}, StabilizationDirection::down), 1);
    CHECK(down.tb == -2);
    CHECK(down.r == 1);
    auto twice = stabilize(stabilize(u, 1, {1, 1}, StabilizationDirection::up), 1, {1, 1}, StabilizationDirection::down);
    auto tw = component_stats(twice, 1);
    CHECK(tw.tb == -3);
    CHECK(tw.r == 0);
    CHECK_THROWS(stabilize(u, 1, {0, 1}, StabilizationDirection::up));
    CHECK_THROWS(stabilize(word("L1 R1 L1 R1"), 1, {3, 1}, StabilizationDirection::up));
}

TEST_CASE("parity of tb + r + 1 matches handle passages on random fronts") {
    testgen::Gen g(101);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        FrontDiagram d = testgen::random_front(g);
        REQUIRE(validate(d).ok());
        for (const auto& s : all_component_stats(d)) {
            CHECK(((s.tb + s.r + 1 - s.total_passages()) % 2 + 2) % 2 == 0);
            CHECK(s.lambda == s.rho);
            CHECK(s.lambda_plus + s.lambda_minus == s.lambda);
            CHECK(s.rho_plus + s.rho_minus == s.rho);
            CHECK(s.r == s.rho_minus - s.lambda_plus);
            CHECK(2 * s.r == s.t_minus - s.t_plus);
            CHECK(s.tb == s.w - s.lambda);
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("stabilization shifts (tb, r) by (-1, -+1) on random fronts") {
    testgen::Gen g(103);
    for (int t = 0; t < 500; ++t) {
        FrontDiagram d = testgen::random_front(g);
        FrontTrace tr(d);
        if (tr.components() == 0) continue;
        int gap = static_cast<int>(g.range(0, tr.gaps() - 1));
        if (tr.count(gap) == 0) continue;
        Piece loc{gap, static_cast<int>(g.range(1, tr.count(gap)))};
        int c = tr.component(loc);
        bool up = g.coin();
        auto before = all_component_stats(d);
        FrontDiagram e = stabilize(d, c, loc, up ? StabilizationDirection::up : StabilizationDirection::down);
        REQUIRE(validate(e).ok());
        auto after = all_component_stats(e);
        REQUIRE(after.size() == before.size());
        for (std::size_t k = 0; k < before.size(); ++k) {
            bool target = static_cast<int>(k) + 1 == c;
            CHECK(after[k].tb == before[k].tb - (target ? 1 : 0));
            CHECK(after[k].r == before[k].r + (target ? (up ? -1 : 1) : 0));
        }
    }
}

TEST_CASE("stabilization commutes with a fishtail elsewhere") {
    FrontDiagram d = word(kRightTrefoil);
    MoveSpec fish{1, MoveVariant::fishtail_below, 6, 1, 0};
    FrontDiagram a = apply_move(stabilize(d, 1, {1, 1}, StabilizationDirection::up), {1, MoveVariant::fishtail_below, 8, 1, 0});
    FrontDiagram b = stabilize(apply_move(d, fish), 1, {1, 1}, StabilizationDirection::up);
    auto sa = component_stats(a, 1), sb = component_stats(b, 1);
    CHECK(sa.tb == sb.tb);
    CHECK(sa.r == sb.r);
    CHECK(sa.tb == 0);
}

TEST_CASE("linking is symmetric and flips with orientation on random fronts") {
    testgen::Gen g(107);
    for (int t = 0; t < 400; ++t) {
        FrontDiagram d = testgen::random_front(g);
        FrontTrace tr(d);
        if (tr.components() < 2) continue;
        for (int a = 1; a <= tr.components(); ++a)
            for (int b = a + 1; b <= tr.components(); ++b) {
                int l = linking_number(d, a, b);
                CHECK(linking_number(d, b, a) == l);
                FrontDiagram r = d;
                r.orientation[b] = -r.orientation[b];
                CHECK(linking_number(r, a, b) == -l);
            }
    }
}

TEST_CASE("move fixtures") {
    FrontDiagram u = word(kUnknot);
    for (auto v : {MoveVariant::fishtail_below, MoveVariant::fishtail_above}) {
        FrontDiagram f = apply_move(u, {1, v, 1, 1, 0});
        auto s = component_stats(f, 1);
        CHECK(s.tb == -1);
        CHECK(s.r == 0);
        CHECK(apply_move(f, {1, MoveVariant::fishtail_remove, 1, 1, 0}) == u);
    }
    FrontDiagram t = word(kRightTrefoil);
    CHECK_THROWS(apply_move(t, {2, MoveVariant::cusp_strand_below, 0, 1, 0}));
    FrontDiagram e = apply_move(t, {2, MoveVariant::cusp_strand_above, 1, 1, 0});
    CHECK(events_str(e.events) == "L1 L2 X3 X2 X2 X2 X2 R3 R1");
    CHECK(component_stats(e, 1).w == component_stats(t, 1).w);
    CHECK(apply_move(e, {2, MoveVariant::cusp_strand_collapse, 1, 1, 0}) == t);
    CHECK_THROWS(apply_move(t, {3, MoveVariant::triple, 0, 1, 0}));
    FrontDiagram braid = word("L1 L3 X2 X1 X2 R3 R1", {});
    FrontDiagram b3 = apply_move(braid, {3, MoveVariant::triple, 2, 1, 0});
    CHECK(events_str(b3.events) == "L1 L3 X1 X2 X1 R3 R1");
}

TEST_CASE("seam moves carry a column through a handle") {
    FrontDiagram d = word("X1", {2});
    FrontDiagram f = apply_move(d, {5, MoveVariant::first_to_last, 0, 1, 0});
    CHECK(f.events == d.events);
    FrontDiagram c = word("L1 R1", {0});
    CHECK_THROWS(apply_move(c, {5, MoveVariant::first_to_last, 0, 1, 0}));
    CHECK_THROWS(apply_move(d, {4, MoveVariant::first_to_last, 0, 1, 0}));
    FrontDiagram h = word("L1 R1", {0});
    h.slots = {0};
    FrontDiagram moved = apply_move(h, {4, MoveVariant::last_to_first, 0, 1, 0});
    CHECK(moved.slots == std::vector<int>{2});
    CHECK(events_str(moved.events) == "R1 L1");
    CHECK(component_stats(moved, 1).tb == -1);
}

TEST_CASE("moves 0 to 5 preserve tb and r and move 6 shifts tb by twice the signed runs") {
    testgen::Gen g(109);
    int applied = 0, swings = 0;
    FrontDiagram d = testgen::random_front(g);
    int misses = 0;
    for (int attempt = 0; attempt < 20000 && applied < 4000; ++attempt) {
        if (d.events.size() > 40 || misses > 10) {
            d = testgen::random_front(g);
            misses = 0;
        }
        auto pick = testgen::random_applicable_move(g, d);
        if (!pick) {
            ++misses;
            continue;
        }
        misses = 0;
        const MoveSpec m = *pick;
        TrackedMove out = apply_move_tracked(d, m);
        REQUIRE(validate(out.diagram).ok());
        auto before = all_component_stats(d);
        auto after = all_component_stats(out.diagram);
        REQUIRE(before.size() == after.size());
        int moved = m.move == 6 ? move6_component(d, m) : 0;
        int shift = m.move == 6 ? move6_signed_runs(d, m) : 0;
        for (std::size_t k = 0; k < before.size(); ++k) {
            const auto& a = after[static_cast<std::size_t>(out.image[k + 1] - 1)];
            int expected_tb = before[k].tb + (static_cast<int>(k) + 1 == moved ? 2 * shift : 0);
            CHECK(a.tb == expected_tb);
            CHECK(a.r == before[k].r);
        }
        if (m.move == 6) ++swings;
        ++applied;
        d = out.diagram;
    }
    CHECK(applied == 4000);
    CHECK(swings > 100);
}

TEST_CASE("a swing preserves H1 and the signature of the surgered handlebody") {
    testgen::Gen g(113);
    int checked = 0;
    for (int t = 0; t < 3000 && checked < 300; ++t) {
        FrontDiagram d = testgen::random_front(g);
        if (d.n_handles() == 0) continue;
        MoveSpec m = testgen::random_move(g, d);
        m.move = 6;
        m.variant = g.coin() ? MoveVariant::swing_down : MoveVariant::swing_up;
        FrontDiagram e;
        try {
            e = apply_move(d, m);
        } catch (const std::invalid_argument&) {
            continue;
        }
        for (auto* x : {&d, &e}) {
            FrontTrace tr(*x);
            for (int c = 1; c <= tr.components(); ++c) x->coefficients[c] = Coefficient::stein();
        }
        auto p = surger_handles(d), q = surger_handles(e);
        CHECK(h1(p) == h1(q));
        CHECK(signature(p.linking_matrix()) == signature(q.linking_matrix()));
        ++checked;
    }
    CHECK(checked == 300);
}

TEST_CASE("stein form check") {
    FrontDiagram u = word(kUnknot);
    u.coefficients[1] = Coefficient::of(-2);
    CHECK(check_stein_form(u).passed());
    u.coefficients[1] = Coefficient::of(-1);
    auto r = check_stein_form(u);
    REQUIRE_FALSE(r.passed());
    CHECK(r.failures[0].find("framing != tb-1") != std::string::npos);
    u.coefficients[1] = Coefficient::stein();
    CHECK(check_stein_form(u).passed());
    u.coefficients.clear();
    CHECK_FALSE(check_stein_form(u).passed());
}

TEST_CASE("surgering handles") {
    for (int p = 1; p <= 5; ++p) {
        FrontDiagram d = testgen::handle_cycle_front(p);
        auto s = component_stats(d, 1);
        CHECK(s.tb == 1);
        CHECK(s.r == 0);
        CHECK(s.handle_runs == std::vector<int>{2 * p});
        auto pres = surger_handles(d);
        CHECK(pres.linking_matrix() == IntMatrix{{0, 2 * p}, {2 * p, 0}});
        CHECK(pres.components[1].in_L0);
    }
    FrontDiagram closed = word(kRightTrefoil);
    closed.coefficients[1] = Coefficient::stein();
    auto pc = surger_handles(closed);
    CHECK(pc.size() == 1);
    CHECK(pc.components[0].coefficient == ExtRational(0));
    // one strand through one handle, stabilized to tb t
    FrontDiagram once = word("", {1});
    once.coefficients[1] = Coefficient::stein();
    for (int t = 0; t > -4; --t) {
        auto po = surger_handles(once);
        CHECK(po.linking_matrix() == IntMatrix{{t - 1, 1}, {1, 0}});
        once = stabilize(once, 1, {0, 1}, StabilizationDirection::up);
    }
    FrontDiagram missing = word(kUnknot);
    CHECK_THROWS(surger_handles(missing));
}

TEST_CASE("front files round-trip and reject unknown keys") {
    const std::string text = "front 1\nhandles 1\nhandle 1 slots 2\nevents X1\n  L1 R1\norient 1 -\norient 2 +\ncoeff 1 stein\n";
    FrontDiagram d = parse_front(text);
    CHECK(d.slots == std::vector<int>{2});
    CHECK(events_str(d.events) == "X1 L1 R1");
    CHECK(parse_front(serialize_front(d)) == d);
    CHECK(serialize_front(parse_front(serialize_front(d))) == serialize_front(d));
    try {
        parse_front("front 1\nhandles 0\nevents L1 R1\norient 1 +\ncolor 1 red\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 5);
    }
    CHECK_THROWS_AS(parse_front("front 1\nevents R1\n"), InvariantError);
    testgen::Gen g(127);
    for (int t = 0; t < 300; ++t) {
        FrontDiagram r = testgen::random_front(g);
        if (g.coin() && !r.orientation.empty()) r.coefficients[1] = Coefficient::of(g.rational(9, 4));
        CHECK(parse_front(serialize_front(r)) == r);
    }
}
