#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stein/errors.hpp"
#include "stein/presentation.hpp"
#include "support/gen.hpp"
#include "support/surgeries.hpp"

#include <algorithm>

using namespace stein;

namespace {

ExtRational q(long long p, long long d = 1) { return ExtRational(Integer(p), Integer(d)); }

using testgen::borromean;
using testgen::invariant_factors_of_cyclic_sum;
using testgen::random_presentation;
using testgen::unknot;

}  // namespace

TEST_CASE("linking bookkeeping") {
    SurgeryPresentation p = borromean(q(1), q(2), q(3));
    p.set_linking(0, 2, 5);
    CHECK(p.linking(2, 0) == 5);
    p.remove_component(1);
    CHECK(p.size() == 2);
    CHECK(p.linking(0, 1) == 5);
    CHECK(p.linking_matrix() == IntMatrix{{1, 5}, {5, 3}});
    CHECK_THROWS(p.linking(0, 0));
}

TEST_CASE("first homology fixtures") {
    SurgeryPresentation z;
    z.add_component(unknot(q(0)));
    CHECK(h1(z).free_rank == 1);
    CHECK(h1(z).torsion.empty());
    SurgeryPresentation lens;
    lens.add_component(unknot(q(-7, 3)));
    CHECK(h1(lens).torsion == std::vector<Integer>{7});
    CHECK(h1(SurgeryPresentation{}).is_trivial());
    CHECK(h1(borromean(q(1), q(1), q(1))).is_trivial());
}

TEST_CASE("borromean surgeries have homology Z/p1 + Z/p2 + Z/p3") {
    testgen::Gen g(201);
    for (int t = 0; t < 200; ++t) {
        std::vector<ExtRational> r;
        std::vector<long long> nums;
        for (int k = 0; k < 3; ++k) {
            ExtRational x = g.nonzero_rational(20, 9);
            r.push_back(x);
            nums.push_back(static_cast<long long>(x.num()));
        }
        AbelianGroup h = h1(borromean(r[0], r[1], r[2]));
        CHECK(h.free_rank == 0);
        CHECK(h.torsion == invariant_factors_of_cyclic_sum(nums));
    }
}

TEST_CASE("linking form fixtures") {
    for (int n : {-5, -2, 3, 7}) {
        SurgeryPresentation p;
        p.add_component(unknot(q(n)));
        CHECK(linking_form(p, {1}, {1}) == (ExtRational(-1) / ExtRational(n)).frac());
        CHECK(linking_form(p, {1}, {0}) == q(0));
        for (int k = 2; k < 5; ++k)
            CHECK(linking_form(p, {k}, {k}) == (ExtRational(k * k) * linking_form(p, {1}, {1})).frac());
    }
    SurgeryPresentation free;
    free.add_component(unknot(q(0)));
    CHECK_THROWS(linking_form(free, {1}, {1}));
}

TEST_CASE("linking form is symmetric and bilinear") {
    testgen::Gen g(203);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        SurgeryPresentation p = expand_rational(random_presentation(g, 5));
        if (p.size() == 0) continue;
        auto vec = [&]() {
            IntVector v(p.size());
            for (auto& e : v) e = g.range(-3, 3);
            return v;
        };
        IntVector x = vec(), y = vec(), z = vec();
        if (rational_rank(to_rational(p.linking_matrix())) < p.size()) continue;
        IntVector yz(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) yz[k] = y[k] + z[k];
        CHECK(linking_form(p, x, y) == linking_form(p, y, x));
        CHECK(linking_form(p, x, yz) == (linking_form(p, x, y) + linking_form(p, x, z)).frac());
        // shifting by a relation does not change the value
        IntMatrix qm = p.linking_matrix();
        IntVector shifted = y;
        std::size_t col = static_cast<std::size_t>(g.range(0, static_cast<long long>(p.size()) - 1));
        for (std::size_t k = 0; k < p.size(); ++k) shifted[k] += qm(k, col);
        CHECK(linking_form(p, x, shifted) == linking_form(p, x, y));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("rational expansion fixtures") {
    SurgeryPresentation p;
    p.add_component(unknot(q(-7, 2)));
    SurgeryPresentation e = expand_rational(p);
    REQUIRE(e.size() == 2);
    CHECK(e.components[0].coefficient == q(-4));
    CHECK(e.components[1].coefficient == q(-2));
    CHECK(e.linking(0, 1) == 1);
    SurgeryPresentation ints = borromean(q(1), q(-2), q(5));
    ints.set_linking(0, 1, 3);
    CHECK(expand_rational(ints) == ints);
    SurgeryPresentation with_inf = borromean(q(1), ExtRational::infinity(), q(5));
    with_inf.set_linking(0, 2, 2);
    SurgeryPresentation dropped = expand_rational(with_inf);
    CHECK(dropped.size() == 2);
    CHECK(dropped.linking(0, 1) == 2);
}

TEST_CASE("expansion followed by slam dunks recovers the coefficients") {
    testgen::Gen g(205);
    for (int t = 0; t < 300; ++t) {
        SurgeryPresentation p = random_presentation(g, 5);
        SurgeryPresentation finite;
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p.components[i].coefficient.is_finite()) kept.push_back(i);
        SurgeryPresentation e = expand_rational(p);
        CHECK(h1(e) == h1(p));
        while (e.size() > kept.size()) {
            std::size_t j = e.size() - 1;
            std::size_t i = 0;
            while (e.linking(i, j) == 0) ++i;
            e = slam_dunk(e, i, j);
        }
        for (std::size_t a = 0; a < kept.size(); ++a) CHECK(e.components[a].coefficient == p.components[kept[a]].coefficient);
    }
}

TEST_CASE("rolfsen twist fixtures") {
    SurgeryPresentation p;
    p.add_component(unknot(q(-3)));
    CHECK(rolfsen_twist(p, 0, 1).components[0].coefficient == q(3, 2));
    CHECK(rolfsen_twist(p, 0, 0) == p);
    SurgeryPresentation pair;
    pair.add_component(unknot(q(5)));
    pair.add_component(unknot(q(0)), {1});
    SurgeryPresentation tw = rolfsen_twist(pair, 1, 1);
    CHECK(tw.components[0].coefficient == q(6));
    CHECK(tw.components[1].coefficient == q(0));
    CHECK_FALSE(tw.components[0].is_unknot);
    SurgeryPresentation knotted;
    knotted.add_component(SurgeryComponent{q(1), false, false, {}, {}});
    CHECK_THROWS(rolfsen_twist(knotted, 0, 1));
}

TEST_CASE("slam dunk fixtures") {
    SurgeryPresentation p;
    p.add_component(unknot(q(-4)));
    p.add_component(unknot(q(-2)), {1});
    SurgeryPresentation d = slam_dunk(p, 0, 1);
    REQUIRE(d.size() == 1);
    CHECK(d.components[0].coefficient == q(-7, 2));
    for (long long e0 : {-3, -1, 0, 2}) {
        SurgeryPresentation s;
        s.add_component(unknot(q(e0)));
        SurgeryPresentation inv = slam_dunk_inverse(s, 0, 1);
        CHECK(inv.components[0].coefficient == q(1));
        CHECK(inv.components[1].coefficient == ExtRational(1) / ExtRational(1 - e0));
        CHECK(slam_dunk(inv, 0, 1) == s);
    }
    SurgeryPresentation at_inf;
    at_inf.add_component(unknot(q(3)));
    at_inf.add_component(unknot(ExtRational::infinity()), {1});
    SurgeryPresentation gone = slam_dunk(at_inf, 0, 1);
    CHECK(gone.size() == 1);
    CHECK(gone.components[0].coefficient == q(3));
    SurgeryPresentation bad = p;
    bad.set_linking(0, 1, 2);
    CHECK_THROWS(slam_dunk(bad, 0, 1));
}

TEST_CASE("blow down fixtures") {
    SurgeryPresentation split = borromean(q(1), q(4), q(-2));
    SurgeryPresentation b = blow_down(split, 0);
    CHECK(b.size() == 2);
    CHECK(b.components[0].coefficient == q(4));
    SurgeryPresentation linked;
    linked.add_component(SurgeryComponent{q(5), false, false, {}, {}});
    linked.add_component(unknot(q(1)), {1});
    CHECK(blow_down(linked, 1).components[0].coefficient == q(4));
    SurgeryPresentation m111 = borromean(q(1), q(1), q(1));
    SurgeryPresentation once = blow_down(m111, 0);
    once.components[0].is_unknot = true;
    SurgeryPresentation twice = blow_down(once, 0);
    REQUIRE(twice.size() == 1);
    CHECK(twice.components[0].coefficient == q(1));
    CHECK(h1(twice).is_trivial());
    CHECK_THROWS(blow_down(borromean(q(2), q(1), q(1)), 0));
}

TEST_CASE("surgery calculus preserves first homology") {
    testgen::Gen g(207);
    int steps = 0;
    for (int t = 0; t < 300; ++t) {
        SurgeryPresentation p = random_presentation(g, 6);
        const AbelianGroup start = h1(p);
        for (int s = 0; s < 6 && p.size() > 0 && p.size() < 10; ++s) {
            if (!testgen::random_calculus_step(g, p)) continue;
            CHECK(h1(p) == start);
            ++steps;
        }
    }
    CHECK(steps > 500);
}

TEST_CASE("stein planner") {
    SurgeryPresentation p;
    p.add_component(unknot(q(-3)));
    auto r = stein_plan(p, {{0, Integer(-1)}});
    REQUIRE(r.plan);
    const auto& cp = r.plan->components[0];
    CHECK(cp.terms == std::vector<Integer>{-3});
    CHECK(cp.chain[0].zigzags == 1);
    CHECK(cp.chain[0].tb == -2);
    CHECK(cp.chain[0].rot == -1);
    SurgeryPresentation edge;
    edge.add_component(unknot(q(-1)));
    auto rej = stein_plan(edge, {{0, Integer(-1)}});
    CHECK_FALSE(rej.plan);
    CHECK(rej.rejected == std::vector<std::size_t>{0});
    SurgeryPresentation inf;
    inf.add_component(unknot(ExtRational::infinity()));
    inf.add_component(unknot(q(-5, 3)), {1});
    auto ri = stein_plan(inf, {{1, Integer(-1)}});
    REQUIRE(ri.plan);
    CHECK(ri.plan->components[0].deleted);
    CHECK(ri.plan->expanded.size() == 2);
    CHECK_THROWS(stein_plan(inf, {}));
}

TEST_CASE("stein plans are framed tb - 1 and re-evaluate to the input") {
    testgen::Gen g(209);
    int planned = 0;
    for (int t = 0; t < 500; ++t) {
        SurgeryPresentation p = random_presentation(g, 4);
        std::map<std::size_t, Integer> tb;
        for (std::size_t i = 0; i < p.size(); ++i) {
            tb[i] = g.range(-4, 4);
            p.components[i].rot = Integer(g.range(-3, 3));
        }
        auto r = stein_plan(p, tb);
        for (std::size_t i : r.rejected) CHECK_FALSE(p.components[i].coefficient < ExtRational(tb[i]));
        if (!r.plan) continue;
        ++planned;
        for (const auto& c : r.plan->expanded.components) {
            REQUIRE(c.tb);
            CHECK(c.coefficient == ExtRational(*c.tb - 1));
        }
        for (const auto& cp : r.plan->components) {
            if (cp.deleted) continue;
            CHECK(ContinuedFraction{cp.terms}.evaluate() == p.components[cp.component].coefficient);
            for (std::size_t j = 0; j < cp.chain.size(); ++j) {
                CHECK(cp.chain[j].tb == cp.chain[j].framing + 1);
                CHECK(cp.chain[j].zigzags >= 0);
            }
        }
        CHECK(h1(r.plan->expanded) == h1(p));
    }
    CHECK(planned > 50);
}

TEST_CASE("surgery files") {
    const std::string text =
        "surgery 1\ncomponents 2\ncoeff 1 -7/2\ncoeff 2 0\nunknot 2\nl0 2\nlk 1 2 3\nlk 2 1 3\ntb 1 -1\nrot 1 0\n";
    SurgeryPresentation p = parse_surgery(text);
    CHECK(p.components[0].coefficient == q(-7, 2));
    CHECK(p.linking(0, 1) == 3);
    CHECK(p.components[1].in_L0);
    CHECK(parse_surgery(serialize_surgery(p)) == p);
    CHECK_THROWS_AS(parse_surgery("surgery 1\ncomponents 2\ncoeff 1 1\ncoeff 2 1\nlk 1 2 1\nlk 2 1 2\n"), InvariantError);
    CHECK_THROWS_AS(parse_surgery("surgery 1\ncomponents 1\ncoeff 1 1\ncolor 1 red\n"), ParseError);
    CHECK_THROWS_AS(parse_surgery("surgery 1\ncomponents 1\n"), InvariantError);
    CHECK_THROWS_AS(parse_surgery("surgery 1\ncomponents 1\ncoeff 1 2\nl0 1\nunknot 1\n"), InvariantError);
    testgen::Gen g(211);
    for (int t = 0; t < 200; ++t) {
        SurgeryPresentation r = random_presentation(g, 6);
        if (g.coin()) r.components[0].tb = Integer(g.range(-5, 5));
        CHECK(parse_surgery(serialize_surgery(r)) == r);
    }
}
