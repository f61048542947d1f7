#include "corpus.hpp"

#include "hypercox/arith.hpp"
#include "hypercox/canon.hpp"
#include "hypercox/diagram.hpp"
#include "hypercox/errors.hpp"
#include "hypercox/expr.hpp"
#include "hypercox/faces.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace hypercox;
using namespace hypercox::testing;

namespace {

AlgNum P(const char* s) { return parse_algebraic(s); }

AngleLabel label(AngleLabel::Kind k, long m = 2) {
    AngleLabel l;
    l.kind = k;
    l.m = m;
    return l;
}

/// Triangle group diagram: facets 1-2 at pi/a, 2-3 at pi/b, 1-3 at pi/c
/// (0 for a parallel pair).
GramMatrix triangle(long a, long b, long c) {
    CoxeterDiagram d;
    d.vertices = {"1", "2", "3"};
    auto add = [&](int u, int v, long m) {
        if (m == 2) return;
        d.edges.push_back({u, v, m == 0 ? label(AngleLabel::Kind::Parallel) : label(AngleLabel::Kind::Angle, m)});
    };
    add(0, 1, a);
    add(1, 2, b);
    add(0, 2, c);
    return diagram_to_gram(d);
}

/// The 3-face of the Bugaenko polytope carrying the hexagon and the pentagon.
const FacetTree::Node& fig3_node() {
    const auto& tree = fixture_tree("bugaenko-lattice");
    const CoxeterDiagram fig3 = load_diagram("fig3-face-diagram");
    for (const auto& n : tree.nodes) {
        if (n.face.dim == 3 && n.face.is_coxeter && diagram_isomorphism(gram_to_diagram(n.face.gram), fig3))
            return n;
    }
    throw std::runtime_error("no 3-face of the reference type");
}

}  // namespace

TEST_SUITE("arith") {
    TEST_CASE("V1 fails on the prism through cosh^2 of the dashed edge") {
        const GramMatrix prism = load_polytope("prism-fig1");
        const auto r = check_v1(prism);
        CHECK_FALSE(r.ok);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->condition == "V1");
        CHECK(check_v1(fixture_gram("bugaenko-lattice")).ok);
        CHECK(check_v1(triangle(4, 5, 2)).ok);
    }

    TEST_CASE("V2") {
        CHECK(check_v2(load_polytope("hexagon-p2-1")).ok);
        const auto r = check_v2(triangle(3, 20, 2));
        CHECK_FALSE(r.ok);
        CHECK(r.decided);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->condition == "V2");
        // Rational entries: no embedding moves the ground field.
        CHECK(check_v2(triangle(3, 0, 2)).ok);
    }

    TEST_CASE("V3") {
        CHECK(check_v3(fixture_gram("bugaenko-lattice")).ok);
        const auto hex = check_v3(load_polytope("hexagon-p2-1"));
        CHECK_FALSE(hex.ok);
        REQUIRE(hex.witness.has_value());
        CHECK(hex.witness->condition == "V3");
        CHECK(check_v3(load_polytope("pentagon-p2-2")).ok);
        CHECK_THROWS_AS(check_v3(fixture_gram("bugaenko-lattice"), 1), CycleExplosion);
    }

    TEST_CASE("raising the cycle cap never turns V3 from false to true") {
        for (const char* name : {"hexagon-p2-1", "p6-face2", "lattice-15"}) {
            const GramMatrix& g = fixture_gram(name);
            bool seen_false = false;
            for (std::size_t cap : {1, 2, 4, 8, 64, 4096, 1000000}) {
                try {
                    const bool ok = check_v3(g, cap).ok;
                    CAPTURE(name);
                    CAPTURE(cap);
                    CHECK_FALSE((seen_false && ok));
                    seen_false = seen_false || !ok;
                } catch (const CycleExplosion&) {
                }
            }
        }
    }

    TEST_CASE("classification of the reference polytopes") {
        const auto prism = classify(load_polytope("prism-fig1"));
        CHECK(prism.verdict == Verdict::NotQuasiArithmetic);
        CHECK(classify(load_polytope("p6-face1")).verdict == Verdict::Arithmetic);
        CHECK(classify(load_polytope("p6-face2")).verdict == Verdict::ProperlyQuasiArithmetic);
        CHECK(classify(load_polytope("hexagon-p2-1")).verdict == Verdict::ProperlyQuasiArithmetic);
        CHECK(classify(load_polytope("pentagon-p2-2")).verdict == Verdict::Arithmetic);
        CHECK(classify(fixture_gram("bugaenko-lattice")).verdict == Verdict::Arithmetic);
        CHECK(classify(fixture_gram("lattice-15")).verdict == Verdict::Arithmetic);

        const auto capped = classify(fixture_gram("bugaenko-lattice"), 1);
        CHECK(capped.verdict == Verdict::Inconclusive);
        CHECK(to_string(Verdict::ProperlyQuasiArithmetic) == "properly_quasi_arithmetic");
    }

    TEST_CASE("lattice polytopes are arithmetic") {
        for (const auto& name : lattice_fixtures()) {
            CAPTURE(name);
            CHECK(classify(fixture_gram(name)).verdict == Verdict::Arithmetic);
        }
    }

    TEST_CASE("verdict does not depend on the facet order") {
        std::mt19937_64 rng(2);
        for (const auto& name : all_fixtures()) {
            const GramMatrix& g = fixture_gram(name);
            std::vector<int> p(g.size());
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            CAPTURE(name);
            CHECK(classify(g).verdict == classify(g.permuted(p)).verdict);
        }
    }

    TEST_CASE("facet field test") {
        const GramMatrix prism = load_polytope("prism-fig1");
        const GramMatrix base = face_gram(prism, {0});
        CHECK(corollary_test(prism, base) == CorollaryResult::Obstruction);
        CHECK(corollary_test(prism, prism) == CorollaryResult::NoConclusion);
        const GramMatrix& bug = fixture_gram("bugaenko-lattice");
        CHECK(corollary_test(bug, fig3_node().face.gram) == CorollaryResult::NoConclusion);
    }

    TEST_CASE("even-angle facet test on the hexagon and pentagon") {
        const auto& node = fig3_node();
        const GramMatrix& g = node.face.gram;
        const std::string hex = canonical_key(load_polytope("hexagon-p2-1"));
        const std::string pent = canonical_key(load_polytope("pentagon-p2-2"));
        int seen = 0;
        for (int j = 0; j < static_cast<int>(g.size()); ++j) {
            const std::string key = canonical_key(face_gram(g, {j}));
            const auto r = even_angle_facet_test(g, j);
            if (key == pent) {
                ++seen;
                CHECK(r.applicable);
            } else if (key == hex) {
                ++seen;
                CHECK_FALSE(r.applicable);
                CHECK(r.angle_m == 3);
            }
        }
        CHECK(seen >= 2);

        // A facet orthogonal to every neighbour.
        CHECK(even_angle_facet_test(load_polytope("prism-fig1"), 0).applicable);
    }

    TEST_CASE("rho_m") {
        CHECK(rho_even_check(2).first == AlgNum(2));
        CHECK(rho_even_check(3).first == AlgNum(4));
        const auto [rho5, even5] = rho_even_check(5);
        CHECK(rho5 == P("6+2*sqrt(5)"));
        CHECK(even5);
        for (long m = 2; m <= 50; ++m) {
            if (!is_constructible_angle(m)) {
                CHECK_THROWS_AS(rho_even_check(m), UnsupportedAngle);
                continue;
            }
            CAPTURE(m);
            CHECK(rho_even_check(m).second);
        }
    }
}
