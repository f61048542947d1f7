#include "corpus.hpp"

#include "hypercox/diagram.hpp"
#include "hypercox/errors.hpp"
#include "hypercox/expr.hpp"
#include "hypercox/faces.hpp"
#include "hypercox/vinberg.hpp"

#include <doctest.h>

#include <numeric>
#include <optional>

using namespace hypercox;
using namespace hypercox::testing;

namespace {

DiagonalLattice rational_lattice(std::vector<std::int64_t> diag) {
    DiagonalLattice l;
    for (auto d : diag) l.diag.push_back({d, 0});
    return l;
}

std::vector<QuadInt> z(std::initializer_list<std::int64_t> xs) {
    std::vector<QuadInt> out;
    for (auto x : xs) out.push_back({x, 0});
    return out;
}

std::vector<std::int64_t> ints(const Root& r) {
    std::vector<std::int64_t> out;
    for (auto c : r.coords) out.push_back(c.a);
    return out;
}

bool primitive(const DiagonalLattice& l, const Root& e) { return l.ring.coprime(e.coords); }

}  // namespace

TEST_SUITE("vinberg") {
    TEST_CASE("ring of integers of Q(sqrt(5))") {
        const QuadRing r(5);
        CHECK(r.half_integral());
        const QuadInt phi{0, 1};
        CHECK(r.mul(phi, phi) == r.add(phi, {1, 0}));
        CHECK(r.norm(phi) == -1);
        CHECK(r.is_unit(phi));
        CHECK(r.fundamental_unit() == phi);
        CHECK(r.to_alg(phi) == parse_algebraic("(1+sqrt(5))/2"));
        CHECK(r.from_alg(parse_algebraic("(3+sqrt(5))/2")) == QuadInt{1, 1});
        CHECK_THROWS_AS(r.from_alg(parse_algebraic("sqrt(5)/2")), InvalidInput);
        CHECK(r.divide({2, 0}, phi).has_value());
        CHECK_FALSE(r.divide({1, 0}, {2, 0}).has_value());
        CHECK(r.sign(r.neg(phi)) == -1);
        CHECK(r.conj_sign(r.neg(phi)) == 1);
        CHECK_FALSE(r.coprime({{2, 0}, {4, 2}}));
        CHECK(r.coprime({{2, 0}, phi}));
        CHECK_THROWS_AS(QuadRing(4), InvalidInput);

        const QuadRing two(2);
        CHECK_FALSE(two.half_integral());
        CHECK(two.fundamental_unit() == QuadInt{1, 1});
    }

    TEST_CASE("lattice validation") {
        CHECK_NOTHROW(rational_lattice({-1, 1, 1}).validate());
        CHECK_THROWS_AS(rational_lattice({1, 1, 1}).validate(), InvalidInput);
        CHECK_THROWS_AS(rational_lattice({-1, 0, 1}).validate(), InvalidInput);
        DiagonalLattice bad;
        bad.ring = QuadRing(3);
        bad.diag = {{-2, -1}, {1, 0}, {1, 0}};
        CHECK_THROWS_AS(bad.validate(), InvalidInput);
    }

    TEST_CASE("admissible norms") {
        auto norms = [](const DiagonalLattice& l) {
            std::vector<std::int64_t> out;
            for (auto k : admissible_norms(l)) out.push_back(k.a);
            std::sort(out.begin(), out.end());
            return out;
        };
        CHECK(norms(rational_lattice({-15, 1, 1, 1, 1, 1})) == std::vector<std::int64_t>{1, 2, 3, 5, 6, 10, 15, 30});
        CHECK(norms(rational_lattice({-1, 1, 1})) == std::vector<std::int64_t>{1, 2});
        for (const auto& k : admissible_norms(load_lattice("bugaenko-lattice"))) {
            CHECK(QuadRing(5).totally_positive(k));
        }
    }

    TEST_CASE("fundamental cone") {
        const auto l = rational_lattice({-1, 1, 1});
        const auto cone = fundamental_cone(l);
        REQUIRE(cone.size() == 2);
        CHECK(ints(cone[0]) == std::vector<std::int64_t>{0, -1, 1});
        CHECK(cone[0].norm == QuadInt{2, 0});
        CHECK(ints(cone[1]) == std::vector<std::int64_t>{0, 0, -1});
        CHECK(cone[1].norm == QuadInt{1, 0});

        CHECK(fundamental_cone(rational_lattice({-1, 1})).size() == 1);

        const auto l15 = rational_lattice({-15, 1, 1, 1, 1, 1});
        const auto c15 = fundamental_cone(l15);
        CHECK(c15.size() == 5);
        for (std::size_t i = 0; i < c15.size(); ++i) {
            CHECK(c15[i].coords[0] == QuadInt{0, 0});
            for (std::size_t j = i + 1; j < c15.size(); ++j) CHECK(l15.ring.sign(l15.inner(c15[i].coords, c15[j].coords)) <= 0);
        }
    }

    TEST_CASE("next root agrees with exhaustive search") {
        const auto l = rational_lattice({-1, 1, 1});
        const auto cone = fundamental_cone(l);
        const Root e = next_root(l, cone);

        // Smallest x0^2 / k over all roots with |coords| <= 6 satisfying the constraints.
        std::optional<std::pair<double, std::vector<std::int64_t>>> best;
        for (std::int64_t x0 = 1; x0 <= 6; ++x0) {
            for (std::int64_t x1 = -6; x1 <= 6; ++x1) {
                for (std::int64_t x2 = -6; x2 <= 6; ++x2) {
                    const auto v = z({x0, x1, x2});
                    const std::int64_t k = -x0 * x0 + x1 * x1 + x2 * x2;
                    if (k != 1 && k != 2) continue;
                    if (std::gcd(std::gcd(x0, x1), x2) != 1) continue;
                    const Root cand{v, {k, 0}};
                    if (!is_crystallographic(l, cand)) continue;
                    bool ok = true;
                    for (const auto& a : cone) ok = ok && l.ring.sign(l.inner(a.coords, v)) <= 0;
                    if (!ok) continue;
                    const double d = double(x0 * x0) / double(k);
                    if (!best || d < best->first) best = {{d, {x0, x1, x2}}};
                }
            }
        }
        REQUIRE(best.has_value());
        CHECK(ints(e) == best->second);
        CHECK(ints(e) == std::vector<std::int64_t>{1, 1, 1});
    }

    TEST_CASE("small lattice run") {
        const auto r = vinberg_run(rational_lattice({-1, 1, 1}));
        CHECK(r.roots.size() == 3);
        CHECK(r.finite_volume);
        CHECK_FALSE(is_compact(r.gram));
        const auto d = gram_to_diagram(r.gram);
        CHECK(d.edges.size() == 2);
    }

    TEST_CASE("run invariants on every lattice fixture") {
        for (const auto& name : lattice_fixtures()) {
            const auto& run = lattice_run(name);
            const auto& l = run.lattice;
            CAPTURE(name);
            CHECK(run.finite_volume);
            CHECK(finite_volume_check(run.gram));
            const Signature s = signature(run.gram.scaled());
            CHECK(s.pos == static_cast<int>(l.dimension()));
            CHECK(s.neg == 1);
            for (std::size_t i = 0; i < run.roots.size(); ++i) {
                const auto& e = run.roots[i];
                CHECK(is_crystallographic(l, e));
                CHECK(primitive(l, e));
                CHECK(l.inner(e.coords, e.coords) == e.norm);
                CHECK(l.ring.totally_positive(e.norm));
                for (std::size_t j = i + 1; j < run.roots.size(); ++j)
                    CHECK(l.ring.sign(l.inner(e.coords, run.roots[j].coords)) <= 0);
            }
        }
    }

    TEST_CASE("runs are deterministic") {
        const auto l = load_lattice("lattice-15");
        const auto a = vinberg_run(l);
        const auto b = vinberg_run(l);
        CHECK(a.roots == b.roots);
        CHECK(a.roots == lattice_run("lattice-15").roots);
    }

    TEST_CASE("iteration limit carries the partial run") {
        VinbergOptions opt;
        opt.max_roots = 7;
        try {
            vinberg_run(load_lattice("bugaenko-lattice"), opt);
            FAIL("expected IterationLimit");
        } catch (const IterationLimit& e) {
            CHECK(e.partial().roots.size() == 7);
            CHECK_FALSE(e.partial().finite_volume);
            const auto& full = lattice_run("bugaenko-lattice").roots;
            CHECK(std::equal(e.partial().roots.begin(), e.partial().roots.end(), full.begin()));
        }
    }

    TEST_CASE("search bound") {
        const auto l = rational_lattice({-1, 1, 1});
        VinbergOptions opt;
        opt.max_distance = 0.1;
        CHECK_THROWS_AS(next_root(l, fundamental_cone(l), opt), SearchExhausted);
    }
}
