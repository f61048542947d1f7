#include "corpus.hpp"
#include "io.hpp"

#include "hypercox/canon.hpp"
#include "hypercox/diagram.hpp"
#include "hypercox/errors.hpp"
#include "hypercox/expr.hpp"
#include "hypercox/field.hpp"
#include "hypercox/matrix.hpp"
#include "hypercox/trig.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace hypercox;
using namespace hypercox::testing;

namespace {

AlgNum P(const char* s) { return parse_algebraic(s); }

Matrix rational_matrix(std::initializer_list<std::initializer_list<mpq_class>> rows) {
    std::vector<std::vector<AlgNum>> out;
    for (const auto& r : rows) {
        std::vector<AlgNum> row;
        for (const auto& q : r) row.emplace_back(q);
        out.push_back(std::move(row));
    }
    return Matrix(out);
}

CoxeterDiagram chain(std::vector<AngleLabel> labels) {
    CoxeterDiagram d;
    for (std::size_t i = 0; i <= labels.size(); ++i) d.vertices.push_back(std::to_string(i + 1));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        d.edges.push_back({static_cast<int>(i), static_cast<int>(i + 1), labels[i]});
    }
    return d;
}

AngleLabel angle(long m) {
    AngleLabel l;
    l.kind = AngleLabel::Kind::Angle;
    l.m = m;
    return l;
}

std::vector<int> random_perm(std::size_t n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_SUITE("gram") {
    TEST_CASE("diagram_to_gram entries") {
        const GramMatrix g = diagram_to_gram(chain({angle(3), angle(5)}));
        CHECK(g.entry(0, 1) == AlgNum(mpq_class(-1, 2)));
        CHECK(g.entry(1, 2) == P("-(1+sqrt(5))/4"));
        CHECK(g.entry(0, 2) == AlgNum(0));

        const GramMatrix prism = load_polytope("prism-fig1");
        CHECK(prism.entry(0, 1) == P("-sqrt(5+3*sqrt(2)+2*sqrt(5)+sqrt(10))/2"));
        CHECK(prism.entry(2, 3) == P("-sqrt(2)/2"));
    }

    TEST_CASE("recognize_angle") {
        CHECK(recognize_angle(AlgNum(mpq_class(-1, 2))).m == 3);
        const AngleLabel l10 = recognize_angle(-cos_pi_over(10));
        CHECK(l10.kind == AngleLabel::Kind::Angle);
        CHECK(l10.m == 10);
        const AngleLabel d = recognize_angle(P("-2*sqrt(3)/3"));
        CHECK(d.kind == AngleLabel::Kind::Divergent);
        CHECK(d.weight == P("2*sqrt(3)/3"));
        CHECK(recognize_angle(AlgNum(-1)).kind == AngleLabel::Kind::Parallel);
        CHECK(recognize_angle(AlgNum(0)).kind == AngleLabel::Kind::RightAngle);
        CHECK(recognize_angle(P("-sqrt(2)/3")).kind == AngleLabel::Kind::NonCoxeter);
        CHECK_THROWS_AS(recognize_angle(AlgNum(mpq_class(1, 3))), PositiveEntry);
        // cos(pi/7) is not built by square roots.
        CHECK_THROWS_AS(cos_pi_over(7), UnsupportedAngle);
    }

    TEST_CASE("recognize_angle inverts -cos(pi/m) for every supported m <= 60") {
        int tested = 0;
        for (long m = 2; m <= 60; ++m) {
            if (!is_constructible_angle(m)) continue;
            ++tested;
            const AngleLabel l = recognize_angle(-cos_pi_over(m));
            CAPTURE(m);
            CHECK(l.m == m);
            CHECK(l.kind == (m == 2 ? AngleLabel::Kind::RightAngle : AngleLabel::Kind::Angle));
        }
        CHECK(tested == 20);  // 2^a * {1, 3, 5, 15, 17, 51}
    }

    TEST_CASE("diagram round trip through the Gram matrix") {
        for (const char* name : {"prism-fig1"}) {
            const auto d = cli::diagram_from_json(cli::read_json_file(fixture_path(name))["diagram"]);
            const auto back = gram_to_diagram(diagram_to_gram(d));
            CHECK(diagram_isomorphism(d, back, true).has_value());
        }
        const auto d = chain({angle(4), angle(10), angle(17), angle(3)});
        CHECK(diagram_isomorphism(d, gram_to_diagram(diagram_to_gram(d)), true).has_value());
    }

    TEST_CASE("cyclic generators") {
        CHECK(cyclic_generators(GramMatrix(Matrix::identity(4))).empty());

        const GramMatrix prism = load_polytope("prism-fig1");
        const SubfieldDescriptor f(cyclic_generators(prism));
        CHECK(f.contains(AlgNum(mpq_class(1, 2))));
        CHECK(f.contains(P("(3+sqrt(5))/8")));
        CHECK(f.contains(P("(5+3*sqrt(2)+2*sqrt(5)+sqrt(10))/4")));

        // Triangle: three squares and the cycle product.
        const GramMatrix t(rational_matrix({{1, mpq_class(-1, 2), mpq_class(-1, 3)},
                                            {mpq_class(-1, 2), 1, mpq_class(-1, 5)},
                                            {mpq_class(-1, 3), mpq_class(-1, 5), 1}}));
        CHECK(cyclic_generators(t).size() == 4);
    }

    TEST_CASE("cyclic products lie in the generated field") {
        std::mt19937_64 rng(3);
        int walks = 0;
        const auto names = all_fixtures();
        while (walks < 1000) {
            const GramMatrix& g = fixture_gram(names[rng() % names.size()]);
            const int n = static_cast<int>(g.size());
            std::vector<int> walk{static_cast<int>(rng() % n)};
            const int len = 2 + static_cast<int>(rng() % 7);
            bool ok = true;
            while (static_cast<int>(walk.size()) < len && ok) {
                std::vector<int> next;
                for (int j = 0; j < n; ++j) {
                    if (j != walk.back() && g.entry_sign(walk.back(), j) != 0) next.push_back(j);
                }
                if (next.empty()) ok = false;
                else walk.push_back(next[rng() % next.size()]);
            }
            if (!ok || g.entry_sign(walk.back(), walk.front()) == 0 || walk.back() == walk.front()) continue;
            ++walks;
            const SubfieldDescriptor f(cyclic_generators(g));
            CHECK(f.contains(cyclic_product(g, walk)));
        }
    }

    TEST_CASE("ground fields") {
        const GramMatrix prism = load_polytope("prism-fig1");
        CHECK(ground_field(prism).equals(SubfieldDescriptor({P("sqrt(2)"), P("sqrt(5)")})));
        CHECK(ground_field(prism.principal({2, 3, 4})).equals(SubfieldDescriptor({P("sqrt(5)")})));
        CHECK(ground_field(GramMatrix(Matrix::identity(3))).is_rational());
        CHECK(adjacent_field(load_polytope("p6-face2")).degree() > ground_field(load_polytope("p6-face2")).degree());
    }

    TEST_CASE("ground field does not depend on the facet order") {
        std::mt19937_64 rng(5);
        for (const auto& name : all_fixtures()) {
            const GramMatrix& g = fixture_gram(name);
            const GramMatrix h = g.permuted(random_perm(g.size(), rng));
            CAPTURE(name);
            CHECK(ground_field(g).equals(ground_field(h)));
        }
    }

    TEST_CASE("signature") {
        CHECK(signature(Matrix::identity(4)) == Signature{4, 0, 0});
        CHECK(signature(load_polytope("prism-fig1").scaled()) == Signature{3, 1, 1});
        CHECK(signature(rational_matrix({{1, -2}, {-2, 1}})) == Signature{1, 1, 0});
    }

    TEST_CASE("finite-volume fixtures have signature (n, 1, facets - n - 1)") {
        for (const auto& name : all_fixtures()) {
            const GramMatrix& g = fixture_gram(name);
            const Signature s = signature(g.scaled());
            CAPTURE(name);
            CHECK(s.neg == 1);
            CHECK(s.zero == static_cast<int>(g.size()) - s.pos - 1);
        }
    }

    TEST_CASE("definiteness predicates") {
        const Matrix pd = rational_matrix({{1, mpq_class(-1, 2)}, {mpq_class(-1, 2), 1}});
        const Matrix psd = rational_matrix({{1, -1}, {-1, 1}});
        const Matrix neither = rational_matrix({{1, -2}, {-2, 1}});
        CHECK(is_positive_definite(pd));
        CHECK(is_positive_semidefinite(pd));
        CHECK_FALSE(is_positive_definite(psd));
        CHECK(is_positive_semidefinite(psd));
        CHECK_FALSE(is_positive_definite(neither));
        CHECK_FALSE(is_positive_semidefinite(neither));

        CHECK(is_parabolic(psd));
        CHECK_FALSE(is_parabolic(pd));
        const mpq_class h(-1, 2);
        CHECK(is_parabolic(rational_matrix({{1, h, h}, {h, 1, h}, {h, h, 1}})));
    }

    TEST_CASE("principal submatrices of definite matrices are definite") {
        std::mt19937_64 rng(9);
        for (const auto& name : all_fixtures()) {
            const GramMatrix& g = fixture_gram(name);
            for (int trial = 0; trial < 20; ++trial) {
                auto idx = random_perm(g.size(), rng);
                idx.resize(1 + rng() % g.size());
                std::sort(idx.begin(), idx.end());
                const Matrix m = g.scaled().principal(idx);
                if (!is_positive_definite(m)) continue;
                CHECK(is_positive_semidefinite(m));
                auto sub = idx;
                sub.erase(sub.begin() + static_cast<long>(rng() % sub.size()));
                if (!sub.empty()) CHECK(is_positive_definite(g.scaled().principal(sub)));
            }
        }
    }

    TEST_CASE("canonical keys") {
        std::mt19937_64 rng(1);
        for (const auto& name : all_fixtures()) {
            const GramMatrix& g = fixture_gram(name);
            if (g.size() > kCanonicalKeyLimit) continue;
            CAPTURE(name);
            CHECK(canonical_key(g) == canonical_key(g.permuted(random_perm(g.size(), rng))));
        }
        CHECK(canonical_key(load_polytope("hexagon-p2-1")) != canonical_key(load_polytope("pentagon-p2-2")));
        CHECK(canonical_key(GramMatrix(Matrix::identity(1))) == canonical_key(GramMatrix(Matrix::identity(1))));
        CHECK_THROWS_AS(canonical_key(GramMatrix(Matrix::identity(5)), 4), SizeLimit);
    }

    TEST_CASE("scaled and normalized representations agree") {
        const GramMatrix g = GramMatrix::from_scaled(rational_matrix({{2, -1}, {-1, 3}}));
        CHECK(g.entry_sign(0, 1) == -1);
        CHECK(g.entry_square(0, 1) == AlgNum(mpq_class(1, 6)));
        CHECK(g.entry(0, 1) == P("-1/sqrt(6)"));
        CHECK(g.normalized()(1, 1) == AlgNum(1));
    }

    TEST_CASE("malformed diagrams are rejected") {
        CoxeterDiagram d = chain({angle(3)});
        d.edges.push_back({0, 1, angle(4)});
        CHECK_THROWS_AS(d.validate(), InvalidInput);
        CoxeterDiagram loop = chain({});
        loop.edges.push_back({0, 0, angle(3)});
        CHECK_THROWS_AS(loop.validate(), InvalidInput);
    }
}
