#include "checks.hpp"
#include "corpus.hpp"

#include "hypercox/faces.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace hypercox;
using namespace hypercox::testing;

TEST_SUITE("properties") {
    TEST_CASE("field axioms and embeddings over random towers") {
        for (std::uint64_t seed : {11, 12, 13}) {
            const auto r = kernel_properties(1500, seed);
            INFO(r.summary());
            CHECK(r.ok());
        }
    }

    TEST_CASE("faces inherit quasi-arithmeticity") {
        const auto r = face_inheritance_suite();
        INFO(r.summary());
        CHECK(r.ok());
    }

    TEST_CASE("even-angle facets of arithmetic faces are arithmetic") {
        const auto r = even_angle_suite();
        INFO(r.summary());
        CHECK(r.ok());
    }

    TEST_CASE("facet trees do not depend on the facet order") {
        std::mt19937_64 rng(4);
        for (const char* name : {"prism-fig1", "lattice-15", "lattice-sqrt2-3"}) {
            const GramMatrix& g = fixture_gram(name);
            std::vector<int> p(g.size());
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            auto keys = [](const FacetTree& t) {
                std::vector<std::pair<int, std::string>> out;
                for (const auto& n : t.nodes) out.emplace_back(n.level, n.key);
                std::sort(out.begin(), out.end());
                return out;
            };
            CAPTURE(name);
            CHECK(keys(facet_tree(g)) == keys(facet_tree(g.permuted(p))));
        }
    }
}
