// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "checks.hpp"
#include "corpus.hpp"

#include "hypercox/arith.hpp"
#include "hypercox/canon.hpp"
#include "hypercox/diagram.hpp"
#include "hypercox/expr.hpp"
#include "hypercox/faces.hpp"
#include "hypercox/field.hpp"
#include "hypercox/trig.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace hypercox;
using namespace hypercox::testing;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) {
        v.pass = false;
        v.detail += " [over the " + std::to_string(budget_s) + " s budget]";
    }
    if (!v.pass) ++failures;
    std::printf("%s %2d %s (%.2f s): %s\n", v.pass ? "PASS" : "FAIL", id, title, secs, v.detail.c_str());
    std::fflush(stdout);
}

SubfieldDescriptor field_of(std::initializer_list<const char*> gens) {
    std::vector<AlgNum> xs;
    for (const char* g : gens) xs.push_back(parse_algebraic(g));
    return SubfieldDescriptor(xs);
}

bool all_coxeter_path(const FacetTree& t, int id) {
    for (int p : t.path_to(id)) {
        if (!t.nodes[static_cast<std::size_t>(p)].face.is_coxeter) return false;
    }
    return true;
}

/// A node of the given type, preferring one reached through Coxeter faces only.
const FacetTree::Node* node_with_key(const FacetTree& t, const std::string& key, int dim) {
    const FacetTree::Node* any = nullptr;
    for (const auto& n : t.nodes) {
        if (n.face.dim != dim || n.key != key) continue;
        if (all_coxeter_path(t, n.id)) return &n;
        if (!any) any = &n;
    }
    return any;
}

std::string verdict_of(const FacetTree::Node& n) {
    return n.face.classification ? to_string(n.face.classification->verdict) : "unclassified";
}

}  // namespace

int main() {
    criterion(1, "prism ground fields, V1 witness and facet obstruction", 1.0, [] {
        const GramMatrix g = load_polytope("prism-fig1");
        const GramMatrix base = face_gram(g, {0});
        const bool field_p = ground_field(g).equals(field_of({"sqrt(2)", "sqrt(5)"}));
        const bool field_base = ground_field(base).equals(field_of({"sqrt(5)"}));
        const auto rep = classify(g);
        const bool v1 = !rep.failures.empty() && rep.failures.front().condition == "V1";
        const bool obstruction = corollary_test(g, base) == CorollaryResult::Obstruction;
        const bool ok = field_p && field_base && rep.verdict == Verdict::NotQuasiArithmetic && v1 && obstruction;
        return Outcome{ok, "F(P)=Q(sqrt2,sqrt5): " + std::to_string(field_p) + ", F(P')=Q(sqrt5): " +
                                std::to_string(field_base) + ", verdict " + to_string(rep.verdict) +
                                ", V1 witness: " + std::to_string(v1) + ", obstruction: " + std::to_string(obstruction)};
    });

    criterion(2, "rho_m / 2 is an algebraic integer for constructible 2 <= m <= 50", 5.0, [] {
        int checked = 0;
        std::string bad;
        for (long m = 2; m <= 50; ++m) {
            if (!is_constructible_angle(m)) continue;
            ++checked;
            if (!rho_even_check(m).second) bad += " " + std::to_string(m);
        }
        return Outcome{bad.empty() && checked > 0,
                        std::to_string(checked) + " values of m" + (bad.empty() ? "" : ", failing:" + bad)};
    });

    criterion(3, "Bugaenko lattice: 11 facets, diagram isomorphic to the reference", 0.0, [] {
        const auto& run = lattice_run("bugaenko-lattice");
        const CoxeterDiagram d = gram_to_diagram(run.gram);
        const bool iso = diagram_isomorphism(d, load_diagram("bugaenko-fig2-diagram")).has_value();
        std::size_t weights = 0;
        for (const auto& e : d.edges) {
            if (e.label.kind == AngleLabel::Kind::Divergent && !e.label.weight.is_zero()) ++weights;
        }
        const bool ok = run.roots.size() == 11 && run.finite_volume && iso && weights == 2;
        return Outcome{ok, std::to_string(run.roots.size()) + " facets, finite volume " +
                                std::to_string(run.finite_volume) + ", isomorphic " + std::to_string(iso) + ", " +
                                std::to_string(weights) + " dashed weights produced"};
    });

    criterion(4, "Bugaenko tree: 3-face of the reference type with the hexagon and pentagon", 0.0, [] {
        const auto& tree = fixture_tree("bugaenko-lattice");
        const std::string hex = canonical_key(load_polytope("hexagon-p2-1"));
        const std::string pent = canonical_key(load_polytope("pentagon-p2-2"));
        const CoxeterDiagram fig3 = load_diagram("fig3-face-diagram");
        std::size_t matches = 0;
        std::string found;
        for (const auto& n : tree.nodes) {
            if (n.face.dim != 3 || !n.face.is_coxeter) continue;
            if (!diagram_isomorphism(gram_to_diagram(n.face.gram, tree.max_m), fig3)) continue;
            const FacetTree::Node* h = nullptr;
            const FacetTree::Node* p = nullptr;
            for (int c : n.children) {
                const auto& child = tree.nodes[static_cast<std::size_t>(c)];
                if (child.key == hex) h = &child;
                if (child.key == pent) p = &child;
            }
            if (!h || !p) continue;
            const bool verdicts = verdict_of(*h) == "properly_quasi_arithmetic" && verdict_of(*p) == "arithmetic";
            if (!verdicts) {
                found = "hexagon " + verdict_of(*h) + ", pentagon " + verdict_of(*p);
                continue;
            }
            ++matches;
            if (found.empty() || matches == 1) found = "node " + std::to_string(n.id) + ": hexagon " + verdict_of(*h) +
                                                       ", pentagon " + verdict_of(*p);
        }
        return Outcome{matches > 0, std::to_string(matches) + " matching 3-faces; " + found};
    });

    criterion(5, "Bugaenko tree: properly quasi-arithmetic faces only in dimension 2", 0.0, [] {
        const auto& tree = fixture_tree("bugaenko-lattice");
        std::size_t pqa = 0;
        std::size_t higher = 0;
        for (const auto& n : tree.nodes) {
            if (!n.face.is_coxeter || verdict_of(n) != "properly_quasi_arithmetic") continue;
            ++pqa;
            if (n.face.dim != 2) ++higher;
        }
        return Outcome{pqa > 0 && higher == 0, std::to_string(tree.nodes.size()) + " nodes, " + std::to_string(pqa) +
                                                    " properly quasi-arithmetic, " + std::to_string(higher) +
                                                    " above dimension 2"};
    });

    criterion(6, "lattice -15: non-compact, both reference 2-faces, all-Coxeter chain", 0.0, [] {
        const auto& run = lattice_run("lattice-15");
        const bool compact = is_compact(run.gram);
        const auto& tree = fixture_tree("lattice-15");
        const auto* f1 = node_with_key(tree, canonical_key(load_polytope("p6-face1")), 2);
        const auto* f2 = node_with_key(tree, canonical_key(load_polytope("p6-face2")), 2);
        const bool v1 = f1 && verdict_of(*f1) == "arithmetic";
        const bool v2 = f2 && verdict_of(*f2) == "properly_quasi_arithmetic";
        bool chain = false;
        for (const auto& n : tree.nodes) {
            if (n.face.dim == 2 && n.face.is_coxeter && all_coxeter_path(tree, n.id)) chain = true;
        }
        const bool pair_chain = f1 && f2 && all_coxeter_path(tree, f1->id) && all_coxeter_path(tree, f2->id);
        const bool ok = run.finite_volume && !compact && v1 && v2 && chain && pair_chain;
        return Outcome{ok, std::to_string(run.roots.size()) + " facets, compact " + std::to_string(compact) +
                                ", P'1 " + (f1 ? verdict_of(*f1) : "missing") + ", P'2 " +
                                (f2 ? verdict_of(*f2) : "missing") + ", all-Coxeter chain " + std::to_string(chain) +
                                " (through the pair: " + std::to_string(pair_chain) + ")"};
    });

    criterion(7, "Coxeter faces of quasi-arithmetic fixtures keep the ground field", 0.0, [] {
        const auto r = face_inheritance_suite();
        return Outcome{r.ok(), r.summary()};
    });

    criterion(8, "even-angle facets of arithmetic fixtures are arithmetic", 0.0, [] {
        const auto r = even_angle_suite();
        return Outcome{r.ok(), r.summary()};
    });

    criterion(9, "oracles: projected roots, 100-digit eigenvalues, minor signs", 0.0, [] {
        const auto a = projection_oracle(3);
        const auto b = eigenvalue_oracle(500, 20261016);
        const auto c = minor_sign_suite(3, 1);
        return Outcome{a.ok() && b.ok() && c.ok(),
                        "projection " + a.summary() + "; eigenvalues " + b.summary() + "; minors " + c.summary()};
    });

    criterion(10, "kernel properties over 10^4 random cases", 60.0, [] {
        const auto r = kernel_properties(10000, 7);
        return Outcome{r.ok() && r.cases == 10000, r.summary()};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
