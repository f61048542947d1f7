#include "hypercox/faces.hpp"

#include "hypercox/canon.hpp"
#include "hypercox/errors.hpp"
#include "hypercox/trig.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace hypercox {

int polytope_dimension(const GramMatrix& g) {
    const Signature s = signature(g.scaled());
    if (s.neg != 1) throw InvalidInput("Gram matrix does not have signature (n, 1, z)");
    return s.pos;
}

bool is_elliptic(const GramMatrix& g, const std::vector<int>& s) {
    return is_positive_definite(g.scaled().principal(s));
}

std::vector<int> bounding_set(const GramMatrix& g, const std::vector<int>& s) {
    std::vector<int> t;
    const int n = static_cast<int>(g.size());
    for (int j = 0; j < n; ++j) {
        if (std::find(s.begin(), s.end(), j) != s.end()) continue;
        std::vector<int> sj = s;
        sj.push_back(j);
        if (is_elliptic(g, sj)) t.push_back(j);
    }
    return t;
}

GramMatrix face_gram(const GramMatrix& g, const std::vector<int>& s, std::vector<int>* bounding) {
    if (!is_elliptic(g, s)) throw NotAFace("facet subset is not elliptic");
    std::vector<int> t = bounding_set(g, s);
    GramMatrix f = GramMatrix::from_scaled(schur_complement(g.scaled(), s, t));
    if (bounding) *bounding = std::move(t);
    return f;
}

bool is_coxeter_gram(const GramMatrix& g, long max_m) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const int s = g.entry_sign(i, j);
            if (s == 0) continue;
            if (s > 0) return false;
            if (!recognize_angle_squared(s, g.entry_square(i, j), max_m).is_coxeter()) return false;
        }
    }
    return true;
}

bool is_coxeter_face(const FaceDescriptor& f, long max_m) { return is_coxeter_gram(f.gram, max_m); }

std::vector<std::vector<int>> elliptic_subsets(const GramMatrix& g, int max_size) {
    const int n = static_cast<int>(g.size());
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < n && max_size >= 1; ++i) layer.push_back({i});
    for (int size = 1; size <= max_size && !layer.empty(); ++size) {
        out.insert(out.end(), layer.begin(), layer.end());
        if (size == max_size) break;
        std::vector<std::vector<int>> next;
        for (const auto& s : layer) {
            for (int j = s.back() + 1; j < n; ++j) {
                std::vector<int> sj = s;
                sj.push_back(j);
                if (is_elliptic(g, sj)) next.push_back(std::move(sj));
            }
        }
        layer = std::move(next);
    }
    return out;
}

std::vector<FaceDescriptor> enumerate_faces(const GramMatrix& g, int codim, const FaceOptions& opt) {
    const int n = polytope_dimension(g);
    if (codim < 0 || codim > n) throw InvalidInput("codimension out of range");
    std::vector<std::vector<int>> subsets;
    if (codim == 0) {
        subsets.push_back({});
    } else {
        for (auto& s : elliptic_subsets(g, codim)) {
            if (static_cast<int>(s.size()) == codim) subsets.push_back(std::move(s));
        }
    }
    std::vector<FaceDescriptor> faces(subsets.size());
    detail::parallel_for(subsets.size(), opt.jobs, [&](std::size_t k) {
        FaceDescriptor& f = faces[k];
        f.subset = subsets[k];
        f.dim = n - codim;
        f.max_m = opt.max_m;
        if (codim == 0) {
            f.gram = g;
            for (int i = 0; i < static_cast<int>(g.size()); ++i) f.facet_map.push_back(i);
        } else {
            f.gram = face_gram(g, f.subset, &f.facet_map);
        }
        f.is_coxeter = is_coxeter_gram(f.gram, opt.max_m);
        if (f.is_coxeter && opt.classify && f.dim >= 2) f.classification = classify(f.gram, opt.cycle_cap);
    });
    return faces;
}

namespace {

bool orthogonal(const Matrix& b, const std::vector<int>& x, const std::vector<int>& y) {
    for (int i : x) {
        for (int j : y) {
            if (!b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero()) return false;
        }
    }
    return true;
}

bool connected(const Matrix& b, const std::vector<int>& c) {
    return components(b.principal(c)).size() == 1;
}

}  // namespace

VertexSets vertices_with_ideal(const GramMatrix& g) {
    const int n = polytope_dimension(g);
    const Matrix& b = g.scaled();
    const int size = static_cast<int>(g.size());
    VertexSets vs;
    auto ell = elliptic_subsets(g, n);
    std::set<std::vector<int>> ell_set(ell.begin(), ell.end());
    for (const auto& s : ell) {
        if (static_cast<int>(s.size()) == n) vs.ordinary.push_back(s);
    }
    // connected affine pieces: every maximal proper subset elliptic, det 0
    std::vector<std::vector<int>> affine;
    for (const auto& p : ell) {
        if (static_cast<int>(p.size()) >= n) continue;
        for (int v = p.back() + 1; v < size; ++v) {
            std::vector<int> c = p;
            c.push_back(v);
            bool ok = true;
            for (std::size_t drop = 0; drop + 1 < c.size() && ok; ++drop) {
                std::vector<int> d;
                for (std::size_t k = 0; k < c.size(); ++k) {
                    if (k != drop) d.push_back(c[k]);
                }
                ok = ell_set.count(d) > 0;
            }
            if (!ok || !connected(b, c)) continue;
            if (!determinant(b.principal(c)).is_zero()) continue;
            affine.push_back(std::move(c));
        }
    }
    // orthogonal unions of total rank n - 1
    std::vector<int> chosen;
    std::function<void(std::size_t, int)> pick = [&](std::size_t from, int rank) {
        if (rank == n - 1) {
            std::vector<int> u;
            for (int idx : chosen) {
                const auto& c = affine[static_cast<std::size_t>(idx)];
                u.insert(u.end(), c.begin(), c.end());
            }
            std::sort(u.begin(), u.end());
            vs.ideal.push_back(std::move(u));
            return;
        }
        for (std::size_t k = from; k < affine.size(); ++k) {
            const auto& c = affine[k];
            const int r = static_cast<int>(c.size()) - 1;
            if (rank + r > n - 1) continue;
            bool ok = true;
            for (int idx : chosen) {
                const auto& d = affine[static_cast<std::size_t>(idx)];
                bool disjoint = std::none_of(c.begin(), c.end(),
                                             [&](int x) { return std::find(d.begin(), d.end(), x) != d.end(); });
                if (!disjoint || !orthogonal(b, c, d)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(static_cast<int>(k));
            pick(k + 1, rank + r);
            chosen.pop_back();
        }
    };
    pick(0, 0);
    std::sort(vs.ideal.begin(), vs.ideal.end());
    return vs;
}

bool finite_volume_check(const GramMatrix& g) {
    const Signature s = signature(g.scaled());
    if (s.neg != 1) return false;
    const int n = s.pos;
    if (n < 1) return false;
    VertexSets vs = vertices_with_ideal(g);
    if (vs.ordinary.empty() && vs.ideal.empty()) return false;
    auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    for (const auto& e : elliptic_subsets(g, n - 1)) {
        if (static_cast<int>(e.size()) != n - 1) continue;
        int count = 0;
        for (const auto& v : vs.ordinary) count += contains(v, e) ? 1 : 0;
        for (const auto& v : vs.ideal) count += contains(v, e) ? 1 : 0;
        if (count != 2) return false;
    }
    if (n == 1) {
        // a segment: exactly two endpoints
        return vs.ordinary.size() + vs.ideal.size() == 2;
    }
    return true;
}

bool is_compact(const GramMatrix& g) { return finite_volume_check(g) && vertices_with_ideal(g).ideal.empty(); }

std::vector<int> FacetTree::path_to(int id) const {
    std::vector<int> p;
    for (int v = id; v >= 0; v = nodes[static_cast<std::size_t>(v)].parent) p.push_back(v);
    std::reverse(p.begin(), p.end());
    return p;
}

namespace {

struct ChildInfo {
    int facet = 0;               // facet index, local to the type's representative
    std::vector<int> bounding;   // local to the representative
    GramMatrix gram;
    std::vector<int> perm;       // canonical permutation of gram
    std::string key;
};

struct TypeInfo {
    GramMatrix gram;
    std::vector<int> perm;
    bool coxeter = false;
    std::optional<ClassificationReport> classification;
    bool expanded = false;
    std::vector<ChildInfo> children;
};

}  // namespace

FacetTree facet_tree(const GramMatrix& g, const TreeOptions& opt) {
    FacetTree tree;
    tree.max_m = opt.max_m;
    const int n = polytope_dimension(g);
    tree.dimension = n;
    std::map<std::string, TypeInfo> types;

    auto register_type = [&](const std::string& key, const GramMatrix& gm, const std::vector<int>& perm, int dim) {
        auto it = types.find(key);
        if (it != types.end()) return;
        TypeInfo t;
        t.gram = gm;
        t.perm = perm;
        t.coxeter = is_coxeter_gram(gm, opt.max_m);
        if (t.coxeter && opt.classify && dim >= 2) t.classification = classify(gm, opt.cycle_cap);
        types.emplace(key, std::move(t));
    };

    auto expand = [&](TypeInfo& t) {
        if (t.expanded) return;
        const std::size_t m = t.gram.size();
        std::vector<ChildInfo> kids(m);
        detail::parallel_for(m, opt.jobs, [&](std::size_t j) {
            ChildInfo& c = kids[j];
            c.facet = static_cast<int>(j);
            c.gram = face_gram(t.gram, {static_cast<int>(j)}, &c.bounding);
            CanonicalForm cf = canonical_form(c.gram);
            c.key = std::move(cf.key);
            c.perm = std::move(cf.perm);
        });
        t.children = std::move(kids);
        t.expanded = true;
    };

    {
        FacetTree::Node root;
        root.id = 0;
        root.level = 0;
        CanonicalForm cf = canonical_form(g);
        root.key = cf.key;
        root.face.dim = n;
        root.face.gram = g;
        root.face.max_m = opt.max_m;
        for (int i = 0; i < static_cast<int>(g.size()); ++i) root.face.facet_map.push_back(i);
        register_type(root.key, g, cf.perm, n);
        const TypeInfo& t = types.at(root.key);
        root.face.is_coxeter = t.coxeter;
        root.face.classification = t.classification;
        tree.nodes.push_back(std::move(root));
        // the node's own canonical permutation travels in a side table
    }
    std::vector<std::vector<int>> node_perm{types.at(tree.nodes[0].key).perm};
    std::map<std::string, int> non_coxeter_seen;
    if (!tree.nodes[0].face.is_coxeter) non_coxeter_seen.emplace(tree.nodes[0].key, 0);

    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int id = queue.front();
        queue.pop_front();
        if (tree.nodes[static_cast<std::size_t>(id)].face.dim <= 2) continue;
        if (opt.max_level >= 0 && tree.nodes[static_cast<std::size_t>(id)].level >= opt.max_level) continue;
        const std::string key = tree.nodes[static_cast<std::size_t>(id)].key;
        TypeInfo& t = types.at(key);
        expand(t);
        // representative-local index -> canonical position -> this node's local index
        std::vector<int> rep_pos(t.perm.size());
        for (std::size_t c = 0; c < t.perm.size(); ++c) rep_pos[static_cast<std::size_t>(t.perm[c])] = static_cast<int>(c);
        const std::vector<int> mine = node_perm[static_cast<std::size_t>(id)];
        auto to_root = [&](int rep_local) {
            const int local = mine[static_cast<std::size_t>(rep_pos[static_cast<std::size_t>(rep_local)])];
            return tree.nodes[static_cast<std::size_t>(id)].face.facet_map[static_cast<std::size_t>(local)];
        };
        std::set<std::string> seen_here;
        for (const ChildInfo& c : t.children) {
            if (!seen_here.insert(c.key).second) continue;
            const auto& parent = tree.nodes[static_cast<std::size_t>(id)];
            const int dim = parent.face.dim - 1;
            std::vector<int> subset = parent.face.subset;
            subset.push_back(to_root(c.facet));
            std::sort(subset.begin(), subset.end());
            register_type(c.key, c.gram, c.perm, dim);
            const TypeInfo& ct = types.at(c.key);
            if (!ct.coxeter) {
                auto it = non_coxeter_seen.find(c.key);
                if (it != non_coxeter_seen.end()) {
                    tree.suppressed.push_back({id, subset, c.key, it->second});
                    continue;
                }
            }
            if (tree.nodes.size() >= opt.max_nodes)
                throw SizeLimit("facet tree exceeds " + std::to_string(opt.max_nodes) + " nodes");
            FacetTree::Node node;
            node.id = static_cast<int>(tree.nodes.size());
            node.parent = id;
            node.level = parent.level + 1;
            node.key = c.key;
            node.face.subset = std::move(subset);
            node.face.dim = dim;
            node.face.gram = c.gram;
            node.face.max_m = opt.max_m;
            for (int b : c.bounding) node.face.facet_map.push_back(to_root(b));
            node.face.is_coxeter = ct.coxeter;
            node.face.classification = ct.classification;
            if (!ct.coxeter) non_coxeter_seen.emplace(c.key, node.id);
            tree.nodes[static_cast<std::size_t>(id)].children.push_back(node.id);
            node_perm.push_back(c.perm);
            queue.push_back(node.id);
            tree.nodes.push_back(std::move(node));
        }
    }
    return tree;
}

}  // namespace hypercox
