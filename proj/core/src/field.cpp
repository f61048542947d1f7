#include "hypercox/field.hpp"

#include "hypercox/errors.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <optional>

namespace hypercox {

namespace {

using Coeffs = std::vector<mpq_class>;

struct Echelon {
    std::vector<Coeffs> rows;
    std::vector<std::size_t> pivots;

    // reduce v in place; returns true if it becomes zero
    bool reduce(Coeffs& v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::size_t p = pivots[r];
            if (v[p] == 0) continue;
            const mpq_class f = v[p] / rows[r][p];
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (rows[r][i] != 0) v[i] -= f * rows[r][i];
            }
        }
        return std::all_of(v.begin(), v.end(), [](const mpq_class& q) { return q == 0; });
    }
    void add(Coeffs v) {
        std::size_t p = 0;
        while (v[p] == 0) ++p;
        rows.push_back(std::move(v));
        pivots.push_back(p);
    }
};

}  // namespace

struct SubfieldDescriptor::Basis {
    std::once_flag once;
    TowerPtr tower;
    std::vector<AlgNum> elements;
    Echelon ech;
};

SubfieldDescriptor::SubfieldDescriptor() : basis_(std::make_shared<Basis>()) {}

SubfieldDescriptor::SubfieldDescriptor(std::vector<AlgNum> generators)
    : gens_(std::move(generators)), basis_(std::make_shared<Basis>()) {
    for (auto& g : gens_) g = g.trimmed();
}

const SubfieldDescriptor::Basis& SubfieldDescriptor::basis() const {
    std::call_once(basis_->once, [this] {
        Basis& b = *basis_;
        std::vector<AlgNum> gens = unify_all(gens_);
        b.tower = gens.empty() ? Tower::rationals() : gens.front().tower();
        std::deque<AlgNum> queue;
        AlgNum one = AlgNum(1).lifted(b.tower);
        b.ech.add(one.coeffs());
        b.elements.push_back(one);
        queue.push_back(one);
        while (!queue.empty()) {
            AlgNum e = queue.front();
            queue.pop_front();
            for (const auto& g : gens) {
                AlgNum p = e * g;
                Coeffs v = p.coeffs();
                if (b.ech.reduce(v)) continue;
                b.ech.add(std::move(v));
                b.elements.push_back(p);
                queue.push_back(p);
            }
        }
    });
    return *basis_;
}

std::size_t SubfieldDescriptor::degree() const { return basis().elements.size(); }

TowerPtr SubfieldDescriptor::tower() const { return basis().tower; }

bool SubfieldDescriptor::contains(const AlgNum& x) const {
    const Basis& b = basis();
    AlgNum y = move_into(x.trimmed(), b.tower);
    const std::size_t dim = b.tower->degree();
    Coeffs v = y.coeffs();
    for (std::size_t i = dim; i < v.size(); ++i) {
        if (v[i] != 0) return false;
    }
    v.resize(dim);
    return b.ech.reduce(v);
}

bool SubfieldDescriptor::is_subfield_of(const SubfieldDescriptor& other) const {
    return std::all_of(gens_.begin(), gens_.end(), [&](const AlgNum& g) { return other.contains(g); });
}

bool SubfieldDescriptor::is_proper_subfield_of(const SubfieldDescriptor& other) const {
    return is_subfield_of(other) && degree() < other.degree();
}

bool SubfieldDescriptor::equals(const SubfieldDescriptor& other) const {
    return degree() == other.degree() && is_subfield_of(other);
}

bool SubfieldDescriptor::fixed_by(const Embedding& sigma) const {
    for (const auto& g : gens_) {
        if (g.is_rational()) continue;
        AlgNum img = apply_embedding(g, sigma);
        if (value_key(img) != value_key(g)) return false;
    }
    return true;
}

std::vector<AlgNum> SubfieldDescriptor::reduced_generators() const {
    std::vector<AlgNum> kept;
    for (const auto& g : gens_) {
        if (g.is_rational()) continue;
        SubfieldDescriptor sofar(kept);
        if (!sofar.contains(g)) kept.push_back(g);
    }
    return kept;
}

AlgNum cyclic_product(const GramMatrix& g, const std::vector<int>& walk) {
    const Matrix& b = g.scaled();
    AlgNum num(1), den(1);
    const std::size_t k = walk.size();
    for (std::size_t i = 0; i < k; ++i) {
        const auto u = static_cast<std::size_t>(walk[i]);
        const auto v = static_cast<std::size_t>(walk[(i + 1) % k]);
        num *= u == v ? AlgNum(1) : b(u, v);
        if (num.is_zero()) return num;
        den *= b(u, u);
    }
    return (num / den).trimmed();
}

std::vector<AlgNum> cyclic_generators(const GramMatrix& g) {
    const int n = static_cast<int>(g.size());
    const Matrix& b = g.scaled();
    std::vector<AlgNum> out;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero()) continue;
            adj[static_cast<std::size_t>(i)].push_back(j);
            adj[static_cast<std::size_t>(j)].push_back(i);
            out.push_back(g.entry_square(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
        }
    }
    // BFS spanning forest
    std::vector<int> parent(static_cast<std::size_t>(n), -2), depth(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        if (parent[static_cast<std::size_t>(r)] != -2) continue;
        parent[static_cast<std::size_t>(r)] = -1;
        std::deque<int> q{r};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (parent[static_cast<std::size_t>(v)] != -2) continue;
                parent[static_cast<std::size_t>(v)] = u;
                depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
                q.push_back(v);
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (v < u || parent[static_cast<std::size_t>(v)] == u || parent[static_cast<std::size_t>(u)] == v) continue;
            // tree path u .. lca .. v, closed by the chord v-u
            std::vector<int> left{u}, right{v};
            int a = u, c = v;
            while (a != c) {
                if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(c)]) {
                    a = parent[static_cast<std::size_t>(a)];
                    left.push_back(a);
                } else {
                    c = parent[static_cast<std::size_t>(c)];
                    right.push_back(c);
                }
            }
            right.pop_back();
            std::vector<int> walk = left;
            walk.insert(walk.end(), right.rbegin(), right.rend());
            out.push_back(cyclic_product(g, walk));
        }
    }
    return out;
}

SubfieldDescriptor ground_field(const GramMatrix& g) { return SubfieldDescriptor(cyclic_generators(g)); }

SubfieldDescriptor adjacent_field(const GramMatrix& g) {
    std::vector<AlgNum> gens;
    const Matrix& m = g.normalized();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (!m(i, j).is_zero()) gens.push_back(m(i, j));
        }
    }
    return SubfieldDescriptor(std::move(gens));
}

void for_each_simple_cycle(const GramMatrix& g, std::size_t cap,
                           const std::function<void(const std::vector<int>&)>& f) {
    const int n = static_cast<int>(g.size());
    const Matrix& b = g.scaled();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && !b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero())
                adj[static_cast<std::size_t>(i)].push_back(j);
        }
    }
    std::size_t count = 0;
    std::vector<int> path;
    std::vector<bool> on(static_cast<std::size_t>(n), false);
    std::function<void(int, int)> dfs = [&](int s, int u) {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (v == s && path.size() >= 3 && path[1] < path.back()) {
                if (++count > cap) throw CycleExplosion(cap);
                f(path);
            }
            if (v <= s || on[static_cast<std::size_t>(v)]) continue;
            on[static_cast<std::size_t>(v)] = true;
            path.push_back(v);
            dfs(s, v);
            path.pop_back();
            on[static_cast<std::size_t>(v)] = false;
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on[static_cast<std::size_t>(s)] = true;
        dfs(s, s);
        on[static_cast<std::size_t>(s)] = false;
    }
}

}  // namespace hypercox
