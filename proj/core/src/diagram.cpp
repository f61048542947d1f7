#include "hypercox/diagram.hpp"

#include "hypercox/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hypercox {

AngleLabel CoxeterDiagram::label(int u, int v) const {
    for (const auto& e : edges) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.label;
    }
    return AngleLabel{};
}

void CoxeterDiagram::validate() const {
    const int n = static_cast<int>(vertices.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw InvalidInput("edge endpoint out of range");
        if (e.u == e.v) throw InvalidInput("self-loop in Coxeter diagram");
        if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
            throw InvalidInput("duplicate edge in Coxeter diagram");
        switch (e.label.kind) {
            case AngleLabel::Kind::Angle:
                if (e.label.m < 3) throw InvalidInput("angle label must be at least 3");
                break;
            case AngleLabel::Kind::Divergent:
                if ((e.label.weight - AlgNum(1)).sign() <= 0)
                    throw InvalidInput("divergent weight must exceed 1");
                break;
            case AngleLabel::Kind::NonCoxeter:
                throw InvalidInput("non-Coxeter edge label");
            default:
                break;
        }
    }
}

GramMatrix diagram_to_gram(const CoxeterDiagram& d) {
    d.validate();
    const std::size_t n = d.size();
    Matrix g = Matrix::identity(n);
    for (const auto& e : d.edges) {
        AlgNum x;
        switch (e.label.kind) {
            case AngleLabel::Kind::Angle: x = -cos_pi_over(e.label.m); break;
            case AngleLabel::Kind::Parallel: x = AlgNum(-1); break;
            case AngleLabel::Kind::Divergent: x = -e.label.weight; break;
            default: break;
        }
        g(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)) = x;
        g(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.u)) = x;
    }
    return GramMatrix(g.unified());
}

CoxeterDiagram gram_to_diagram(const GramMatrix& g, long max_m) {
    CoxeterDiagram d;
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) d.vertices.push_back(std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int s = g.entry_sign(i, j);
            if (s == 0) continue;
            AngleLabel l = recognize_angle_squared(s, g.entry_square(i, j), max_m);
            d.edges.push_back({static_cast<int>(i), static_cast<int>(j), l});
        }
    }
    return d;
}

namespace {

bool same_label(const AngleLabel& a, const AngleLabel& b, bool weights) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case AngleLabel::Kind::Angle: return a.m == b.m;
        case AngleLabel::Kind::Divergent: return !weights || a.weight == b.weight;
        default: return true;
    }
}

int label_code(const AngleLabel& l) {
    switch (l.kind) {
        case AngleLabel::Kind::RightAngle: return 0;
        case AngleLabel::Kind::Angle: return static_cast<int>(l.m);
        case AngleLabel::Kind::Parallel: return -1;
        case AngleLabel::Kind::Divergent: return -2;
        case AngleLabel::Kind::NonCoxeter: return -3;
    }
    return -4;
}

}  // namespace

std::optional<std::vector<int>> diagram_isomorphism(const CoxeterDiagram& a, const CoxeterDiagram& b,
                                                    bool compare_weights) {
    const int n = static_cast<int>(a.size());
    if (b.size() != a.size() || a.edges.size() != b.edges.size()) return std::nullopt;
    auto table = [n](const CoxeterDiagram& d) {
        std::vector<AngleLabel> t(static_cast<std::size_t>(n * n));
        for (const auto& e : d.edges) {
            t[static_cast<std::size_t>(e.u * n + e.v)] = e.label;
            t[static_cast<std::size_t>(e.v * n + e.u)] = e.label;
        }
        return t;
    };
    const auto ta = table(a), tb = table(b);
    auto invariant = [n](const std::vector<AngleLabel>& t, int v) {
        std::vector<int> codes;
        for (int w = 0; w < n; ++w) {
            if (w != v) codes.push_back(label_code(t[static_cast<std::size_t>(v * n + w)]));
        }
        std::sort(codes.begin(), codes.end());
        return codes;
    };
    std::vector<std::vector<int>> ia, ib;
    for (int v = 0; v < n; ++v) {
        ia.push_back(invariant(ta, v));
        ib.push_back(invariant(tb, v));
    }
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool(int)> extend = [&](int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || ia[static_cast<std::size_t>(v)] != ib[static_cast<std::size_t>(w)])
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                ok = same_label(ta[static_cast<std::size_t>(v * n + u)],
                                tb[static_cast<std::size_t>(w * n + map[static_cast<std::size_t>(u)])], compare_weights);
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (extend(v + 1)) return true;
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    };
    if (extend(0)) return map;
    return std::nullopt;
}

}  // namespace hypercox
