#include "hypercox/arith.hpp"

#include "hypercox/errors.hpp"
#include "hypercox/trig.hpp"

namespace hypercox {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Arithmetic: return "arithmetic";
        case Verdict::ProperlyQuasiArithmetic: return "properly_quasi_arithmetic";
        case Verdict::NotQuasiArithmetic: return "not_quasi_arithmetic";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// all roots of p real and positive
bool totally_positive_poly(const Poly& p) {
    if (p.count_real_roots() != p.degree()) return false;
    std::vector<int> signs;
    for (const auto& c : p.coeffs()) signs.push_back(sgn(c));
    return sign_variations(signs) == p.degree();
}

}  // namespace

CheckResult check_v1(const GramMatrix& g) {
    CheckResult r;
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.entry_sign(i, j) == 0) continue;
            const AlgNum& q = g.entry_square(i, j);
            if (q.is_rational()) continue;
            Poly p = minimal_polynomial(q);
            if (totally_positive_poly(p)) continue;
            r.ok = false;
            r.witness = Witness{"V1", "entry", {static_cast<int>(i), static_cast<int>(j)}, q, {},
                                "square of the entry has minimal polynomial " + p.to_string() +
                                    " with a non-positive or non-real root"};
            return r;
        }
    }
    return r;
}

CheckResult check_v2(const GramMatrix& g) {
    CheckResult r;
    const std::size_t n = g.size();
    // D^-1 B is similar to G, so its characteristic polynomial is G's
    const Matrix& b = g.scaled();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const AlgNum inv = b(i, i).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (!b(i, j).is_zero()) m(i, j) = b(i, j) * inv;
        }
    }
    auto c = characteristic_polynomial(m);
    std::vector<AlgNum> e(n + 1);
    for (std::size_t k = 0; k <= n; ++k) e[k] = ((k % 2 == 0) ? c[n - k] : -c[n - k]).trimmed();

    SubfieldDescriptor f = ground_field(g);
    std::vector<AlgNum> all = f.generators();
    all.insert(all.end(), e.begin(), e.end());
    auto unified = unify_all(all);
    TowerPtr t = Tower::rationals();
    for (const auto& x : unified) {
        const AlgNum y = x.trimmed();
        if (y.level() > t->level()) t = y.tower();
    }
    if (t->level() == 0) return r;
    auto embs = real_embeddings(t);
    if (embs.size() != t->degree()) {
        r.ok = false;
        r.decided = false;
        r.witness = Witness{"V2", "tower", {}, std::nullopt, {},
                            "tower holding the ground field is not totally real: " + t->describe()};
        return r;
    }
    const std::size_t ng = f.generators().size();
    std::vector<AlgNum> gens, ek;
    for (std::size_t i = 0; i < unified.size(); ++i) {
        (i < ng ? gens : ek).push_back(unified[i].trimmed());
    }
    for (const auto& sigma : embs) {
        if (sigma.is_identity()) continue;
        bool moves = false;
        for (const auto& x : gens) {
            if (x.is_rational()) continue;
            if (value_key(apply_embedding(x, sigma)) != value_key(x)) {
                moves = true;
                break;
            }
        }
        if (!moves) continue;
        for (std::size_t k = 1; k <= n; ++k) {
            if (apply_embedding(ek[k], sigma).sign() < 0) {
                r.ok = false;
                r.witness = Witness{"V2", "embedding", {static_cast<int>(k)}, ek[k], sigma.signs,
                                    "conjugate Gram matrix is not positive semidefinite: e_" +
                                        std::to_string(k) + " becomes negative under " + sigma.to_string()};
                return r;
            }
        }
    }
    return r;
}

CheckResult check_v3(const GramMatrix& g, std::size_t cycle_cap) {
    CheckResult r;
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.entry_sign(i, j) == 0) continue;
            AlgNum x = AlgNum(4) * g.entry_square(i, j);
            if (is_algebraic_integer(x)) continue;
            r.ok = false;
            r.witness = Witness{"V3", "entry", {static_cast<int>(i), static_cast<int>(j)}, x, {},
                                "(2 g_ij)^2 is not an algebraic integer"};
            return r;
        }
    }
    struct Stop {};
    try {
        for_each_simple_cycle(g, cycle_cap, [&](const std::vector<int>& cyc) {
            AlgNum x = cyclic_product(g, cyc) * AlgNum(1L << cyc.size());
            if (is_algebraic_integer(x)) return;
            r.ok = false;
            r.witness = Witness{"V3", "cycle", cyc, x, {}, "2^k times a cycle product is not an algebraic integer"};
            throw Stop{};
        });
    } catch (const Stop&) {
    }
    return r;
}

ClassificationReport classify(const GramMatrix& g, std::size_t cycle_cap) {
    ClassificationReport rep;
    rep.ground_field = ground_field(g);
    rep.adjacent_field = adjacent_field(g);
    auto v1 = check_v1(g);
    if (!v1.ok) {
        rep.verdict = Verdict::NotQuasiArithmetic;
        rep.failures.push_back(*v1.witness);
        return rep;
    }
    auto v2 = check_v2(g);
    if (!v2.ok) {
        rep.verdict = v2.decided ? Verdict::NotQuasiArithmetic : Verdict::Inconclusive;
        rep.failures.push_back(*v2.witness);
        return rep;
    }
    try {
        auto v3 = check_v3(g, cycle_cap);
        if (v3.ok) {
            rep.verdict = Verdict::Arithmetic;
        } else {
            rep.verdict = Verdict::ProperlyQuasiArithmetic;
            rep.failures.push_back(*v3.witness);
        }
    } catch (const CycleExplosion& ex) {
        rep.verdict = Verdict::Inconclusive;
        rep.failures.push_back(Witness{"V3", "cap", {}, std::nullopt, {}, ex.what()});
    }
    return rep;
}

CorollaryResult corollary_test(const GramMatrix& parent, const GramMatrix& face) {
    SubfieldDescriptor fp = ground_field(parent);
    SubfieldDescriptor ff = ground_field(face);
    return ff.is_proper_subfield_of(fp) ? CorollaryResult::Obstruction : CorollaryResult::NoConclusion;
}

EvenAngleResult even_angle_facet_test(const GramMatrix& g, int facet, long max_m) {
    EvenAngleResult res;
    if (facet < 0 || static_cast<std::size_t>(facet) >= g.size()) throw InvalidInput("facet index out of range");
    const auto f = static_cast<std::size_t>(facet);
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (j == f) continue;
        const int s = g.entry_sign(f, j);
        if (s == 0) continue;
        // only facets that actually meet this one, |g| < 1
        if ((g.entry_square(f, j) - AlgNum(1)).sign() >= 0) continue;
        AngleLabel l = recognize_angle_squared(s, g.entry_square(f, j), max_m);
        if (l.kind == AngleLabel::Kind::Angle && l.m % 2 == 0) continue;
        res.applicable = false;
        res.neighbor = static_cast<int>(j);
        res.angle_m = l.kind == AngleLabel::Kind::Angle ? l.m : 0;
        return res;
    }
    return res;
}

std::pair<AlgNum, bool> rho_even_check(long m) {
    if (m < 2) throw InvalidInput("rho_even_check needs m >= 2");
    const AlgNum c = cos_pi_over(m);
    const AlgNum rho = AlgNum(2) / (AlgNum(1) - c);
    return {rho, is_algebraic_integer(rho / AlgNum(2))};
}

}  // namespace hypercox
