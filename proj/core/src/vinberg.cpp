#include "hypercox/vinberg.hpp"

#include "hypercox/expr.hpp"
#include "hypercox/faces.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hypercox {

namespace {

using i64 = std::int64_t;
__extension__ using i128 = __int128;

i64 ck_add(i64 x, i64 y) {
    i64 r;
    if (__builtin_add_overflow(x, y, &r)) throw Error("integer overflow in lattice arithmetic");
    return r;
}

i64 ck_sub(i64 x, i64 y) {
    i64 r;
    if (__builtin_sub_overflow(x, y, &r)) throw Error("integer overflow in lattice arithmetic");
    return r;
}

i64 ck_mul(i64 x, i64 y) {
    i64 r;
    if (__builtin_mul_overflow(x, y, &r)) throw Error("integer overflow in lattice arithmetic");
    return r;
}

int sgn128(i128 v) { return (v > 0) - (v < 0); }

// sign of p + q sqrt(d)
int sign_sqrt(i64 p, i64 q, i64 d) {
    if (p >= 0 && q >= 0) return (p > 0 || q > 0) ? 1 : 0;
    if (p <= 0 && q <= 0) return -1;
    const i128 pp = static_cast<i128>(p) * p;
    const i128 qq = static_cast<i128>(q) * q * d;
    return p > 0 ? sgn128(pp - qq) : sgn128(qq - pp);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool squarefree(long d) {
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

}  // namespace

QuadRing::QuadRing() : tower_(Tower::rationals()), omega_(0) {}

QuadRing::QuadRing(long d) : d_(d) {
    if (d == 1) {
        tower_ = Tower::rationals();
        omega_ = AlgNum(0);
        return;
    }
    if (d < 2 || !squarefree(d)) throw InvalidInput("quadratic field radicand must be square-free and > 1");
    half_ = d % 4 == 1;
    m_ = half_ ? (d - 1) / 4 : d;
    AlgNum r = sqrt_extend(AlgNum(d));
    tower_ = r.tower();
    omega_ = half_ ? (AlgNum(1) + r) / AlgNum(2) : r;
}

QuadInt QuadRing::add(QuadInt x, QuadInt y) const { return {ck_add(x.a, y.a), ck_add(x.b, y.b)}; }
QuadInt QuadRing::sub(QuadInt x, QuadInt y) const { return {ck_sub(x.a, y.a), ck_sub(x.b, y.b)}; }
QuadInt QuadRing::neg(QuadInt x) const { return {ck_sub(0, x.a), ck_sub(0, x.b)}; }

QuadInt QuadRing::mul(QuadInt x, QuadInt y) const {
    if (is_rational()) return {ck_mul(x.a, y.a), 0};
    const i64 bd = ck_mul(x.b, y.b);
    QuadInt r{ck_add(ck_mul(x.a, y.a), ck_mul(bd, m_)), ck_add(ck_mul(x.a, y.b), ck_mul(x.b, y.a))};
    if (half_) r.b = ck_add(r.b, bd);
    return r;
}

QuadInt QuadRing::conj(QuadInt x) const {
    if (is_rational()) return x;
    if (half_) return {ck_add(x.a, x.b), ck_sub(0, x.b)};
    return {x.a, ck_sub(0, x.b)};
}

i64 QuadRing::norm(QuadInt x) const {
    if (is_rational()) return x.a;
    return mul(x, conj(x)).a;
}

std::optional<QuadInt> QuadRing::divide(QuadInt x, QuadInt y) const {
    if (y == QuadInt{}) throw DivisionByZero();
    const i64 n = norm(y);
    const QuadInt p = is_rational() ? x : mul(x, conj(y));
    if (p.a % n != 0 || p.b % n != 0) return std::nullopt;
    return QuadInt{p.a / n, p.b / n};
}

bool QuadRing::is_unit(QuadInt x) const {
    const i64 n = norm(x);
    return n == 1 || n == -1;
}

int QuadRing::sign(QuadInt x) const {
    if (is_rational()) return (x.a > 0) - (x.a < 0);
    if (half_) return sign_sqrt(ck_add(ck_mul(2, x.a), x.b), x.b, d_);
    return sign_sqrt(x.a, x.b, d_);
}

int QuadRing::conj_sign(QuadInt x) const { return sign(conj(x)); }

double QuadRing::value(QuadInt x) const {
    if (is_rational()) return static_cast<double>(x.a);
    const double w = half_ ? (1.0 + std::sqrt(static_cast<double>(d_))) / 2.0 : std::sqrt(static_cast<double>(d_));
    return static_cast<double>(x.a) + static_cast<double>(x.b) * w;
}

double QuadRing::conj_value(QuadInt x) const { return value(conj(x)); }

bool QuadRing::coprime(const std::vector<QuadInt>& xs) const {
    if (is_rational()) {
        i64 g = 0;
        for (const auto& x : xs) g = std::gcd(g, x.a);
        return g == 1;
    }
    // the ideal generated by xs is the Z-span of x and x*omega; it is the
    // whole ring iff the gcd of the 2x2 minors is 1
    std::vector<QuadInt> gens;
    for (const auto& x : xs) {
        if (x == QuadInt{}) continue;
        gens.push_back(x);
        gens.push_back(mul(x, QuadInt{0, 1}));
    }
    i128 g = 0;
    for (std::size_t i = 0; i < gens.size() && g != 1; ++i) {
        for (std::size_t j = i + 1; j < gens.size() && g != 1; ++j) {
            g = gcd128(g, static_cast<i128>(gens[i].a) * gens[j].b - static_cast<i128>(gens[i].b) * gens[j].a);
        }
    }
    return g == 1;
}

std::vector<QuadInt> QuadRing::box(double bound, double conj_bound) const {
    std::vector<QuadInt> out;
    const double tol = 1e-9 * (1.0 + bound + conj_bound);
    if (is_rational()) {
        const auto hi = static_cast<i64>(std::floor(bound + tol));
        for (i64 a = -hi; a <= hi; ++a) out.push_back({a, 0});
        return out;
    }
    const double s = std::sqrt(static_cast<double>(d_));
    const double w1 = half_ ? (1.0 + s) / 2.0 : s;
    const double w2 = half_ ? (1.0 - s) / 2.0 : -s;
    const auto bmax = static_cast<i64>(std::ceil((bound + conj_bound) / s)) + 1;
    for (i64 b = -bmax; b <= bmax; ++b) {
        const double lo = std::max(-bound - static_cast<double>(b) * w1, -conj_bound - static_cast<double>(b) * w2);
        const double hi = std::min(bound - static_cast<double>(b) * w1, conj_bound - static_cast<double>(b) * w2);
        if (lo > hi + 1.0) continue;
        for (auto a = static_cast<i64>(std::floor(lo)) - 1; a <= static_cast<i64>(std::ceil(hi)) + 1; ++a) {
            const QuadInt x{a, b};
            if (std::abs(value(x)) <= bound + tol && std::abs(conj_value(x)) <= conj_bound + tol) out.push_back(x);
        }
    }
    return out;
}

QuadInt QuadRing::fundamental_unit() const {
    if (is_rational()) return {1, 0};
    for (i64 b = 1; b < 10'000'000; ++b) {
        for (int n : {-1, 1}) {
            // a^2 + c a + e = 0 with c = b (half) or 0, e = -(m b^2) - n
            const i128 c = half_ ? b : 0;
            const i128 e = -static_cast<i128>(m_) * b * b - n;
            const i128 disc = c * c - 4 * e;
            if (disc < 0) continue;
            auto r = static_cast<i128>(std::llround(std::sqrt(static_cast<long double>(disc))));
            while (r * r > disc) --r;
            while ((r + 1) * (r + 1) <= disc) ++r;
            if (r * r != disc || ((r - c) % 2) != 0) continue;
            const QuadInt u{static_cast<i64>((r - c) / 2), b};
            if (value(u) > 1.0) return u;
        }
    }
    throw Error("fundamental unit search failed");
}

AlgNum QuadRing::to_alg(QuadInt x) const {
    if (is_rational()) return AlgNum(static_cast<long>(x.a));
    return AlgNum(static_cast<long>(x.a)) + AlgNum(static_cast<long>(x.b)) * omega_;
}

QuadInt QuadRing::from_alg(const AlgNum& x) const {
    auto as_int = [](const mpq_class& q) {
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw InvalidInput("lattice coefficient is not a ring integer");
        return static_cast<i64>(q.get_num().get_si());
    };
    const AlgNum y = x.trimmed();
    if (y.is_rational()) return {as_int(y.to_rational()), 0};
    if (is_rational()) throw InvalidInput("irrational coefficient over the rationals");
    const AlgNum z = move_into(y, tower_).trimmed();
    if (z.tower() != tower_) throw InvalidInput("coefficient does not lie in Q(sqrt(" + std::to_string(d_) + "))");
    const mpq_class c0 = z.coeffs()[0];
    const mpq_class c1 = z.coeffs()[1];
    if (half_) return {as_int(c0 - c1), as_int(2 * c1)};
    return {as_int(c0), as_int(c1)};
}

std::string QuadRing::to_string(QuadInt x) const { return to_expression(to_alg(x)); }

void DiagonalLattice::validate() const {
    if (diag.size() < 2) throw InvalidInput("lattice needs at least two coefficients");
    if (ring.sign(diag[0]) >= 0) throw InvalidInput("first coefficient must be negative");
    if (!ring.is_rational() && ring.conj_sign(diag[0]) <= 0)
        throw InvalidInput("form is not positive definite under the non-identity embedding");
    for (std::size_t i = 1; i < diag.size(); ++i) {
        if (!ring.totally_positive(diag[i]) && !(ring.is_rational() && diag[i].a > 0))
            throw InvalidInput("coefficient " + std::to_string(i) + " is not totally positive");
    }
}

QuadInt DiagonalLattice::inner(const std::vector<QuadInt>& x, const std::vector<QuadInt>& y) const {
    QuadInt s;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (x[i] == QuadInt{} || y[i] == QuadInt{}) continue;
        s = ring.add(s, ring.mul(diag[i], ring.mul(x[i], y[i])));
    }
    return s;
}

bool is_crystallographic(const DiagonalLattice& l, const Root& e) {
    for (std::size_t i = 0; i < l.diag.size(); ++i) {
        const QuadInt v = l.ring.mul(QuadInt{2, 0}, l.ring.mul(l.diag[i], e.coords[i]));
        if (!l.ring.divides(e.norm, v)) return false;
    }
    return true;
}

namespace {

i64 lcm64(i64 a, i64 b) { return ck_mul(a / std::gcd(a, b), b); }

bool nonnegative(const QuadRing& r, QuadInt x) {
    return r.sign(x) >= 0 && (r.is_rational() || r.conj_sign(x) >= 0);
}

// x / u is the square of a unit
bool unit_square_ratio(const QuadRing& r, QuadInt x, QuadInt y) {
    auto u = r.divide(x, y);
    if (!u || !r.is_unit(*u)) return false;
    const QuadInt eps = r.fundamental_unit();
    const QuadInt inv = *r.divide(QuadInt{1, 0}, eps);
    QuadInt up{1, 0}, down{1, 0};
    for (int j = 0; j <= 12; ++j) {
        for (QuadInt v : {up, down}) {
            if (r.mul(v, v) == *u) return true;
        }
        up = r.mul(up, eps);
        down = r.mul(down, inv);
    }
    return false;
}

int lex_compare(const QuadRing& r, const Root& x, const Root& y) {
    if (int c = r.compare(x.norm, y.norm); c != 0) return c;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (int c = r.compare(x.coords[i], y.coords[i]); c != 0) return c;
    }
    return 0;
}

// Depth-first search for vectors with coordinate 0 fixed and
// sum_{i >= 1} diag_i x_i^2 = target, 2 diag_i x_i in kO, rejecting
// partial vectors that are obtuse to an accepted root whose support is
// already fully assigned.
class RootEnumerator {
public:
    RootEnumerator(const DiagonalLattice& l, const std::vector<Root>& accepted) : l_(l), r_(l.ring) {
        const std::size_t n = l.diag.size();
        by_depth_.resize(n);
        for (const auto& a : accepted) {
            std::size_t last = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (a.coords[i] != QuadInt{}) last = i;
            }
            by_depth_[last].push_back(&a);
        }
        accepted_ = &accepted;
    }

    std::vector<Root> run(QuadInt x0, QuadInt k) {
        const std::size_t n = l_.diag.size();
        out_.clear();
        k_ = k;
        coords_.assign(n, QuadInt{});
        coords_[0] = x0;
        for (const Root* a : by_depth_[0]) {
            if (r_.sign(l_.inner(coords_, a->coords)) > 0) return {};
        }
        const QuadInt target = r_.sub(k, r_.mul(l_.diag[0], r_.mul(x0, x0)));
        if (!nonnegative(r_, target)) return {};
        const double t = std::max(0.0, r_.value(target));
        const double tc = r_.is_rational() ? 0.0 : std::max(0.0, r_.conj_value(target));
        cands_.assign(n, {});
        for (std::size_t i = 1; i < n; ++i) {
            const double di = r_.value(l_.diag[i]);
            const double dc = r_.is_rational() ? 1.0 : r_.conj_value(l_.diag[i]);
            for (QuadInt x : r_.box(std::sqrt(t / di), r_.is_rational() ? 0.0 : std::sqrt(tc / dc))) {
                const QuadInt twice = r_.mul(QuadInt{2, 0}, r_.mul(l_.diag[i], x));
                if (!r_.divides(k, twice)) continue;
                const QuadInt q = r_.mul(l_.diag[i], r_.mul(x, x));
                if (!nonnegative(r_, r_.sub(target, q))) continue;
                cands_[i].push_back({x, q});
            }
            std::sort(cands_[i].begin(), cands_[i].end(),
                      [&](const Cand& a, const Cand& b) { return r_.compare(a.q, b.q) < 0; });
        }
        descend(1, target);
        return std::move(out_);
    }

private:
    struct Cand {
        QuadInt x;
        QuadInt q;
    };

    void descend(std::size_t i, QuadInt rem) {
        const std::size_t n = l_.diag.size();
        for (const Cand& c : cands_[i]) {
            const QuadInt next = r_.sub(rem, c.q);
            if (r_.sign(next) < 0) break;
            if (!r_.is_rational() && r_.conj_sign(next) < 0) continue;
            if (i + 1 == n && next != QuadInt{}) continue;
            coords_[i] = c.x;
            bool ok = true;
            for (const Root* a : by_depth_[i]) {
                if (r_.sign(l_.inner(coords_, a->coords)) > 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                if (i + 1 == n) {
                    accept();
                } else {
                    descend(i + 1, next);
                }
            }
            coords_[i] = QuadInt{};
        }
    }

    void accept() {
        if (!r_.coprime(coords_)) return;
        Root e{coords_, k_};
        for (const auto& a : *accepted_) {
            if (a == e) return;
        }
        out_.push_back(std::move(e));
    }

    const DiagonalLattice& l_;
    const QuadRing& r_;
    std::vector<std::vector<const Root*>> by_depth_;
    const std::vector<Root>* accepted_ = nullptr;
    std::vector<std::vector<Cand>> cands_;
    std::vector<QuadInt> coords_;
    QuadInt k_;
    std::vector<Root> out_;
};

struct Shell {
    QuadInt x0;
    QuadInt k;
};

// sign of x0^2 / k - y0^2 / m
int compare_distance(const QuadRing& r, const Shell& s, const Shell& t) {
    return r.sign(r.sub(r.mul(r.mul(s.x0, s.x0), t.k), r.mul(r.mul(t.x0, t.x0), s.k)));
}

// sign of x0^2 / k - 2^j
int compare_power(const QuadRing& r, const Shell& s, int j) {
    const QuadInt sq = r.mul(s.x0, s.x0);
    if (j >= 0) return r.sign(r.sub(sq, r.mul(QuadInt{i64{1} << j, 0}, s.k)));
    return r.sign(r.sub(r.mul(QuadInt{i64{1} << (-j), 0}, sq), s.k));
}

constexpr int kFirstWindow = -30;

// shells with 2^(j-1) < x0^2/k <= 2^j (or <= 2^j for the first window)
std::vector<Shell> shells_in_window(const DiagonalLattice& l, const std::vector<QuadInt>& norms, int j) {
    const QuadRing& r = l.ring;
    std::vector<Shell> out;
    for (QuadInt k : norms) {
        const double hi = std::sqrt(std::ldexp(r.value(k), j));
        const double conj_hi = r.is_rational() ? 0.0 : std::sqrt(r.conj_value(k) / r.conj_value(l.diag[0]));
        for (QuadInt x0 : r.box(hi, conj_hi)) {
            if (r.sign(x0) <= 0) continue;
            const Shell s{x0, k};
            if (compare_power(r, s, j) > 0) continue;
            if (j > kFirstWindow && compare_power(r, s, j - 1) <= 0) continue;
            if (!r.is_rational() &&
                r.conj_sign(r.sub(k, r.mul(l.diag[0], r.mul(x0, x0)))) < 0)
                continue;
            if (!r.divides(k, r.mul(QuadInt{2, 0}, r.mul(l.diag[0], x0)))) continue;
            out.push_back(s);
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [&](const Shell& a, const Shell& b) { return compare_distance(r, a, b) < 0; });
    return out;
}

// first root, in search order, at distance >= from (or any distance)
Root search(const DiagonalLattice& l, const std::vector<Root>& accepted, const std::optional<Shell>& from,
            const VinbergOptions& opt) {
    const QuadRing& r = l.ring;
    const auto norms = admissible_norms(l);
    RootEnumerator en(l, accepted);
    for (int j = kFirstWindow;; ++j) {
        if (std::ldexp(1.0, j - 1) > opt.max_distance)
            throw SearchExhausted("no further root with x0^2/k <= " + std::to_string(opt.max_distance));
        if (from && compare_power(r, *from, j) > 0) continue;
        auto shells = shells_in_window(l, norms, j);
        for (std::size_t s = 0; s < shells.size();) {
            std::size_t e = s + 1;
            while (e < shells.size() && compare_distance(r, shells[s], shells[e]) == 0) ++e;
            if (!from || compare_distance(r, shells[s], *from) >= 0) {
                std::vector<Root> found;
                for (std::size_t q = s; q < e; ++q) {
                    auto part = en.run(shells[q].x0, shells[q].k);
                    found.insert(found.end(), part.begin(), part.end());
                }
                if (!found.empty()) {
                    return *std::min_element(found.begin(), found.end(), [&](const Root& a, const Root& b) {
                        return lex_compare(r, a, b) < 0;
                    });
                }
            }
            s = e;
        }
    }
}

}  // namespace

std::vector<QuadInt> admissible_norms(const DiagonalLattice& l) {
    const QuadRing& r = l.ring;
    std::vector<QuadInt> out;
    if (r.is_rational()) {
        i64 m = 2;
        for (const auto& d : l.diag) m = lcm64(m, d.a < 0 ? -d.a : d.a);
        for (i64 k = 1; k <= m; ++k) {
            if (m % k != 0) continue;
            // a primitive root needs gcd_i(k / gcd(k, 2 d_i)) = 1
            i64 g = 0;
            for (const auto& d : l.diag) g = std::gcd(g, k / std::gcd(k, 2 * (d.a < 0 ? -d.a : d.a)));
            if (g == 1) out.push_back({k, 0});
        }
        return out;
    }
    QuadInt m{2, 0};
    for (std::size_t i = 0; i < l.diag.size(); ++i) m = r.mul(m, i == 0 ? r.neg(l.diag[0]) : l.diag[i]);
    const double eps = r.value(r.fundamental_unit());
    const double bound = std::max(std::abs(r.value(m)), std::abs(r.conj_value(m))) * eps * eps;
    std::vector<QuadInt> cands;
    for (QuadInt k : r.box(bound, bound)) {
        if (!r.totally_positive(k) || !r.divides(k, m)) continue;
        cands.push_back(k);
    }
    std::sort(cands.begin(), cands.end(), [&](QuadInt a, QuadInt b) {
        const double sa = r.value(a) + r.conj_value(a);
        const double sb = r.value(b) + r.conj_value(b);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    for (QuadInt k : cands) {
        bool seen = std::any_of(out.begin(), out.end(), [&](QuadInt c) { return unit_square_ratio(r, k, c); });
        if (!seen) out.push_back(k);
    }
    std::sort(out.begin(), out.end(), [&](QuadInt a, QuadInt b) { return r.compare(a, b) < 0; });
    return out;
}

std::vector<Root> fundamental_cone(const DiagonalLattice& l) {
    const QuadRing& r = l.ring;
    const std::size_t n = l.diag.size();
    std::vector<Root> all;
    RootEnumerator en(l, {});
    for (QuadInt k : admissible_norms(l)) {
        auto part = en.run(QuadInt{}, k);
        all.insert(all.end(), part.begin(), part.end());
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<i64> w(n, 0);
        for (std::size_t i = 1; i < n; ++i) {
            w[i] = static_cast<i64>(n - i) * 1000 * (attempt + 1) +
                   (attempt == 0 ? 0 : static_cast<i64>((i * 7919 + attempt * 104729) % 997));
        }
        std::vector<std::pair<QuadInt, const Root*>> below;
        bool generic = true;
        for (const auto& e : all) {
            QuadInt s;
            for (std::size_t i = 1; i < n; ++i) s = r.add(s, r.mul(QuadInt{w[i], 0}, r.mul(l.diag[i], e.coords[i])));
            const int sg = r.sign(s);
            if (sg == 0) {
                generic = false;
                break;
            }
            if (sg < 0) below.push_back({s, &e});
        }
        if (!generic) continue;
        std::sort(below.begin(), below.end(), [&](const auto& a, const auto& b) {
            const QuadInt lhs = r.mul(r.mul(a.first, a.first), b.second->norm);
            const QuadInt rhs = r.mul(r.mul(b.first, b.first), a.second->norm);
            if (int c = r.compare(lhs, rhs); c != 0) return c < 0;
            return lex_compare(r, *a.second, *b.second) < 0;
        });
        std::vector<Root> cone;
        for (const auto& [s, e] : below) {
            bool ok = std::all_of(cone.begin(), cone.end(),
                                  [&](const Root& a) { return r.sign(l.inner(e->coords, a.coords)) <= 0; });
            if (ok) cone.push_back(*e);
        }
        return cone;
    }
    throw Error("no generic point found for the stabilizer chamber");
}

Root next_root(const DiagonalLattice& l, const std::vector<Root>& accepted, const VinbergOptions& opt) {
    return search(l, accepted, std::nullopt, opt);
}

GramMatrix root_gram(const DiagonalLattice& l, const std::vector<Root>& roots) {
    const std::size_t m = roots.size();
    Matrix b(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const AlgNum v = l.ring.to_alg(l.inner(roots[i].coords, roots[j].coords));
            b(i, j) = v;
            b(j, i) = v;
        }
    }
    return GramMatrix::from_scaled(b);
}

VinbergResult vinberg_run(const DiagonalLattice& l, const VinbergOptions& opt) {
    l.validate();
    VinbergResult res;
    res.lattice = l;
    res.roots = fundamental_cone(l);
    res.cone_size = res.roots.size();
    const std::size_t n = l.dimension();
    std::optional<Shell> from;
    auto finish_partial = [&](const std::string& why) {
        res.gram = root_gram(l, res.roots);
        throw IterationLimit(why, res);
    };
    while (true) {
        if (res.roots.size() >= opt.max_roots) finish_partial("root limit " + std::to_string(opt.max_roots) + " reached");
        Root e;
        try {
            e = search(l, res.roots, from, opt);
        } catch (const SearchExhausted& ex) {
            finish_partial(ex.what());
        }
        from = Shell{e.coords[0], e.norm};
        res.roots.push_back(std::move(e));
        if (res.roots.size() <= n) continue;
        GramMatrix g = root_gram(l, res.roots);
        if (finite_volume_check(g)) {
            res.gram = std::move(g);
            res.finite_volume = true;
            return res;
        }
    }
}

}  // namespace hypercox
