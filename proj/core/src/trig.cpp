#include "hypercox/trig.hpp"

#include "hypercox/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

namespace hypercox {

namespace {

struct Factored {
    long two_power = 0;
    std::vector<long> odd_primes;
    bool ok = true;
};

Factored factor_angle(long m) {
    Factored f;
    if (m < 1) {
        f.ok = false;
        return f;
    }
    while (m % 2 == 0) {
        m /= 2;
        ++f.two_power;
    }
    for (long p : {3L, 5L, 17L}) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) f.ok = false;
            f.odd_primes.push_back(p);
        }
    }
    if (m != 1) f.ok = false;
    return f;
}

// cos(2 pi / p) for a supported Fermat prime p
AlgNum cos_two_pi_over_prime(long p) {
    if (p == 3) return AlgNum(mpq_class(-1, 2));
    if (p == 5) return (sqrt_extend(AlgNum(5)) - AlgNum(1)) / AlgNum(4);
    // Gauss: 16 cos(2pi/17) = -1 + r + s + 2 sqrt(17 + 3r - s - 2t),
    // r = sqrt 17, s = sqrt(34 - 2r), t = sqrt(34 + 2r) = 8r/s
    AlgNum r = sqrt_extend(AlgNum(17));
    AlgNum s = sqrt_extend(AlgNum(34) - AlgNum(2) * r);
    AlgNum t = AlgNum(8) * r / s;
    AlgNum u = sqrt_extend(AlgNum(17) + AlgNum(3) * r - s - AlgNum(2) * t);
    return (AlgNum(-1) + r + s + AlgNum(2) * u) / AlgNum(16);
}

long mod_inverse(long a, long m) {
    a %= m;
    if (a < 0) a += m;
    for (long x = 1; x < m; ++x) {
        if ((a * x) % m == 1) return x;
    }
    throw Error("no modular inverse");
}

// sign of sin(2 pi k / n) for 0 < k < n
int sin_sign(long k, long n) { return 2 * k < n ? 1 : -1; }

// cos(2 pi / q) for q a product of distinct supported Fermat primes
AlgNum cos_two_pi_over_odd(const std::vector<long>& primes) {
    long q = 1;
    for (long p : primes) q *= p;
    // 1/q = sum_i x_i / p_i (mod 1) with x_i = (q/p_i)^-1 mod p_i
    long num = 0, den = 1;
    AlgNum c(1);
    for (long p : primes) {
        const long x = mod_inverse(q / p, p);
        AlgNum cp = chebyshev_t(x, cos_two_pi_over_prime(p));
        if (den == 1) {
            c = cp;
        } else {
            const int sa = sin_sign(num, den);
            const int sb = sin_sign(x, p);
            AlgNum ss = sqrt_extend((AlgNum(1) - c * c) * (AlgNum(1) - cp * cp));
            c = c * cp - (sa * sb > 0 ? ss : -ss);
        }
        num = (num * p + x * den) % (den * p);
        den *= p;
    }
    return c;
}

std::mutex cos_mu;
std::map<long, AlgNum>& cos_cache() {
    static std::map<long, AlgNum> m;
    return m;
}

}  // namespace

bool is_constructible_angle(long m) { return factor_angle(m).ok; }

AlgNum chebyshev_t(long m, const AlgNum& x) {
    if (m < 0) m = -m;
    if (m == 0) return AlgNum(1);
    // ladder on (T_k, T_{k+1}) using T_2k = 2T_k^2 - 1, T_2k+1 = 2T_k T_k+1 - x
    AlgNum a(1), b = x;
    int top = 0;
    while ((1L << (top + 1)) <= m) ++top;
    for (int bit = top; bit >= 0; --bit) {
        if ((m >> bit) & 1L) {
            AlgNum na = AlgNum(2) * a * b - x;
            AlgNum nb = AlgNum(2) * b * b - AlgNum(1);
            a = std::move(na);
            b = std::move(nb);
        } else {
            AlgNum na = AlgNum(2) * a * a - AlgNum(1);
            AlgNum nb = AlgNum(2) * a * b - x;
            a = std::move(na);
            b = std::move(nb);
        }
    }
    return a;
}

AlgNum cos_pi_over(long m) {
    const Factored f = factor_angle(m);
    if (!f.ok) throw UnsupportedAngle(m);
    {
        std::lock_guard lk(cos_mu);
        auto it = cos_cache().find(m);
        if (it != cos_cache().end()) return it->second;
    }
    AlgNum c;
    if (f.odd_primes.empty()) {
        c = AlgNum(-1);  // cos(pi)
    } else {
        long q = 1;
        for (long p : f.odd_primes) q *= p;
        // cos(pi/q) = -T_{(q-1)/2}(cos(2pi/q))
        c = -chebyshev_t((q - 1) / 2, cos_two_pi_over_odd(f.odd_primes));
    }
    for (long i = 0; i < f.two_power; ++i) c = sqrt_extend((AlgNum(1) + c) / AlgNum(2));
    std::lock_guard lk(cos_mu);
    cos_cache().emplace(m, c);
    return c;
}

std::string AngleLabel::to_string() const {
    switch (kind) {
        case Kind::RightAngle: return "right";
        case Kind::Angle: return "pi/" + std::to_string(m);
        case Kind::Parallel: return "parallel";
        case Kind::Divergent: return "divergent";
        case Kind::NonCoxeter: return "non-coxeter";
    }
    return "?";
}

AngleLabel recognize_angle(const AlgNum& g, long max_m) {
    const int s = g.sign();
    if (s > 0) throw PositiveEntry();
    if (s == 0) return AngleLabel{};
    AngleLabel l = recognize_angle_squared(s, (g * g).trimmed(), max_m);
    if (l.kind == AngleLabel::Kind::Divergent) l.weight = -g;
    return l;
}

AngleLabel recognize_angle_squared(int sign, const AlgNum& g2, long max_m) {
    AngleLabel l;
    if (sign > 0) throw PositiveEntry();
    if (sign == 0 || g2.is_zero()) return l;
    const int c1 = (g2 - AlgNum(1)).sign();
    if (c1 == 0) {
        l.kind = AngleLabel::Kind::Parallel;
        return l;
    }
    if (c1 > 0) {
        l.kind = AngleLabel::Kind::Divergent;
        l.weight = sqrt_extend(g2);
        return l;
    }
    l.kind = AngleLabel::Kind::NonCoxeter;
    // -g = cos(pi/m) iff y = 2g^2 - 1 = cos(2pi/m)
    const double q = g2.to_double();
    const double theta = std::acos(std::sqrt(q));
    if (!(theta > 0)) return l;
    const double est = std::numbers::pi / theta;
    const long m = std::lround(est);
    if (m < 3 || m > max_m || std::fabs(est - static_cast<double>(m)) > 1e-6 * est) return l;
    const AlgNum y = AlgNum(2) * g2 - AlgNum(1);
    if (chebyshev_t(m, y) != AlgNum(1)) return l;
    if (m >= 4) {
        // the roots of T_m(y) = 1 are cos(2 pi j / m); isolate j = 1
        const double next = std::cos(4 * std::numbers::pi / static_cast<double>(m));
        mpfr_prec_t prec = precision_seed();
        Interval e = y.enclosure(prec);
        if (!(e.lo_double() > next + 1e-12)) return l;
    }
    l.kind = AngleLabel::Kind::Angle;
    l.m = m;
    return l;
}

}  // namespace hypercox
