#include "hypercox/poly.hpp"

#include "hypercox/errors.hpp"

#include <sstream>

namespace hypercox {

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

Poly Poly::monomial(const mpq_class& c, int degree) {
    std::vector<mpq_class> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& Poly::coeff(int i) const {
    static const mpq_class zero(0);
    if (i < 0 || i > degree()) return zero;
    return c_[static_cast<std::size_t>(i)];
}

const mpq_class& Poly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

bool Poly::is_monic() const { return !c_.empty() && c_.back() == 1; }

bool Poly::is_integral() const {
    for (const auto& q : c_) {
        if (q.get_den() != 1) return false;
    }
    return true;
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return scaled(1 / leading());
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpq_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::scaled(const mpq_class& s) const {
    std::vector<mpq_class> r = c_;
    for (auto& q : r) q *= s;
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero();
    std::vector<mpq_class> rem = c_;
    const int dd = d.degree();
    if (degree() < dd) return {Poly{}, *this};
    std::vector<mpq_class> quo(static_cast<std::size_t>(degree() - dd) + 1);
    const mpq_class lead = d.leading();
    for (int i = degree(); i >= dd; --i) {
        const mpq_class f = rem[static_cast<std::size_t>(i)] / lead;
        if (f == 0) continue;
        quo[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
        }
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::vector<Poly> Poly::sturm_chain() const {
    std::vector<Poly> chain;
    if (is_zero()) return chain;
    chain.push_back(*this);
    Poly d = derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        Poly r = -a.divmod(b).second;
        if (r.is_zero()) break;
        // positive rescaling keeps signs and tames coefficient growth
        mpq_class lead = r.leading();
        if (lead < 0) lead = -lead;
        chain.push_back(r.scaled(1 / lead));
    }
    return chain;
}

int sign_variations(const std::vector<int>& signs) {
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int Poly::count_real_roots() const {
    auto chain = sturm_chain();
    std::vector<int> at_minus_inf;
    std::vector<int> at_plus_inf;
    for (const auto& p : chain) {
        const int s = sgn(p.leading());
        at_plus_inf.push_back(s);
        at_minus_inf.push_back(p.degree() % 2 == 0 ? s : -s);
    }
    return sign_variations(at_minus_inf) - sign_variations(at_plus_inf);
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        mpq_class c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const bool unit = (c == 1);
        if (i == 0 || !unit) os << c.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string Poly::key() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += c_[i].get_str();
    }
    return s;
}

}  // namespace hypercox
