#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace hypercox {

/// Dense univariate polynomial over the rationals, coefficients stored
/// lowest degree first. The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpq_class> coeffs);

    static Poly monomial(const mpq_class& c, int degree);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
    const mpq_class& coeff(int i) const;
    const mpq_class& leading() const;

    bool is_monic() const;
    /// All coefficients are integers.
    bool is_integral() const;
    Poly monic() const;
    Poly derivative() const;

    mpq_class eval(const mpq_class& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const mpq_class& s) const;
    /// Euclidean division; throws DivisionByZero on a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// Sturm chain p, p', -rem(p, p'), ...
    std::vector<Poly> sturm_chain() const;
    /// Number of distinct real roots.
    int count_real_roots() const;

    /// Human readable form in x, highest degree first, e.g. "x^2 - x - 1".
    std::string to_string(const std::string& var = "x") const;
    /// Compact coefficient list "c0,c1,...,cn" used inside identity keys.
    std::string key() const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Sign changes in a sequence of signs, zeros skipped.
int sign_variations(const std::vector<int>& signs);

}  // namespace hypercox
