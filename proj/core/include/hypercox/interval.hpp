#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <string>

namespace hypercox {

/// Closed interval [lo, hi] with MPFR endpoints, rounded outward on every
/// operation so that the exact value is always enclosed.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision = 64);
    Interval(const mpq_class& q, mpfr_prec_t precision);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    mpfr_prec_t precision() const noexcept { return prec_; }
    const mpfr_t& lo() const noexcept { return lo_; }
    const mpfr_t& hi() const noexcept { return hi_; }

    bool is_positive() const;  ///< lo > 0
    bool is_negative() const;  ///< hi < 0
    bool contains_zero() const;
    double lo_double() const;
    double hi_double() const;
    double mid_double() const;
    /// Width hi - lo rounded up.
    double width() const;
    std::string to_string(int digits = 20) const;

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator-() const;
    /// Square root of the non-negative part; lower end clamps at zero.
    Interval sqrt() const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace hypercox
