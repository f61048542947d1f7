#pragma once

#include "hypercox/interval.hpp"
#include "hypercox/poly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hypercox {

class AlgNum;
class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// Starting precision (bits) for sign determination. Reads HYPERCOX_PRECISION
/// on first use; set_precision_seed overrides it.
mpfr_prec_t precision_seed();
void set_precision_seed(mpfr_prec_t bits);

/// A chain Q = K_0 < K_1 < ... < K_t of real quadratic extensions,
/// K_i = K_{i-1}(sqrt(d_i)). Towers are immutable and shared; extending a
/// tower by the same radicand twice yields the same object.
class Tower : public std::enable_shared_from_this<Tower> {
public:
    static const TowerPtr& rationals();

    int level() const noexcept { return level_; }
    std::size_t degree() const noexcept { return std::size_t{1} << level_; }
    const TowerPtr& parent() const noexcept { return parent_; }
    /// Radicand d_level, an element of the parent tower. Level must be > 0.
    const AlgNum& radicand() const;
    /// The ancestor at the given level (0 = rationals, level() = this).
    const Tower* ancestor(int lvl) const { return chain_[static_cast<std::size_t>(lvl)]; }
    TowerPtr prefix(int lvl) const;
    /// True if other is this tower or one of its ancestors.
    bool extends(const Tower& other) const;
    /// Highest level at which the two towers share an ancestor.
    int common_level(const Tower& other) const;

    /// Child tower with radicand d (an element of this tower, positive,
    /// not a square here). Callers go through sqrt_extend.
    TowerPtr extend(const AlgNum& d) const;

    /// Tower whose radicands are the images of these radicands under the
    /// sign vector (one sign per level). Throws InvalidEmbedding if some
    /// conjugated radicand is not positive.
    TowerPtr conjugate(const std::vector<int8_t>& signs) const;

    /// Enclosure of sqrt(d_lvl) with at least the requested precision.
    Interval radical_enclosure(int lvl, mpfr_prec_t prec) const;

    /// "Q(sqrt(2))(sqrt(5))" style description.
    std::string describe() const;

    Tower(const Tower&) = delete;
    Tower& operator=(const Tower&) = delete;
    ~Tower();

private:
    struct Key {};

public:
    Tower(Key, TowerPtr parent, std::unique_ptr<AlgNum> radicand);

private:
    Interval own_radical_enclosure(mpfr_prec_t prec) const;

    TowerPtr parent_;
    std::unique_ptr<AlgNum> radicand_;
    int level_ = 0;
    std::vector<const Tower*> chain_;

    mutable std::mutex mu_;
    mutable std::map<std::string, std::weak_ptr<const Tower>> children_;
    mutable std::map<std::vector<int8_t>, TowerPtr> conjugates_;
    mutable std::unique_ptr<Interval> enclosure_;
};

/// Exact element of a tower: 2^t rational coordinates over the monomials
/// prod_{i in mask} sqrt(d_i), indexed by bitmask (bit i-1 for level i).
class AlgNum {
public:
    AlgNum();
    AlgNum(long v);  // NOLINT(google-explicit-constructor)
    AlgNum(const mpq_class& q);  // NOLINT(google-explicit-constructor)
    AlgNum(TowerPtr tower, std::vector<mpq_class> coeffs);

    /// sqrt(d_t) of the given tower as an element of that tower.
    static AlgNum radical(const TowerPtr& tower);

    const TowerPtr& tower() const noexcept { return tower_; }
    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
    int level() const noexcept;
    bool is_zero() const;
    bool is_rational() const;
    /// Value as a rational; throws if not rational.
    mpq_class to_rational() const;
    /// Same value with the coefficient vector of a descendant tower.
    AlgNum lifted(const TowerPtr& target) const;
    /// Representation in the smallest prefix of the tower that contains it.
    AlgNum trimmed() const;

    int sign() const;
    Interval enclosure(mpfr_prec_t prec) const;
    double to_double() const;

    AlgNum abs() const;
    AlgNum inverse() const;
    AlgNum pow(unsigned e) const;
    /// Norm down to the rationals (product of all conjugates).
    mpq_class norm() const;

    AlgNum operator-() const;
    AlgNum& operator+=(const AlgNum& o);
    AlgNum& operator-=(const AlgNum& o);
    AlgNum& operator*=(const AlgNum& o);
    AlgNum& operator/=(const AlgNum& o);

    friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
    friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
    friend AlgNum operator*(AlgNum a, const AlgNum& b) { return a *= b; }
    friend AlgNum operator/(AlgNum a, const AlgNum& b) { return a /= b; }
    friend bool operator==(const AlgNum& a, const AlgNum& b);
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }
    friend bool operator<(const AlgNum& a, const AlgNum& b) { return (a - b).sign() < 0; }
    friend bool operator>(const AlgNum& a, const AlgNum& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const AlgNum& a, const AlgNum& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const AlgNum& a, const AlgNum& b) { return (a - b).sign() >= 0; }

    /// Debug form in terms of the tower radicals r1, r2, ...
    std::string debug_string() const;

private:
    TowerPtr tower_;
    std::vector<mpq_class> c_;
};

/// Bring two numbers into one tower, joining divergent towers if needed.
std::pair<AlgNum, AlgNum> unify(const AlgNum& a, const AlgNum& b);
/// Smallest tower built by joining; every input lifted into it.
std::vector<AlgNum> unify_all(const std::vector<AlgNum>& xs);
/// x represented in a tower that already contains it (target extends or is
/// joined with x's tower). The returned tower may be larger than target.
AlgNum move_into(const AlgNum& x, const TowerPtr& target);

/// Square root inside x's own tower, if one exists. The witness is >= 0.
std::optional<AlgNum> is_square(const AlgNum& x);
/// Non-negative square root, extending the tower by one level if needed.
AlgNum sqrt_extend(const AlgNum& x);

Poly minimal_polynomial(const AlgNum& x);
bool is_algebraic_integer(const AlgNum& x);
/// Evaluate a rational polynomial at x exactly.
AlgNum eval(const Poly& p, const AlgNum& x);
/// Number of real roots of p strictly below x; x must be a root of p.
int root_index(const Poly& p, const AlgNum& x);
/// True if every root of the minimal polynomial of x is real.
bool is_totally_real_element(const AlgNum& x);
/// String identifying the real number x independent of its tower.
std::string value_key(const AlgNum& x);

/// Real embedding of a tower, given by one sign per level.
struct Embedding {
    TowerPtr tower;
    std::vector<int8_t> signs;

    bool is_identity() const;
    TowerPtr image() const { return tower->conjugate(signs); }
    Embedding restricted(int lvl) const;
    std::string to_string() const;
};

std::vector<Embedding> real_embeddings(const TowerPtr& tower);
bool is_totally_real(const TowerPtr& tower);
/// sigma(x); x's tower must be a prefix of sigma's tower.
AlgNum apply_embedding(const AlgNum& x, const Embedding& sigma);
/// Throws NotTotallyRealTower if x's tower has non-real embeddings.
bool is_totally_positive(const AlgNum& x);

}  // namespace hypercox
