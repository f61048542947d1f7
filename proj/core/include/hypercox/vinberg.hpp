#pragma once

#include "hypercox/algnum.hpp"
#include "hypercox/errors.hpp"
#include "hypercox/gram.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypercox {

/// Element a + b*omega of the ring of integers of Q or of Q(sqrt(D)).
struct QuadInt {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const QuadInt&, const QuadInt&) = default;
    friend auto operator<=>(const QuadInt&, const QuadInt&) = default;
};

/// Ring of integers: Z, or Z[omega] with omega = sqrt(D) (D = 2, 3 mod 4)
/// or omega = (1 + sqrt(D)) / 2 (D = 1 mod 4). Arithmetic is on 64-bit
/// coordinates and throws on overflow.
class QuadRing {
public:
    /// Z.
    QuadRing();
    /// Ring of integers of Q(sqrt(d)); d must be square-free and > 1.
    explicit QuadRing(long d);

    bool is_rational() const noexcept { return d_ == 1; }
    long radicand() const noexcept { return d_; }
    bool half_integral() const noexcept { return half_; }
    /// Q or Q(sqrt(D)) as a tower.
    const TowerPtr& tower() const noexcept { return tower_; }
    /// Smallest unit > 1 (1 over Z).
    QuadInt fundamental_unit() const;

    QuadInt add(QuadInt x, QuadInt y) const;
    QuadInt sub(QuadInt x, QuadInt y) const;
    QuadInt mul(QuadInt x, QuadInt y) const;
    QuadInt neg(QuadInt x) const;
    QuadInt conj(QuadInt x) const;
    /// Field norm x * conj(x).
    std::int64_t norm(QuadInt x) const;
    /// x / y if it lies in the ring.
    std::optional<QuadInt> divide(QuadInt x, QuadInt y) const;
    bool divides(QuadInt y, QuadInt x) const { return divide(x, y).has_value(); }
    bool is_unit(QuadInt x) const;
    /// Sign under the identity embedding and under the other embedding.
    int sign(QuadInt x) const;
    int conj_sign(QuadInt x) const;
    bool totally_positive(QuadInt x) const { return sign(x) > 0 && conj_sign(x) > 0; }
    double value(QuadInt x) const;
    double conj_value(QuadInt x) const;
    /// Exact comparison of the real values.
    int compare(QuadInt x, QuadInt y) const { return sign(sub(x, y)); }
    /// True if the elements generate the unit ideal.
    bool coprime(const std::vector<QuadInt>& xs) const;
    /// All x with |x| <= bound and |conj(x)| <= conj_bound.
    std::vector<QuadInt> box(double bound, double conj_bound) const;

    AlgNum to_alg(QuadInt x) const;
    /// Throws InvalidInput if x is not a ring element.
    QuadInt from_alg(const AlgNum& x) const;
    std::string to_string(QuadInt x) const;

private:
    long d_ = 1;
    bool half_ = false;
    std::int64_t m_ = 0;  // omega^2 = m (or omega + m when half_)
    TowerPtr tower_;
    AlgNum omega_;
};

/// Lorentzian form sum diag[i] x_i^2 on O^{n+1}; diag[0] < 0 is the
/// negative slot, the rest totally positive, and diag[0] positive under the
/// non-identity embedding.
struct DiagonalLattice {
    QuadRing ring;
    std::vector<QuadInt> diag;

    std::size_t dimension() const { return diag.size() - 1; }
    /// Throws InvalidInput unless the form is admissible.
    void validate() const;
    QuadInt inner(const std::vector<QuadInt>& x, const std::vector<QuadInt>& y) const;
};

struct Root {
    std::vector<QuadInt> coords;
    QuadInt norm;  ///< (e, e)

    friend bool operator==(const Root&, const Root&) = default;
};

/// Totally positive divisors k of 2 * lcm(diag), one per class modulo unit
/// squares, that admit primitive crystallographic vectors.
std::vector<QuadInt> admissible_norms(const DiagonalLattice& l);

/// True if 2 (e, x) lies in (e, e) O for every basis vector x.
bool is_crystallographic(const DiagonalLattice& l, const Root& e);

/// Walls of the chamber of the stabilizer of v0 = (1, 0, ..., 0), found
/// greedily from a generic point of v0's orthogonal complement.
std::vector<Root> fundamental_cone(const DiagonalLattice& l);

struct VinbergOptions {
    std::size_t max_roots = 256;
    /// Upper bound on x0^2 / k explored before SearchExhausted.
    double max_distance = 1e5;
};

/// The root minimizing (e, v0)^2 / (e, e) among those with (e, v0) < 0 and
/// (e, a) <= 0 for every accepted root, ties broken by norm and then
/// lexicographically by coordinate value. Throws SearchExhausted.
Root next_root(const DiagonalLattice& l, const std::vector<Root>& accepted, const VinbergOptions& opt = {});

struct VinbergResult {
    DiagonalLattice lattice;
    std::vector<Root> roots;
    std::size_t cone_size = 0;
    GramMatrix gram;  ///< normalized Gram matrix of roots
    bool finite_volume = false;
};

/// Gram matrix of the roots, scaled representative B_ij = (e_i, e_j).
GramMatrix root_gram(const DiagonalLattice& l, const std::vector<Root>& roots);

class IterationLimit : public Error {
public:
    IterationLimit(const std::string& what, VinbergResult partial)
        : Error(what), partial_(std::move(partial)) {}
    const VinbergResult& partial() const noexcept { return partial_; }

private:
    VinbergResult partial_;
};

/// Vinberg's algorithm from v0 = (1, 0, ..., 0), stopping as soon as the
/// accepted roots bound a polytope of finite volume. Throws IterationLimit
/// (carrying the roots found so far) past max_roots or max_distance.
VinbergResult vinberg_run(const DiagonalLattice& l, const VinbergOptions& opt = {});

}  // namespace hypercox
