#pragma once

#include "hypercox/algnum.hpp"

#include <string>

namespace hypercox {

/// True if cos(pi/m) is built by this library: m = 2^a * q with q a product
/// of distinct primes among 3, 5, 17.
bool is_constructible_angle(long m);

/// cos(pi/m) for constructible m >= 1; throws UnsupportedAngle otherwise.
AlgNum cos_pi_over(long m);

/// Chebyshev polynomial T_m evaluated exactly at x.
AlgNum chebyshev_t(long m, const AlgNum& x);

/// Dihedral label read off a Gram entry.
struct AngleLabel {
    enum class Kind { RightAngle, Angle, Parallel, Divergent, NonCoxeter };
    Kind kind = Kind::RightAngle;
    long m = 2;     ///< for Angle (and 2 for RightAngle)
    AlgNum weight;  ///< for Divergent: -g > 1

    bool is_coxeter() const { return kind != Kind::NonCoxeter; }
    std::string to_string() const;
};

/// Recognize g <= 0 as -cos(pi/m) with m <= max_m, as -1, or as -w with w > 1.
/// Throws PositiveEntry for g > 0.
AngleLabel recognize_angle(const AlgNum& g, long max_m = 60);

/// Same, with g given by its sign and its square.
AngleLabel recognize_angle_squared(int sign, const AlgNum& g2, long max_m = 60);

}  // namespace hypercox
