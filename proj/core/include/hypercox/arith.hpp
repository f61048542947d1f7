#pragma once

#include "hypercox/field.hpp"
#include "hypercox/gram.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypercox {

enum class Verdict { Arithmetic, ProperlyQuasiArithmetic, NotQuasiArithmetic, Inconclusive };

std::string to_string(Verdict v);

/// Why a condition failed (or could not be decided).
struct Witness {
    std::string condition;     ///< "V1", "V2" or "V3"
    std::string kind;          ///< "entry", "embedding", "cycle", "cap", "tower"
    std::vector<int> indices;  ///< entry (i, j) or cycle vertices
    std::optional<AlgNum> value;
    std::vector<int8_t> embedding;  ///< sign vector for embedding witnesses
    std::string detail;
};

struct CheckResult {
    bool ok = true;
    bool decided = true;
    std::optional<Witness> witness;
};

struct ClassificationReport {
    Verdict verdict = Verdict::Inconclusive;
    SubfieldDescriptor ground_field;
    SubfieldDescriptor adjacent_field;
    std::vector<Witness> failures;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// The field generated by the entries is totally real. Decided entrywise:
/// g_ij is totally real iff g_ij^2 is totally positive.
CheckResult check_v1(const GramMatrix& g);
/// G^sigma is positive semidefinite for every real embedding sigma that moves
/// the ground field. Evaluated through the coefficients e_k of the
/// characteristic polynomial, which lie in the ground field.
CheckResult check_v2(const GramMatrix& g);
/// (2 g_ij)^2 and 2^k times every simple cycle product are algebraic
/// integers. Throws CycleExplosion above cap.
CheckResult check_v3(const GramMatrix& g, std::size_t cycle_cap = kDefaultCycleCap);

ClassificationReport classify(const GramMatrix& g, std::size_t cycle_cap = kDefaultCycleCap);

enum class CorollaryResult { Obstruction, NoConclusion };
/// Obstruction iff the face's ground field is a proper subfield of the
/// parent's.
CorollaryResult corollary_test(const GramMatrix& parent, const GramMatrix& face);

struct EvenAngleResult {
    bool applicable = true;
    int neighbor = -1;   ///< witness facet for NotApplicable
    long angle_m = 0;    ///< pi/angle_m at the witness, 0 if not an angle
};
/// Every facet meeting the given one does so at an angle pi/(2m).
EvenAngleResult even_angle_facet_test(const GramMatrix& g, int facet, long max_m = 60);

/// rho_m = 2 / (1 - cos(pi/m)) and whether rho_m / 2 is an algebraic integer.
std::pair<AlgNum, bool> rho_even_check(long m);

}  // namespace hypercox
