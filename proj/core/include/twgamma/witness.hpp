#pragma once

// Torsion witnesses in the twisted gamma filtration, checked on images in the
// K_0 ring: the cubic element eta = 4 c1^3 - c1^4 for half-spin groups and the
// pushforward of quadratic Chern expressions for adjoint E7.

#include <optional>
#include <string>
#include <vector>

#include "twgamma/exact_lattice.hpp"
#include "twgamma/gamma_filtration.hpp"
#include "twgamma/k0_ring.hpp"

namespace twgamma {

enum class WitnessStatus { Passed, Failed, NotApplicable };

std::string to_string(WitnessStatus s);
WitnessStatus parse_witness_status(const std::string& text);

struct WitnessCheck {
    std::string name;
    bool passed = false;
    std::string detail;

    friend bool operator==(const WitnessCheck&, const WitnessCheck&) = default;
};

struct WitnessReport {
    std::string kind;          ///< "hspin" or "e7"
    std::string group;         ///< ring label, e.g. "D8 hs"
    int i_A = 0;
    Integer index;             ///< ind(sigma) = 2^{i_A}
    Integer d;                 ///< additive order of y = 1 - e^sigma
    Integer coefficient;       ///< e7 only: C
    IntVector value;           ///< coefficients of the checked element
    std::string value_text;
    Integer value_order;       ///< additive order of the checked element in the ring
    bool admissible = true;    ///< e7 only: value lies in the second piece
    bool nontrivial = false;   ///< e7 only: value is nonzero in the second graded piece
    bool predicted = false;    ///< e7 only: 4 does not divide C and i_A <= 2
    std::vector<WitnessCheck> checks;
    WitnessStatus status = WitnessStatus::NotApplicable;
    std::vector<std::string> trace;

    bool verdict() const { return status == WitnessStatus::Passed; }
    friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

/// c1 of the line bundle of lambda: the class of 1 - e^{-lambda_bar}.
K0Elem chern_root(const K0Ring& ring, const SmallVector& lambda);

/// Half-spin witness for ind(sigma) = 2^{i_A}; needs A = Z/2 and v2(d) > i_A >= 3.
WitnessReport hspin_witness_check(const K0RingPtr& ring, int i_A);

/// sum_{i <= j} a_ij c1(omega_i) c1(omega_j), reading only the upper triangle of a.
K0Elem quadratic_pushforward(const K0Ring& ring, const IntMatrix& a);

/// sum of a_ij over i <= j with omega_bar_i = omega_bar_j = sigma.
Integer e7_coefficient(const K0Ring& ring, const IntMatrix& a);

/// Coefficients with a_22 = a_55 = a_77 = 2 (twice the special cycle), C = 6.
IntMatrix e7_default_coefficients();

/// Checks q(x) = 2C y and "q(x) nonzero in the second graded piece iff 4 does
/// not divide C and i_A <= 2" for adjoint E7. Draws whose image is not in the
/// second piece are reported as not applicable.
WitnessReport e7_special_cycle_check(const K0RingPtr& ring, int i_A,
                                     const std::optional<IntMatrix>& coefficients = std::nullopt);

}  // namespace twgamma
