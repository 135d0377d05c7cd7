#pragma once

// The integral group ring Z[A] of a finite abelian group A.
//
// Sign convention: differences are always written (1 - e^chi). Where a formula
// calls for (1 - e^{-lambda}) the caller passes the negated class; negation is
// an automorphism of A, so filtration submodules do not depend on the choice.

#include <memory>
#include <string>

#include "twgamma/exact_lattice.hpp"
#include "twgamma/finite_abelian.hpp"

namespace twgamma {

using GroupPtr = std::shared_ptr<const FinAbGroup>;

/// Dense coefficient vector indexed by the canonical enumeration of A.
class GroupRingElem {
public:
    GroupRingElem() = default;
    /// The zero element of Z[A].
    explicit GroupRingElem(GroupPtr group);
    GroupRingElem(GroupPtr group, IntVector coeffs);

    static GroupRingElem one(GroupPtr group);
    static GroupRingElem constant(GroupPtr group, const Integer& c);
    /// e^g
    static GroupRingElem basis(GroupPtr group, const FinAbElem& g);

    const GroupPtr& group() const { return group_; }
    const IntVector& coeffs() const { return coeffs_; }
    const Integer& coeff(const FinAbElem& g) const;
    bool is_zero() const;

    GroupRingElem operator-() const;
    GroupRingElem& operator+=(const GroupRingElem& other);
    GroupRingElem& operator-=(const GroupRingElem& other);
    GroupRingElem& operator*=(const Integer& k);

    friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
    friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
    friend GroupRingElem operator*(const Integer& k, GroupRingElem a) { return a *= k; }
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);

    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b);

private:
    void require_same_group(const GroupRingElem& other) const;

    GroupPtr group_;
    IntVector coeffs_;
};

GroupRingElem add(const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem negate(const GroupRingElem& a);
GroupRingElem scalar_multiply(const GroupRingElem& a, const Integer& k);
/// Convolution product.
GroupRingElem multiply(const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem power(const GroupRingElem& a, unsigned n);
/// Multiplication by e^g (a coefficient shift).
GroupRingElem translate(const GroupRingElem& a, const FinAbElem& g);
/// Sum of coefficients.
Integer augmentation(const GroupRingElem& a);
/// (1 - e^chi)^n; n = 0 gives 1.
GroupRingElem difference_power(const GroupPtr& group, const FinAbElem& chi, unsigned n);

/// "a0 + a1*e[(1)] - a2*e[(2)]"; the identity term prints as a bare integer.
std::string to_string(const GroupRingElem& a);

}  // namespace twgamma
