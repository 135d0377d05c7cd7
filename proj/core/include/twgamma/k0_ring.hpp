#pragma once

// The ring G = Z[A] / (d_i (1 - e^{omega_bar_i})), A = Lambda / T*, which is
// K_0 of the split group. Elements are kept as canonical coset
// representatives of their coefficient vectors modulo the relation lattice.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twgamma/exact_lattice.hpp"
#include "twgamma/finite_abelian.hpp"
#include "twgamma/group_ring.hpp"
#include "twgamma/root_system.hpp"

namespace twgamma {

class K0Ring;
using K0RingPtr = std::shared_ptr<const K0Ring>;

/// A coset of the relation lattice, stored by its Hermite-reduced representative.
class K0Elem {
public:
    K0Elem() = default;

    const K0RingPtr& ring() const { return ring_; }
    const GroupRingElem& rep() const { return rep_; }
    const IntVector& coeffs() const { return rep_.coeffs(); }
    bool is_zero() const { return rep_.is_zero(); }

    friend K0Elem operator+(const K0Elem& a, const K0Elem& b);
    friend K0Elem operator-(const K0Elem& a, const K0Elem& b);
    friend K0Elem operator-(const K0Elem& a);
    friend K0Elem operator*(const K0Elem& a, const K0Elem& b);
    friend K0Elem operator*(const Integer& k, const K0Elem& a);
    friend bool operator==(const K0Elem& a, const K0Elem& b);

private:
    friend class K0Ring;
    K0Elem(K0RingPtr ring, GroupRingElem rep) : ring_(std::move(ring)), rep_(std::move(rep)) {}

    K0RingPtr ring_;
    GroupRingElem rep_;
};

class K0Ring : public std::enable_shared_from_this<K0Ring> {
public:
    const GroupPtr& group() const { return group_; }
    const std::vector<FinAbElem>& omega_bars() const { return omega_bars_; }
    const std::vector<Integer>& dims() const { return dims_; }
    /// Present when the ring was built from a root datum.
    const std::optional<CharacterQuotient>& character_quotient() const { return cq_; }
    const std::string& label() const { return label_; }
    int rank() const { return static_cast<int>(omega_bars_.size()); }

    /// The ideal I as a sublattice of Z^{|A|}, closed under translation by A.
    const HermiteBasis& relations() const { return relations_; }
    /// Z^{|A|} / I.
    const QuotientInvariants& invariants() const { return quotient_.invariants(); }

    K0Elem reduce(const GroupRingElem& x) const;
    K0Elem reduce(const IntVector& coeffs) const;
    K0Elem zero() const;
    K0Elem one() const;
    /// Class of e^chi.
    K0Elem exp(const FinAbElem& chi) const;
    /// Class of 1 - e^chi.
    K0Elem difference(const FinAbElem& chi) const;
    /// Class of e^{sum lambda_i omega_bar_i}.
    K0Elem q_map(const SmallVector& lambda) const;
    /// Class of sum lambda_i omega_bar_i in A.
    FinAbElem weight_class(const SmallVector& lambda) const;

    /// Preimage of the torsion subgroup: {x : augmentation(x) = 0} + I.
    HermiteBasis torsion_lattice() const;
    /// Order of the torsion subgroup.
    Integer torsion_order() const;
    /// Additive order of x; 0 if x has infinite order.
    Integer annihilator_of(const K0Elem& x) const;
    /// gcd of d_i over the i with omega_bar_i = chi (0 if there are none).
    Integer class_dimension_gcd(const FinAbElem& chi) const;

private:
    friend K0RingPtr build_k0_from_data(const FinAbGroup&, std::vector<FinAbElem>, std::vector<Integer>, std::string,
                                        std::optional<CharacterQuotient>);
    K0Ring(GroupPtr group, std::vector<FinAbElem> omegas, std::vector<Integer> dims, std::string label,
           std::optional<CharacterQuotient> cq);

    GroupPtr group_;
    std::vector<FinAbElem> omega_bars_;
    std::vector<Integer> dims_;
    std::string label_;
    std::optional<CharacterQuotient> cq_;
    HermiteBasis relations_;
    LatticeQuotient quotient_;
};

/// Lattice spanned by {c_i (1 - e^{omega_i}) e^a : i, a in A}.
HermiteBasis relation_ideal(const GroupPtr& group, const std::vector<FinAbElem>& omegas,
                            const std::vector<Integer>& coefficients);

K0RingPtr build_k0(const CharacterQuotient& cq);
/// Same, with the dimensions supplied by the caller instead of the Weyl formula.
K0RingPtr build_k0(const CharacterQuotient& cq, std::vector<Integer> dims);
/// A ring from raw data: A, the classes omega_bar_i and the weights d_i.
K0RingPtr build_k0_from_data(const FinAbGroup& group, std::vector<FinAbElem> omegas, std::vector<Integer> dims,
                             std::string label = "custom", std::optional<CharacterQuotient> cq = std::nullopt);

std::string to_string(const K0Elem& x);

/// Generators y_j = 1 - e^{b_j} for the invariant-factor basis b_j of A and
/// the relations between them, written out as text.
struct RingPresentation {
    std::vector<std::string> generators;
    std::vector<std::string> relations;
};

RingPresentation presentation(const K0Ring& ring);

}  // namespace twgamma
