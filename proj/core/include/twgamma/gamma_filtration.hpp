#pragma once

// Split and twisted gamma filtrations of the K_0 ring, as submodules.
//
// A basic factor is C(ind(chi), n) (1 - e^chi)^n of degree n, for a nonzero
// achievable class chi and 1 <= n <= ind(chi). Piece i >= 1 is the subgroup
// generated by all products of basic factors of total degree >= i, computed as
// the least fixpoint of
//
//   P_i  >=  I + <f : deg f >= i>,     P_i  >=  f * P_{max(i - deg f, 1)}.
//
// Piece 0 is <ind(chi) e^chi : chi achievable> + P_1.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twgamma/exact_lattice.hpp"
#include "twgamma/finite_abelian.hpp"
#include "twgamma/k0_ring.hpp"

namespace twgamma {

/// ind(chi) for every chi in A. Elements never set read as 1.
class TitsIndexAssignment {
public:
    TitsIndexAssignment() = default;
    explicit TitsIndexAssignment(FinAbGroup group) : group_(std::move(group)) {}

    const FinAbGroup& group() const { return group_; }
    void set(const FinAbElem& chi, std::int64_t index);
    std::int64_t get(const FinAbElem& chi) const;
    bool is_set(const FinAbElem& chi) const { return values_.count(group_.make(chi.coords)) != 0; }
    const std::map<FinAbElem, std::int64_t>& explicit_values() const { return values_; }

    /// Throws Error when ind(0) != 1 or some index is not positive.
    void check() const;
    /// Warnings for ind(chi) != ind(-chi), ind(chi + chi') not dividing
    /// ind(chi) ind(chi'), and prime factors of ind(chi) not dividing the order of chi.
    std::vector<std::string> soft_warnings() const;

    friend bool operator==(const TitsIndexAssignment&, const TitsIndexAssignment&) = default;

private:
    FinAbGroup group_;
    std::map<FinAbElem, std::int64_t> values_;
};

/// Subset sums of the given classes, sorted.
std::vector<FinAbElem> achievable_classes(const FinAbGroup& group, const std::vector<FinAbElem>& omegas);
std::vector<FinAbElem> achievable_classes(const CharacterQuotient& cq);
std::vector<FinAbElem> achievable_classes(const K0Ring& ring);

using BinomialFn = std::function<Integer(unsigned long n, unsigned long k)>;
Integer binomial(unsigned long n, unsigned long k);

struct BasicFactor {
    FinAbElem chi;
    unsigned degree = 0;
    Integer coefficient;
    K0Elem value;
};

/// Nonzero factors C(ind chi, n)(1 - e^chi)^n for chi != 0 in `classes`, in
/// class order then degree order.
std::vector<BasicFactor> basic_factors(const K0Ring& ring, const std::vector<FinAbElem>& classes,
                                       const TitsIndexAssignment& ind, const BinomialFn& choose = binomial);

/// An additive subgroup of the ring, stored as its preimage lattice (which contains I).
struct Submodule {
    K0RingPtr ring;
    HermiteBasis lattice;

    bool contains(const K0Elem& x) const { return lattice.contains(x.coeffs()); }
    /// Nonzero reduced Hermite rows; they generate the submodule.
    std::vector<K0Elem> generators() const;
    /// The submodule as an abstract group (lattice / I).
    QuotientInvariants invariants() const;

    friend bool operator==(const Submodule& a, const Submodule& b) { return a.lattice == b.lattice; }
};

struct FiltrationOptions {
    /// Factor classes; achievable classes when unset.
    std::optional<std::vector<FinAbElem>> classes;
    /// Close every piece under multiplication by e^a as well.
    bool ideal_mode = false;
    /// Binomial used for the factor coefficients; replaceable for fault injection.
    BinomialFn choose = binomial;
};

struct FiltrationDiagnostics {
    unsigned sweeps = 0;         ///< sweeps including the final unchanged one
    bool stabilized = false;
    std::size_t factor_count = 0;
};

struct FiltrationResult {
    K0RingPtr ring;
    TitsIndexAssignment assignment;
    int max_degree = 0;
    std::vector<FinAbElem> classes;
    std::vector<BasicFactor> factors;
    /// pieces[i] for i = 0..max_degree
    std::vector<Submodule> pieces;
    /// graded[i] = pieces[i] / pieces[i+1] for i = 0..max_degree-1
    std::vector<QuotientInvariants> graded;
    FiltrationDiagnostics diagnostics;
    std::vector<std::string> warnings;

    const Submodule& piece(int i) const;
};

FiltrationResult twisted_filtration(const K0RingPtr& ring, const TitsIndexAssignment& ind, int max_degree,
                                    const FiltrationOptions& options = {});
/// All-ones assignment with every nonzero element of A as a factor class.
FiltrationResult split_filtration(const K0RingPtr& ring, int max_degree);

QuotientInvariants graded_quotient(const FiltrationResult& result, int i);

/// Degrees 1..max_degree where the subgroup and ideal readings of the
/// generating set give different pieces.
std::vector<int> mode_discrepancies(const K0RingPtr& ring, const TitsIndexAssignment& ind, int max_degree);

}  // namespace twgamma
