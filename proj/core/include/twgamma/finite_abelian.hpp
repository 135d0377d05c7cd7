#pragma once

// Finite abelian groups in invariant-factor coordinates.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "twgamma/exact_lattice.hpp"

namespace twgamma {

/// An element of a FinAbGroup: one residue per invariant factor.
struct FinAbElem {
    std::vector<std::int64_t> coords;

    bool is_zero() const;
    friend bool operator==(const FinAbElem&, const FinAbElem&) = default;
    friend auto operator<=>(const FinAbElem&, const FinAbElem&) = default;
};

/// Z/f_1 + ... + Z/f_k with 2 <= f_1 | f_2 | ... | f_k. The empty list is the
/// trivial group.
///
/// Elements are enumerated lexicographically by coordinates (first coordinate
/// most significant), so index 0 is the identity.
class FinAbGroup {
public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<std::int64_t> invariant_factors);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::size_t order() const { return order_; }
    bool is_trivial() const { return factors_.empty(); }

    FinAbElem zero() const;
    FinAbElem make(std::vector<std::int64_t> coords) const;
    FinAbElem add(const FinAbElem& a, const FinAbElem& b) const;
    FinAbElem negate(const FinAbElem& a) const;
    FinAbElem multiply(const FinAbElem& a, std::int64_t k) const;
    /// Additive order of a.
    std::int64_t element_order(const FinAbElem& a) const;

    std::size_t index_of(const FinAbElem& a) const;
    /// Index of element(i) + element(j).
    std::size_t sum_index(std::size_t i, std::size_t j) const;
    FinAbElem element(std::size_t index) const;
    std::vector<FinAbElem> elements() const;

    /// Subgroup generated by the given elements, as a sorted element list.
    std::vector<FinAbElem> span(const std::vector<FinAbElem>& generators) const;

    /// "(c1,c2,...)"; the trivial group's only element prints as "()".
    std::string format(const FinAbElem& a) const;
    /// Inverse of format; accepts optional surrounding whitespace.
    FinAbElem parse(const std::string& text) const;

    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.factors_ == b.factors_; }

private:
    void check(const FinAbElem& a) const;

    std::vector<std::int64_t> factors_;
    std::size_t order_ = 1;
    std::vector<std::uint32_t> sum_table_;  // order x order, filled for small groups
};

std::string to_string(const FinAbGroup& g);

/// A finite quotient Z^n / L with the images of the standard basis vectors.
struct Cokernel {
    FinAbGroup group;
    std::vector<FinAbElem> basis_images;
};

/// Z^n modulo the row span of `relations` (n = relations.cols()). Throws if the
/// quotient is infinite.
Cokernel finite_cokernel(const IntMatrix& relations);

/// G / <generators> together with the images of the given elements.
struct QuotientMap {
    FinAbGroup target;
    /// Image of every element of the source, indexed by the source's canonical index.
    std::vector<FinAbElem> images;
    FinAbElem apply(const FinAbGroup& source, const FinAbElem& x) const { return images[source.index_of(x)]; }
};

QuotientMap quotient_group(const FinAbGroup& source, const std::vector<FinAbElem>& generators);

}  // namespace twgamma
