#include "twgamma/k0_ring.hpp"

#include <map>
#include <sstream>

namespace twgamma {

namespace {

HermiteBasis full_lattice(std::size_t n) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector r(n, Integer(0));
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    return hermite_normal_form(std::move(rows), n);
}

const K0RingPtr& same_ring(const K0Elem& a, const K0Elem& b) {
    if (!a.ring() || a.ring() != b.ring()) throw Error("K0 elements from different rings");
    return a.ring();
}

// "(1-y1)^2*(1-y2)" for the class with coordinates c; "1" for zero.
std::string monomial(const FinAbElem& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c.coords.size(); ++j) {
        if (c.coords[j] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "(1-y" << j + 1 << ")";
        if (c.coords[j] != 1) os << "^" << c.coords[j];
    }
    return first ? "1" : os.str();
}

}  // namespace

K0Elem operator+(const K0Elem& a, const K0Elem& b) { return same_ring(a, b)->reduce(a.rep_ + b.rep_); }
K0Elem operator-(const K0Elem& a, const K0Elem& b) { return same_ring(a, b)->reduce(a.rep_ - b.rep_); }
K0Elem operator-(const K0Elem& a) { return a.ring_->reduce(-a.rep_); }
K0Elem operator*(const K0Elem& a, const K0Elem& b) { return same_ring(a, b)->reduce(a.rep_ * b.rep_); }
K0Elem operator*(const Integer& k, const K0Elem& a) { return a.ring_->reduce(k * a.rep_); }
bool operator==(const K0Elem& a, const K0Elem& b) { return same_ring(a, b) && a.rep_ == b.rep_; }

HermiteBasis relation_ideal(const GroupPtr& group, const std::vector<FinAbElem>& omegas,
                            const std::vector<Integer>& coefficients) {
    if (omegas.size() != coefficients.size()) throw Error("relation_ideal: one coefficient per class required");
    std::vector<IntVector> rows;
    const auto elems = group->elements();
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        if (omegas[i].is_zero() || coefficients[i] == 0) continue;
        GroupRingElem g = coefficients[i] * (GroupRingElem::one(group) - GroupRingElem::basis(group, omegas[i]));
        for (const auto& a : elems) rows.push_back(translate(g, a).coeffs());
    }
    return hermite_normal_form(std::move(rows), group->order());
}

K0Ring::K0Ring(GroupPtr group, std::vector<FinAbElem> omegas, std::vector<Integer> dims, std::string label,
               std::optional<CharacterQuotient> cq)
    : group_(std::move(group)),
      omega_bars_(std::move(omegas)),
      dims_(std::move(dims)),
      label_(std::move(label)),
      cq_(std::move(cq)),
      relations_(relation_ideal(group_, omega_bars_, dims_)),
      quotient_(full_lattice(group_->order()), relations_) {}

K0Elem K0Ring::reduce(const GroupRingElem& x) const {
    if (!x.group() || !(*x.group() == *group_)) throw Error("reduce: element over a different group");
    return reduce(x.coeffs());
}

K0Elem K0Ring::reduce(const IntVector& coeffs) const {
    if (coeffs.size() != group_->order()) throw Error("reduce: coefficient vector has wrong length");
    return K0Elem(shared_from_this(), GroupRingElem(group_, relations_.reduce(coeffs)));
}

K0Elem K0Ring::zero() const { return reduce(GroupRingElem(group_)); }
K0Elem K0Ring::one() const { return reduce(GroupRingElem::one(group_)); }
K0Elem K0Ring::exp(const FinAbElem& chi) const { return reduce(GroupRingElem::basis(group_, chi)); }

K0Elem K0Ring::difference(const FinAbElem& chi) const {
    return reduce(GroupRingElem::one(group_) - GroupRingElem::basis(group_, chi));
}

FinAbElem K0Ring::weight_class(const SmallVector& lambda) const {
    if (lambda.size() != omega_bars_.size()) throw Error("weight has wrong length");
    FinAbElem s = group_->zero();
    for (std::size_t i = 0; i < lambda.size(); ++i) s = group_->add(s, group_->multiply(omega_bars_[i], lambda[i]));
    return s;
}

K0Elem K0Ring::q_map(const SmallVector& lambda) const { return exp(weight_class(lambda)); }

HermiteBasis K0Ring::torsion_lattice() const {
    std::vector<IntVector> rows;
    for (std::size_t g = 1; g < group_->order(); ++g) {
        IntVector r(group_->order(), Integer(0));
        r[0] = 1;
        r[g] = -1;
        rows.push_back(std::move(r));
    }
    return lattice_sum(hermite_normal_form(std::move(rows), group_->order()), relations_);
}

Integer K0Ring::torsion_order() const { return invariants().torsion_order(); }

Integer K0Ring::annihilator_of(const K0Elem& x) const {
    if (x.ring().get() != this) throw Error("annihilator_of: element of another ring");
    return quotient_.order(x.coeffs());
}

Integer K0Ring::class_dimension_gcd(const FinAbElem& chi) const {
    Integer g = 0;
    for (std::size_t i = 0; i < omega_bars_.size(); ++i)
        if (omega_bars_[i] == chi) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dims_[i].get_mpz_t());
    return g;
}

K0RingPtr build_k0_from_data(const FinAbGroup& group, std::vector<FinAbElem> omegas, std::vector<Integer> dims,
                             std::string label, std::optional<CharacterQuotient> cq) {
    if (omegas.size() != dims.size()) throw Error("build_k0: one dimension per fundamental class required");
    for (auto& w : omegas) w = group.make(w.coords);
    auto g = std::make_shared<const FinAbGroup>(group);
    return K0RingPtr(new K0Ring(std::move(g), std::move(omegas), std::move(dims), std::move(label), std::move(cq)));
}

K0RingPtr build_k0(const CharacterQuotient& cq, std::vector<Integer> dims) {
    std::string label = cq.spec.name() + " " + cq.isogeny.name();
    return build_k0_from_data(cq.group, cq.omega_bars, std::move(dims), std::move(label), cq);
}

K0RingPtr build_k0(const CharacterQuotient& cq) { return build_k0(cq, fundamental_dimensions(RootDatum(cq.spec))); }

std::string to_string(const K0Elem& x) { return to_string(x.rep()); }

RingPresentation presentation(const K0Ring& ring) {
    RingPresentation p;
    const FinAbGroup& g = *ring.group();
    for (std::size_t j = 0; j < g.rank(); ++j) {
        std::vector<std::int64_t> c(g.rank(), 0);
        c[j] = 1;
        p.generators.push_back("y" + std::to_string(j + 1) + " = 1 - e[" + g.format(g.make(c)) + "]");
    }
    for (std::size_t j = 0; j < g.rank(); ++j) {
        std::vector<std::int64_t> c(g.rank(), 0);
        c[j] = g.factors()[j];
        p.relations.push_back("1 - (1-y" + std::to_string(j + 1) + ")^" + std::to_string(c[j]));
    }
    std::map<FinAbElem, Integer> by_class;
    for (const auto& w : ring.omega_bars())
        if (!w.is_zero()) by_class.emplace(w, ring.class_dimension_gcd(w));
    for (const auto& [chi, d] : by_class) p.relations.push_back(d.get_str() + "*(1 - " + monomial(chi) + ")");
    return p;
}

}  // namespace twgamma
