#include "twgamma/group_ring.hpp"

#include <algorithm>
#include <sstream>

namespace twgamma {

GroupRingElem::GroupRingElem(GroupPtr group) : group_(std::move(group)) {
    if (!group_) throw Error("GroupRingElem: null group");
    coeffs_.assign(group_->order(), Integer(0));
}

GroupRingElem::GroupRingElem(GroupPtr group, IntVector coeffs) : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (!group_) throw Error("GroupRingElem: null group");
    if (coeffs_.size() != group_->order()) throw Error("GroupRingElem: coefficient vector length must equal |A|");
}

GroupRingElem GroupRingElem::one(GroupPtr group) { return constant(std::move(group), Integer(1)); }

GroupRingElem GroupRingElem::constant(GroupPtr group, const Integer& c) {
    GroupRingElem e(std::move(group));
    e.coeffs_[0] = c;
    return e;
}

GroupRingElem GroupRingElem::basis(GroupPtr group, const FinAbElem& g) {
    GroupRingElem e(std::move(group));
    e.coeffs_[e.group_->index_of(g)] = 1;
    return e;
}

const Integer& GroupRingElem::coeff(const FinAbElem& g) const { return coeffs_[group_->index_of(g)]; }

bool GroupRingElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& x) { return x == 0; });
}

void GroupRingElem::require_same_group(const GroupRingElem& other) const {
    if (!group_ || !other.group_) throw Error("group ring element without owner group");
    if (group_ != other.group_ && !(*group_ == *other.group_)) throw Error("group ring elements over different groups");
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& other) {
    require_same_group(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& other) {
    require_same_group(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

GroupRingElem& GroupRingElem::operator*=(const Integer& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    a.require_same_group(b);
    const FinAbGroup& g = *a.group_;
    const std::size_t n = g.order();
    GroupRingElem c(a.group_);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            c.coeffs_[g.sum_index(i, j)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return c;
}

bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    a.require_same_group(b);
    return a.coeffs_ == b.coeffs_;
}

GroupRingElem add(const GroupRingElem& a, const GroupRingElem& b) { return a + b; }
GroupRingElem negate(const GroupRingElem& a) { return -a; }
GroupRingElem scalar_multiply(const GroupRingElem& a, const Integer& k) { return k * a; }
GroupRingElem multiply(const GroupRingElem& a, const GroupRingElem& b) { return a * b; }

GroupRingElem power(const GroupRingElem& a, unsigned n) {
    GroupRingElem r = GroupRingElem::one(a.group());
    for (unsigned i = 0; i < n; ++i) r = r * a;
    return r;
}

GroupRingElem translate(const GroupRingElem& a, const FinAbElem& g) {
    const FinAbGroup& grp = *a.group();
    IntVector out(a.coeffs().size(), Integer(0));
    const std::size_t shift = grp.index_of(g);
    for (std::size_t i = 0; i < out.size(); ++i) out[grp.sum_index(i, shift)] = a.coeffs()[i];
    return GroupRingElem(a.group(), std::move(out));
}

Integer augmentation(const GroupRingElem& a) {
    Integer s = 0;
    for (const auto& c : a.coeffs()) s += c;
    return s;
}

GroupRingElem difference_power(const GroupPtr& group, const FinAbElem& chi, unsigned n) {
    GroupRingElem y = GroupRingElem::one(group) - GroupRingElem::basis(group, chi);
    return power(y, n);
}

std::string to_string(const GroupRingElem& a) {
    std::ostringstream os;
    bool first = true;
    const FinAbGroup& g = *a.group();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Integer& c = a.coeffs()[i];
        if (c == 0) continue;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "e[" << g.format(g.element(i)) << "]";
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace twgamma
