#include "twgamma/finite_abelian.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace twgamma {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t to_i64(const Integer& x) {
    if (!x.fits_slong_p()) throw Error("group coordinate does not fit in 64 bits");
    return x.get_si();
}

}  // namespace

bool FinAbElem::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

FinAbGroup::FinAbGroup(std::vector<std::int64_t> invariant_factors) : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw Error("invariant factors must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0) throw Error("invariant factors must form a divisor chain");
        order_ *= static_cast<std::size_t>(factors_[i]);
    }
    if (order_ <= 1024) {
        sum_table_.resize(order_ * order_);
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = 0; j < order_; ++j)
                sum_table_[i * order_ + j] = static_cast<std::uint32_t>(index_of(add(element(i), element(j))));
    }
}

std::size_t FinAbGroup::sum_index(std::size_t i, std::size_t j) const {
    if (!sum_table_.empty()) return sum_table_[i * order_ + j];
    return index_of(add(element(i), element(j)));
}

void FinAbGroup::check(const FinAbElem& a) const {
    if (a.coords.size() != factors_.size()) throw Error("group element has wrong number of coordinates");
}

FinAbElem FinAbGroup::zero() const { return FinAbElem{std::vector<std::int64_t>(factors_.size(), 0)}; }

FinAbElem FinAbGroup::make(std::vector<std::int64_t> coords) const {
    FinAbElem e{std::move(coords)};
    check(e);
    for (std::size_t i = 0; i < factors_.size(); ++i) e.coords[i] = mod(e.coords[i], factors_[i]);
    return e;
}

FinAbElem FinAbGroup::add(const FinAbElem& a, const FinAbElem& b) const {
    check(a);
    check(b);
    FinAbElem c = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) c.coords[i] = mod(a.coords[i] + b.coords[i], factors_[i]);
    return c;
}

FinAbElem FinAbGroup::negate(const FinAbElem& a) const { return multiply(a, -1); }

FinAbElem FinAbGroup::multiply(const FinAbElem& a, std::int64_t k) const {
    check(a);
    FinAbElem c = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) c.coords[i] = mod(mod(k, factors_[i]) * a.coords[i], factors_[i]);
    return c;
}

std::int64_t FinAbGroup::element_order(const FinAbElem& a) const {
    check(a);
    std::int64_t o = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::int64_t c = mod(a.coords[i], factors_[i]);
        std::int64_t oi = factors_[i] / std::gcd(c, factors_[i]);
        o = std::lcm(o, oi);
    }
    return o;
}

std::size_t FinAbGroup::index_of(const FinAbElem& a) const {
    check(a);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(mod(a.coords[i], factors_[i]));
    return idx;
}

FinAbElem FinAbGroup::element(std::size_t index) const {
    if (index >= order_) throw Error("group element index out of range");
    FinAbElem e = zero();
    for (std::size_t i = factors_.size(); i-- > 0;) {
        auto f = static_cast<std::size_t>(factors_[i]);
        e.coords[i] = static_cast<std::int64_t>(index % f);
        index /= f;
    }
    return e;
}

std::vector<FinAbElem> FinAbGroup::elements() const {
    std::vector<FinAbElem> out;
    out.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) out.push_back(element(i));
    return out;
}

std::vector<FinAbElem> FinAbGroup::span(const std::vector<FinAbElem>& generators) const {
    std::set<FinAbElem> seen{zero()};
    std::vector<FinAbElem> frontier{zero()};
    while (!frontier.empty()) {
        std::vector<FinAbElem> next;
        for (const auto& x : frontier)
            for (const auto& g : generators) {
                FinAbElem y = add(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::string FinAbGroup::format(const FinAbElem& a) const {
    check(a);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.coords.size(); ++i) os << (i ? "," : "") << a.coords[i];
    os << ')';
    return os.str();
}

FinAbElem FinAbGroup::parse(const std::string& text) const {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw Error("group element must look like (c1,...,ck): '" + text + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<std::int64_t> coords;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                std::size_t used = 0;
                coords.push_back(std::stoll(part, &used));
                if (used != part.size()) throw Error("");
            } catch (const std::exception&) {
                throw Error("bad coordinate '" + part + "' in group element '" + text + "'");
            }
        }
    }
    if (coords.size() != factors_.size())
        throw Error("group element '" + text + "' needs " + std::to_string(factors_.size()) + " coordinates");
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] < 0 || coords[i] >= factors_[i])
            throw Error("coordinate out of range in group element '" + text + "'");
    return FinAbElem{std::move(coords)};
}

std::string to_string(const FinAbGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < g.factors().size(); ++i) os << (i ? " + " : "") << "Z/" << g.factors()[i];
    return os.str();
}

Cokernel finite_cokernel(const IntMatrix& relations) {
    const std::size_t n = relations.cols();
    IntMatrix V = IntMatrix::identity(n);
    IntVector moduli(n, Integer(0));
    if (relations.rows() > 0 && n > 0) {
        SmithDecomposition snf = smith_normal_form(relations);
        V = snf.V;
        auto diag = snf.diagonal();
        for (std::size_t j = 0; j < diag.size(); ++j) moduli[j] = diag[j];
    }
    std::vector<std::size_t> kept;
    std::vector<std::int64_t> factors;
    for (std::size_t j = 0; j < n; ++j) {
        if (moduli[j] == 0) throw Error("finite_cokernel: quotient is infinite");
        if (moduli[j] == 1) continue;
        kept.push_back(j);
        factors.push_back(to_i64(moduli[j]));
    }
    Cokernel out{FinAbGroup(factors), {}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> coords;
        for (std::size_t j : kept) {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), V(i, j).get_mpz_t(), moduli[j].get_mpz_t());
            coords.push_back(to_i64(r));
        }
        out.basis_images.push_back(out.group.make(std::move(coords)));
    }
    return out;
}

QuotientMap quotient_group(const FinAbGroup& source, const std::vector<FinAbElem>& generators) {
    const std::size_t k = source.rank();
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < k; ++i) {
        IntVector r(k, Integer(0));
        r[i] = static_cast<long>(source.factors()[i]);
        rows.push_back(std::move(r));
    }
    for (const auto& g : generators) {
        FinAbElem h = source.make(g.coords);
        IntVector r;
        for (auto c : h.coords) r.emplace_back(static_cast<long>(c));
        rows.push_back(std::move(r));
    }
    QuotientMap out;
    if (k == 0) {
        out.images.push_back(FinAbElem{});
        return out;
    }
    Cokernel ck = finite_cokernel(IntMatrix::from_rows(rows, k));
    out.target = ck.group;
    for (const auto& x : source.elements()) {
        FinAbElem y = out.target.zero();
        for (std::size_t i = 0; i < k; ++i) y = out.target.add(y, out.target.multiply(ck.basis_images[i], x.coords[i]));
        out.images.push_back(std::move(y));
    }
    return out;
}

}  // namespace twgamma
