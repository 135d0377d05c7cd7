#include "twgamma/gamma_filtration.hpp"

#include <algorithm>
#include <set>

namespace twgamma {

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::vector<IntVector> rows_of(const HermiteBasis& b) { return b.rows(); }

void append(std::vector<IntVector>& dst, const std::vector<IntVector>& src) { dst.insert(dst.end(), src.begin(), src.end()); }

HermiteBasis translation_closure(const K0Ring& ring, const HermiteBasis& b) {
    std::vector<IntVector> rows = b.rows();
    const GroupPtr& g = ring.group();
    for (const auto& r : b.rows()) {
        GroupRingElem x(g, r);
        for (std::size_t a = 1; a < g->order(); ++a) rows.push_back(translate(x, g->element(a)).coeffs());
    }
    return hermite_normal_form(std::move(rows), g->order());
}

}  // namespace

void TitsIndexAssignment::set(const FinAbElem& chi, std::int64_t index) { values_[group_.make(chi.coords)] = index; }

std::int64_t TitsIndexAssignment::get(const FinAbElem& chi) const {
    auto it = values_.find(group_.make(chi.coords));
    return it == values_.end() ? 1 : it->second;
}

void TitsIndexAssignment::check() const {
    if (get(group_.zero()) != 1) throw Error("Tits index of the zero class must be 1");
    for (const auto& [chi, v] : values_)
        if (v < 1) throw Error("Tits index of " + group_.format(chi) + " must be a positive integer");
}

std::vector<std::string> TitsIndexAssignment::soft_warnings() const {
    std::vector<std::string> out;
    const auto elems = group_.elements();
    for (const auto& a : elems) {
        const auto ia = get(a);
        const auto neg = group_.negate(a);
        if (a < neg && ia != get(neg))
            out.push_back("ind" + group_.format(a) + " = " + std::to_string(ia) + " differs from ind" +
                          group_.format(neg) + " = " + std::to_string(get(neg)));
        const auto ord = group_.element_order(a);
        for (auto p : prime_factors(ia))
            if (ord % p != 0)
                out.push_back("ind" + group_.format(a) + " = " + std::to_string(ia) + " has prime factor " +
                              std::to_string(p) + " not dividing the order " + std::to_string(ord));
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i; j < elems.size(); ++j) {
            const auto s = group_.add(elems[i], elems[j]);
            const auto prod = get(elems[i]) * get(elems[j]);
            if (prod % get(s) != 0)
                out.push_back("ind" + group_.format(s) + " = " + std::to_string(get(s)) + " does not divide ind" +
                              group_.format(elems[i]) + " * ind" + group_.format(elems[j]) + " = " +
                              std::to_string(prod));
        }
    return out;
}

std::vector<FinAbElem> achievable_classes(const FinAbGroup& group, const std::vector<FinAbElem>& omegas) {
    std::set<FinAbElem> sums{group.zero()};
    for (const auto& w : omegas) {
        std::set<FinAbElem> next = sums;
        for (const auto& s : sums) next.insert(group.add(s, group.make(w.coords)));
        sums = std::move(next);
    }
    return {sums.begin(), sums.end()};
}

std::vector<FinAbElem> achievable_classes(const CharacterQuotient& cq) { return achievable_classes(cq.group, cq.omega_bars); }
std::vector<FinAbElem> achievable_classes(const K0Ring& ring) { return achievable_classes(*ring.group(), ring.omega_bars()); }

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<BasicFactor> basic_factors(const K0Ring& ring, const std::vector<FinAbElem>& classes,
                                       const TitsIndexAssignment& ind, const BinomialFn& choose) {
    std::vector<BasicFactor> out;
    std::set<FinAbElem> seen;
    for (const auto& c : classes) {
        const FinAbElem chi = ring.group()->make(c.coords);
        if (chi.is_zero() || !seen.insert(chi).second) continue;
        const auto m = ind.get(chi);
        const K0Elem y = ring.difference(chi);
        K0Elem yn = ring.one();
        for (std::int64_t n = 1; n <= m; ++n) {
            yn = yn * y;
            Integer coeff = choose(static_cast<unsigned long>(m), static_cast<unsigned long>(n));
            K0Elem v = coeff * yn;
            if (v.is_zero()) continue;
            out.push_back({chi, static_cast<unsigned>(n), coeff, v});
        }
    }
    return out;
}

std::vector<K0Elem> Submodule::generators() const {
    std::vector<K0Elem> out;
    for (const auto& r : lattice.rows()) {
        K0Elem x = ring->reduce(r);
        if (!x.is_zero()) out.push_back(x);
    }
    return out;
}

QuotientInvariants Submodule::invariants() const { return LatticeQuotient(lattice, ring->relations()).invariants(); }

const Submodule& FiltrationResult::piece(int i) const {
    if (i < 0 || i > max_degree) throw Error("filtration piece index out of range");
    return pieces[static_cast<std::size_t>(i)];
}

FiltrationResult twisted_filtration(const K0RingPtr& ring, const TitsIndexAssignment& ind, int max_degree,
                                    const FiltrationOptions& options) {
    if (max_degree < 1) throw Error("max degree must be at least 1");
    if (!(ind.group() == *ring->group())) throw Error("index assignment is over a different group");
    ind.check();

    FiltrationResult res;
    res.ring = ring;
    res.assignment = ind;
    res.max_degree = max_degree;
    res.warnings = ind.soft_warnings();
    if (const auto& cq = ring->character_quotient(); cq && cq->spec.series == Series::E && cq->spec.rank == 7)
        for (const auto& [chi, v] : ind.explicit_values())
            if (v > 8) res.warnings.push_back("E7: ind" + ring->group()->format(chi) + " exceeds 8 (i_A > 3)");

    const std::vector<FinAbElem> achievable = achievable_classes(*ring);
    res.classes = options.classes ? *options.classes : achievable;
    res.factors = basic_factors(*ring, res.classes, ind, options.choose);
    res.diagnostics.factor_count = res.factors.size();

    const std::size_t width = ring->group()->order();
    const std::size_t N = static_cast<std::size_t>(max_degree);
    const HermiteBasis& I = ring->relations();

    std::vector<HermiteBasis> P(N + 1, I);
    for (std::size_t i = 1; i <= N; ++i) {
        std::vector<IntVector> rows = rows_of(I);
        for (const auto& f : res.factors)
            if (f.degree >= i) rows.push_back(f.value.coeffs());
        P[i] = hermite_normal_form(std::move(rows), width);
        if (options.ideal_mode) P[i] = translation_closure(*ring, P[i]);
    }

    for (;;) {
        ++res.diagnostics.sweeps;
        bool changed = false;
        for (std::size_t i = 1; i <= N; ++i) {
            std::vector<IntVector> rows = rows_of(P[i]);
            for (const auto& f : res.factors) {
                const std::size_t src = i > f.degree ? i - f.degree : 1;
                for (const auto& r : P[src].rows()) rows.push_back(ring->reduce(f.value.rep() * GroupRingElem(ring->group(), r)).coeffs());
            }
            HermiteBasis h = hermite_normal_form(std::move(rows), width);
            if (options.ideal_mode) h = translation_closure(*ring, h);
            if (!(h == P[i])) {
                P[i] = std::move(h);
                changed = true;
            }
        }
        if (!changed) break;
    }
    res.diagnostics.stabilized = true;

    std::vector<IntVector> rows0 = rows_of(I);
    for (const auto& chi : achievable) rows0.push_back((Integer(ind.get(chi)) * GroupRingElem::basis(ring->group(), chi)).coeffs());
    append(rows0, N >= 1 ? P[1].rows() : std::vector<IntVector>{});
    P[0] = hermite_normal_form(std::move(rows0), width);

    for (std::size_t i = 0; i <= N; ++i) res.pieces.push_back(Submodule{ring, P[i]});
    for (std::size_t i = 0; i < N; ++i) res.graded.push_back(LatticeQuotient(P[i], P[i + 1]).invariants());
    return res;
}

FiltrationResult split_filtration(const K0RingPtr& ring, int max_degree) {
    FiltrationOptions opt;
    std::vector<FinAbElem> all = ring->group()->elements();
    opt.classes = std::vector<FinAbElem>(all.begin() + 1, all.end());
    return twisted_filtration(ring, TitsIndexAssignment(*ring->group()), max_degree, opt);
}

QuotientInvariants graded_quotient(const FiltrationResult& result, int i) {
    if (i < 0 || i >= result.max_degree) throw Error("graded quotient index out of range");
    return result.graded[static_cast<std::size_t>(i)];
}

std::vector<int> mode_discrepancies(const K0RingPtr& ring, const TitsIndexAssignment& ind, int max_degree) {
    FiltrationOptions ideal;
    ideal.ideal_mode = true;
    const auto a = twisted_filtration(ring, ind, max_degree);
    const auto b = twisted_filtration(ring, ind, max_degree, ideal);
    std::vector<int> out;
    for (int i = 1; i <= max_degree; ++i)
        if (!(a.piece(i) == b.piece(i))) out.push_back(i);
    return out;
}

}  // namespace twgamma
