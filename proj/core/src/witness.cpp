#include "twgamma/witness.hpp"

namespace twgamma {

namespace {

Integer pow2(int k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
    return r;
}

int v2(const Integer& x) {
    if (x == 0) return -1;
    return static_cast<int>(mpz_scan1(x.get_mpz_t(), 0));
}

HermiteBasis full_lattice(std::size_t n) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector r(n, Integer(0));
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    return hermite_normal_form(std::move(rows), n);
}

void add_check(WitnessReport& r, std::string name, bool ok, std::string detail) {
    r.trace.push_back("[" + std::string(ok ? "ok" : "FAIL") + "] " + name + ": " + detail);
    r.checks.push_back({std::move(name), ok, std::move(detail)});
}

void finish(WitnessReport& r) {
    bool all = true;
    for (const auto& c : r.checks) all = all && c.passed;
    r.status = all ? WitnessStatus::Passed : WitnessStatus::Failed;
}

std::optional<FinAbElem> cyclic_two_generator(const K0Ring& ring) {
    const FinAbGroup& g = *ring.group();
    if (g.factors() != std::vector<std::int64_t>{2}) return std::nullopt;
    return g.make({1});
}

TitsIndexAssignment sigma_assignment(const K0Ring& ring, const FinAbElem& sigma, int i_A) {
    TitsIndexAssignment ind(*ring.group());
    ind.set(sigma, std::int64_t{1} << i_A);
    return ind;
}

}  // namespace

std::string to_string(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::Passed: return "passed";
        case WitnessStatus::Failed: return "failed";
        case WitnessStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

WitnessStatus parse_witness_status(const std::string& text) {
    if (text == "passed") return WitnessStatus::Passed;
    if (text == "failed") return WitnessStatus::Failed;
    if (text == "not-applicable") return WitnessStatus::NotApplicable;
    throw Error("unknown witness status '" + text + "'");
}

K0Elem chern_root(const K0Ring& ring, const SmallVector& lambda) {
    return ring.difference(ring.group()->negate(ring.weight_class(lambda)));
}

WitnessReport hspin_witness_check(const K0RingPtr& ring, int i_A) {
    WitnessReport r;
    r.kind = "hspin";
    r.group = ring->label();
    r.i_A = i_A;
    if (i_A < 0 || i_A > 62) throw Error("i_A out of range");
    r.index = pow2(i_A);

    const auto sigma = cyclic_two_generator(*ring);
    if (!sigma) {
        r.trace.push_back("not applicable: the character group is not Z/2");
        return r;
    }
    const K0Elem y = ring->difference(*sigma);
    r.d = ring->annihilator_of(y);
    r.trace.push_back("d = order of y = " + r.d.get_str() + ", v2(d) = " + std::to_string(v2(r.d)));
    if (!(v2(r.d) > i_A && i_A >= 3)) {
        r.trace.push_back("not applicable: needs v2(d) > i_A >= 3");
        return r;
    }

    const auto filt = twisted_filtration(ring, sigma_assignment(*ring, *sigma, i_A), 3);
    const Submodule& P2 = filt.piece(2);
    const Submodule& P3 = filt.piece(3);

    std::size_t k = 0;
    while (!(ring->omega_bars()[k] == *sigma)) ++k;
    SmallVector lambda(static_cast<std::size_t>(ring->rank()), 0);
    lambda[k] = 1;
    const K0Elem c1 = chern_root(*ring, lambda);
    const K0Elem c1_3 = c1 * c1 * c1;
    const K0Elem eta = Integer(4) * c1_3 - c1_3 * c1;
    r.trace.push_back("c1 = c1(omega_" + std::to_string(k + 1) + ") = " + to_string(c1));
    r.trace.push_back("eta = 4 c1^3 - c1^4 = " + to_string(eta));

    const K0Elem value = pow2(i_A - 3) * eta;
    const K0Elem doubled = pow2(i_A - 2) * eta;
    r.value = value.coeffs();
    r.value_text = to_string(value);
    r.value_order = ring->annihilator_of(value);

    const K0Elem expected = r.index * y;
    add_check(r, "value", value == expected,
              "2^(i_A-3) eta = " + to_string(value) + ", 2^i_A y = " + to_string(expected));
    add_check(r, "in-second-piece", P2.contains(value), "value lies in piece 2");
    add_check(r, "not-in-third-piece", !P3.contains(value), "value is outside piece 3");
    add_check(r, "doubled-in-third-piece", P3.contains(doubled), "2^(i_A-2) eta = " + to_string(doubled));
    const Integer ord = LatticeQuotient(full_lattice(ring->group()->order()), P3.lattice).order(value.coeffs());
    add_check(r, "order-two", ord == 2, "order modulo piece 3 = " + ord.get_str());
    finish(r);
    return r;
}

K0Elem quadratic_pushforward(const K0Ring& ring, const IntMatrix& a) {
    const auto n = static_cast<std::size_t>(ring.rank());
    if (a.rows() != n || a.cols() != n) throw Error("coefficient matrix must be rank x rank");
    std::vector<K0Elem> c;
    for (std::size_t i = 0; i < n; ++i) {
        SmallVector e(n, 0);
        e[i] = 1;
        c.push_back(chern_root(ring, e));
    }
    K0Elem x = ring.zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (a(i, j) != 0) x = x + a(i, j) * (c[i] * c[j]);
    return x;
}

Integer e7_coefficient(const K0Ring& ring, const IntMatrix& a) {
    const auto sigma = cyclic_two_generator(ring);
    const auto n = static_cast<std::size_t>(ring.rank());
    if (a.rows() != n || a.cols() != n) throw Error("coefficient matrix must be rank x rank");
    Integer C = 0;
    if (!sigma) return C;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (ring.omega_bars()[i] == *sigma && ring.omega_bars()[j] == *sigma) C += a(i, j);
    return C;
}

IntMatrix e7_default_coefficients() {
    IntMatrix a(7, 7);
    for (std::size_t i : {1u, 4u, 6u}) a(i, i) = 2;
    return a;
}

WitnessReport e7_special_cycle_check(const K0RingPtr& ring, int i_A, const std::optional<IntMatrix>& coefficients) {
    const auto& cq = ring->character_quotient();
    if (!cq || !(cq->spec == RootSystemSpec{Series::E, 7}) || ring->group()->order() != 2)
        throw Error("the E7 check needs the adjoint E7 ring");
    if (i_A < 0 || i_A > 62) throw Error("i_A out of range");

    WitnessReport r;
    r.kind = "e7";
    r.group = ring->label();
    r.i_A = i_A;
    r.index = pow2(i_A);
    if (i_A > 3) r.trace.push_back("warning: i_A > 3 is not realizable for E7");

    const FinAbElem sigma = ring->group()->make({1});
    const K0Elem y = ring->difference(sigma);
    r.d = ring->annihilator_of(y);
    const IntMatrix a = coefficients ? *coefficients : e7_default_coefficients();
    r.coefficient = e7_coefficient(*ring, a);
    const K0Elem x = quadratic_pushforward(*ring, a);
    r.value = x.coeffs();
    r.value_text = to_string(x);
    r.value_order = ring->annihilator_of(x);
    r.trace.push_back("C = " + r.coefficient.get_str() + ", q(x) = " + r.value_text);

    const K0Elem expected = Integer(2 * r.coefficient) * y;
    add_check(r, "coefficient-law", x == expected, "q(x) = " + r.value_text + ", 2C y = " + to_string(expected));

    const auto filt = twisted_filtration(ring, sigma_assignment(*ring, sigma, i_A), 3);
    r.admissible = filt.piece(2).contains(x);
    r.nontrivial = r.admissible && !filt.piece(3).contains(x);
    r.predicted = (r.coefficient % 4 != 0) && i_A <= 2;
    r.trace.push_back(std::string("q(x) ") + (r.admissible ? "lies" : "does not lie") + " in piece 2");
    if (!r.admissible) {
        r.trace.push_back("not applicable: q(x) is not in piece 2, so it is trivial there");
        r.status = WitnessStatus::NotApplicable;
        return r;
    }
    add_check(r, "biconditional", r.nontrivial == r.predicted,
              std::string("nonzero in graded piece 2: ") + (r.nontrivial ? "yes" : "no") +
                  "; predicted by (4 does not divide C and i_A <= 2): " + (r.predicted ? "yes" : "no"));
    finish(r);
    return r;
}

}  // namespace twgamma
