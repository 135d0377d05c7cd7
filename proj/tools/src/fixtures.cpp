// Regression fixtures: every worked example the library is expected to
// reproduce, with the expected values written out by hand.

#include <sstream>

#include "twgamma/cli.hpp"

namespace twgamma::cli {

namespace {

using Check = std::function<std::string()>;  // empty string = pass

std::string expect_eq(const std::string& what, const Integer& got, const Integer& want) {
    if (got == want) return "";
    return what + ": got " + got.get_str() + ", expected " + want.get_str();
}

std::string expect_factors(const std::string& what, const QuotientInvariants& q, std::size_t free_rank,
                           const std::vector<long>& factors) {
    IntVector want(factors.begin(), factors.end());
    if (q.free_rank == free_rank && q.factors == want) return "";
    return what + ": got " + to_string(q);
}

int v2(std::int64_t n) {
    int k = 0;
    while (n % 2 == 0) n /= 2, ++k;
    return k;
}

// I + <k * (1 - e^sigma)> as a lattice.
HermiteBasis multiple_of_y(const K0Ring& ring, const FinAbElem& sigma, const Integer& k) {
    std::vector<IntVector> rows = ring.relations().rows();
    rows.push_back((k * ring.difference(sigma)).coeffs());
    return hermite_normal_form(std::move(rows), ring.group()->order());
}

TitsIndexAssignment single_index(const K0Ring& ring, const FinAbElem& chi, std::int64_t v) {
    TitsIndexAssignment ind(*ring.group());
    ind.set(chi, v);
    return ind;
}

std::string class_list(const K0Ring& ring) {
    std::string s;
    for (const auto& w : ring.omega_bars()) s += ring.group()->format(w) + " ";
    return s;
}

std::vector<std::pair<std::string, Check>> fixtures(const FixtureOptions& opt) {
    auto ring = [opt](const std::string& g, const std::string& iso) { return build_ring(g, iso, opt); };
    auto filt = [opt](const K0RingPtr& r, const TitsIndexAssignment& ind, int n) {
        FiltrationOptions fo;
        fo.choose = opt.choose;
        return twisted_filtration(r, ind, n, fo);
    };
    auto dims_of = [ring](const std::string& g, const std::string& iso) { return ring(g, iso)->dims(); };

    std::vector<std::pair<std::string, Check>> f;

    f.emplace_back("weyl-dimension-b3-spin", [=] { return expect_eq("dim B3 w3", dims_of("B3", "sc")[2], 8); });
    f.emplace_back("weyl-dimension-e6-w1", [=] { return expect_eq("dim E6 w1", dims_of("E6", "sc")[0], 27); });
    f.emplace_back("weyl-dimension-e7-w7", [=] { return expect_eq("dim E7 w7", dims_of("E7", "sc")[6], 56); });

    f.emplace_back("center-a-series", [] {
        for (int n = 1; n <= 8; ++n) {
            const auto fg = fundamental_group(RootSystemSpec{Series::A, n});
            if (fg.group.factors() != std::vector<std::int64_t>{n + 1}) return "A" + std::to_string(n) + ": wrong group";
            for (int i = 0; i < n; ++i)
                if (fg.omega_bars[static_cast<std::size_t>(i)].coords[0] != i + 1)
                    return "A" + std::to_string(n) + ": wrong class of w" + std::to_string(i + 1);
        }
        return std::string();
    });
    f.emplace_back("center-a-quotient-mu-m", [] {
        for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {5, 6}, {3, 2}, {7, 4}}) {
            const auto cq = character_quotient(RootSystemSpec{Series::A, n}, IsogenySpec::parse("mu:" + std::to_string(m)));
            if (cq.group.order() != static_cast<std::size_t>(m)) return "A" + std::to_string(n) + " mu:" + std::to_string(m) + ": wrong order";
            for (int i = 0; i < n; ++i)
                if (cq.omega_bars[static_cast<std::size_t>(i)].coords[0] != (i + 1) % m) return std::string("wrong class");
        }
        return std::string();
    });
    f.emplace_back("center-e7", [] {
        const auto fg = fundamental_group(RootSystemSpec{Series::E, 7});
        const std::vector<std::int64_t> want{0, 1, 0, 0, 1, 0, 1};
        if (fg.group.factors() != std::vector<std::int64_t>{2}) return std::string("E7: group is not Z/2");
        for (std::size_t i = 0; i < 7; ++i)
            if (fg.omega_bars[i].coords[0] != want[i]) return "E7: wrong class of w" + std::to_string(i + 1);
        return std::string();
    });
    f.emplace_back("center-d4", [] {
        const auto fg = fundamental_group(RootSystemSpec{Series::D, 4});
        const auto& w = fg.omega_bars;
        const auto& g = fg.group;
        if (g.factors() != std::vector<std::int64_t>{2, 2}) return std::string("D4: group is not Z/2 + Z/2");
        if (!w[1].is_zero() || w[2] == w[3] || w[2].is_zero() || w[3].is_zero() || !(w[0] == g.add(w[2], w[3])))
            return "D4: classes " + g.format(w[0]) + " " + g.format(w[1]) + " " + g.format(w[2]) + " " + g.format(w[3]);
        return std::string();
    });
    f.emplace_back("character-group-half-spin", [=] {
        for (int n : {4, 6, 8, 10}) {
            const auto r = ring("D" + std::to_string(n), "hs");
            const auto& w = r->omega_bars();
            if (r->group()->order() != 2) return "D" + std::to_string(n) + " hs: A is not Z/2";
            if (!w[static_cast<std::size_t>(n - 1)].is_zero() || w[static_cast<std::size_t>(n - 2)].is_zero())
                return "D" + std::to_string(n) + " hs: classes " + class_list(*r);
            for (int i = 1; i <= n - 2; ++i)
                if (w[static_cast<std::size_t>(i - 1)].coords[0] != i % 2) return "D" + std::to_string(n) + " hs: classes " + class_list(*r);
        }
        return std::string();
    });
    f.emplace_back("character-group-simply-connected", [=] {
        for (std::string g : {"A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
            const auto r = ring(g, "sc");
            if (r->group()->order() != 1 || r->invariants().free_rank != 1 || !r->invariants().factors.empty())
                return g + " sc: ring is not Z";
        }
        return std::string();
    });

    f.emplace_back("pgl2-ring", [=] { return expect_factors("A1 ad", ring("A1", "ad")->invariants(), 1, {2}); });
    f.emplace_back("e7-adjoint-d", [=] {
        const auto r = ring("E7", "ad");
        return expect_eq("order of y", r->annihilator_of(r->difference(r->group()->make({1}))), 8);
    });
    f.emplace_back("e7-adjoint-reduce", [=] {
        const auto r = ring("E7", "ad");
        const auto y = r->difference(r->group()->make({1}));
        return Integer(9) * y == y ? std::string() : std::string("9y != y");
    });
    f.emplace_back("pgo8-torsion", [=] { return expect_factors("D4 ad", ring("D4", "ad")->invariants(), 1, {8, 8, 8}); });
    f.emplace_back("d-constant-b-series", [=] {
        for (int n = 2; n <= 8; ++n) {
            const auto r = ring("B" + std::to_string(n), "ad");
            const auto s = expect_eq("B" + std::to_string(n), r->annihilator_of(r->difference(r->group()->make({1}))), Integer(1) << n);
            if (!s.empty()) return s;
        }
        return std::string();
    });
    f.emplace_back("d-constant-c-series", [=] {
        for (int n = 2; n <= 6; ++n) {
            Integer g = 2 * n;
            for (int k = 3; k <= 2 * n; k += 2) {
                Integer t = binomial(static_cast<unsigned long>(2 * n), static_cast<unsigned long>(k)) -
                            binomial(static_cast<unsigned long>(2 * n), static_cast<unsigned long>(k - 2));
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
            }
            const auto r = ring("C" + std::to_string(n), "ad");
            const auto s = expect_eq("C" + std::to_string(n), r->annihilator_of(r->difference(r->group()->make({1}))), g);
            if (!s.empty()) return s;
        }
        return std::string();
    });
    f.emplace_back("d-constant-special-orthogonal", [=] {
        for (int n = 4; n <= 8; ++n) {
            const auto r = ring("D" + std::to_string(n), "so");
            const auto s = expect_eq("D" + std::to_string(n) + " so", r->annihilator_of(r->difference(r->group()->make({1}))),
                                     Integer(1) << (n - 1));
            if (!s.empty()) return s;
        }
        return std::string();
    });
    f.emplace_back("d-constant-half-spin", [=] {
        for (int n : {4, 6, 8, 10, 12, 16}) {
            const auto r = ring("D" + std::to_string(n), "hs");
            const auto s = expect_eq("D" + std::to_string(n) + " hs", r->annihilator_of(r->difference(r->group()->make({1}))),
                                     Integer(1) << (v2(n) + 1));
            if (!s.empty()) return s;
        }
        return std::string();
    });
    f.emplace_back("e6-adjoint-dimensions", [=] {
        const auto r = ring("E6", "ad");
        const auto& g = *r->group();
        const auto s = r->omega_bars()[0];
        const auto a = expect_eq("d1", r->class_dimension_gcd(s), 27);
        const auto b = expect_eq("d2", r->class_dimension_gcd(g.add(s, s)), 27);
        return a + b;
    });

    f.emplace_back("basic-factors-power-of-two", [=] {
        const auto r = ring("D16", "hs");
        const auto sigma = r->group()->make({1});
        const auto y = r->difference(sigma);
        for (int iA = 1; iA <= 4; ++iA) {
            const std::int64_t m = std::int64_t{1} << iA;
            const auto fs = basic_factors(*r, {sigma}, single_index(*r, sigma, m), opt.choose);
            std::size_t k = 0;
            for (std::int64_t n = 1; n <= m; ++n) {
                const K0Elem want = Integer(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(n)) *
                                            (Integer(1) << (n - 1))) * y;
                if (want.is_zero()) continue;
                if (k >= fs.size() || fs[k].degree != n || !(fs[k].value == want))
                    return "i_A = " + std::to_string(iA) + ": wrong factor of degree " + std::to_string(n);
                ++k;
            }
            if (k != fs.size()) return "i_A = " + std::to_string(iA) + ": extra factors";
        }
        return std::string();
    });
    f.emplace_back("twisted-table-i1", [=] {
        const auto r = ring("E7", "ad");
        const auto sigma = r->group()->make({1});
        const auto res = filt(r, single_index(*r, sigma, 2), 5);
        const std::vector<long> want{2, 2, 8, 8, 32};  // <2^{2j-1} y> in degrees 2j-1, 2j
        for (int i = 1; i <= 5; ++i)
            if (!(res.piece(i).lattice == multiple_of_y(*r, sigma, want[static_cast<std::size_t>(i - 1)])))
                return "piece " + std::to_string(i) + " differs";
        return std::string();
    });
    f.emplace_back("strongly-inner-is-split", [=] {
        for (auto [g, iso] : std::vector<std::pair<std::string, std::string>>{{"E7", "ad"}, {"D4", "ad"}, {"A3", "ad"}, {"E6", "ad"}}) {
            const auto r = ring(g, iso);
            const auto a = filt(r, TitsIndexAssignment(*r->group()), 4);
            const auto b = split_filtration(r, 4);
            for (int i = 1; i <= 4; ++i)
                if (!(a.piece(i) == b.piece(i))) return g + " " + iso + ": piece " + std::to_string(i) + " differs";
        }
        return std::string();
    });
    f.emplace_back("simply-connected-filtration-zero", [=] {
        const auto r = ring("E8", "sc");
        const auto res = filt(r, TitsIndexAssignment(*r->group()), 4);
        for (int i = 1; i <= 4; ++i)
            if (!res.piece(i).invariants().factors.empty() || res.piece(i).invariants().free_rank) return std::string("nonzero piece");
        return std::string();
    });
    f.emplace_back("graded-e7-i1", [=] {
        const auto r = ring("E7", "ad");
        return expect_factors("E7 gamma^2", filt(r, single_index(*r, r->group()->make({1}), 2), 3).graded[2], 0, {4});
    });
    f.emplace_back("graded-hspin16-i3", [=] {
        const auto r = ring("D8", "hs");
        return expect_factors("D8 hs gamma^2", filt(r, single_index(*r, r->group()->make({1}), 8), 3).graded[2], 0, {2});
    });
    f.emplace_back("graded-pgo8-442", [=] {
        const auto r = ring("D4", "ad");
        const auto& g = *r->group();
        TitsIndexAssignment ind(g);
        ind.set(g.make({1, 0}), 4);
        ind.set(g.make({0, 1}), 4);
        ind.set(g.make({1, 1}), 2);
        const auto res = filt(r, ind, 3);
        return expect_factors("PGO8 gamma^2", res.graded[2], 0, {2, 2, 4}) +
               expect_factors("PGO8 piece 2", res.piece(2).invariants(), 0, {2, 2, 4});
    });

    f.emplace_back("hspin16-witness", [=] {
        const auto r = hspin_witness_check(ring("D8", "hs"), 3);
        return r.status == WitnessStatus::Passed ? std::string() : "status " + to_string(r.status);
    });
    f.emplace_back("hspin16-boundary", [=] {
        const auto r = hspin_witness_check(ring("D8", "hs"), 4);
        return r.status == WitnessStatus::NotApplicable ? std::string() : "status " + to_string(r.status);
    });
    f.emplace_back("hspin24-not-applicable", [=] {
        const auto r = hspin_witness_check(ring("D12", "hs"), 3);
        return r.status == WitnessStatus::NotApplicable ? std::string() : "status " + to_string(r.status);
    });
    f.emplace_back("e7-pushforward-diagonal", [=] {
        const auto r = ring("E7", "ad");
        const auto y = r->difference(r->group()->make({1}));
        IntMatrix a(7, 7);
        a(1, 1) = a(4, 4) = a(6, 6) = 1;
        IntMatrix b(7, 7);
        b(1, 4) = 2;
        std::string s;
        if (!(quadratic_pushforward(*r, a) == Integer(6) * y)) s += "diagonal: q(x) != 6y; ";
        if (!(quadratic_pushforward(*r, b) == Integer(4) * y)) s += "a25 = 2: q(x) != 4y";
        if (e7_coefficient(*r, a) != 3) s += "C != 3";
        return s;
    });
    f.emplace_back("e7-special-cycle-i1", [=] {
        const auto r = e7_special_cycle_check(ring("E7", "ad"), 1);
        if (r.status != WitnessStatus::Passed || !r.nontrivial) return "status " + to_string(r.status);
        return std::string();
    });
    f.emplace_back("e7-special-cycle-c4", [=] {
        IntMatrix a(7, 7);
        a(1, 1) = 4;
        const auto r = e7_special_cycle_check(ring("E7", "ad"), 1, a);
        if (r.status != WitnessStatus::Passed || r.nontrivial || !std::all_of(r.value.begin(), r.value.end(), [](const Integer& x) { return x == 0; }))
            return "status " + to_string(r.status);
        return std::string();
    });
    return f;
}

}  // namespace

ExamplesReport run_examples(const FixtureOptions& opt) {
    ExamplesReport report;
    for (auto& [id, check] : fixtures(opt)) {
        FixtureOutcome o{id, false, ""};
        try {
            o.detail = check();
            o.passed = o.detail.empty();
        } catch (const std::exception& e) {
            o.detail = std::string("exception: ") + e.what();
        }
        report.fixtures.push_back(std::move(o));
    }
    return report;
}

}  // namespace twgamma::cli
