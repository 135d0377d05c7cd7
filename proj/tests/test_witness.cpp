#include <random>

#include "doctest.h"
#include "twgamma/witness.hpp"

using namespace twgamma;

namespace {

K0RingPtr ring_of(const std::string& group, const std::string& iso) {
    return build_k0(character_quotient(RootSystemSpec::parse(group), IsogenySpec::parse(iso)));
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
    return a;
}

SmallVector unit(int n, int i) {
    SmallVector v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

// sum over i >= j of m_ij c_i c_j, written out directly
K0Elem lower_reading(const K0Ring& r, const IntMatrix& m) {
    K0Elem out = r.zero();
    for (int i = 0; i < r.rank(); ++i)
        for (int j = 0; j <= i; ++j) {
            const Integer& c = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (c != 0) out = out + c * (chern_root(r, unit(r.rank(), i)) * chern_root(r, unit(r.rank(), j)));
        }
    return out;
}

unsigned v2(unsigned n) { return static_cast<unsigned>(__builtin_ctz(n)); }

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("chern roots") {
    const auto e7 = ring_of("E7", "ad");
    const auto y = e7->difference(e7->group()->make({1}));
    CHECK(chern_root(*e7, unit(7, 6)) == y);
    CHECK(chern_root(*e7, unit(7, 0)).is_zero());
    SmallVector w25 = unit(7, 1);
    w25[4] = 1;
    CHECK(chern_root(*e7, w25).is_zero());
    const auto sc = ring_of("E7", "sc");
    for (int i = 0; i < 7; ++i) CHECK(chern_root(*sc, unit(7, i)).is_zero());
    // Z/3: c1(omega_1) = 1 - e^{-omega_1}
    const auto a2 = ring_of("A2", "ad");
    CHECK(chern_root(*a2, unit(2, 0)) == a2->difference(a2->group()->make({2})));
}

TEST_CASE("quadratic pushforward examples") {
    const auto e7 = ring_of("E7", "ad");
    const auto y = e7->difference(e7->group()->make({1}));
    CHECK(quadratic_pushforward(*e7, IntMatrix(7, 7)).is_zero());

    IntMatrix diag(7, 7);
    diag(1, 1) = diag(4, 4) = diag(6, 6) = 1;
    CHECK(e7_coefficient(*e7, diag) == 3);
    CHECK(quadratic_pushforward(*e7, diag) == Integer(6) * y);

    IntMatrix a25(7, 7);
    a25(1, 4) = 2;
    CHECK(e7_coefficient(*e7, a25) == 2);
    CHECK(quadratic_pushforward(*e7, a25) == Integer(4) * y);

    CHECK(e7_coefficient(*e7, e7_default_coefficients()) == 6);
    CHECK_THROWS_AS(quadratic_pushforward(*e7, IntMatrix(6, 6)), Error);
}

TEST_CASE("quadratic pushforward is bilinear and symmetric") {
    std::mt19937 rng(23);
    for (const auto& [g, iso] : std::vector<std::pair<std::string, std::string>>{
             {"E7", "ad"}, {"D4", "ad"}, {"A3", "ad"}, {"B3", "ad"}, {"E6", "ad"}}) {
        const auto r = ring_of(g, iso);
        const auto n = static_cast<std::size_t>(r->rank());
        for (int t = 0; t < 10; ++t) {
            const auto a = random_matrix(rng, n, 9), b = random_matrix(rng, n, 9);
            IntMatrix sum(n, n), triple(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    sum(i, j) = a(i, j) + b(i, j);
                    triple(i, j) = 3 * a(i, j);
                }
            CHECK(quadratic_pushforward(*r, sum) == quadratic_pushforward(*r, a) + quadratic_pushforward(*r, b));
            CHECK(quadratic_pushforward(*r, triple) == Integer(3) * quadratic_pushforward(*r, a));
            CHECK(quadratic_pushforward(*r, a) == lower_reading(*r, a.transposed()));
        }
    }
}

TEST_CASE("E7 coefficient law on random matrices") {
    std::mt19937 rng(29);
    const auto e7 = ring_of("E7", "ad");
    const auto y = e7->difference(e7->group()->make({1}));
    for (int t = 0; t < 100; ++t) {
        const auto a = random_matrix(rng, 7, 20);
        const Integer C = a(1, 4) + a(1, 6) + a(4, 6) + a(1, 1) + a(4, 4) + a(6, 6);
        CHECK(e7_coefficient(*e7, a) == C);
        CHECK(quadratic_pushforward(*e7, a) == Integer(2 * C) * y);
    }
}

TEST_CASE("pushforwards of compatible coefficients land in the second piece") {
    std::mt19937 rng(31);
    for (const auto& [g, iso] : std::vector<std::pair<std::string, std::string>>{
             {"E7", "ad"}, {"B3", "ad"}, {"C4", "ad"}, {"D6", "hs"}, {"D8", "hs"}, {"D5", "so"}}) {
        const auto r = ring_of(g, iso);
        const auto sigma = r->group()->make({1});
        for (int i_A = 1; i_A <= 3; ++i_A) {
            TitsIndexAssignment ind(*r->group());
            ind.set(sigma, std::int64_t(1) << i_A);
            const auto filt = twisted_filtration(r, ind, 2);
            for (int t = 0; t < 5; ++t) {
                auto a = random_matrix(rng, static_cast<std::size_t>(r->rank()), 5);
                for (std::size_t i = 0; i < a.rows(); ++i)
                    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= Integer(1) << (i_A - 1);
                INFO(g << " " << iso << " i_A = " << i_A);
                CHECK(filt.piece(2).contains(quadratic_pushforward(*r, a)));
            }
        }
    }
}

TEST_CASE("E7 special cycle") {
    const auto e7 = ring_of("E7", "ad");
    const auto y = e7->difference(e7->group()->make({1}));

    const auto r1 = e7_special_cycle_check(e7, 1);
    CHECK(r1.status == WitnessStatus::Passed);
    CHECK(r1.coefficient == 6);
    CHECK(r1.nontrivial);
    CHECK(r1.predicted);
    CHECK(r1.d == 8);
    CHECK(e7->reduce(r1.value) == Integer(4) * y);
    CHECK(r1.verdict());

    IntMatrix c4(7, 7);
    c4(1, 1) = 4;
    for (int i_A = 1; i_A <= 3; ++i_A) {
        const auto r = e7_special_cycle_check(e7, i_A, c4);
        CHECK(r.status == WitnessStatus::Passed);
        CHECK(r.value_order == 1);
        CHECK(!r.nontrivial);
        CHECK(!r.predicted);
    }

    // at i_A = 3 the second piece is zero modulo 8y, so 12 y is not in it
    const auto r3 = e7_special_cycle_check(e7, 3);
    CHECK(r3.status == WitnessStatus::NotApplicable);
    CHECK(!r3.admissible);

    const auto r4 = e7_special_cycle_check(e7, 4);
    CHECK(!r4.trace.empty());
    CHECK(r4.trace[0].find("i_A > 3") != std::string::npos);

    CHECK_THROWS_AS(e7_special_cycle_check(ring_of("E6", "ad"), 1), Error);
    CHECK_THROWS_AS(e7_special_cycle_check(ring_of("E7", "sc"), 1), Error);
    CHECK_THROWS_AS(e7_special_cycle_check(e7, -1), Error);
}

TEST_CASE("E7 biconditional over random coefficients") {
    std::mt19937 rng(37);
    const auto e7 = ring_of("E7", "ad");
    int admissible = 0;
    for (int i_A = 1; i_A <= 3; ++i_A)
        for (int t = 0; t < 40; ++t) {
            const auto a = random_matrix(rng, 7, 6);
            const auto r = e7_special_cycle_check(e7, i_A, a);
            CHECK(r.checks.front().passed);
            if (r.status == WitnessStatus::NotApplicable) continue;
            ++admissible;
            CHECK(r.status == WitnessStatus::Passed);
            CHECK(r.nontrivial == r.predicted);
        }
    CHECK(admissible > 40);
}

TEST_CASE("half-spin witness") {
    const auto d8 = ring_of("D8", "hs");
    const auto r = hspin_witness_check(d8, 3);
    CHECK(r.status == WitnessStatus::Passed);
    CHECK(r.checks.size() == 5);
    CHECK(r.d == 16);
    const auto y = d8->difference(d8->group()->make({1}));
    CHECK(d8->reduce(r.value) == Integer(8) * y);
    CHECK(r.value_order == 2);

    CHECK(hspin_witness_check(d8, 4).status == WitnessStatus::NotApplicable);
    CHECK(hspin_witness_check(d8, 2).status == WitnessStatus::NotApplicable);
    CHECK(hspin_witness_check(ring_of("D12", "hs"), 3).status == WitnessStatus::NotApplicable);
    CHECK(hspin_witness_check(ring_of("D4", "ad"), 3).status == WitnessStatus::NotApplicable);
    CHECK_THROWS_AS(hspin_witness_check(d8, -1), Error);

    for (unsigned n = 4; n <= 32; n += 2) {
        const auto ring = ring_of("D" + std::to_string(n), "hs");
        for (unsigned i_A = 3; i_A <= v2(n); ++i_A) {
            INFO("n = " << n << ", i_A = " << i_A);
            const auto w = hspin_witness_check(ring, static_cast<int>(i_A));
            CHECK(w.status == WitnessStatus::Passed);
            for (const auto& c : w.checks) CHECK(c.passed);
            CHECK(ring->reduce(w.value) == Integer(Integer(1) << i_A) * ring->difference(ring->group()->make({1})));
        }
        CHECK(hspin_witness_check(ring, static_cast<int>(v2(n) + 1)).status == WitnessStatus::NotApplicable);
    }
}

TEST_CASE("status names") {
    for (auto s : {WitnessStatus::Passed, WitnessStatus::Failed, WitnessStatus::NotApplicable})
        CHECK(parse_witness_status(to_string(s)) == s);
    CHECK(to_string(WitnessStatus::NotApplicable) == "not-applicable");
    CHECK_THROWS_AS(parse_witness_status("maybe"), Error);
}

}
