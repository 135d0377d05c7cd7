#include "twgamma/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace twgamma {

namespace {

char series_letter(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

void set_edge(IntMatrix& c, int i, int j, long cij, long cji) {
    c(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = cij;
    c(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = cji;
}

/// Cyclic groups: the first fundamental class that generates becomes 1.
/// Klein four-groups: the last two independent classes become (1,0), (0,1).
/// Other shapes keep Smith coordinates.
void normalize_coordinates(const FinAbGroup& g, std::vector<FinAbElem>& classes) {
    auto remap = [&](auto&& f) {
        for (auto& x : classes) x = f(x);
    };
    if (g.rank() == 1) {
        const std::int64_t m = g.factors()[0];
        for (const auto& x : classes) {
            if (g.element_order(x) != m) continue;
            // inverse of x.coords[0] modulo m
            std::int64_t inv = 1;
            while ((inv * x.coords[0]) % m != 1) ++inv;
            remap([&](const FinAbElem& y) { return g.multiply(y, inv); });
            return;
        }
    } else if (g.factors() == std::vector<std::int64_t>{2, 2}) {
        for (std::size_t b = classes.size(); b-- > 0;) {
            if (classes[b].is_zero()) continue;
            for (std::size_t a = b; a-- > 0;) {
                if (classes[a].is_zero() || classes[a] == classes[b]) continue;
                const FinAbElem b1 = classes[a], b2 = classes[b];
                remap([&](const FinAbElem& y) {
                    for (std::int64_t s = 0; s < 2; ++s)
                        for (std::int64_t t = 0; t < 2; ++t)
                            if (g.add(g.multiply(b1, s), g.multiply(b2, t)) == y) return g.make({s, t});
                    throw Error("normalize_coordinates: classes do not span the group");
                });
                return;
            }
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// RootSystemSpec

RootSystemSpec RootSystemSpec::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 2) throw Error("root system spec must look like 'E7', got '" + text + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    const std::string letters = "ABCDEFG";
    auto pos = letters.find(letter);
    if (pos == std::string::npos) throw Error("unknown series '" + std::string(1, s[0]) + "'");
    int rank = 0;
    try {
        std::size_t used = 0;
        rank = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1) throw Error("");
    } catch (const std::exception&) {
        throw Error("bad rank in root system spec '" + text + "'");
    }
    RootSystemSpec spec{static_cast<Series>(pos), rank};
    spec.validate();
    return spec;
}

void RootSystemSpec::validate() const {
    bool ok = false;
    switch (series) {
        case Series::A: ok = rank >= 1; break;
        case Series::B: ok = rank >= 2; break;
        case Series::C: ok = rank >= 2; break;
        case Series::D: ok = rank >= 3; break;
        case Series::E: ok = rank >= 6 && rank <= 8; break;
        case Series::F: ok = rank == 4; break;
        case Series::G: ok = rank == 2; break;
    }
    if (!ok) throw Error("invalid rank " + std::to_string(rank) + " for series " + std::string(1, series_letter(series)));
}

std::string RootSystemSpec::name() const { return std::string(1, series_letter(series)) + std::to_string(rank); }

// ---------------------------------------------------------------------------
// Cartan data

IntMatrix cartan_matrix(const RootSystemSpec& spec) {
    spec.validate();
    const int n = spec.rank;
    IntMatrix c(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 2;
    // 0-based node indices below.
    switch (spec.series) {
        case Series::A:
            for (int i = 0; i + 1 < n; ++i) set_edge(c, i, i + 1, -1, -1);
            break;
        case Series::B:
            for (int i = 0; i + 2 < n; ++i) set_edge(c, i, i + 1, -1, -1);
            set_edge(c, n - 2, n - 1, -1, -2);  // alpha_n short
            break;
        case Series::C:
            for (int i = 0; i + 2 < n; ++i) set_edge(c, i, i + 1, -1, -1);
            set_edge(c, n - 2, n - 1, -2, -1);  // alpha_n long
            break;
        case Series::D:
            for (int i = 0; i + 3 < n; ++i) set_edge(c, i, i + 1, -1, -1);
            set_edge(c, n - 3, n - 2, -1, -1);
            set_edge(c, n - 3, n - 1, -1, -1);
            break;
        case Series::E:
            set_edge(c, 0, 2, -1, -1);
            set_edge(c, 1, 3, -1, -1);
            for (int i = 2; i + 1 < n; ++i) set_edge(c, i, i + 1, -1, -1);
            break;
        case Series::F:
            set_edge(c, 0, 1, -1, -1);
            set_edge(c, 1, 2, -1, -2);  // alpha_3 short
            set_edge(c, 2, 3, -1, -1);
            break;
        case Series::G:
            set_edge(c, 0, 1, -3, -1);  // alpha_1 short
            break;
    }
    return c;
}

std::vector<SmallVector> positive_coroots(const RootSystemSpec& spec) {
    const IntMatrix c = cartan_matrix(spec);
    const auto n = static_cast<std::size_t>(spec.rank);
    std::set<SmallVector> seen;
    std::vector<SmallVector> order;
    std::deque<SmallVector> queue;
    for (std::size_t i = 0; i < n; ++i) {
        SmallVector e(n, 0);
        e[i] = 1;
        seen.insert(e);
        order.push_back(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        SmallVector beta = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            // <alpha_i, beta^vee> = sum_j k_j <alpha_i, alpha_j^vee> = sum_j k_j c(j, i)
            std::int64_t pairing = 0;
            for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * c(j, i).get_si();
            if (pairing == 0) continue;
            SmallVector next = beta;
            next[i] -= pairing;
            if (std::any_of(next.begin(), next.end(), [](std::int64_t x) { return x < 0; })) continue;
            if (std::all_of(next.begin(), next.end(), [](std::int64_t x) { return x == 0; })) continue;
            if (seen.insert(next).second) {
                order.push_back(next);
                queue.push_back(std::move(next));
            }
        }
    }
    return order;
}

std::size_t expected_positive_root_count(const RootSystemSpec& spec) {
    const auto n = static_cast<std::size_t>(spec.rank);
    switch (spec.series) {
        case Series::A: return n * (n + 1) / 2;
        case Series::B:
        case Series::C: return n * n;
        case Series::D: return n * (n - 1);
        case Series::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
        case Series::F: return 24;
        case Series::G: return 6;
    }
    return 0;
}

RootDatum::RootDatum(const RootSystemSpec& spec)
    : spec_(spec), cartan_(cartan_matrix(spec)), coroots_(twgamma::positive_coroots(spec)) {
    for (const auto& beta : coroots_) rho_pairings_.push_back(std::accumulate(beta.begin(), beta.end(), std::int64_t{0}));
}

SmallVector RootDatum::simple_root(int j) const {
    SmallVector alpha(static_cast<std::size_t>(rank()));
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = cartan_(i, static_cast<std::size_t>(j)).get_si();
    return alpha;
}

Integer weyl_dimension(const RootDatum& datum, const SmallVector& lambda) {
    if (lambda.size() != static_cast<std::size_t>(datum.rank())) throw Error("weyl_dimension: weight has wrong length");
    if (std::any_of(lambda.begin(), lambda.end(), [](std::int64_t x) { return x < 0; }))
        throw Error("weyl_dimension: weight is not dominant");
    Integer num = 1, den = 1;
    const auto& coroots = datum.positive_coroots();
    for (std::size_t r = 0; r < coroots.size(); ++r) {
        Integer pairing = 0;
        for (std::size_t j = 0; j < lambda.size(); ++j) pairing += Integer(static_cast<long>(coroots[r][j])) * (lambda[j] + 1);
        num *= pairing;
        den *= static_cast<long>(datum.rho_pairings()[r]);
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw Error("weyl_dimension: inexact division");
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Integer weyl_dimension(const RootSystemSpec& spec, const SmallVector& lambda) { return weyl_dimension(RootDatum(spec), lambda); }

std::vector<Integer> fundamental_dimensions(const RootDatum& datum) {
    std::vector<Integer> dims;
    const auto n = static_cast<std::size_t>(datum.rank());
    for (std::size_t i = 0; i < n; ++i) {
        SmallVector w(n, 0);
        w[i] = 1;
        dims.push_back(weyl_dimension(datum, w));
    }
    return dims;
}

std::size_t orbit_size(const RootDatum& datum, int i, int max_rank) {
    const int n = datum.rank();
    if (i < 1 || i > n) throw Error("orbit_size: fundamental index out of range");
    if (n > max_rank) throw Error("orbit_size: rank " + std::to_string(n) + " exceeds cap " + std::to_string(max_rank));
    std::vector<SmallVector> roots;
    for (int j = 0; j < n; ++j) roots.push_back(datum.simple_root(j));

    SmallVector start(static_cast<std::size_t>(n), 0);
    start[static_cast<std::size_t>(i - 1)] = 1;
    std::set<SmallVector> seen{start};
    std::vector<SmallVector> frontier{start};
    while (!frontier.empty()) {
        std::vector<SmallVector> next;
        for (const auto& lambda : frontier)
            for (int j = 0; j < n; ++j) {
                const std::int64_t k = lambda[static_cast<std::size_t>(j)];
                if (k == 0) continue;
                SmallVector mu = lambda;
                for (std::size_t t = 0; t < mu.size(); ++t) mu[t] -= k * roots[static_cast<std::size_t>(j)][t];
                if (seen.insert(mu).second) next.push_back(std::move(mu));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

// ---------------------------------------------------------------------------
// Fundamental group and isogenies

FundamentalGroup fundamental_group(const RootSystemSpec& spec) {
    // Root lattice rows: alpha_j = column j of the Cartan matrix.
    Cokernel ck = finite_cokernel(cartan_matrix(spec).transposed());
    FundamentalGroup out{ck.group, ck.basis_images};
    normalize_coordinates(out.group, out.omega_bars);
    return out;
}

IsogenySpec IsogenySpec::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    IsogenySpec iso;
    if (s == "sc" || s == "simply-connected") {
        iso.kind = Kind::SimplyConnected;
    } else if (s == "ad" || s == "adjoint") {
        iso.kind = Kind::Adjoint;
    } else if (s == "so" || s == "special-orthogonal") {
        iso.kind = Kind::SpecialOrthogonal;
    } else if (s == "hs" || s == "half-spin") {
        iso.kind = Kind::HalfSpin;
    } else if (s.rfind("mu:", 0) == 0) {
        iso.kind = Kind::CyclicQuotient;
        try {
            std::size_t used = 0;
            iso.m = std::stoi(s.substr(3), &used);
            if (used != s.size() - 3) throw Error("");
        } catch (const std::exception&) {
            throw Error("bad isogeny '" + text + "': expected mu:<m>");
        }
        if (iso.m < 1) throw Error("bad isogeny '" + text + "': m must be positive");
    } else if (s.rfind("sub:[", 0) == 0 && s.back() == ']') {
        iso.kind = Kind::Explicit;
        std::string body = s.substr(5, s.size() - 6);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ';')) {
            if (item.empty()) continue;
            if (item.front() == '(' && item.back() == ')') item = item.substr(1, item.size() - 2);
            FinAbElem e;
            std::stringstream cs(item);
            std::string part;
            while (std::getline(cs, part, ',')) {
                try {
                    e.coords.push_back(std::stoll(part));
                } catch (const std::exception&) {
                    throw Error("bad coordinate '" + part + "' in isogeny '" + text + "'");
                }
            }
            iso.generators.push_back(std::move(e));
        }
    } else {
        throw Error("unknown isogeny '" + text + "' (expected sc|ad|so|hs|mu:<m>|sub:[...])");
    }
    return iso;
}

std::string IsogenySpec::name() const {
    switch (kind) {
        case Kind::SimplyConnected: return "sc";
        case Kind::Adjoint: return "ad";
        case Kind::SpecialOrthogonal: return "so";
        case Kind::HalfSpin: return "hs";
        case Kind::CyclicQuotient: return "mu:" + std::to_string(m);
        case Kind::Explicit: {
            std::string s = "sub:[";
            for (std::size_t i = 0; i < generators.size(); ++i) {
                if (i) s += ";";
                for (std::size_t j = 0; j < generators[i].coords.size(); ++j)
                    s += (j ? "," : "") + std::to_string(generators[i].coords[j]);
            }
            return s + "]";
        }
    }
    return "?";
}

FinAbElem CharacterQuotient::weight_class(const SmallVector& lambda) const {
    if (lambda.size() != omega_bars.size()) throw Error("weight has wrong length for " + spec.name());
    FinAbElem x = group.zero();
    for (std::size_t i = 0; i < lambda.size(); ++i) x = group.add(x, group.multiply(omega_bars[i], lambda[i]));
    return x;
}

CharacterQuotient character_quotient(const RootSystemSpec& spec, const IsogenySpec& isogeny) {
    FundamentalGroup fg = fundamental_group(spec);
    const int n = spec.rank;
    const auto& w = fg.omega_bars;
    std::vector<FinAbElem> h;
    using Kind = IsogenySpec::Kind;
    switch (isogeny.kind) {
        case Kind::SimplyConnected:
            h = fg.group.elements();
            break;
        case Kind::Adjoint:
            break;
        case Kind::SpecialOrthogonal:
            if (spec.series != Series::D) throw Error("isogeny 'so' requires type D, got " + spec.name());
            h.push_back(w[0]);
            break;
        case Kind::HalfSpin:
            if (spec.series != Series::D || spec.rank % 2 != 0)
                throw Error("isogeny 'hs' requires type D of even rank, got " + spec.name());
            h.push_back(w[static_cast<std::size_t>(n - 1)]);
            break;
        case Kind::CyclicQuotient:
            if (spec.series != Series::A || (n + 1) % isogeny.m != 0)
                throw Error("isogeny 'mu:" + std::to_string(isogeny.m) + "' requires type A_n with m | n+1, got " + spec.name());
            h.push_back(fg.group.multiply(w[0], isogeny.m));
            break;
        case Kind::Explicit:
            for (const auto& g : isogeny.generators) {
                if (g.coords.size() != fg.group.rank())
                    throw Error("isogeny generator has wrong number of coordinates for Lambda/Lambda_r = " + to_string(fg.group));
                for (std::size_t i = 0; i < g.coords.size(); ++i)
                    if (g.coords[i] < 0 || g.coords[i] >= fg.group.factors()[i])
                        throw Error("isogeny generator is not an element of Lambda/Lambda_r = " + to_string(fg.group));
                h.push_back(g);
            }
            break;
    }
    QuotientMap q = quotient_group(fg.group, h);
    CharacterQuotient out{spec, isogeny, q.target, {}};
    for (const auto& x : w) out.omega_bars.push_back(q.apply(fg.group, x));
    normalize_coordinates(out.group, out.omega_bars);
    return out;
}

}  // namespace twgamma
