#pragma once

// Root data of the simple types A_n ... G_2 in Bourbaki numbering.
//
// Weights are integer vectors in fundamental-weight coordinates, coroots are
// integer vectors in simple-coroot coordinates. The Cartan matrix entry
// cartan(i, j) is <alpha_i^vee, alpha_j>, so column j of the Cartan matrix is
// the simple root alpha_j written in fundamental weights.
//
// Node numbering (Bourbaki), "=>" / "<=" points towards the short root:
//
//   A_n   1 - 2 - ... - n
//   B_n   1 - 2 - ... - (n-1) => n
//   C_n   1 - 2 - ... - (n-1) <= n
//   D_n   1 - 2 - ... - (n-2) < (n-1), n
//   E_n   1 - 3 - 4 - 5 - ... - n,   2 attached to 4
//   F_4   1 - 2 => 3 - 4
//   G_2   1 <= 2   (alpha_1 short)

#include <cstdint>
#include <string>
#include <vector>

#include "twgamma/exact_lattice.hpp"
#include "twgamma/finite_abelian.hpp"

namespace twgamma {

using SmallVector = std::vector<std::int64_t>;

enum class Series { A, B, C, D, E, F, G };

struct RootSystemSpec {
    Series series = Series::A;
    int rank = 1;

    /// Parses "<series><rank>", e.g. "D8" or "e7".
    static RootSystemSpec parse(const std::string& text);
    /// Throws Error unless the rank is admissible for the series.
    void validate() const;
    std::string name() const;

    friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

IntMatrix cartan_matrix(const RootSystemSpec& spec);

/// Positive coroots by closure of the simple coroots under simple reflections.
std::vector<SmallVector> positive_coroots(const RootSystemSpec& spec);

/// Number of positive roots from the classification, used to cross-check the closure.
std::size_t expected_positive_root_count(const RootSystemSpec& spec);

class RootDatum {
public:
    explicit RootDatum(const RootSystemSpec& spec);

    const RootSystemSpec& spec() const { return spec_; }
    int rank() const { return spec_.rank; }
    const IntMatrix& cartan() const { return cartan_; }
    const std::vector<SmallVector>& positive_coroots() const { return coroots_; }
    /// <rho, beta^vee> for each positive coroot, in the same order.
    const std::vector<std::int64_t>& rho_pairings() const { return rho_pairings_; }
    /// Simple root alpha_j in fundamental-weight coordinates.
    SmallVector simple_root(int j) const;

private:
    RootSystemSpec spec_;
    IntMatrix cartan_;
    std::vector<SmallVector> coroots_;
    std::vector<std::int64_t> rho_pairings_;
};

/// Weyl dimension formula for a dominant weight.
Integer weyl_dimension(const RootDatum& datum, const SmallVector& highest_weight);
Integer weyl_dimension(const RootSystemSpec& spec, const SmallVector& highest_weight);
/// Dimensions of the n fundamental representations.
std::vector<Integer> fundamental_dimensions(const RootDatum& datum);

/// Size of the Weyl orbit of the i-th fundamental weight (1-based) by BFS.
/// Intended for cross-checks; refuses ranks above `max_rank`.
std::size_t orbit_size(const RootDatum& datum, int i, int max_rank = 8);

/// Lambda / Lambda_r with the classes of the fundamental weights.
struct FundamentalGroup {
    FinAbGroup group;
    std::vector<FinAbElem> omega_bars;
};

FundamentalGroup fundamental_group(const RootSystemSpec& spec);

/// Selects the intermediate lattice T* between the root and weight lattices,
/// through the subgroup H = T* / Lambda_r of Lambda / Lambda_r.
struct IsogenySpec {
    enum class Kind { SimplyConnected, Adjoint, SpecialOrthogonal, HalfSpin, CyclicQuotient, Explicit };

    Kind kind = Kind::SimplyConnected;
    int m = 0;                            ///< CyclicQuotient: the order of the character group
    std::vector<FinAbElem> generators;    ///< Explicit: generators of H in Lambda/Lambda_r coordinates

    /// "sc" | "ad" | "so" | "hs" | "mu:<m>" | "sub:[c1,c2;c1,c2;...]"
    static IsogenySpec parse(const std::string& text);
    std::string name() const;

    friend bool operator==(const IsogenySpec&, const IsogenySpec&) = default;
};

/// A = Lambda / T* with the induced classes of the fundamental weights.
struct CharacterQuotient {
    RootSystemSpec spec;
    IsogenySpec isogeny;
    FinAbGroup group;
    std::vector<FinAbElem> omega_bars;

    /// Class of the weight sum_i lambda_i omega_i.
    FinAbElem weight_class(const SmallVector& lambda) const;
};

CharacterQuotient character_quotient(const RootSystemSpec& spec, const IsogenySpec& isogeny);

}  // namespace twgamma
