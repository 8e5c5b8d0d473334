#pragma once

#include <string>
#include <vector>

#include "gaiakit/bigint.hpp"
#include "gaiakit/fincat.hpp"
#include "gaiakit/simplicial.hpp"

namespace gaiakit::elements {
struct SetInstance;
}

namespace gaiakit::homology {

using bigint::BigInt;

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int r, int c) { return data_[r * cols_ + c]; }
    const BigInt& at(int r, int c) const { return data_[r * cols_ + c]; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix, positive,
// computed by row/column reduction over Z with exact arithmetic.
std::vector<BigInt> smith_invariant_factors(IntMatrix m);

// Normalized chain complex of a truncated simplicial set: bases are the
// nondegenerate simplices; the boundary is the alternating face sum with
// degenerate faces dropped.
struct ChainComplex {
    std::vector<std::vector<std::string>> bases;   // per dimension
    std::vector<IntMatrix> boundary;               // boundary[n]: C_n -> C_{n-1}, n >= 1

    int top_dim() const { return static_cast<int>(bases.size()) - 1; }
    // exact check of ∂∂ = 0
    bool boundary_squares_to_zero() const;
};

ChainComplex chain_complex(const simplicial::SimplicialSet& x);

struct HomologyResult {
    std::vector<int> betti;                           // per dimension 0..top
    std::vector<std::vector<long long>> torsion;      // invariant factors > 1
    int top_dim = 0;
    // At the top retained dimension im(∂_{top+1}) is unknown, so the last
    // entry only bounds the true rank; "lower bound only" in reports.
    bool top_truncated = true;

    long long euler_characteristic() const;
};

HomologyResult homology(const simplicial::SimplicialSet& x);

// Homology of the classifying space |N C|, computed on the nerve truncated
// at N.
HomologyResult classifying_space_homology(const fincat::FinCategory& c, int N);

// Homology of the homotopy colimit of a Set-instance: the nerve of its
// category of elements, truncated at N.
HomologyResult hocolim_homology(const elements::SetInstance& inst, int N);

// Sparse triplet export of a boundary matrix ("row col value" lines).
std::string boundary_triplets(const ChainComplex& cc, int n);

} // namespace gaiakit::homology
