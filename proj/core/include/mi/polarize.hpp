#ifndef MI_POLARIZE_HPP
#define MI_POLARIZE_HPP

#include <utility>
#include <vector>

#include "mi/ideal.hpp"

namespace mi {

// Slot variable x_{j,k}: base variable j (0-based) and slot k (1-based).
// The order is x_{j,k} > x_{j',k'} iff j < j' or (j == j' and k < k').
using SlotVar = std::pair<int, int>;

// Squarefree ideal over slot variables together with the extension
// vector and the map back to the base ring.  Generators are kept
// prefix-closed in the slot index: x_{j,k} | u with k > 1 implies
// x_{j,k-1} | u.
class PolarizedIdeal {
public:
    PolarizedIdeal(int base_nvars, std::vector<std::vector<SlotVar>> gens);

    int base_nvars() const { return base_nvars_; }
    const std::vector<int>& extension() const { return extension_; }
    const std::vector<std::vector<SlotVar>>& gens() const { return gens_; }

    bool prefix_closed() const;

    // squarefree ideal over the slot variables flattened in descending
    // slot order; squarefree strong stability is read off this image
    MonomialIdeal flatten() const;

    friend bool operator==(const PolarizedIdeal&, const PolarizedIdeal&) = default;

private:
    int base_nvars_;
    std::vector<int> extension_;  // max slot per base variable
    std::vector<std::vector<SlotVar>> gens_;
};

PolarizedIdeal polarize(const MonomialIdeal& ideal);

// canonical inverse: read the slot counts back into exponents
MonomialIdeal depolarize(const PolarizedIdeal& polarized);

bool is_squarefree_strongly_stable(const PolarizedIdeal& polarized);

// sampled check that pure-lex comparison commutes with polarization
bool order_preserving_check(const MonomialIdeal& ideal, int sample_size,
                            std::uint64_t seed = 0);

// Structure of ideals whose polarization is squarefree strongly stable:
// W carries the nonzero max exponents, A the all-or-nothing columns,
// B = W \ A, and the alternating (A_t, B_t) interval blocks drive the
// sum-of-products reconstruction.
struct StructureReport {
    VarSet w;
    VarSet a;
    VarSet b;
    // intervals as 0-based [first, last]; an empty interval has first > last
    struct Block {
        int a_first, a_last;
        int b_first, b_last;
    };
    std::vector<Block> blocks;
    bool reconstructed = false;
    MonomialIdeal candidate;
};

// requires exponent_vector(I) free of entries equal to 1
StructureReport analyze_structure(const MonomialIdeal& ideal);

// Construct-then-filter enumeration of the ideals the block construction
// yields for each subset A of W, keeping those that polarize back to the
// input.  The verified count is reported by callers against 2^{|W|}.
std::vector<MonomialIdeal> depolarize_enumerate(const PolarizedIdeal& polarized,
                                                const Limits& limits = {});

}  // namespace mi

#endif
