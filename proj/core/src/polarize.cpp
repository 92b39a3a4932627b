#include "mi/polarize.hpp"

#include <algorithm>
#include <random>

#include "mi/predicates.hpp"

namespace mi {

namespace {

// descending pure lex over slot variables ordered x_{j,k} before
// x_{j',k'} iff (j, k) < (j', k')
int compare_slot_gens(const std::vector<SlotVar>& a, const std::vector<SlotVar>& b) {
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;  // earlier variable wins
    }
    if (a.size() == b.size()) return 0;
    return a.size() > b.size() ? 1 : -1;
}

bool subset_gen(const std::vector<SlotVar>& a, const std::vector<SlotVar>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

PolarizedIdeal::PolarizedIdeal(int base_nvars, std::vector<std::vector<SlotVar>> gens)
    : base_nvars_(base_nvars), extension_(base_nvars, 0), gens_(std::move(gens)) {
    for (auto& g : gens_) {
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        for (const auto& [j, k] : g) {
            if (j < 0 || j >= base_nvars_ || k < 1)
                throw IndexError("slot variable out of range");
            extension_[j] = std::max(extension_[j], k);
        }
    }
    // minimality: a generator dividing another is a subset of its slots
    std::sort(gens_.begin(), gens_.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<std::vector<SlotVar>> minimal;
    for (auto& g : gens_) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (subset_gen(kept, g)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g));
    }
    gens_ = std::move(minimal);
    std::sort(gens_.begin(), gens_.end(), [](const auto& a, const auto& b) {
        return compare_slot_gens(a, b) > 0;
    });
    // recompute after minimalization
    std::fill(extension_.begin(), extension_.end(), 0);
    for (const auto& g : gens_)
        for (const auto& [j, k] : g) extension_[j] = std::max(extension_[j], k);
}

bool PolarizedIdeal::prefix_closed() const {
    for (const auto& g : gens_)
        for (const auto& [j, k] : g)
            if (k > 1 && !std::binary_search(g.begin(), g.end(), SlotVar{j, k - 1}))
                return false;
    return true;
}

MonomialIdeal PolarizedIdeal::flatten() const {
    std::vector<int> offset(base_nvars_ + 1, 0);
    for (int j = 0; j < base_nvars_; ++j) offset[j + 1] = offset[j] + extension_[j];
    int total = offset[base_nvars_];
    std::vector<Monomial> raw;
    raw.reserve(gens_.size());
    for (const auto& g : gens_) {
        std::vector<int> e(total, 0);
        for (const auto& [j, k] : g) e[offset[j] + k - 1] = 1;
        raw.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(total, std::move(raw));
}

PolarizedIdeal polarize(const MonomialIdeal& ideal) {
    std::vector<std::vector<SlotVar>> gens;
    gens.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) {
        std::vector<SlotVar> slots;
        for (int j = 0; j < ideal.nvars(); ++j)
            for (int k = 1; k <= g.exps()[j]; ++k) slots.push_back({j, k});
        gens.push_back(std::move(slots));
    }
    return PolarizedIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal depolarize(const PolarizedIdeal& polarized) {
    std::vector<Monomial> raw;
    for (const auto& g : polarized.gens()) {
        std::vector<int> e(polarized.base_nvars(), 0);
        for (const auto& [j, k] : g) ++e[j];
        raw.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(polarized.base_nvars(), std::move(raw));
}

bool is_squarefree_strongly_stable(const PolarizedIdeal& polarized) {
    return is_squarefree_strongly_stable(polarized.flatten());
}

namespace {

std::vector<SlotVar> polarize_monomial(const Monomial& u) {
    std::vector<SlotVar> slots;
    for (int j = 0; j < u.nvars(); ++j)
        for (int k = 1; k <= u.exps()[j]; ++k) slots.push_back({j, k});
    return slots;
}

}  // namespace

bool order_preserving_check(const MonomialIdeal& ideal, int sample_size,
                            std::uint64_t seed) {
    if (ideal.is_zero()) return true;
    std::mt19937_64 rng(seed);
    int n = ideal.nvars();
    auto sample_member = [&]() {
        const Monomial& g = ideal.gens()[rng() % ideal.gens().size()];
        std::vector<int> e = g.exps();
        int extra = static_cast<int>(rng() % 4);
        for (int t = 0; t < extra && n > 0; ++t) ++e[rng() % n];
        return Monomial(e);
    };
    // generator pairs first, then random members
    std::vector<std::pair<Monomial, Monomial>> pairs;
    for (const auto& a : ideal.gens())
        for (const auto& b : ideal.gens()) pairs.push_back({a, b});
    for (int t = 0; t < sample_size; ++t) pairs.push_back({sample_member(), sample_member()});

    for (const auto& [u, v] : pairs) {
        int base = compare(u, v, Order::PureLex);
        int polar = compare_slot_gens(polarize_monomial(u), polarize_monomial(v));
        if (base != polar) return false;
    }
    return true;
}

namespace {

Monomial principal_from_interval(int n, const std::vector<int>& exponents, int first,
                                 int last, int drop) {
    std::vector<int> e(n, 0);
    for (int t = first; t <= last; ++t) e[t] = exponents[t] - drop;
    return Monomial(std::move(e));
}

// full universal lexsegment on the variable interval [first, last] with
// the given max exponents
MonomialIdeal full_universal_lexsegment(int n, const std::vector<int>& exponents,
                                        int first, int last) {
    if (first > last) return MonomialIdeal::unit_ideal(n);
    std::vector<Monomial> raw;
    for (int v = first; v <= last; ++v) {
        std::vector<int> e(n, 0);
        for (int t = first; t < v; ++t) e[t] = exponents[t] - 1;
        e[v] = exponents[v];
        raw.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(n, std::move(raw));
}

struct Blocks {
    bool valid = false;
    std::vector<StructureReport::Block> blocks;
};

// W must be the initial interval [0, r); split it into alternating
// maximal A/B runs, pairing each A run with the B run that follows
Blocks derive_blocks(int r, const VarSet& a_set) {
    Blocks out;
    out.valid = true;
    int pos = 0;
    while (pos < r) {
        StructureReport::Block blk{0, -1, 0, -1};
        blk.a_first = pos;
        while (pos < r && a_set.contains(pos)) ++pos;
        blk.a_last = pos - 1;
        blk.b_first = pos;
        while (pos < r && !a_set.contains(pos)) ++pos;
        blk.b_last = pos - 1;
        out.blocks.push_back(blk);
    }
    return out;
}

MonomialIdeal reconstruct(int n, const std::vector<int>& exponents,
                          const std::vector<StructureReport::Block>& blocks) {
    MonomialIdeal acc = MonomialIdeal::zero(n);
    MonomialIdeal prefix = MonomialIdeal::unit_ideal(n);
    for (const auto& blk : blocks) {
        MonomialIdeal l = MonomialIdeal::make(
            n, {principal_from_interval(n, exponents, blk.a_first, blk.a_last, 0)});
        MonomialIdeal m = full_universal_lexsegment(n, exponents, blk.b_first, blk.b_last);
        MonomialIdeal m_prime = MonomialIdeal::make(
            n, {principal_from_interval(n, exponents, blk.b_first, blk.b_last, 1)});
        acc = sum(acc, product(product(l, m), prefix));
        prefix = product(prefix, product(l, m_prime));
    }
    return acc;
}

}  // namespace

StructureReport analyze_structure(const MonomialIdeal& ideal) {
    int n = ideal.nvars();
    std::vector<int> a = exponent_vector(ideal);
    for (int j = 0; j < n; ++j)
        if (a[j] == 1) throw UnsupportedShapeError("unsupported-shape: some max exponent is 1");

    StructureReport report;
    report.candidate = MonomialIdeal::zero(n);
    for (int j = 0; j < n; ++j) {
        if (a[j] == 0) continue;
        report.w.add(j);
        bool all_or_nothing = true;
        for (const auto& g : ideal.gens())
            if (g.exps()[j] != 0 && g.exps()[j] != a[j]) {
                all_or_nothing = false;
                break;
            }
        if (all_or_nothing)
            report.a.add(j);
        else
            report.b.add(j);
    }

    int r = report.w.count();
    if (report.w != VarSet::full(r)) return report;  // gap in W: no block structure

    report.blocks = derive_blocks(r, report.a).blocks;
    report.candidate = reconstruct(n, a, report.blocks);
    report.reconstructed = report.candidate == ideal;
    return report;
}

std::vector<MonomialIdeal> depolarize_enumerate(const PolarizedIdeal& polarized,
                                                const Limits& limits) {
    if (!polarized.prefix_closed())
        throw PreconditionError("input is not a polarization (prefix closure fails)");
    if (!is_squarefree_strongly_stable(polarized))
        throw PreconditionError("squarefree strongly stable input required");

    int n = polarized.base_nvars();
    const std::vector<int>& b = polarized.extension();
    VarSet w;
    for (int i = 0; i < n; ++i) {
        if (b[i] == 1) throw PreconditionError("extension entry equal to 1");
        if (b[i] > 0) w.add(i);
    }
    int r = w.count();
    if (w != VarSet::full(r))
        throw PreconditionError("extension support is not an initial interval");
    if (r >= 30 || (std::uint64_t{1} << r) > limits.max_terms)
        throw ResourceLimitError("subset enumeration cap");

    std::vector<MonomialIdeal> verified;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        VarSet a_set;
        for (int i = 0; i < r; ++i)
            if ((mask >> i) & 1) a_set.add(i);
        MonomialIdeal candidate = reconstruct(n, b, derive_blocks(r, a_set).blocks);
        if (polarize(candidate) == polarized &&
            std::find(verified.begin(), verified.end(), candidate) == verified.end())
            verified.push_back(candidate);
    }
    return verified;
}

}  // namespace mi
