#include "mi/symbolic.hpp"

#include <algorithm>

namespace mi {

namespace {

void check_args(const MonomialIdeal& ideal, int k) {
    if (k < 1) throw PreconditionError("symbolic power exponent must be >= 1");
    if (ideal.is_zero()) throw PreconditionError("zero ideal rejected");
    if (ideal.is_unit()) throw PreconditionError("unit ideal rejected");
}

MonomialIdeal intersect_all(int n, const std::vector<MonomialIdeal>& parts,
                            const Limits& limits) {
    MonomialIdeal result = MonomialIdeal::unit_ideal(n);
    for (const auto& part : parts) result = intersect(result, part, limits);
    return result;
}

}  // namespace

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int k, const Limits& limits) {
    check_args(ideal, k);
    std::vector<MonomialIdeal> parts;
    for (const auto& p : min_primes(ideal, limits))
        parts.push_back(power(localization_kernel(ideal, p), k, limits));
    return intersect_all(ideal.nvars(), parts, limits);
}

MonomialIdeal symbolic_power_via_power_kernels(const MonomialIdeal& ideal, int k,
                                               const Limits& limits) {
    check_args(ideal, k);
    MonomialIdeal powered = power(ideal, k, limits);
    std::vector<MonomialIdeal> parts;
    for (const auto& p : min_primes(ideal, limits))
        parts.push_back(localization_kernel(powered, p));
    return intersect_all(ideal.nvars(), parts, limits);
}

MonomialIdeal symbolic_power_squarefree(const MonomialIdeal& ideal, int k,
                                        const Limits& limits) {
    check_args(ideal, k);
    if (!ideal.is_squarefree()) throw PreconditionError("squarefree input required");
    std::vector<MonomialIdeal> parts;
    for (const auto& p : min_primes(ideal, limits))
        parts.push_back(power(prime_ideal(ideal.nvars(), p.vars), k, limits));
    return intersect_all(ideal.nvars(), parts, limits);
}

SymbolicOrdinaryVerdict symbolic_equals_ordinary(const MonomialIdeal& ideal, int k,
                                                 const Limits& limits) {
    check_args(ideal, k);
    MonomialIdeal ordinary = power(ideal, k, limits);
    bool equal = symbolic_power(ideal, k, limits) == ordinary;

    // equality holds exactly when I^k has no embedded primes over Min(I)
    std::vector<MonomialPrime> mins = min_primes(ideal, limits);
    bool certificate = true;
    for (const auto& p : ass_primes(ordinary, limits))
        if (std::find(mins.begin(), mins.end(), p) == mins.end()) {
            certificate = false;
            break;
        }
    return {equal, certificate};
}

}  // namespace mi
