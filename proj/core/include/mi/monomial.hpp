#ifndef MI_MONOMIAL_HPP
#define MI_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mi/errors.hpp"

namespace mi {

// Subset of the variable indices {0, ..., n-1}.  Indices are 0-based
// internally; every external format (text, JSON, DSL) is 1-based.
class VarSet {
public:
    static constexpr int kMaxVars = 64;

    VarSet() = default;
    static VarSet full(int n);
    static VarSet of(std::initializer_list<int> indices);

    bool contains(int i) const { return (bits_ >> i) & 1u; }
    void add(int i) { bits_ |= std::uint64_t{1} << i; }
    void remove(int i) { bits_ &= ~(std::uint64_t{1} << i); }
    bool empty() const { return bits_ == 0; }
    int count() const;
    int min_element() const;  // -1 when empty
    int max_element() const;  // -1 when empty
    std::uint64_t bits() const { return bits_; }

    bool subset_of(const VarSet& other) const { return (bits_ & ~other.bits_) == 0; }
    bool intersects(const VarSet& other) const { return (bits_ & other.bits_) != 0; }
    VarSet unite(const VarSet& other) const { return VarSet(bits_ | other.bits_); }
    VarSet intersect(const VarSet& other) const { return VarSet(bits_ & other.bits_); }
    VarSet complement(int n) const;

    std::vector<int> elements() const;

    friend bool operator==(const VarSet&, const VarSet&) = default;
    friend auto operator<=>(const VarSet& a, const VarSet& b) { return a.bits_ <=> b.bits_; }

private:
    explicit VarSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

enum class Order { PureLex, GradedLex };

// Exponent vector over a fixed ambient variable count.  Immutable after
// construction; all arithmetic is exact with overflow checks.
class Monomial {
public:
    Monomial() = default;  // unit monomial of the n = 0 ring
    explicit Monomial(std::vector<int> exponents);
    static Monomial unit(int n);
    // var is 0-based
    static Monomial variable(int n, int var, int exponent = 1);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int exp(int i) const;
    const std::vector<int>& exps() const { return exps_; }

    int degree() const;
    bool is_unit() const;
    bool is_squarefree() const;
    bool is_pure_power() const;  // unit counts, x_i^a counts

    VarSet support() const;
    // Largest 0-based index with a positive exponent, -1 for the unit.
    int max_support() const;
    Monomial squarefree_part() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> exps_;
};

int compare(const Monomial& u, const Monomial& v, Order ord);

Monomial mul(const Monomial& u, const Monomial& v);
// u^k with overflow checks
Monomial pow(const Monomial& u, int k);
bool divides(const Monomial& u, const Monomial& v);
// exact quotient; requires divides(v, u)
Monomial div_exact(const Monomial& u, const Monomial& v);
// componentwise max(u - v, 0), i.e. u / gcd(u, v)
Monomial div_clipped(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);

// zero exponents outside A; restrict(u, A) * restrict(u, [n] \ A) == u
Monomial restrict_to(const Monomial& u, const VarSet& a);
// sum of exponents at indices in B
int b_degree(const Monomial& u, const VarSet& b);

// "x1^3*x2"; the unit renders as "1"
std::string render(const Monomial& u);

}  // namespace mi

#endif
