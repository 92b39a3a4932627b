#include "mi/monomial.hpp"

#include <bit>
#include <limits>
#include <numeric>

namespace mi {

VarSet VarSet::full(int n) {
    if (n < 0 || n > kMaxVars) throw IndexError("variable count out of range");
    if (n == 0) return VarSet();
    return VarSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

VarSet VarSet::of(std::initializer_list<int> indices) {
    VarSet s;
    for (int i : indices) {
        if (i < 0 || i >= kMaxVars) throw IndexError();
        s.add(i);
    }
    return s;
}

int VarSet::count() const { return std::popcount(bits_); }

int VarSet::min_element() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
}

int VarSet::max_element() const {
    return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_);
}

VarSet VarSet::complement(int n) const { return VarSet(full(n).bits_ & ~bits_); }

std::vector<int> VarSet::elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b;) {
        int i = std::countr_zero(b);
        out.push_back(i);
        b &= b - 1;
    }
    return out;
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (static_cast<int>(exps_.size()) > VarSet::kMaxVars)
        throw IndexError("too many variables");
    for (int e : exps_)
        if (e < 0) throw PreconditionError("negative exponent");
}

Monomial Monomial::unit(int n) { return Monomial(std::vector<int>(n, 0)); }

Monomial Monomial::variable(int n, int var, int exponent) {
    if (var < 0 || var >= n) throw IndexError();
    std::vector<int> e(n, 0);
    e[var] = exponent;
    return Monomial(std::move(e));
}

int Monomial::exp(int i) const {
    if (i < 0 || i >= nvars()) throw IndexError();
    return exps_[i];
}

int Monomial::degree() const {
    long long d = 0;
    for (int e : exps_) d += e;
    return static_cast<int>(d);
}

bool Monomial::is_unit() const {
    for (int e : exps_)
        if (e != 0) return false;
    return true;
}

bool Monomial::is_squarefree() const {
    for (int e : exps_)
        if (e > 1) return false;
    return true;
}

bool Monomial::is_pure_power() const { return support().count() <= 1; }

VarSet Monomial::support() const {
    VarSet s;
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > 0) s.add(i);
    return s;
}

int Monomial::max_support() const { return support().max_element(); }

Monomial Monomial::squarefree_part() const {
    std::vector<int> e(exps_);
    for (int& x : e) x = x > 0 ? 1 : 0;
    return Monomial(std::move(e));
}

static void check_ambient(const Monomial& u, const Monomial& v) {
    if (u.nvars() != v.nvars()) throw AmbientMismatchError();
}

int compare(const Monomial& u, const Monomial& v, Order ord) {
    check_ambient(u, v);
    if (ord == Order::GradedLex) {
        int du = u.degree(), dv = v.degree();
        if (du != dv) return du < dv ? -1 : 1;
    }
    for (int i = 0; i < u.nvars(); ++i) {
        if (u.exps()[i] != v.exps()[i]) return u.exps()[i] < v.exps()[i] ? -1 : 1;
    }
    return 0;
}

static int checked_add(int a, int b) {
    long long s = static_cast<long long>(a) + b;
    if (s > std::numeric_limits<int>::max())
        throw ResourceLimitError("exponent overflow");
    return static_cast<int>(s);
}

Monomial mul(const Monomial& u, const Monomial& v) {
    check_ambient(u, v);
    std::vector<int> e(u.nvars());
    for (int i = 0; i < u.nvars(); ++i) e[i] = checked_add(u.exps()[i], v.exps()[i]);
    return Monomial(std::move(e));
}

Monomial pow(const Monomial& u, int k) {
    if (k < 0) throw PreconditionError("negative power");
    std::vector<int> e(u.nvars());
    for (int i = 0; i < u.nvars(); ++i) {
        long long p = static_cast<long long>(u.exps()[i]) * k;
        if (p > std::numeric_limits<int>::max())
            throw ResourceLimitError("exponent overflow");
        e[i] = static_cast<int>(p);
    }
    return Monomial(std::move(e));
}

bool divides(const Monomial& u, const Monomial& v) {
    check_ambient(u, v);
    for (int i = 0; i < u.nvars(); ++i)
        if (u.exps()[i] > v.exps()[i]) return false;
    return true;
}

Monomial div_exact(const Monomial& u, const Monomial& v) {
    check_ambient(u, v);
    std::vector<int> e(u.nvars());
    for (int i = 0; i < u.nvars(); ++i) {
        e[i] = u.exps()[i] - v.exps()[i];
        if (e[i] < 0) throw PreconditionError("inexact monomial quotient");
    }
    return Monomial(std::move(e));
}

Monomial div_clipped(const Monomial& u, const Monomial& v) {
    check_ambient(u, v);
    std::vector<int> e(u.nvars());
    for (int i = 0; i < u.nvars(); ++i) e[i] = std::max(u.exps()[i] - v.exps()[i], 0);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
    check_ambient(u, v);
    std::vector<int> e(u.nvars());
    for (int i = 0; i < u.nvars(); ++i) e[i] = std::min(u.exps()[i], v.exps()[i]);
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
    check_ambient(u, v);
    std::vector<int> e(u.nvars());
    for (int i = 0; i < u.nvars(); ++i) e[i] = std::max(u.exps()[i], v.exps()[i]);
    return Monomial(std::move(e));
}

Monomial restrict_to(const Monomial& u, const VarSet& a) {
    if (!a.subset_of(VarSet::full(u.nvars()))) throw IndexError();
    std::vector<int> e(u.nvars(), 0);
    for (int i = 0; i < u.nvars(); ++i)
        if (a.contains(i)) e[i] = u.exps()[i];
    return Monomial(std::move(e));
}

int b_degree(const Monomial& u, const VarSet& b) {
    if (!b.subset_of(VarSet::full(u.nvars()))) throw IndexError();
    int d = 0;
    for (int i : b.elements()) d += u.exps()[i];
    return d;
}

std::string render(const Monomial& u) {
    std::string out;
    for (int i = 0; i < u.nvars(); ++i) {
        int e = u.exps()[i];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

}  // namespace mi
