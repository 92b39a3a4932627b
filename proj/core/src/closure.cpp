#include "mi/closure.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace mi {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Primal simplex with Bland's rule on max sum(lambda) s.t.
// A*lambda <= b, lambda >= 0 with b >= 0.  Returns true when the
// optimum reaches 1 (a row sum(lambda) <= 1 is part of A).
class FeasibilitySimplex {
public:
    FeasibilitySimplex(const std::vector<std::vector<int>>& a, const std::vector<int>& b)
        : rows_(a.size()), cols_(a.empty() ? 0 : a[0].size()) {
        tableau_.assign(rows_ + 1, std::vector<Rational>(cols_ + rows_ + 1, 0));
        basis_.resize(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) tableau_[r][c] = a[r][c];
            tableau_[r][cols_ + r] = 1;
            tableau_[r].back() = b[r];
            basis_[r] = cols_ + r;
        }
        for (std::size_t c = 0; c < cols_; ++c) tableau_[rows_][c] = -1;  // max sum
    }

    Rational maximize() {
        for (;;) {
            std::size_t pivot_col = cols_ + rows_;
            for (std::size_t c = 0; c < cols_ + rows_; ++c)
                if (tableau_[rows_][c] < 0) {
                    pivot_col = c;
                    break;
                }
            if (pivot_col == cols_ + rows_) break;

            std::size_t pivot_row = rows_;
            Rational best_ratio = 0;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (tableau_[r][pivot_col] <= 0) continue;
                Rational ratio = tableau_[r].back() / tableau_[r][pivot_col];
                if (pivot_row == rows_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[pivot_row])) {
                    pivot_row = r;
                    best_ratio = ratio;
                }
            }
            if (pivot_row == rows_) return Rational(1);  // unbounded above
            pivot(pivot_row, pivot_col);
        }
        // objective row holds z - c*lambda = 0; its RHS is the optimum
        return tableau_[rows_].back();
    }

private:
    void pivot(std::size_t pr, std::size_t pc) {
        Rational inv = tableau_[pr][pc];
        for (auto& x : tableau_[pr]) x /= inv;
        for (std::size_t r = 0; r <= rows_; ++r) {
            if (r == pr) continue;
            Rational factor = tableau_[r][pc];
            if (factor == 0) continue;
            for (std::size_t c = 0; c < tableau_[r].size(); ++c)
                tableau_[r][c] -= factor * tableau_[pr][c];
        }
        basis_[pr] = pc;
    }

    std::size_t rows_, cols_;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<std::size_t> basis_;
};

bool newton_polyhedron_member(const std::vector<int>& point,
                              const std::vector<Monomial>& gens) {
    std::size_t m = gens.size();
    std::size_t n = point.size();
    std::vector<std::vector<int>> a(n + 1, std::vector<int>(m));
    std::vector<int> b(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t g = 0; g < m; ++g) a[i][g] = gens[g].exps()[i];
        b[i] = point[i];
    }
    for (std::size_t g = 0; g < m; ++g) a[n][g] = 1;
    b[n] = 1;
    return FeasibilitySimplex(a, b).maximize() == 1;
}

}  // namespace

bool is_integral_over(const Monomial& u, const MonomialIdeal& ideal) {
    if (u.nvars() != ideal.nvars()) throw AmbientMismatchError();
    if (ideal.is_zero()) throw PreconditionError("zero ideal rejected");
    if (ideal.is_unit()) return true;
    return newton_polyhedron_member(u.exps(), ideal.gens());
}

namespace {

// enumerate points of total degree d inside the box prod [0, bound_i]
void enumerate_box_degree(const std::vector<int>& bound, int d, std::size_t i,
                          std::vector<int>& point, std::size_t& budget,
                          const std::function<void(const std::vector<int>&)>& visit) {
    if (i + 1 == bound.size()) {
        if (d <= bound[i]) {
            point[i] = d;
            if (budget == 0) throw ResourceLimitError("closure box cap");
            --budget;
            visit(point);
        }
        return;
    }
    for (int e = std::min(d, bound[i]); e >= 0; --e) {
        point[i] = e;
        enumerate_box_degree(bound, d - e, i + 1, point, budget, visit);
    }
}

}  // namespace

MonomialIdeal integral_closure(const MonomialIdeal& ideal, const Limits& limits) {
    if (ideal.is_zero()) throw PreconditionError("zero ideal rejected");
    if (ideal.is_unit()) return ideal;
    int n = ideal.nvars();

    std::vector<int> bound = exponent_vector(ideal);
    int dmin = ideal.gens().back().degree();
    int dmax = 0;
    for (const auto& g : ideal.gens()) {
        dmin = std::min(dmin, g.degree());
        dmax = std::max(dmax, g.degree());
    }

    // Every minimal generator of the closure lies in the box and has
    // total degree in [dmin, dmax]: above dmax a positive-orthant step
    // can be undone, below dmin no convex combination reaches the point.
    std::vector<Monomial> accepted;
    std::size_t budget = limits.max_terms;
    std::vector<int> point(n, 0);
    for (int d = dmin; d <= dmax; ++d) {
        enumerate_box_degree(bound, d, 0, point, budget, [&](const std::vector<int>& p) {
            Monomial candidate(p);
            for (const auto& g : accepted)
                if (divides(g, candidate)) return;
            if (contains(ideal, candidate) ||
                newton_polyhedron_member(p, ideal.gens()))
                accepted.push_back(candidate);
        });
    }
    return MonomialIdeal::make(n, std::move(accepted));
}

std::optional<int> closure_oracle(const Monomial& u, const MonomialIdeal& ideal,
                                  int k_max, const Limits& limits) {
    if (k_max < 1) throw PreconditionError("k_max must be >= 1");
    for (int k = 1; k <= k_max; ++k)
        if (contains(power(ideal, k, limits), pow(u, k))) return k;
    return std::nullopt;
}

}  // namespace mi
