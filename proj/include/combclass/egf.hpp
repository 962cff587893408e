#pragma once

#include "combclass/bigint.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace combclass {

/// Truncated exponential generating function of a labelled class, stored as
/// the exact object counts C_0..C_N (so C_n = n! * [x^n] of the series).
/// Keeping counts instead of rational coefficients makes every operation a
/// pure integer computation; products become binomial convolutions.
class CountSeq {
  public:
    explicit CountSeq(std::vector<Bigint> counts) : counts_(std::move(counts))
    {
        if (counts_.empty())
            throw std::invalid_argument("CountSeq: needs at least C_0");
        for (const Bigint &c : counts_)
            if (c < 0)
                throw std::invalid_argument("CountSeq: negative count");
    }

    static CountSeq zero(int order)
    {
        return CountSeq(std::vector<Bigint>(order + 1, Bigint(0)));
    }

    /// The class with a single degree-0 element (EGF 1).
    static CountSeq unit(int order)
    {
        auto c = std::vector<Bigint>(order + 1, Bigint(0));
        c[0] = 1;
        return CountSeq(std::move(c));
    }

    /// The singleton atom class X (EGF x).
    static CountSeq atom(int order)
    {
        auto c = std::vector<Bigint>(order + 1, Bigint(0));
        if (order >= 1)
            c[1] = 1;
        return CountSeq(std::move(c));
    }

    /// Nonempty sets of atoms, Set(X)+ (EGF e^x - 1): one object per
    /// positive degree.
    static CountSeq nonempty_sets(int order)
    {
        auto c = std::vector<Bigint>(order + 1, Bigint(1));
        c[0] = 0;
        return CountSeq(std::move(c));
    }

    int order() const { return static_cast<int>(counts_.size()) - 1; }
    const Bigint &operator[](int n) const { return counts_.at(n); }
    const std::vector<Bigint> &counts() const { return counts_; }

    bool operator==(const CountSeq &) const = default;

  private:
    std::vector<Bigint> counts_;
};

namespace detail {
inline void require_same_order(const CountSeq &a, const CountSeq &b)
{
    if (a.order() != b.order())
        throw std::invalid_argument("CountSeq order mismatch");
}
inline void require_no_constant_term(const CountSeq &a)
{
    if (a[0] != 0)
        throw std::invalid_argument("class must have no degree-0 element");
}
} // namespace detail

/// Disjoint union: counts add.
inline CountSeq egf_add(const CountSeq &a, const CountSeq &b)
{
    detail::require_same_order(a, b);
    std::vector<Bigint> c(a.order() + 1);
    for (int n = 0; n <= a.order(); ++n)
        c[n] = a[n] + b[n];
    return CountSeq(std::move(c));
}

/// Labelled product: the label set of each pair splits between the factors,
/// so counts multiply under a binomial convolution.
inline CountSeq egf_mul(const CountSeq &a, const CountSeq &b)
{
    detail::require_same_order(a, b);
    std::vector<Bigint> c(a.order() + 1, Bigint(0));
    for (int n = 0; n <= a.order(); ++n)
        for (int k = 0; k <= n; ++k)
            c[n] += binomial(n, k) * a[k] * b[n - k];
    return CountSeq(std::move(c));
}

/// Pointing: product with the one-element degree-1 class. Shifts degrees up
/// by one and multiplies by the number of ways to place the new atom's label.
inline CountSeq point(const CountSeq &a)
{
    std::vector<Bigint> c(a.order() + 1, Bigint(0));
    for (int n = 1; n <= a.order(); ++n)
        c[n] = n * a[n - 1];
    return CountSeq(std::move(c));
}

/// Sequences of a class with no degree-0 element: B = 1 + A*B, solved
/// coefficientwise.
inline CountSeq egf_seq(const CountSeq &a)
{
    detail::require_no_constant_term(a);
    std::vector<Bigint> b(a.order() + 1, Bigint(0));
    b[0] = 1;
    for (int n = 1; n <= a.order(); ++n)
        for (int k = 1; k <= n; ++k)
            b[n] += binomial(n, k) * a[k] * b[n - k];
    return CountSeq(std::move(b));
}

/// Sets of a class with no degree-0 element: B = exp(A) through the
/// differential recurrence B' = A'B. Combinatorially the k-th term places
/// the largest label inside a degree-k component.
inline CountSeq egf_exp(const CountSeq &a)
{
    detail::require_no_constant_term(a);
    std::vector<Bigint> b(a.order() + 1, Bigint(0));
    b[0] = 1;
    for (int n = 1; n <= a.order(); ++n)
        for (int k = 1; k <= n; ++k)
            b[n] += binomial(n - 1, k - 1) * a[k] * b[n - k];
    return CountSeq(std::move(b));
}

/// Cycles of a class with no degree-0 element: L = log(1/(1-A)). Computed
/// by first forming B = 1/(1-A) with egf_seq and then inverting B = exp(L)
/// through the same differential recurrence, so no series division occurs.
/// Satisfies egf_exp(egf_log(a)) == egf_seq(a).
inline CountSeq egf_log(const CountSeq &a)
{
    detail::require_no_constant_term(a);
    const CountSeq b = egf_seq(a);
    std::vector<Bigint> l(a.order() + 1, Bigint(0));
    for (int n = 1; n <= a.order(); ++n) {
        Bigint s = b[n];
        for (int k = 1; k < n; ++k)
            s -= binomial(n - 1, k - 1) * l[k] * b[n - k];
        l[n] = std::move(s);
    }
    return CountSeq(std::move(l));
}

/// The plane-tree class R, unique solution of R = Seq(R^point). Coefficient
/// n of the map depends only on coefficients below n of its argument, so
/// iterating order+1 times from the unit class pins every coefficient
/// exactly; no tolerance is involved. R_n = (2n)!/(n+1)!.
inline CountSeq solve_catalan_class(int order)
{
    CountSeq s = CountSeq::unit(order);
    for (int i = 0; i <= order; ++i)
        s = egf_seq(point(s));
    return s;
}

/// Windmill trees: W = x*(log(1/(1-W)) + 1), solved as a coefficient fixed
/// point from the zero series.
inline CountSeq solve_windmill(int order)
{
    CountSeq s = CountSeq::zero(order);
    for (int i = 0; i <= order; ++i) {
        std::vector<Bigint> inner = egf_log(s).counts();
        inner[0] += 1;
        s = point(CountSeq(std::move(inner)));
    }
    return s;
}

/// Nested discs: S = x*e^S, the (sign-flipped) Lambert W series.
/// Coefficient fixed point; counts are n^(n-1).
inline CountSeq solve_npt(int order)
{
    CountSeq s = CountSeq::zero(order);
    for (int i = 0; i <= order; ++i)
        s = point(egf_exp(s));
    return s;
}

/// Triangle of unsigned Stirling numbers of the first kind: s[n][k] counts
/// permutations of n objects with exactly k cycles.
class Stirling1Table {
  public:
    explicit Stirling1Table(int n_max) : n_max_(n_max)
    {
        if (n_max < 0)
            throw std::invalid_argument("Stirling1Table: negative n_max");
        rows_.resize(n_max + 1);
        rows_[0] = {Bigint(1)};
        for (int n = 0; n < n_max; ++n) {
            rows_[n + 1].assign(n + 2, Bigint(0));
            for (int k = 0; k <= n + 1; ++k) {
                if (k > 0)
                    rows_[n + 1][k] += rows_[n][k - 1];
                if (k <= n)
                    rows_[n + 1][k] += n * rows_[n][k];
            }
        }
    }

    int n_max() const { return n_max_; }

    /// s[n][k]; zero for k > n.
    Bigint at(int n, int k) const
    {
        if (n < 0 || n > n_max_ || k < 0)
            throw std::out_of_range("Stirling1Table::at");
        if (k > n)
            return 0;
        return rows_[n][k];
    }

  private:
    int n_max_;
    std::vector<std::vector<Bigint>> rows_;
};

inline Stirling1Table stirling1(int n_max) { return Stirling1Table(n_max); }

/// Closed form for windmill counts obtained by Lagrange inversion:
/// W_n = sum_i i! * binomial(n, i) * s[n-1][i].
inline Bigint windmill_stirling(int n, const Stirling1Table &table)
{
    if (n < 1)
        throw std::invalid_argument("windmill_stirling: n must be >= 1");
    if (table.n_max() < n - 1)
        throw std::invalid_argument("windmill_stirling: table too small");
    Bigint w = 0;
    for (int i = 0; i <= n - 1; ++i)
        w += factorial(i) * binomial(n, i) * table.at(n - 1, i);
    return w;
}

} // namespace combclass
