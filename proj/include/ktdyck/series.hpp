#ifndef KTDYCK_SERIES_HPP
#define KTDYCK_SERIES_HPP

#include <map>
#include <span>
#include <vector>

#include <ktdyck/path.hpp>
#include <ktdyck/types.hpp>

namespace ktdyck
{

// Exponent vector (d_z, e_1, ..., e_k).
using Monomial = std::vector<int>;

/// Sparse polynomial in z, x_1..x_k with integer coefficients, truncated at z-degree N.
///
/// Terms with d_z > N are never stored; all arithmetic drops them. Zero
/// coefficients are never stored either, so two series are equal iff their
/// term maps are equal.
class TruncatedSeries
{
public:
    TruncatedSeries(int k, int bound);

    static TruncatedSeries constant(int k, int bound, const BigInt &c);
    static TruncatedSeries one(int k, int bound)
    {
        return constant(k, bound, 1);
    }
    // c * z^dz * x^e; x_exponents has k entries.
    static TruncatedSeries monomial(int k, int bound, int dz, std::span<const int> x_exponents, const BigInt &c = 1);
    // z * x_i, 1 <= i <= k.
    static TruncatedSeries z_times_x(int k, int bound, int i);

    int k() const
    {
        return k_;
    }
    int bound() const
    {
        return bound_;
    }
    const std::map<Monomial, BigInt> &terms() const
    {
        return terms_;
    }
    BigInt coeff(const Monomial &m) const;
    bool is_zero() const
    {
        return terms_.empty();
    }
    // Coefficient of z^0.
    BigInt constant_term() const;

    // Every nonzero term has e_1 + ... + e_k == d_z.
    bool is_homogeneous() const;

    void add_term(const Monomial &m, const BigInt &c);

    TruncatedSeries &operator+=(const TruncatedSeries &rhs);
    TruncatedSeries &operator-=(const TruncatedSeries &rhs);

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    int k_;
    int bound_;
    std::map<Monomial, BigInt> terms_;
};

TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries series_sub(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b);
// Drops every term with d_z > bound and records the new bound (which may not exceed the old one).
TruncatedSeries series_truncate(const TruncatedSeries &a, int bound);

inline TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return series_add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return series_sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return series_mul(a, b);
}

// 1 / (1 - u) = sum_{m <= N} u^m. u must have no z^0 term.
TruncatedSeries geometric_inverse(const TruncatedSeries &u);

// prod_{i in residues} 1 / (1 - z x_i F).
TruncatedSeries residue_product(const TruncatedSeries &f, int first_residue, int last_residue);

// Generating function of k_{k-1} paths: N + 1 rounds of F <- prod_i 1/(1 - z x_i F) from F = 1.
TruncatedSeries solve_symmetric(int k, int bound);

// Generating function of k_t paths, prod_{i=k-t}^{k} 1/(1 - z x_i F_{k-1}).
TruncatedSeries solve_F(int k, int t, int bound);

// prod_i 1/(1 - z x_i F) - F; zero when F solves the k_{k-1} equation up to truncation.
TruncatedSeries fixed_point_residual(const TruncatedSeries &f);

// [z^n x^profile] series. Throws std::out_of_range if n exceeds the truncation bound.
BigInt coefficient(const TruncatedSeries &series, int n, const Profile &profile);

// Sets every x_i to 1; entry d is the z^d coefficient.
std::vector<BigInt> collapse_x(const TruncatedSeries &series);

} // namespace ktdyck

#endif
