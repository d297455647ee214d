#include <ktdyck/series.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

namespace ktdyck
{

namespace
{

void check_compatible(const TruncatedSeries &a, const TruncatedSeries &b)
{
    if (a.k() != b.k() || a.bound() != b.bound()) {
        throw std::invalid_argument("series dimension mismatch: (k=" + std::to_string(a.k()) + ", N="
                                    + std::to_string(a.bound()) + ") vs (k=" + std::to_string(b.k())
                                    + ", N=" + std::to_string(b.bound()) + ")");
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(int k, int bound) : k_(k), bound_(bound)
{
    if (k < 1 || bound < 0) {
        throw std::invalid_argument("series needs k >= 1 and N >= 0");
    }
}

TruncatedSeries TruncatedSeries::constant(int k, int bound, const BigInt &c)
{
    TruncatedSeries s(k, bound);
    s.add_term(Monomial(static_cast<std::size_t>(k + 1), 0), c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int k, int bound, int dz, std::span<const int> x_exponents, const BigInt &c)
{
    if (x_exponents.size() != static_cast<std::size_t>(k)) {
        throw std::invalid_argument("monomial needs k x-exponents");
    }
    TruncatedSeries s(k, bound);
    Monomial m{dz};
    m.insert(m.end(), x_exponents.begin(), x_exponents.end());
    s.add_term(m, c);
    return s;
}

TruncatedSeries TruncatedSeries::z_times_x(int k, int bound, int i)
{
    if (i < 1 || i > k) {
        throw std::out_of_range("x index outside 1..k");
    }
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(k, bound, 1, e);
}

BigInt TruncatedSeries::coeff(const Monomial &m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt TruncatedSeries::constant_term() const
{
    return coeff(Monomial(static_cast<std::size_t>(k_ + 1), 0));
}

bool TruncatedSeries::is_homogeneous() const
{
    for (const auto &[m, c] : terms_) {
        if (std::accumulate(m.begin() + 1, m.end(), 0) != m[0]) {
            return false;
        }
    }
    return true;
}

void TruncatedSeries::add_term(const Monomial &m, const BigInt &c)
{
    if (m.size() != static_cast<std::size_t>(k_ + 1)) {
        throw std::invalid_argument("monomial has wrong arity");
    }
    for (const int e : m) {
        if (e < 0) {
            throw std::invalid_argument("negative exponent");
        }
    }
    if (m[0] > bound_ || c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &rhs)
{
    check_compatible(*this, rhs);
    for (const auto &[m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &rhs)
{
    check_compatible(*this, rhs);
    for (const auto &[m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b)
{
    TruncatedSeries out = a;
    out += b;
    return out;
}

TruncatedSeries series_sub(const TruncatedSeries &a, const TruncatedSeries &b)
{
    TruncatedSeries out = a;
    out -= b;
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    check_compatible(a, b);
    TruncatedSeries out(a.k(), a.bound());
    Monomial m(static_cast<std::size_t>(a.k() + 1));
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            if (ma[0] + mb[0] > a.bound()) {
                continue;
            }
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = ma[i] + mb[i];
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

TruncatedSeries series_truncate(const TruncatedSeries &a, int bound)
{
    if (bound > a.bound()) {
        throw std::invalid_argument("cannot raise a truncation bound");
    }
    TruncatedSeries out(a.k(), bound);
    for (const auto &[m, c] : a.terms()) {
        out.add_term(m, c);
    }
    return out;
}

TruncatedSeries geometric_inverse(const TruncatedSeries &u)
{
    if (u.constant_term() != 0) {
        throw std::invalid_argument("geometric_inverse needs a series without constant term");
    }
    // Horner: g <- 1 + u g, N times, gives sum_{m=0}^{N} u^m.
    const auto one = TruncatedSeries::one(u.k(), u.bound());
    TruncatedSeries g = one;
    for (int round = 0; round < u.bound(); ++round) {
        g = one + u * g;
    }
    return g;
}

TruncatedSeries residue_product(const TruncatedSeries &f, int first_residue, int last_residue)
{
    TruncatedSeries out = TruncatedSeries::one(f.k(), f.bound());
    for (int i = first_residue; i <= last_residue; ++i) {
        out = out * geometric_inverse(TruncatedSeries::z_times_x(f.k(), f.bound(), i) * f);
    }
    return out;
}

TruncatedSeries solve_symmetric(int k, int bound)
{
    // Round m fixes the z^m coefficients, so N + 1 rounds settle everything up to z^N.
    TruncatedSeries f = TruncatedSeries::one(k, bound);
    for (int round = 0; round <= bound; ++round) {
        f = residue_product(f, 1, k);
    }
    return f;
}

TruncatedSeries solve_F(int k, int t, int bound)
{
    if (k < 1 || t < 0 || t >= k) {
        throw std::invalid_argument("solve_F needs 0 <= t < k");
    }
    const auto symmetric = solve_symmetric(k, bound);
    if (t == k - 1) {
        return symmetric;
    }
    return residue_product(symmetric, k - t, k);
}

TruncatedSeries fixed_point_residual(const TruncatedSeries &f)
{
    return residue_product(f, 1, f.k()) - f;
}

BigInt coefficient(const TruncatedSeries &series, int n, const Profile &profile)
{
    if (n > series.bound()) {
        throw std::out_of_range("z-degree " + std::to_string(n) + " exceeds truncation bound "
                                + std::to_string(series.bound()));
    }
    if (profile.k() != series.k()) {
        throw std::invalid_argument("profile arity does not match the series");
    }
    Monomial m{n};
    m.insert(m.end(), profile.values().begin(), profile.values().end());
    return series.coeff(m);
}

std::vector<BigInt> collapse_x(const TruncatedSeries &series)
{
    std::vector<BigInt> out(static_cast<std::size_t>(series.bound() + 1), 0);
    for (const auto &[m, c] : series.terms()) {
        out[static_cast<std::size_t>(m[0])] += c;
    }
    return out;
}

} // namespace ktdyck
