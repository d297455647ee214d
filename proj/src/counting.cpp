#include <ktdyck/counting.hpp>

#include <stdexcept>

namespace ktdyck
{

BigInt binomial(long n, long r)
{
    if (r < 0 || (n >= 0 && r > n)) {
        return 0;
    }
    if (n >= 0 && r > n - r) {
        r = n - r;
    }
    BigInt num = 1;
    BigInt den = 1;
    for (long j = 0; j < r; ++j) {
        num *= n - j;
        den *= j + 1;
    }
    return exact_div(num, den);
}

BigInt exact_div(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw std::logic_error("division by zero in exact arithmetic");
    }
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw std::logic_error("inexact division " + num.str() + " / " + den.str());
    }
    return q;
}

BigInt raney(const PathParams &params)
{
    check_params(params);
    const long k = params.k;
    const long t = params.t;
    const long n = params.n;
    const long top = (k + 1) * n + t + 1;
    return exact_div((t + 1) * binomial(top, n), BigInt(top));
}

BigInt count_profile(const PathParams &params, const Profile &profile)
{
    check_params(params);
    if (profile.k() != params.k || profile.total() != params.n) {
        throw std::invalid_argument("profile " + profile.to_string() + " does not match k="
                                    + std::to_string(params.k) + ", n=" + std::to_string(params.n));
    }
    const long n = params.n;
    if (n == 0) {
        return 1;
    }
    const int k = params.k;
    const int low = k - params.t;

    BigInt num = 0;
    for (int i = low; i <= k; ++i) {
        num += profile.at(i);
    }
    for (int i = low; i <= k; ++i) {
        num *= binomial(n + profile.at(i), profile.at(i));
    }
    for (int i = 1; i < low; ++i) {
        num *= binomial(n + profile.at(i) - 1, profile.at(i));
    }
    return exact_div(num, BigInt(n * (n + 1)));
}

namespace
{

void check_residue(const PathParams &params, int i)
{
    if (i < 1 || i > params.k) {
        throw std::out_of_range("residue " + std::to_string(i) + " outside 1.." + std::to_string(params.k));
    }
}

} // namespace

BigInt total_downsteps(const PathParams &params, int i)
{
    check_params(params);
    check_residue(params, i);
    const long k = params.k;
    const long t = params.t;
    const long n = params.n;
    const bool upper = i >= k - t;
    // The closed form has n - 1 in a denominator; the small cases come from direct enumeration.
    if (n == 0) {
        return 0;
    }
    if (n == 1) {
        return upper ? 1 : 0;
    }
    const BigInt c = binomial((k + 1) * n + t, n - 2);
    if (upper) {
        return exact_div(((t + 1) * n + k + 1) * c, BigInt(n - 1));
    }
    return (t + 1) * c;
}

BigRational avg_downsteps(const PathParams &params, int i)
{
    check_params(params);
    check_residue(params, i);
    if (params.n < 1) {
        throw std::invalid_argument("average needs n >= 1");
    }
    const long k = params.k;
    const long t = params.t;
    const long n = params.n;
    if (i >= k - t) {
        return BigRational(BigInt(n * ((t + 1) * n + k + 1)), BigInt((k * n + t + 2) * (t + 1)));
    }
    return BigRational(BigInt(n * (n - 1)), BigInt(k * n + t + 2));
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::Formula:
        return "formula";
    case Method::Oracle:
        return "oracle";
    case Method::Series:
        return "series";
    }
    return "unknown";
}

std::string CountReport::value_string() const
{
    return std::visit([](const auto &v) { return v.str(); }, value);
}

} // namespace ktdyck
