#ifndef KTDYCK_COUNTING_HPP
#define KTDYCK_COUNTING_HPP

#include <string>
#include <variant>

#include <ktdyck/path.hpp>
#include <ktdyck/types.hpp>

namespace ktdyck
{

// Falling-factorial binomial: zero for r < 0, and zero for 0 <= n < r.
BigInt binomial(long n, long r);

// Divides and throws std::logic_error if the remainder is nonzero.
BigInt exact_div(const BigInt &num, const BigInt &den);

// Total number of k_t-Dyck paths with n down-steps (Raney number).
BigInt raney(const PathParams &params);

/// Number of k_t-Dyck paths with the given down-step residue profile:
///
///   (a_{k-t} + ... + a_k) / (n (n+1))
///     * prod_{i=k-t}^{k} C(n + a_i, a_i) * prod_{i=1}^{k-t-1} C(n + a_i - 1, a_i)
///
/// The numerator is formed in full before the single exact division. n = 0
/// gives 1 (the empty path).
BigInt count_profile(const PathParams &params, const Profile &profile);

// Total number of down-steps at residue i over all paths; 1 <= i <= k.
BigInt total_downsteps(const PathParams &params, int i);

// total_downsteps / raney, reduced. Requires n >= 1.
BigRational avg_downsteps(const PathParams &params, int i);

enum class Method { Formula, Oracle, Series };

std::string to_string(Method m);

struct CountReport {
    std::variant<BigInt, BigRational> value;
    Method method = Method::Formula;

    std::string value_string() const;
};

} // namespace ktdyck

#endif
