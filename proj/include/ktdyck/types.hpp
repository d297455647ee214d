#ifndef KTDYCK_TYPES_HPP
#define KTDYCK_TYPES_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace ktdyck
{

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// UP is (1, 1). DOWN is (1, -k) for a k_t path and (1, -1) for a Dyck path.
enum class Step : std::uint8_t { Up, Down };

} // namespace ktdyck

#endif
