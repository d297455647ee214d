#ifndef KTDYCK_JSON_IO_HPP
#define KTDYCK_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include <ktdyck/bijections.hpp>
#include <ktdyck/path.hpp>
#include <ktdyck/types.hpp>

namespace ktdyck
{

using Json = nlohmann::ordered_json;

// Counts go over the wire as decimal strings.
inline Json to_json_value(const BigInt &v)
{
    return v.str();
}
inline Json to_json_value(const BigRational &v)
{
    return v.str();
}

// {"k":..,"t":..,"n":..,"steps":"UUD.."}
Json path_to_json(const LatticePath &path);
// Missing "n" is inferred from the step count. Throws std::invalid_argument / PathError.
LatticePath path_from_json(const Json &j);

// Same shape as a path with k = 1, t = 0.
Json dyck_to_json(const DyckPath &d);
DyckPath dyck_from_json(const Json &j);

// {"steps":..,"mark_kind":"peak"|"valley","mark_pos":..}
Json marked_to_json(const MarkedDyck &m);
MarkedDyck marked_from_json(const Json &j);

// {"steps":..,"valley_pos":..,"step_mark":..}
Json double_marked_to_json(const DoubleMarkedDyck &m);
DoubleMarkedDyck double_marked_from_json(const Json &j);

} // namespace ktdyck

#endif
