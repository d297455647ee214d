#include <ktdyck/json_io.hpp>

#include <algorithm>
#include <string>

namespace ktdyck
{

namespace
{

long get_int(const Json &j, const char *key)
{
    if (!j.contains(key)) {
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    }
    const auto &v = j.at(key);
    if (v.is_number_integer()) {
        return v.get<long>();
    }
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        std::size_t used = 0;
        const long out = std::stol(s, &used);
        if (used == s.size()) {
            return out;
        }
    }
    throw std::invalid_argument(std::string("field '") + key + "' is not an integer");
}

std::vector<Step> get_steps(const Json &j)
{
    if (!j.contains("steps") || !j.at("steps").is_string()) {
        throw std::invalid_argument("missing string field 'steps'");
    }
    return parse_steps(j.at("steps").get<std::string>());
}

} // namespace

Json path_to_json(const LatticePath &path)
{
    return Json{{"k", path.k()}, {"t", path.t()}, {"n", path.n()}, {"steps", format_path(path)}};
}

LatticePath path_from_json(const Json &j)
{
    auto steps = get_steps(j);
    PathParams params;
    params.k = static_cast<int>(get_int(j, "k"));
    params.t = j.contains("t") ? static_cast<int>(get_int(j, "t")) : 0;
    if (j.contains("n")) {
        params.n = static_cast<int>(get_int(j, "n"));
    } else {
        params.n = static_cast<int>(std::count(steps.begin(), steps.end(), Step::Down));
    }
    return validate_path(std::move(steps), params);
}

Json dyck_to_json(const DyckPath &d)
{
    return Json{{"k", 1}, {"t", 0}, {"n", d.semilength()}, {"steps", format_steps(d.steps())}};
}

DyckPath dyck_from_json(const Json &j)
{
    return DyckPath::from_steps(get_steps(j));
}

Json marked_to_json(const MarkedDyck &m)
{
    return Json{{"steps", format_steps(m.base.steps())},
                {"mark_kind", m.kind == MarkKind::Peak ? "peak" : "valley"},
                {"mark_pos", m.mark_pos}};
}

MarkedDyck marked_from_json(const Json &j)
{
    MarkedDyck m;
    m.base = DyckPath::from_steps(get_steps(j));
    const auto kind = j.value("mark_kind", std::string("peak"));
    if (kind == "peak") {
        m.kind = MarkKind::Peak;
    } else if (kind == "valley") {
        m.kind = MarkKind::Valley;
    } else {
        throw std::invalid_argument("mark_kind must be 'peak' or 'valley'");
    }
    m.mark_pos = static_cast<std::size_t>(get_int(j, "mark_pos"));
    m.check();
    return m;
}

Json double_marked_to_json(const DoubleMarkedDyck &m)
{
    return Json{{"steps", format_steps(m.base.steps())}, {"valley_pos", m.valley_pos}, {"step_mark", m.step_mark}};
}

DoubleMarkedDyck double_marked_from_json(const Json &j)
{
    DoubleMarkedDyck m;
    m.base = DyckPath::from_steps(get_steps(j));
    m.valley_pos = static_cast<std::size_t>(get_int(j, "valley_pos"));
    m.step_mark = static_cast<std::size_t>(get_int(j, "step_mark"));
    m.check();
    return m;
}

} // namespace ktdyck
