#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include <ktdyck/bijections.hpp>
#include <ktdyck/counting.hpp>
#include <ktdyck/enumerate.hpp>
#include <ktdyck/json_io.hpp>
#include <ktdyck/series.hpp>

namespace ktdyck::cli
{

namespace
{

Json profile_json(const Profile &p)
{
    return Json(std::vector<int>(p.values().begin(), p.values().end()));
}

Profile parse_profile_for(const PathParams &params, const std::string &text)
{
    Profile p = Profile::parse(text);
    if (p.k() != params.k) {
        throw std::invalid_argument("profile must have exactly k=" + std::to_string(params.k) + " entries");
    }
    if (p.total() != params.n) {
        throw std::invalid_argument("profile entries must sum to n=" + std::to_string(params.n));
    }
    return p;
}

// Brute-force count of down-steps ending at residue i, summed over all paths.
BigInt oracle_total(const PathParams &params, int i)
{
    BigInt total = 0;
    for_each_path(params, [&](const LatticePath &p) {
        const auto h = p.heights();
        for (std::size_t m = 1; m <= p.size(); ++m) {
            if (p.step(m) == Step::Down && residue(h[m], params.k) == i) {
                ++total;
            }
        }
    });
    return total;
}

BigInt oracle_paths(const PathParams &params)
{
    BigInt count = 0;
    for_each_path(params, [&](const LatticePath &) { ++count; });
    return count;
}

std::vector<int> residues_for(const PathParams &params, const std::optional<int> &i)
{
    if (i) {
        if (*i < 1 || *i > params.k) {
            throw std::invalid_argument("-i must lie in 1..k");
        }
        return {*i};
    }
    std::vector<int> all;
    for (int r = 1; r <= params.k; ++r) {
        all.push_back(r);
    }
    return all;
}

Json params_json(const PathParams &p)
{
    return Json{{"k", p.k}, {"t", p.t}, {"n", p.n}};
}

} // namespace

int cmd_count(const CountOptions &opt, std::ostream &out, std::ostream &)
{
    const PathParams params{opt.k, opt.t, opt.n};
    check_params(params);
    const Profile profile = parse_profile_for(params, opt.profile);
    const BigInt formula = count_profile(params, profile);

    Json j = params_json(params);
    j["profile"] = profile_json(profile);
    j["formula"] = to_json_value(formula);
    bool agree = true;
    if (opt.oracle) {
        const BigInt oracle = oracle_count_profile(params, profile);
        j["oracle"] = to_json_value(oracle);
        agree = agree && oracle == formula;
    }
    if (opt.series) {
        const BigInt series = coefficient(solve_F(params.k, params.t, params.n), params.n, profile);
        j["series"] = to_json_value(series);
        agree = agree && series == formula;
    }
    if (opt.oracle || opt.series) {
        j["agree"] = agree;
    }
    out << j.dump() << '\n';
    return agree ? kOk : kCheckFailed;
}

int cmd_table(const TableOptions &opt, std::ostream &out, std::ostream &err)
{
    std::vector<int> ts;
    if (opt.t) {
        ts.push_back(*opt.t);
    } else {
        for (int t = 0; t < opt.k; ++t) {
            ts.push_back(t);
        }
    }
    if (opt.format != "json" && opt.format != "csv") {
        throw std::invalid_argument("--format must be json or csv");
    }
    if (opt.format == "csv") {
        out << "t";
        for (int i = 1; i <= opt.k; ++i) {
            out << ",a" << i;
        }
        out << ",count" << (opt.oracle ? ",oracle" : "") << '\n';
    }
    bool ok = true;
    for (const int t : ts) {
        const PathParams params{opt.k, t, opt.n};
        check_params(params);
        ProfileTable oracle;
        if (opt.oracle) {
            oracle = oracle_profile_table(params, default_thread_count());
        }
        BigInt row_sum = 0;
        bool row_agree = true;
        Json entries = Json::array();
        for (const auto &profile : compositions(opt.n, opt.k)) {
            const BigInt value = count_profile(params, profile);
            row_sum += value;
            Json e{{"profile", profile_json(profile)}, {"count", to_json_value(value)}};
            if (opt.oracle) {
                const BigInt &o = oracle.at(profile);
                e["oracle"] = to_json_value(o);
                row_agree = row_agree && o == value;
            }
            if (opt.format == "csv") {
                out << t;
                for (const int a : profile.values()) {
                    out << ',' << a;
                }
                out << ',' << value;
                if (opt.oracle) {
                    out << ',' << oracle.at(profile);
                }
                out << '\n';
            }
            entries.push_back(std::move(e));
        }
        const BigInt expected = raney(params);
        const bool raney_ok = row_sum == expected;
        if (opt.check_raney && !raney_ok) {
            err << "row t=" << t << " sums to " << row_sum << " but the Raney number is " << expected << '\n';
            ok = false;
        }
        if (!row_agree) {
            err << "row t=" << t << ": formula and oracle disagree\n";
            ok = false;
        }
        if (opt.format == "json") {
            Json row = params_json(params);
            row["entries"] = std::move(entries);
            row["row_sum"] = to_json_value(row_sum);
            row["raney"] = to_json_value(expected);
            if (opt.check_raney) {
                row["raney_ok"] = raney_ok;
            }
            if (opt.oracle) {
                row["agree"] = row_agree;
            }
            out << row.dump() << '\n';
        }
    }
    return ok ? kOk : kCheckFailed;
}

int cmd_enumerate(const EnumerateOptions &opt, std::ostream &out, std::ostream &)
{
    const PathParams params{opt.k, opt.t, opt.n};
    check_params(params);
    if (opt.format != "text" && opt.format != "json") {
        throw std::invalid_argument("--format must be text or json");
    }
    std::optional<Profile> filter;
    if (opt.profile) {
        filter = parse_profile_for(params, *opt.profile);
    }
    const auto emit = [&](const LatticePath &p) {
        if (filter && height_profile(p) != *filter) {
            return;
        }
        if (opt.format == "json") {
            Json j = path_to_json(p);
            j["profile"] = profile_json(height_profile(p));
            out << j.dump() << '\n';
        } else {
            out << format_path(p) << '\n';
        }
    };
    if (opt.threads <= 1 && !opt.sorted) {
        for_each_path(params, emit);
        return kOk;
    }
    auto paths = enumerate_paths_parallel(params, std::max(1U, opt.threads));
    if (opt.sorted) {
        std::sort(paths.begin(), paths.end());
    }
    for (const auto &p : paths) {
        emit(p);
    }
    return kOk;
}

int cmd_totals(const TotalsOptions &opt, std::ostream &out, std::ostream &)
{
    const PathParams params{opt.k, opt.t, opt.n};
    check_params(params);
    bool agree = true;
    for (const int i : residues_for(params, opt.i)) {
        const BigInt formula = total_downsteps(params, i);
        Json j = params_json(params);
        j["i"] = i;
        j["formula"] = to_json_value(formula);
        if (opt.oracle) {
            const BigInt oracle = oracle_total(params, i);
            j["oracle"] = to_json_value(oracle);
            j["agree"] = oracle == formula;
            agree = agree && oracle == formula;
        }
        out << j.dump() << '\n';
    }
    return agree ? kOk : kCheckFailed;
}

int cmd_averages(const TotalsOptions &opt, std::ostream &out, std::ostream &)
{
    const PathParams params{opt.k, opt.t, opt.n};
    check_params(params);
    bool agree = true;
    const BigInt paths = opt.oracle ? oracle_paths(params) : BigInt(0);
    for (const int i : residues_for(params, opt.i)) {
        const BigRational formula = avg_downsteps(params, i);
        Json j = params_json(params);
        j["i"] = i;
        j["formula"] = to_json_value(formula);
        if (opt.oracle) {
            const BigRational oracle(oracle_total(params, i), paths);
            j["oracle"] = to_json_value(oracle);
            j["agree"] = oracle == formula;
            agree = agree && oracle == formula;
        }
        out << j.dump() << '\n';
    }
    return agree ? kOk : kCheckFailed;
}

int cmd_bijection(const BijectionOptions &opt, std::istream &in, std::ostream &out, std::ostream &err)
{
    const bool fwd = opt.direction == "fwd";
    if (!fwd && opt.direction != "rev") {
        throw std::invalid_argument("--direction must be fwd or rev");
    }
    using Handler = std::function<Json(const Json &)>;
    const std::map<std::string, std::pair<Handler, Handler>> handlers = {
        {"shift-exchange",
         {[&](const Json &j) { return path_to_json(shift_exchange(path_from_json(j), opt.i, opt.j)); },
          [&](const Json &j) { return path_to_json(shift_exchange(path_from_json(j), opt.i, opt.j)); }}},
        {"lift",
         {[](const Json &j) { return path_to_json(lift(path_from_json(j))); },
          [](const Json &j) { return path_to_json(lower(path_from_json(j))); }}},
        {"lower",
         {[](const Json &j) { return path_to_json(lower(path_from_json(j))); },
          [](const Json &j) { return path_to_json(lift(path_from_json(j))); }}},
        {"peak",
         {[](const Json &j) { return marked_to_json(to_marked_peak(path_from_json(j))); },
          [](const Json &j) { return path_to_json(from_marked_peak(marked_from_json(j))); }}},
        {"valley",
         {[](const Json &j) { return marked_to_json(to_marked_valley(path_from_json(j))); },
          [](const Json &j) {
              Json m = j;
              m["mark_kind"] = "valley";
              return path_to_json(from_marked_valley(marked_from_json(m)));
          }}},
        {"catalan",
         {[](const Json &j) { return dyck_to_json(to_catalan(path_from_json(j))); },
          [](const Json &j) { return path_to_json(from_catalan(dyck_from_json(j))); }}},
        {"double-marked",
         {[](const Json &j) { return double_marked_to_json(to_double_marked(path_from_json(j))); },
          [](const Json &j) { return path_to_json(from_double_marked(double_marked_from_json(j))); }}},
        {"valley-index",
         {[](const Json &j) {
              const auto d = dyck_from_json(j);
              return Json{{"steps", format_steps(d.steps())},
                          {"valley_index_sum", to_json_value(BigInt(valley_index_sum(d)))}};
          },
          nullptr}},
    };
    const auto it = handlers.find(opt.name);
    if (it == handlers.end()) {
        throw std::invalid_argument("unknown bijection '" + opt.name + "'");
    }
    const Handler &handler = fwd ? it->second.first : it->second.second;
    if (!handler) {
        throw std::invalid_argument("'" + opt.name + "' has no reverse direction");
    }

    std::vector<std::string> lines;
    if (opt.input) {
        lines.push_back(*opt.input);
    } else {
        for (std::string line; std::getline(in, line);) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                lines.push_back(line);
            }
        }
    }
    int status = kOk;
    for (const auto &line : lines) {
        try {
            out << handler(Json::parse(line)).dump() << '\n';
        } catch (const std::exception &e) {
            err << "error: " << e.what() << '\n';
            status = kCheckFailed;
        }
    }
    return status;
}

int cmd_series_check(const SeriesCheckOptions &opt, std::ostream &out, std::ostream &)
{
    std::vector<int> ts;
    if (opt.t) {
        ts.push_back(*opt.t);
    } else {
        for (int t = 0; t < opt.k; ++t) {
            ts.push_back(t);
        }
    }
    if (opt.nmax < 0) {
        throw std::invalid_argument("--nmax must be non-negative");
    }
    std::size_t checked = 0;
    std::size_t discrepancies = 0;
    BigInt max_gap = 0;
    for (const int t : ts) {
        check_params(PathParams{opt.k, t, 0});
        const auto series = solve_F(opt.k, t, opt.nmax);
        const auto totals = collapse_x(series);
        for (int n = 0; n <= opt.nmax; ++n) {
            const PathParams params{opt.k, t, n};
            for (const auto &profile : compositions(n, opt.k)) {
                const BigInt gap = abs(coefficient(series, n, profile) - count_profile(params, profile));
                ++checked;
                if (gap != 0) {
                    ++discrepancies;
                    max_gap = std::max(max_gap, gap);
                }
            }
            const BigInt gap = abs(totals[static_cast<std::size_t>(n)] - raney(params));
            ++checked;
            if (gap != 0) {
                ++discrepancies;
                max_gap = std::max(max_gap, gap);
            }
        }
    }
    Json j{{"k", opt.k},
           {"nmax", opt.nmax},
           {"checked", checked},
           {"discrepancies", discrepancies},
           {"max_discrepancy", to_json_value(max_gap)},
           {"summary", std::to_string(discrepancies) + " discrepancies"}};
    out << j.dump() << '\n';
    return discrepancies == 0 ? kOk : kCheckFailed;
}

namespace
{

struct SequenceSpec {
    int k;
    int t;
    int n_start;
    std::string pattern;
    // Path parameter and profile for the sequence index m; nullopt when the pattern is negative.
    std::function<std::optional<std::pair<int, std::vector<int>>>(int)> at;
};

const std::map<std::string, SequenceSpec> &sequences()
{
    static const std::map<std::string, SequenceSpec> table = {
        {"A000108",
         {2, 0, 1, "(n-1,1)",
          [](int n) -> std::optional<std::pair<int, std::vector<int>>> {
              if (n < 1) {
                  return std::nullopt;
              }
              return std::pair{n, std::vector<int>{n - 1, 1}};
          }}},
        {"A001700",
         {2, 1, 1, "(1,n-1)",
          [](int n) -> std::optional<std::pair<int, std::vector<int>>> {
              if (n < 1) {
                  return std::nullopt;
              }
              return std::pair{n, std::vector<int>{1, n - 1}};
          }}},
        {"A002054",
         {2, 0, 1, "(1,n-1)",
          [](int n) -> std::optional<std::pair<int, std::vector<int>>> {
              if (n < 1) {
                  return std::nullopt;
              }
              return std::pair{n, std::vector<int>{1, n - 1}};
          }}},
        {"A002740",
         {2, 0, 0, "(2,n-2)",
          [](int n) -> std::optional<std::pair<int, std::vector<int>>> {
              if (n < 2) {
                  return std::nullopt;
              }
              return std::pair{n, std::vector<int>{2, n - 2}};
          }}},
        {"A110609",
         {3, 1, 1, "(1,1,n-2)",
          [](int n) -> std::optional<std::pair<int, std::vector<int>>> {
              if (n < 2) {
                  return std::nullopt;
              }
              return std::pair{n, std::vector<int>{1, 1, n - 2}};
          }}},
        {"A188681",
         {2, 1, 0, "(n,n)",
          [](int n) -> std::optional<std::pair<int, std::vector<int>>> {
              if (n < 0) {
                  return std::nullopt;
              }
              return std::pair{2 * n, std::vector<int>{n, n}};
          }}},
    };
    return table;
}

} // namespace

std::vector<std::string> oeis_ids()
{
    std::vector<std::string> ids;
    for (const auto &[id, spec] : sequences()) {
        ids.push_back(id);
    }
    return ids;
}

int cmd_oeis(const OeisOptions &opt, std::ostream &out, std::ostream &)
{
    const auto it = sequences().find(opt.id);
    if (it == sequences().end()) {
        throw std::invalid_argument("unknown sequence id '" + opt.id + "'");
    }
    if (opt.terms < 0) {
        throw std::invalid_argument("--terms must be non-negative");
    }
    const SequenceSpec &spec = it->second;
    Json terms = Json::array();
    for (int m = spec.n_start; m < spec.n_start + opt.terms; ++m) {
        const auto point = spec.at(m);
        if (!point) {
            terms.push_back("0");
            continue;
        }
        const auto &[n, profile] = *point;
        terms.push_back(to_json_value(count_profile(PathParams{spec.k, spec.t, n}, Profile(profile))));
    }
    Json j{{"id", opt.id},
           {"k", spec.k},
           {"t", spec.t},
           {"profile", spec.pattern},
           {"n_start", spec.n_start},
           {"terms", std::move(terms)}};
    out << j.dump() << '\n';
    return kOk;
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact enumeration of k_t-Dyck paths by down-step height residues"};
    app.require_subcommand(1);

    CountOptions count;
    auto *count_cmd = app.add_subcommand("count", "Paths with a given residue profile");
    count_cmd->add_option("-k", count.k, "Down-step size")->required();
    count_cmd->add_option("-t", count.t, "Floor depth")->required();
    count_cmd->add_option("-n", count.n, "Number of down-steps")->required();
    count_cmd->add_option("-p,--profile", count.profile, "Comma-separated a_1,...,a_k")->required();
    count_cmd->add_flag("--oracle", count.oracle, "Cross-check by exhaustive enumeration");
    count_cmd->add_flag("--series", count.series, "Cross-check against the series solution");

    TableOptions table;
    auto *table_cmd = app.add_subcommand("table", "All profile counts for each t");
    table_cmd->add_option("-k", table.k)->required();
    table_cmd->add_option("-n", table.n)->required();
    table_cmd->add_option("-t", table.t, "Single row instead of t = 0..k-1");
    table_cmd->add_flag("--check-raney", table.check_raney, "Require each row to sum to the Raney number");
    table_cmd->add_flag("--oracle", table.oracle, "Cross-check every entry by enumeration");
    table_cmd->add_option("--format", table.format, "json or csv");

    EnumerateOptions enumerate;
    enumerate.threads = 1;
    auto *enum_cmd = app.add_subcommand("enumerate", "Stream all paths");
    enum_cmd->add_option("-k", enumerate.k)->required();
    enum_cmd->add_option("-t", enumerate.t)->required();
    enum_cmd->add_option("-n", enumerate.n)->required();
    enum_cmd->add_option("-p,--profile", enumerate.profile, "Only paths with this profile");
    enum_cmd->add_option("--format", enumerate.format, "text or json");
    enum_cmd->add_flag("--sorted", enumerate.sorted, "Lexicographic output order");
    std::optional<unsigned> threads;
    enum_cmd->add_option("--threads", threads, "Worker threads (default: KT_DYCK_THREADS or 1)");

    TotalsOptions totals;
    auto *totals_cmd = app.add_subcommand("totals", "Total down-steps per residue over all paths");
    TotalsOptions averages;
    auto *avg_cmd = app.add_subcommand("averages", "Average down-steps per residue");
    for (auto [cmd, opt] : {std::pair{totals_cmd, &totals}, std::pair{avg_cmd, &averages}}) {
        cmd->add_option("-k", opt->k)->required();
        cmd->add_option("-t", opt->t)->required();
        cmd->add_option("-n", opt->n)->required();
        cmd->add_option("-i", opt->i, "Residue (default: all)");
        cmd->add_flag("--oracle", opt->oracle, "Cross-check by enumeration");
    }

    BijectionOptions bij;
    auto *bij_cmd = app.add_subcommand("bijection", "Apply a bijection to JSON objects read from stdin");
    bij_cmd->add_option("name,--name", bij.name)
        ->required()
        ->check(CLI::IsMember(
            {"shift-exchange", "lift", "lower", "peak", "valley", "catalan", "valley-index", "double-marked"}));
    bij_cmd->add_option("--direction", bij.direction)->check(CLI::IsMember({"fwd", "rev"}));
    bij_cmd->add_option("-i", bij.i, "First residue (shift-exchange)");
    bij_cmd->add_option("-j", bij.j, "Second residue (shift-exchange)");
    bij_cmd->add_option("--input", bij.input, "Single JSON object instead of stdin");

    SeriesCheckOptions series;
    auto *series_cmd = app.add_subcommand("series-check", "Compare series coefficients with the closed form");
    series_cmd->add_option("-k", series.k)->required();
    series_cmd->add_option("--nmax", series.nmax)->required();
    series_cmd->add_option("-t", series.t);

    OeisOptions oeis;
    auto *oeis_cmd = app.add_subcommand("oeis", "Terms of a related OEIS sequence");
    oeis_cmd->add_option("id,--id", oeis.id)->required()->check(CLI::IsMember(oeis_ids()));
    oeis_cmd->add_option("--terms", oeis.terms);

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (count_cmd->parsed()) {
            return cmd_count(count, out, err);
        }
        if (table_cmd->parsed()) {
            return cmd_table(table, out, err);
        }
        if (enum_cmd->parsed()) {
            enumerate.threads = threads ? *threads : default_thread_count();
            if (!threads && !std::getenv("KT_DYCK_THREADS")) {
                enumerate.threads = 1;
            }
            return cmd_enumerate(enumerate, out, err);
        }
        if (totals_cmd->parsed()) {
            return cmd_totals(totals, out, err);
        }
        if (avg_cmd->parsed()) {
            return cmd_averages(averages, out, err);
        }
        if (bij_cmd->parsed()) {
            return cmd_bijection(bij, in, out, err);
        }
        if (series_cmd->parsed()) {
            return cmd_series_check(series, out, err);
        }
        if (oeis_cmd->parsed()) {
            return cmd_oeis(oeis, out, err);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}

} // namespace ktdyck::cli
