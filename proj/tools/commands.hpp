#ifndef KTDYCK_TOOLS_COMMANDS_HPP
#define KTDYCK_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ktdyck::cli
{

// Exit codes: 0 success, 1 a cross-check disagreed or the input was rejected, 2 usage error.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

struct CountOptions {
    int k = 1;
    int t = 0;
    int n = 0;
    std::string profile;
    bool oracle = false;
    bool series = false;
};

struct TableOptions {
    int k = 1;
    int n = 0;
    std::optional<int> t;
    bool check_raney = false;
    bool oracle = false;
    std::string format = "json";
};

struct EnumerateOptions {
    int k = 1;
    int t = 0;
    int n = 0;
    std::optional<std::string> profile;
    std::string format = "text";
    bool sorted = false;
    unsigned threads = 1;
};

struct TotalsOptions {
    int k = 1;
    int t = 0;
    int n = 0;
    std::optional<int> i;
    bool oracle = false;
};

struct BijectionOptions {
    std::string name;
    std::string direction = "fwd";
    int i = 0;
    int j = 0;
    std::optional<std::string> input;
};

struct SeriesCheckOptions {
    int k = 1;
    int nmax = 0;
    std::optional<int> t;
};

struct OeisOptions {
    std::string id;
    int terms = 10;
};

int cmd_count(const CountOptions &opt, std::ostream &out, std::ostream &err);
int cmd_table(const TableOptions &opt, std::ostream &out, std::ostream &err);
int cmd_enumerate(const EnumerateOptions &opt, std::ostream &out, std::ostream &err);
int cmd_totals(const TotalsOptions &opt, std::ostream &out, std::ostream &err);
int cmd_averages(const TotalsOptions &opt, std::ostream &out, std::ostream &err);
int cmd_bijection(const BijectionOptions &opt, std::istream &in, std::ostream &out, std::ostream &err);
int cmd_series_check(const SeriesCheckOptions &opt, std::ostream &out, std::ostream &err);
int cmd_oeis(const OeisOptions &opt, std::ostream &out, std::ostream &err);

std::vector<std::string> oeis_ids();

// Parses argv (argv[0] is the program name) and dispatches to a subcommand.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace ktdyck::cli

#endif
