#include <ktdyck/bijections.hpp>

#include <algorithm>
#include <optional>

#include <ktdyck/enumerate.hpp>

namespace ktdyck
{

namespace
{

// A step carrying the markings used by the marked-path bijections.
struct Cell {
    Step step = Step::Up;
    bool mark = false;
    bool valley = false;
    bool odd = false;
};

std::vector<Cell> to_cells(std::span<const Step> steps)
{
    std::vector<Cell> cells;
    cells.reserve(steps.size());
    for (const Step s : steps) {
        cells.push_back(Cell{s});
    }
    return cells;
}

std::vector<Step> to_steps(std::span<const Cell> cells)
{
    std::vector<Step> steps;
    steps.reserve(cells.size());
    for (const auto &c : cells) {
        steps.push_back(c.step);
    }
    return steps;
}

std::vector<long> cell_heights(std::span<const Cell> cells, int k)
{
    return prefix_heights(to_steps(cells), k);
}

struct Reduced {
    DyckPath dyck;
    std::size_t mark = 0;   // 1-based, 0 if none
    std::size_t valley = 0; // 1-based, 0 if none
};

// 2_0 path whose down-steps all end at even heights -> Dyck path: each pair of
// consecutive up-steps becomes one up-step and each (1,-2) becomes (1,-1).
Reduced reduce(std::span<const Cell> cells)
{
    std::vector<Step> steps;
    Reduced out;
    std::optional<bool> pending;
    for (const auto &c : cells) {
        if (c.step == Step::Up) {
            if (!pending) {
                pending = c.mark;
                continue;
            }
            steps.push_back(Step::Up);
            if (*pending || c.mark) {
                out.mark = steps.size();
            }
            pending.reset();
        } else {
            if (pending) {
                throw std::logic_error("odd up-run while reducing");
            }
            steps.push_back(Step::Down);
            if (c.mark) {
                out.mark = steps.size();
            }
            if (c.valley) {
                out.valley = steps.size();
            }
        }
    }
    if (pending) {
        throw std::logic_error("odd up-run while reducing");
    }
    out.dyck = DyckPath::from_steps(std::move(steps));
    return out;
}

// Inverse of reduce: up-step -> two up-steps (the second carries the mark), down-step -> (1,-2).
std::vector<Cell> expand(const DyckPath &dyck, std::size_t mark, std::size_t valley)
{
    std::vector<Cell> cells;
    cells.reserve(dyck.size() * 3 / 2 + 3);
    for (std::size_t idx = 1; idx <= dyck.size(); ++idx) {
        if (dyck.step(idx) == Step::Up) {
            cells.push_back(Cell{Step::Up});
            cells.push_back(Cell{Step::Up, idx == mark});
        } else {
            cells.push_back(Cell{Step::Down, idx == mark, idx == valley});
        }
    }
    return cells;
}

void require_profile(const LatticePath &path, int k, int t, const std::vector<int> &expected, const char *what)
{
    if (path.k() != k || path.t() != t) {
        throw BijectionError(std::string(what) + ": expected a " + std::to_string(k) + "_" + std::to_string(t)
                             + " path");
    }
    const Profile want(expected);
    const Profile got = height_profile(path);
    if (got != want) {
        throw BijectionError(std::string(what) + ": expected profile (" + want.to_string() + "), got ("
                             + got.to_string() + ")");
    }
}

// 0-based positions of down-steps at residue r.
std::vector<std::size_t> downs_at_residue(std::span<const Cell> cells, int k, int r)
{
    std::vector<std::size_t> out;
    long h = 0;
    for (std::size_t m = 0; m < cells.size(); ++m) {
        h += cells[m].step == Step::Up ? 1 : -k;
        if (cells[m].step == Step::Down && residue(h, k) == r) {
            out.push_back(m);
        }
    }
    return out;
}

std::size_t only_marked(std::span<const Cell> cells)
{
    const auto it = std::find_if(cells.begin(), cells.end(), [](const Cell &c) { return c.mark; });
    if (it == cells.end()) {
        throw std::logic_error("no marked step");
    }
    return static_cast<std::size_t>(it - cells.begin());
}

LatticePath to_path(std::span<const Cell> cells, PathParams params, const char *what)
{
    try {
        return validate_path(to_steps(cells), params);
    } catch (const PathError &e) {
        throw BijectionError(std::string(what) + ": result is not a valid path: " + e.what());
    }
}

} // namespace

DyckPath DyckPath::from_steps(std::vector<Step> steps)
{
    long h = 0;
    for (std::size_t m = 0; m < steps.size(); ++m) {
        h += steps[m] == Step::Up ? 1 : -1;
        if (h < 0) {
            throw std::invalid_argument("Dyck path goes below the x-axis at step " + std::to_string(m + 1));
        }
    }
    if (h != 0) {
        throw std::invalid_argument("Dyck path ends at height " + std::to_string(h));
    }
    return DyckPath(std::move(steps));
}

std::vector<std::size_t> peaks(const DyckPath &d)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 2; i <= d.size(); ++i) {
        if (d.step(i) == Step::Down && d.step(i - 1) == Step::Up) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> valleys(const DyckPath &d)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (d.step(i) == Step::Down && d.step(i + 1) == Step::Up) {
            out.push_back(i);
        }
    }
    return out;
}

std::size_t valley_index_sum(const DyckPath &d)
{
    std::size_t sum = 0;
    for (const auto v : valleys(d)) {
        sum += v;
    }
    return sum;
}

std::vector<DyckPath> enumerate_dyck(int semilength)
{
    std::vector<DyckPath> out;
    for_each_path(PathParams{1, 0, semilength}, [&](const LatticePath &p) {
        out.push_back(DyckPath::from_steps(std::vector<Step>(p.steps().begin(), p.steps().end())));
    });
    return out;
}

void MarkedDyck::check() const
{
    if (mark_pos < 1 || mark_pos > base.size() || base.step(mark_pos) != Step::Down) {
        throw std::invalid_argument("mark must point at a down-step");
    }
    if (kind == MarkKind::Peak && (mark_pos == 1 || base.step(mark_pos - 1) != Step::Up)) {
        throw std::invalid_argument("marked down-step is not at a peak");
    }
    if (kind == MarkKind::Valley && (mark_pos == base.size() || base.step(mark_pos + 1) != Step::Up)) {
        throw std::invalid_argument("marked down-step is not at a valley");
    }
}

void DoubleMarkedDyck::check() const
{
    if (valley_pos < 1 || valley_pos >= base.size() || base.step(valley_pos) != Step::Down
        || base.step(valley_pos + 1) != Step::Up) {
        throw std::invalid_argument("valley_pos must be the down-step of a valley");
    }
    if (step_mark < 1 || step_mark > valley_pos) {
        throw std::invalid_argument("step_mark must lie in 1..valley_pos");
    }
}

LatticePath shift_exchange(const LatticePath &path, int i, int j)
{
    const int k = path.k();
    if (path.t() != k - 1) {
        throw BijectionError("shift_exchange requires t = k - 1");
    }
    if (i < 1 || i > k || j < 1 || j > k) {
        throw BijectionError("residues must lie in 1..k");
    }
    if (i == j) {
        return path;
    }
    // A down-step's residue depends only on the number u of up-steps before it
    // (its endpoint height is u - k * #downs), so the path is the sorted list of u.
    std::vector<long> ups_before;
    long u = 0;
    for (const Step s : path.steps()) {
        if (s == Step::Up) {
            ++u;
        } else {
            ups_before.push_back(u);
        }
    }
    const long shift = j - i; // residue i moves by +shift, residue j by -shift
    for (auto &v : ups_before) {
        const int r = residue(v, k);
        if (r == i) {
            v += shift;
        } else if (r == j) {
            v -= shift;
        }
    }
    std::sort(ups_before.begin(), ups_before.end());
    const long total_ups = static_cast<long>(k) * path.n();
    if (!ups_before.empty() && (ups_before.front() < 0 || ups_before.back() > total_ups)) {
        throw std::logic_error("shift_exchange moved a down-step off the path");
    }
    std::vector<Step> steps;
    steps.reserve(path.size());
    long placed = 0;
    for (const long v : ups_before) {
        steps.insert(steps.end(), static_cast<std::size_t>(v - placed), Step::Up);
        steps.push_back(Step::Down);
        placed = v;
    }
    steps.insert(steps.end(), static_cast<std::size_t>(total_ups - placed), Step::Up);
    try {
        return validate_path(std::move(steps), path.params());
    } catch (const PathError &e) {
        throw std::logic_error(std::string("shift_exchange produced an invalid path: ") + e.what());
    }
}

LatticePath lift(const LatticePath &path)
{
    const int k = path.k();
    std::vector<Step> steps;
    steps.reserve(path.size() + static_cast<std::size_t>(path.n()));
    long h = 0;
    for (const Step s : path.steps()) {
        if (s == Step::Up) {
            if (((h % k) + k) % k == 0) {
                steps.push_back(Step::Up);
            }
            steps.push_back(Step::Up);
            ++h;
        } else {
            steps.push_back(Step::Down);
            h -= k;
        }
    }
    try {
        return validate_path(std::move(steps), PathParams{k + 1, path.t(), path.n()});
    } catch (const PathError &e) {
        throw std::logic_error(std::string("lift produced an invalid path: ") + e.what());
    }
}

LatticePath lower(const LatticePath &path)
{
    const int k = path.k() - 1;
    if (k < 1 || path.t() >= k) {
        throw BijectionError("lower needs a (k+1)_t path with t < k");
    }
    if (height_profile(path).at(1) != 0) {
        throw BijectionError("lower requires a_1 = 0");
    }
    std::vector<Step> steps;
    long h = 0; // height in the lowered path
    const auto src = path.steps();
    for (std::size_t m = 0; m < src.size(); ++m) {
        if (src[m] == Step::Down) {
            steps.push_back(Step::Down);
            h -= k;
            continue;
        }
        if (((h % k) + k) % k == 0) {
            if (m + 1 >= src.size() || src[m + 1] != Step::Up) {
                throw BijectionError("path is not in the image of lift (step " + std::to_string(m + 1) + ")");
            }
            ++m;
        }
        steps.push_back(Step::Up);
        ++h;
    }
    LatticePath out;
    try {
        out = validate_path(std::move(steps), PathParams{k, path.t(), path.n()});
    } catch (const PathError &e) {
        throw BijectionError(std::string("path is not in the image of lift: ") + e.what());
    }
    if (lift(out) != path) {
        throw BijectionError("path is not in the image of lift");
    }
    return out;
}

MarkedDyck to_marked_peak(const LatticePath &path)
{
    const int n = path.n();
    if (n < 1) {
        throw BijectionError("peak bijection needs n >= 1");
    }
    require_profile(path, 2, 1, {1, n - 1}, "peak bijection");
    auto cells = to_cells(path.steps());
    const std::size_t p = downs_at_residue(cells, 2, 1).front();
    if (p == 0 || p + 1 >= cells.size() || cells[p - 1].step != Step::Up || cells[p + 1].step != Step::Up) {
        throw std::logic_error("odd down-step is not surrounded by up-steps");
    }
    // up-down-up -> up-up-down, marking the down-step.
    std::swap(cells[p], cells[p + 1]);
    cells[p + 1].mark = true;
    const auto r = reduce(cells);
    MarkedDyck out{r.dyck, MarkKind::Peak, r.mark};
    out.check();
    return out;
}

LatticePath from_marked_peak(const MarkedDyck &marked)
{
    if (marked.kind != MarkKind::Peak) {
        throw BijectionError("expected a marked peak");
    }
    marked.check();
    auto cells = expand(marked.base, marked.mark_pos, 0);
    const std::size_t q = only_marked(cells);
    std::swap(cells[q - 1], cells[q]);
    cells[q - 1].mark = false;
    return to_path(cells, PathParams{2, 1, marked.base.semilength()}, "peak bijection");
}

MarkedDyck to_marked_valley(const LatticePath &path)
{
    const int n = path.n();
    if (n < 1) {
        throw BijectionError("valley bijection needs n >= 1");
    }
    require_profile(path, 2, 0, {1, n - 1}, "valley bijection");
    auto cells = to_cells(path.steps());
    const std::size_t p = downs_at_residue(cells, 2, 1).front();
    if (p == 0 || cells[p - 1].step != Step::Up) {
        throw std::logic_error("odd down-step is not preceded by an up-step");
    }
    // Shift the odd down-step one up-step left, creating down-up-up.
    std::swap(cells[p - 1], cells[p]);
    cells[p - 1].mark = true;
    const auto r = reduce(cells);
    MarkedDyck out{r.dyck, MarkKind::Valley, r.mark};
    out.check();
    return out;
}

LatticePath from_marked_valley(const MarkedDyck &marked)
{
    if (marked.kind != MarkKind::Valley) {
        throw BijectionError("expected a marked valley");
    }
    marked.check();
    auto cells = expand(marked.base, marked.mark_pos, 0);
    const std::size_t q = only_marked(cells);
    std::swap(cells[q], cells[q + 1]);
    cells[q + 1].mark = false;
    return to_path(cells, PathParams{2, 0, marked.base.semilength()}, "valley bijection");
}

DyckPath to_catalan(const LatticePath &path)
{
    const int n = path.n();
    if (n < 1) {
        throw BijectionError("Catalan bijection needs n >= 1");
    }
    require_profile(path, 2, 0, {n - 1, 1}, "Catalan bijection");
    const auto steps = path.steps();
    const std::size_t len = steps.size();
    if (steps[0] != Step::Up || steps[len - 2] != Step::Up || steps[len - 1] != Step::Down) {
        throw std::logic_error("Catalan bijection: unexpected path ends");
    }
    const auto cells = to_cells(steps.subspan(1, len - 3));
    return reduce(cells).dyck;
}

LatticePath from_catalan(const DyckPath &dyck)
{
    auto cells = expand(dyck, 0, 0);
    cells.insert(cells.begin(), Cell{Step::Up});
    cells.push_back(Cell{Step::Up});
    cells.push_back(Cell{Step::Down});
    return to_path(cells, PathParams{2, 0, dyck.semilength() + 1}, "Catalan bijection");
}

std::string to_string(DoubleMarkedCase c)
{
    switch (c) {
    case DoubleMarkedCase::Separated:
        return "separated";
    case DoubleMarkedCase::AdjacentNoReturn:
        return "adjacent-no-return";
    case DoubleMarkedCase::AdjacentWithReturn:
        return "adjacent-with-return";
    }
    return "unknown";
}

namespace
{

struct DoubleForward {
    DoubleMarkedCase which;
    DoubleMarkedDyck image;
};

DoubleForward double_forward(const LatticePath &path)
{
    const int n = path.n();
    if (n < 2) {
        throw BijectionError("double-marked bijection needs n >= 2");
    }
    require_profile(path, 2, 0, {2, n - 2}, "double-marked bijection");
    auto cells = to_cells(path.steps());
    const auto odd = downs_at_residue(cells, 2, 1);
    std::size_t left = odd[0];
    std::size_t right = odd[1];
    for (const auto p : odd) {
        cells[p].odd = true;
    }
    const auto ups_between = std::count_if(cells.begin() + static_cast<std::ptrdiff_t>(left),
                                           cells.begin() + static_cast<std::ptrdiff_t>(right),
                                           [](const Cell &c) { return c.step == Step::Up; });
    if (ups_between == 1) {
        throw std::logic_error("odd down-steps separated by exactly one up-step");
    }
    const bool separated = ups_between >= 2;
    if (separated && right != left + 1 && cells[right - 1].step != Step::Up) {
        throw std::logic_error("odd down-step is not preceded by an up-step");
    }
    if (!separated && right != left + 1) {
        throw std::logic_error("odd down-steps with no up-step between them are not adjacent");
    }
    if (left == 0 || cells[left - 1].step != Step::Up) {
        throw std::logic_error("odd down-step is not preceded by an up-step");
    }

    // (1) shift left by one up-step: the rightmost odd down-step (separated)
    // or both (adjacent).
    if (separated) {
        std::swap(cells[right - 1], cells[right]);
        --right;
    } else {
        std::rotate(cells.begin() + static_cast<std::ptrdiff_t>(left - 1),
                    cells.begin() + static_cast<std::ptrdiff_t>(left),
                    cells.begin() + static_cast<std::ptrdiff_t>(right + 1));
        --left;
        --right;
    }
    // (2) the rightmost one now ends a valley.
    cells[right].odd = false;
    cells[right].valley = true;

    DoubleMarkedCase which = DoubleMarkedCase::Separated;
    if (separated) {
        // (3) drop up-down-up around the leftmost odd down-step; mark the step before it.
        if (left < 2 || cells[left + 1].step != Step::Up) {
            throw std::logic_error("separated case: odd down-step is not inside up-down-up");
        }
        cells[left - 2].mark = true;
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(left - 1),
                    cells.begin() + static_cast<std::ptrdiff_t>(left + 2));
    } else {
        // (4) returns strictly before the leftmost odd down-step.
        const auto h = cell_heights(cells, 2);
        std::optional<std::size_t> last_return;
        for (std::size_t m = 0; m < left; ++m) {
            if (h[m + 1] == 0) {
                last_return = m;
            }
        }
        if (!last_return) {
            // (4a) drop the first two up-steps and the leftmost odd down-step; mark the valley's down-step.
            which = DoubleMarkedCase::AdjacentNoReturn;
            if (cells[0].step != Step::Up || cells[1].step != Step::Up) {
                throw std::logic_error("adjacent case: path does not open with two up-steps");
            }
            cells[right].mark = true;
            cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(left));
            cells.erase(cells.begin(), cells.begin() + 2);
        } else {
            // (4b) mark the down-step ending at the last return, drop the two up-steps
            // after it and the leftmost odd down-step.
            which = DoubleMarkedCase::AdjacentWithReturn;
            const std::size_t r = *last_return;
            if (cells[r].step != Step::Down || cells[r + 1].step != Step::Up || cells[r + 2].step != Step::Up
                || r + 2 >= left) {
                throw std::logic_error("adjacent case: unexpected shape after the last return");
            }
            cells[r].mark = true;
            cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(left));
            cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(r + 1),
                        cells.begin() + static_cast<std::ptrdiff_t>(r + 3));
        }
    }

    // (5) reduce to a Dyck path, carrying both markings.
    const auto r = reduce(cells);
    DoubleMarkedDyck image{r.dyck, r.valley, r.mark};
    image.check();
    return DoubleForward{which, image};
}

} // namespace

DoubleMarkedCase classify_double_marked(const LatticePath &path)
{
    return double_forward(path).which;
}

DoubleMarkedDyck to_double_marked(const LatticePath &path)
{
    return double_forward(path).image;
}

LatticePath from_double_marked(const DoubleMarkedDyck &marked)
{
    marked.check();
    const int n = marked.base.semilength() + 1;

    // (1) expand, keeping both markings.
    auto cells = expand(marked.base, marked.step_mark, marked.valley_pos);
    const std::size_t m = only_marked(cells);
    const auto valley_of = [&] {
        return static_cast<std::size_t>(
            std::find_if(cells.begin(), cells.end(), [](const Cell &c) { return c.valley; }) - cells.begin());
    };
    cells[m].mark = false;

    // (2) undo whichever removal produced the marked step; the inserted down-step is marked.
    const auto h = cell_heights(cells, 2);
    const Cell fresh{Step::Down, true};
    if (cells[m].valley) {
        cells.insert(cells.begin(), 2, Cell{Step::Up});
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(m + 2), fresh);
    } else if (cells[m].step == Step::Down && h[m + 1] == 0) {
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(m + 1), 2, Cell{Step::Up});
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(valley_of()), fresh);
    } else {
        const Cell seq[] = {Cell{Step::Up}, fresh, Cell{Step::Up}};
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(m + 1), std::begin(seq), std::end(seq));
    }

    // (3) the valley's down-step joins the marked set; the block of adjacent
    // marked down-steps ending at the rightmost one moves one up-step right.
    const std::size_t v = valley_of();
    cells[v].valley = false;
    cells[v].mark = true;
    std::size_t last = cells.size();
    for (std::size_t i = cells.size(); i-- > 0;) {
        if (cells[i].mark) {
            last = i;
            break;
        }
    }
    std::size_t first = last;
    while (first > 0 && cells[first - 1].mark && cells[first - 1].step == Step::Down) {
        --first;
    }
    if (last + 1 >= cells.size() || cells[last + 1].step != Step::Up) {
        throw BijectionError("marked down-steps are not followed by an up-step");
    }
    std::rotate(cells.begin() + static_cast<std::ptrdiff_t>(first),
                cells.begin() + static_cast<std::ptrdiff_t>(last + 1),
                cells.begin() + static_cast<std::ptrdiff_t>(last + 2));
    for (auto &c : cells) {
        c.mark = false;
    }
    auto path = to_path(cells, PathParams{2, 0, n}, "double-marked bijection");
    require_profile(path, 2, 0, {2, n - 2}, "double-marked bijection");
    return path;
}

void for_each_double_marked(int n, const std::function<void(const DoubleMarkedDyck &)> &visit)
{
    if (n < 2) {
        throw std::invalid_argument("double-marked Dyck paths need n >= 2");
    }
    for (const auto &d : enumerate_dyck(n - 1)) {
        for (const auto v : valleys(d)) {
            for (std::size_t s = 1; s <= v; ++s) {
                visit(DoubleMarkedDyck{d, v, s});
            }
        }
    }
}

std::vector<DoubleMarkedDyck> enumerate_double_marked(int n)
{
    std::vector<DoubleMarkedDyck> out;
    for_each_double_marked(n, [&](const DoubleMarkedDyck &d) { out.push_back(d); });
    return out;
}

} // namespace ktdyck
