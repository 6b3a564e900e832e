#include <tba/error.hh>
#include <tba/finder.hh>
#include <tba/laws.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

namespace tba {

auto SearchState::free_count() const -> std::size_t
{
    return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), free_cell));
}

auto preassign(std::size_t n) -> SearchState
{
    if (n < 2)
        throw UsageError("carrier size must be at least 2");
    if (n >= free_cell)
        throw UsageError("carrier size too large for the search");
    SearchState s;
    s.size = n;
    s.cells.assign(n * n * n, free_cell);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            s.cells[s.index(a, 0, c)] = static_cast<Element>(a);
            s.cells[s.index(a, 1, c)] = static_cast<Element>(c);
        }
    for (std::size_t m = 2; m < n; ++m) {
        s.cells[s.index(0, m, 1)] = static_cast<Element>(m);
        for (std::size_t a = 0; a < n; ++a)
            s.cells[s.index(a, m, a)] = static_cast<Element>(a);
    }
    return s;
}

namespace
{
    using Clock = std::chrono::steady_clock;

    struct Shared
    {
        const EnumerateOptions & options;
        Clock::time_point start;
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<bool> stop{false};
    };

    /// Depth-first search over one partial table.
    ///
    /// T3 instances are rechecked whenever a cell they read is assigned. An
    /// instance with both sides known must agree; one whose sides are known
    /// except for the final lookup on one side forces that cell.
    class Searcher
    {
    public:
        Searcher(SearchState state, Shared & shared) :
            _s(std::move(state)),
            _n(_s.size),
            _shared(shared)
        {
        }

        /// Processes pending rechecks; false on contradiction.
        auto propagate() -> bool
        {
            while (_s.queue_head < _s.trail.size()) {
                auto cell = _s.trail[_s.queue_head++];
                if (! recheck(cell, true))
                    return false;
            }
            return true;
        }

        /// Checks every instance once; used on fresh preassigned states.
        auto propagate_everything() -> bool
        {
            const auto n = _n;
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a)
                for (std::size_t b1 = 0; b1 < n && ok; ++b1)
                    for (std::size_t b2 = 0; b2 < n && ok; ++b2)
                        for (std::size_t b3 = 0; b3 < n && ok; ++b3)
                            for (std::size_t c = 0; c < n && ok; ++c)
                                ok = check(a, b1, b2, b3, c, true);
            return ok && propagate();
        }

        /// Explores the subtree, calling emit on complete tables. At
        /// split_depth (if set) the state is handed to split instead.
        template <typename Emit, typename Split>
        auto search(std::size_t depth, std::optional<std::size_t> split_at, Emit && emit, Split && split) -> void
        {
            if (split_at && depth == *split_at) {
                split(_s);
                return;
            }
            count_node();

            auto choice = choose_cell();
            if (! choice) {
                emit(_s.cells);
                return;
            }
            auto [cell, values] = *choice;
            for (auto v : values) {
                auto mark = _s.trail.size();
                assign(cell, v);
                if (propagate())
                    search(depth + 1, split_at, emit, split);
                undo(mark);
            }
        }

        auto propagations() const -> std::uint64_t { return _propagations; }
        auto nodes() const -> std::uint64_t { return _nodes; }

    private:
        SearchState _s;
        std::size_t _n;
        Shared & _shared;
        std::uint64_t _propagations = 0;
        std::uint64_t _nodes = 0;

        auto get(std::size_t a, std::size_t b, std::size_t c) const -> Element { return _s.cells[(a * _n + b) * _n + c]; }

        auto assign(std::size_t cell, Element v) -> void
        {
            _s.cells[cell] = v;
            _s.trail.push_back(cell);
        }

        auto undo(std::size_t mark) -> void
        {
            while (_s.trail.size() > mark) {
                _s.cells[_s.trail.back()] = free_cell;
                _s.trail.pop_back();
            }
            _s.queue_head = std::min(_s.queue_head, mark);
        }

        auto count_node() -> void
        {
            ++_nodes;
            auto total = _shared.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
            const auto & budget = _shared.options.budget;
            if (budget.nodes && total > *budget.nodes)
                _shared.stop = true;
            if (budget.seconds && (_nodes & 255) == 1
                && std::chrono::duration<double>(Clock::now() - _shared.start).count() > *budget.seconds)
                _shared.stop = true;
            if (_shared.stop.load(std::memory_order_relaxed))
                throw BudgetExceeded("search budget exceeded after " + std::to_string(_shared.nodes.load()) + " nodes");
        }

        // One T3 instance: p(a, p(b1,b2,b3), c) = p(p(a,b1,c), b2, p(a,b3,c)).
        auto check(std::size_t a, std::size_t b1, std::size_t b2, std::size_t b3, std::size_t c, bool force) -> bool
        {
            auto x = get(b1, b2, b3), y = get(a, b1, c), z = get(a, b3, c);
            auto left = x != free_cell ? get(a, x, c) : free_cell;
            auto right = (y != free_cell && z != free_cell) ? get(y, b2, z) : free_cell;
            if (left != free_cell && right != free_cell)
                return left == right;
            if (! force)
                return true;
            if (left != free_cell && y != free_cell && z != free_cell) {
                ++_propagations;
                assign(_s.index(y, b2, z), left);
            }
            else if (right != free_cell && x != free_cell) {
                ++_propagations;
                assign(_s.index(a, x, c), right);
            }
            return true;
        }

        // Every instance that reads cell (x, m, y) under the current values.
        auto recheck(std::size_t cell, bool force) -> bool
        {
            const auto n = _n;
            const std::size_t y = cell % n, m = (cell / n) % n, x = cell / (n * n);
            // As the inner term p(b1, b2, b3).
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t c = 0; c < n; ++c)
                    if (! check(a, x, m, y, c, force))
                        return false;
            // As p(a, b1, c) or p(a, b3, c).
            for (std::size_t b2 = 0; b2 < n; ++b2)
                for (std::size_t b = 0; b < n; ++b)
                    if (! check(x, m, b2, b, y, force) || ! check(x, b, b2, m, y, force))
                        return false;
            // As the outer lookup p(a, X, c) with X = p(b1, b2, b3) = m.
            for (std::size_t b1 = 0; b1 < n; ++b1)
                for (std::size_t b2 = 0; b2 < n; ++b2)
                    for (std::size_t b3 = 0; b3 < n; ++b3)
                        if (get(b1, b2, b3) == m && ! check(x, b1, b2, b3, y, force))
                            return false;
            // As the outer lookup p(Y, b2, Z) with Y = x and Z = y.
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t b1 = 0; b1 < n; ++b1) {
                        if (get(a, b1, c) != x)
                            continue;
                        for (std::size_t b3 = 0; b3 < n; ++b3)
                            if (get(a, b3, c) == y && ! check(a, b1, m, b3, c, force))
                                return false;
                    }
            return true;
        }

        // Most constrained free cell: fewest values surviving an immediate
        // recheck, ties broken by lexicographic position.
        auto choose_cell() -> std::optional<std::pair<std::size_t, std::vector<Element>>>
        {
            std::optional<std::pair<std::size_t, std::vector<Element>>> best;
            std::vector<Element> values;
            for (std::size_t cell = 0; cell < _s.cells.size(); ++cell) {
                if (_s.cells[cell] != free_cell)
                    continue;
                values.clear();
                for (std::size_t v = 0; v < _n; ++v) {
                    _s.cells[cell] = static_cast<Element>(v);
                    if (recheck(cell, false))
                        values.push_back(static_cast<Element>(v));
                }
                _s.cells[cell] = free_cell;
                if (! best || values.size() < best->second.size()) {
                    best.emplace(cell, values);
                    if (values.size() <= 1)
                        break;
                }
            }
            return best;
        }
    };

    struct Collector
    {
        Collector(std::size_t size, bool iso) :
            n(size),
            up_to_iso(iso)
        {
        }

        std::size_t n;
        bool up_to_iso;
        std::uint64_t raw = 0;
        std::map<std::vector<Element>, std::uint64_t> classes;

        auto add(const std::vector<Element> & cells) -> void
        {
            TernaryAlgebra m{numeric_names(n), 0, 1, cells};
            if (! satisfies_axioms(m))
                throw std::logic_error("search emitted a table violating T1-T4");
            ++raw;
            if (up_to_iso) {
                auto canon = canonical_form(m);
                ++classes[{canon.table().begin(), canon.table().end()}];
            }
            else
                ++classes[cells];
        }

        auto merge(const Collector & other) -> void
        {
            raw += other.raw;
            for (const auto & [k, v] : other.classes)
                classes[k] += v;
        }
    };
}

auto enumerate(const EnumerateOptions & options) -> EnumerationResult
{
    const auto n = options.size;
    if (n < 2)
        throw UsageError("enumeration size must be at least 2");
    if (n > options.max_size)
        throw UsageError("enumeration size " + std::to_string(n) + " exceeds the limit of " + std::to_string(options.max_size));

    Shared shared{options, Clock::now()};
    EnumerationResult result;
    result.size = n;
    result.up_to_iso = options.up_to_iso;

    Collector total{n, options.up_to_iso};
    std::vector<SearchState> tasks;

    Searcher root{preassign(n), shared};
    bool consistent = root.propagate_everything();
    if (consistent)
        root.search(
            0, options.split_depth, [&](const std::vector<Element> & cells) { total.add(cells); },
            [&](const SearchState & s) { tasks.push_back(s); });
    result.statistics.nodes = root.nodes();
    result.statistics.propagations = root.propagations();
    result.statistics.tasks = tasks.size();

    // Tasks are claimed in order but merged by index, so the outcome does
    // not depend on the worker count.
    std::vector<Collector> partial(tasks.size(), Collector{n, options.up_to_iso});
    std::vector<std::uint64_t> task_nodes(tasks.size(), 0), task_props(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            auto i = next.fetch_add(1);
            if (i >= tasks.size() || shared.stop)
                return;
            try {
                Searcher s{std::move(tasks[i]), shared};
                s.search(0, std::nullopt, [&](const std::vector<Element> & cells) { partial[i].add(cells); }, [](const SearchState &) {});
                task_nodes[i] = s.nodes();
                task_props[i] = s.propagations();
            }
            catch (...) {
                std::lock_guard lock(failure_mutex);
                if (! failure)
                    failure = std::current_exception();
                shared.stop = true;
                return;
            }
        }
    };
    auto jobs = std::max<std::size_t>(1, std::min(options.jobs, tasks.size()));
    if (jobs == 1)
        worker();
    else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        total.merge(partial[i]);
        result.statistics.nodes += task_nodes[i];
        result.statistics.propagations += task_props[i];
    }

    result.raw_count = total.raw;
    for (auto & [table, count] : total.classes) {
        result.models.emplace_back(numeric_names(n), 0, 1, table);
        if (options.up_to_iso)
            result.orbit_sizes.push_back(count);
    }
    if (options.classify_each)
        for (const auto & m : result.models)
            result.classifications.push_back(classify(m));
    result.statistics.seconds = std::chrono::duration<double>(Clock::now() - shared.start).count();
    return result;
}

auto iso_classes(const std::vector<TernaryAlgebra> & models) -> std::vector<std::vector<std::size_t>>
{
    std::map<std::vector<Element>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < models.size(); ++i) {
        if (models[i].size() != models.front().size())
            throw UsageError("iso_classes needs models of one size");
        auto canon = canonical_form(models[i]);
        groups[{canon.table().begin(), canon.table().end()}].push_back(i);
    }
    std::vector<std::vector<std::size_t>> result;
    for (auto & [_, members] : groups)
        result.push_back(std::move(members));
    return result;
}

} // namespace tba
