#include <gskit/search.hh>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <thread>

using std::size_t;
using std::span;
using std::string;
using std::uint64_t;
using std::vector;

namespace gskit
{
    PartialEnumeration::PartialEnumeration(const string & message, vector<Coloring> found) :
        std::runtime_error(message),
        _found(std::move(found))
    {
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        /// What a sweep is looking for.
        struct Goal
        {
            enum class Type
            {
                /// Colorings of exactly [1, depth] using all r colors.
                Fixed,
                /// Every order <= depth at which some prefix uses all r colors.
                Profile
            };
            Type type;
            int depth;
            bool first_only;
        };

        /// Budget state shared between the workers of one search.
        struct Control
        {
            std::optional<uint64_t> node_budget;
            std::optional<Clock::time_point> deadline;
            std::atomic<uint64_t> nodes{0};
            std::atomic<bool> budget_fired{false};
            /// Index of the earliest task known to contain a witness (first-witness mode).
            std::atomic<long> winning_task{LONG_MAX};

            explicit Control(const SearchOptions & o) :
                node_budget(o.node_budget)
            {
                if (o.wall_budget)
                    deadline = Clock::now() + *o.wall_budget;
            }
        };

        template <int W>
        struct Bits
        {
            std::array<uint64_t, W> w{};

            auto set(int i) -> void { w[static_cast<size_t>(i >> 6)] |= uint64_t{1} << (i & 63); }
            auto test(int i) const -> bool { return (w[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1; }

            /// *this |= src << s
            auto or_shifted(const Bits & src, int s) -> void
            {
                int ws = s >> 6, bs = s & 63;
                for (int i = W - 1; i >= ws; --i) {
                    uint64_t v = src.w[static_cast<size_t>(i - ws)] << bs;
                    if (bs != 0 && i - ws - 1 >= 0)
                        v |= src.w[static_cast<size_t>(i - ws - 1)] >> (64 - bs);
                    w[static_cast<size_t>(i)] |= v;
                }
            }

            auto and_not(const Bits & other) const -> Bits
            {
                Bits out;
                for (int i = 0; i < W; ++i)
                    out.w[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] & ~other.w[static_cast<size_t>(i)];
                return out;
            }
        };

        /// State after positions 1..d have been colored. Index 0 of the per-color arrays is unused.
        template <int W>
        struct Frame
        {
            std::array<Bits<W>, max_search_colors + 1> members;
            /// forbidden[k] has bit x set when coloring x with k would complete a bad sum.
            std::array<Bits<W>, max_search_colors + 1> forbidden;
            Bits<W> assigned;
            int used = 0;
        };

        struct SweepResult
        {
            vector<vector<int>> witnesses;
            uint64_t nodes = 0;
            bool stopped = false;
            vector<bool> feasible;
            int deepest = 0;
        };

        template <int W>
        class Engine
        {
        public:
            Engine(Goal goal, Kind kind, int r, Control & control, long task_index = 0) :
                _goal(goal),
                _strong(kind == Kind::Strong),
                _r(r),
                _control(control),
                _task_index(task_index),
                _frames(static_cast<size_t>(goal.depth) + 1),
                _colors(static_cast<size_t>(goal.depth) + 1, 0)
            {
                if (goal.type == Goal::Type::Profile)
                    _result.feasible.assign(static_cast<size_t>(goal.depth) + 1, false);
            }

            /// Colors 1..prefix.size() without counting nodes. Returns false if the prefix
            /// is not admissible.
            auto replay(span<const int> prefix) -> bool
            {
                for (size_t i = 0; i < prefix.size(); ++i) {
                    int d = static_cast<int>(i);
                    int k = prefix[i];
                    const auto & f = _frames[i];
                    if (k < 1 || k > std::min(_r, f.used + 1) || f.forbidden[static_cast<size_t>(k)].test(d + 1))
                        return false;
                    assign(d, k);
                }
                _start = static_cast<int>(prefix.size());
                return true;
            }

            /// Depth-first sweep below the replayed prefix. With a split depth, prefixes
            /// reaching that length are handed to emit instead of being explored.
            template <typename Emit>
            auto run(int split_depth, Emit && emit) -> SweepResult
            {
                descend(_start, split_depth, emit);
                flush();
                return std::move(_result);
            }

            auto run() -> SweepResult
            {
                return run(-1, [](span<const int>, uint64_t) {});
            }

        private:
            Goal _goal;
            bool _strong;
            int _r;
            Control & _control;
            long _task_index;
            vector<Frame<W>> _frames;
            vector<int> _colors;
            int _start = 0;
            SweepResult _result;
            uint64_t _unflushed = 0;

            auto assign(int d, int k) -> void
            {
                const auto & f = _frames[static_cast<size_t>(d)];
                auto & c = _frames[static_cast<size_t>(d) + 1];
                int p = d + 1;
                c = f;
                c.members[static_cast<size_t>(k)].set(p);
                c.assigned.set(p);
                c.used = std::max(f.used, k);
                _colors[static_cast<size_t>(p)] = k;

                // Sums p + a for a <= p: monochromatic when a has color k (a = p only in the
                // strong case), rainbow-forcing when a has some other color j.
                const auto & mono = _strong ? c.members[static_cast<size_t>(k)] : f.members[static_cast<size_t>(k)];
                c.forbidden[static_cast<size_t>(k)].or_shifted(mono, p);
                auto others = f.assigned.and_not(f.members[static_cast<size_t>(k)]);
                for (int j = 1; j <= _r; ++j)
                    if (j != k)
                        c.forbidden[static_cast<size_t>(j)].or_shifted(others.and_not(f.members[static_cast<size_t>(j)]), p);
            }

            auto flush() -> void
            {
                _control.nodes.fetch_add(_unflushed, std::memory_order_relaxed);
                _unflushed = 0;
            }

            auto should_stop() -> bool
            {
                if (_result.stopped)
                    return true;
                if (_goal.first_only && _control.winning_task.load(std::memory_order_relaxed) < _task_index) {
                    _result.stopped = true;
                    return true;
                }
                if (_control.budget_fired.load(std::memory_order_relaxed)) {
                    _result.stopped = true;
                    return true;
                }
                return false;
            }

            auto count_node() -> void
            {
                ++_result.nodes;
                ++_unflushed;
                if (_control.node_budget &&
                    _control.nodes.load(std::memory_order_relaxed) + _unflushed > *_control.node_budget)
                    _control.budget_fired.store(true, std::memory_order_relaxed);
                if (_unflushed < 1024)
                    return;
                flush();
                if (_control.deadline && Clock::now() >= *_control.deadline)
                    _control.budget_fired.store(true, std::memory_order_relaxed);
            }

            template <typename Emit>
            auto descend(int d, int split_depth, Emit & emit) -> void
            {
                if (d > _start)
                    count_node();
                if (should_stop())
                    return;

                const auto & f = _frames[static_cast<size_t>(d)];
                if (d == split_depth) {
                    emit(span<const int>(_colors).subspan(1, static_cast<size_t>(d)), _result.nodes);
                    return;
                }

                int remaining = _goal.depth - d;
                if (_goal.type == Goal::Type::Fixed) {
                    if (remaining == 0) {
                        if (f.used == _r) {
                            _result.witnesses.emplace_back(_colors.begin() + 1, _colors.end());
                            if (_goal.first_only) {
                                _result.stopped = true;
                                long mine = _task_index;
                                long cur = _control.winning_task.load();
                                while (mine < cur && ! _control.winning_task.compare_exchange_weak(cur, mine))
                                    ;
                            }
                        }
                        return;
                    }
                }
                else {
                    if (f.used == _r)
                        _result.feasible[static_cast<size_t>(d)] = true;
                    _result.deepest = std::max(_result.deepest, d);
                    if (remaining == 0)
                        return;
                }

                int p = d + 1;
                int top = std::min(_r, f.used + 1);
                for (int k = 1; k <= top; ++k) {
                    if (_frames[static_cast<size_t>(d)].forbidden[static_cast<size_t>(k)].test(p))
                        continue;
                    // Fixed order: the colors not yet used must still fit.
                    if (_goal.type == Goal::Type::Fixed && _r - std::max(f.used, k) > _goal.depth - p)
                        continue;
                    assign(d, k);
                    descend(p, split_depth, emit);
                    if (_result.stopped)
                        return;
                }
            }
        };

        template <typename F>
        auto dispatch_width(int depth, F && f)
        {
            if (depth < 64)
                return f.template operator()<1>();
            if (depth < 128)
                return f.template operator()<2>();
            if (depth < 256)
                return f.template operator()<4>();
            if (depth < 512)
                return f.template operator()<8>();
            return f.template operator()<16>();
        }

        auto validate(Kind, int r, int depth) -> void
        {
            if (r < 1 || r > max_search_colors)
                throw std::invalid_argument("search supports 1 <= r <= " + std::to_string(max_search_colors));
            if (depth < 1 || depth > max_search_order)
                throw std::invalid_argument("search supports orders 1 .. " + std::to_string(max_search_order));
        }

        struct Plan
        {
            vector<SubtreeTask> tasks;
            uint64_t trailing = 0;
            SweepResult head;
        };

        auto split(Goal goal, Kind kind, int r, int depth, Control & control) -> Plan
        {
            depth = std::clamp(depth, 0, goal.depth);
            return dispatch_width(goal.depth, [&]<int W>() {
                Plan plan;
                Engine<W> engine(goal, kind, r, control);
                uint64_t previous = 0;
                plan.head = engine.run(depth, [&](span<const int> prefix, uint64_t nodes_so_far) {
                    plan.tasks.push_back(SubtreeTask{vector<int>(prefix.begin(), prefix.end()), nodes_so_far - previous});
                    previous = nodes_so_far;
                });
                plan.trailing = plan.head.nodes - previous;
                return plan;
            });
        }

        auto run_one(Goal goal, Kind kind, int r, Control & control, const SubtreeTask & task, long index) -> SweepResult
        {
            return dispatch_width(goal.depth, [&]<int W>() {
                Engine<W> engine(goal, kind, r, control, index);
                if (! engine.replay(task.prefix))
                    return SweepResult{};
                return engine.run();
            });
        }

        auto sweep(Goal goal, Kind kind, int r, const SearchOptions & options, Control & control) -> SweepResult
        {
            if (options.workers <= 1)
                return run_one(goal, kind, r, control, SubtreeTask{}, 0);

            Plan plan = split(goal, kind, r, options.split_depth, control);
            vector<SweepResult> results(plan.tasks.size());
            std::atomic<size_t> next{0};
            {
                vector<std::jthread> pool;
                for (int w = 0; w < options.workers; ++w)
                    pool.emplace_back([&] {
                        for (size_t i; (i = next.fetch_add(1)) < plan.tasks.size();) {
                            if (goal.first_only && control.winning_task.load() < static_cast<long>(i))
                                continue;
                            results[i] = run_one(goal, kind, r, control, plan.tasks[i], static_cast<long>(i));
                        }
                    });
            }

            // Reduce in task order, which is the sequential visiting order.
            SweepResult merged;
            merged.feasible = std::move(plan.head.feasible);
            merged.deepest = plan.head.deepest;
            merged.stopped = plan.head.stopped;
            for (size_t i = 0; i < results.size(); ++i) {
                auto & res = results[i];
                merged.nodes += plan.tasks[i].split_nodes + res.nodes;
                for (size_t d = 0; d < res.feasible.size(); ++d)
                    if (res.feasible[d])
                        merged.feasible[d] = true;
                merged.deepest = std::max(merged.deepest, res.deepest);
                for (auto & w : res.witnesses)
                    merged.witnesses.push_back(std::move(w));
                if (goal.first_only && ! merged.witnesses.empty()) {
                    merged.witnesses.resize(1);
                    return merged;
                }
            }
            merged.nodes += plan.trailing;
            return merged;
        }

        auto to_colorings(vector<vector<int>> raw, int r) -> vector<Coloring>
        {
            vector<Coloring> out;
            out.reserve(raw.size());
            for (auto & w : raw)
                out.emplace_back(std::move(w), r);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }

        auto fixed_goal(const SearchConfig & cfg) -> Goal
        {
            return Goal{Goal::Type::Fixed, cfg.n, cfg.mode == SearchMode::FirstWitness};
        }
    }

    auto exists_partition(const SearchConfig & cfg) -> SearchReport
    {
        validate(cfg.kind, cfg.r, cfg.n);
        Control control(cfg.options);
        auto result = sweep(fixed_goal(cfg), cfg.kind, cfg.r, cfg.options, control);
        return SearchReport{cfg.kind, cfg.r, cfg.n, to_colorings(std::move(result.witnesses), cfg.r), result.nodes,
            ! control.budget_fired.load()};
    }

    auto max_order(Kind kind, int r, int limit, const SearchOptions & options) -> MaxOrderReport
    {
        validate(kind, r, limit);
        Control control(options);
        auto result = sweep(Goal{Goal::Type::Profile, limit, false}, kind, r, options, control);

        MaxOrderReport report;
        report.kind = kind;
        report.r = r;
        report.limit = limit;
        report.streak = options.infeasibility_streak;
        report.exhausted = ! control.budget_fired.load();
        report.nodes_explored = result.nodes;
        report.deepest_prefix = result.deepest;
        for (int d = 1; d <= limit; ++d)
            if (result.feasible[static_cast<size_t>(d)]) {
                report.feasible_orders.push_back(d);
                report.m_max = d;
            }
        report.confirmed = report.exhausted && report.m_max > 0 && report.m_max + report.streak <= limit;
        return report;
    }

    auto enumerate_maximal(Kind kind, int r, const SearchOptions & options) -> vector<Coloring>
    {
        int limit = 63;
        MaxOrderReport mo;
        while (true) {
            mo = max_order(kind, r, limit, options);
            if (! mo.exhausted)
                throw PartialEnumeration("budget exhausted while locating the maximal order", {});
            if (mo.confirmed || limit >= max_search_order)
                break;
            limit = std::min(2 * limit + 1, max_search_order);
        }
        if (! mo.confirmed)
            throw PartialEnumeration("maximal order not confirmed within order " + std::to_string(limit), {});

        auto report = exists_partition(SearchConfig{kind, r, mo.m_max, SearchMode::EnumerateAll, options});
        if (! report.exhausted)
            throw PartialEnumeration("budget exhausted while enumerating order " + std::to_string(mo.m_max),
                std::move(report.witnesses));
        return std::move(report.witnesses);
    }

    auto parallel_split(const SearchConfig & cfg, int depth) -> SplitPlan
    {
        validate(cfg.kind, cfg.r, cfg.n);
        Control control(cfg.options);
        auto plan = split(fixed_goal(cfg), cfg.kind, cfg.r, depth, control);
        return SplitPlan{std::move(plan.tasks), plan.trailing};
    }

    auto run_subtree(const SearchConfig & cfg, const SubtreeTask & task) -> SearchReport
    {
        validate(cfg.kind, cfg.r, cfg.n);
        Control control(cfg.options);
        auto result = run_one(fixed_goal(cfg), cfg.kind, cfg.r, control, task, 0);
        return SearchReport{cfg.kind, cfg.r, cfg.n, to_colorings(std::move(result.witnesses), cfg.r), result.nodes,
            ! control.budget_fired.load()};
    }

    auto report_to_json(const SearchReport & report) -> string
    {
        nlohmann::ordered_json j;
        j["kind"] = kind_name(report.kind);
        j["r"] = report.r;
        j["n"] = report.n;
        j["witnesses"] = nlohmann::ordered_json::array();
        for (auto & w : report.witnesses)
            j["witnesses"].push_back(to_display_string(w));
        j["nodes"] = report.nodes_explored;
        j["exhausted"] = report.exhausted;
        return j.dump();
    }

    auto report_to_json(const MaxOrderReport & report) -> string
    {
        nlohmann::ordered_json j;
        j["kind"] = kind_name(report.kind);
        j["r"] = report.r;
        j["limit"] = report.limit;
        j["streak"] = report.streak;
        j["m_max"] = report.m_max;
        j["confirmed"] = report.confirmed;
        j["exhausted"] = report.exhausted;
        j["deepest_prefix"] = report.deepest_prefix;
        j["feasible_orders"] = report.feasible_orders;
        j["nodes"] = report.nodes_explored;
        return j.dump();
    }
}
