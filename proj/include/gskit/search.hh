#ifndef GSKIT_GUARD_GSKIT_SEARCH_HH
#define GSKIT_GUARD_GSKIT_SEARCH_HH 1

#include <gskit/core.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gskit
{
    /// Largest order the bitset backtracker supports.
    inline constexpr int max_search_order = 1023;
    /// Largest number of colors the bitset backtracker supports.
    inline constexpr int max_search_colors = 16;

    enum class SearchMode
    {
        FirstWitness,
        EnumerateAll
    };

    /// Limits and parallelism shared by every entry point of the search.
    struct SearchOptions
    {
        /// Number of consecutive exhausted-infeasible orders required to confirm a maximum.
        int infeasibility_streak = 5;
        std::optional<std::uint64_t> node_budget;
        std::optional<std::chrono::milliseconds> wall_budget;
        int workers = 1;
        /// Prefix length at which the tree is cut into subtree tasks when workers > 1.
        int split_depth = 8;
    };

    struct SearchConfig
    {
        Kind kind = Kind::Strong;
        int r = 1;
        int n = 1;
        SearchMode mode = SearchMode::FirstWitness;
        SearchOptions options = {};
    };

    struct SearchReport
    {
        Kind kind;
        int r;
        int n;
        /// Canonical, pairwise distinct, sorted lexicographically.
        std::vector<Coloring> witnesses;
        std::uint64_t nodes_explored = 0;
        /// True iff no budget fired, so the tree was fully searched.
        bool exhausted = true;
    };

    /**
     * Depth-first search over colorings of [1, n], assigning 1, 2, ... in order. Colors
     * are tried in ascending order, bounded by one more than the largest color used so
     * far, so only canonical colorings are visited. Every sum constraint has its largest
     * element as the last one assigned, so a prefix is rejected as soon as the position
     * completing a monochromatic or rainbow sum is colored. A full coloring counts iff it
     * uses all r colors.
     *
     * nodes_explored counts accepted prefixes of length >= 1, and is the same for every
     * worker count.
     */
    auto exists_partition(const SearchConfig & cfg) -> SearchReport;

    struct MaxOrderReport
    {
        Kind kind;
        int r;
        int limit;
        int streak;
        /// Largest n <= limit admitting an r-color partition, or 0 if none does.
        int m_max = 0;
        /// Search exhausted and every order in [m_max + 1, m_max + streak] is infeasible,
        /// with m_max + streak <= limit.
        bool confirmed = false;
        bool exhausted = true;
        /// Length of the longest valid prefix (using at most r colors) seen. When this is
        /// below limit no partition of any order above it exists.
        int deepest_prefix = 0;
        std::vector<int> feasible_orders;
        std::uint64_t nodes_explored = 0;
    };

    /// One sweep over all valid canonical prefixes of length <= limit, recording every
    /// order at which some prefix uses all r colors.
    auto max_order(Kind kind, int r, int limit, const SearchOptions & options = {}) -> MaxOrderReport;

    class PartialEnumeration : public std::runtime_error
    {
    public:
        PartialEnumeration(const std::string & message, std::vector<Coloring> found);

        auto found() const -> const std::vector<Coloring> & { return _found; }

    private:
        std::vector<Coloring> _found;
    };

    /// All canonical partitions of maximal order for (kind, r). Throws PartialEnumeration
    /// if a budget fires before the maximum is confirmed or the enumeration completes.
    auto enumerate_maximal(Kind kind, int r, const SearchOptions & options = {}) -> std::vector<Coloring>;

    struct SubtreeTask
    {
        /// Colors of 1 .. prefix.size(); empty means the whole tree.
        std::vector<int> prefix;
        /// Nodes visited while producing this task: dead ends since the previous task plus
        /// the new nodes on the path to this prefix.
        std::uint64_t split_nodes = 0;
    };

    struct SplitPlan
    {
        std::vector<SubtreeTask> tasks;
        /// Dead-end nodes visited after the last task was emitted.
        std::uint64_t trailing_nodes = 0;
    };

    /// Every admissible prefix of length min(depth, n), in search order.
    auto parallel_split(const SearchConfig & cfg, int depth) -> SplitPlan;

    /// Searches the subtree below one task's prefix with the sequential engine.
    auto run_subtree(const SearchConfig & cfg, const SubtreeTask & task) -> SearchReport;

    /// {kind, r, n, witnesses, nodes, exhausted}, fields in that order.
    auto report_to_json(const SearchReport & report) -> std::string;
    auto report_to_json(const MaxOrderReport & report) -> std::string;
}

#endif
