#ifndef GSKIT_GUARD_GSKIT_SATGEN_HH
#define GSKIT_GUARD_GSKIT_SATGEN_HH 1

#include <gskit/core.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gskit
{
    enum class ClauseClass
    {
        /// (a) at least one and at most one color per integer
        OneColor,
        /// (b) no monochromatic sum
        Monochromatic,
        /// (c) no rainbow sum
        Rainbow,
        /// (d) every color used
        ColorUsed,
        /// (e) first-occurrence order of colors
        Symmetry
    };

    /// CNF over variables x(v, i) = (v - 1) * r + i, meaning integer v has color i.
    struct CnfDocument
    {
        int n;
        int r;
        Kind kind;
        bool symmetry;
        int num_vars;
        std::vector<std::vector<int>> clauses;
        /// Parallel to clauses.
        std::vector<ClauseClass> classes;

        auto var(int v, int color) const -> int { return (v - 1) * r + color; }
        /// (integer, color) for a variable index in [1, num_vars].
        auto unvar(int index) const -> std::pair<int, int> { return {(index - 1) / r + 1, (index - 1) % r + 1}; }
    };

    auto encode(int n, int r, Kind kind, bool symmetry) -> CnfDocument;

    /// DIMACS text: `c` comment lines recording n, r, kind and symmetry, the `p cnf` header,
    /// then one 0-terminated line per clause.
    auto to_dimacs(const CnfDocument & doc) -> std::string;

    struct ClauseCensus
    {
        std::uint64_t one_color = 0, monochromatic = 0, rainbow = 0, color_used = 0, symmetry = 0;

        auto total() const -> std::uint64_t { return one_color + monochromatic + rainbow + color_used + symmetry; }
        auto operator==(const ClauseCensus &) const -> bool = default;
    };

    auto clause_census(const CnfDocument & doc) -> ClauseCensus;

    class DecodeError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// What a solver printed: the `s` status line if any, and the literals of the `v` lines.
    struct SolverOutput
    {
        std::optional<bool> satisfiable;
        std::vector<int> literals;
    };

    /// Reads `s` and `v` lines; `c` lines and blank lines are skipped. Throws DecodeError on
    /// anything else.
    auto parse_solver_output(std::string_view text) -> SolverOutput;

    /// Color of v is the unique i with x(v, i) positive. Variables absent from the model
    /// count as false.
    auto decode(std::span<const int> model, int n, int r) -> Coloring;

    /// The assignment induced by a coloring, indexed by variable (index 0 unused).
    auto induced_assignment(std::span<const int> colors, int r) -> std::vector<bool>;

    /// The literals of the induced assignment, as a solver would print them.
    auto model_of(const Coloring & c, int r) -> std::vector<int>;

    auto satisfies(const CnfDocument & doc, const std::vector<bool> & assignment) -> bool;
}

#endif
