#ifndef GSKIT_GUARD_GSKIT_CONSTRUCT_HH
#define GSKIT_GUARD_GSKIT_CONSTRUCT_HH 1

#include <gskit/core.hh>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gskit
{
    /// TwoFold: order m -> 2m + 1, colors r -> r + 1. FiveFold: m -> 5m + 4, r -> r + 2.
    enum class MappingTag
    {
        TwoFold,
        FiveFold
    };

    auto tag_name(MappingTag t) -> std::string_view;

    /// Thrown by the inverse mappings when the input is not an image of the mapping.
    class StructuralPatternError : public std::runtime_error
    {
    public:
        StructuralPatternError(const std::string & message, int position);

        /// First offending position (1-indexed), or 0 when the failure is about the order itself.
        auto position() const noexcept -> int { return _position; }

    private:
        int _position;
    };

    /// Odd integers get color 1; 2k gets color(k) + 1.
    auto theta2(const Coloring & p) -> Coloring;

    /// Residues 1, 4 (mod 5) get color 1, residues 2, 3 get color 2; 5k gets color(k) + 2.
    auto theta5(const Coloring & p) -> Coloring;

    auto inverse_theta2(const Coloring & q) -> Coloring;
    auto inverse_theta5(const Coloring & q) -> Coloring;

    auto apply_tag(MappingTag t, const Coloring & p) -> Coloring;
    auto apply_tags(std::span<const MappingTag> tags, Coloring c) -> Coloring;

    struct NamedBase
    {
        std::string name;
        Coloring coloring;
    };

    /// The maximal partitions for at most three colors: B1, B2, B3A, B3B (strong) and
    /// C1, C2, C3 (weak).
    auto base_partitions(Kind kind) -> std::vector<NamedBase>;

    /// Looks up B1 .. C3 by name; throws std::invalid_argument for anything else.
    auto base_by_name(std::string_view name) -> NamedBase;

    struct GsFunctionValue
    {
        int r;
        Kind kind;
        /// GS(r) or WGS(r); one more than the largest feasible order.
        std::uint64_t value;
    };

    /// Closed form for GS(r) (strong) and WGS(r) (weak). Throws std::domain_error for
    /// r < 1 and std::overflow_error when the value does not fit in 64 bits.
    auto gs_number(int r, Kind kind) -> GsFunctionValue;

    /// g(c) = order + 1.
    inline auto g_value(const Coloring & c) -> std::uint64_t
    {
        return static_cast<std::uint64_t>(c.order()) + 1;
    }

    /// The base and tag chain used by maximal_partition.
    struct MaximalChain
    {
        NamedBase base;
        std::vector<MappingTag> tags;
    };

    auto maximal_chain(int r, Kind kind) -> MaximalChain;

    /// A partition of order gs_number(r, kind) - 1 into r colors.
    auto maximal_partition(int r, Kind kind) -> Coloring;
}

#endif
