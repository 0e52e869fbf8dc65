#ifndef GSKIT_GUARD_GSKIT_CORE_HH
#define GSKIT_GUARD_GSKIT_CORE_HH 1

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gskit
{
    /// Selects which monochromatic sums are forbidden. Strong forbids a + a = 2a inside
    /// one color (the "weak pair" {a, 2a}); Weak only forbids sums of three distinct integers.
    enum class Kind
    {
        Strong,
        Weak
    };

    auto kind_name(Kind k) -> std::string_view;
    auto parse_kind(std::string_view s) -> Kind;

    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string & message, std::size_t position);

        /// Zero-based character offset into the input where parsing failed.
        auto position() const noexcept -> std::size_t { return _position; }

    private:
        std::size_t _position;
    };

    /**
     * A total assignment of colors 1..r to the integers 1..n.
     *
     * Both positions and colors are 1-indexed: (*this)(x) is the color of x. The
     * constructor rejects entries outside [1, r], but does not require every color to
     * occur; that is a property of a Gallai-Schur partition, checked by the verifier.
     */
    class Coloring
    {
    public:
        /// r is taken to be the largest entry.
        explicit Coloring(std::vector<int> colors);
        Coloring(std::vector<int> colors, int r);

        auto order() const noexcept -> int { return static_cast<int>(_colors.size()); }
        auto num_colors() const noexcept -> int { return _r; }

        auto operator()(int x) const -> int { return _colors[static_cast<std::size_t>(x - 1)]; }
        auto colors() const noexcept -> std::span<const int> { return _colors; }

        /// Digit string, one digit per integer. Throws std::logic_error if r > 9.
        auto compact() const -> std::string;

        auto operator==(const Coloring &) const -> bool = default;
        auto operator<=>(const Coloring & other) const -> std::strong_ordering;

    private:
        std::vector<int> _colors;
        int _r;
    };

    enum class ViolationClass
    {
        MonochromaticSum,
        RainbowSum,
        EmptyColor,
        BadColorRange
    };

    auto violation_class_name(ViolationClass v) -> std::string_view;

    struct Triple
    {
        int a, b, c;
        auto operator==(const Triple &) const -> bool = default;
    };

    struct Violation
    {
        ViolationClass cls;
        std::optional<Triple> triple;
        /// The missing color for EmptyColor, the offending entry for BadColorRange.
        std::optional<int> color;
        /// The position of the offending entry for BadColorRange.
        std::optional<int> position;

        auto operator==(const Violation &) const -> bool = default;
    };

    auto describe(const Violation & v) -> std::string;

    struct Verdict
    {
        bool ok = true;
        std::vector<Violation> violations;
    };

    enum class CheckMode
    {
        FirstWitness,
        Exhaustive
    };

    /// Every violated sum constraint whose largest element is c, in increasing order of a.
    /// Positions above c are never read, so this works on a prefix of a coloring.
    auto sum_violations_at(std::span<const int> colors, int c, Kind kind) -> std::vector<Violation>;

    /// Verifies raw color entries against a declared number of colors. Entries outside
    /// [1, r] are reported as BadColorRange rather than rejected.
    auto check_entries(std::span<const int> colors, int r, Kind kind, CheckMode mode = CheckMode::FirstWitness)
        -> Verdict;

    auto check_partition(const Coloring & c, Kind kind, CheckMode mode = CheckMode::FirstWitness) -> Verdict;

    /// Relabels colors so that first occurrences appear in increasing color order.
    auto canonicalize(const Coloring & c) -> Coloring;
    auto is_canonical(const Coloring & c) -> bool;

    /// S_1..S_r as sorted lists of integers.
    auto color_classes(const Coloring & c) -> std::vector<std::vector<int>>;

    /// Contents of a v1 partition file, before the entries are checked against r.
    struct PartitionFile
    {
        Kind kind;
        int r;
        std::vector<int> entries;
    };

    auto is_file_form(std::string_view text) -> bool;
    auto parse_partition_file(std::string_view text) -> PartitionFile;
    auto format_partition_file(const Coloring & c, Kind kind) -> std::string;

    /// Accepts the compact digit form (optionally followed by one newline) or the v1 file form.
    auto parse_coloring(std::string_view text) -> Coloring;

    /// Compact form when r <= 9, otherwise space-separated decimal entries.
    auto to_display_string(const Coloring & c) -> std::string;
}

#endif
