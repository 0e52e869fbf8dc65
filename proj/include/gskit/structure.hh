#ifndef GSKIT_GUARD_GSKIT_STRUCTURE_HH
#define GSKIT_GUARD_GSKIT_STRUCTURE_HH 1

#include <gskit/construct.hh>
#include <gskit/core.hh>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gskit
{
    enum class StructureClass
    {
        FiveFoldImage,
        TwoFoldImage,
        Base
    };

    auto structure_class_name(StructureClass s) -> std::string_view;

    struct Decomposition
    {
        Coloring base;
        /// Innermost first: applying tags in order to base gives back the original.
        std::vector<MappingTag> tags;
        int original_order;
    };

    /**
     * Decides whether a canonical coloring lies in the image of theta5 or theta2 by
     * checking the full global pattern, not just the (1,2,2) / (1,2,1) prefix:
     *
     *  - FiveFoldImage: n = 4 (mod 5), color 1 is exactly residues {1, 4}, color 2 exactly
     *    residues {2, 3}, and at least one multiple of 5 exists to carry the other colors.
     *  - TwoFoldImage: n odd, n >= 3, color 1 is exactly the odd integers.
     *
     * Throws std::invalid_argument for non-canonical input.
     */
    auto classify(const Coloring & c) -> StructureClass;

    /// Removes the outermost mapping. Throws std::invalid_argument on a Base coloring.
    auto peel(const Coloring & c) -> std::pair<MappingTag, Coloring>;

    /// Peels until classify returns Base.
    auto decompose_full(const Coloring & c) -> Decomposition;

    /// "base=<compact> tags=<comma list>", with "none" for an empty tag list.
    auto format_decomposition(const Decomposition & d) -> std::string;

    /// Checks the conclusion of the structure theorem on one maximal partition: it is a
    /// theta5 or theta2 image whose preimage is again a partition of the same kind.
    /// Maximality itself must be established by the caller. Throws std::invalid_argument
    /// when c is not canonical, not a partition of this kind, or has r <= 3.
    auto verify_theorem2(const Coloring & c, Kind kind) -> bool;
}

#endif
