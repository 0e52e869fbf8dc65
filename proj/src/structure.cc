#include <gskit/structure.hh>

#include <algorithm>

using std::pair;
using std::string;
using std::string_view;

namespace gskit
{
    auto structure_class_name(StructureClass s) -> string_view
    {
        switch (s) {
        case StructureClass::FiveFoldImage: return "FiveFoldImage";
        case StructureClass::TwoFoldImage: return "TwoFoldImage";
        case StructureClass::Base: return "Base";
        }
        return "?";
    }

    namespace
    {
        auto is_five_fold_image(const Coloring & c) -> bool
        {
            int n = c.order();
            if (n % 5 != 4 || n < 9 || c.num_colors() < 3)
                return false;
            for (int x = 1; x <= n; ++x) {
                int col = c(x), res = x % 5;
                bool ok = (res == 1 || res == 4) ? col == 1 : (res == 2 || res == 3) ? col == 2 : col > 2;
                if (! ok)
                    return false;
            }
            return true;
        }

        auto is_two_fold_image(const Coloring & c) -> bool
        {
            int n = c.order();
            if (n % 2 == 0 || n < 3 || c.num_colors() < 2)
                return false;
            for (int x = 1; x <= n; ++x)
                if ((x % 2 == 1) != (c(x) == 1))
                    return false;
            return true;
        }
    }

    auto classify(const Coloring & c) -> StructureClass
    {
        if (! is_canonical(c))
            throw std::invalid_argument("classify needs a canonical coloring, got " + to_display_string(c));
        if (is_five_fold_image(c))
            return StructureClass::FiveFoldImage;
        if (is_two_fold_image(c))
            return StructureClass::TwoFoldImage;
        return StructureClass::Base;
    }

    auto peel(const Coloring & c) -> pair<MappingTag, Coloring>
    {
        switch (classify(c)) {
        case StructureClass::FiveFoldImage: return {MappingTag::FiveFold, inverse_theta5(c)};
        case StructureClass::TwoFoldImage: return {MappingTag::TwoFold, inverse_theta2(c)};
        case StructureClass::Base: break;
        }
        throw std::invalid_argument("cannot peel " + to_display_string(c) + ": it is not a TwoFold or FiveFold image");
    }

    auto decompose_full(const Coloring & c) -> Decomposition
    {
        Coloring current = c;
        std::vector<MappingTag> peeled;
        while (classify(current) != StructureClass::Base) {
            auto [tag, pre] = peel(current);
            peeled.push_back(tag);
            current = std::move(pre);
        }
        std::reverse(peeled.begin(), peeled.end());
        return Decomposition{std::move(current), std::move(peeled), c.order()};
    }

    auto format_decomposition(const Decomposition & d) -> string
    {
        string s = "base=" + to_display_string(d.base) + " tags=";
        if (d.tags.empty())
            return s + "none";
        for (std::size_t i = 0; i < d.tags.size(); ++i)
            s += (i > 0 ? "," : "") + string(tag_name(d.tags[i]));
        return s;
    }

    auto verify_theorem2(const Coloring & c, Kind kind) -> bool
    {
        if (! is_canonical(c))
            throw std::invalid_argument("verify_theorem2 needs a canonical coloring");
        if (c.num_colors() <= 3)
            throw std::invalid_argument("verify_theorem2 needs more than 3 colors");
        if (! check_partition(c, kind).ok)
            throw std::invalid_argument("verify_theorem2 needs a valid " + string(kind_name(kind)) + " partition");

        if (classify(c) == StructureClass::Base)
            return false;
        auto [tag, pre] = peel(c);
        return check_partition(pre, kind).ok;
    }
}
