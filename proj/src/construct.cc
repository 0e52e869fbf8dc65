#include <gskit/construct.hh>

#include <limits>

using std::size_t;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace gskit
{
    auto tag_name(MappingTag t) -> string_view
    {
        return t == MappingTag::TwoFold ? "TwoFold" : "FiveFold";
    }

    StructuralPatternError::StructuralPatternError(const string & message, int position) :
        std::runtime_error(message),
        _position(position)
    {
    }

    auto theta2(const Coloring & p) -> Coloring
    {
        int m = p.order();
        vector<int> out(static_cast<size_t>(2 * m + 1));
        for (int x = 1; x <= 2 * m + 1; ++x)
            out[static_cast<size_t>(x - 1)] = (x % 2 == 1) ? 1 : p(x / 2) + 1;
        return Coloring{std::move(out), p.num_colors() + 1};
    }

    auto theta5(const Coloring & p) -> Coloring
    {
        int m = p.order();
        vector<int> out(static_cast<size_t>(5 * m + 4));
        for (int x = 1; x <= 5 * m + 4; ++x) {
            int color;
            switch (x % 5) {
            case 1:
            case 4: color = 1; break;
            case 2:
            case 3: color = 2; break;
            default: color = p(x / 5) + 2; break;
            }
            out[static_cast<size_t>(x - 1)] = color;
        }
        return Coloring{std::move(out), p.num_colors() + 2};
    }

    namespace
    {
        [[noreturn]] auto pattern_error(string_view mapping, int x, int color, string_view expected) -> void
        {
            throw StructuralPatternError("not a " + string(mapping) + " image: position " + std::to_string(x) +
                    " has color " + std::to_string(color) + ", expected " + string(expected),
                x);
        }
    }

    auto inverse_theta2(const Coloring & q) -> Coloring
    {
        int n = q.order();
        if (n % 2 == 0 || n < 3)
            throw StructuralPatternError("not a TwoFold image: order " + std::to_string(n) +
                    " is not of the form 2m + 1 with m >= 1",
                0);
        if (q.num_colors() < 2)
            throw StructuralPatternError("not a TwoFold image: needs at least 2 colors", 0);

        for (int x = 1; x <= n; ++x) {
            if (x % 2 == 1 && q(x) != 1)
                pattern_error("TwoFold", x, q(x), "1 on an odd position");
            if (x % 2 == 0 && q(x) == 1)
                pattern_error("TwoFold", x, q(x), "a color other than 1 on an even position");
        }

        vector<int> out(static_cast<size_t>((n - 1) / 2));
        for (int k = 1; k <= (n - 1) / 2; ++k)
            out[static_cast<size_t>(k - 1)] = q(2 * k) - 1;
        return Coloring{std::move(out), q.num_colors() - 1};
    }

    auto inverse_theta5(const Coloring & q) -> Coloring
    {
        int n = q.order();
        if (n % 5 != 4 || n < 9)
            throw StructuralPatternError("not a FiveFold image: order " + std::to_string(n) +
                    " is not of the form 5m + 4 with m >= 1",
                0);
        if (q.num_colors() < 3)
            throw StructuralPatternError("not a FiveFold image: needs at least 3 colors", 0);

        for (int x = 1; x <= n; ++x) {
            int col = q(x);
            switch (x % 5) {
            case 1:
            case 4:
                if (col != 1)
                    pattern_error("FiveFold", x, col, "1 on residue 1 or 4 mod 5");
                break;
            case 2:
            case 3:
                if (col != 2)
                    pattern_error("FiveFold", x, col, "2 on residue 2 or 3 mod 5");
                break;
            default:
                if (col <= 2)
                    pattern_error("FiveFold", x, col, "a color above 2 on a multiple of 5");
                break;
            }
        }

        vector<int> out(static_cast<size_t>((n - 4) / 5));
        for (int k = 1; k <= (n - 4) / 5; ++k)
            out[static_cast<size_t>(k - 1)] = q(5 * k) - 2;
        return Coloring{std::move(out), q.num_colors() - 2};
    }

    auto apply_tag(MappingTag t, const Coloring & p) -> Coloring
    {
        return t == MappingTag::TwoFold ? theta2(p) : theta5(p);
    }

    auto apply_tags(std::span<const MappingTag> tags, Coloring c) -> Coloring
    {
        for (auto t : tags)
            c = apply_tag(t, c);
        return c;
    }

    auto base_partitions(Kind kind) -> vector<NamedBase>
    {
        if (kind == Kind::Strong)
            return {
                {"B1", parse_coloring("1")},
                {"B2", parse_coloring("1221")},
                {"B3A", parse_coloring("122131221")},
                {"B3B", parse_coloring("121313121")}};
        return {
            {"C1", parse_coloring("11")},
            {"C2", parse_coloring("11212221")},
            {"C3", parse_coloring("12121312131313121")}};
    }

    auto base_by_name(string_view name) -> NamedBase
    {
        for (auto kind : {Kind::Strong, Kind::Weak})
            for (auto & b : base_partitions(kind))
                if (b.name == name)
                    return b;
        throw std::invalid_argument("unknown base partition '" + string(name) + "' (expected B1, B2, B3A, B3B, C1, C2 or C3)");
    }

    namespace
    {
        auto checked_mul(uint64_t a, uint64_t b) -> uint64_t
        {
            if (b != 0 && a > std::numeric_limits<uint64_t>::max() / b)
                throw std::overflow_error("Gallai-Schur number does not fit in 64 bits");
            return a * b;
        }

        auto pow5(int e) -> uint64_t
        {
            uint64_t v = 1;
            for (int i = 0; i < e; ++i)
                v = checked_mul(v, 5);
            return v;
        }
    }

    auto gs_number(int r, Kind kind) -> GsFunctionValue
    {
        if (r < 1)
            throw std::domain_error("number of colors must be at least 1");

        uint64_t value;
        if (kind == Kind::Strong)
            value = (r % 2 == 0) ? pow5(r / 2) : checked_mul(2, pow5((r - 1) / 2));
        else if (r == 1)
            value = 3;
        else
            value = (r % 2 == 0) ? checked_mul(9, pow5((r - 2) / 2)) : checked_mul(18, pow5((r - 3) / 2));
        return GsFunctionValue{r, kind, value};
    }

    auto maximal_chain(int r, Kind kind) -> MaximalChain
    {
        if (r < 1)
            throw std::domain_error("number of colors must be at least 1");

        string base;
        int fives;
        if (kind == Kind::Strong) {
            if (r % 2 == 0)
                base = "B2", fives = (r - 2) / 2;
            else if (r == 1)
                base = "B1", fives = 0;
            else
                base = "B3A", fives = (r - 3) / 2;
        }
        else {
            if (r % 2 == 0)
                base = "C2", fives = (r - 2) / 2;
            else if (r == 1)
                base = "C1", fives = 0;
            else
                base = "C3", fives = (r - 3) / 2;
        }
        return MaximalChain{base_by_name(base), vector<MappingTag>(static_cast<size_t>(fives), MappingTag::FiveFold)};
    }

    auto maximal_partition(int r, Kind kind) -> Coloring
    {
        auto chain = maximal_chain(r, kind);
        return apply_tags(chain.tags, chain.base.coloring);
    }
}
