#include <gskit/core.hh>

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

using std::size_t;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace gskit
{
    auto kind_name(Kind k) -> string_view
    {
        return k == Kind::Strong ? "strong" : "weak";
    }

    auto parse_kind(string_view s) -> Kind
    {
        if (s == "strong")
            return Kind::Strong;
        if (s == "weak")
            return Kind::Weak;
        throw ParseError("unknown kind '" + string(s) + "', expected strong or weak", 0);
    }

    ParseError::ParseError(const string & message, size_t position) :
        std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
        _position(position)
    {
    }

    namespace
    {
        auto max_entry(const vector<int> & colors) -> int
        {
            return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
        }
    }

    Coloring::Coloring(vector<int> colors) :
        Coloring(std::move(colors), 0)
    {
    }

    Coloring::Coloring(vector<int> colors, int r) :
        _colors(std::move(colors)),
        _r(r == 0 ? max_entry(_colors) : r)
    {
        if (_colors.empty())
            throw std::invalid_argument("coloring must have at least one entry");
        if (_r < 1)
            throw std::invalid_argument("coloring must have at least one color");
        for (size_t i = 0; i < _colors.size(); ++i)
            if (_colors[i] < 1 || _colors[i] > _r)
                throw std::invalid_argument("color " + std::to_string(_colors[i]) + " at position " +
                    std::to_string(i + 1) + " outside [1, " + std::to_string(_r) + "]");
    }

    auto Coloring::compact() const -> string
    {
        if (_r > 9)
            throw std::logic_error("compact form needs r <= 9, have r = " + std::to_string(_r));
        string s;
        s.reserve(_colors.size());
        for (int c : _colors)
            s.push_back(static_cast<char>('0' + c));
        return s;
    }

    auto Coloring::operator<=>(const Coloring & other) const -> std::strong_ordering
    {
        if (auto cmp = _colors <=> other._colors; cmp != 0)
            return cmp;
        return _r <=> other._r;
    }

    auto violation_class_name(ViolationClass v) -> string_view
    {
        switch (v) {
        case ViolationClass::MonochromaticSum: return "monochromatic";
        case ViolationClass::RainbowSum: return "rainbow";
        case ViolationClass::EmptyColor: return "empty-color";
        case ViolationClass::BadColorRange: return "bad-color-range";
        }
        return "?";
    }

    auto describe(const Violation & v) -> string
    {
        std::ostringstream out;
        out << violation_class_name(v.cls);
        if (v.triple)
            out << " (" << v.triple->a << "," << v.triple->b << "," << v.triple->c << ")";
        if (v.cls == ViolationClass::EmptyColor && v.color)
            out << " " << *v.color;
        if (v.cls == ViolationClass::BadColorRange && v.color && v.position)
            out << " " << *v.color << " at " << *v.position;
        return out.str();
    }

    auto sum_violations_at(span<const int> colors, int c, Kind kind) -> vector<Violation>
    {
        vector<Violation> result;
        int z = colors[static_cast<size_t>(c - 1)];
        for (int a = 1; a <= c / 2; ++a) {
            int b = c - a;
            int x = colors[static_cast<size_t>(a - 1)], y = colors[static_cast<size_t>(b - 1)];
            if (x == y && y == z) {
                if (a < b || kind == Kind::Strong)
                    result.push_back(Violation{ViolationClass::MonochromaticSum, Triple{a, b, c}, std::nullopt, std::nullopt});
            }
            else if (x != y && y != z && x != z)
                result.push_back(Violation{ViolationClass::RainbowSum, Triple{a, b, c}, std::nullopt, std::nullopt});
        }
        return result;
    }

    auto check_entries(span<const int> colors, int r, Kind kind, CheckMode mode) -> Verdict
    {
        Verdict verdict;
        auto add = [&](Violation v) {
            verdict.ok = false;
            verdict.violations.push_back(std::move(v));
            return mode == CheckMode::FirstWitness;
        };

        int n = static_cast<int>(colors.size());
        for (int x = 1; x <= n; ++x) {
            int col = colors[static_cast<size_t>(x - 1)];
            if (col < 1 || col > r) {
                if (add(Violation{ViolationClass::BadColorRange, std::nullopt, col, x}))
                    return verdict;
            }
        }

        for (int c = 2; c <= n; ++c)
            for (auto & v : sum_violations_at(colors, c, kind))
                if (add(std::move(v)))
                    return verdict;

        vector<bool> seen(static_cast<size_t>(std::max(r, 0)) + 1, false);
        for (int col : colors)
            if (col >= 1 && col <= r)
                seen[static_cast<size_t>(col)] = true;
        for (int i = 1; i <= r; ++i)
            if (! seen[static_cast<size_t>(i)])
                if (add(Violation{ViolationClass::EmptyColor, std::nullopt, i, std::nullopt}))
                    return verdict;

        return verdict;
    }

    auto check_partition(const Coloring & c, Kind kind, CheckMode mode) -> Verdict
    {
        return check_entries(c.colors(), c.num_colors(), kind, mode);
    }

    auto canonicalize(const Coloring & c) -> Coloring
    {
        vector<int> relabel(static_cast<size_t>(c.num_colors()) + 1, 0);
        int next = 0;
        vector<int> out;
        out.reserve(static_cast<size_t>(c.order()));
        for (int col : c.colors()) {
            auto & label = relabel[static_cast<size_t>(col)];
            if (label == 0)
                label = ++next;
            out.push_back(label);
        }
        // Colors that never occur keep their count but go after the used ones.
        return Coloring{std::move(out), c.num_colors()};
    }

    auto is_canonical(const Coloring & c) -> bool
    {
        int highest = 0;
        for (int col : c.colors()) {
            if (col > highest + 1)
                return false;
            highest = std::max(highest, col);
        }
        return true;
    }

    auto color_classes(const Coloring & c) -> vector<vector<int>>
    {
        vector<vector<int>> classes(static_cast<size_t>(c.num_colors()));
        for (int x = 1; x <= c.order(); ++x)
            classes[static_cast<size_t>(c(x) - 1)].push_back(x);
        return classes;
    }

    namespace
    {
        constexpr string_view file_magic = "gspartition v1 ";

        struct Cursor
        {
            string_view text;
            size_t pos = 0;

            auto expect(string_view literal) -> void
            {
                if (text.substr(pos, literal.size()) != literal)
                    throw ParseError("expected '" + string(literal) + "'", pos);
                pos += literal.size();
            }

            auto positive_decimal(string_view what) -> int
            {
                size_t start = pos;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
                    ++pos;
                if (pos == start)
                    throw ParseError("expected decimal " + string(what), start);
                if (text[start] == '0')
                    throw ParseError(string(what) + " must be a positive decimal without leading zeros", start);
                int value = 0;
                auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
                if (ec != std::errc{})
                    throw ParseError(string(what) + " out of range", start);
                return value;
            }
        };
    }

    auto is_file_form(string_view text) -> bool
    {
        return text.starts_with("gspartition");
    }

    auto parse_partition_file(string_view text) -> PartitionFile
    {
        Cursor cur{text};
        cur.expect(file_magic);
        cur.expect("kind=");
        Kind kind;
        if (text.substr(cur.pos, 6) == "strong") {
            kind = Kind::Strong;
            cur.pos += 6;
        }
        else if (text.substr(cur.pos, 4) == "weak") {
            kind = Kind::Weak;
            cur.pos += 4;
        }
        else
            throw ParseError("expected kind=strong or kind=weak", cur.pos);
        cur.expect(" r=");
        int r = cur.positive_decimal("r");
        cur.expect(" n=");
        int n = cur.positive_decimal("n");
        cur.expect("\n");

        vector<int> entries;
        entries.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (i > 0)
                cur.expect(" ");
            entries.push_back(cur.positive_decimal("color"));
        }
        cur.expect("\n");
        if (cur.pos != text.size())
            throw ParseError("trailing content after entries", cur.pos);
        return PartitionFile{kind, r, std::move(entries)};
    }

    auto format_partition_file(const Coloring & c, Kind kind) -> string
    {
        std::ostringstream out;
        out << file_magic << "kind=" << kind_name(kind) << " r=" << c.num_colors() << " n=" << c.order() << '\n';
        for (int x = 1; x <= c.order(); ++x)
            out << (x > 1 ? " " : "") << c(x);
        out << '\n';
        return out.str();
    }

    auto parse_coloring(string_view text) -> Coloring
    {
        if (is_file_form(text)) {
            auto file = parse_partition_file(text);
            for (size_t i = 0; i < file.entries.size(); ++i)
                if (file.entries[i] > file.r)
                    throw ParseError("color " + std::to_string(file.entries[i]) + " exceeds declared r=" +
                            std::to_string(file.r) + " at entry " + std::to_string(i + 1),
                        0);
            return Coloring{std::move(file.entries), file.r};
        }

        string_view digits = text;
        if (digits.ends_with('\n'))
            digits.remove_suffix(1);
        if (digits.empty())
            throw ParseError("empty coloring", 0);
        vector<int> colors;
        colors.reserve(digits.size());
        for (size_t i = 0; i < digits.size(); ++i) {
            char ch = digits[i];
            if (ch < '1' || ch > '9')
                throw ParseError(ch == '0' ? "color 0 is not allowed" : "expected a digit 1-9", i);
            colors.push_back(ch - '0');
        }
        return Coloring{std::move(colors)};
    }

    auto to_display_string(const Coloring & c) -> string
    {
        if (c.num_colors() <= 9)
            return c.compact();
        std::ostringstream out;
        for (int x = 1; x <= c.order(); ++x)
            out << (x > 1 ? " " : "") << c(x);
        return out.str();
    }
}
