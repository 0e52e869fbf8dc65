#include <gskit/satgen.hh>

#include <charconv>
#include <sstream>

using std::size_t;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace gskit
{
    auto encode(int n, int r, Kind kind, bool symmetry) -> CnfDocument
    {
        if (n < 1 || r < 1)
            throw std::invalid_argument("encode needs n >= 1 and r >= 1");

        CnfDocument doc{n, r, kind, symmetry, n * r, {}, {}};
        auto add = [&](ClauseClass cls, vector<int> clause) {
            doc.clauses.push_back(std::move(clause));
            doc.classes.push_back(cls);
        };
        auto x = [&](int v, int i) { return doc.var(v, i); };

        for (int v = 1; v <= n; ++v) {
            vector<int> some;
            for (int i = 1; i <= r; ++i)
                some.push_back(x(v, i));
            add(ClauseClass::OneColor, std::move(some));
            for (int i = 1; i <= r; ++i)
                for (int j = i + 1; j <= r; ++j)
                    add(ClauseClass::OneColor, {-x(v, i), -x(v, j)});
        }

        for (int c = 2; c <= n; ++c)
            for (int a = 1; a <= c / 2; ++a) {
                int b = c - a;
                if (a == b && kind == Kind::Weak)
                    continue;
                for (int i = 1; i <= r; ++i) {
                    if (a == b)
                        add(ClauseClass::Monochromatic, {-x(a, i), -x(c, i)});
                    else
                        add(ClauseClass::Monochromatic, {-x(a, i), -x(b, i), -x(c, i)});
                }
            }

        for (int c = 3; c <= n; ++c)
            for (int a = 1; a < c - a; ++a) {
                int b = c - a;
                for (int i = 1; i <= r; ++i)
                    for (int j = 1; j <= r; ++j)
                        for (int k = 1; k <= r; ++k)
                            if (i != j && j != k && i != k)
                                add(ClauseClass::Rainbow, {-x(a, i), -x(b, j), -x(c, k)});
            }

        for (int i = 1; i <= r; ++i) {
            vector<int> used;
            for (int v = 1; v <= n; ++v)
                used.push_back(x(v, i));
            add(ClauseClass::ColorUsed, std::move(used));
        }

        if (symmetry) {
            add(ClauseClass::Symmetry, {x(1, 1)});
            // x(v, i) -> some u < v has color i - 1
            for (int v = 1; v <= n; ++v)
                for (int i = 2; i <= r; ++i) {
                    vector<int> clause{-x(v, i)};
                    for (int u = 1; u < v; ++u)
                        clause.push_back(x(u, i - 1));
                    add(ClauseClass::Symmetry, std::move(clause));
                }
        }
        return doc;
    }

    auto to_dimacs(const CnfDocument & doc) -> string
    {
        std::ostringstream out;
        out << "c gskit gallai-schur encoding\n";
        out << "c n=" << doc.n << " r=" << doc.r << " kind=" << kind_name(doc.kind) << " symmetry=" << (doc.symmetry ? 1 : 0)
            << '\n';
        out << "c variable (v-1)*" << doc.r << "+i is true iff integer v has color i\n";
        out << "p cnf " << doc.num_vars << ' ' << doc.clauses.size() << '\n';
        for (auto & clause : doc.clauses) {
            for (int lit : clause)
                out << lit << ' ';
            out << "0\n";
        }
        return out.str();
    }

    auto clause_census(const CnfDocument & doc) -> ClauseCensus
    {
        ClauseCensus census;
        for (auto cls : doc.classes)
            switch (cls) {
            case ClauseClass::OneColor: ++census.one_color; break;
            case ClauseClass::Monochromatic: ++census.monochromatic; break;
            case ClauseClass::Rainbow: ++census.rainbow; break;
            case ClauseClass::ColorUsed: ++census.color_used; break;
            case ClauseClass::Symmetry: ++census.symmetry; break;
            }
        return census;
    }

    auto parse_solver_output(string_view text) -> SolverOutput
    {
        SolverOutput result;
        size_t line_no = 0;
        bool terminated = false;
        while (! text.empty()) {
            ++line_no;
            auto eol = text.find('\n');
            string_view line = text.substr(0, eol);
            text = eol == string_view::npos ? string_view{} : text.substr(eol + 1);
            if (line.ends_with('\r'))
                line.remove_suffix(1);

            if (line.empty() || line[0] == 'c')
                continue;
            if (line[0] == 's') {
                if (line.find("UNSATISFIABLE") != string_view::npos)
                    result.satisfiable = false;
                else if (line.find("SATISFIABLE") != string_view::npos)
                    result.satisfiable = true;
                continue;
            }
            if (line[0] != 'v')
                throw DecodeError("line " + std::to_string(line_no) + ": expected a 'c', 's' or 'v' line");

            std::istringstream tokens{string(line.substr(1))};
            string tok;
            while (tokens >> tok) {
                int lit = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
                if (ec != std::errc{} || ptr != tok.data() + tok.size())
                    throw DecodeError("line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
                if (terminated)
                    throw DecodeError("line " + std::to_string(line_no) + ": literals after terminating 0");
                if (lit == 0)
                    terminated = true;
                else
                    result.literals.push_back(lit);
            }
        }
        return result;
    }

    auto decode(span<const int> model, int n, int r) -> Coloring
    {
        if (n < 1 || r < 1)
            throw DecodeError("decode needs n >= 1 and r >= 1");
        vector<int> colors(static_cast<size_t>(n), 0);
        for (int lit : model) {
            if (lit == 0 || lit > n * r || lit < -n * r)
                throw DecodeError("literal " + std::to_string(lit) + " outside [1, " + std::to_string(n * r) + "]");
            if (lit < 0)
                continue;
            int v = (lit - 1) / r + 1, i = (lit - 1) % r + 1;
            auto & slot = colors[static_cast<size_t>(v - 1)];
            if (slot != 0 && slot != i)
                throw DecodeError("integer " + std::to_string(v) + " has colors " + std::to_string(slot) + " and " +
                    std::to_string(i));
            slot = i;
        }
        for (int v = 1; v <= n; ++v)
            if (colors[static_cast<size_t>(v - 1)] == 0)
                throw DecodeError("integer " + std::to_string(v) + " has no color");
        return Coloring{std::move(colors), r};
    }

    auto induced_assignment(span<const int> colors, int r) -> vector<bool>
    {
        vector<bool> assignment(colors.size() * static_cast<size_t>(r) + 1, false);
        for (size_t v = 0; v < colors.size(); ++v)
            assignment[v * static_cast<size_t>(r) + static_cast<size_t>(colors[v])] = true;
        return assignment;
    }

    auto model_of(const Coloring & c, int r) -> vector<int>
    {
        auto assignment = induced_assignment(c.colors(), r);
        vector<int> lits;
        for (size_t var = 1; var < assignment.size(); ++var)
            lits.push_back(assignment[var] ? static_cast<int>(var) : -static_cast<int>(var));
        return lits;
    }

    auto satisfies(const CnfDocument & doc, const vector<bool> & assignment) -> bool
    {
        for (auto & clause : doc.clauses) {
            bool sat = false;
            for (int lit : clause) {
                bool value = assignment.at(static_cast<size_t>(lit > 0 ? lit : -lit));
                if ((lit > 0) == value) {
                    sat = true;
                    break;
                }
            }
            if (! sat)
                return false;
        }
        return true;
    }
}
