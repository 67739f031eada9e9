#include "ordlim/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ordlim/errors.hpp"

namespace ordlim {

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view text)
    {
        std::size_t pos = 0;
        std::size_t number = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            ++number;
            std::string line(text.substr(pos, end - pos));
            pos = end + 1;
            std::string spaced;
            for (char c : line) {
                if (c == ':' || c == ';' || c == ',') {
                    spaced += ' ';
                    spaced += c;
                    spaced += ' ';
                } else {
                    spaced += c;
                }
            }
            std::istringstream in(spaced);
            std::vector<std::string> tokens;
            for (std::string t; in >> t;) tokens.push_back(t);
            if (tokens.empty() || tokens.front().front() == '#') continue;
            lines_.push_back({number, std::move(tokens), std::move(line)});
        }
    }

    bool done() const { return next_ == lines_.size(); }

    const std::vector<std::string>& next(const char* what)
    {
        if (done()) throw ParseError(std::string("unexpected end of input, expected ") + what);
        current_ = next_++;
        return lines_[current_].tokens;
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        const auto& l = lines_[current_];
        throw ParseError("line " + std::to_string(l.number) + ": " + msg + " in \"" + l.text + "\"");
    }

    void expect_end() const
    {
        if (!done()) {
            const auto& l = lines_[next_];
            throw ParseError("line " + std::to_string(l.number) + ": unexpected trailing content \"" + l.text + "\"");
        }
    }

    std::size_t count(const std::string& tok)
    {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(tok, &used);
            if (used != tok.size()) fail("bad count '" + tok + "'");
            return static_cast<std::size_t>(v);
        } catch (const std::logic_error&) {
            fail("bad count '" + tok + "'");
        }
    }

    Rational rational(const std::string& tok)
    {
        try {
            return parse_rational(tok);
        } catch (const ParseError& e) {
            fail(e.what());
        }
    }

    // Header "<word> a [b]".
    std::vector<std::size_t> header(const std::string& word, std::size_t args)
    {
        const auto& t = next("header");
        if (t.size() != args + 1 || t[0] != word) fail("expected header \"" + word + "\"");
        std::vector<std::size_t> out;
        for (std::size_t i = 1; i <= args; ++i) out.push_back(count(t[i]));
        return out;
    }

private:
    struct Line {
        std::size_t number;
        std::vector<std::string> tokens;
        std::string text;
    };
    std::vector<Line> lines_;
    std::size_t next_ = 0;
    std::size_t current_ = 0;
};

std::string header_word(std::string_view text)
{
    LineReader r(text);
    return r.next("header").front();
}

std::size_t label(LineReader& r, const std::string& tok, std::size_t n)
{
    const std::size_t v = r.count(tok);
    if (v < 1 || v > n) r.fail("label " + tok + " outside 1.." + std::to_string(n));
    return v - 1;
}

Cell parse_cell_row(LineReader& r, const std::vector<std::string>& t)
{
    if (t.size() < 5 || t[2] != ":") r.fail("expected \"lo hi : y p ; ...\"");
    Cell c{r.rational(t[0]), r.rational(t[1]), {}};
    std::size_t i = 3;
    for (;;) {
        if (i + 2 > t.size()) r.fail("incomplete conditional");
        c.cond.emplace_back(r.rational(t[i]), r.rational(t[i + 1]));
        i += 2;
        if (i == t.size()) break;
        if (t[i] != ";") r.fail("expected ';' between conditional atoms");
        ++i;
    }
    return c;
}

std::string format_cell_row(const Cell& c)
{
    std::string s = to_string(c.lo) + " " + to_string(c.hi) + " :";
    for (std::size_t i = 0; i < c.cond.size(); ++i) {
        if (i) s += " ;";
        s += " " + to_string(c.cond[i].first) + " " + to_string(c.cond[i].second);
    }
    return s + "\n";
}

Atom parse_atom_row(LineReader& r, const std::vector<std::string>& t)
{
    if (t.size() != 3) r.fail("expected \"x y w\"");
    return Atom{r.rational(t[0]), r.rational(t[1]), r.rational(t[2])};
}

std::string format_atom_row(const Atom& a)
{
    return to_string(a.x) + " " + to_string(a.y) + " " + to_string(a.w) + "\n";
}

template <typename F>
auto wrap(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(std::string("invalid value: ") + e.what());
    }
}

}  // namespace

FinitePoset parse_poset(std::string_view text)
{
    LineReader r(text);
    const std::size_t n = r.header("poset", 1)[0];
    if (n == 0) throw ParseError("poset must have at least one point");
    std::vector<Pair> pairs;
    while (!r.done()) {
        const auto& t = r.next("relation");
        if (t.size() != 2) r.fail("expected \"i j\"");
        pairs.emplace_back(label(r, t[0], n), label(r, t[1], n));
    }
    return FinitePoset::from_relations(n, pairs);
}

std::string format_poset(const FinitePoset& p)
{
    std::string s = "poset " + std::to_string(p.size()) + "\n";
    for (auto [i, j] : p.covers()) s += std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
    return s;
}

StepKernelMeasure parse_step_measure(std::string_view text)
{
    LineReader r(text);
    const std::size_t m = r.header("stepmeasure", 1)[0];
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < m; ++i) cells.push_back(parse_cell_row(r, r.next("cell row")));
    r.expect_end();
    return wrap([&] { return StepKernelMeasure::from_cells(std::move(cells)); });
}

std::string format_step_measure(const StepKernelMeasure& mu)
{
    std::string s = "stepmeasure " + std::to_string(mu.cells().size()) + "\n";
    for (const auto& c : mu.cells()) s += format_cell_row(c);
    return s;
}

AtomicMeasure parse_atomic_measure(std::string_view text)
{
    LineReader r(text);
    const std::size_t k = r.header("atoms", 1)[0];
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < k; ++i) atoms.push_back(parse_atom_row(r, r.next("atom row")));
    r.expect_end();
    return wrap([&] { return AtomicMeasure::from_atoms(std::move(atoms)); });
}

std::string format_atomic_measure(const AtomicMeasure& mu)
{
    std::string s = "atoms " + std::to_string(mu.atoms().size()) + "\n";
    for (const auto& a : mu.atoms()) s += format_atom_row(a);
    return s;
}

MixedMeasure parse_mixed_measure(std::string_view text)
{
    LineReader r(text);
    const auto h = r.header("mixed", 2);
    std::vector<Cell> pieces;
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < h[0]; ++i) pieces.push_back(parse_cell_row(r, r.next("piece row")));
    for (std::size_t i = 0; i < h[1]; ++i) atoms.push_back(parse_atom_row(r, r.next("atom row")));
    r.expect_end();
    return wrap([&] { return MixedMeasure::from_parts(std::move(pieces), std::move(atoms)); });
}

std::string format_mixed_measure(const MixedMeasure& mu)
{
    std::string s =
        "mixed " + std::to_string(mu.pieces().size()) + " " + std::to_string(mu.atoms().size()) + "\n";
    for (const auto& c : mu.pieces()) s += format_cell_row(c);
    for (const auto& a : mu.atoms()) s += format_atom_row(a);
    return s;
}

AnyMeasure parse_any_measure(std::string_view text)
{
    const std::string word = header_word(text);
    if (word == "stepmeasure") return parse_step_measure(text);
    if (word == "atoms") return parse_atomic_measure(text);
    if (word == "mixed") return parse_mixed_measure(text);
    throw ParseError("unknown measure header \"" + word + "\"");
}

std::string format_any_measure(const AnyMeasure& mu)
{
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, StepKernelMeasure>)
                return format_step_measure(m);
            else if constexpr (std::is_same_v<T, AtomicMeasure>)
                return format_atomic_measure(m);
            else
                return format_mixed_measure(m);
        },
        mu);
}

PiecewiseLinear parse_pwl(std::string_view text)
{
    LineReader r(text);
    const std::size_t k = r.header("pwl", 1)[0];
    std::vector<Knot> knots;
    std::vector<Rational> slopes;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& t = r.next("knot row");
        if (t.size() != 4) r.fail("expected \"x left right slope\"");
        knots.push_back(Knot{r.rational(t[0]), r.rational(t[1]), r.rational(t[2])});
        slopes.push_back(r.rational(t[3]));
    }
    r.expect_end();
    return wrap([&] {
        for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
            const Rational dx = knots[i + 1].x - knots[i].x;
            if (dx <= 0) throw ParseError("knot positions must increase");
            if ((knots[i + 1].left - knots[i].right) != slopes[i] * dx)
                throw ParseError("slope column disagrees with the knot values after x = " + to_string(knots[i].x));
        }
        return PiecewiseLinear(std::move(knots));
    });
}

std::string format_pwl(const PiecewiseLinear& f)
{
    const auto& k = f.knots();
    std::string s = "pwl " + std::to_string(k.size()) + "\n";
    for (std::size_t i = 0; i < k.size(); ++i)
        s += to_string(k[i].x) + " " + to_string(k[i].left) + " " + to_string(k[i].right) + " " +
             to_string(f.slope_after(i)) + "\n";
    return s;
}

MonotoneRC parse_g(std::string_view text)
{
    MonotoneRC g(parse_pwl(text));
    if (!validate_g(g)) throw ParseError("function is not nondecreasing with x <= g(x) <= 1");
    return g;
}

std::string format_g(const MonotoneRC& g) { return format_pwl(g.function()); }

StepCDF parse_cdf(std::string_view text)
{
    auto f = parse_pwl(text);
    try {
        return StepCDF::from_function(std::move(f));
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

std::string format_cdf(const StepCDF& f) { return format_pwl(f.function()); }

RateFunction parse_rate(std::string_view text)
{
    LineReader r(text);
    const std::size_t k = r.header("rate", 1)[0];
    std::vector<RatePiece> pieces;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& t = r.next("rate row");
        if (t.size() != 3) r.fail("expected \"lo hi value\"");
        pieces.push_back(RatePiece{r.rational(t[0]), r.rational(t[1]), r.rational(t[2])});
    }
    r.expect_end();
    return wrap([&] { return RateFunction(std::move(pieces)); });
}

std::string format_rate(const RateFunction& rf)
{
    std::string s = "rate " + std::to_string(rf.pieces().size()) + "\n";
    for (const auto& p : rf.pieces()) s += to_string(p.lo) + " " + to_string(p.hi) + " " + to_string(p.value) + "\n";
    return s;
}

SimpleGraph parse_graph(std::string_view text)
{
    LineReader r(text);
    const std::size_t n = r.header("graph", 1)[0];
    std::vector<Pair> edges;
    while (!r.done()) {
        const auto& t = r.next("edge");
        if (t.size() != 2) r.fail("expected \"i j\"");
        edges.emplace_back(label(r, t[0], n), label(r, t[1], n));
        if (edges.back().first == edges.back().second) r.fail("loop");
    }
    return SimpleGraph::from_edges(n, edges);
}

std::string format_graph(const SimpleGraph& g)
{
    std::string s = "graph " + std::to_string(g.size()) + "\n";
    for (auto [i, j] : g.edges()) s += std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
    return s;
}

std::string format_representation_csv(const IntervalRepresentation& r)
{
    std::string s = "index,rank,a,b\n";
    for (std::size_t i = 0; i < r.n; ++i)
        s += std::to_string(i + 1) + "," + std::to_string(r.rank[i]) + "," + to_string(r.a[i]) + "," +
             to_string(r.b[i]) + "\n";
    return s;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("write failed for " + path);
}

}  // namespace ordlim
