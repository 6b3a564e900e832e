#include <tba/error.hh>
#include <tba/io.hh>

#include <fstream>
#include <sstream>

namespace tba {

namespace
{
    /// Splits input into whitespace-separated tokens per significant line.
    class LineReader
    {
    public:
        explicit LineReader(std::istream & in) :
            _in(in)
        {
        }

        auto next(std::vector<std::string> & tokens) -> bool
        {
            std::string line;
            while (std::getline(_in, line)) {
                ++_line;
                if (auto hash = line.find('#'); hash != std::string::npos)
                    line.erase(hash);
                std::istringstream words(line);
                tokens.clear();
                for (std::string w; words >> w;)
                    tokens.push_back(w);
                if (! tokens.empty())
                    return true;
            }
            return false;
        }

        auto expect(std::string_view what) -> std::vector<std::string>
        {
            std::vector<std::string> tokens;
            if (! next(tokens))
                fail("unexpected end of file, expected '" + std::string(what) + "'");
            if (tokens.front() != what)
                fail("expected '" + std::string(what) + "', found '" + tokens.front() + "'");
            return tokens;
        }

        [[noreturn]] auto fail(const std::string & msg) const -> void
        {
            throw ParseError("line " + std::to_string(_line) + ": " + msg, _line);
        }

        auto line() const -> std::size_t { return _line; }

    private:
        std::istream & _in;
        std::size_t _line = 0;
    };

    struct Header
    {
        std::vector<std::string> names;
        Element zero = 0, one = 0;
    };

    auto lookup(const LineReader & r, const std::vector<std::string> & names, const std::string & label) -> Element
    {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == label)
                return static_cast<Element>(i);
        r.fail("unknown label '" + label + "'");
    }

    auto read_header(LineReader & r, std::string_view magic) -> Header
    {
        auto head = r.expect(magic);
        if (head.size() != 2 || head[1] != "v1")
            r.fail("expected '" + std::string(magic) + " v1'");

        auto size_line = r.expect("size");
        std::size_t n = 0;
        try {
            if (size_line.size() != 2)
                throw std::invalid_argument("arity");
            std::size_t used = 0;
            n = std::stoul(size_line[1], &used);
            if (used != size_line[1].size())
                throw std::invalid_argument("trailing");
        }
        catch (const std::exception &) {
            r.fail("malformed size");
        }
        if (n < 2 || n > max_carrier_size)
            r.fail("size must be between 2 and " + std::to_string(max_carrier_size));

        Header h;
        auto elem = r.expect("elem");
        if (elem.size() != n + 1)
            r.fail("elem lists " + std::to_string(elem.size() - 1) + " labels, size is " + std::to_string(n));
        h.names.assign(elem.begin() + 1, elem.end());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (h.names[i] == h.names[j])
                    r.fail("duplicate label '" + h.names[i] + "'");

        auto zero = r.expect("zero");
        if (zero.size() != 2)
            r.fail("expected 'zero <label>'");
        h.zero = lookup(r, h.names, zero[1]);
        auto one = r.expect("one");
        if (one.size() != 2)
            r.fail("expected 'one <label>'");
        h.one = lookup(r, h.names, one[1]);
        if (h.zero == h.one)
            r.fail("zero and one must be distinct");
        return h;
    }

    /// Reads entries of an arity-k table until the next keyword line.
    auto read_table(LineReader & r, const std::vector<std::string> & names, std::size_t arity, std::string_view next_keyword,
        std::vector<Element> & table) -> void
    {
        const auto n = names.size();
        std::size_t cells = 1;
        for (std::size_t i = 0; i < arity; ++i)
            cells *= n;
        table.assign(cells, 0);
        std::vector<bool> seen(cells, false);
        std::size_t filled = 0;
        std::vector<std::string> tokens;
        while (true) {
            if (! r.next(tokens))
                r.fail("unexpected end of file, expected '" + std::string(next_keyword) + "'");
            if (tokens.front() == next_keyword && tokens.size() == 1)
                break;
            if (tokens.size() != arity + 1)
                r.fail("expected " + std::to_string(arity + 1) + " labels per table line");
            std::size_t idx = 0;
            for (std::size_t i = 0; i < arity; ++i)
                idx = idx * n + lookup(r, names, tokens[i]);
            if (seen[idx])
                r.fail("duplicate entry");
            seen[idx] = true;
            table[idx] = lookup(r, names, tokens[arity]);
            ++filled;
        }
        if (filled != cells)
            r.fail("table not total: " + std::to_string(filled) + " of " + std::to_string(cells) + " entries");
    }

    auto expect_eof(LineReader & r) -> void
    {
        std::vector<std::string> tokens;
        if (r.next(tokens))
            r.fail("content after 'end'");
    }

    auto write_header(std::ostream & out, std::string_view magic, const std::vector<std::string> & names, Element zero, Element one) -> void
    {
        out << magic << " v1\n";
        out << "size " << names.size() << '\n';
        out << "elem";
        for (const auto & n : names)
            out << ' ' << n;
        out << '\n';
        out << "zero " << names[zero] << '\n';
        out << "one " << names[one] << '\n';
    }

    auto open_in(const std::filesystem::path & path) -> std::ifstream
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError("cannot open '" + path.string() + "'", 0);
        return in;
    }
}

auto read_model(std::istream & in) -> TernaryAlgebra
{
    LineReader r(in);
    auto h = read_header(r, "tba");
    auto p_line = r.expect("p");
    if (p_line.size() != 1)
        r.fail("expected 'p'");
    std::vector<Element> table;
    read_table(r, h.names, 3, "end", table);
    expect_eof(r);
    return TernaryAlgebra{std::move(h.names), h.zero, h.one, std::move(table)};
}

auto load_model(const std::filesystem::path & path) -> TernaryAlgebra
{
    auto in = open_in(path);
    return read_model(in);
}

auto write_model(std::ostream & out, const TernaryAlgebra & m) -> void
{
    write_header(out, "tba", m.names(), m.zero(), m.one());
    out << "p\n";
    const auto n = m.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                auto ea = static_cast<Element>(a), eb = static_cast<Element>(b), ec = static_cast<Element>(c);
                out << m.name(ea) << ' ' << m.name(eb) << ' ' << m.name(ec) << ' ' << m.name(m.p(ea, eb, ec)) << '\n';
            }
    out << "end\n";
}

auto save_model(const TernaryAlgebra & m, const std::filesystem::path & path) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw UsageError("cannot write '" + path.string() + "'");
    write_model(out, m);
}

auto model_to_string(const TernaryAlgebra & m) -> std::string
{
    std::ostringstream out;
    write_model(out, m);
    return out.str();
}

auto read_presentation(std::istream & in) -> NearRingPresentation
{
    LineReader r(in);
    auto h = read_header(r, "nr");
    NearRingPresentation p;
    p.zero = h.zero;
    p.one = h.one;
    auto add = r.expect("add");
    if (add.size() != 1)
        r.fail("expected 'add'");
    read_table(r, h.names, 2, "mul", p.add);
    read_table(r, h.names, 2, "end", p.mul);
    expect_eof(r);
    p.names = std::move(h.names);
    return p;
}

auto load_presentation(const std::filesystem::path & path) -> NearRingPresentation
{
    auto in = open_in(path);
    return read_presentation(in);
}

auto write_presentation(std::ostream & out, const NearRingPresentation & p) -> void
{
    write_header(out, "nr", p.names, p.zero, p.one);
    const auto n = p.size();
    for (auto [keyword, table] : {std::pair{"add", &p.add}, std::pair{"mul", &p.mul}}) {
        out << keyword << '\n';
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                out << p.names[a] << ' ' << p.names[b] << ' ' << p.names[(*table)[a * n + b]] << '\n';
    }
    out << "end\n";
}

} // namespace tba
