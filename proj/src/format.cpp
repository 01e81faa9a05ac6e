#include "hyperalg/format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hyperalg {

const char* to_string(FormatErrorKind k) {
    switch (k) {
    case FormatErrorKind::syntax_error: return "SyntaxError";
    case FormatErrorKind::duplicate_cell: return "DuplicateCell";
    case FormatErrorKind::missing_cell: return "MissingCell";
    case FormatErrorKind::index_out_of_range: return "IndexOutOfRange";
    case FormatErrorKind::invalid_hypergroup: return "InvalidHypergroup";
    case FormatErrorKind::not_a_group: return "NotAGroup";
    }
    return "?";
}

FormatError::FormatError(FormatErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + (line ? " at line " + std::to_string(line) : std::string{}) +
                         ": " + detail),
      kind_{kind}, line_{line} {}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++number;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Line parsed{number, {}};
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
            const auto start = pos;
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
            if (pos > start) parsed.tokens.push_back(line.substr(start, pos - start));
        }
        if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
    }
    return out;
}

std::size_t to_index(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size())
        throw FormatError(FormatErrorKind::syntax_error, line, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

struct Header {
    std::string name;
    std::size_t order = 0;
};

Header parse_header(const std::vector<Line>& lines, std::string_view magic) {
    if (lines.size() < 3) throw FormatError(FormatErrorKind::syntax_error, 0, "missing header");
    const auto& m = lines[0];
    if (m.tokens.size() != 2 || m.tokens[0] != magic || m.tokens[1] != "v1")
        throw FormatError(FormatErrorKind::syntax_error, m.number, "expected '" + std::string(magic) + " v1'");
    const auto& n = lines[1];
    if (n.tokens.size() != 2 || n.tokens[0] != "name")
        throw FormatError(FormatErrorKind::syntax_error, n.number, "expected 'name <token>'");
    const auto& o = lines[2];
    if (o.tokens.size() != 2 || o.tokens[0] != "order")
        throw FormatError(FormatErrorKind::syntax_error, o.number, "expected 'order <n>'");
    const auto order = to_index(o.tokens[1], o.number);
    if (order == 0 || order > ElementSet::max_order)
        throw FormatError(FormatErrorKind::syntax_error, o.number, "order must be in 1..64");
    return {std::string(n.tokens[1]), order};
}

std::size_t line_of_witness(const AxiomReport& r, const std::vector<std::size_t>& cell_lines, std::size_t n) {
    switch (r.failure) {
    case AxiomFailure::identity_violation:
    case AxiomFailure::no_inverse:
    case AxiomFailure::ambiguous_inverse: return cell_lines[r.i * n];
    default: return cell_lines[r.i * n + r.j];
    }
}

} // namespace

NamedHypergroup parse_hypergroup(std::string_view text) {
    const auto lines = tokenize(text);
    const auto header = parse_header(lines, "hypergroup");
    const auto n = header.order;
    std::vector<ElementSet> table(n * n);
    std::vector<std::size_t> cell_lines(n * n, 0);
    for (std::size_t l = 3; l < lines.size(); ++l) {
        const auto& line = lines[l];
        const auto& t = line.tokens;
        if (t.size() < 4 || t[0] != "cell" || t[3] != ":")
            throw FormatError(FormatErrorKind::syntax_error, line.number, "expected 'cell <i> <j> : <members>'");
        const auto i = to_index(t[1], line.number);
        const auto j = to_index(t[2], line.number);
        if (i >= n || j >= n)
            throw FormatError(FormatErrorKind::index_out_of_range, line.number,
                              "cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside order " + std::to_string(n));
        if (cell_lines[i * n + j] != 0)
            throw FormatError(FormatErrorKind::duplicate_cell, line.number,
                              "cell (" + std::to_string(i) + "," + std::to_string(j) + ") already given on line " +
                                  std::to_string(cell_lines[i * n + j]));
        ElementSet cell;
        long previous = -1;
        for (std::size_t k = 4; k < t.size(); ++k) {
            const auto member = to_index(t[k], line.number);
            if (member >= n)
                throw FormatError(FormatErrorKind::index_out_of_range, line.number,
                                  "member " + std::to_string(member) + " outside order " + std::to_string(n));
            if (static_cast<long>(member) <= previous)
                throw FormatError(FormatErrorKind::syntax_error, line.number, "members must be strictly ascending");
            previous = static_cast<long>(member);
            cell.insert(static_cast<Element>(member));
        }
        table[i * n + j] = cell;
        cell_lines[i * n + j] = line.number;
    }
    for (std::size_t c = 0; c < n * n; ++c)
        if (cell_lines[c] == 0)
            throw FormatError(FormatErrorKind::missing_cell, 0,
                              "cell (" + std::to_string(c / n) + "," + std::to_string(c % n) + ") not given");
    try {
        return {header.name, Hypergroup::validate(n, std::move(table))};
    } catch (const InvalidHypergroup& e) {
        throw FormatError(FormatErrorKind::invalid_hypergroup, line_of_witness(e.report(), cell_lines, n), e.what());
    }
}

std::string serialize_hypergroup(const Hypergroup& h, std::string_view name) {
    std::string out = "hypergroup v1\nname " + std::string(name) + "\norder " + std::to_string(h.order()) + "\n";
    for (Element i = 0; i < h.order(); ++i)
        for (Element j = 0; j < h.order(); ++j) {
            out += "cell " + std::to_string(i) + " " + std::to_string(j) + " :";
            for (auto k : h.product(i, j)) out += " " + std::to_string(k);
            out += "\n";
        }
    return out;
}

CayleyTable parse_group(std::string_view text) {
    const auto lines = tokenize(text);
    const auto header = parse_header(lines, "group");
    const auto n = header.order;
    CayleyTable g{header.name, n, std::vector<Element>(n * n)};
    std::vector<std::size_t> row_lines(n, 0);
    for (std::size_t l = 3; l < lines.size(); ++l) {
        const auto& line = lines[l];
        const auto& t = line.tokens;
        if (t.size() != n + 3 || t[0] != "row" || t[2] != ":")
            throw FormatError(FormatErrorKind::syntax_error, line.number,
                              "expected 'row <i> :' followed by " + std::to_string(n) + " entries");
        const auto i = to_index(t[1], line.number);
        if (i >= n) throw FormatError(FormatErrorKind::index_out_of_range, line.number, "row index outside order");
        if (row_lines[i] != 0)
            throw FormatError(FormatErrorKind::duplicate_cell, line.number, "row " + std::to_string(i) + " given twice");
        for (std::size_t j = 0; j < n; ++j) {
            const auto v = to_index(t[j + 3], line.number);
            if (v >= n) throw FormatError(FormatErrorKind::index_out_of_range, line.number, "entry outside order");
            g.mul[i * n + j] = static_cast<Element>(v);
        }
        row_lines[i] = line.number;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (row_lines[i] == 0)
            throw FormatError(FormatErrorKind::missing_cell, 0, "row " + std::to_string(i) + " not given");
    try {
        check_group(g);
    } catch (const NotAGroup& e) {
        throw FormatError(FormatErrorKind::not_a_group, 0, e.what());
    }
    return g;
}

std::string serialize_group(const CayleyTable& g) {
    std::string out = "group v1\nname " + g.name + "\norder " + std::to_string(g.order) + "\n";
    for (Element i = 0; i < g.order; ++i) {
        out += "row " + std::to_string(i) + " :";
        for (Element j = 0; j < g.order; ++j) out += " " + std::to_string(g.at(i, j));
        out += "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out{path, std::ios::binary};
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

} // namespace hyperalg
