#include "critset/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace critset {

namespace {

std::string cell_name(int row, int col) {
    return "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    while (!lines.empty() &&
           lines.back().find_first_not_of(" \t") == std::string_view::npos) {
        lines.pop_back();
    }
    return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (true) {
        pos = line.find_first_not_of(" \t", pos);
        if (pos == std::string_view::npos) break;
        auto end = line.find_first_of(" \t", pos);
        tokens.push_back(line.substr(pos, end - pos));
        if (end == std::string_view::npos) break;
        pos = end;
    }
    return tokens;
}

int parse_int(std::string_view token, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(std::string("invalid ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

std::string to_string(const Triple& t) {
    return "(" + std::to_string(t.row + 1) + "," + std::to_string(t.col + 1) + ";" +
           std::to_string(t.sym) + ")";
}

void check_order(int order) {
    if (order < 1 || order > kMaxOrder) {
        throw OrderOutOfRange("order " + std::to_string(order) + " outside 1.." +
                              std::to_string(kMaxOrder));
    }
}

PartialLatinSquare::PartialLatinSquare(int order) : order_(order) {
    check_order(order);
    cells_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0);
    row_used_.assign(static_cast<std::size_t>(order), 0);
    col_used_.assign(static_cast<std::size_t>(order), 0);
}

void PartialLatinSquare::place(int row, int col, int sym) {
    if (sym < 1 || sym > order_) {
        throw InvalidSquare("symbol " + std::to_string(sym) + " out of range 1.." +
                            std::to_string(order_) + " at " + cell_name(row, col));
    }
    if (cells_[index(row, col)] != 0) {
        throw InvalidSquare("cell " + cell_name(row, col) + " already filled");
    }
    const SymbolMask bit = SymbolMask{1} << (sym - 1);
    if (row_used_[row] & bit) {
        throw InvalidSquare("duplicate symbol " + std::to_string(sym) + " in row " +
                            std::to_string(row + 1));
    }
    if (col_used_[col] & bit) {
        throw InvalidSquare("duplicate symbol " + std::to_string(sym) + " in column " +
                            std::to_string(col + 1));
    }
    cells_[index(row, col)] = static_cast<std::uint8_t>(sym);
    row_used_[row] |= bit;
    col_used_[col] |= bit;
    ++size_;
}

PartialLatinSquare PartialLatinSquare::from_grid(int order, std::vector<int> grid) {
    PartialLatinSquare p(order);
    if (grid.size() != p.cells_.size()) {
        throw InvalidSquare("grid has " + std::to_string(grid.size()) + " cells, expected " +
                            std::to_string(p.cells_.size()));
    }
    for (int r = 0; r < order; ++r) {
        for (int c = 0; c < order; ++c) {
            const int sym = grid[p.index(r, c)];
            if (sym != 0) p.place(r, c, sym);
        }
    }
    return p;
}

PartialLatinSquare PartialLatinSquare::from_triples(int order, const std::vector<Triple>& triples) {
    PartialLatinSquare p(order);
    for (const auto& t : triples) {
        if (t.row < 0 || t.row >= order || t.col < 0 || t.col >= order) {
            throw InvalidSquare("cell " + cell_name(t.row, t.col) + " outside the grid");
        }
        p.place(t.row, t.col, t.sym);
    }
    return p;
}

std::vector<Triple> PartialLatinSquare::triples() const {
    std::vector<Triple> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int r = 0; r < order_; ++r)
        for (int c = 0; c < order_; ++c)
            if (int s = at(r, c)) out.push_back({r, c, s});
    return out;
}

std::vector<Cell> PartialLatinSquare::shape() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int r = 0; r < order_; ++r)
        for (int c = 0; c < order_; ++c)
            if (at(r, c) != 0) out.push_back({r, c});
    return out;
}

PartialLatinSquare PartialLatinSquare::without(Cell c) const {
    if (c.row < 0 || c.row >= order_ || c.col < 0 || c.col >= order_) {
        throw InvalidSquare("cell " + cell_name(c.row, c.col) + " outside the grid");
    }
    const int sym = at(c);
    if (sym == 0) throw InvalidSquare("cell " + cell_name(c.row, c.col) + " is already empty");
    PartialLatinSquare out = *this;
    const SymbolMask bit = SymbolMask{1} << (sym - 1);
    out.cells_[index(c.row, c.col)] = 0;
    out.row_used_[c.row] &= ~bit;
    out.col_used_[c.col] &= ~bit;
    --out.size_;
    return out;
}

PartialLatinSquare PartialLatinSquare::with(const Triple& t) const {
    if (t.row < 0 || t.row >= order_ || t.col < 0 || t.col >= order_) {
        throw InvalidSquare("cell " + cell_name(t.row, t.col) + " outside the grid");
    }
    PartialLatinSquare out = *this;
    out.place(t.row, t.col, t.sym);
    return out;
}

bool PartialLatinSquare::subset_of(const PartialLatinSquare& other) const {
    if (order_ != other.order_) return false;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i] != 0 && cells_[i] != other.cells_[i]) return false;
    }
    return true;
}

LatinSquare::LatinSquare(PartialLatinSquare p) : square_(std::move(p)) {
    if (!square_.complete()) {
        throw InvalidSquare("square of order " + std::to_string(square_.order()) + " has " +
                            std::to_string(square_.order() * square_.order() - square_.size()) +
                            " empty cells");
    }
}

LatinSquare LatinSquare::from_grid(int order, std::vector<int> grid) {
    return LatinSquare(PartialLatinSquare::from_grid(order, std::move(grid)));
}

PartialLatinSquare LatinSquare::restrict_to(const std::vector<Cell>& cells) const {
    std::vector<Triple> triples;
    triples.reserve(cells.size());
    for (auto c : cells) triples.push_back({c.row, c.col, at(c)});
    return PartialLatinSquare::from_triples(order(), triples);
}

std::strong_ordering LatinSquare::operator<=>(const LatinSquare& other) const {
    if (auto cmp = order() <=> other.order(); cmp != 0) return cmp;
    const auto& a = square_.cells();
    const auto& b = other.square_.cells();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

PartialLatinSquare parse_partial(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError("empty input");
    const auto header = split_tokens(lines[0]);
    if (header.size() != 1) throw ParseError("first line must hold only the order");
    const int order = parse_int(header[0], "order");
    if (order < 1 || order > kMaxOrder) {
        throw ParseError("order " + std::to_string(order) + " outside 1.." +
                         std::to_string(kMaxOrder));
    }
    if (lines.size() != static_cast<std::size_t>(order) + 1) {
        throw ParseError("expected " + std::to_string(order) + " rows, found " +
                         std::to_string(lines.size() - 1));
    }
    std::vector<int> grid;
    grid.reserve(static_cast<std::size_t>(order * order));
    for (int r = 0; r < order; ++r) {
        const auto tokens = split_tokens(lines[static_cast<std::size_t>(r) + 1]);
        if (tokens.size() != static_cast<std::size_t>(order)) {
            throw ParseError("row " + std::to_string(r + 1) + " has " +
                             std::to_string(tokens.size()) + " entries, expected " +
                             std::to_string(order));
        }
        for (auto tok : tokens) {
            if (tok == ".") {
                grid.push_back(0);
                continue;
            }
            const int sym = parse_int(tok, "symbol");
            if (sym < 0 || sym > order) {
                throw ParseError("symbol " + std::to_string(sym) + " in row " +
                                 std::to_string(r + 1) + " outside 1.." + std::to_string(order));
            }
            grid.push_back(sym);
        }
    }
    try {
        return PartialLatinSquare::from_grid(order, std::move(grid));
    } catch (const InvalidSquare& e) {
        throw ParseError(e.what());
    }
}

LatinSquare parse_latin(std::string_view text) {
    auto p = parse_partial(text);
    if (!p.complete()) throw ParseError("expected a complete Latin square");
    return LatinSquare(std::move(p));
}

std::string serialize(const PartialLatinSquare& p) {
    std::ostringstream out;
    out << p.order() << '\n';
    for (int r = 0; r < p.order(); ++r) {
        for (int c = 0; c < p.order(); ++c) {
            if (c) out << ' ';
            if (int s = p.at(r, c)) out << s;
            else out << '.';
        }
        out << '\n';
    }
    return out.str();
}

std::string serialize(const LatinSquare& l) { return serialize(l.as_partial()); }

bool triple_order_less(const PartialLatinSquare& a, const PartialLatinSquare& b) {
    const auto ta = a.triples();
    const auto tb = b.triples();
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
}

}  // namespace critset
