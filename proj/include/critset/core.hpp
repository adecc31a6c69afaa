#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace critset {

// Largest order for which squares are representable: one 32-bit symbol mask
// per row and column.
inline constexpr int kMaxOrder = 31;

using SymbolMask = std::uint32_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidSquare : public Error {
public:
    using Error::Error;
};

class OrderOutOfRange : public Error {
public:
    using Error::Error;
};

/// Zero-based cell coordinate. External formats add one.
struct Cell {
    int row = 0;
    int col = 0;

    auto operator<=>(const Cell&) const = default;
};

/// An entry (i,j;k). Row and column are zero-based; the symbol is 1..n.
struct Triple {
    int row = 0;
    int col = 0;
    int sym = 0;

    auto operator<=>(const Triple&) const = default;
};

/// Formats a triple in the one-based "(i,j;k)" notation.
std::string to_string(const Triple& t);

class LatinSquare;

/// An n x n array of optional symbols in which no symbol repeats in a row or
/// a column. Instances are immutable; every constructor validates, so an
/// object that exists is always a valid partial Latin square.
class PartialLatinSquare {
public:
    /// The empty square of the given order.
    explicit PartialLatinSquare(int order);

    /// Builds from a row-major grid where 0 means empty. Throws InvalidSquare
    /// on a wrong cell count, an out-of-range symbol or a row/column repeat.
    static PartialLatinSquare from_grid(int order, std::vector<int> grid);
    static PartialLatinSquare from_triples(int order, const std::vector<Triple>& triples);

    int order() const noexcept { return order_; }
    int size() const noexcept { return size_; }
    bool complete() const noexcept { return size_ == order_ * order_; }

    /// Symbol at the cell, 0 when empty.
    int at(int row, int col) const { return cells_[index(row, col)]; }
    int at(Cell c) const { return at(c.row, c.col); }
    bool filled(Cell c) const { return at(c) != 0; }

    /// Symbols already used in a row / column, bit k-1 for symbol k.
    SymbolMask row_mask(int row) const { return row_used_[row]; }
    SymbolMask col_mask(int col) const { return col_used_[col]; }

    /// Filled entries in row-major order.
    std::vector<Triple> triples() const;
    /// Filled cells in row-major order.
    std::vector<Cell> shape() const;
    const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }

    /// Copy with the cell emptied. Throws InvalidSquare if already empty.
    PartialLatinSquare without(Cell c) const;
    /// Copy with one more entry. Throws InvalidSquare if the cell is taken or
    /// the symbol clashes with its row or column.
    PartialLatinSquare with(const Triple& t) const;

    /// True when every filled cell of this square agrees with `other`.
    bool subset_of(const PartialLatinSquare& other) const;

    bool operator==(const PartialLatinSquare& other) const {
        return order_ == other.order_ && cells_ == other.cells_;
    }

private:
    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(order_) +
               static_cast<std::size_t>(col);
    }
    void place(int row, int col, int sym);

    int order_ = 0;
    int size_ = 0;
    std::vector<std::uint8_t> cells_;
    std::vector<SymbolMask> row_used_;
    std::vector<SymbolMask> col_used_;
};

/// A complete Latin square. Wraps a full PartialLatinSquare.
class LatinSquare {
public:
    /// Throws InvalidSquare unless `p` has no empty cells.
    explicit LatinSquare(PartialLatinSquare p);
    static LatinSquare from_grid(int order, std::vector<int> grid);

    int order() const noexcept { return square_.order(); }
    int at(int row, int col) const { return square_.at(row, col); }
    int at(Cell c) const { return square_.at(c); }
    const PartialLatinSquare& as_partial() const noexcept { return square_; }

    /// The partial square keeping only the given cells.
    PartialLatinSquare restrict_to(const std::vector<Cell>& cells) const;

    bool operator==(const LatinSquare& other) const { return square_ == other.square_; }
    std::strong_ordering operator<=>(const LatinSquare& other) const;

private:
    PartialLatinSquare square_;
};

/// Parses the grid text format: the order on the first line, then n lines of
/// n tokens, each "." / "0" (empty) or a symbol 1..n.
PartialLatinSquare parse_partial(std::string_view text);
/// As parse_partial, but requires every cell to be filled.
LatinSquare parse_latin(std::string_view text);

/// Canonical grid text: single spaces, "." for empty, trailing newline.
std::string serialize(const PartialLatinSquare& p);
std::string serialize(const LatinSquare& l);

/// remove_entry: `p` with `cell` emptied; the size drops by one.
inline PartialLatinSquare remove_entry(const PartialLatinSquare& p, Cell cell) {
    return p.without(cell);
}

/// Orders partial squares by their row-major triple lists (lexicographic).
bool triple_order_less(const PartialLatinSquare& a, const PartialLatinSquare& b);

void check_order(int order);

}  // namespace critset
