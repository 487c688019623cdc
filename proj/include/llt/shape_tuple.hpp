#pragma once

#include "llt/laurent.hpp"
#include "llt/partition.hpp"

#include <compare>
#include <string>
#include <vector>

namespace llt {

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// One skew-shape component. Cell content is content_offset + col - row, so
// contents rise along rows and fall down columns automatically.
struct SkewComponent {
    std::vector<Cell> cells;  // kept sorted by (row, col)
    int content_offset = 0;

    int content(const Cell& c) const { return content_offset + c.col - c.row; }

    // Throws InvalidInput unless the cells form a skew diagram: contiguous
    // rows and columns, with row intervals sliding weakly left going down.
    void validate() const;

    bool operator==(const SkewComponent&) const = default;
};

struct CellRef {
    int comp = 0;
    Cell cell;
    auto operator<=>(const CellRef&) const = default;
};

class ShapeTuple {
public:
    ShapeTuple() = default;
    explicit ShapeTuple(std::vector<SkewComponent> comps);

    int d() const { return static_cast<int>(comps_.size()); }
    int n() const { return static_cast<int>(cells_.size()); }
    const std::vector<SkewComponent>& components() const { return comps_; }

    // Flattened cells in (component, row, col) order; fillings index into this.
    const std::vector<CellRef>& cells() const { return cells_; }

    int content(int cell_index) const;
    long long shifted_content(int cell_index) const;  // d * content + component

    // Cell indices sorted by shifted content; throws InvalidInput on a tie.
    std::vector<int> reading_order() const;

    // In-component predecessors (left and upper neighbor) of each cell, as
    // flat indices; used to enumerate standard fillings.
    std::vector<std::vector<int>> predecessors() const;

    bool operator==(const ShapeTuple&) const = default;

    std::string str() const;
    nlohmann::json to_json() const;
    static ShapeTuple from_json(const nlohmann::json& j);

    // Convenience: one single-cell component per content value, in order.
    static ShapeTuple single_cells(const std::vector<int>& contents);

private:
    std::vector<SkewComponent> comps_;
    std::vector<CellRef> cells_;
};

// Tuple whose components are dominoes with contents {0,1} or single cells of
// content 0 or 1.
class TwoDiagTuple {
public:
    enum class Piece { H, V, S0, S1 };

    TwoDiagTuple() = default;
    explicit TwoDiagTuple(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}

    static TwoDiagTuple parse(const std::string& s);  // over alphabet H V 0 1
    std::string str() const;

    const std::vector<Piece>& pieces() const { return pieces_; }
    int d() const { return static_cast<int>(pieces_.size()); }
    int n() const;            // total cells
    int content_one_count() const;  // cells of content 1
    int vertical_count() const;

    ShapeTuple shape() const;

    // Reverse the component order, swap the single-cell contents, keep
    // dominoes; the LLT polynomial is invariant under this map.
    TwoDiagTuple conjugated() const;

    bool operator==(const TwoDiagTuple&) const = default;
    bool operator<(const TwoDiagTuple& o) const { return pieces_ < o.pieces_; }

private:
    std::vector<Piece> pieces_;
};

// Components eta_{a_i}: horizontal domino for a_i = 0, vertical for a_i = 1;
// odd total appends a single cell of content 0.
TwoDiagTuple domino_tuple(const std::vector<int>& a, bool odd);

}  // namespace llt
