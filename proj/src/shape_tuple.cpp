#include "llt/shape_tuple.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace llt {

void SkewComponent::validate() const {
    if (cells.empty()) throw InvalidInput("component must contain at least one cell");
    if (!std::is_sorted(cells.begin(), cells.end())) throw InvalidInput("component cells must be sorted");
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw InvalidInput("duplicate cell in component");

    std::map<int, std::pair<int, int>> rows, cols;  // index -> [min, max]
    for (const Cell& c : cells) {
        auto [rit, rnew] = rows.try_emplace(c.row, std::pair{c.col, c.col});
        if (!rnew) {
            rit->second.first = std::min(rit->second.first, c.col);
            rit->second.second = std::max(rit->second.second, c.col);
        }
        auto [cit, cnew] = cols.try_emplace(c.col, std::pair{c.row, c.row});
        if (!cnew) {
            cit->second.first = std::min(cit->second.first, c.row);
            cit->second.second = std::max(cit->second.second, c.row);
        }
    }
    std::set<Cell> present(cells.begin(), cells.end());
    for (const auto& [r, span] : rows)
        for (int c = span.first; c <= span.second; ++c)
            if (!present.count({r, c})) throw InvalidInput("row of a skew component must be contiguous");
    for (const auto& [c, span] : cols)
        for (int r = span.first; r <= span.second; ++r)
            if (!present.count({r, c})) throw InvalidInput("column of a skew component must be contiguous");
    // Row intervals must slide weakly left going down.
    for (auto it = rows.begin(); it != rows.end(); ++it)
        for (auto jt = std::next(it); jt != rows.end(); ++jt)
            if (jt->second.first > it->second.first || jt->second.second > it->second.second)
                throw InvalidInput("rows of a skew component must slide weakly left going down");
}

ShapeTuple::ShapeTuple(std::vector<SkewComponent> comps) : comps_(std::move(comps)) {
    for (size_t i = 0; i < comps_.size(); ++i) {
        std::sort(comps_[i].cells.begin(), comps_[i].cells.end());
        comps_[i].validate();
        for (const Cell& c : comps_[i].cells) cells_.push_back({static_cast<int>(i), c});
    }
}

int ShapeTuple::content(int cell_index) const {
    const CellRef& r = cells_.at(cell_index);
    return comps_[r.comp].content(r.cell);
}

long long ShapeTuple::shifted_content(int cell_index) const {
    return static_cast<long long>(d()) * content(cell_index) + cells_.at(cell_index).comp;
}

std::vector<int> ShapeTuple::reading_order() const {
    std::vector<int> order(cells_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return shifted_content(a) < shifted_content(b); });
    for (size_t i = 1; i < order.size(); ++i)
        if (shifted_content(order[i - 1]) == shifted_content(order[i]))
            throw InvalidInput("tuple has a shifted-content tie");
    return order;
}

std::vector<std::vector<int>> ShapeTuple::predecessors() const {
    std::map<CellRef, int> index;
    for (size_t i = 0; i < cells_.size(); ++i) index[cells_[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> pred(cells_.size());
    for (size_t i = 0; i < cells_.size(); ++i) {
        const CellRef& r = cells_[i];
        auto left = index.find({r.comp, {r.cell.row, r.cell.col - 1}});
        if (left != index.end()) pred[i].push_back(left->second);
        auto up = index.find({r.comp, {r.cell.row - 1, r.cell.col}});
        if (up != index.end()) pred[i].push_back(up->second);
    }
    return pred;
}

std::string ShapeTuple::str() const {
    std::ostringstream out;
    for (int i = 0; i < d(); ++i) {
        if (i) out << " | ";
        for (size_t j = 0; j < comps_[i].cells.size(); ++j) {
            const Cell& c = comps_[i].cells[j];
            if (j) out << ' ';
            out << '(' << c.row << ',' << c.col << "):" << comps_[i].content(c);
        }
    }
    return out.str();
}

nlohmann::json ShapeTuple::to_json() const {
    nlohmann::json comps = nlohmann::json::array();
    for (const SkewComponent& sc : comps_) {
        nlohmann::json cells = nlohmann::json::array();
        for (const Cell& c : sc.cells) cells.push_back({c.row, c.col});
        comps.push_back({{"kind", "cells"}, {"cells", cells}, {"content_offset", sc.content_offset}});
    }
    return {{"components", comps}};
}

ShapeTuple ShapeTuple::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("components")) throw InvalidInput("expected a shape-tuple object");
    std::vector<SkewComponent> comps;
    for (const auto& cj : j.at("components")) {
        if (cj.value("kind", "cells") != "cells") throw InvalidInput("unknown component kind");
        SkewComponent sc;
        sc.content_offset = cj.value("content_offset", 0);
        for (const auto& cell : cj.at("cells")) {
            if (!cell.is_array() || cell.size() != 2) throw InvalidInput("cell must be [row, col]");
            sc.cells.push_back({cell[0].get<int>(), cell[1].get<int>()});
        }
        comps.push_back(std::move(sc));
    }
    return ShapeTuple(std::move(comps));
}

ShapeTuple ShapeTuple::single_cells(const std::vector<int>& contents) {
    std::vector<SkewComponent> comps;
    for (int c : contents) comps.push_back({{{1, 1}}, c});
    return ShapeTuple(std::move(comps));
}

namespace {

SkewComponent piece_component(TwoDiagTuple::Piece p) {
    switch (p) {
        case TwoDiagTuple::Piece::H:
            return {{{1, 1}, {1, 2}}, 0};  // contents 0, 1
        case TwoDiagTuple::Piece::V:
            return {{{1, 1}, {2, 1}}, 1};  // contents 1 (top), 0 (bottom)
        case TwoDiagTuple::Piece::S0:
            return {{{1, 1}}, 0};
        case TwoDiagTuple::Piece::S1:
            return {{{1, 1}}, 1};
    }
    throw InvalidInput("unknown piece");
}

}  // namespace

TwoDiagTuple TwoDiagTuple::parse(const std::string& s) {
    std::vector<Piece> pieces;
    for (char ch : s) {
        switch (ch) {
            case 'H': pieces.push_back(Piece::H); break;
            case 'V': pieces.push_back(Piece::V); break;
            case '0': pieces.push_back(Piece::S0); break;
            case '1': pieces.push_back(Piece::S1); break;
            default: throw InvalidInput("piece letters are H, V, 0, 1");
        }
    }
    return TwoDiagTuple(std::move(pieces));
}

std::string TwoDiagTuple::str() const {
    std::string s;
    for (Piece p : pieces_) {
        switch (p) {
            case Piece::H: s += 'H'; break;
            case Piece::V: s += 'V'; break;
            case Piece::S0: s += '0'; break;
            case Piece::S1: s += '1'; break;
        }
    }
    return s;
}

int TwoDiagTuple::n() const {
    int total = 0;
    for (Piece p : pieces_) total += (p == Piece::H || p == Piece::V) ? 2 : 1;
    return total;
}

int TwoDiagTuple::content_one_count() const {
    int m = 0;
    for (Piece p : pieces_) m += (p == Piece::S0) ? 0 : 1;
    return m;
}

int TwoDiagTuple::vertical_count() const {
    return static_cast<int>(std::count(pieces_.begin(), pieces_.end(), Piece::V));
}

ShapeTuple TwoDiagTuple::shape() const {
    std::vector<SkewComponent> comps;
    for (Piece p : pieces_) comps.push_back(piece_component(p));
    return ShapeTuple(std::move(comps));
}

TwoDiagTuple TwoDiagTuple::conjugated() const {
    std::vector<Piece> rev(pieces_.rbegin(), pieces_.rend());
    for (Piece& p : rev) {
        if (p == Piece::S0) {
            p = Piece::S1;
        } else if (p == Piece::S1) {
            p = Piece::S0;
        }
    }
    return TwoDiagTuple(std::move(rev));
}

TwoDiagTuple domino_tuple(const std::vector<int>& a, bool odd) {
    std::vector<TwoDiagTuple::Piece> pieces;
    for (int ai : a) {
        if (ai != 0 && ai != 1) throw InvalidInput("domino selector entries must be 0 or 1");
        pieces.push_back(ai == 0 ? TwoDiagTuple::Piece::H : TwoDiagTuple::Piece::V);
    }
    if (odd) pieces.push_back(TwoDiagTuple::Piece::S0);
    return TwoDiagTuple(std::move(pieces));
}

}  // namespace llt
