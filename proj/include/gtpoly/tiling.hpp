#pragma once

// Tilings of GT-patterns and their tiling matrices.

#include "gtpoly/linalg.hpp"
#include "gtpoly/pattern.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace gtpoly {

/// Tiles are numbered densely in order of first encounter while scanning
/// rows bottom to top and each row left to right. free_tiles lists the free
/// tile numbers in the same order.
struct Tiling {
    int n = 0;
    std::vector<int> tile_of; // indexed by cell_index
    std::vector<std::vector<Cell>> tiles;
    std::vector<int> free_tiles;

    int tile_at(const Cell &c) const { return tile_of[cell_index(c.i, c.j)]; }

    std::size_t free_count() const { return free_tiles.size(); }

    /// Position of tile t in free_tiles, or -1 if t is not free.
    int free_position(int t) const {
        for (std::size_t k = 0; k < free_tiles.size(); ++k)
            if (free_tiles[k] == t)
                return static_cast<int>(k);
        return -1;
    }

    friend bool operator==(const Tiling &, const Tiling &) = default;
};

/// The only steps that link cells of one tile. There is no step within a
/// row: (i +- 1, j) is not a neighbour of (i, j).
inline constexpr std::array<Cell, 4> tile_steps{{{1, 1}, {0, 1}, {-1, -1}, {0, -1}}};

inline std::vector<Cell> tile_neighbours(const Cell &c, int n) {
    std::vector<Cell> out;
    for (const auto &d : tile_steps) {
        Cell nb{c.i + d.i, c.j + d.j};
        if (nb.i >= 1 && nb.i <= nb.j && nb.j <= n)
            out.push_back(nb);
    }
    return out;
}

inline bool is_free_tile(const std::vector<Cell> &tile, int n) {
    for (const auto &c : tile)
        if (c.j == n || (c.i == 1 && c.j == 1))
            return false;
    return true;
}

inline Tiling compute_tiling(const GTPattern &x) {
    require_gt_pattern(x);
    const int n = x.n();
    Tiling t;
    t.n = n;
    t.tile_of.assign(triangle_size(n), -1);
    std::vector<Cell> stack;
    for (const auto &start : cells_of(n)) {
        if (t.tile_at(start) >= 0)
            continue;
        const int id = static_cast<int>(t.tiles.size());
        std::vector<Cell> members;
        t.tile_of[cell_index(start.i, start.j)] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            Cell c = stack.back();
            stack.pop_back();
            members.push_back(c);
            for (const auto &nb : tile_neighbours(c, n)) {
                if (t.tile_at(nb) >= 0 || x.at(nb) != x.at(c))
                    continue;
                t.tile_of[cell_index(nb.i, nb.j)] = id;
                stack.push_back(nb);
            }
        }
        std::sort(members.begin(), members.end(), [](const Cell &a, const Cell &b) {
            return cell_index(a.i, a.j) < cell_index(b.i, b.j);
        });
        if (is_free_tile(members, n))
            t.free_tiles.push_back(id);
        t.tiles.push_back(std::move(members));
    }
    return t;
}

/// Rows are pattern rows 2..n-1, columns are free tiles in order; entry
/// (j, k) counts the cells of free tile k lying in row j.
inline IntegerMatrix tiling_matrix(const Tiling &t) {
    const std::size_t rows = t.n >= 2 ? static_cast<std::size_t>(t.n - 2) : 0;
    IntegerMatrix a(rows, t.free_tiles.size());
    for (std::size_t k = 0; k < t.free_tiles.size(); ++k)
        for (const auto &c : t.tiles[static_cast<std::size_t>(t.free_tiles[k])])
            a(static_cast<std::size_t>(c.j - 2), k) += 1;
    return a;
}

inline IntegerMatrix tiling_matrix(const GTPattern &x) { return tiling_matrix(compute_tiling(x)); }

} // namespace gtpoly
