#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "chainlet/element.hpp"
#include "chainlet/linalg.hpp"

namespace chainlet {

/// Oriented simplex: k+1 affinely independent points; orientation follows
/// vertex order.  A single point is a 0-cell.
struct Simplex {
    std::vector<Vec> pts;
};

/// Oriented parallelepiped spanned from a base point by linearly independent
/// edges; orientation follows edge order.
struct Parallelepiped {
    Vec base;
    std::vector<Vec> edges;
};

class Cell {
  public:
    Cell(Simplex s, int n);
    Cell(Parallelepiped p, int n);

    static Cell simplex(std::vector<Vec> pts);
    static Cell parallelepiped(Vec base, std::vector<Vec> edges);
    static Cell point(Vec p);

    int dim() const { return n_; }
    int grade() const { return k_; }
    bool is_simplex() const { return std::holds_alternative<Simplex>(shape_); }
    const Simplex& as_simplex() const { return std::get<Simplex>(shape_); }
    const Parallelepiped& as_parallelepiped() const { return std::get<Parallelepiped>(shape_); }

    /// Spanning edge list (simplex: v_i - v_0; parallelepiped: edges).
    std::vector<Vec> spanning_edges() const;

    double measure() const;       // k-volume; 1 for 0-cells
    Vec midpoint() const;         // centroid for simplices
    Element direction() const;    // Vec(cell): mass times unit k-direction
    Element unit_direction() const;

    Cell translated(const Vec& v) const;
    Cell transformed(const Mat& A, const Vec& b) const;

    /// Signed facets with the induced orientation; empty for 0-cells.
    std::vector<std::pair<double, Cell>> facets() const;

    /// Binary subdivision into equal-measure children (2^k of them).
    std::vector<Cell> subdivide_once() const;

  private:
    int n_ = 0;
    int k_ = 0;
    std::variant<Simplex, Parallelepiped> shape_;
};

/// Validated construction; throws std::invalid_argument("degenerate cell")
/// when the spanning edges fail relative independence.
Cell make_simplex(std::vector<Vec> pts);
Cell make_parallelepiped(Vec base, std::vector<Vec> edges);

}  // namespace chainlet
