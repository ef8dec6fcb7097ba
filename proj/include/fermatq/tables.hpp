#pragma once

/// Built-in reference table: the seven quotient surfaces at p = 7, one per
/// equivalence class of free twists, with the published twist matrix, the
/// canonical basis as form indices (j,k,l,m), the homogenized monomial
/// exponents (x0,x1,x2,y0,y1,y2), and the canonical-map verdict.  The tool
/// recomputes all of this from the matrices alone; the table is the frozen
/// expected answer the self-test compares against.

#include <array>

namespace fermatq {

struct ReferenceRow {
    int row;                                      // 1-based table position
    std::array<int, 4> matrix;                    // twist, row-major mod 7
    std::array<std::array<int, 4>, 3> tensors;    // canonical basis indices
    std::array<std::array<int, 6>, 3> monomials;  // exponent sextuples
    bool pencil;                                  // canonical map composed with a pencil
    int degree;                                   // canonical-map degree when !pencil
    std::array<int, 3> relation;                  // image-curve exponents when pencil
};

inline const std::array<ReferenceRow, 7>& reference_rows() {
    static const std::array<ReferenceRow, 7> rows = {{
        {1,
         {4, 5, 3, 1},
         {{{1, 3, 0, 4}, {2, 2, 1, 0}, {3, 0, 1, 2}}},
         {{{0, 1, 3, 0, 0, 4}, {0, 2, 2, 3, 1, 0}, {1, 3, 0, 1, 1, 2}}},
         false,
         10,
         {}},
        {2,
         {2, 6, 1, 4},
         {{{0, 0, 1, 1}, {1, 2, 0, 2}, {2, 0, 4, 0}}},
         {{{4, 0, 0, 2, 1, 1}, {1, 1, 2, 2, 0, 2}, {2, 2, 0, 0, 4, 0}}},
         false,
         11,
         {}},
        {3,
         {3, 3, 6, 4},
         {{{0, 1, 0, 3}, {1, 3, 1, 0}, {3, 0, 3, 1}}},
         {{{3, 0, 1, 1, 0, 3}, {0, 1, 3, 3, 1, 0}, {1, 3, 0, 0, 3, 1}}},
         false,
         14,
         {}},
        {4,
         {3, 3, 6, 2},
         {{{0, 2, 0, 3}, {1, 0, 0, 4}, {3, 1, 1, 2}}},
         {{{2, 0, 2, 1, 0, 3}, {3, 1, 0, 0, 0, 4}, {0, 3, 1, 1, 1, 2}}},
         false,
         5,
         {}},
        {5,
         {5, 4, 6, 5},
         {{{1, 0, 2, 2}, {2, 1, 3, 1}, {4, 0, 1, 0}}},
         {{{3, 1, 0, 0, 2, 2}, {1, 2, 1, 0, 3, 1}, {0, 4, 0, 3, 1, 0}}},
         false,
         7,
         {}},
        {6,
         {1, 1, 6, 2},
         {{{0, 1, 0, 1}, {1, 3, 1, 3}, {3, 0, 3, 0}}},
         {{{3, 0, 1, 3, 0, 1}, {0, 1, 3, 0, 1, 3}, {1, 3, 0, 1, 3, 0}}},
         false,
         14,
         {}},
        {7,
         {2, 2, 6, 3},
         {{{0, 2, 0, 2}, {2, 1, 2, 1}, {4, 0, 4, 0}}},
         {{{2, 0, 2, 2, 0, 2}, {1, 2, 1, 1, 2, 1}, {0, 4, 0, 0, 4, 0}}},
         true,
         0,
         {1, -2, 1}},
    }};
    return rows;
}

}  // namespace fermatq
