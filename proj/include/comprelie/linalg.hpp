#pragma once

#include "comprelie/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace comprelie {

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form. Pivot selection is deterministic: columns are
// swept left to right and the first nonzero entry at or below the current
// row is the pivot. The result is the unique RREF of the input.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// A list of linearly independent vectors inside a fixed ambient Q^d.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    std::vector<Vec> vectors;
    std::size_t dim() const { return vectors.size(); }
};

// {v : Mv = 0}. One basis vector per free column, in increasing column
// order, with the free variable set to 1.
SubspaceBasis kernel_basis(const Matrix& m);

// Particular solution of Mx = b with all free variables set to zero;
// nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Canonical basis of the column space: the nonzero rows of rref(M^T).
SubspaceBasis column_space_basis(const Matrix& m);

bool is_independent(const SubspaceBasis& basis);
bool in_span(const SubspaceBasis& basis, const Vec& v);
// span(sub) contained in span(full)?
bool span_contained(const SubspaceBasis& sub, const SubspaceBasis& full);

// Vectors of `full`, in their given order, that greedily extend `sub` to a
// basis of span(full). Requires span(sub) contained in span(full) and `sub`
// independent; the result has size dim(full) - dim(sub).
SubspaceBasis complement_basis(const SubspaceBasis& sub, const SubspaceBasis& full);

std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

}  // namespace comprelie
