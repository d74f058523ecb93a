#pragma once

#include "comprelie/matrix.hpp"

#include <cstddef>
#include <vector>

namespace comprelie {

// Degree-1 cochain: a linear map A -> V, stored as the mod_dim x alg_dim
// matrix whose column j is the image of e_j.
struct Cochain1 {
    Matrix N;

    std::size_t alg_dim() const { return N.cols(); }
    std::size_t mod_dim() const { return N.rows(); }

    // Flat coordinates, column-major: index j*mod_dim + k is coordinate k
    // of the image of e_j.
    Vec to_coords() const;
    static Cochain1 from_coords(std::size_t alg_dim, std::size_t mod_dim, const Vec& coords);

    Cochain1 operator+(const Cochain1& o) const { return {N + o.N}; }
    Cochain1 operator-(const Cochain1& o) const { return {N - o.N}; }
    bool is_zero() const { return N.is_zero(); }

    friend bool operator==(const Cochain1& a, const Cochain1& b) = default;
};

// Degree-2 cochain: a pair of V-valued bilinear maps on A with phi
// symmetric. The symmetry is structural: set_phi writes both (i,j) and
// (j,i).
class Cochain2 {
public:
    Cochain2() = default;
    Cochain2(std::size_t alg_dim, std::size_t mod_dim);

    std::size_t alg_dim() const { return n_; }
    std::size_t mod_dim() const { return m_; }

    const Vec& phi(std::size_t i, std::size_t j) const { return phi_[i * n_ + j]; }
    const Vec& psi(std::size_t i, std::size_t j) const { return psi_[i * n_ + j]; }
    void set_phi(std::size_t i, std::size_t j, const Vec& value);
    void set_psi(std::size_t i, std::size_t j, const Vec& value);

    // phi at one vector argument, the other a basis index; used by the
    // differential and the automorphism action.
    Vec phi_vec_basis(const Vec& v, std::size_t j) const;
    Vec phi_basis_vec(std::size_t i, const Vec& w) const;
    Vec psi_vec_basis(const Vec& v, std::size_t j) const;
    Vec psi_basis_vec(std::size_t i, const Vec& w) const;

    bool is_zero() const;

    Cochain2 operator+(const Cochain2& o) const;
    Cochain2 operator-(const Cochain2& o) const;
    Cochain2 scaled(const Rational& c) const;

    // Flat coordinates: phi entries for pairs i <= j in lexicographic
    // order, then psi entries for all pairs (i,j) in lexicographic order,
    // each contributing its mod_dim output coordinates.
    Vec to_coords() const;
    static Cochain2 from_coords(std::size_t alg_dim, std::size_t mod_dim, const Vec& coords);
    static std::size_t coord_dim(std::size_t alg_dim, std::size_t mod_dim) {
        return (alg_dim * (alg_dim + 1) / 2 + alg_dim * alg_dim) * mod_dim;
    }

    friend bool operator==(const Cochain2& a, const Cochain2& b) = default;

private:
    std::size_t n_ = 0, m_ = 0;
    std::vector<Vec> phi_, psi_;
};

// Dense (m,n)-cochain: a multilinear map with m arguments from the
// commutative block and n from the pre-Lie block, V-valued. Values are
// stored per basis tuple (y_1..y_m, x_1..x_n), last index fastest.
struct GeneralCochain {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t alg_dim = 0;
    std::size_t mod_dim = 0;
    std::vector<Vec> values;

    static GeneralCochain zero(std::size_t m, std::size_t n, std::size_t alg_dim,
                               std::size_t mod_dim);

    std::size_t arity() const { return m + n; }
    std::size_t tuple_count() const;
    std::size_t flat_index(const std::vector<std::size_t>& idx) const;
    const Vec& at(const std::vector<std::size_t>& idx) const { return values[flat_index(idx)]; }
    Vec& at(const std::vector<std::size_t>& idx) { return values[flat_index(idx)]; }

    // Value with one slot replaced by a linear combination of basis
    // elements; the remaining slots stay basis indices.
    Vec at_lincomb(std::vector<std::size_t> idx, std::size_t slot, const Vec& coeffs) const;

    bool is_zero() const;

    friend bool operator==(const GeneralCochain& a, const GeneralCochain& b) = default;
};

}  // namespace comprelie
