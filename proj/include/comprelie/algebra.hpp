#pragma once

#include "comprelie/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace comprelie {

// Structure constants of a bilinear map: e_i o e_j = sum_k c(i,j,k) f_k.
class BilinearMap {
public:
    BilinearMap() = default;
    BilinearMap(std::size_t dim_left, std::size_t dim_right, std::size_t dim_out);

    std::size_t dim_left() const { return nl_; }
    std::size_t dim_right() const { return nr_; }
    std::size_t dim_out() const { return no_; }

    Rational& c(std::size_t i, std::size_t j, std::size_t k) {
        return c_[(i * nr_ + j) * no_ + k];
    }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * nr_ + j) * no_ + k];
    }

    // e_i o e_j as a coordinate vector.
    Vec eval_basis(std::size_t i, std::size_t j) const;
    // v o w, extended bilinearly.
    Vec eval(const Vec& v, const Vec& w) const;
    // v o e_j and e_i o w: one side contracted.
    Vec eval_vec_basis(const Vec& v, std::size_t j) const;
    Vec eval_basis_vec(std::size_t i, const Vec& w) const;

    friend bool operator==(const BilinearMap& a, const BilinearMap& b) = default;

private:
    std::size_t nl_ = 0, nr_ = 0, no_ = 0;
    std::vector<Rational> c_;
};

enum class Product { star, bullet };

// Finite-dimensional Com-PreLie algebra over Q: a commutative associative
// product (star) and a left pre-Lie product (bullet) tied together by
//   x . (y * z) = (x . y) * z + y * (x . z).
struct ComPreLieAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    BilinearMap star;
    BilinearMap bullet;
    // Set by validate_algebra only; constructors never set it.
    bool validated = false;

    // Zero products, labels defaulting to e1..en.
    static ComPreLieAlgebra make(std::size_t dim, std::vector<std::string> labels = {});
};

// Structural equality; ignores the validation flag.
bool operator==(const ComPreLieAlgebra& a, const ComPreLieAlgebra& b);

// Verdict of one identity check: the witness is the lexicographically first
// failing basis tuple, empty on pass.
struct CheckResult {
    bool pass = true;
    std::vector<std::size_t> witness;
};

struct AlgebraReport {
    CheckResult commutative;  // witness (i, j)
    CheckResult associative;  // witness (i, j, k)
    CheckResult prelie;       // witness (i, j, k)
    CheckResult compatible;   // witness (i, j, k)
    bool all_pass() const {
        return commutative.pass && associative.pass && prelie.pass && compatible.pass;
    }
};

// Checks every axiom on all basis tuples and sets alg.validated accordingly.
AlgebraReport validate_algebra(ComPreLieAlgebra& alg);

Vec eval_product(const ComPreLieAlgebra& alg, Product which, const Vec& v, const Vec& w);

// v . w - w . v
Vec commutator(const ComPreLieAlgebra& alg, const Vec& v, const Vec& w);

// Linear endomorphisms of the algebra carry no structural invariants of
// their own; automorphism-ness is a property checked against an algebra.
using LinearMapOnAlgebra = Matrix;

// True iff `map` is invertible and multiplicative for both products.
bool is_automorphism(const ComPreLieAlgebra& alg, const LinearMapOnAlgebra& map);

}  // namespace comprelie
