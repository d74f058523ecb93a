#include "comprelie/algebra.hpp"

#include "comprelie/error.hpp"
#include "comprelie/linalg.hpp"

#include <string>

namespace comprelie {

BilinearMap::BilinearMap(std::size_t dim_left, std::size_t dim_right, std::size_t dim_out)
    : nl_(dim_left), nr_(dim_right), no_(dim_out), c_(dim_left * dim_right * dim_out) {}

Vec BilinearMap::eval_basis(std::size_t i, std::size_t j) const {
    Vec out(no_);
    for (std::size_t k = 0; k < no_; ++k) {
        out[k] = c(i, j, k);
    }
    return out;
}

Vec BilinearMap::eval(const Vec& v, const Vec& w) const {
    if (v.size() != nl_ || w.size() != nr_) {
        throw input_error("bilinear map argument dimension mismatch");
    }
    Vec out(no_);
    for (std::size_t i = 0; i < nl_; ++i) {
        if (v[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < nr_; ++j) {
            if (w[j].is_zero()) {
                continue;
            }
            Rational coeff = v[i] * w[j];
            for (std::size_t k = 0; k < no_; ++k) {
                const Rational& s = c(i, j, k);
                if (!s.is_zero()) {
                    out[k] += coeff * s;
                }
            }
        }
    }
    return out;
}

Vec BilinearMap::eval_vec_basis(const Vec& v, std::size_t j) const {
    if (v.size() != nl_) {
        throw input_error("bilinear map argument dimension mismatch");
    }
    Vec out(no_);
    for (std::size_t i = 0; i < nl_; ++i) {
        if (v[i].is_zero()) {
            continue;
        }
        for (std::size_t k = 0; k < no_; ++k) {
            const Rational& s = c(i, j, k);
            if (!s.is_zero()) {
                out[k] += v[i] * s;
            }
        }
    }
    return out;
}

Vec BilinearMap::eval_basis_vec(std::size_t i, const Vec& w) const {
    if (w.size() != nr_) {
        throw input_error("bilinear map argument dimension mismatch");
    }
    Vec out(no_);
    for (std::size_t j = 0; j < nr_; ++j) {
        if (w[j].is_zero()) {
            continue;
        }
        for (std::size_t k = 0; k < no_; ++k) {
            const Rational& s = c(i, j, k);
            if (!s.is_zero()) {
                out[k] += w[j] * s;
            }
        }
    }
    return out;
}

ComPreLieAlgebra ComPreLieAlgebra::make(std::size_t dim, std::vector<std::string> labels) {
    ComPreLieAlgebra alg;
    alg.dim = dim;
    if (labels.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            labels.push_back("e" + std::to_string(i + 1));
        }
    }
    if (labels.size() != dim) {
        throw input_error("basis label count does not match dimension");
    }
    alg.basis_labels = std::move(labels);
    alg.star = BilinearMap(dim, dim, dim);
    alg.bullet = BilinearMap(dim, dim, dim);
    return alg;
}

bool operator==(const ComPreLieAlgebra& a, const ComPreLieAlgebra& b) {
    return a.dim == b.dim && a.basis_labels == b.basis_labels && a.star == b.star &&
           a.bullet == b.bullet;
}

AlgebraReport validate_algebra(ComPreLieAlgebra& alg) {
    const std::size_t n = alg.dim;
    const BilinearMap& st = alg.star;
    const BilinearMap& bu = alg.bullet;
    AlgebraReport report;

    for (std::size_t i = 0; i < n && report.commutative.pass; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (st.eval_basis(i, j) != st.eval_basis(j, i)) {
                report.commutative = {false, {i, j}};
                break;
            }
        }
    }

    for (std::size_t i = 0; i < n && report.associative.pass; ++i) {
        for (std::size_t j = 0; j < n && report.associative.pass; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = st.eval_vec_basis(st.eval_basis(i, j), k);
                Vec rhs = st.eval_basis_vec(i, st.eval_basis(j, k));
                if (lhs != rhs) {
                    report.associative = {false, {i, j, k}};
                    break;
                }
            }
        }
    }

    // (x.y).z - x.(y.z) symmetric in x,y
    for (std::size_t i = 0; i < n && report.prelie.pass; ++i) {
        for (std::size_t j = 0; j < n && report.prelie.pass; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = vec_sub(bu.eval_vec_basis(bu.eval_basis(i, j), k),
                                  bu.eval_basis_vec(i, bu.eval_basis(j, k)));
                Vec rhs = vec_sub(bu.eval_vec_basis(bu.eval_basis(j, i), k),
                                  bu.eval_basis_vec(j, bu.eval_basis(i, k)));
                if (lhs != rhs) {
                    report.prelie = {false, {i, j, k}};
                    break;
                }
            }
        }
    }

    // x.(y*z) = (x.y)*z + y*(x.z)
    for (std::size_t i = 0; i < n && report.compatible.pass; ++i) {
        for (std::size_t j = 0; j < n && report.compatible.pass; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = bu.eval_basis_vec(i, st.eval_basis(j, k));
                Vec rhs = vec_add(st.eval_vec_basis(bu.eval_basis(i, j), k),
                                  st.eval_basis_vec(j, bu.eval_basis(i, k)));
                if (lhs != rhs) {
                    report.compatible = {false, {i, j, k}};
                    break;
                }
            }
        }
    }

    alg.validated = report.all_pass();
    return report;
}

Vec eval_product(const ComPreLieAlgebra& alg, Product which, const Vec& v, const Vec& w) {
    if (v.size() != alg.dim || w.size() != alg.dim) {
        throw input_error("product argument dimension mismatch");
    }
    return which == Product::star ? alg.star.eval(v, w) : alg.bullet.eval(v, w);
}

Vec commutator(const ComPreLieAlgebra& alg, const Vec& v, const Vec& w) {
    return vec_sub(eval_product(alg, Product::bullet, v, w),
                   eval_product(alg, Product::bullet, w, v));
}

bool is_automorphism(const ComPreLieAlgebra& alg, const LinearMapOnAlgebra& map) {
    if (map.rows() != alg.dim || map.cols() != alg.dim) {
        throw input_error("automorphism candidate has wrong shape");
    }
    if (!is_invertible(map)) {
        return false;
    }
    for (std::size_t i = 0; i < alg.dim; ++i) {
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Vec ai = map.col(i);
            Vec aj = map.col(j);
            if (map.apply(alg.star.eval_basis(i, j)) != alg.star.eval(ai, aj)) {
                return false;
            }
            if (map.apply(alg.bullet.eval_basis(i, j)) != alg.bullet.eval(ai, aj)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace comprelie
