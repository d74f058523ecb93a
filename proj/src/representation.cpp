#include "comprelie/representation.hpp"

#include "comprelie/error.hpp"

#include <string>

namespace comprelie {

Representation Representation::trivial(std::size_t alg_dim, std::size_t mod_dim) {
    Representation rep;
    rep.alg_dim = alg_dim;
    rep.mod_dim = mod_dim;
    rep.mu.assign(alg_dim, Matrix(mod_dim, mod_dim));
    rep.l.assign(alg_dim, Matrix(mod_dim, mod_dim));
    rep.r.assign(alg_dim, Matrix(mod_dim, mod_dim));
    return rep;
}

namespace {

Matrix lincomb(const std::vector<Matrix>& mats, const Vec& x, std::size_t mod_dim) {
    Matrix out(mod_dim, mod_dim);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) {
            out = out + mats[i].scaled(x[i]);
        }
    }
    return out;
}

void require_shapes(const ComPreLieAlgebra& alg, const Representation& rep) {
    if (rep.alg_dim != alg.dim) {
        throw input_error("representation algebra dimension mismatch");
    }
    if (rep.mu.size() != alg.dim || rep.l.size() != alg.dim || rep.r.size() != alg.dim) {
        throw input_error("representation action family has wrong length");
    }
    for (const auto* family : {&rep.mu, &rep.l, &rep.r}) {
        for (const Matrix& m : *family) {
            if (m.rows() != rep.mod_dim || m.cols() != rep.mod_dim) {
                throw input_error("representation action matrix has wrong shape");
            }
        }
    }
}

}  // namespace

Matrix Representation::mu_of(const Vec& x) const { return lincomb(mu, x, mod_dim); }
Matrix Representation::l_of(const Vec& x) const { return lincomb(l, x, mod_dim); }
Matrix Representation::r_of(const Vec& x) const { return lincomb(r, x, mod_dim); }

RepresentationReport validate_representation(const ComPreLieAlgebra& alg,
                                             const Representation& rep) {
    if (!alg.validated) {
        throw input_error("validate_representation requires a validated algebra");
    }
    require_shapes(alg, rep);
    const std::size_t n = alg.dim;
    RepresentationReport report;

    for (std::size_t i = 0; i < n && report.mu_star.pass; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (rep.mu_of(alg.star.eval_basis(i, j)) != rep.mu[i] * rep.mu[j]) {
                report.mu_star = {false, {i, j}};
                break;
            }
        }
    }

    for (std::size_t i = 0; i < n && report.l_prelie.pass; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs = rep.l_of(alg.bullet.eval_basis(i, j)) - rep.l[i] * rep.l[j];
            Matrix rhs = rep.l_of(alg.bullet.eval_basis(j, i)) - rep.l[j] * rep.l[i];
            if (lhs != rhs) {
                report.l_prelie = {false, {i, j}};
                break;
            }
        }
    }

    for (std::size_t i = 0; i < n && report.r_prelie.pass; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs = rep.r[j] * rep.l[i] - rep.l[i] * rep.r[j];
            Matrix rhs = rep.r[j] * rep.r[i] - rep.r_of(alg.bullet.eval_basis(i, j));
            if (lhs != rhs) {
                report.r_prelie = {false, {i, j}};
                break;
            }
        }
    }

    for (std::size_t i = 0; i < n && report.l_mu.pass; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs = rep.l[i] * rep.mu[j];
            Matrix rhs = rep.mu_of(alg.bullet.eval_basis(i, j)) + rep.mu[j] * rep.l[i];
            if (lhs != rhs) {
                report.l_mu = {false, {i, j}};
                break;
            }
        }
    }

    for (std::size_t i = 0; i < n && report.r_mu.pass; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs = rep.r_of(alg.star.eval_basis(i, j));
            Matrix rhs = rep.mu[j] * rep.r[i] + rep.mu[i] * rep.r[j];
            if (lhs != rhs) {
                report.r_mu = {false, {i, j}};
                break;
            }
        }
    }

    return report;
}

Representation adjoint(const ComPreLieAlgebra& alg) {
    if (!alg.validated) {
        throw input_error("adjoint requires a validated algebra");
    }
    const std::size_t n = alg.dim;
    Representation rep = Representation::trivial(n, n);
    // mu[i] is left star-multiplication by e_i, l[i] left bullet action,
    // r[i] right bullet action; entry (k, j) is the k-th coordinate of the
    // image of e_j.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                rep.mu[i](k, j) = alg.star.c(i, j, k);
                rep.l[i](k, j) = alg.bullet.c(i, j, k);
                rep.r[i](k, j) = alg.bullet.c(j, i, k);
            }
        }
    }
    return rep;
}

ComPreLieAlgebra semidirect(const ComPreLieAlgebra& alg, const Representation& rep) {
    require_shapes(alg, rep);
    const std::size_t n = alg.dim;
    const std::size_t m = rep.mod_dim;
    std::vector<std::string> labels = alg.basis_labels;
    for (std::size_t b = 0; b < m; ++b) {
        labels.push_back("v" + std::to_string(b + 1));
    }
    ComPreLieAlgebra out = ComPreLieAlgebra::make(n + m, std::move(labels));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                out.star.c(i, j, k) = alg.star.c(i, j, k);
                out.bullet.c(i, j, k) = alg.bullet.c(i, j, k);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t b = 0; b < m; ++b) {
            for (std::size_t a = 0; a < m; ++a) {
                // e_i * v_b = mu(e_i) v_b and v_b * e_i alike; e_i . v_b
                // through l, v_b . e_i through r.
                out.star.c(i, n + b, n + a) = rep.mu[i](a, b);
                out.star.c(n + b, i, n + a) = rep.mu[i](a, b);
                out.bullet.c(i, n + b, n + a) = rep.l[i](a, b);
                out.bullet.c(n + b, i, n + a) = rep.r[i](a, b);
            }
        }
    }
    return out;
}

}  // namespace comprelie
