#include "comprelie/cochain.hpp"

#include "comprelie/error.hpp"

#include <utility>

namespace comprelie {

Vec Cochain1::to_coords() const {
    Vec out;
    out.reserve(N.rows() * N.cols());
    for (std::size_t j = 0; j < N.cols(); ++j) {
        for (std::size_t k = 0; k < N.rows(); ++k) {
            out.push_back(N(k, j));
        }
    }
    return out;
}

Cochain1 Cochain1::from_coords(std::size_t alg_dim, std::size_t mod_dim, const Vec& coords) {
    if (coords.size() != alg_dim * mod_dim) {
        throw input_error("degree-1 cochain coordinate vector has wrong length");
    }
    Matrix n(mod_dim, alg_dim);
    for (std::size_t j = 0; j < alg_dim; ++j) {
        for (std::size_t k = 0; k < mod_dim; ++k) {
            n(k, j) = coords[j * mod_dim + k];
        }
    }
    return {n};
}

Cochain2::Cochain2(std::size_t alg_dim, std::size_t mod_dim)
    : n_(alg_dim), m_(mod_dim), phi_(alg_dim * alg_dim, Vec(mod_dim)),
      psi_(alg_dim * alg_dim, Vec(mod_dim)) {}

void Cochain2::set_phi(std::size_t i, std::size_t j, const Vec& value) {
    if (value.size() != m_) {
        throw input_error("cochain value has wrong module dimension");
    }
    phi_[i * n_ + j] = value;
    phi_[j * n_ + i] = value;
}

void Cochain2::set_psi(std::size_t i, std::size_t j, const Vec& value) {
    if (value.size() != m_) {
        throw input_error("cochain value has wrong module dimension");
    }
    psi_[i * n_ + j] = value;
}

namespace {

Vec contract_left(const std::vector<Vec>& table, std::size_t n, std::size_t m, const Vec& v,
                  std::size_t j) {
    Vec out(m);
    for (std::size_t i = 0; i < n; ++i) {
        vec_add_scaled(out, v[i], table[i * n + j]);
    }
    return out;
}

Vec contract_right(const std::vector<Vec>& table, std::size_t n, std::size_t m, std::size_t i,
                   const Vec& w) {
    Vec out(m);
    for (std::size_t j = 0; j < n; ++j) {
        vec_add_scaled(out, w[j], table[i * n + j]);
    }
    return out;
}

}  // namespace

Vec Cochain2::phi_vec_basis(const Vec& v, std::size_t j) const {
    return contract_left(phi_, n_, m_, v, j);
}

Vec Cochain2::phi_basis_vec(std::size_t i, const Vec& w) const {
    return contract_right(phi_, n_, m_, i, w);
}

Vec Cochain2::psi_vec_basis(const Vec& v, std::size_t j) const {
    return contract_left(psi_, n_, m_, v, j);
}

Vec Cochain2::psi_basis_vec(std::size_t i, const Vec& w) const {
    return contract_right(psi_, n_, m_, i, w);
}

bool Cochain2::is_zero() const {
    for (const Vec& v : phi_) {
        if (!vec_is_zero(v)) {
            return false;
        }
    }
    for (const Vec& v : psi_) {
        if (!vec_is_zero(v)) {
            return false;
        }
    }
    return true;
}

namespace {

void require_same_shape(const Cochain2& a, const Cochain2& b) {
    if (a.alg_dim() != b.alg_dim() || a.mod_dim() != b.mod_dim()) {
        throw input_error("cochain shape mismatch");
    }
}

}  // namespace

Cochain2 Cochain2::operator+(const Cochain2& o) const {
    require_same_shape(*this, o);
    Cochain2 out(n_, m_);
    for (std::size_t k = 0; k < phi_.size(); ++k) {
        out.phi_[k] = vec_add(phi_[k], o.phi_[k]);
        out.psi_[k] = vec_add(psi_[k], o.psi_[k]);
    }
    return out;
}

Cochain2 Cochain2::operator-(const Cochain2& o) const {
    require_same_shape(*this, o);
    Cochain2 out(n_, m_);
    for (std::size_t k = 0; k < phi_.size(); ++k) {
        out.phi_[k] = vec_sub(phi_[k], o.phi_[k]);
        out.psi_[k] = vec_sub(psi_[k], o.psi_[k]);
    }
    return out;
}

Cochain2 Cochain2::scaled(const Rational& c) const {
    Cochain2 out(n_, m_);
    for (std::size_t k = 0; k < phi_.size(); ++k) {
        out.phi_[k] = vec_scale(c, phi_[k]);
        out.psi_[k] = vec_scale(c, psi_[k]);
    }
    return out;
}

Vec Cochain2::to_coords() const {
    Vec out;
    out.reserve(coord_dim(n_, m_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) {
            const Vec& v = phi(i, j);
            out.insert(out.end(), v.begin(), v.end());
        }
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const Vec& v = psi(i, j);
            out.insert(out.end(), v.begin(), v.end());
        }
    }
    return out;
}

Cochain2 Cochain2::from_coords(std::size_t alg_dim, std::size_t mod_dim, const Vec& coords) {
    if (coords.size() != coord_dim(alg_dim, mod_dim)) {
        throw input_error("degree-2 cochain coordinate vector has wrong length");
    }
    Cochain2 out(alg_dim, mod_dim);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < alg_dim; ++i) {
        for (std::size_t j = i; j < alg_dim; ++j) {
            Vec v(coords.begin() + pos, coords.begin() + pos + mod_dim);
            out.set_phi(i, j, v);
            pos += mod_dim;
        }
    }
    for (std::size_t i = 0; i < alg_dim; ++i) {
        for (std::size_t j = 0; j < alg_dim; ++j) {
            Vec v(coords.begin() + pos, coords.begin() + pos + mod_dim);
            out.set_psi(i, j, v);
            pos += mod_dim;
        }
    }
    return out;
}

GeneralCochain GeneralCochain::zero(std::size_t m, std::size_t n, std::size_t alg_dim,
                                    std::size_t mod_dim) {
    GeneralCochain f;
    f.m = m;
    f.n = n;
    f.alg_dim = alg_dim;
    f.mod_dim = mod_dim;
    std::size_t count = 1;
    for (std::size_t s = 0; s < m + n; ++s) {
        count *= alg_dim;
    }
    f.values.assign(count, Vec(mod_dim));
    return f;
}

std::size_t GeneralCochain::tuple_count() const { return values.size(); }

std::size_t GeneralCochain::flat_index(const std::vector<std::size_t>& idx) const {
    if (idx.size() != arity()) {
        throw input_error("cochain index arity mismatch");
    }
    std::size_t flat = 0;
    for (std::size_t s = 0; s < idx.size(); ++s) {
        if (idx[s] >= alg_dim) {
            throw input_error("cochain index out of range");
        }
        flat = flat * alg_dim + idx[s];
    }
    return flat;
}

Vec GeneralCochain::at_lincomb(std::vector<std::size_t> idx, std::size_t slot,
                               const Vec& coeffs) const {
    Vec out(mod_dim);
    for (std::size_t k = 0; k < alg_dim; ++k) {
        if (coeffs[k].is_zero()) {
            continue;
        }
        idx[slot] = k;
        vec_add_scaled(out, coeffs[k], at(idx));
    }
    return out;
}

bool GeneralCochain::is_zero() const {
    for (const Vec& v : values) {
        if (!vec_is_zero(v)) {
            return false;
        }
    }
    return true;
}

}  // namespace comprelie
