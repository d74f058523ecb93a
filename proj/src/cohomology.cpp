#include "comprelie/cohomology.hpp"

#include "comprelie/error.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

namespace comprelie {

namespace {

void require_dims(const ComPreLieAlgebra& alg, const Representation& rep) {
    if (rep.alg_dim != alg.dim || rep.mu.size() != alg.dim || rep.l.size() != alg.dim ||
        rep.r.size() != alg.dim) {
        throw input_error("representation does not match the algebra dimension");
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

Cochain2 d1(const ComPreLieAlgebra& alg, const Representation& rep, const Cochain1& N) {
    require_dims(alg, rep);
    if (N.alg_dim() != alg.dim || N.mod_dim() != rep.mod_dim) {
        throw input_error("1-cochain shape does not match algebra and module");
    }
    const std::size_t n = alg.dim;
    Cochain2 out(n, rep.mod_dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            // mu(x)N(y) - N(x*y) + mu(y)N(x); symmetric because * is read
            // through its structure constants symmetrically here.
            Vec phi = rep.mu[i].apply(N.N.col(j));
            phi = vec_sub(phi, N.N.apply(alg.star.eval_basis(i, j)));
            phi = vec_add(phi, rep.mu[j].apply(N.N.col(i)));
            out.set_phi(i, j, phi);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // l(x)N(y) - N(x.y) + r(y)N(x)
            Vec psi = rep.l[i].apply(N.N.col(j));
            psi = vec_sub(psi, N.N.apply(alg.bullet.eval_basis(i, j)));
            psi = vec_add(psi, rep.r[j].apply(N.N.col(i)));
            out.set_psi(i, j, psi);
        }
    }
    return out;
}

bool is_1cocycle(const ComPreLieAlgebra& alg, const Representation& rep, const Cochain1& N) {
    return d1(alg, rep, N).is_zero();
}

const Vec& Defect2::at(int family, std::size_t a, std::size_t b, std::size_t c) const {
    const std::vector<Vec>& t = family == 0 ? t1 : family == 1 ? t2 : t3;
    return t[(a * alg_dim + b) * alg_dim + c];
}

bool Defect2::all_zero() const { return !first_nonzero().has_value(); }

std::optional<std::tuple<int, std::size_t, std::size_t, std::size_t>> Defect2::first_nonzero()
    const {
    for (int family = 0; family < 3; ++family) {
        const std::vector<Vec>& t = family == 0 ? t1 : family == 1 ? t2 : t3;
        for (std::size_t flat = 0; flat < t.size(); ++flat) {
            if (!vec_is_zero(t[flat])) {
                std::size_t c = flat % alg_dim;
                std::size_t b = (flat / alg_dim) % alg_dim;
                std::size_t a = flat / (alg_dim * alg_dim);
                return std::make_tuple(family, a, b, c);
            }
        }
    }
    return std::nullopt;
}

Defect2 d2_defect(const ComPreLieAlgebra& alg, const Representation& rep, const Cochain2& c) {
    require_dims(alg, rep);
    if (c.alg_dim() != alg.dim || c.mod_dim() != rep.mod_dim) {
        throw input_error("2-cochain shape does not match algebra and module");
    }
    const std::size_t n = alg.dim;
    Defect2 out;
    out.alg_dim = n;
    out.mod_dim = rep.mod_dim;
    out.t1.reserve(n * n * n);
    out.t2.reserve(n * n * n);
    out.t3.reserve(n * n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t cc = 0; cc < n; ++cc) {
                Vec star_bc = alg.star.eval_basis(b, cc);
                Vec star_ab = alg.star.eval_basis(a, b);
                Vec bullet_ab = alg.bullet.eval_basis(a, b);
                Vec bullet_ba = alg.bullet.eval_basis(b, a);
                Vec bullet_bc = alg.bullet.eval_basis(b, cc);
                Vec bullet_ac = alg.bullet.eval_basis(a, cc);

                // phi(x,y*z) + mu(x)phi(y,z) - phi(x*y,z) - mu(z)phi(x,y)
                Vec t1 = c.phi_basis_vec(a, star_bc);
                t1 = vec_add(t1, rep.mu[a].apply(c.phi(b, cc)));
                t1 = vec_sub(t1, c.phi_vec_basis(star_ab, cc));
                t1 = vec_sub(t1, rep.mu[cc].apply(c.phi(a, b)));
                out.t1.push_back(std::move(t1));

                // psi(x.y,z) + r(z)psi(x,y) - psi(x,y.z) - l(x)psi(y,z)
                // - psi(y.x,z) - r(z)psi(y,x) + psi(y,x.z) + l(y)psi(x,z)
                Vec t2 = c.psi_vec_basis(bullet_ab, cc);
                t2 = vec_add(t2, rep.r[cc].apply(c.psi(a, b)));
                t2 = vec_sub(t2, c.psi_basis_vec(a, bullet_bc));
                t2 = vec_sub(t2, rep.l[a].apply(c.psi(b, cc)));
                t2 = vec_sub(t2, c.psi_vec_basis(bullet_ba, cc));
                t2 = vec_sub(t2, rep.r[cc].apply(c.psi(b, a)));
                t2 = vec_add(t2, c.psi_basis_vec(b, bullet_ac));
                t2 = vec_add(t2, rep.l[b].apply(c.psi(a, cc)));
                out.t2.push_back(std::move(t2));

                // psi(x,y*z) + l(x)phi(y,z) - phi(x.y,z) - mu(z)psi(x,y)
                // - phi(y,x.z) - mu(y)psi(x,z)
                Vec t3 = c.psi_basis_vec(a, star_bc);
                t3 = vec_add(t3, rep.l[a].apply(c.phi(b, cc)));
                t3 = vec_sub(t3, c.phi_vec_basis(bullet_ab, cc));
                t3 = vec_sub(t3, rep.mu[cc].apply(c.psi(a, b)));
                t3 = vec_sub(t3, c.phi_basis_vec(b, bullet_ac));
                t3 = vec_sub(t3, rep.mu[b].apply(c.psi(a, cc)));
                out.t3.push_back(std::move(t3));
            }
        }
    }
    return out;
}

bool is_2cocycle(const ComPreLieAlgebra& alg, const Representation& rep, const Cochain2& c) {
    return d2_defect(alg, rep, c).all_zero();
}

Matrix d1_matrix(const ComPreLieAlgebra& alg, const Representation& rep) {
    const std::size_t n = alg.dim;
    const std::size_t m = rep.mod_dim;
    const std::size_t domain = n * m;
    Matrix out(Cochain2::coord_dim(n, m), domain);
    for (std::size_t q = 0; q < domain; ++q) {
        Cochain1 unit = Cochain1::from_coords(n, m, unit_vec(domain, q));
        out.set_col(q, d1(alg, rep, unit).to_coords());
    }
    return out;
}

std::optional<Cochain1> are_cohomologous(const ComPreLieAlgebra& alg, const Representation& rep,
                                         const Cochain2& c, const Cochain2& cprime) {
    if (c.alg_dim() != cprime.alg_dim() || c.mod_dim() != cprime.mod_dim()) {
        throw input_error("cohomologous comparison across different cochain shapes");
    }
    Vec rhs = (c - cprime).to_coords();
    auto x = solve(d1_matrix(alg, rep), rhs);
    if (!x) {
        return std::nullopt;
    }
    return Cochain1::from_coords(alg.dim, rep.mod_dim, *x);
}

namespace {

Vec defect_coords(const Defect2& d) {
    Vec out;
    out.reserve(3 * d.t1.size() * d.mod_dim);
    for (const std::vector<Vec>* t : {&d.t1, &d.t2, &d.t3}) {
        for (const Vec& v : *t) {
            out.insert(out.end(), v.begin(), v.end());
        }
    }
    return out;
}

}  // namespace

CocycleSpace cohomology_space(const ComPreLieAlgebra& alg, const Representation& rep,
                              int degree) {
    if (!alg.validated) {
        throw input_error("cohomology_space requires a validated algebra");
    }
    require_dims(alg, rep);
    // An invalid action can break the coboundary-in-cocycle containment
    // that the quotient construction relies on.
    if (!validate_representation(alg, rep).all_pass()) {
        throw input_error("cohomology_space requires a valid representation");
    }
    if (degree != 1 && degree != 2) {
        throw input_error("cohomology degree must be 1 or 2, got " + std::to_string(degree));
    }
    const std::size_t n = alg.dim;
    const std::size_t m = rep.mod_dim;
    CocycleSpace space;
    space.degree = degree;
    space.alg_dim = n;
    space.mod_dim = m;

    if (degree == 1) {
        space.ambient_dim = n * m;
        space.z = kernel_basis(d1_matrix(alg, rep));
        space.b.ambient_dim = space.ambient_dim;
        space.h_dim = space.z.dim();
        space.h_reps = space.z.vectors;
        return space;
    }

    space.ambient_dim = Cochain2::coord_dim(n, m);
    Matrix constraints(3 * n * n * n * m, space.ambient_dim);
    for (std::size_t q = 0; q < space.ambient_dim; ++q) {
        Cochain2 unit = Cochain2::from_coords(n, m, unit_vec(space.ambient_dim, q));
        constraints.set_col(q, defect_coords(d2_defect(alg, rep, unit)));
    }
    space.z = kernel_basis(constraints);
    space.b = column_space_basis(d1_matrix(alg, rep));
    SubspaceBasis h = complement_basis(space.b, space.z);
    space.h_dim = space.z.dim() - space.b.dim();
    space.h_reps = h.vectors;
    return space;
}

namespace {

// Shuffles of {0..m-1} into an ascending block of size i and an ascending
// remainder; yields (inverse permutation, parity sign).
void for_each_shuffle(std::size_t m, std::size_t i,
                      const std::function<void(const std::vector<std::size_t>&, int)>& fn) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + i, true);
    // std::prev_permutation over bool masks enumerates all i-subsets.
    do {
        std::vector<std::size_t> perm(m);
        std::size_t first = 0;
        std::size_t second = i;
        for (std::size_t pos = 0; pos < m; ++pos) {
            if (pick[pos]) {
                perm[first++] = pos;  // source `first` goes to target `pos`
            } else {
                perm[second++] = pos;
            }
        }
        int inversions = 0;
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                if (perm[a] > perm[b]) {
                    ++inversions;
                }
            }
        }
        std::vector<std::size_t> inv(m);
        for (std::size_t s = 0; s < m; ++s) {
            inv[perm[s]] = s;
        }
        fn(inv, inversions % 2 == 0 ? 1 : -1);
    } while (std::prev_permutation(pick.begin(), pick.end()));
}

bool next_tuple(std::vector<std::size_t>& idx, std::size_t radix) {
    for (std::size_t pos = idx.size(); pos-- > 0;) {
        if (++idx[pos] < radix) {
            return true;
        }
        idx[pos] = 0;
    }
    return false;
}

}  // namespace

bool shuffle_check(const GeneralCochain& f) {
    const std::size_t m = f.m;
    const std::size_t n = f.n;
    // Shuffle sums over the commutative block.
    if (m >= 2) {
        std::vector<std::size_t> idx(f.arity(), 0);
        do {
            for (std::size_t i = 1; i < m; ++i) {
                Vec sum(f.mod_dim);
                for_each_shuffle(m, i, [&](const std::vector<std::size_t>& inv, int sign) {
                    std::vector<std::size_t> arg = idx;
                    for (std::size_t slot = 0; slot < m; ++slot) {
                        arg[slot] = idx[inv[slot]];
                    }
                    vec_add_scaled(sum, Rational(sign), f.at(arg));
                });
                if (!vec_is_zero(sum)) {
                    return false;
                }
            }
        } while (next_tuple(idx, f.alg_dim));
    }
    // Antisymmetry in the first n-1 pre-Lie slots.
    if (n >= 3) {
        std::vector<std::size_t> idx(f.arity(), 0);
        do {
            for (std::size_t p = 0; p + 2 < n; ++p) {
                std::vector<std::size_t> swapped = idx;
                std::swap(swapped[m + p], swapped[m + p + 1]);
                if (f.at(idx) != vec_scale(Rational(-1), f.at(swapped))) {
                    return false;
                }
            }
        } while (next_tuple(idx, f.alg_dim));
    }
    return true;
}

namespace {

GeneralCochain harrison_coboundary(const ComPreLieAlgebra& alg, const Representation& rep,
                                   const GeneralCochain& f) {
    GeneralCochain out = GeneralCochain::zero(f.m + 1, f.n, f.alg_dim, f.mod_dim);
    const std::size_t m = f.m;
    std::vector<std::size_t> idx(out.arity(), 0);
    do {
        // idx holds y_1..y_{m+1} then x_1..x_n (0-based slots).
        Vec value(f.mod_dim);

        std::vector<std::size_t> head(f.arity());
        for (std::size_t s = 0; s < m; ++s) {
            head[s] = idx[s + 1];
        }
        for (std::size_t s = 0; s < f.n; ++s) {
            head[m + s] = idx[m + 1 + s];
        }
        value = vec_add(value, rep.mu[idx[0]].apply(f.at(head)));

        for (std::size_t i = 1; i <= m; ++i) {
            std::vector<std::size_t> arg(f.arity(), 0);
            for (std::size_t s = 0; s + 1 < i; ++s) {
                arg[s] = idx[s];
            }
            for (std::size_t s = i; s < m; ++s) {
                arg[s] = idx[s + 1];
            }
            for (std::size_t s = 0; s < f.n; ++s) {
                arg[m + s] = idx[m + 1 + s];
            }
            Vec merged = f.at_lincomb(arg, i - 1, alg.star.eval_basis(idx[i - 1], idx[i]));
            vec_add_scaled(value, Rational(i % 2 == 0 ? 1 : -1), merged);
        }

        std::vector<std::size_t> tail(f.arity());
        for (std::size_t s = 0; s < m; ++s) {
            tail[s] = idx[s];
        }
        for (std::size_t s = 0; s < f.n; ++s) {
            tail[m + s] = idx[m + 1 + s];
        }
        vec_add_scaled(value, Rational((m + 1) % 2 == 0 ? 1 : -1),
                       rep.mu[idx[m]].apply(f.at(tail)));

        out.at(idx) = std::move(value);
    } while (next_tuple(idx, f.alg_dim));
    return out;
}

GeneralCochain dzhumadildaev_coboundary(const ComPreLieAlgebra& alg, const Representation& rep,
                                        const GeneralCochain& f) {
    // Only the m = 0 block: the mixed term acting on y-slots leaves a free
    // x index in the source formula, so higher blocks are not defined here.
    if (f.m != 0) {
        throw unsupported_error(
            "the pre-Lie coboundary is implemented for cochains with no commutative slots");
    }
    const std::size_t n = f.n;
    GeneralCochain out = GeneralCochain::zero(0, n + 1, f.alg_dim, f.mod_dim);
    std::vector<std::size_t> idx(n + 1, 0);
    do {
        Vec value(f.mod_dim);
        for (std::size_t i = 1; i <= n; ++i) {
            Rational sign(i % 2 == 1 ? 1 : -1);  // (-1)^{i+1}

            // l(x_i) f(..omit x_i.., x_{n+1})
            std::vector<std::size_t> omit;
            omit.reserve(n);
            for (std::size_t s = 0; s < n + 1; ++s) {
                if (s != i - 1) {
                    omit.push_back(idx[s]);
                }
            }
            vec_add_scaled(value, sign, rep.l[idx[i - 1]].apply(f.at(omit)));

            // r(x_{n+1}) f(..omit x_i and x_{n+1}.., x_i)
            std::vector<std::size_t> rot;
            rot.reserve(n);
            for (std::size_t s = 0; s < n; ++s) {
                if (s != i - 1) {
                    rot.push_back(idx[s]);
                }
            }
            rot.push_back(idx[i - 1]);
            vec_add_scaled(value, sign, rep.r[idx[n]].apply(f.at(rot)));

            // -f(..same.., x_i . x_{n+1})
            Vec prod = alg.bullet.eval_basis(idx[i - 1], idx[n]);
            vec_add_scaled(value, -sign, f.at_lincomb(rot, n - 1, prod));
        }
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                // f([x_i,x_j], ..omit both.., x_{n+1})
                std::vector<std::size_t> arg;
                arg.reserve(n);
                arg.push_back(0);  // bracket slot, filled by lincomb
                for (std::size_t s = 0; s < n + 1; ++s) {
                    if (s != i - 1 && s != j - 1) {
                        arg.push_back(idx[s]);
                    }
                }
                Vec bracket = vec_sub(alg.bullet.eval_basis(idx[i - 1], idx[j - 1]),
                                      alg.bullet.eval_basis(idx[j - 1], idx[i - 1]));
                Rational sign((i + j) % 2 == 0 ? 1 : -1);
                vec_add_scaled(value, sign, f.at_lincomb(arg, 0, bracket));
            }
        }
        out.at(idx) = std::move(value);
    } while (next_tuple(idx, f.alg_dim));
    return out;
}

}  // namespace

GeneralCochain general_coboundary(const ComPreLieAlgebra& alg, const Representation& rep,
                                  const GeneralCochain& f, CoboundaryPart part) {
    require_dims(alg, rep);
    if (f.alg_dim != alg.dim || f.mod_dim != rep.mod_dim) {
        throw input_error("general cochain shape does not match algebra and module");
    }
    return part == CoboundaryPart::harrison ? harrison_coboundary(alg, rep, f)
                                            : dzhumadildaev_coboundary(alg, rep, f);
}

}  // namespace comprelie
