#include "comprelie/wells.hpp"

#include "comprelie/cohomology.hpp"
#include "comprelie/error.hpp"
#include "comprelie/linalg.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>

namespace comprelie {

namespace {

Vec phi_eval(const Cochain2& c, const Vec& v, const Vec& w) {
    Vec out = zero_vec(c.mod_dim());
    for (std::size_t b = 0; b < c.alg_dim(); ++b) {
        if (!w[b].is_zero()) {
            vec_add_scaled(out, w[b], c.phi_vec_basis(v, b));
        }
    }
    return out;
}

Vec psi_eval(const Cochain2& c, const Vec& v, const Vec& w) {
    Vec out = zero_vec(c.mod_dim());
    for (std::size_t b = 0; b < c.alg_dim(); ++b) {
        if (!w[b].is_zero()) {
            vec_add_scaled(out, w[b], c.psi_vec_basis(v, b));
        }
    }
    return out;
}

void check_pair_shapes(const AbelianExtension& ext, const AutPair& pair) {
    if (pair.beta.rows() != ext.fiber_dim || pair.beta.cols() != ext.fiber_dim ||
        pair.alpha.rows() != ext.base.dim || pair.alpha.cols() != ext.base.dim) {
        throw input_error("automorphism pair shapes do not match the extension");
    }
}

// Bottom m rows of inverse(hstack(s0, i)): fiber coordinates in the
// splitting carrier = im(s0) + im(i).
Matrix fiber_projection(const AbelianExtension& ext) {
    auto inv = inverse(hstack(ext.s0, ext.i));
    if (!inv) {
        throw input_error("the canonical section and inclusion do not split the carrier");
    }
    return inv->block(ext.base.dim, 0, ext.fiber_dim, ext.base.dim + ext.fiber_dim);
}

// Right-hand side of the lift equations for a candidate corrector v, one
// block of fiber coordinates per basis pair and identity family:
//   commutative: mu(alpha e_a) v(e_b) - v(e_a * e_b) + mu(alpha e_b) v(e_a)
//   pre-Lie:     l(alpha e_a) v(e_b) - v(e_a . e_b) + r(alpha e_b) v(e_a)
Vec lift_rhs(const ComPreLieAlgebra& base, const Representation& rho, const Matrix& alpha,
             const Matrix& v) {
    const std::size_t n = base.dim;
    const std::size_t m = rho.mod_dim;
    Vec out;
    out.reserve(2 * n * n * m);
    for (int family = 0; family < 2; ++family) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                Vec alpha_a = alpha.col(a);
                Vec alpha_b = alpha.col(b);
                Vec term;
                if (family == 0) {
                    term = rho.mu_of(alpha_a).apply(v.col(b));
                    vec_add_scaled(term, Rational(-1), v.apply(base.star.eval_basis(a, b)));
                    term = vec_add(term, rho.mu_of(alpha_b).apply(v.col(a)));
                } else {
                    term = rho.l_of(alpha_a).apply(v.col(b));
                    vec_add_scaled(term, Rational(-1), v.apply(base.bullet.eval_basis(a, b)));
                    term = vec_add(term, rho.r_of(alpha_b).apply(v.col(a)));
                }
                for (std::size_t k = 0; k < m; ++k) {
                    out.push_back(term[k]);
                }
            }
        }
    }
    return out;
}

}  // namespace

AutPair tau(const AbelianExtension& ext, const LiftedAutomorphism& lifted) {
    const std::size_t n = ext.base.dim;
    const std::size_t m = ext.fiber_dim;
    const std::size_t N = n + m;
    if (lifted.gamma.rows() != N || lifted.gamma.cols() != N) {
        throw input_error("gamma shape does not match the carrier");
    }
    if (!is_automorphism(ext.carrier, lifted.gamma)) {
        throw input_error("gamma is not an automorphism of the carrier");
    }
    if (!(ext.j * lifted.gamma * ext.i).is_zero()) {
        throw input_error("gamma does not preserve the fiber");
    }

    Matrix beta(m, m);
    Matrix gi = lifted.gamma * ext.i;
    for (std::size_t b = 0; b < m; ++b) {
        beta.set_col(b, fiber_coords(ext, gi.col(b)));
    }
    Matrix alpha = ext.j * lifted.gamma * ext.s0;
    if (!is_automorphism(ext.base, alpha)) {
        throw input_error("the base part of gamma is not an automorphism of the base");
    }
    return AutPair{std::move(beta), std::move(alpha)};
}

bool is_compatible_pair(const AbelianExtension& ext, const AutPair& pair) {
    check_pair_shapes(ext, pair);
    if (!is_invertible(pair.beta) || !is_automorphism(ext.base, pair.alpha)) {
        return false;
    }
    Representation rho = induced_rep(ext, ext.canonical_section());
    for (std::size_t k = 0; k < ext.base.dim; ++k) {
        Vec alpha_k = pair.alpha.col(k);
        if (!(pair.beta * rho.mu[k] == rho.mu_of(alpha_k) * pair.beta) ||
            !(pair.beta * rho.l[k] == rho.l_of(alpha_k) * pair.beta) ||
            !(pair.beta * rho.r[k] == rho.r_of(alpha_k) * pair.beta)) {
            return false;
        }
    }
    return true;
}

Cochain2 act_on_cocycle(const AutPair& pair, const Cochain2& c) {
    const std::size_t n = c.alg_dim();
    const std::size_t m = c.mod_dim();
    if (pair.beta.rows() != m || pair.beta.cols() != m || pair.alpha.rows() != n ||
        pair.alpha.cols() != n) {
        throw input_error("automorphism pair shapes do not match the cochain");
    }
    auto alpha_inv = inverse(pair.alpha);
    if (!alpha_inv) {
        throw input_error("the base automorphism is not invertible");
    }
    Cochain2 out(n, m);
    for (std::size_t a = 0; a < n; ++a) {
        Vec pre_a = alpha_inv->col(a);
        for (std::size_t b = a; b < n; ++b) {
            out.set_phi(a, b, pair.beta.apply(phi_eval(c, pre_a, alpha_inv->col(b))));
        }
        for (std::size_t b = 0; b < n; ++b) {
            out.set_psi(a, b, pair.beta.apply(psi_eval(c, pre_a, alpha_inv->col(b))));
        }
    }
    return out;
}

WellsClass wells_class(const AbelianExtension& ext, const AutPair& pair) {
    return wells_class(ext, pair, ext.canonical_section());
}

WellsClass wells_class(const AbelianExtension& ext, const AutPair& pair, const Section& s) {
    if (!section_valid(ext, s)) {
        throw input_error("wells_class requires a section of j");
    }
    if (!is_compatible_pair(ext, pair)) {
        throw domain_error("the Wells map is only defined on compatible pairs");
    }
    ComPreLieAlgebra base = ext.base;
    if (!base.validated && !validate_algebra(base).all_pass()) {
        throw input_error("the base algebra fails its axioms");
    }
    Representation rho = induced_rep(ext, s);
    Cochain2 c = extract_cocycle(ext, s);
    Cochain2 diff = act_on_cocycle(pair, c) - c;

    CocycleSpace space = cohomology_space(base, rho, 2);
    Matrix basis(space.ambient_dim, space.b.dim() + space.h_dim);
    for (std::size_t k = 0; k < space.b.dim(); ++k) {
        basis.set_col(k, space.b.vectors[k]);
    }
    for (std::size_t k = 0; k < space.h_dim; ++k) {
        basis.set_col(space.b.dim() + k, space.h_reps[k]);
    }
    auto sol = solve(basis, diff.to_coords());
    if (!sol) {
        throw internal_error("difference of 2-cocycles fell outside the cocycle space");
    }
    WellsClass result;
    result.coordinates = Vec(sol->begin() + static_cast<std::ptrdiff_t>(space.b.dim()),
                             sol->end());
    result.is_zero = vec_is_zero(result.coordinates);
    return result;
}

std::optional<InducedLift> induce(const AbelianExtension& ext, const AutPair& pair) {
    check_pair_shapes(ext, pair);
    if (!is_compatible_pair(ext, pair)) {
        return std::nullopt;
    }
    const std::size_t n = ext.base.dim;
    const std::size_t m = ext.fiber_dim;

    Representation rho = induced_rep(ext, ext.canonical_section());
    Cochain2 c = extract_cocycle(ext, ext.canonical_section());

    // Left-hand side of the lift equations: the acted-minus-original
    // cocycle values, evaluated on image pairs for the commutative family
    // and the pre-Lie family alike.
    Vec lhs;
    lhs.reserve(2 * n * n * m);
    for (int family = 0; family < 2; ++family) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                Vec alpha_a = pair.alpha.col(a);
                Vec alpha_b = pair.alpha.col(b);
                Vec value = family == 0
                                ? vec_sub(pair.beta.apply(c.phi(a, b)),
                                          phi_eval(c, alpha_a, alpha_b))
                                : vec_sub(pair.beta.apply(c.psi(a, b)),
                                          psi_eval(c, alpha_a, alpha_b));
                for (std::size_t k = 0; k < m; ++k) {
                    lhs.push_back(value[k]);
                }
            }
        }
    }

    Matrix system(lhs.size(), n * m);
    for (std::size_t col_j = 0; col_j < n; ++col_j) {
        for (std::size_t a = 0; a < m; ++a) {
            Matrix unit(m, n);
            unit(a, col_j) = Rational(1);
            system.set_col(col_j * m + a, lift_rhs(ext.base, rho, pair.alpha, unit));
        }
    }
    auto sol = solve(system, lhs);
    if (!sol) {
        return std::nullopt;
    }
    Matrix varphi(m, n);
    for (std::size_t col_j = 0; col_j < n; ++col_j) {
        for (std::size_t a = 0; a < m; ++a) {
            varphi(a, col_j) = (*sol)[col_j * m + a];
        }
    }

    // gamma(s0(x) + i(u)) = s0(alpha x) + i(beta u + varphi x).
    Matrix gamma = ext.s0 * pair.alpha * ext.j + ext.i * pair.beta * fiber_projection(ext) +
                   ext.i * varphi * ext.j;
    LiftedAutomorphism lifted{std::move(gamma)};
    AutPair back;
    try {
        back = tau(ext, lifted);
    } catch (const input_error& e) {
        throw internal_error(std::string("constructed lift rejected by tau: ") + e.what());
    }
    if (!(back == pair)) {
        throw internal_error("constructed lift does not restrict to the requested pair");
    }
    return InducedLift{std::move(lifted), std::move(varphi)};
}

LiftedAutomorphism gamma_from_z1(const AbelianExtension& ext, const Cochain1& f) {
    const std::size_t n = ext.base.dim;
    const std::size_t m = ext.fiber_dim;
    if (f.N.rows() != m || f.N.cols() != n) {
        throw input_error("1-cochain shape does not match the extension");
    }
    Representation rho = induced_rep(ext, ext.canonical_section());
    if (!is_1cocycle(ext.base, rho, f)) {
        throw input_error("gamma_from_z1 requires a 1-cocycle");
    }
    // gamma(s0(x) + i(u)) = s0(x) + i(u + f(x)); the first two summands of
    // the general lift formula collapse to the identity.
    LiftedAutomorphism lifted{Matrix::identity(n + m) + ext.i * f.N * ext.j};
    AutPair back;
    try {
        back = tau(ext, lifted);
    } catch (const input_error& e) {
        throw internal_error(std::string("1-cocycle lift rejected by tau: ") + e.what());
    }
    if (!back.beta.is_identity() || !back.alpha.is_identity()) {
        throw internal_error("1-cocycle lift does not restrict to the identity pair");
    }
    return lifted;
}

Cochain1 z1_from_gamma(const AbelianExtension& ext, const LiftedAutomorphism& gamma) {
    AutPair pair = tau(ext, gamma);
    if (!pair.beta.is_identity() || !pair.alpha.is_identity()) {
        throw input_error("z1_from_gamma requires gamma restricting to the identity pair");
    }
    const std::size_t n = ext.base.dim;
    const std::size_t m = ext.fiber_dim;
    Matrix values(m, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec moved = vec_sub(gamma.gamma.apply(ext.s0.col(k)), ext.s0.col(k));
        values.set_col(k, fiber_coords(ext, moved));
    }
    Cochain1 f{std::move(values)};
    Representation rho = induced_rep(ext, ext.canonical_section());
    if (!is_1cocycle(ext.base, rho, f)) {
        throw internal_error("fiber shift of an identity-pair automorphism is not a 1-cocycle");
    }
    return f;
}

ExactnessReport exactness_report(const AbelianExtension& ext,
                                 const std::vector<LiftedAutomorphism>& gammas,
                                 const std::vector<AutPair>& pairs) {
    ExactnessReport report;
    report.gamma_samples = gammas.size();
    report.pair_samples = pairs.size();

    auto note = [&](bool& flag, std::size_t index, const char* kind, const std::string& what) {
        flag = false;
        std::ostringstream msg;
        msg << kind << " sample " << index + 1 << ": " << what;
        report.failures.push_back(msg.str());
    };

    for (std::size_t g = 0; g < gammas.size(); ++g) {
        AutPair restricted;
        try {
            restricted = tau(ext, gammas[g]);
        } catch (const std::exception& e) {
            note(report.im_tau_in_ker_wells, g, "gamma", e.what());
            continue;
        }
        if (restricted.beta.is_identity() && restricted.alpha.is_identity()) {
            // (a) identity restriction means gamma comes from a 1-cocycle,
            // recovered and re-lifted to the same map.
            try {
                Cochain1 f = z1_from_gamma(ext, gammas[g]);
                if (!(gamma_from_z1(ext, f) == gammas[g])) {
                    note(report.ker_tau_in_im_iota, g, "gamma",
                         "1-cocycle round trip changed gamma");
                }
                // (b) the lift of any 1-cocycle restricts to the identity
                // pair; z1_from_gamma already certified f as a cocycle.
                AutPair relift = tau(ext, gamma_from_z1(ext, f));
                if (!relift.beta.is_identity() || !relift.alpha.is_identity()) {
                    note(report.im_iota_in_ker_tau, g, "gamma",
                         "lift of a 1-cocycle moved the base or fiber");
                }
            } catch (const std::exception& e) {
                note(report.ker_tau_in_im_iota, g, "gamma", e.what());
            }
        }
        // (c) restrictions of carrier automorphisms have vanishing class.
        try {
            WellsClass cls = wells_class(ext, restricted);
            if (!cls.is_zero) {
                note(report.im_tau_in_ker_wells, g, "gamma",
                     "restriction has a nonzero obstruction class");
            }
        } catch (const std::exception& e) {
            note(report.im_tau_in_ker_wells, g, "gamma", e.what());
        }
    }

    for (std::size_t p = 0; p < pairs.size(); ++p) {
        try {
            if (!is_compatible_pair(ext, pairs[p])) {
                continue;
            }
            WellsClass cls = wells_class(ext, pairs[p]);
            auto lift = induce(ext, pairs[p]);
            if (cls.is_zero && !lift) {
                // (d) a vanishing class must be liftable.
                note(report.ker_wells_in_im_tau, p, "pair",
                     "zero obstruction class but no lift found");
            }
            if (!cls.is_zero && lift) {
                note(report.im_tau_in_ker_wells, p, "pair",
                     "nonzero obstruction class yet a lift exists");
            }
        } catch (const std::exception& e) {
            note(report.ker_wells_in_im_tau, p, "pair", e.what());
        }
    }
    return report;
}

}  // namespace comprelie
