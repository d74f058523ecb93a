#pragma once

#include "comprelie/algebra.hpp"

#include <cstddef>
#include <vector>

namespace comprelie {

// Module data for a Com-PreLie algebra: per basis element e_i, the action
// matrices mu[i] (commutative product), l[i] (left pre-Lie action) and r[i]
// (right pre-Lie action) on Q^mod_dim. Actions of general elements extend
// linearly.
struct Representation {
    std::size_t alg_dim = 0;
    std::size_t mod_dim = 0;
    std::vector<Matrix> mu;
    std::vector<Matrix> l;
    std::vector<Matrix> r;

    static Representation trivial(std::size_t alg_dim, std::size_t mod_dim);

    Matrix mu_of(const Vec& x) const;
    Matrix l_of(const Vec& x) const;
    Matrix r_of(const Vec& x) const;

    friend bool operator==(const Representation& a, const Representation& b) = default;
};

struct RepresentationReport {
    CheckResult mu_star;   // mu(x*y) = mu(x) mu(y)
    CheckResult l_prelie;  // l(x.y) - l(x)l(y) symmetric in x,y
    CheckResult r_prelie;  // r(y)l(x) - l(x)r(y) = r(y)r(x) - r(x.y)
    CheckResult l_mu;      // l(x)mu(y) = mu(x.y) + mu(y)l(x)
    CheckResult r_mu;      // r(x*y) = mu(y)r(x) + mu(x)r(y)
    bool all_pass() const {
        return mu_star.pass && l_prelie.pass && r_prelie.pass && l_mu.pass && r_mu.pass;
    }
};

// Requires alg.validated and consistent shapes (input_error otherwise).
RepresentationReport validate_representation(const ComPreLieAlgebra& alg,
                                             const Representation& rep);

// The algebra acting on itself: mu from star, l and r from bullet on the
// left and right. Requires alg.validated.
Representation adjoint(const ComPreLieAlgebra& alg);

// Semidirect product on A + V: basis of A first, then of V, with
//   (x+u) * (y+v) = x*y + mu(x)v + mu(y)u
//   (x+u) . (y+v) = x.y + l(x)v + r(y)u.
// Built for any shapes-consistent rep data; the result validates as a
// Com-PreLie algebra exactly when the rep data validates over alg.
ComPreLieAlgebra semidirect(const ComPreLieAlgebra& alg, const Representation& rep);

}  // namespace comprelie
