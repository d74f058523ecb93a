#pragma once

#include "comprelie/cochain.hpp"
#include "comprelie/linalg.hpp"
#include "comprelie/representation.hpp"

#include <cstddef>
#include <optional>
#include <tuple>

namespace comprelie {

// Differential of a 1-cochain N:
//   phi(x,y) = mu(x)N(y) - N(x*y) + mu(y)N(x)
//   psi(x,y) = l(x)N(y) - N(x.y) + r(y)N(x)
Cochain2 d1(const ComPreLieAlgebra& alg, const Representation& rep, const Cochain1& N);

// True iff d1(N) vanishes, i.e. both defining identities hold on all pairs.
bool is_1cocycle(const ComPreLieAlgebra& alg, const Representation& rep, const Cochain1& N);

// Residuals of the three 2-cocycle identities on every basis triple
// (a,b,c). A 2-cocycle is a pair with all three tensors zero:
//   T1: phi(x,y*z) + mu(x)phi(y,z) - phi(x*y,z) - mu(z)phi(x,y)
//   T2: psi(x.y,z) + r(z)psi(x,y) - psi(x,y.z) - l(x)psi(y,z)
//       - psi(y.x,z) - r(z)psi(y,x) + psi(y,x.z) + l(y)psi(x,z)
//   T3: psi(x,y*z) + l(x)phi(y,z) - phi(x.y,z) - mu(z)psi(x,y)
//       - phi(y,x.z) - mu(y)psi(x,z)
struct Defect2 {
    std::size_t alg_dim = 0;
    std::size_t mod_dim = 0;
    std::vector<Vec> t1, t2, t3;  // alg_dim^3 entries each, triples in lex order

    const Vec& at(int family, std::size_t a, std::size_t b, std::size_t c) const;
    bool all_zero() const;
    // (family, a, b, c) of the first nonzero residual, families in order
    // T1, T2, T3; nullopt when everything vanishes.
    std::optional<std::tuple<int, std::size_t, std::size_t, std::size_t>> first_nonzero() const;
};

Defect2 d2_defect(const ComPreLieAlgebra& alg, const Representation& rep, const Cochain2& c);

bool is_2cocycle(const ComPreLieAlgebra& alg, const Representation& rep, const Cochain2& c);

// A 1-cochain f with d1(f) = c - cprime, or nullopt when the classes
// differ. The witness is the deterministic particular solution.
std::optional<Cochain1> are_cohomologous(const ComPreLieAlgebra& alg, const Representation& rep,
                                         const Cochain2& c, const Cochain2& cprime);

// Cocycles, coboundaries and quotient representatives in flat cochain
// coordinates (see Cochain1/Cochain2 to_coords for the indexing).
struct CocycleSpace {
    int degree = 0;
    std::size_t alg_dim = 0;
    std::size_t mod_dim = 0;
    std::size_t ambient_dim = 0;
    SubspaceBasis z;       // cocycles
    SubspaceBasis b;       // coboundaries (degree 2; empty in degree 1)
    std::size_t h_dim = 0;
    std::vector<Vec> h_reps;  // representatives completing b to a basis of z
};

// degree must be 1 or 2; alg and rep must have been validated.
CocycleSpace cohomology_space(const ComPreLieAlgebra& alg, const Representation& rep, int degree);

// Coefficient matrix of N -> d1(N) from degree-1 to degree-2 coordinates.
Matrix d1_matrix(const ComPreLieAlgebra& alg, const Representation& rep);

enum class CoboundaryPart { harrison, dzhumadildaev };

// Shuffle condition on the commutative block: for every 0 < i < m and every
// basis tuple, the signed sum of f over all (i, m-i)-shuffles of the y-slots
// vanishes, signs given by permutation parity. Also enforces antisymmetry
// in the first n-1 pre-Lie slots. Vacuously true for m < 2 (resp. n < 3).
bool shuffle_check(const GeneralCochain& f);

// One summand of the bidegree-(m,n) coboundary.
//  - harrison: raises m by 1, defined for all (m,n);
//  - dzhumadildaev: raises n by 1, implemented for m = 0 only; m >= 1
//    raises unsupported_error.
GeneralCochain general_coboundary(const ComPreLieAlgebra& alg, const Representation& rep,
                                  const GeneralCochain& f, CoboundaryPart part);

}  // namespace comprelie
