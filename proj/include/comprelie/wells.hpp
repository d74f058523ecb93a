#pragma once

#include "comprelie/extension.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace comprelie {

// A pair of automorphisms (beta on V, alpha on A) that a carrier
// automorphism might restrict to.
struct AutPair {
    Matrix beta;   // m x m, invertible
    Matrix alpha;  // n x n, automorphism of the base

    friend bool operator==(const AutPair& a, const AutPair& b) = default;
};

// Carrier automorphism preserving the fiber: gamma(im i) = im i.
struct LiftedAutomorphism {
    Matrix gamma;  // (n+m) x (n+m)

    friend bool operator==(const LiftedAutomorphism& a, const LiftedAutomorphism& b) = default;
};

// Restriction map: beta from gamma on the fiber, alpha = j gamma s0 on the
// base. Rejects gamma that is not a carrier automorphism or does not
// preserve the fiber (input_error). The base part is independent of the
// section used to read it.
AutPair tau(const AbelianExtension& ext, const LiftedAutomorphism& gamma);

// Compatibility of the pair with the induced action:
//   beta mu(x) = mu(alpha x) beta,  beta l(x) = l(alpha x) beta,
//   beta r(x) = r(alpha x) beta  for all x.
bool is_compatible_pair(const AbelianExtension& ext, const AutPair& pair);

// (phi, psi) -> beta phi(alpha^{-1} -, alpha^{-1} -), same for psi.
Cochain2 act_on_cocycle(const AutPair& pair, const Cochain2& c);

// Obstruction class [acted cocycle - cocycle] expressed in the chosen
// degree-2 quotient representatives.
struct WellsClass {
    Vec coordinates;  // length h_dim
    bool is_zero = false;
};

// Requires a compatible pair (domain_error otherwise). The section
// parameter exists to demonstrate section independence; the default uses
// the stored canonical section.
WellsClass wells_class(const AbelianExtension& ext, const AutPair& pair);
WellsClass wells_class(const AbelianExtension& ext, const AutPair& pair, const Section& s);

// A lift of a compatible pair: gamma with tau(gamma) = pair, obtained by
// solving for the corrector varphi in
//   beta phi(x,y) - phi(alpha x, alpha y)
//     = mu(alpha x) varphi(y) - varphi(x*y) + mu(alpha y) varphi(x)
// and the analogous pre-Lie equation. Exists iff the Wells class vanishes.
struct InducedLift {
    LiftedAutomorphism gamma;
    Matrix varphi;  // m x n
};

// nullopt when the pair is incompatible or the obstruction does not vanish.
std::optional<InducedLift> induce(const AbelianExtension& ext, const AutPair& pair);

// Fiber-and-base-identical automorphisms from 1-cocycles and back:
//   gamma_from_z1(f): s(x) + i(u) -> s(x) + i(u + f(x))
//   z1_from_gamma(gamma): x -> fiber part of gamma s(x) - s(x).
// gamma_from_z1 rejects non-cocycles, z1_from_gamma rejects gamma with
// tau(gamma) != (id, id); both directions are mutually inverse.
LiftedAutomorphism gamma_from_z1(const AbelianExtension& ext, const Cochain1& f);
Cochain1 z1_from_gamma(const AbelianExtension& ext, const LiftedAutomorphism& gamma);

// Sampled check of the four inclusions making the Wells sequence exact at
// its two middle nodes. Gammas with identity restriction feed (a) and (b),
// every gamma feeds (c), compatible pairs with zero class feed (d).
struct ExactnessReport {
    std::size_t gamma_samples = 0;
    std::size_t pair_samples = 0;
    bool ker_tau_in_im_iota = true;   // (a)
    bool im_iota_in_ker_tau = true;   // (b)
    bool im_tau_in_ker_wells = true;  // (c)
    bool ker_wells_in_im_tau = true;  // (d)
    std::vector<std::string> failures;
    bool all_pass() const {
        return ker_tau_in_im_iota && im_iota_in_ker_tau && im_tau_in_ker_wells &&
               ker_wells_in_im_tau;
    }
};

ExactnessReport exactness_report(const AbelianExtension& ext,
                                 const std::vector<LiftedAutomorphism>& gammas,
                                 const std::vector<AutPair>& pairs);

}  // namespace comprelie
