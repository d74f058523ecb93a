#pragma once

#include "comprelie/cohomology.hpp"
#include "comprelie/representation.hpp"

#include <cstddef>
#include <optional>

namespace comprelie {

// A splitting of the carrier: any linear section of j, i.e. j * s = id_A.
struct Section {
    Matrix s;  // (n+m) x n
};

// Abelian extension of a base algebra A by a module V: a carrier algebra on
// A + V together with the injection i of V, the projection j onto A and a
// distinguished section s0 of j. Builders produce block matrices (A
// coordinates first), but any matrices satisfying the exactness relations
// are accepted by the validator.
struct AbelianExtension {
    ComPreLieAlgebra base;
    std::size_t fiber_dim = 0;
    ComPreLieAlgebra carrier;
    Matrix i;   // (n+m) x m
    Matrix j;   // n x (n+m)
    Matrix s0;  // (n+m) x n

    Section canonical_section() const { return {s0}; }
};

struct ExtensionReport {
    CheckResult shapes;         // dimension bookkeeping of all six members
    CheckResult base_valid;     // base passes validate_algebra
    CheckResult carrier_valid;  // carrier passes validate_algebra
    CheckResult ji_zero;        // j * i = 0
    CheckResult i_injective;
    CheckResult j_surjective;
    CheckResult image_i_is_kernel_j;
    CheckResult section;        // j * s0 = id
    CheckResult fiber_trivial;  // i(u) o i(v) = 0 for both products; this is
                                // also i being a homomorphism from the
                                // abelian algebra on V
    CheckResult j_homomorphism; // j(a o b) = j(a) o j(b) for both products
    bool all_pass() const;
};

// Carrier on A + V in block coordinates:
//   (x+u) * (y+v) = x*y + mu(x)v + mu(y)u + phi(x,y)
//   (x+u) . (y+v) = x.y + l(x)v + r(y)u + psi(x,y)
// Requires alg validated, rep valid over alg and c a 2-cocycle; rejects
// anything else with input_error (non-cocycles with the first defect
// witness). The carrier is re-validated before returning.
AbelianExtension build_extension(const ComPreLieAlgebra& alg, const Representation& rep,
                                 const Cochain2& c);

// Never throws; every invariant is reported as data.
ExtensionReport validate_extension(const AbelianExtension& ext);

bool section_valid(const AbelianExtension& ext, const Section& s);

// The coordinates u with i(u) = w, for carrier vectors w lying in the
// image of i (e.g. products that land in the fiber). input_error otherwise.
Vec fiber_coords(const AbelianExtension& ext, const Vec& w);

// Action of A on V read through the carrier:
//   mu(x)u = fiber part of s(x) * i(u), l and r likewise via the pre-Lie
// product. Independent of the section for valid extensions.
Representation induced_rep(const AbelianExtension& ext, const Section& s);

// phi(x,y) = fiber part of s(x) * s(y) - s(x*y), psi likewise with the
// pre-Lie product.
Cochain2 extract_cocycle(const AbelianExtension& ext, const Section& s);

// Equivalence certificate: F maps carrier 1 to carrier 2 with F i1 = i2,
// j2 F = j1, and F an isomorphism of algebras; f is the A -> V corrector
// with F(s(x) + i(u)) = s'(x) + i'(u + f(x)).
struct ExtensionIso {
    Matrix F;  // (n+m) x (n+m)
    Matrix f;  // m x n
};

// Both extensions must be valid with equal bases and fiber dimensions
// (input_error otherwise). Returns the certificate, or nullopt when no
// equivalence over the identity on A and V exists.
std::optional<ExtensionIso> extensions_isomorphic(const AbelianExtension& e1,
                                                  const AbelianExtension& e2);

}  // namespace comprelie
