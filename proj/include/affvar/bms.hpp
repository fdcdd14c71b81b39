#pragma once

#include "affvar/code.hpp"

namespace affvar {

/// Output of Sakata's iteration: a minimal set of polynomials valid on the whole array and the
/// delta set (footprint) of the array's recurrence ideal as seen so far.
struct SakataResult {
    std::vector<Polynomial> minimal;
    std::vector<Exponent> delta;
};

/// Berlekamp-Massey-Sakata on a single array given over an initial segment of the monomial order.
///
/// `array` is indexed by exponents listed in increasing order, and every exponent smaller than a
/// listed one must be listed too. The discrepancy of f (leading exponent s) at g >= s is
/// sum_b f_b E_{b + g - s}.
SakataResult sakata(const IndexedVector& array, const MonomialOrder& order, const Field& field);

/// a -> sum over the erased points of psi^a, for every a in A.
GridVector erasure_power_sums(const Lattice& lattice, std::span<const Point> erasures);

/// Vanishing basis of the erased points; the unit ideal when there are none.
IdealBasis erasure_locator_basis(std::span<const Point> erasures, const Lattice& lattice, const MonomialOrder& order);

/// The exponents of S_Phi below every leading exponent of G_Phi: the largest initial segment of the
/// monomial order on which the syndromes are known.
std::vector<Exponent> known_segment(const IdealBasis& phi);

/// A candidate locator: the erased points plus located errors, with their vanishing basis.
struct LocatorCandidate {
    std::string origin;
    std::vector<Point> errors;  // located non-erased points
    std::vector<Point> located; // erasures and errors, canonical order
    IdealBasis ideal;     // left empty when oversized
    bool oversized = false; // more located points than parity exponents, so the footprint cannot fit
};

/// Step 4 of the decoder. For every generator sigma of the erasure ideal, the syndromes are
/// multiplied by sigma (killing the erased positions) and Sakata's iteration locates the remaining
/// error points by a root search over the non-erased positions.
///
/// The first candidate merges the roots of all generators. In more than one variable each
/// generator, and the plain syndrome array, also yields a candidate of its own; the decoder
/// validates candidates in order and keeps the smallest that passes.
std::vector<LocatorCandidate> bms_run(const Code& code, const IndexedVector& syndromes, const IdealBasis& erasure_ideal,
                                      std::span<const Point> erasures);

} // namespace affvar
