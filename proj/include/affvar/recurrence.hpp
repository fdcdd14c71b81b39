#pragma once

#include "affvar/vanishing_ideal.hpp"

#include <optional>

namespace affvar {

/// Folds a non-negative exponent tuple into A: 0 stays 0, otherwise ((x - 1) mod (q - 1)) + 1.
Exponent wrap_index(const Tuple& raw, std::uint32_t q);

/// A table over all of A generated from its values on a footprint.
struct ExtensionResult {
    GridVector table;
    IndexedVector source;
    GroebnerBasis basis;
};

/// Values of a V_A table on the exponents of a footprint, in footprint order.
IndexedVector footprint_values(const GridVector& table, const Footprint& footprint);

/// Extends `source` (indexed by the footprint of `basis`, in footprint order) to all of A.
///
/// Exponents outside the footprint are filled in increasing monomial order with
/// h_a = -sum_s g_s h_{wrap(a + s - s_u)}, u the first generator whose leading exponent lies below a.
ExtensionResult extend(const IndexedVector& source, const GroebnerBasis& basis, const Footprint& footprint,
                       const Lattice& lattice);

struct RecurrenceCheck {
    bool ok = true;
    Exponent a;     // first violating exponent
    std::size_t u = 0;
};

/// Checks h_a + sum_s g_s^(u) h_{wrap(a + s - s_u)} = 0 for every u and every a >= s_u in A.
RecurrenceCheck check_recurrence(const GridVector& table, const GroebnerBasis& basis);

/// Sum_psi c_psi psi^s for each s of the footprint. Same kernel as the syndrome map.
IndexedVector partial_dft(const IndexedVector& values, const Footprint& footprint, const Lattice& lattice);

/// restrict(idft(extend(source)), points): the isomorphism V_S -> V_Psi.
IndexedVector lemma_map(const IndexedVector& source, const IdealBasis& ideal, std::span<const Point> points,
                        const Lattice& lattice);

/// Inverse of lemma_map: the partial DFT of `values` on S.
IndexedVector lemma_map_inverse(const IndexedVector& values, const Footprint& footprint, const Lattice& lattice);

/// Exponents of A sorted increasingly by `order` (cached per call site by the caller).
std::vector<Exponent> sorted_exponents(const Lattice& lattice, const MonomialOrder& order);

} // namespace affvar
