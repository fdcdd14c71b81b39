#pragma once

#include "affvar/polynomial.hpp"

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace affvar {

/// A finite lower set of exponents, kept sorted in increasing monomial order.
class Footprint {
public:
    Footprint() = default;
    Footprint(std::vector<Exponent> exponents, const MonomialOrder& order);

    std::size_t size() const { return exps_.size(); }
    bool empty() const { return exps_.empty(); }
    const Exponent& operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }
    auto begin() const { return exps_.begin(); }
    auto end() const { return exps_.end(); }

    bool contains(const Exponent& e) const { return pos_.count(e) != 0; }
    std::size_t position(const Exponent& e) const;
    bool is_subset_of(const Footprint& other) const;
    bool is_lower_set() const;

private:
    std::vector<Exponent> exps_;
    std::map<Exponent, std::size_t> pos_;
};

/// One reduced generator x^lead + tail, every tail exponent lying in the footprint.
struct Generator {
    Exponent lead;
    Polynomial tail;

    Polynomial polynomial(const Field& field) const;
};

/// Reduced, monic Groebner basis with generators sorted by increasing leading exponent.
class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(MonomialOrder order, std::vector<Generator> generators);

    const MonomialOrder& order() const { return order_; }
    int nvars() const { return order_.nvars(); }
    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](std::size_t u) const { return gens_[u]; }
    const std::vector<Generator>& generators() const { return gens_; }

    /// The unit ideal, represented as the single generator 1.
    bool is_unit() const;

    /// Smallest u with lead_u <= a componentwise, or npos.
    std::size_t find_cover(const Exponent& a) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    MonomialOrder order_;
    std::vector<Generator> gens_;
};

/// Basis of an ideal together with the exponents of its standard monomials.
struct IdealBasis {
    GroebnerBasis basis;
    Footprint footprint;
};

/// Reduced Groebner basis and footprint of the ideal of polynomials vanishing on `points`.
///
/// Computed by Buchberger-Moeller interpolation: monomials are visited in increasing order and
/// their evaluation vectors reduced against those of the standard monomials found so far.
IdealBasis vanishing_basis(std::span<const Point> points, const Lattice& lattice, const MonomialOrder& order);

/// As vanishing_basis, but an empty point list yields the unit ideal (basis [1], empty footprint).
IdealBasis vanishing_basis_or_unit(std::span<const Point> points, const Lattice& lattice, const MonomialOrder& order);

IdealBasis unit_ideal(const MonomialOrder& order);

/// Remainder of f on division by the reduced basis; supported on the footprint.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis, const Field& field);

/// Index u of the generator whose leading exponent lies below a (smallest u on ties); throws if a is in S.
std::size_t footprint_complement_cover(const GroebnerBasis& basis, const Footprint& footprint, const Exponent& a);

/// Sorted (lexicographic by codes) copy of the points; throws on duplicates.
std::vector<Point> canonical_points(std::vector<Point> points);

/// One line per generator: "lead: t1,...,tN | <polynomial>".
std::string format_basis(const GroebnerBasis& basis);

} // namespace affvar
