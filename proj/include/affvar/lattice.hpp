#pragma once

#include "affvar/field.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace affvar {

/// Exponent tuple (a_1, ..., a_N) or point tuple of field codes (w_1, ..., w_N).
using Tuple = std::vector<int>;
using Exponent = Tuple;
using Point = Tuple;

enum class IndexKind { exponents, points, footprint, point_subset };

std::string to_string(IndexKind kind);

/// The index sets A = [0, q-1]^N and Omega = F_q^N, both of size q^N.
///
/// Tuples are ranked mixed-radix with the last coordinate fastest.
class Lattice {
public:
    Lattice(FieldPtr field, int nvars);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    int nvars() const { return nvars_; }
    std::uint32_t q() const { return q_; }
    std::size_t size() const { return size_; }

    std::size_t rank(const Tuple& t) const;
    Tuple unrank(std::size_t r) const;
    bool contains(const Tuple& t) const;

    /// w^a = prod_i w_i^{a_i}, with 0^0 = 1.
    Element monomial(const Point& w, const Exponent& a) const;

private:
    FieldPtr field_;
    int nvars_;
    std::uint32_t q_;
    std::size_t size_;
};

/// A vector over all of A (kind exponents) or all of Omega (kind points), densely stored in rank order.
class GridVector {
public:
    GridVector(const Lattice& lattice, IndexKind kind);
    GridVector(const Lattice& lattice, IndexKind kind, std::vector<Element> values);

    const Lattice& lattice() const { return lattice_; }
    IndexKind kind() const { return kind_; }
    std::size_t size() const { return values_.size(); }

    Element operator[](std::size_t rank) const { return values_[rank]; }
    Element& operator[](std::size_t rank) { return values_[rank]; }
    Element at(const Tuple& t) const { return values_[lattice_.rank(t)]; }
    Element& at(const Tuple& t) { return values_[lattice_.rank(t)]; }

    const std::vector<Element>& values() const { return values_; }
    bool is_zero() const;

    friend bool operator==(const GridVector& a, const GridVector& b)
    {
        return a.kind_ == b.kind_ && a.values_ == b.values_;
    }

private:
    Lattice lattice_;
    IndexKind kind_;
    std::vector<Element> values_;
};

/// A vector indexed by an explicit finite list of tuples (a footprint S or a point subset Psi).
/// Index order is the order of construction and is preserved by all operations.
class IndexedVector {
public:
    IndexedVector() = default;
    IndexedVector(IndexKind kind, std::vector<Tuple> index);
    IndexedVector(IndexKind kind, std::vector<Tuple> index, std::vector<Element> values);

    IndexKind kind() const { return kind_; }
    std::size_t size() const { return index_.size(); }
    const std::vector<Tuple>& index() const { return index_; }
    const std::vector<Element>& values() const { return values_; }
    std::vector<Element>& values() { return values_; }

    Element operator[](std::size_t i) const { return values_[i]; }
    Element& operator[](std::size_t i) { return values_[i]; }

    bool contains(const Tuple& t) const { return lookup_.count(t) != 0; }
    /// Position of t in the index list; throws if absent.
    std::size_t position(const Tuple& t) const;
    Element at(const Tuple& t) const { return values_[position(t)]; }
    Element& at(const Tuple& t) { return values_[position(t)]; }
    bool is_zero() const;

    friend bool operator==(const IndexedVector& a, const IndexedVector& b)
    {
        return a.kind_ == b.kind_ && a.index_ == b.index_ && a.values_ == b.values_;
    }

private:
    IndexKind kind_ = IndexKind::point_subset;
    std::vector<Tuple> index_;
    std::vector<Element> values_;
    std::map<Tuple, std::size_t> lookup_;
};

/// Generalized DFT over all of Omega: out_a = sum_w c_w w^a. Separable evaluation.
GridVector dft(const GridVector& c);
/// Same map by direct O(q^{2N}) summation; reference path for dft.
GridVector dft_direct(const GridVector& c);

/// Inverse transform V_A -> V_Omega. Separable evaluation, one coordinate at a time.
GridVector idft(const GridVector& h);
/// Same map evaluated point by point from the zero-pattern formula; reference path for idft.
GridVector idft_direct(const GridVector& h);
/// Single coordinate of idft(h), evaluated from the zero-pattern formula.
Element idft_at(const GridVector& h, const Point& w);

/// Number of J-subset terms in the zero-pattern formula at w, i.e. 2^(N - m) with m nonzero coordinates.
std::size_t idft_inner_terms(const Lattice& lattice, const Point& w);

/// Componentwise projection onto the listed points (which must lie in Omega).
IndexedVector restrict_to(const GridVector& c, std::span<const Point> points);
/// Embeds a point- or exponent-subset vector into the full grid, zero elsewhere.
GridVector embed(const IndexedVector& v, const Lattice& lattice);

/// Text form: one "t1,...,tN: value" line per index.
std::string format_vector(const GridVector& v);
std::string format_vector(const IndexedVector& v);
std::string format_tuple(const Tuple& t);

} // namespace affvar
