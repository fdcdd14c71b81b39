#include "affvar/recurrence.hpp"

#include <algorithm>

namespace affvar {

Exponent wrap_index(const Tuple& raw, std::uint32_t q)
{
    Exponent out(raw.size());
    const int period = static_cast<int>(q) - 1;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0) throw Error("wrap_index: negative component in " + format_tuple(raw));
        out[i] = raw[i] == 0 ? 0 : (raw[i] - 1) % period + 1;
    }
    return out;
}

std::vector<Exponent> sorted_exponents(const Lattice& lattice, const MonomialOrder& order)
{
    std::vector<Exponent> all;
    all.reserve(lattice.size());
    for (std::size_t r = 0; r < lattice.size(); ++r) all.push_back(lattice.unrank(r));
    std::sort(all.begin(), all.end(), [&](const Exponent& a, const Exponent& b) { return order.less(a, b); });
    return all;
}

IndexedVector footprint_values(const GridVector& table, const Footprint& footprint)
{
    std::vector<Element> vals;
    vals.reserve(footprint.size());
    for (const auto& s : footprint) vals.push_back(table.at(s));
    return IndexedVector(IndexKind::footprint, footprint.exponents(), std::move(vals));
}

namespace {

struct FlatGenerator {
    Exponent lead;
    std::vector<std::pair<Exponent, Element>> tail;
};

std::vector<FlatGenerator> flatten(const GroebnerBasis& basis)
{
    std::vector<FlatGenerator> out;
    for (const auto& g : basis.generators()) out.push_back({g.lead, {g.tail.terms().begin(), g.tail.terms().end()}});
    return out;
}

// sum_s g_s h_{wrap(a + s - lead)}
Element relation_sum(const FlatGenerator& g, const Exponent& a, const GridVector& table)
{
    const Lattice& lat = table.lattice();
    const Field& f = lat.field();
    Element acc = f.zero();
    Tuple raw(a.size());
    for (const auto& [s, c] : g.tail) {
        for (std::size_t i = 0; i < a.size(); ++i) raw[i] = a[i] + s[i] - g.lead[i];
        const Element h = table.at(wrap_index(raw, lat.q()));
        if (h.is_zero()) continue;
        acc = f.add(acc, f.mul(c, h));
    }
    return acc;
}

} // namespace

ExtensionResult extend(const IndexedVector& source, const GroebnerBasis& basis, const Footprint& footprint,
                       const Lattice& lattice)
{
    if (source.index() != footprint.exponents()) throw Error("extend: source is not indexed by the footprint");
    if (basis.nvars() != lattice.nvars()) throw Error("extend: basis and lattice disagree on the number of variables");
    for (const auto& s : footprint)
        if (!lattice.contains(s)) throw Error("extend: footprint exponent " + format_tuple(s) + " outside A");
    const Field& f = lattice.field();
    const auto gens = flatten(basis);

    GridVector table(lattice, IndexKind::exponents);
    for (std::size_t i = 0; i < footprint.size(); ++i) table.at(footprint[i]) = source[i];

    for (const auto& a : sorted_exponents(lattice, basis.order())) {
        if (footprint.contains(a)) continue;
        const std::size_t u = basis.find_cover(a);
        if (u == GroebnerBasis::npos) throw Error("extend: basis does not match footprint at " + format_tuple(a));
        const Element sum = relation_sum(gens[u], a, table);
        table.at(a) = sum.is_zero() ? sum : f.neg(sum);
    }
    return {std::move(table), source, basis};
}

RecurrenceCheck check_recurrence(const GridVector& table, const GroebnerBasis& basis)
{
    if (table.kind() != IndexKind::exponents) throw Error("check_recurrence: table must be indexed by A");
    const Lattice& lat = table.lattice();
    const Field& f = lat.field();
    const auto gens = flatten(basis);
    for (std::size_t r = 0; r < lat.size(); ++r) {
        const Exponent a = lat.unrank(r);
        for (std::size_t u = 0; u < gens.size(); ++u) {
            if (!divides(gens[u].lead, a)) continue;
            const Element lhs = f.add(table[r], relation_sum(gens[u], a, table));
            if (!lhs.is_zero()) return {false, a, u};
        }
    }
    return {};
}

IndexedVector partial_dft(const IndexedVector& values, const Footprint& footprint, const Lattice& lattice)
{
    const Field& f = lattice.field();
    std::vector<Element> out(footprint.size());
    for (std::size_t j = 0; j < footprint.size(); ++j) {
        Element acc = f.zero();
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i].is_zero()) continue;
            acc = f.add(acc, f.mul(values[i], lattice.monomial(values.index()[i], footprint[j])));
        }
        out[j] = acc;
    }
    return IndexedVector(IndexKind::footprint, footprint.exponents(), std::move(out));
}

IndexedVector lemma_map(const IndexedVector& source, const IdealBasis& ideal, std::span<const Point> points,
                        const Lattice& lattice)
{
    if (ideal.footprint.size() != points.size()) throw Error("lemma_map: footprint size differs from point count");
    const auto ext = extend(source, ideal.basis, ideal.footprint, lattice);
    std::vector<Element> vals;
    vals.reserve(points.size());
    for (const auto& p : points) vals.push_back(idft_at(ext.table, p));
    return IndexedVector(IndexKind::point_subset, std::vector<Tuple>(points.begin(), points.end()), std::move(vals));
}

IndexedVector lemma_map_inverse(const IndexedVector& values, const Footprint& footprint, const Lattice& lattice)
{
    return partial_dft(values, footprint, lattice);
}

} // namespace affvar
