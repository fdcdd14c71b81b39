#include "affvar/vanishing_ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace affvar {

Footprint::Footprint(std::vector<Exponent> exponents, const MonomialOrder& order) : exps_(std::move(exponents))
{
    std::sort(exps_.begin(), exps_.end(), [&](const Exponent& a, const Exponent& b) { return order.less(a, b); });
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (!pos_.emplace(exps_[i], i).second) throw Error("footprint: duplicate exponent " + format_tuple(exps_[i]));
}

std::size_t Footprint::position(const Exponent& e) const
{
    auto it = pos_.find(e);
    if (it == pos_.end()) throw Error("exponent " + format_tuple(e) + " not in footprint");
    return it->second;
}

bool Footprint::is_subset_of(const Footprint& other) const
{
    for (const auto& e : exps_)
        if (!other.contains(e)) return false;
    return true;
}

bool Footprint::is_lower_set() const
{
    for (const auto& e : exps_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            Exponent d = e;
            --d[i];
            if (!contains(d)) return false;
        }
    }
    return true;
}

Polynomial Generator::polynomial(const Field& field) const
{
    Polynomial p = tail;
    p.add_term(field, lead, field.one());
    return p;
}

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<Generator> generators)
    : order_(std::move(order)), gens_(std::move(generators))
{
    std::sort(gens_.begin(), gens_.end(), [&](const Generator& a, const Generator& b) { return order_.less(a.lead, b.lead); });
}

bool GroebnerBasis::is_unit() const
{
    return gens_.size() == 1 && total_degree(gens_[0].lead) == 0;
}

std::size_t GroebnerBasis::find_cover(const Exponent& a) const
{
    for (std::size_t u = 0; u < gens_.size(); ++u)
        if (divides(gens_[u].lead, a)) return u;
    return npos;
}

namespace {

struct ReducedRow {
    std::vector<Element> v;
    std::size_t pivot;
    Polynomial combo; // polynomial whose evaluation vector is v
};

} // namespace

IdealBasis vanishing_basis_or_unit(std::span<const Point> points, const Lattice& lattice, const MonomialOrder& order)
{
    const Field& f = lattice.field();
    const int n = lattice.nvars();
    if (order.nvars() != n) throw Error("monomial order and lattice disagree on the number of variables");
    {
        std::set<Point> seen;
        for (const auto& p : points) {
            if (!lattice.contains(p)) throw Error("point " + format_tuple(p) + " is not in F_q^N");
            if (!seen.insert(p).second) throw Error("duplicate point " + format_tuple(p));
        }
    }
    const std::size_t npts = points.size();

    auto cmp = [&](const Exponent& a, const Exponent& b) { return order.less(a, b); };
    std::set<Exponent, decltype(cmp)> candidates(cmp);
    std::map<Exponent, std::vector<Element>> accepted_eval;
    std::vector<Exponent> standard;
    std::vector<Generator> gens;
    std::vector<ReducedRow> rows;

    candidates.insert(Exponent(n, 0));
    while (!candidates.empty()) {
        const Exponent t = *candidates.begin();
        candidates.erase(candidates.begin());

        bool skip = false;
        for (const auto& g : gens)
            if (divides(g.lead, t)) skip = true;
        std::vector<Element> eval;
        if (!skip) {
            // t must be a standard monomial times x_i; reuse that evaluation vector.
            bool have = total_degree(t) == 0;
            if (have) eval.assign(npts, f.one());
            for (int i = 0; i < n && !skip; ++i) {
                if (t[i] == 0) continue;
                Exponent d = t;
                --d[i];
                auto it = accepted_eval.find(d);
                if (it == accepted_eval.end()) {
                    skip = true;
                    break;
                }
                if (!have) {
                    eval.resize(npts);
                    for (std::size_t k = 0; k < npts; ++k)
                        eval[k] = f.mul(it->second[k], Element(static_cast<std::uint32_t>(points[k][i])));
                    have = true;
                }
            }
        }
        if (skip) continue;

        std::vector<Element> v = eval;
        Polynomial combo = Polynomial::monomial(n, t);
        for (const auto& row : rows) {
            const Element factor = v[row.pivot];
            if (factor.is_zero()) continue;
            for (std::size_t k = 0; k < npts; ++k)
                if (!row.v[k].is_zero()) v[k] = f.sub(v[k], f.mul(factor, row.v[k]));
            combo = combo.sub(f, row.combo.scale(f, factor));
        }
        std::size_t pivot = npts;
        for (std::size_t k = 0; k < npts; ++k)
            if (!v[k].is_zero()) {
                pivot = k;
                break;
            }
        if (pivot == npts) {
            Generator g;
            g.lead = t;
            g.tail = combo.sub(f, Polynomial::monomial(n, t));
            gens.push_back(std::move(g));
            continue;
        }
        const Element scale = f.inv(v[pivot]);
        for (auto& x : v) x = f.mul(x, scale);
        rows.push_back({std::move(v), pivot, combo.scale(f, scale)});
        accepted_eval.emplace(t, std::move(eval));
        standard.push_back(t);
        for (int i = 0; i < n; ++i) {
            Exponent next = t;
            ++next[i];
            candidates.insert(std::move(next));
        }
    }

    IdealBasis out{GroebnerBasis(order, std::move(gens)), Footprint(std::move(standard), order)};
    return out;
}

IdealBasis vanishing_basis(std::span<const Point> points, const Lattice& lattice, const MonomialOrder& order)
{
    if (points.empty()) throw Error("vanishing ideal of an empty point set requested");
    return vanishing_basis_or_unit(points, lattice, order);
}

IdealBasis unit_ideal(const MonomialOrder& order)
{
    Generator one;
    one.lead = Exponent(order.nvars(), 0);
    one.tail = Polynomial(order.nvars());
    return {GroebnerBasis(order, {one}), Footprint({}, order)};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis, const Field& field)
{
    const MonomialOrder& order = basis.order();
    Polynomial work = f;
    Polynomial rem(f.nvars());
    while (!work.is_zero()) {
        const Exponent lead = work.leading_exponent(order);
        const Element c = work.coeff(lead);
        const std::size_t u = basis.find_cover(lead);
        if (u == GroebnerBasis::npos) {
            rem.add_term(field, lead, c);
            work.add_term(field, lead, field.neg(c));
            continue;
        }
        const Generator& g = basis[u];
        const Exponent shift = sub_exponents(lead, g.lead);
        work.add_term(field, lead, field.neg(c));
        for (auto& [e, gc] : g.tail.terms()) work.add_term(field, add_exponents(e, shift), field.neg(field.mul(c, gc)));
    }
    return rem;
}

std::size_t footprint_complement_cover(const GroebnerBasis& basis, const Footprint& footprint, const Exponent& a)
{
    if (footprint.contains(a)) throw Error("exponent " + format_tuple(a) + " lies in the footprint");
    const std::size_t u = basis.find_cover(a);
    if (u == GroebnerBasis::npos) throw Error("no leading exponent divides " + format_tuple(a));
    return u;
}

std::vector<Point> canonical_points(std::vector<Point> points)
{
    std::sort(points.begin(), points.end());
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i] == points[i - 1]) throw Error("duplicate point " + format_tuple(points[i]));
    return points;
}

std::string format_basis(const GroebnerBasis& basis)
{
    std::ostringstream os;
    for (const auto& g : basis.generators()) {
        Polynomial p = g.tail;
        // Leading coefficient 1 is implicit in the generator; spell it out for display.
        Polynomial::Terms terms = p.terms();
        terms.emplace(g.lead, Element(1));
        os << "lead " << format_tuple(g.lead) << " | " << format_polynomial(Polynomial(basis.nvars(), terms), basis.order()) << '\n';
    }
    return os.str();
}

} // namespace affvar
