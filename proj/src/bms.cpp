#include "affvar/bms.hpp"

#include <algorithm>
#include <set>

namespace affvar {

namespace {

struct Auxiliary {
    Polynomial poly;
    Exponent lead;
    Exponent span; // point of failure minus lead
    Element disc;
};

Element discrepancy(const Polynomial& f, const Exponent& lead, const Exponent& gamma, const IndexedVector& array,
                    const Field& field)
{
    Element acc = field.zero();
    Exponent idx(gamma.size());
    for (const auto& [b, c] : f.terms()) {
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = b[i] + gamma[i] - lead[i];
        const Element e = array.at(idx);
        if (e.is_zero()) continue;
        acc = field.add(acc, field.mul(c, e));
    }
    return acc;
}

// Minimal exponents outside the finite lower set `delta`.
std::vector<Exponent> corners(const std::set<Exponent>& delta, int nvars)
{
    std::set<Exponent> cand;
    if (delta.empty()) return {Exponent(nvars, 0)};
    for (const auto& c : delta)
        for (int i = 0; i < nvars; ++i) {
            Exponent t = c;
            ++t[i];
            cand.insert(std::move(t));
        }
    std::vector<Exponent> out;
    for (const auto& t : cand) {
        if (delta.count(t)) continue;
        bool minimal = true;
        for (int j = 0; j < nvars && minimal; ++j) {
            if (t[j] == 0) continue;
            Exponent d = t;
            --d[j];
            minimal = delta.count(d) != 0;
        }
        if (minimal) out.push_back(t);
    }
    return out;
}

void add_down_set(std::set<Exponent>& delta, const Exponent& top)
{
    Exponent cur(top.size(), 0);
    while (true) {
        delta.insert(cur);
        std::size_t i = 0;
        while (i < cur.size() && ++cur[i] > top[i]) {
            cur[i] = 0;
            ++i;
        }
        if (i == cur.size()) break;
    }
}

} // namespace

SakataResult sakata(const IndexedVector& array, const MonomialOrder& order, const Field& field)
{
    const int n = order.nvars();
    std::vector<Polynomial> F{Polynomial::monomial(n, Exponent(n, 0))};
    std::vector<Exponent> leads{Exponent(n, 0)};
    std::vector<Auxiliary> G;
    std::set<Exponent> delta;

    for (const auto& gamma : array.index()) {
        std::vector<Element> disc(F.size());
        std::vector<bool> fails(F.size(), false);
        bool any = false;
        for (std::size_t i = 0; i < F.size(); ++i) {
            if (!divides(leads[i], gamma)) continue;
            disc[i] = discrepancy(F[i], leads[i], gamma, array, field);
            fails[i] = !disc[i].is_zero();
            any = any || fails[i];
        }
        if (!any) continue;

        std::set<Exponent> next_delta = delta;
        for (std::size_t i = 0; i < F.size(); ++i)
            if (fails[i]) add_down_set(next_delta, sub_exponents(gamma, leads[i]));

        std::vector<Polynomial> next_F;
        std::vector<Exponent> next_leads;
        for (const auto& t : corners(next_delta, n)) {
            std::size_t pick = F.size();
            for (std::size_t i = 0; i < F.size(); ++i) {
                if (!divides(leads[i], t)) continue;
                if (pick == F.size() || (fails[pick] && !fails[i]) ||
                    (fails[pick] == fails[i] && order.less(leads[i], leads[pick])))
                    pick = i;
            }
            if (pick == F.size()) throw Error("sakata: no polynomial below corner " + format_tuple(t));
            Polynomial h = F[pick].shift(sub_exponents(t, leads[pick]));
            if (fails[pick] && divides(t, gamma)) {
                const Exponent need = sub_exponents(gamma, t);
                const Auxiliary* aux = nullptr;
                for (const auto& g : G)
                    if (divides(need, g.span) && (!aux || order.less(g.lead, aux->lead))) aux = &g;
                if (!aux) throw Error("sakata: no auxiliary polynomial spans " + format_tuple(need));
                const Element factor = field.div(disc[pick], aux->disc);
                h = h.sub(field, aux->poly.shift(sub_exponents(aux->span, need)).scale(field, factor));
            }
            next_F.push_back(std::move(h));
            next_leads.push_back(t);
        }

        for (std::size_t i = 0; i < F.size(); ++i) {
            if (!fails[i]) continue;
            Auxiliary a{F[i], leads[i], sub_exponents(gamma, leads[i]), disc[i]};
            bool covered = false;
            for (const auto& g : G) covered = covered || divides(a.span, g.span);
            if (covered) continue;
            std::erase_if(G, [&](const Auxiliary& g) { return divides(g.span, a.span); });
            G.push_back(std::move(a));
        }
        F = std::move(next_F);
        leads = std::move(next_leads);
        delta = std::move(next_delta);
    }

    SakataResult out;
    out.minimal = std::move(F);
    out.delta.assign(delta.begin(), delta.end());
    std::sort(out.delta.begin(), out.delta.end(), [&](const Exponent& a, const Exponent& b) { return order.less(a, b); });
    return out;
}

GridVector erasure_power_sums(const Lattice& lattice, std::span<const Point> erasures)
{
    const Field& f = lattice.field();
    GridVector h(lattice, IndexKind::exponents);
    for (std::size_t r = 0; r < lattice.size(); ++r) {
        const Exponent a = lattice.unrank(r);
        Element acc = f.zero();
        for (const auto& p : erasures) acc = f.add(acc, lattice.monomial(p, a));
        h[r] = acc;
    }
    return h;
}

IdealBasis erasure_locator_basis(std::span<const Point> erasures, const Lattice& lattice, const MonomialOrder& order)
{
    return vanishing_basis_or_unit(erasures, lattice, order);
}

std::vector<Exponent> known_segment(const IdealBasis& phi)
{
    const Exponent& bound = phi.basis[0].lead;
    std::vector<Exponent> out;
    for (const auto& s : phi.footprint) {
        if (!phi.basis.order().less(s, bound)) break;
        out.push_back(s);
    }
    return out;
}

std::vector<LocatorCandidate> bms_run(const Code& code, const IndexedVector& syndromes, const IdealBasis& erasure_ideal,
                                      std::span<const Point> erasures)
{
    const Field& f = code.field();
    const Lattice& lat = code.lattice();
    const MonomialOrder& order = code.order();
    const auto segment = known_segment(code.phi_ideal());
    const std::set<Exponent> in_segment(segment.begin(), segment.end());
    const std::set<Point> erased(erasures.begin(), erasures.end());

    auto roots = [&](const std::vector<Polynomial>& polys) {
        std::vector<Point> out;
        for (const auto& p : code.psi()) {
            if (erased.count(p)) continue;
            bool zero = true;
            for (const auto& g : polys) {
                if (!evaluate(g, lat, p).is_zero()) {
                    zero = false;
                    break;
                }
            }
            if (zero) out.push_back(p);
        }
        return out;
    };

    auto sakata_on = [&](const Polynomial& sigma) {
        const Exponent lead = sigma.leading_exponent(order);
        std::vector<Exponent> region;
        std::vector<Element> values;
        for (const auto& a : segment) {
            if (!in_segment.count(add_exponents(a, lead))) continue;
            Element acc = f.zero();
            for (const auto& [b, c] : sigma.terms()) {
                const Element e = syndromes.at(add_exponents(a, b));
                if (e.is_zero()) continue;
                acc = f.add(acc, f.mul(c, e));
            }
            region.push_back(a);
            values.push_back(acc);
        }
        return sakata(IndexedVector(IndexKind::exponents, std::move(region), std::move(values)), order, f);
    };

    std::vector<LocatorCandidate> out;
    auto add = [&](std::string origin, std::vector<Point> errors) {
        std::vector<Point> located(erasures.begin(), erasures.end());
        for (const auto& p : errors)
            if (!erased.count(p)) located.push_back(p);
        located = canonical_points(std::move(located));
        for (const auto& c : out)
            if (c.located == located) return;
        LocatorCandidate cand;
        cand.origin = std::move(origin);
        cand.errors = std::move(errors);
        cand.located = std::move(located);
        if (cand.located.size() > code.phi_ideal().footprint.size())
            cand.oversized = true;
        else
            cand.ideal = vanishing_basis_or_unit(cand.located, lat, order);
        out.push_back(std::move(cand));
    };

    std::vector<std::vector<Point>> per_generator;
    std::set<Point> merged;
    for (const auto& g : erasure_ideal.basis.generators()) {
        auto z = roots(sakata_on(g.polynomial(f)).minimal);
        merged.insert(z.begin(), z.end());
        per_generator.push_back(std::move(z));
    }
    add("merged", {merged.begin(), merged.end()});
    if (code.nvars() > 1 && !erasures.empty()) {
        for (std::size_t j = 0; j < per_generator.size(); ++j) add("generator " + std::to_string(j), per_generator[j]);
        add("plain", roots(sakata_on(Polynomial::monomial(code.nvars(), Exponent(code.nvars(), 0))).minimal));
    }
    return out;
}

} // namespace affvar
