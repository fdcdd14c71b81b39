#pragma once

// Reference computations used by the tests. They deliberately avoid the library's fast paths:
// only Field arithmetic and the Lattice indexing helpers are shared.

#include "affvar/code.hpp"
#include "affvar/field.hpp"
#include "affvar/lattice.hpp"
#include "affvar/polynomial.hpp"
#include "affvar/vanishing_ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace affvar;

inline Element pow_naive(const Field& f, Element a, int e)
{
    Element r = f.one();
    for (int i = 0; i < e; ++i) r = f.mul(r, a);
    return r;
}

inline Element monomial_naive(const Field& f, const Point& w, const Exponent& a)
{
    Element r = f.one();
    for (std::size_t i = 0; i < w.size(); ++i) r = f.mul(r, pow_naive(f, Element(static_cast<std::uint32_t>(w[i])), a[i]));
    return r;
}

/// sum_w c_w w^a by direct summation with repeated multiplication.
inline std::vector<Element> dft(const Lattice& lat, const std::vector<Element>& c)
{
    const Field& f = lat.field();
    std::vector<Element> h(lat.size());
    for (std::size_t ra = 0; ra < lat.size(); ++ra) {
        Element acc;
        for (std::size_t rw = 0; rw < lat.size(); ++rw)
            acc = f.add(acc, f.mul(c[rw], monomial_naive(f, lat.unrank(rw), lat.unrank(ra))));
        h[ra] = acc;
    }
    return h;
}

/// Product of two base-p digit polynomials reduced by the field modulus, computed schoolbook.
inline std::uint32_t mul_by_polynomials(const Field& f, std::uint32_t a, std::uint32_t b)
{
    const std::uint32_t p = f.characteristic(), m = f.degree();
    std::vector<std::uint64_t> da(m), db(m), prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& mod = f.modulus();
    for (std::size_t k = 2 * m - 1; k >= m; --k) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i <= m; ++i) prod[k - m + i] = (prod[k - m + i] + (p - c) * mod[i]) % p;
    }
    std::uint32_t code = 0;
    for (std::size_t i = m; i-- > 0;) code = code * p + static_cast<std::uint32_t>(prod[i]);
    return code;
}

/// Solves A x = b by Gauss-Jordan elimination; nullopt if singular.
inline std::optional<std::vector<Element>> solve(const Field& f, std::vector<std::vector<Element>> a, std::vector<Element> b)
{
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const Element inv = f.inv(a[col][col]);
        for (auto& x : a[col]) x = f.mul(x, inv);
        b[col] = f.mul(b[col], inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Element k = a[r][col];
            for (std::size_t c = 0; c < n; ++c) a[r][c] = f.sub(a[r][c], f.mul(k, a[col][c]));
            b[r] = f.sub(b[r], f.mul(k, b[col]));
        }
    }
    return b;
}

inline std::size_t rank(const Field& f, std::vector<std::vector<Element>> rows)
{
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const Element inv = f.inv(rows[r][c]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Element k = f.mul(rows[i][c], inv);
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(k, rows[r][j]));
        }
        ++r;
    }
    return r;
}

/// Standard monomials of the points: an exponent of A belongs to the footprint iff its evaluation
/// vector is independent of those of all smaller exponents.
inline std::vector<Exponent> staircase(const Lattice& lat, const MonomialOrder& order, const std::vector<Point>& pts)
{
    std::vector<Exponent> all;
    for (std::size_t r = 0; r < lat.size(); ++r) all.push_back(lat.unrank(r));
    std::sort(all.begin(), all.end(), [&](const Exponent& a, const Exponent& b) { return order.less(a, b); });
    std::vector<std::vector<Element>> rows;
    std::vector<Exponent> out;
    for (const auto& a : all) {
        std::vector<Element> row;
        for (const auto& p : pts) row.push_back(monomial_naive(lat.field(), p, a));
        rows.push_back(row);
        if (rank(lat.field(), rows) == out.size() + 1) {
            out.push_back(a);
        } else {
            rows.pop_back();
        }
    }
    return out;
}

/// Classical Berlekamp-Massey: the shortest C(x) = 1 + c_1 x + ... + c_L x^L with
/// s_j + sum_i c_i s_{j-i} = 0 for L <= j < len.
inline std::vector<Element> berlekamp_massey(const Field& f, const std::vector<Element>& s)
{
    std::vector<Element> c{f.one()}, b{f.one()};
    std::size_t L = 0, m = 1;
    Element bd = f.one();
    for (std::size_t j = 0; j < s.size(); ++j) {
        Element d = s[j];
        for (std::size_t i = 1; i <= L && i < c.size(); ++i) d = f.add(d, f.mul(c[i], s[j - i]));
        if (d.is_zero()) {
            ++m;
            continue;
        }
        const auto t = c;
        const Element k = f.div(d, bd);
        if (c.size() < b.size() + m) c.resize(b.size() + m);
        for (std::size_t i = 0; i < b.size(); ++i) c[i + m] = f.sub(c[i + m], f.mul(k, b[i]));
        if (2 * L <= j) {
            L = j + 1 - L;
            b = t;
            bd = d;
            m = 1;
        } else {
            ++m;
        }
    }
    c.resize(L + 1);
    return c;
}

/// Recurrence extension computed by memoized recursion on the cover relation instead of a sweep.
inline std::vector<Element> memo_extend(const Lattice& lat, const IdealBasis& ideal, const std::vector<Element>& source)
{
    const Field& f = lat.field();
    std::map<Exponent, Element> memo;
    for (std::size_t i = 0; i < ideal.footprint.size(); ++i) memo[ideal.footprint[i]] = source[i];
    std::function<Element(const Exponent&)> value = [&](const Exponent& a) -> Element {
        if (auto it = memo.find(a); it != memo.end()) return it->second;
        std::size_t u = 0;
        while (!divides(ideal.basis[u].lead, a)) ++u;
        const auto& g = ideal.basis[u];
        Element acc;
        for (const auto& [s, c] : g.tail.terms()) {
            Exponent idx(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                const int raw = a[i] + s[i] - g.lead[i];
                idx[i] = raw == 0 ? 0 : (raw - 1) % static_cast<int>(lat.q() - 1) + 1;
            }
            acc = f.add(acc, f.mul(c, value(idx)));
        }
        return memo[a] = f.neg(acc);
    };
    std::vector<Element> out(lat.size());
    for (std::size_t r = 0; r < lat.size(); ++r) out[r] = value(lat.unrank(r));
    return out;
}

/// Systematic codeword by solving H_Phi p = -H_info m, with H built from naive monomial evaluation.
inline std::optional<std::vector<Element>> systematic_by_elimination(const Code& code, const std::vector<Element>& info)
{
    const Field& f = code.field();
    const auto& S = code.phi_ideal().footprint;
    const std::size_t m = S.size();
    std::vector<std::vector<Element>> a(m, std::vector<Element>(m));
    std::vector<Element> b(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < m; ++j) a[r][j] = monomial_naive(f, code.psi()[code.phi_positions()[j]], S[r]);
        for (std::size_t j = 0; j < info.size(); ++j)
            b[r] = f.sub(b[r], f.mul(monomial_naive(f, code.psi()[code.info_positions()[j]], S[r]), info[j]));
    }
    const auto p = solve(f, a, b);
    if (!p) return std::nullopt;
    std::vector<Element> word(code.n());
    for (std::size_t j = 0; j < m; ++j) word[code.phi_positions()[j]] = (*p)[j];
    for (std::size_t j = 0; j < info.size(); ++j) word[code.info_positions()[j]] = info[j];
    return word;
}

/// sum_psi w_psi psi^s == 0 for every s in S_Phi, by naive evaluation.
inline bool in_code(const Code& code, const std::vector<Element>& word)
{
    const Field& f = code.field();
    for (const auto& s : code.phi_ideal().footprint) {
        Element acc;
        for (std::size_t i = 0; i < code.n(); ++i) acc = f.add(acc, f.mul(word[i], monomial_naive(f, code.psi()[i], s)));
        if (!acc.is_zero()) return false;
    }
    return true;
}

inline std::vector<Point> random_points(const Lattice& lat, std::size_t count, std::mt19937_64& rng)
{
    std::vector<std::size_t> ranks(lat.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = i;
    std::shuffle(ranks.begin(), ranks.end(), rng);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back(lat.unrank(ranks[i]));
    return pts;
}

inline std::vector<Element> random_values(const Field& f, std::size_t count, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> d(0, f.size() - 1);
    std::vector<Element> v(count);
    for (auto& x : v) x = Element(d(rng));
    return v;
}

} // namespace oracle
