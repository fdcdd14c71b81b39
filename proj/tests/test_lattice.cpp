#include "oracles.hpp"

#include <doctest.h>

using namespace affvar;

namespace {

GridVector delta_points(const Lattice& lat, const Point& w)
{
    GridVector c(lat, IndexKind::points);
    c.at(w) = Element(1);
    return c;
}

GridVector from(const Lattice& lat, IndexKind kind, std::vector<std::uint32_t> codes)
{
    std::vector<Element> v;
    for (auto c : codes) v.emplace_back(c);
    return GridVector(lat, kind, v);
}

} // namespace

TEST_CASE("rank order is mixed radix with last coordinate fastest")
{
    const Lattice lat(make_field(3, 1), 2);
    CHECK(lat.size() == 9);
    CHECK(lat.rank({0, 1}) == 1);
    CHECK(lat.rank({1, 0}) == 3);
    CHECK(lat.unrank(5) == Tuple{1, 2});
    CHECK_THROWS_AS(lat.rank({3, 0}), Error);
}

TEST_CASE("one-dimensional transforms over F_3")
{
    const Lattice lat(make_field(3, 1), 1);
    CHECK(dft(delta_points(lat, {0})).values() == from(lat, IndexKind::exponents, {1, 0, 0}).values());
    CHECK(dft(delta_points(lat, {1})).values() == from(lat, IndexKind::exponents, {1, 1, 1}).values());
    CHECK(idft(from(lat, IndexKind::exponents, {1, 0, 0})) == delta_points(lat, {0}));
    CHECK(idft(from(lat, IndexKind::exponents, {1, 1, 1})) == delta_points(lat, {1}));
    CHECK(idft_at(from(lat, IndexKind::exponents, {1, 0, 0}), {0}) == Element(1));
    CHECK(dft(GridVector(lat, IndexKind::points)).is_zero());
}

TEST_CASE("transform of the wrong index kind is rejected")
{
    const Lattice lat(make_field(3, 1), 1);
    CHECK_THROWS_AS(dft(GridVector(lat, IndexKind::exponents)), Error);
    CHECK_THROWS_AS(idft(GridVector(lat, IndexKind::points)), Error);
}

TEST_CASE("fast transforms agree with direct summation")
{
    std::mt19937_64 rng(3);
    for (auto [q, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {3, 2}, {4, 2}, {5, 2}, {3, 3}, {4, 3}, {9, 1}, {8, 2}}) {
        const auto f = parse_field(q == 4 ? "2^2" : q == 8 ? "2^3" : q == 9 ? "3^2" : std::to_string(q));
        const Lattice lat(f, n);
        for (int trial = 0; trial < 5; ++trial) {
            const GridVector c(lat, IndexKind::points, oracle::random_values(*f, lat.size(), rng));
            CHECK(dft(c).values() == oracle::dft(lat, c.values()));
            CHECK(dft(c) == dft_direct(c));
            const GridVector h(lat, IndexKind::exponents, oracle::random_values(*f, lat.size(), rng));
            CHECK(idft(h) == idft_direct(h));
        }
    }
}

TEST_CASE("two-dimensional inverse over the four zero patterns")
{
    std::mt19937_64 rng(5);
    const auto f = make_field(5, 1);
    const Lattice lat(f, 2);
    const int q = 5;
    for (int trial = 0; trial < 10; ++trial) {
        const GridVector h(lat, IndexKind::exponents, oracle::random_values(*f, lat.size(), rng));
        auto H = [&](int i, int j) { return h.at({i, j}); };
        auto inv = [&](int w, int e) { return f->pow(Element(static_cast<std::uint32_t>(w)), -e); };
        for (int psi = 0; psi < q; ++psi)
            for (int om = 0; om < q; ++om) {
                Element expect;
                if (psi && om) {
                    for (int i = 1; i < q; ++i)
                        for (int j = 1; j < q; ++j) expect = f->add(expect, f->mul(H(i, j), f->mul(inv(psi, i), inv(om, j))));
                } else if (psi) {
                    for (int i = 1; i < q; ++i) expect = f->sub(expect, f->mul(f->sub(H(i, 0), H(i, q - 1)), inv(psi, i)));
                } else if (om) {
                    for (int j = 1; j < q; ++j) expect = f->sub(expect, f->mul(f->sub(H(0, j), H(q - 1, j)), inv(om, j)));
                } else {
                    expect = f->add(f->sub(f->sub(H(0, 0), H(0, q - 1)), H(q - 1, 0)), H(q - 1, q - 1));
                }
                CHECK(idft_at(h, {psi, om}) == expect);
            }
    }
}

TEST_CASE("inverse pairs and linearity")
{
    std::mt19937_64 rng(7);
    for (auto [spec, n] : std::vector<std::pair<const char*, int>>{{"2", 3}, {"3", 3}, {"2^2", 3}, {"5", 2}, {"7", 2}, {"2^3", 2}, {"3^2", 2}}) {
        const auto f = parse_field(spec);
        const Lattice lat(f, n);
        for (std::size_t r = 0; r < lat.size(); ++r) {
            GridVector e(lat, IndexKind::points);
            e[r] = Element(1);
            CHECK(idft(dft(e)) == e);
            GridVector h(lat, IndexKind::exponents);
            h[r] = Element(1);
            CHECK(dft(idft(h)) == h);
        }
        const GridVector a(lat, IndexKind::points, oracle::random_values(*f, lat.size(), rng));
        const GridVector b(lat, IndexKind::points, oracle::random_values(*f, lat.size(), rng));
        const Element k(1 + rng() % (f->size() - 1));
        std::vector<Element> comb(lat.size());
        for (std::size_t i = 0; i < comb.size(); ++i) comb[i] = f->add(f->mul(k, a[i]), b[i]);
        const auto da = dft(a), db = dft(b), dc = dft(GridVector(lat, IndexKind::points, comb));
        for (std::size_t i = 0; i < comb.size(); ++i) CHECK(dc[i] == f->add(f->mul(k, da[i]), db[i]));
    }
}

TEST_CASE("inverse on nonzero points agrees with the classical transform")
{
    std::mt19937_64 rng(9);
    const auto f = make_field(7, 1);
    const Lattice lat(f, 2);
    // h supported on [1, q-1]^2; the classical inverse is (1/(q-1))^N sum h_a w^{-a} = sum h_a w^{-a} here.
    GridVector h(lat, IndexKind::exponents);
    for (std::size_t r = 0; r < lat.size(); ++r) {
        const auto a = lat.unrank(r);
        if (a[0] && a[1]) h[r] = Element(static_cast<std::uint32_t>(rng() % 7));
    }
    for (int x = 1; x < 7; ++x)
        for (int y = 1; y < 7; ++y) {
            Element acc;
            for (int i = 1; i < 7; ++i)
                for (int j = 1; j < 7; ++j)
                    acc = f->add(acc, f->mul(h.at({i, j}), f->mul(f->pow(Element(x), -i), f->pow(Element(y), -j))));
            // (q-1)^{-2} = 1 in F_7 since q - 1 = -1
            CHECK(idft_at(h, {x, y}) == acc);
        }
}

TEST_CASE("zero-pattern inner sum size")
{
    const Lattice lat(make_field(3, 1), 3);
    CHECK(idft_inner_terms(lat, {0, 0, 0}) == 8);
    CHECK(idft_inner_terms(lat, {1, 0, 2}) == 2);
    CHECK(idft_inner_terms(lat, {1, 1, 2}) == 1);
}

TEST_CASE("restriction and embedding")
{
    const Lattice lat(make_field(3, 1), 2);
    std::vector<Point> all;
    for (std::size_t r = 0; r < lat.size(); ++r) all.push_back(lat.unrank(r));
    std::mt19937_64 rng(1);
    const GridVector c(lat, IndexKind::points, oracle::random_values(lat.field(), lat.size(), rng));
    CHECK(restrict_to(c, all).values() == c.values());
    const std::vector<Point> sub{{0, 1}, {2, 2}};
    CHECK(restrict_to(delta_points(lat, {1, 1}), sub).is_zero());
    const auto once = restrict_to(c, sub);
    CHECK(restrict_to(embed(once, lat), sub) == once);
    CHECK_THROWS_AS(restrict_to(c, std::vector<Point>{{3, 0}}), Error);
}

TEST_CASE("vector dump format")
{
    const Lattice lat(make_field(2, 1), 1);
    CHECK(format_vector(from(lat, IndexKind::points, {1, 0})) == "0: 1\n1: 0\n");
}
