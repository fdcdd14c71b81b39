#include "oracles.hpp"

#include "affvar/recurrence.hpp"

#include <doctest.h>

using namespace affvar;

namespace {

struct Instance {
    Lattice lat;
    MonomialOrder order;
    std::vector<Point> pts;
    IdealBasis ideal;
};

Instance random_instance(const char* field, int n, const char* ord, std::mt19937_64& rng)
{
    const Lattice lat(parse_field(field), n);
    const auto order = parse_order(ord, n);
    auto pts = canonical_points(oracle::random_points(lat, 1 + rng() % lat.size(), rng));
    auto ideal = vanishing_basis(pts, lat, order);
    return {lat, order, std::move(pts), std::move(ideal)};
}

IndexedVector random_on(IndexKind kind, std::vector<Tuple> index, const Field& f, std::mt19937_64& rng)
{
    const auto n = index.size();
    return IndexedVector(kind, std::move(index), oracle::random_values(f, n, rng));
}

} // namespace

TEST_CASE("index wrapping")
{
    CHECK(wrap_index({4, 0}, 5) == Exponent{4, 0});
    CHECK(wrap_index({5, 0}, 5) == Exponent{1, 0});
    CHECK(wrap_index({8, 4}, 5) == Exponent{4, 4});
    CHECK(wrap_index({0, 9}, 5) == Exponent{0, 1});
    CHECK_THROWS_AS(wrap_index({-1, 0}, 5), Error);
}

TEST_CASE("one point in F_3 extends to a geometric sequence")
{
    const auto f = make_field(3, 1);
    const Lattice lat(f, 1);
    const auto ideal = vanishing_basis(std::vector<Point>{{2}}, lat, parse_order("grlex", 1));
    const IndexedVector src(IndexKind::footprint, ideal.footprint.exponents(), {Element(1)});
    const auto ext = extend(src, ideal.basis, ideal.footprint, lat);
    CHECK(ext.table.values() == std::vector<Element>{Element(1), Element(2), Element(1)});
    GridVector delta(lat, IndexKind::points);
    delta.at({2}) = Element(1);
    CHECK(idft(ext.table) == delta);
}

TEST_CASE("extension of a power-sum table reproduces the full transform")
{
    std::mt19937_64 rng(21);
    for (auto [field, n] : std::vector<std::pair<const char*, int>>{{"3", 2}, {"2^2", 2}, {"5", 2}, {"2", 3}, {"7", 1}, {"3", 3}}) {
        for (const char* ord : {"grlex", "lex", "weighted:2,3"}) {
            if (n != 2 && std::string(ord).starts_with("weighted")) continue;
            for (int trial = 0; trial < 6; ++trial) {
                const auto in = random_instance(field, n, ord, rng);
                const auto c = random_on(IndexKind::point_subset, in.pts, in.lat.field(), rng);
                const auto full = dft(embed(c, in.lat));
                const auto ext = extend(footprint_values(full, in.ideal.footprint), in.ideal.basis, in.ideal.footprint, in.lat);
                CAPTURE(field);
                CAPTURE(ord);
                CHECK(ext.table == full);
                CHECK(check_recurrence(full, in.ideal.basis).ok);
                CHECK(partial_dft(c, in.ideal.footprint, in.lat) == footprint_values(full, in.ideal.footprint));
            }
        }
    }
}

TEST_CASE("sweep extension matches memoized recursion")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const auto in = random_instance(trial % 2 ? "5" : "2^2", 2, trial % 3 ? "grlex" : "grevlex", rng);
        const auto src = random_on(IndexKind::footprint, in.ideal.footprint.exponents(), in.lat.field(), rng);
        const auto ext = extend(src, in.ideal.basis, in.ideal.footprint, in.lat);
        CHECK(ext.table.values() == oracle::memo_extend(in.lat, in.ideal, src.values()));
        CHECK(check_recurrence(ext.table, in.ideal.basis).ok);
    }
}

TEST_CASE("inverse transform of an extension vanishes off the points")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const char* fields[] = {"3", "2^2", "5", "7"};
        const auto in = random_instance(fields[trial % 4], 2, "grlex", rng);
        const auto src = random_on(IndexKind::footprint, in.ideal.footprint.exponents(), in.lat.field(), rng);
        const auto c = idft(extend(src, in.ideal.basis, in.ideal.footprint, in.lat).table);
        std::set<Point> on(in.pts.begin(), in.pts.end());
        for (std::size_t r = 0; r < in.lat.size(); ++r)
            if (!on.count(in.lat.unrank(r))) CHECK(c[r].is_zero());
    }
}

TEST_CASE("recurrence violation is reported with a witness")
{
    const auto f = make_field(5, 1);
    const Lattice lat(f, 2);
    const std::vector<Point> pts{{1, 1}, {2, 3}};
    const auto ideal = vanishing_basis(pts, lat, parse_order("grlex", 2));
    GridVector c(lat, IndexKind::points);
    c.at({1, 1}) = Element(2);
    c.at({2, 3}) = Element(4);
    auto h = dft(c);
    REQUIRE(check_recurrence(h, ideal.basis).ok);
    h.at({4, 4}) = f->add(h.at({4, 4}), Element(1));
    const auto chk = check_recurrence(h, ideal.basis);
    CHECK(!chk.ok);
    CHECK(divides(ideal.basis[chk.u].lead, chk.a));
}

TEST_CASE("lemma map is an isomorphism inverse to the partial transform")
{
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        const char* fields[] = {"3", "2^2", "5", "2^3"};
        const auto in = random_instance(fields[trial % 4], 2, trial % 2 ? "grlex" : "lex", rng);
        const auto& S = in.ideal.footprint;
        const auto src = random_on(IndexKind::footprint, S.exponents(), in.lat.field(), rng);
        const auto c = lemma_map(src, in.ideal, in.pts, in.lat);
        CHECK(c.size() == in.pts.size());
        CHECK(lemma_map_inverse(c, S, in.lat) == src);
        const auto v = random_on(IndexKind::point_subset, in.pts, in.lat.field(), rng);
        CHECK(lemma_map(lemma_map_inverse(v, S, in.lat), in.ideal, in.pts, in.lat) == v);

        // the two matrices multiply to the identity, in both orders
        const std::size_t m = S.size();
        std::vector<std::vector<Element>> L(m, std::vector<Element>(m)), P(m, std::vector<Element>(m));
        for (std::size_t j = 0; j < m; ++j) {
            IndexedVector e(IndexKind::footprint, S.exponents());
            e[j] = Element(1);
            const auto col = lemma_map(e, in.ideal, in.pts, in.lat);
            for (std::size_t i = 0; i < m; ++i) L[i][j] = col[i];
            for (std::size_t i = 0; i < m; ++i) P[j][i] = oracle::monomial_naive(in.lat.field(), in.pts[i], S[j]);
        }
        CHECK(oracle::rank(in.lat.field(), L) == m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Element pl, lp;
                for (std::size_t k = 0; k < m; ++k) {
                    pl = in.lat.field().add(pl, in.lat.field().mul(P[i][k], L[k][j]));
                    lp = in.lat.field().add(lp, in.lat.field().mul(L[i][k], P[k][j]));
                }
                CHECK(pl == Element(i == j ? 1 : 0));
                CHECK(lp == Element(i == j ? 1 : 0));
            }
    }
}

TEST_CASE("source must be indexed by the footprint")
{
    const auto f = make_field(3, 1);
    const Lattice lat(f, 1);
    const auto ideal = vanishing_basis(std::vector<Point>{{1}, {2}}, lat, parse_order("grlex", 1));
    const IndexedVector wrong(IndexKind::footprint, {{0}});
    CHECK_THROWS_AS(extend(wrong, ideal.basis, ideal.footprint, lat), Error);
}
