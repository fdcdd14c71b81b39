#include "oracles.hpp"

#include <doctest.h>

using namespace affvar;

TEST_CASE("prime field arithmetic")
{
    const auto f = make_field(5, 1);
    CHECK(f->size() == 5);
    CHECK(f->mul(Element(3), Element(4)) == Element(2));
    CHECK(f->add(Element(3), Element(4)) == Element(2));
    CHECK(f->sub(Element(1), Element(3)) == Element(3));
    CHECK(f->inv(Element(2)) == Element(3));
}

TEST_CASE("F_4 modulus and primitive element")
{
    const auto f = make_field(2, 2);
    CHECK(f->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    const Element alpha = f->primitive();
    CHECK(alpha == Element(2));
    // alpha^2 = alpha + 1
    CHECK(f->mul(alpha, alpha) == Element(3));
    CHECK(f->mul(alpha, alpha) == f->add(alpha, f->one()));
}

TEST_CASE("least primitive element of F_7 is 3")
{
    const auto f = make_field(7, 1);
    CHECK(f->primitive() == Element(3));
    // exhaustive order check
    std::uint32_t least = 0;
    for (std::uint32_t a = 1; a < 7 && !least; ++a) {
        std::uint32_t x = a, ord = 1;
        while (x != 1) {
            x = x * a % 7;
            ++ord;
        }
        if (ord == 6) least = a;
    }
    CHECK(least == 3);
}

TEST_CASE("pow conventions")
{
    const auto f = make_field(7, 1);
    CHECK(f->pow(Element(0), 0) == Element(1));
    CHECK(f->pow(Element(0), 5) == Element(0));
    CHECK(f->pow(Element(3), -1) == f->inv(Element(3)));
    CHECK(f->pow(Element(3), 6) == Element(1));
    CHECK_THROWS_AS(f->pow(Element(0), -1), Error);
}

TEST_CASE("field axioms, exhaustive for small q")
{
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}}) {
        const auto f = make_field(p, m);
        const std::uint32_t q = f->size();
        CAPTURE(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            const Element ea(a);
            if (a) CHECK(f->mul(ea, f->inv(ea)) == f->one());
            CHECK(f->add(ea, f->neg(ea)) == f->zero());
            for (std::uint32_t b = 0; b < q; ++b) {
                const Element eb(b);
                CHECK(f->mul(ea, eb).code == oracle::mul_by_polynomials(*f, a, b));
                CHECK(f->add(ea, eb) == f->add(eb, ea));
                CHECK(f->mul(ea, eb) == f->mul(eb, ea));
                CHECK(f->sub(f->add(ea, eb), eb) == ea);
                // Frobenius
                CHECK(f->pow(f->add(ea, eb), p) == f->add(f->pow(ea, p), f->pow(eb, p)));
                for (std::uint32_t c = 0; c < q; ++c) {
                    const Element ec(c);
                    CHECK(f->mul(ea, f->add(eb, ec)) == f->add(f->mul(ea, eb), f->mul(ea, ec)));
                    CHECK(f->mul(f->mul(ea, eb), ec) == f->mul(ea, f->mul(eb, ec)));
                }
            }
        }
    }
}

TEST_CASE("field axioms, randomized for larger q")
{
    std::mt19937_64 rng(11);
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 2}, {7, 2}, {2, 8}, {3, 5}, {251, 1}, {2, 16}}) {
        const auto f = make_field(p, m);
        std::uniform_int_distribution<std::uint32_t> d(0, f->size() - 1);
        for (int i = 0; i < 2000; ++i) {
            const Element a(d(rng)), b(d(rng)), c(d(rng));
            CHECK(f->mul(a, b).code == oracle::mul_by_polynomials(*f, a.code, b.code));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            if (!b.is_zero()) CHECK(f->mul(f->div(a, b), b) == a);
        }
    }
}

TEST_CASE("modulus irreducible and primitive element of full order")
{
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}, {7, 2}, {3, 3}, {2, 8}, {13, 1}}) {
        const auto f = make_field(p, m);
        CAPTURE(f->spec());
        CHECK(is_irreducible(f->modulus(), p));
        CHECK(f->order(f->primitive()) == f->size() - 1);
        CHECK(f->pow(f->primitive(), f->size() - 1) == f->one());
        for (std::uint32_t k = 1; k < f->size() - 1; ++k) CHECK(f->pow(f->primitive(), k) != f->one());
        if (m > 1) CHECK(f->primitive() == Element(p));
    }
}

TEST_CASE("invalid field parameters")
{
    CHECK_THROWS_AS(make_field(4, 1), Error);
    CHECK_THROWS_AS(make_field(2, 17), Error);
    CHECK_THROWS_AS(make_field(2, 0), Error);
    CHECK_THROWS_AS(make_field(5, 1)->inv(Element(0)), Error);
    CHECK_THROWS_AS(make_field(5, 1)->element(5), Error);
    CHECK(parse_field("2^2")->size() == 4);
    CHECK(parse_field("7")->size() == 7);
    CHECK_THROWS_AS(parse_field("x^2"), Error);
}

TEST_CASE("operation counting scopes nest")
{
    const auto f = make_field(7, 1);
    OpCounter outer, inner;
    f->mul(Element(2), Element(3)); // not counted
    {
        CountingScope a(outer);
        f->add(Element(1), Element(2));
        {
            CountingScope b(inner);
            f->mul(Element(2), Element(3));
            f->div(Element(2), Element(3));
            f->neg(Element(2));
            f->pow(Element(3), 4);
        }
        f->sub(Element(1), Element(2));
    }
    CHECK(inner.muls == 2);
    CHECK(inner.divs == 1);
    CHECK(inner.subs == 1);
    CHECK(outer.adds == 1);
    CHECK(outer.subs == 2);
    CHECK(outer.muls == 2);
    CHECK(outer.total() == 6);
}
