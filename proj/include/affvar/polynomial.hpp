#pragma once

#include "affvar/lattice.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace affvar {

/// Term order on exponent tuples.
///
/// `precedence` lists variable indices (0-based) from most to least significant; the default is
/// x_N > ... > x_1. Weighted orders compare sum w_i a_i first and break ties lexicographically.
class MonomialOrder {
public:
    enum class Kind { lex, graded_lex, graded_reverse_lex, weighted };

    MonomialOrder() = default;
    MonomialOrder(Kind kind, int nvars, std::vector<int> weights = {}, std::vector<int> precedence = {});

    static MonomialOrder graded_lex(int nvars) { return {Kind::graded_lex, nvars}; }

    Kind kind() const { return kind_; }
    int nvars() const { return nvars_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<int>& precedence() const { return precedence_; }

    std::strong_ordering compare(const Exponent& a, const Exponent& b) const;
    bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

    /// "lex", "grlex", "grevlex" or "weighted:w1,...,wN", with optional ";prec=i,j,..." (1-based).
    std::string spec() const;

private:
    Kind kind_ = Kind::graded_lex;
    int nvars_ = 0;
    std::vector<int> weights_;
    std::vector<int> precedence_;
};

MonomialOrder parse_order(std::string_view spec, int nvars);

/// Componentwise a <= b.
bool divides(const Exponent& a, const Exponent& b);
Exponent add_exponents(const Exponent& a, const Exponent& b);
Exponent sub_exponents(const Exponent& a, const Exponent& b);
int total_degree(const Exponent& a);

/// Sparse multivariate polynomial over F_q; zero coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<Exponent, Element>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    Polynomial(int nvars, Terms terms);

    static Polynomial monomial(int nvars, const Exponent& e, Element c = Element(1));

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Element coeff(const Exponent& e) const;

    /// Adds c * x^e to the polynomial.
    void add_term(const Field& f, const Exponent& e, Element c);

    Exponent leading_exponent(const MonomialOrder& order) const;
    Element leading_coeff(const MonomialOrder& order) const;

    Polynomial add(const Field& f, const Polynomial& o) const;
    Polynomial sub(const Field& f, const Polynomial& o) const;
    Polynomial scale(const Field& f, Element c) const;
    Polynomial shift(const Exponent& m) const;
    Polynomial mul(const Field& f, const Polynomial& o) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    int nvars_ = 0;
    Terms terms_;
};

/// f(w) = sum f_s w^s with 0^0 = 1.
Element evaluate(const Polynomial& f, const Lattice& lattice, const Point& w);

/// Terms in decreasing order as "c*x1^e1*...*xN^eN" joined by " + "; "0" for the zero polynomial.
std::string format_polynomial(const Polynomial& f, const MonomialOrder& order);
/// Accepts "+"-joined terms of the form coeff*x1^e1*x2*..., coefficient and exponents optional.
Polynomial parse_polynomial(std::string_view text, const Field& field, int nvars);

} // namespace affvar
