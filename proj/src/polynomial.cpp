#include "affvar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace affvar {

MonomialOrder::MonomialOrder(Kind kind, int nvars, std::vector<int> weights, std::vector<int> precedence)
    : kind_(kind), nvars_(nvars), weights_(std::move(weights)), precedence_(std::move(precedence))
{
    if (nvars < 1) throw Error("monomial order needs at least one variable");
    if (precedence_.empty()) {
        precedence_.resize(nvars);
        for (int i = 0; i < nvars; ++i) precedence_[i] = nvars - 1 - i;
    }
    if (static_cast<int>(precedence_.size()) != nvars) throw Error("variable precedence has wrong length");
    std::vector<int> sorted = precedence_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < nvars; ++i)
        if (sorted[i] != i) throw Error("variable precedence is not a permutation");
    if (kind_ == Kind::weighted) {
        if (static_cast<int>(weights_.size()) != nvars) throw Error("weight vector has wrong length");
        for (int w : weights_)
            if (w < 1) throw Error("weights must be positive integers");
    } else {
        weights_.clear();
    }
}

std::strong_ordering MonomialOrder::compare(const Exponent& a, const Exponent& b) const
{
    if (static_cast<int>(a.size()) != nvars_ || static_cast<int>(b.size()) != nvars_)
        throw Error("exponent length does not match monomial order");
    auto lex = [&]() {
        for (int v : precedence_)
            if (a[v] != b[v]) return a[v] <=> b[v];
        return std::strong_ordering::equal;
    };
    switch (kind_) {
    case Kind::lex: return lex();
    case Kind::graded_lex: {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da <=> db;
        return lex();
    }
    case Kind::graded_reverse_lex: {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da <=> db;
        for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it)
            if (a[*it] != b[*it]) return b[*it] <=> a[*it];
        return std::strong_ordering::equal;
    }
    case Kind::weighted: {
        long wa = 0, wb = 0;
        for (int i = 0; i < nvars_; ++i) {
            wa += static_cast<long>(weights_[i]) * a[i];
            wb += static_cast<long>(weights_[i]) * b[i];
        }
        if (wa != wb) return wa <=> wb;
        return lex();
    }
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrder::spec() const
{
    std::string s;
    switch (kind_) {
    case Kind::lex: s = "lex"; break;
    case Kind::graded_lex: s = "grlex"; break;
    case Kind::graded_reverse_lex: s = "grevlex"; break;
    case Kind::weighted:
        s = "weighted:";
        for (int i = 0; i < nvars_; ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
        break;
    }
    bool default_prec = true;
    for (int i = 0; i < nvars_; ++i)
        if (precedence_[i] != nvars_ - 1 - i) default_prec = false;
    if (!default_prec) {
        s += ";prec=";
        for (int i = 0; i < nvars_; ++i) s += (i ? "," : "") + std::to_string(precedence_[i] + 1);
    }
    return s;
}

namespace {

std::string_view trim_view(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view context)
{
    s = trim_view(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw Error("expected integer in '" + std::string(context) + "'");
    return v;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view context)
{
    std::vector<int> out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(parse_int(s.substr(0, comma), context));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

MonomialOrder parse_order(std::string_view spec, int nvars)
{
    spec = trim_view(spec);
    std::vector<int> precedence;
    if (auto semi = spec.find(';'); semi != std::string_view::npos) {
        std::string_view rest = trim_view(spec.substr(semi + 1));
        spec = trim_view(spec.substr(0, semi));
        if (rest.substr(0, 5) != "prec=") throw Error("unknown order option '" + std::string(rest) + "'");
        precedence = parse_int_list(rest.substr(5), rest);
        for (auto& v : precedence) v -= 1;
    }
    if (spec == "lex") return MonomialOrder(MonomialOrder::Kind::lex, nvars, {}, precedence);
    if (spec == "grlex" || spec == "graded-lex") return MonomialOrder(MonomialOrder::Kind::graded_lex, nvars, {}, precedence);
    if (spec == "grevlex" || spec == "graded-reverse-lex")
        return MonomialOrder(MonomialOrder::Kind::graded_reverse_lex, nvars, {}, precedence);
    if (spec.substr(0, 9) == "weighted:")
        return MonomialOrder(MonomialOrder::Kind::weighted, nvars, parse_int_list(spec.substr(9), spec), precedence);
    throw Error("unknown monomial order '" + std::string(spec) + "'");
}

bool divides(const Exponent& a, const Exponent& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent add_exponents(const Exponent& a, const Exponent& b)
{
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponent sub_exponents(const Exponent& a, const Exponent& b)
{
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

int total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

Polynomial::Polynomial(int nvars, Terms terms) : nvars_(nvars)
{
    for (auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != nvars) throw Error("polynomial term has wrong number of variables");
        if (!c.is_zero()) terms_.emplace(e, c);
    }
}

Polynomial Polynomial::monomial(int nvars, const Exponent& e, Element c)
{
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

Element Polynomial::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Element{} : it->second;
}

void Polynomial::add_term(const Field& f, const Exponent& e, Element c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second = f.add(it->second, c);
    if (it->second.is_zero()) terms_.erase(it);
}

Exponent Polynomial::leading_exponent(const MonomialOrder& order) const
{
    if (terms_.empty()) throw Error("zero polynomial has no leading monomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return best->first;
}

Element Polynomial::leading_coeff(const MonomialOrder& order) const { return coeff(leading_exponent(order)); }

Polynomial Polynomial::add(const Field& f, const Polynomial& o) const
{
    Polynomial r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(f, e, c);
    return r;
}

Polynomial Polynomial::sub(const Field& f, const Polynomial& o) const
{
    Polynomial r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(f, e, f.neg(c));
    return r;
}

Polynomial Polynomial::scale(const Field& f, Element c) const
{
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    for (auto& [e, v] : terms_) r.terms_.emplace(e, f.mul(v, c));
    return r;
}

Polynomial Polynomial::shift(const Exponent& m) const
{
    Polynomial r(nvars_);
    for (auto& [e, v] : terms_) r.terms_.emplace(add_exponents(e, m), v);
    return r;
}

Polynomial Polynomial::mul(const Field& f, const Polynomial& o) const
{
    Polynomial r(nvars_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.add_term(f, add_exponents(e1, e2), f.mul(c1, c2));
    return r;
}

Element evaluate(const Polynomial& f, const Lattice& lattice, const Point& w)
{
    const Field& fld = lattice.field();
    Element acc = fld.zero();
    for (auto& [e, c] : f.terms()) acc = fld.add(acc, fld.mul(c, lattice.monomial(w, e)));
    return acc;
}

std::string format_polynomial(const Polynomial& f, const MonomialOrder& order)
{
    if (f.is_zero()) return "0";
    std::vector<std::pair<Exponent, Element>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << " + ";
        os << terms[i].second.code;
        for (std::size_t v = 0; v < terms[i].first.size(); ++v) os << "*x" << (v + 1) << '^' << terms[i].first[v];
    }
    return os.str();
}

Polynomial parse_polynomial(std::string_view text, const Field& field, int nvars)
{
    Polynomial poly(nvars);
    std::string_view rest = text;
    while (true) {
        const auto plus = rest.find('+');
        std::string_view term = trim_view(rest.substr(0, plus));
        if (term.empty()) throw Error("empty term in polynomial '" + std::string(text) + "'");
        Element coeff = field.one();
        Exponent e(nvars, 0);
        bool first = true;
        while (!term.empty()) {
            const auto star = term.find('*');
            std::string_view factor = trim_view(term.substr(0, star));
            if (!factor.empty() && factor.front() == 'x') {
                const auto caret = factor.find('^');
                const int var = parse_int(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), text);
                if (var < 1 || var > nvars) throw Error("variable x" + std::to_string(var) + " out of range in '" + std::string(text) + "'");
                const int power = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), text);
                if (power < 0) throw Error("negative exponent in '" + std::string(text) + "'");
                e[var - 1] += power;
            } else if (first) {
                const int c = parse_int(factor, text);
                if (c < 0) throw Error("negative coefficient in '" + std::string(text) + "'");
                coeff = field.element(static_cast<std::uint32_t>(c));
            } else {
                throw Error("malformed factor '" + std::string(factor) + "' in '" + std::string(text) + "'");
            }
            first = false;
            if (star == std::string_view::npos) break;
            term.remove_prefix(star + 1);
        }
        poly.add_term(field, e, coeff);
        if (plus == std::string_view::npos) break;
        rest.remove_prefix(plus + 1);
    }
    return poly;
}

} // namespace affvar
