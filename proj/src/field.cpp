#include "affvar/field.hpp"

#include <charconv>

namespace affvar {

namespace {

thread_local OpCounter* t_active = nullptr;

inline void count_add()
{
    if (t_active) ++t_active->adds;
}
inline void count_sub()
{
    if (t_active) ++t_active->subs;
}
inline void count_mul()
{
    if (t_active) ++t_active->muls;
}
inline void count_div()
{
    if (t_active) ++t_active->divs;
}

using Poly = std::vector<std::uint32_t>; // constant term first

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    // p is prime; Fermat.
    std::uint64_t r = 1, b = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over F_p; b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly digits(std::uint32_t code, std::uint32_t p, std::uint32_t m)
{
    Poly d(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

std::uint32_t undigits(const Poly& d, std::uint32_t p)
{
    std::uint32_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
    return code;
}

// Product of two codes modulo the monic modulus, by schoolbook multiplication.
std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b, const Poly& modulus, std::uint32_t p)
{
    const std::uint32_t m = static_cast<std::uint32_t>(modulus.size() - 1);
    const Poly da = digits(a, p, m), db = digits(b, p, m);
    Poly prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
    Poly r = poly_mod(prod, modulus, p);
    r.resize(m, 0);
    return undigits(r, p);
}

bool x_is_primitive(const Poly& modulus, std::uint32_t p, std::uint32_t q)
{
    const std::uint32_t m = static_cast<std::uint32_t>(modulus.size() - 1);
    Poly r = poly_mod({0, 1}, modulus, p);
    r.resize(m, 0);
    const std::uint32_t x = undigits(r, p);
    std::uint32_t cur = x;
    for (std::uint32_t k = 1; k < q - 1; ++k) {
        if (cur == 1) return false;
        cur = mul_slow(cur, x, modulus, p);
    }
    return cur == 1;
}

} // namespace

namespace detail {
OpCounter* active_counter() { return t_active; }
} // namespace detail

CountingScope::CountingScope(OpCounter& counter) : previous_(t_active), mine_(&counter), start_(counter)
{
    t_active = mine_;
}

CountingScope::~CountingScope()
{
    t_active = previous_;
    if (previous_) {
        OpCounter delta;
        delta.adds = mine_->adds - start_.adds;
        delta.subs = mine_->subs - start_.subs;
        delta.muls = mine_->muls - start_.muls;
        delta.divs = mine_->divs - start_.divs;
        *previous_ += delta;
    }
}

bool is_prime(std::uint32_t n)
{
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& coeffs, std::uint32_t p)
{
    Poly f = coeffs;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    // Every monic divisor of degree d in [1, deg/2].
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g(d + 1, 0);
            std::uint64_t v = low;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m)
{
    if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw Error("field extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > 65536) throw Error("unsupported field size " + std::to_string(p) + "^" + std::to_string(m));
    }
    q_ = static_cast<std::uint32_t>(q);

    pow_p_.resize(m);
    std::uint32_t pp = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        pow_p_[i] = pp;
        pp *= p;
    }

    if (q_ == 2) {
        modulus_ = {1, 1}; // x + 1, root 1
    } else {
        bool found = false;
        for (std::uint32_t low = 0; low < q_ && !found; ++low) {
            Poly f = digits(low, p, m);
            f.push_back(1);
            if (f[0] == 0) continue;
            if (x_is_primitive(f, p, q_) && is_irreducible(f, p)) {
                modulus_ = f;
                found = true;
            }
        }
        if (!found) throw Error("no primitive modulus found"); // unreachable for valid (p, m)
    }

    neg_.resize(q_);
    for (std::uint32_t c = 0; c < q_; ++c) {
        Poly d = digits(c, p, m);
        for (auto& x : d) x = (p - x) % p;
        neg_[c] = undigits(d, p);
    }

    // Least element of order q - 1.
    std::uint32_t alpha = 0;
    for (std::uint32_t c = 1; c < q_ && alpha == 0; ++c) {
        std::uint32_t cur = c;
        std::uint32_t k = 1;
        while (cur != 1) {
            cur = mul_slow(cur, c, modulus_, p);
            ++k;
        }
        if (k == q_ - 1) alpha = c;
    }
    if (q_ == 2) alpha = 1;
    alpha_ = Element(alpha);

    const std::uint32_t n = q_ - 1;
    exp_.assign(2 * n, 0);
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = cur;
        exp_[i + n] = cur;
        log_[cur] = i;
        cur = mul_slow(cur, alpha, modulus_, p);
    }
}

Element Field::element(std::uint32_t code) const
{
    if (code >= q_) throw Error("field element code " + std::to_string(code) + " out of range for q=" + std::to_string(q_));
    return Element(code);
}

std::uint32_t Field::add_codes(std::uint32_t a, std::uint32_t b) const
{
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
        const std::uint32_t s = (a % p_ + b % p_) % p_;
        r += s * pow_p_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

Element Field::add(Element a, Element b) const
{
    count_add();
    return Element(add_codes(a.code, b.code));
}

Element Field::sub(Element a, Element b) const
{
    count_sub();
    return Element(add_codes(a.code, neg_[b.code]));
}

Element Field::neg(Element a) const
{
    count_sub();
    return Element(neg_[a.code]);
}

Element Field::mul(Element a, Element b) const
{
    count_mul();
    if (a.code == 0 || b.code == 0) return Element(0);
    return Element(exp_[log_[a.code] + log_[b.code]]);
}

Element Field::inv(Element a) const
{
    count_div();
    if (a.code == 0) throw Error("inversion of zero");
    const std::uint32_t n = q_ - 1;
    return Element(exp_[(n - log_[a.code]) % n]);
}

Element Field::div(Element a, Element b) const
{
    count_div();
    if (b.code == 0) throw Error("division by zero");
    if (a.code == 0) return Element(0);
    const std::uint32_t n = q_ - 1;
    return Element(exp_[log_[a.code] + (n - log_[b.code]) % n]);
}

Element Field::pow(Element a, std::int64_t e) const
{
    count_mul();
    if (e == 0) return Element(1);
    if (a.code == 0) {
        if (e < 0) throw Error("inversion of zero");
        return Element(0);
    }
    const std::int64_t n = q_ - 1;
    std::int64_t k = (static_cast<std::int64_t>(log_[a.code]) * (e % n)) % n;
    if (k < 0) k += n;
    return Element(exp_[static_cast<std::size_t>(k)]);
}

std::uint32_t Field::log(Element a) const
{
    if (a.code == 0) throw Error("logarithm of zero");
    return log_[a.code];
}

Element Field::exp(std::int64_t e) const
{
    const std::int64_t n = q_ - 1;
    std::int64_t k = e % n;
    if (k < 0) k += n;
    return Element(exp_[static_cast<std::size_t>(k)]);
}

std::uint32_t Field::order(Element a) const
{
    if (a.code == 0) throw Error("order of zero");
    const std::uint32_t n = q_ - 1;
    std::uint32_t g = log_[a.code], r = n;
    while (g) {
        const std::uint32_t t = r % g;
        r = g;
        g = t;
    }
    return n / r;
}

std::string Field::spec() const { return std::to_string(p_) + "^" + std::to_string(m_); }

FieldPtr make_field(std::uint32_t p, std::uint32_t m) { return std::make_shared<const Field>(p, m); }

FieldPtr parse_field(std::string_view spec)
{
    auto parse_uint = [&](std::string_view s) {
        std::uint32_t v = 0;
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw Error("malformed field spec '" + std::string(spec) + "'");
        return v;
    };
    const auto caret = spec.find('^');
    if (caret == std::string_view::npos) return make_field(parse_uint(spec), 1);
    return make_field(parse_uint(spec.substr(0, caret)), parse_uint(spec.substr(caret + 1)));
}

} // namespace affvar
