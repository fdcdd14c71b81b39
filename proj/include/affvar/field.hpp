#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace affvar {

/// Raised for malformed inputs and violated preconditions throughout the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An element of F_q, stored as its integer code.
///
/// The code of sum_i a_i * beta^i (beta a root of the field modulus, a_i base-p digits)
/// is sum_i a_i * p^i, so codes 0..p-1 are the prime subfield.
struct Element {
    std::uint32_t code = 0;

    constexpr Element() = default;
    constexpr explicit Element(std::uint32_t c) : code(c) {}

    constexpr bool is_zero() const { return code == 0; }
    friend constexpr auto operator<=>(Element, Element) = default;
};

/// Counts of field operations performed while a CountingScope is active on this thread.
struct OpCounter {
    std::uint64_t adds = 0;
    std::uint64_t subs = 0;
    std::uint64_t muls = 0;
    std::uint64_t divs = 0;

    std::uint64_t total() const { return adds + subs + muls + divs; }
    OpCounter& operator+=(const OpCounter& o)
    {
        adds += o.adds;
        subs += o.subs;
        muls += o.muls;
        divs += o.divs;
        return *this;
    }
};

/// Activates `counter` for field operations on the current thread until destruction.
/// Scopes nest: on exit, the counts gathered here are also credited to the enclosing scope.
class CountingScope {
public:
    explicit CountingScope(OpCounter& counter);
    ~CountingScope();
    CountingScope(const CountingScope&) = delete;
    CountingScope& operator=(const CountingScope&) = delete;

private:
    OpCounter* previous_;
    OpCounter* mine_;
    OpCounter start_;
};

namespace detail {
OpCounter* active_counter();
}

/// F_q with q = p^m <= 2^16, log/antilog tables and a fixed primitive element.
///
/// The modulus is the least monic primitive polynomial of degree m over F_p, where
/// polynomials x^m + c_{m-1}x^{m-1} + ... + c_0 are ranked by the integer sum c_i p^i.
/// The primitive element is the least code of multiplicative order q - 1 (for m > 1 this
/// is always x, code p). Instances are immutable and safe to share between threads.
class Field {
public:
    Field(std::uint32_t p, std::uint32_t m);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t size() const { return q_; }
    /// m + 1 coefficients, constant term first; the last is 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Element primitive() const { return alpha_; }

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element element(std::uint32_t code) const;

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    Element div(Element a, Element b) const;
    /// a^e for any integer e, with a^0 = 1 for every a (0 included).
    Element pow(Element a, std::int64_t e) const;

    /// Discrete log to base alpha; a must be nonzero.
    std::uint32_t log(Element a) const;
    Element exp(std::int64_t e) const;
    std::uint32_t order(Element a) const;

    /// "p^m" form.
    std::string spec() const;

private:
    std::uint32_t add_codes(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    Element alpha_;
    std::vector<std::uint32_t> exp_;   // 2(q-1) entries
    std::vector<std::uint32_t> log_;   // q entries, log_[0] unused
    std::vector<std::uint32_t> neg_;   // additive inverses
    std::vector<std::uint32_t> pow_p_; // p^i for i < m
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(std::uint32_t p, std::uint32_t m);

/// Parses "p^m" (e.g. "2^2", "7^1"); a bare prime "7" is accepted as "7^1".
FieldPtr parse_field(std::string_view spec);

bool is_prime(std::uint32_t n);

/// Exhaustive trial division of the monic polynomial `coeffs` (constant term first) over F_p.
bool is_irreducible(const std::vector<std::uint32_t>& coeffs, std::uint32_t p);

} // namespace affvar
