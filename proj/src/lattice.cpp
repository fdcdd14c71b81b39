#include "affvar/lattice.hpp"

#include <sstream>

namespace affvar {

std::string to_string(IndexKind kind)
{
    switch (kind) {
    case IndexKind::exponents: return "exponents";
    case IndexKind::points: return "points";
    case IndexKind::footprint: return "footprint";
    case IndexKind::point_subset: return "point_subset";
    }
    return "?";
}

Lattice::Lattice(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars)
{
    if (!field_) throw Error("lattice requires a field");
    if (nvars < 1) throw Error("lattice dimension must be positive");
    q_ = field_->size();
    size_ = 1;
    for (int i = 0; i < nvars; ++i) {
        size_ *= q_;
        if (size_ > (std::size_t{1} << 24)) throw Error("lattice too large");
    }
}

std::size_t Lattice::rank(const Tuple& t) const
{
    if (static_cast<int>(t.size()) != nvars_) throw Error("index tuple has wrong length");
    std::size_t r = 0;
    for (int v : t) {
        if (v < 0 || static_cast<std::uint32_t>(v) >= q_) throw Error("index tuple " + format_tuple(t) + " outside the lattice");
        r = r * q_ + static_cast<std::size_t>(v);
    }
    return r;
}

Tuple Lattice::unrank(std::size_t r) const
{
    Tuple t(nvars_);
    for (int i = nvars_ - 1; i >= 0; --i) {
        t[i] = static_cast<int>(r % q_);
        r /= q_;
    }
    return t;
}

bool Lattice::contains(const Tuple& t) const
{
    if (static_cast<int>(t.size()) != nvars_) return false;
    for (int v : t)
        if (v < 0 || static_cast<std::uint32_t>(v) >= q_) return false;
    return true;
}

Element Lattice::monomial(const Point& w, const Exponent& a) const
{
    const Field& f = *field_;
    Element r = f.one();
    for (int i = 0; i < nvars_; ++i) {
        if (a[i] == 0) continue;
        r = f.mul(r, f.pow(Element(static_cast<std::uint32_t>(w[i])), a[i]));
    }
    return r;
}

GridVector::GridVector(const Lattice& lattice, IndexKind kind)
    : lattice_(lattice), kind_(kind), values_(lattice.size())
{
    if (kind != IndexKind::exponents && kind != IndexKind::points) throw Error("grid vectors index A or Omega");
}

GridVector::GridVector(const Lattice& lattice, IndexKind kind, std::vector<Element> values)
    : lattice_(lattice), kind_(kind), values_(std::move(values))
{
    if (kind != IndexKind::exponents && kind != IndexKind::points) throw Error("grid vectors index A or Omega");
    if (values_.size() != lattice.size()) throw Error("grid vector size does not match lattice");
}

bool GridVector::is_zero() const
{
    for (auto v : values_)
        if (!v.is_zero()) return false;
    return true;
}

IndexedVector::IndexedVector(IndexKind kind, std::vector<Tuple> index)
    : IndexedVector(kind, std::move(index), {})
{
}

IndexedVector::IndexedVector(IndexKind kind, std::vector<Tuple> index, std::vector<Element> values)
    : kind_(kind), index_(std::move(index)), values_(std::move(values))
{
    if (values_.empty()) values_.assign(index_.size(), Element{});
    if (values_.size() != index_.size()) throw Error("indexed vector: value count does not match index count");
    for (std::size_t i = 0; i < index_.size(); ++i)
        if (!lookup_.emplace(index_[i], i).second) throw Error("indexed vector: duplicate index " + format_tuple(index_[i]));
}

std::size_t IndexedVector::position(const Tuple& t) const
{
    auto it = lookup_.find(t);
    if (it == lookup_.end()) throw Error("index " + format_tuple(t) + " not in index set");
    return it->second;
}

bool IndexedVector::is_zero() const
{
    for (auto v : values_)
        if (!v.is_zero()) return false;
    return true;
}

namespace {

void require_kind(const GridVector& v, IndexKind kind)
{
    if (v.kind() != kind) throw Error("index-set mismatch: expected " + to_string(kind) + ", got " + to_string(v.kind()));
}

// Applies a q x q matrix along one axis: out[.., i, ..] = sum_j M[i][j] in[.., j, ..].
std::vector<Element> apply_axis(const Lattice& lat, const std::vector<Element>& in, int axis,
                                const std::vector<std::vector<Element>>& mat)
{
    const Field& f = lat.field();
    const std::size_t q = lat.q();
    std::size_t stride = 1;
    for (int i = lat.nvars() - 1; i > axis; --i) stride *= q;
    const std::size_t block = stride * q;
    std::vector<Element> out(in.size());
    for (std::size_t base = 0; base < in.size(); base += block) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            for (std::size_t i = 0; i < q; ++i) {
                Element acc = f.zero();
                for (std::size_t j = 0; j < q; ++j) {
                    const Element m = mat[i][j];
                    if (m.is_zero()) continue;
                    const Element x = in[base + inner + j * stride];
                    if (x.is_zero()) continue;
                    acc = f.add(acc, f.mul(m, x));
                }
                out[base + inner + i * stride] = acc;
            }
        }
    }
    return out;
}

// Forward 1-D matrix: M[a][w] = w^a with 0^0 = 1.
std::vector<std::vector<Element>> forward_matrix(const Field& f)
{
    const std::uint32_t q = f.size();
    std::vector<std::vector<Element>> m(q, std::vector<Element>(q));
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t w = 0; w < q; ++w) m[a][w] = f.pow(Element(w), a);
    return m;
}

// Inverse 1-D matrix: row w != 0 is -w^{-i} at column i in [1, q-1]; row 0 is e_0 - e_{q-1}.
std::vector<std::vector<Element>> inverse_matrix(const Field& f)
{
    const std::uint32_t q = f.size();
    std::vector<std::vector<Element>> m(q, std::vector<Element>(q));
    m[0][0] = f.one();
    m[0][q - 1] = f.sub(m[0][q - 1], f.one());
    for (std::uint32_t w = 1; w < q; ++w)
        for (std::uint32_t i = 1; i < q; ++i) m[w][i] = f.neg(f.pow(Element(w), -static_cast<std::int64_t>(i)));
    return m;
}

} // namespace

GridVector dft(const GridVector& c)
{
    require_kind(c, IndexKind::points);
    const Lattice& lat = c.lattice();
    const auto mat = forward_matrix(lat.field());
    std::vector<Element> cur = c.values();
    for (int axis = 0; axis < lat.nvars(); ++axis) cur = apply_axis(lat, cur, axis, mat);
    return GridVector(lat, IndexKind::exponents, std::move(cur));
}

GridVector dft_direct(const GridVector& c)
{
    require_kind(c, IndexKind::points);
    const Lattice& lat = c.lattice();
    const Field& f = lat.field();
    GridVector out(lat, IndexKind::exponents);
    for (std::size_t ra = 0; ra < lat.size(); ++ra) {
        const Exponent a = lat.unrank(ra);
        Element acc = f.zero();
        for (std::size_t rw = 0; rw < lat.size(); ++rw) {
            if (c[rw].is_zero()) continue;
            acc = f.add(acc, f.mul(c[rw], lat.monomial(lat.unrank(rw), a)));
        }
        out[ra] = acc;
    }
    return out;
}

GridVector idft(const GridVector& h)
{
    require_kind(h, IndexKind::exponents);
    const Lattice& lat = h.lattice();
    const auto mat = inverse_matrix(lat.field());
    std::vector<Element> cur = h.values();
    for (int axis = 0; axis < lat.nvars(); ++axis) cur = apply_axis(lat, cur, axis, mat);
    return GridVector(lat, IndexKind::points, std::move(cur));
}

std::size_t idft_inner_terms(const Lattice& lattice, const Point& w)
{
    std::size_t zeros = 0;
    for (int i = 0; i < lattice.nvars(); ++i)
        if (w[i] == 0) ++zeros;
    return std::size_t{1} << zeros;
}

Element idft_at(const GridVector& h, const Point& w)
{
    require_kind(h, IndexKind::exponents);
    const Lattice& lat = h.lattice();
    if (!lat.contains(w)) throw Error("point " + format_tuple(w) + " outside Omega");
    const Field& f = lat.field();
    const int n = lat.nvars();
    const int q = static_cast<int>(lat.q());

    std::vector<int> nonzero, zero;
    for (int i = 0; i < n; ++i) (w[i] != 0 ? nonzero : zero).push_back(i);
    const std::size_t m = nonzero.size();

    // Inner sum over J subset of the zero coordinates: sum (-1)^|J| h_{i(I,J)}.
    Exponent idx(n, 0);
    auto inner = [&]() {
        Element acc = f.zero();
        const std::size_t subsets = std::size_t{1} << zero.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            int parity = 0;
            for (std::size_t j = 0; j < zero.size(); ++j) {
                const bool in_j = (mask >> j) & 1u;
                idx[zero[j]] = in_j ? q - 1 : 0;
                parity ^= in_j ? 1 : 0;
            }
            const Element v = h.at(idx);
            acc = parity ? f.sub(acc, v) : f.add(acc, v);
        }
        return acc;
    };

    // Outer sum over l in [1, q-1]^m of inner(l) * prod w_{i_j}^{-l_j}.
    Element total = f.zero();
    std::vector<int> l(m, 1);
    while (true) {
        Element weight = f.one();
        for (std::size_t j = 0; j < m; ++j) {
            idx[nonzero[j]] = l[j];
            weight = f.mul(weight, f.pow(Element(static_cast<std::uint32_t>(w[nonzero[j]])), -l[j]));
        }
        total = f.add(total, f.mul(inner(), weight));
        std::size_t j = 0;
        while (j < m && ++l[j] > q - 1) {
            l[j] = 1;
            ++j;
        }
        if (j == m) break;
    }
    return (m % 2 == 1) ? f.neg(total) : total;
}

GridVector idft_direct(const GridVector& h)
{
    require_kind(h, IndexKind::exponents);
    const Lattice& lat = h.lattice();
    GridVector out(lat, IndexKind::points);
    for (std::size_t r = 0; r < lat.size(); ++r) out[r] = idft_at(h, lat.unrank(r));
    return out;
}

IndexedVector restrict_to(const GridVector& c, std::span<const Point> points)
{
    require_kind(c, IndexKind::points);
    std::vector<Tuple> index(points.begin(), points.end());
    std::vector<Element> values;
    values.reserve(index.size());
    for (const auto& p : index) {
        if (!c.lattice().contains(p)) throw Error("point " + format_tuple(p) + " is not in Omega");
        values.push_back(c.at(p));
    }
    return IndexedVector(IndexKind::point_subset, std::move(index), std::move(values));
}

GridVector embed(const IndexedVector& v, const Lattice& lattice)
{
    const bool points = v.kind() == IndexKind::point_subset || v.kind() == IndexKind::points;
    GridVector out(lattice, points ? IndexKind::points : IndexKind::exponents);
    for (std::size_t i = 0; i < v.size(); ++i) out.at(v.index()[i]) = v[i];
    return out;
}

std::string format_tuple(const Tuple& t)
{
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t[i]);
    }
    return s;
}

std::string format_vector(const GridVector& v)
{
    std::ostringstream os;
    for (std::size_t r = 0; r < v.size(); ++r) os << format_tuple(v.lattice().unrank(r)) << ": " << v[r].code << '\n';
    return os.str();
}

std::string format_vector(const IndexedVector& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << format_tuple(v.index()[i]) << ": " << v[i].code << '\n';
    return os.str();
}

} // namespace affvar
