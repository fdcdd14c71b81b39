#include "affvar/code.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace affvar {

namespace {

std::string trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

[[noreturn]] void fail(int line, const std::string& msg)
{
    throw Error("line " + std::to_string(line) + ": " + msg);
}

int to_int(std::string_view s, int line)
{
    const std::string t = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) fail(line, "expected an integer, got '" + t + "'");
    return v;
}

std::string strip_quotes(std::string s)
{
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

std::string bracketed(std::string_view body, int line)
{
    const std::string t = trim(body);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') fail(line, "expected a [...] list");
    return t.substr(1, t.size() - 2);
}

std::vector<Point> parse_point_list(std::string_view body, int nvars, int line)
{
    const std::string inner = bracketed(body, line);
    std::vector<Point> pts;
    if (trim(inner).empty()) return pts;
    if (inner.find('(') == std::string::npos) {
        if (nvars != 1) fail(line, "points must be written as tuples (w1,...,wN)");
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) pts.push_back({to_int(item, line)});
        return pts;
    }
    std::size_t pos = 0;
    while (true) {
        const auto open = inner.find('(', pos);
        if (open == std::string::npos) break;
        const auto close = inner.find(')', open);
        if (close == std::string::npos) fail(line, "unbalanced parenthesis in point list");
        Point p;
        std::stringstream ss(inner.substr(open + 1, close - open - 1));
        std::string item;
        while (std::getline(ss, item, ',')) p.push_back(to_int(item, line));
        if (static_cast<int>(p.size()) != nvars)
            fail(line, "point (" + format_tuple(p) + ") has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(nvars));
        pts.push_back(std::move(p));
        pos = close + 1;
    }
    return pts;
}

std::vector<std::string> parse_string_list(std::string_view body, int line)
{
    const std::string inner = bracketed(body, line);
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto open = inner.find('"', pos);
        if (open == std::string::npos) break;
        const auto close = inner.find('"', open + 1);
        if (close == std::string::npos) fail(line, "unterminated string in curve list");
        out.push_back(inner.substr(open + 1, close - open - 1));
        pos = close + 1;
    }
    if (out.empty()) fail(line, "curve list is empty");
    return out;
}

std::uint64_t code_count(const Code& code)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.k(); ++i) {
        total *= code.field().size();
        if (total > (std::uint64_t{1} << 20)) throw Error("code too large for exhaustive search (q^k > 2^20)");
    }
    return total;
}

// Calls visit(word) for every codeword, in lexicographic order of the basis coefficients.
template <class Visit>
void for_each_codeword(const Code& code, Visit visit)
{
    const Field& f = code.field();
    const std::uint64_t total = code_count(code);
    const Matrix basis = code_basis(code);
    const std::size_t n = code.n(), k = code.k();
    std::vector<std::uint32_t> digits(k, 0);
    std::vector<Element> word(n);
    for (std::uint64_t iter = 0; iter < total; ++iter) {
        visit(word);
        // odometer on the last coefficient; update the word by the coefficient change
        std::size_t i = k;
        while (i > 0) {
            --i;
            const Element before(digits[i]);
            const std::uint32_t next = digits[i] + 1 == f.size() ? 0 : digits[i] + 1;
            const Element delta = f.sub(Element(next), before);
            for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(delta, basis(i, j)));
            digits[i] = next;
            if (next != 0) break;
        }
    }
}

} // namespace

CodeSpec parse_code_spec(std::string_view text)
{
    std::map<std::string, std::pair<std::string, int>> kv;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        static const std::set<std::string> known{"field", "N", "order", "psi", "phi", "design_distance"};
        if (!known.count(key)) fail(lineno, "unknown key '" + key + "'");
        if (kv.count(key)) fail(lineno, "duplicate key '" + key + "'");
        kv[key] = {trim(line.substr(eq + 1)), lineno};
    }
    for (const char* required : {"field", "N", "psi", "phi"})
        if (!kv.count(required)) throw Error(std::string("code spec is missing '") + required + "'");

    CodeSpec spec;
    auto guard = [](int line, auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            const std::string msg = e.what();
            if (msg.rfind("line ", 0) == 0) throw;
            fail(line, msg);
        }
    };
    guard(kv["field"].second, [&] { spec.field = parse_field(strip_quotes(kv["field"].first)); });
    guard(kv["N"].second, [&] {
        spec.nvars = to_int(kv["N"].first, kv["N"].second);
        if (spec.nvars < 1) throw Error("N must be positive");
    });
    if (kv.count("order"))
        guard(kv["order"].second, [&] { spec.order = parse_order(strip_quotes(kv["order"].first), spec.nvars); });
    else
        spec.order = MonomialOrder::graded_lex(spec.nvars);

    const auto& [psi, psi_line] = kv["psi"];
    guard(psi_line, [&] {
        if (psi == "all") {
            spec.psi_kind = CodeSpec::PsiKind::all;
        } else if (psi == "nonzero") {
            spec.psi_kind = CodeSpec::PsiKind::nonzero;
        } else if (psi.rfind("curve:", 0) == 0) {
            spec.psi_kind = CodeSpec::PsiKind::curve;
            spec.curve = parse_string_list(psi.substr(6), psi_line);
            for (const auto& c : spec.curve) parse_polynomial(c, *spec.field, spec.nvars);
        } else if (psi.rfind("points:", 0) == 0) {
            spec.psi_kind = CodeSpec::PsiKind::points;
            spec.psi_points = parse_point_list(psi.substr(7), spec.nvars, psi_line);
        } else {
            throw Error("psi must be all, nonzero, curve:[...] or points:[...]");
        }
    });
    const auto& [phi, phi_line] = kv["phi"];
    guard(phi_line, [&] {
        if (phi.rfind("points:", 0) != 0) throw Error("phi must be points:[...]");
        spec.phi = parse_point_list(phi.substr(7), spec.nvars, phi_line);
    });
    if (kv.count("design_distance")) {
        const auto& [dd, line] = kv["design_distance"];
        spec.design_distance = to_int(dd, line);
        if (*spec.design_distance < 1) fail(line, "design_distance must be positive");
    }
    return spec;
}

CodeSpec load_code_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open code spec '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_code_spec(ss.str());
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

std::string format_code_spec(const CodeSpec& spec)
{
    auto points = [](const std::vector<Point>& pts) {
        std::string s = "points:[";
        for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ",(" : "(") + format_tuple(pts[i]) + ")";
        return s + "]";
    };
    std::ostringstream os;
    os << "field = " << spec.field->spec() << '\n' << "N = " << spec.nvars << '\n' << "order = " << spec.order.spec() << '\n';
    os << "psi = ";
    switch (spec.psi_kind) {
    case CodeSpec::PsiKind::all: os << "all"; break;
    case CodeSpec::PsiKind::nonzero: os << "nonzero"; break;
    case CodeSpec::PsiKind::curve:
        os << "curve:[";
        for (std::size_t i = 0; i < spec.curve.size(); ++i) os << (i ? ",\"" : "\"") << spec.curve[i] << '"';
        os << ']';
        break;
    case CodeSpec::PsiKind::points: os << points(spec.psi_points); break;
    }
    os << '\n' << "phi = " << points(spec.phi) << '\n';
    if (spec.design_distance) os << "design_distance = " << *spec.design_distance << '\n';
    return os.str();
}

std::size_t ReceivedWord::erasure_count() const
{
    return static_cast<std::size_t>(std::count(erased.begin(), erased.end(), true));
}

Code::Code(CodeSpec spec) : spec_(std::move(spec)), lattice_(spec_.field, spec_.nvars)
{
    if (spec_.order.nvars() != spec_.nvars) throw Error("monomial order has the wrong number of variables");
    std::vector<Point> psi;
    switch (spec_.psi_kind) {
    case CodeSpec::PsiKind::all:
    case CodeSpec::PsiKind::nonzero:
        for (std::size_t r = 0; r < lattice_.size(); ++r) {
            Point w = lattice_.unrank(r);
            if (spec_.psi_kind == CodeSpec::PsiKind::nonzero && std::count(w.begin(), w.end(), 0) > 0) continue;
            psi.push_back(std::move(w));
        }
        break;
    case CodeSpec::PsiKind::curve: {
        std::vector<Polynomial> polys;
        for (const auto& c : spec_.curve) polys.push_back(parse_polynomial(c, field(), nvars()));
        for (std::size_t r = 0; r < lattice_.size(); ++r) {
            Point w = lattice_.unrank(r);
            bool on = true;
            for (const auto& p : polys) on = on && evaluate(p, lattice_, w).is_zero();
            if (on) psi.push_back(std::move(w));
        }
        break;
    }
    case CodeSpec::PsiKind::points:
        for (const auto& p : spec_.psi_points)
            if (!lattice_.contains(p)) throw Error("psi point (" + format_tuple(p) + ") is not in F_q^N");
        psi = spec_.psi_points;
        break;
    }
    if (psi.empty()) throw Error("psi is empty");
    psi_ = canonical_points(std::move(psi));
    for (std::size_t i = 0; i < psi_.size(); ++i) pos_.emplace(psi_[i], i);

    for (const auto& p : spec_.phi)
        if (!pos_.count(p)) throw Error("phi point (" + format_tuple(p) + ") is not in psi");
    phi_ = canonical_points(spec_.phi);
    if (phi_.size() == psi_.size()) throw Error("phi must be a proper subset of psi (k = n - |phi| > 0)");
    std::set<Point> in_phi(phi_.begin(), phi_.end());
    for (std::size_t i = 0; i < psi_.size(); ++i) {
        if (in_phi.count(psi_[i])) {
            phi_pos_.push_back(i);
        } else {
            info_.push_back(psi_[i]);
            info_pos_.push_back(i);
        }
    }

    psi_ideal_ = vanishing_basis(psi_, lattice_, spec_.order);
    phi_ideal_ = vanishing_basis_or_unit(phi_, lattice_, spec_.order);
    if (!phi_ideal_.footprint.is_subset_of(psi_ideal_.footprint)) throw Error("internal: S_Phi is not contained in S_Psi");
    for (const auto& s : psi_ideal_.footprint)
        if (!phi_ideal_.footprint.contains(s)) message_exps_.push_back(s);
    if (rank(field(), parity_check_matrix(*this)) != phi_.size()) throw Error("internal: parity-check matrix is rank deficient");
}

std::size_t Code::position(const Point& p) const
{
    auto it = pos_.find(p);
    if (it == pos_.end()) throw Error("point (" + format_tuple(p) + ") is not in psi");
    return it->second;
}

Codeword Code::zero_word() const { return IndexedVector(IndexKind::point_subset, psi_); }

Codeword Code::word(std::vector<Element> values) const
{
    if (values.size() != n()) throw Error("word has " + std::to_string(values.size()) + " symbols, expected " + std::to_string(n()));
    for (auto v : values) field().element(v.code);
    return IndexedVector(IndexKind::point_subset, psi_, std::move(values));
}

Code build_code(const CodeSpec& spec) { return Code(spec); }

Matrix generator_matrix_primary(const Code& code, std::span<const Exponent> R)
{
    Matrix m(R.size(), code.n());
    for (std::size_t i = 0; i < R.size(); ++i) {
        if (!code.psi_ideal().footprint.contains(R[i])) throw Error("exponent " + format_tuple(R[i]) + " is not in S_Psi");
        for (std::size_t j = 0; j < code.n(); ++j) m(i, j) = code.lattice().monomial(code.psi()[j], R[i]);
    }
    return m;
}

Matrix parity_check_matrix(const Code& code)
{
    return generator_matrix_primary(code, code.phi_ideal().footprint.exponents());
}

IndexedVector syndrome(const Code& code, const Codeword& word, const Footprint& exponents)
{
    if (word.size() != code.n()) throw Error("word length does not match the code");
    return partial_dft(word, exponents, code.lattice());
}

bool is_codeword(const Code& code, const Codeword& word)
{
    return syndrome(code, word, code.phi_ideal().footprint).is_zero();
}

Codeword nonsystematic_encode(const Code& code, std::span<const Element> coeffs)
{
    if (coeffs.size() != code.k()) throw Error("expected " + std::to_string(code.k()) + " coefficients");
    const Footprint& S = code.psi_ideal().footprint;
    IndexedVector source(IndexKind::footprint, S.exponents());
    for (std::size_t i = 0; i < coeffs.size(); ++i) source.at(code.message_exponents()[i]) = code.field().element(coeffs[i].code);
    return lemma_map(source, code.psi_ideal(), code.psi(), code.lattice());
}

Codeword systematic_encode(const Code& code, std::span<const Element> info)
{
    if (info.size() != code.k()) throw Error("expected " + std::to_string(code.k()) + " information symbols");
    const Field& f = code.field();
    IndexedVector info_word(IndexKind::point_subset, code.info_points());
    for (std::size_t i = 0; i < info.size(); ++i) info_word[i] = f.element(info[i].code);

    const IdealBasis& phi = code.phi_ideal();
    const auto r = partial_dft(info_word, phi.footprint, code.lattice());
    const auto ext = extend(r, phi.basis, phi.footprint, code.lattice());

    Codeword c = code.zero_word();
    for (std::size_t i = 0; i < info.size(); ++i) c[code.info_positions()[i]] = info_word[i];
    for (std::size_t j = 0; j < code.phi().size(); ++j) c[code.phi_positions()[j]] = f.neg(idft_at(ext.table, code.phi()[j]));
    return c;
}

Matrix code_basis(const Code& code) { return nullspace(code.field(), parity_check_matrix(code)); }

int min_distance_bruteforce(const Code& code)
{
    int best = static_cast<int>(code.n()) + 1;
    bool first = true;
    for_each_codeword(code, [&](const std::vector<Element>& w) {
        if (first) { // the zero word comes first
            first = false;
            return;
        }
        const int weight = static_cast<int>(std::count_if(w.begin(), w.end(), [](Element e) { return !e.is_zero(); }));
        best = std::min(best, weight);
    });
    return best;
}

NearestResult nearest_codeword_bruteforce(const Code& code, const ReceivedWord& received)
{
    if (received.values.size() != code.n() || received.erased.size() != code.n()) throw Error("received word length does not match the code");
    int best = -1;
    std::size_t ties = 0;
    std::vector<Element> best_word;
    for_each_codeword(code, [&](const std::vector<Element>& w) {
        int d = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!received.erased[i] && w[i] != received.values[i]) ++d;
        if (best < 0 || d < best) {
            best = d;
            best_word = w;
            ties = 0;
        } else if (d == best) {
            ++ties;
            if (w < best_word) best_word = w;
        }
    });
    return {code.word(best_word), best, ties};
}

std::string format_word(const Codeword& word)
{
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + std::to_string(word[i].code);
    return s;
}

std::string format_word(const ReceivedWord& word)
{
    std::string s;
    for (std::size_t i = 0; i < word.values.size(); ++i) {
        if (i) s += ',';
        s += word.erased[i] ? std::string("?") : std::to_string(word.values[i].code);
    }
    return s;
}

namespace {

std::vector<std::string> split_symbols(std::string_view text)
{
    std::vector<std::string> out;
    std::stringstream ss{trim(text)};
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

Element parse_symbol(const Field& field, const std::string& item, std::size_t index)
{
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || v >= field.size())
        throw Error("symbol " + std::to_string(index + 1) + " ('" + item + "') is not an element code of F_" + std::to_string(field.size()));
    return Element(v);
}

} // namespace

ReceivedWord parse_received(const Code& code, std::string_view text)
{
    const auto items = split_symbols(text);
    if (items.size() != code.n())
        throw Error("received word has " + std::to_string(items.size()) + " symbols, expected " + std::to_string(code.n()));
    ReceivedWord r{code.zero_word(), std::vector<bool>(code.n(), false)};
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i] == "?") {
            r.erased[i] = true;
            continue;
        }
        r.values[i] = parse_symbol(code.field(), items[i], i);
    }
    return r;
}

std::vector<Element> parse_symbols(const Field& field, std::string_view text, std::size_t expected)
{
    const auto items = split_symbols(text);
    if (items.size() != expected)
        throw Error("expected " + std::to_string(expected) + " symbols, got " + std::to_string(items.size()));
    std::vector<Element> out;
    for (std::size_t i = 0; i < items.size(); ++i) out.push_back(parse_symbol(field, items[i], i));
    return out;
}

} // namespace affvar
