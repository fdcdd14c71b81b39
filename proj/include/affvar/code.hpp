#pragma once

#include "affvar/linalg.hpp"
#include "affvar/recurrence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affvar {

/// Parameters of the code C = {c on Psi : sum_psi c_psi psi^s = 0 for all s in S_Phi}.
struct CodeSpec {
    enum class PsiKind { all, nonzero, curve, points };

    FieldPtr field;
    int nvars = 1;
    MonomialOrder order;
    PsiKind psi_kind = PsiKind::all;
    std::vector<std::string> curve;  // zero locus, when psi_kind == curve
    std::vector<Point> psi_points;   // when psi_kind == points
    std::vector<Point> phi;
    std::optional<int> design_distance;
};

/// Parses the key = value code description; errors carry the offending line number.
CodeSpec parse_code_spec(std::string_view text);
CodeSpec load_code_spec(const std::string& path);
std::string format_code_spec(const CodeSpec& spec);

/// A word on Psi, in canonical point order.
using Codeword = IndexedVector;

/// A received word; erased positions hold 0.
struct ReceivedWord {
    Codeword values;
    std::vector<bool> erased;

    std::size_t erasure_count() const;
};

class Code {
public:
    explicit Code(CodeSpec spec);

    const CodeSpec& spec() const { return spec_; }
    const Lattice& lattice() const { return lattice_; }
    const Field& field() const { return lattice_.field(); }
    const MonomialOrder& order() const { return spec_.order; }
    int nvars() const { return lattice_.nvars(); }

    std::size_t n() const { return psi_.size(); }
    std::size_t k() const { return psi_.size() - phi_.size(); }

    /// Psi, Phi and Psi \ Phi, each sorted lexicographically by point codes.
    const std::vector<Point>& psi() const { return psi_; }
    const std::vector<Point>& phi() const { return phi_; }
    const std::vector<Point>& info_points() const { return info_; }
    /// Positions in Psi of the redundancy and information points.
    const std::vector<std::size_t>& phi_positions() const { return phi_pos_; }
    const std::vector<std::size_t>& info_positions() const { return info_pos_; }
    std::size_t position(const Point& p) const;

    const IdealBasis& psi_ideal() const { return psi_ideal_; }
    const IdealBasis& phi_ideal() const { return phi_ideal_; }
    /// S_Psi \ S_Phi in increasing monomial order; indexes nonsystematic information.
    const std::vector<Exponent>& message_exponents() const { return message_exps_; }

    std::optional<int> design_distance() const { return spec_.design_distance; }

    Codeword zero_word() const;
    Codeword word(std::vector<Element> values) const;

private:
    CodeSpec spec_;
    Lattice lattice_;
    std::vector<Point> psi_, phi_, info_;
    std::vector<std::size_t> phi_pos_, info_pos_;
    std::map<Point, std::size_t> pos_;
    IdealBasis psi_ideal_, phi_ideal_;
    std::vector<Exponent> message_exps_;
};

Code build_code(const CodeSpec& spec);

/// Rows (psi^r)_Psi for r in R; R must lie in S_Psi.
Matrix generator_matrix_primary(const Code& code, std::span<const Exponent> R);
/// Rows (psi^s)_Psi for s in S_Phi.
Matrix parity_check_matrix(const Code& code);

/// s -> sum_psi word_psi psi^s.
IndexedVector syndrome(const Code& code, const Codeword& word, const Footprint& exponents);
bool is_codeword(const Code& code, const Codeword& word);

/// Codeword from coefficients on S_Psi \ S_Phi (message_exponents order) through lemma_map.
Codeword nonsystematic_encode(const Code& code, std::span<const Element> coeffs);

/// Codeword carrying `info` on Psi \ Phi; parity on Phi from the extended syndromes of the info word.
Codeword systematic_encode(const Code& code, std::span<const Element> info);

/// Basis of the code (nullspace of the parity-check matrix), k rows.
Matrix code_basis(const Code& code);

/// Minimum weight of a nonzero codeword by enumeration; requires q^k <= 2^20.
int min_distance_bruteforce(const Code& code);

struct NearestResult {
    Codeword word;
    int distance = 0;   // counted on non-erased positions
    std::size_t ties = 0; // other codewords at the same distance
};

/// Closest codeword to `received` on its non-erased positions; requires q^k <= 2^20.
NearestResult nearest_codeword_bruteforce(const Code& code, const ReceivedWord& received);

/// "v1,v2,...,vn" with "?" for erasures.
std::string format_word(const Codeword& word);
std::string format_word(const ReceivedWord& word);
ReceivedWord parse_received(const Code& code, std::string_view text);
/// Comma-separated field codes of the given length; "?" rejected.
std::vector<Element> parse_symbols(const Field& field, std::string_view text, std::size_t expected);

} // namespace affvar
