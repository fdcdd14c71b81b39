#pragma once

#include "affvar/bms.hpp"

#include <array>

namespace affvar {

enum class DecodeStatus { success, footprint_escape, inconsistent_extension, residual_syndrome, support_mismatch };

std::string to_string(DecodeStatus status);

struct DecodeReport {
    DecodeStatus status = DecodeStatus::success;
    std::string detail;
    std::vector<Point> erasures; // Phi_1
    std::vector<Point> errors;   // Phi_2
    std::vector<Point> located;  // Phi_1 and Phi_2
    IdealBasis locator;
    Codeword error;
    Codeword corrected;
    std::size_t candidates_tried = 0;

    /// Field operations per step of the algorithm (index 0 is Step 1).
    std::array<OpCounter, 7> step_ops{};
    /// Operations spent on the final codeword check, kept out of the step counts.
    OpCounter verification_ops;

    bool ok() const { return status == DecodeStatus::success; }
    std::size_t u() const { return erasures.size(); }
    std::size_t t() const { return errors.size(); }
};

/// Erasure-and-error decoding: syndromes on S_Phi, locator ideal of erasures and errors,
/// recurrence extension of the syndromes and error values by the inverse transform.
///
/// Never returns a non-codeword as success; every other outcome carries a failure status.
DecodeReport decode(const Code& code, const ReceivedWord& received);

/// Erasure-only decoding of the zero-padded info word with the redundancy positions as erasures
/// and G_Phi as locator; reproduces systematic_encode.
Codeword decode_as_systematic_check(const Code& code, std::span<const Element> info);

/// Structured text: status, u, t, located points, error vector, corrected word.
std::string format_report(const DecodeReport& report);

} // namespace affvar
