#include "affvar/decoder.hpp"

#include <set>
#include <sstream>

namespace affvar {

std::string to_string(DecodeStatus status)
{
    switch (status) {
    case DecodeStatus::success: return "success";
    case DecodeStatus::footprint_escape: return "footprint_escape";
    case DecodeStatus::inconsistent_extension: return "inconsistent_extension";
    case DecodeStatus::residual_syndrome: return "residual_syndrome";
    case DecodeStatus::support_mismatch: return "support_mismatch";
    }
    return "?";
}

namespace {

struct Attempt {
    DecodeStatus status = DecodeStatus::success;
    std::string detail;
    Codeword error;
    Codeword corrected;
};

// Steps 5 to 7 for a fixed locator ideal.
Attempt finish(const Code& code, const Codeword& received, const IndexedVector& syn, const IdealBasis& locator,
               const std::set<Point>& located, DecodeReport& report)
{
    const Footprint& sl = locator.footprint;
    const Footprint& sphi = code.phi_ideal().footprint;
    Attempt out;

    GridVector table(code.lattice(), IndexKind::exponents);
    {
        CountingScope scope(report.step_ops[4]);
        if (!sl.is_subset_of(sphi)) {
            out.status = DecodeStatus::footprint_escape;
            out.detail = "locator footprint has " + std::to_string(sl.size()) + " exponents, not all in S_Phi";
            return out;
        }
        std::vector<Element> vals;
        for (const auto& s : sl) vals.push_back(syn.at(s));
        table = extend(IndexedVector(IndexKind::footprint, sl.exponents(), std::move(vals)), locator.basis, sl, code.lattice()).table;
        for (std::size_t i = 0; i < sphi.size(); ++i) {
            if (table.at(sphi[i]) != syn[i]) {
                out.status = DecodeStatus::inconsistent_extension;
                out.detail = "extended syndrome disagrees at exponent " + format_tuple(sphi[i]);
                return out;
            }
        }
    }

    out.error = code.zero_word();
    {
        CountingScope scope(report.step_ops[5]);
        for (std::size_t j = 0; j < code.n(); ++j) out.error[j] = idft_at(table, code.psi()[j]);
    }
    for (std::size_t j = 0; j < code.n(); ++j) {
        if (!out.error[j].is_zero() && !located.count(code.psi()[j])) {
            out.status = DecodeStatus::support_mismatch;
            out.detail = "nonzero error value at unlocated point (" + format_tuple(code.psi()[j]) + ")";
            return out;
        }
    }

    out.corrected = code.zero_word();
    {
        CountingScope scope(report.step_ops[6]);
        const Field& f = code.field();
        for (std::size_t j = 0; j < code.n(); ++j) out.corrected[j] = f.sub(received[j], out.error[j]);
    }
    {
        CountingScope scope(report.verification_ops);
        if (!is_codeword(code, out.corrected)) {
            out.status = DecodeStatus::residual_syndrome;
            out.detail = "corrected word has a nonzero syndrome";
        }
    }
    return out;
}

} // namespace

DecodeReport decode(const Code& code, const ReceivedWord& received)
{
    if (received.values.size() != code.n() || received.erased.size() != code.n())
        throw Error("received word length does not match the code");
    DecodeReport report;
    Codeword r = received.values;
    for (std::size_t j = 0; j < code.n(); ++j) {
        if (received.erased[j]) {
            r[j] = Element{};
            report.erasures.push_back(code.psi()[j]);
        }
    }

    GridVector power_sums(code.lattice(), IndexKind::exponents);
    {
        CountingScope scope(report.step_ops[0]);
        power_sums = erasure_power_sums(code.lattice(), report.erasures);
    }
    IdealBasis erasure_ideal;
    {
        CountingScope scope(report.step_ops[1]);
        erasure_ideal = erasure_locator_basis(report.erasures, code.lattice(), code.order());
        const auto check = check_recurrence(power_sums, erasure_ideal.basis);
        if (!check.ok) throw Error("internal: erasure power sums violate the erasure locator at " + format_tuple(check.a));
    }
    IndexedVector syn;
    {
        CountingScope scope(report.step_ops[2]);
        syn = syndrome(code, r, code.phi_ideal().footprint);
    }
    std::vector<LocatorCandidate> candidates;
    {
        CountingScope scope(report.step_ops[3]);
        candidates = bms_run(code, syn, erasure_ideal, report.erasures);
    }

    const LocatorCandidate* best = nullptr;
    Attempt best_attempt, first_failure;
    bool have_failure = false;
    for (const auto& cand : candidates) {
        ++report.candidates_tried;
        Attempt a;
        if (cand.oversized) {
            a.status = DecodeStatus::footprint_escape;
            a.detail = std::to_string(cand.located.size()) + " located points exceed |S_Phi| = " +
                       std::to_string(code.phi_ideal().footprint.size());
        } else {
            a = finish(code, r, syn, cand.ideal, {cand.located.begin(), cand.located.end()}, report);
        }
        if (a.status == DecodeStatus::success) {
            if (!best || cand.errors.size() < best->errors.size()) {
                best = &cand;
                best_attempt = std::move(a);
            }
        } else if (!have_failure) {
            have_failure = true;
            first_failure = std::move(a);
        }
    }

    if (!best) {
        report.status = first_failure.status;
        report.detail = first_failure.detail;
        report.located = candidates.front().located;
        report.errors = candidates.front().errors;
        report.locator = candidates.front().ideal;
        return report;
    }
    report.status = DecodeStatus::success;
    report.errors = best->errors;
    report.located = best->located;
    report.locator = best->ideal;
    report.error = std::move(best_attempt.error);
    report.corrected = std::move(best_attempt.corrected);
    return report;
}

Codeword decode_as_systematic_check(const Code& code, std::span<const Element> info)
{
    if (info.size() != code.k()) throw Error("expected " + std::to_string(code.k()) + " information symbols");
    Codeword r = code.zero_word();
    for (std::size_t i = 0; i < info.size(); ++i) r[code.info_positions()[i]] = code.field().element(info[i].code);
    const auto syn = syndrome(code, r, code.phi_ideal().footprint);
    DecodeReport scratch;
    const auto a = finish(code, r, syn, code.phi_ideal(), {code.phi().begin(), code.phi().end()}, scratch);
    if (a.status != DecodeStatus::success) throw Error("internal: erasure-only decoding failed: " + a.detail);
    return a.corrected;
}

std::string format_report(const DecodeReport& report)
{
    auto points = [](const std::vector<Point>& pts) {
        std::string s;
        for (const auto& p : pts) s += (s.empty() ? "(" : " (") + format_tuple(p) + ")";
        return s.empty() ? std::string("-") : s;
    };
    std::ostringstream os;
    os << "status: " << to_string(report.status) << '\n';
    if (!report.detail.empty()) os << "detail: " << report.detail << '\n';
    os << "u: " << report.u() << '\n' << "t: " << report.t() << '\n';
    os << "erasures: " << points(report.erasures) << '\n';
    os << "errors: " << points(report.errors) << '\n';
    os << "located: " << points(report.located) << '\n';
    if (report.ok()) {
        os << "error: " << format_word(report.error) << '\n';
        os << "corrected: " << format_word(report.corrected) << '\n';
    }
    return os.str();
}

} // namespace affvar
