// Command-line front end: code info, encoding, decoding, channel simulation and op-count bench.

#include "affvar/simulate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace affvar;

namespace {

constexpr int kDecodeFailure = 2;
constexpr int kUsage = 64;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

std::string points_line(const std::vector<Point>& pts)
{
    std::string s;
    for (const auto& p : pts) s += (s.empty() ? "(" : " (") + format_tuple(p) + ")";
    return s;
}

int cmd_info(const std::string& spec_path, bool dmin)
{
    const Code code(load_code_spec(spec_path));
    std::cout << "n=" << code.n() << " k=" << code.k();
    if (dmin) std::cout << " d=" << min_distance_bruteforce(code);
    std::cout << '\n';
    std::cout << "field: F_" << code.field().size() << " (" << code.field().spec() << ")\n";
    std::cout << "N: " << code.nvars() << '\n';
    std::cout << "order: " << code.order().spec() << '\n';
    if (code.design_distance()) std::cout << "design_distance: " << *code.design_distance() << '\n';
    std::cout << "|S_Phi|: " << code.phi_ideal().footprint.size() << '\n';
    std::cout << "psi: " << points_line(code.psi()) << '\n';
    std::cout << "phi: " << points_line(code.phi()) << '\n';
    std::cout << "G_Psi:\n" << format_basis(code.psi_ideal().basis);
    std::cout << "G_Phi:\n" << format_basis(code.phi_ideal().basis);
    return 0;
}

int cmd_encode(const std::string& spec_path, const std::string& info_path, bool nonsystematic, const std::string& out)
{
    const Code code(load_code_spec(spec_path));
    const auto info = parse_symbols(code.field(), read_file(info_path), code.k());
    const auto c = nonsystematic ? nonsystematic_encode(code, info) : systematic_encode(code, info);
    write_output(out, format_word(c) + '\n');
    return 0;
}

int cmd_decode(const std::string& spec_path, const std::string& received_path, const std::string& out)
{
    const Code code(load_code_spec(spec_path));
    const auto r = parse_received(code, read_file(received_path));
    const auto report = decode(code, r);
    std::cout << format_report(report);
    if (!report.ok()) return kDecodeFailure;
    if (!out.empty()) write_output(out, format_word(report.corrected) + '\n');
    return 0;
}

int cmd_simulate(const std::string& spec_path, SimulationOptions options, const std::string& csv)
{
    const Code code(load_code_spec(spec_path));
    options.keep_rows = !csv.empty();
    const auto report = simulate(code, options);
    std::cout << format_simulation(report);
    if (!csv.empty()) write_output(csv, simulation_csv(report));
    return report.undetected == 0 ? 0 : kDecodeFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Erasure-and-error decoding and systematic encoding of affine variety codes"};
    app.require_subcommand(1);

    std::string spec_path, in_path, out_path, csv_path;
    bool dmin = false, systematic = false, nonsystematic = false;

    auto* info = app.add_subcommand("info", "Print code parameters and Groebner bases");
    info->add_option("spec", spec_path, "Code spec file")->required();
    info->add_flag("--dmin", dmin, "Also compute the minimum distance by enumeration (q^k <= 2^20)");

    auto* encode = app.add_subcommand("encode", "Encode an information word");
    encode->add_option("spec", spec_path, "Code spec file")->required();
    encode->add_option("info", in_path, "Comma-separated information symbols")->required();
    auto* sys_flag = encode->add_flag("--systematic", systematic, "Information on Psi \\ Phi (default)");
    encode->add_flag("--nonsystematic", nonsystematic, "Coefficients on S_Psi \\ S_Phi")->excludes(sys_flag);
    encode->add_option("-o,--output", out_path, "Codeword file (default stdout)");

    auto* dec = app.add_subcommand("decode", "Decode a received word; '?' marks an erasure");
    dec->add_option("spec", spec_path, "Code spec file")->required();
    dec->add_option("received", in_path, "Received word file")->required();
    dec->add_option("-o,--output", out_path, "Write the corrected word here on success");

    SimulationOptions sim;
    std::size_t exact_errors = 0, exact_erasures = 0;
    auto* simc = app.add_subcommand("simulate", "Run a q-ary symmetric channel with erasures");
    simc->add_option("spec", spec_path, "Code spec file")->required();
    simc->add_option("--erasure-prob", sim.erasure_prob, "Per-symbol erasure probability")->check(CLI::Range(0.0, 1.0));
    simc->add_option("--error-prob", sim.error_prob, "Per-symbol substitution probability")->check(CLI::Range(0.0, 1.0));
    simc->add_option("--trials", sim.trials, "Number of trials")->check(CLI::PositiveNumber);
    simc->add_option("--seed", sim.seed, "Base seed; trial i uses seed + i");
    auto* exact_err = simc->add_option("--exact-errors", exact_errors, "Place exactly K errors per trial");
    auto* exact_era = simc->add_option("--exact-erasures", exact_erasures, "Place exactly K erasures per trial");
    simc->add_option("--csv", csv_path, "Per-trial CSV report (trial,u,t,status)");

    std::string family;
    std::vector<std::size_t> sizes{6, 12, 24, 48};
    std::uint64_t bench_trials = 20, bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "Per-step field-operation counts over a code family");
    bench->add_option("family", family, "Code family (rs)")->required()->check(CLI::IsMember({"rs"}));
    bench->add_option("--sizes", sizes, "Code lengths n, each with n + 1 a prime power")->delimiter(',');
    bench->add_option("--trials", bench_trials, "Decodes per size")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_seed, "Base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*info) return cmd_info(spec_path, dmin);
        if (*encode) return cmd_encode(spec_path, in_path, nonsystematic, out_path);
        if (*dec) return cmd_decode(spec_path, in_path, out_path);
        if (*simc) {
            if (*exact_err) sim.exact_errors = exact_errors;
            if (*exact_era) sim.exact_erasures = exact_erasures;
            return cmd_simulate(spec_path, sim, csv_path);
        }
        if (*bench) {
            std::cout << format_bench(bench_rs(sizes, bench_trials, bench_seed));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
