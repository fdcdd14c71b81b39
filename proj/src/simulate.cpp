#include "affvar/simulate.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

namespace affvar {

std::uint64_t SimulationReport::failure_count() const
{
    std::uint64_t total = 0;
    for (const auto& [status, count] : failures) total += count;
    return total;
}

namespace {

std::vector<Element> random_info(const Code& code, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> symbol(0, code.field().size() - 1);
    std::vector<Element> info(code.k());
    for (auto& x : info) x = Element(symbol(rng));
    return info;
}

Element random_nonzero(const Field& f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> pick(1, f.size() - 1);
    return Element(pick(rng));
}

// Places exactly u erasures and t errors at distinct random positions.
ReceivedWord plant(const Code& code, const Codeword& c, std::size_t u, std::size_t t, std::mt19937_64& rng)
{
    std::vector<std::size_t> order(code.n());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    ReceivedWord r{c, std::vector<bool>(code.n(), false)};
    for (std::size_t i = 0; i < u; ++i) {
        r.erased[order[i]] = true;
        r.values[order[i]] = Element{};
    }
    for (std::size_t i = u; i < u + t; ++i) r.values[order[i]] = code.field().add(c[order[i]], random_nonzero(code.field(), rng));
    return r;
}

std::size_t distance(const ReceivedWord& r, const Codeword& c)
{
    std::size_t d = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!r.erased[i] && r.values[i] != c[i]) ++d;
    return d;
}

} // namespace

SimulationReport simulate(const Code& code, const SimulationOptions& options)
{
    if (options.erasure_prob < 0 || options.erasure_prob > 1 || options.error_prob < 0 || options.error_prob > 1)
        throw Error("probabilities must lie in [0, 1]");
    if (options.trials < 1) throw Error("at least one trial is required");
    if (options.exact_erasures.value_or(0) + options.exact_errors.value_or(0) > code.n())
        throw Error("more forced erasures and errors than positions");

    SimulationReport report;
    report.options = options;
    for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
        std::mt19937_64 rng(options.seed + trial);
        const auto c = systematic_encode(code, random_info(code, rng));
        ReceivedWord r;
        std::size_t u = 0, t = 0;
        if (options.exact_erasures || options.exact_errors) {
            u = options.exact_erasures.value_or(0);
            t = options.exact_errors.value_or(0);
            r = plant(code, c, u, t, rng);
        } else {
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            r = {c, std::vector<bool>(code.n(), false)};
            for (std::size_t i = 0; i < code.n(); ++i) {
                const double x = coin(rng);
                if (x < options.erasure_prob) {
                    r.erased[i] = true;
                    r.values[i] = Element{};
                    ++u;
                } else if (coin(rng) < options.error_prob) {
                    r.values[i] = code.field().add(c[i], random_nonzero(code.field(), rng));
                    ++t;
                }
            }
        }

        DecodeReport rep;
        {
            CountingScope scope(report.ops);
            rep = decode(code, r);
        }
        std::string status = to_string(rep.status);
        if (rep.ok()) {
            if (!is_codeword(code, rep.corrected)) {
                ++report.undetected;
                status = "undetected";
            } else {
                ++report.successes;
                if (!(rep.corrected == c)) {
                    ++report.miscorrections;
                    status = "miscorrection";
                    if (distance(r, rep.corrected) > distance(r, c)) ++report.unjustified_miscorrections;
                }
            }
        } else {
            ++report.failures[status];
        }
        if (options.keep_rows) report.rows.push_back({trial, u, t, status});
    }
    return report;
}

std::string format_simulation(const SimulationReport& report)
{
    const auto& o = report.options;
    std::ostringstream os;
    os << "trials: " << o.trials << '\n';
    os << "seed: " << o.seed << '\n';
    os << "rng: mt19937_64, trial i seeded with seed + i\n";
    if (o.exact_erasures || o.exact_errors) {
        os << "exact_erasures: " << o.exact_erasures.value_or(0) << '\n';
        os << "exact_errors: " << o.exact_errors.value_or(0) << '\n';
    } else {
        os << "erasure_prob: " << o.erasure_prob << '\n';
        os << "error_prob: " << o.error_prob << '\n';
    }
    os << "successes: " << report.successes << '\n';
    os << "miscorrections: " << report.miscorrections << '\n';
    os << "unjustified_miscorrections: " << report.unjustified_miscorrections << '\n';
    os << "undetected: " << report.undetected << '\n';
    os << "failures: " << report.failure_count() << '\n';
    for (const auto& [status, count] : report.failures) os << "  " << status << ": " << count << '\n';
    const double n = static_cast<double>(o.trials);
    os << std::fixed << std::setprecision(1);
    os << "avg_ops: add " << report.ops.adds / n << " sub " << report.ops.subs / n << " mul " << report.ops.muls / n << " div "
       << report.ops.divs / n << " total " << report.ops.total() / n << '\n';
    return os.str();
}

std::string simulation_csv(const SimulationReport& report)
{
    std::ostringstream os;
    os << "trial,u,t,status\n";
    for (const auto& r : report.rows) os << r.trial << ',' << r.u << ',' << r.t << ',' << r.status << '\n';
    return os.str();
}

CodeSpec rs_family_spec(std::size_t n)
{
    const std::size_t q = n + 1;
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t m = 0;
    for (std::size_t v = q; v > 1; v /= p) {
        if (v % p != 0) throw Error("n + 1 = " + std::to_string(q) + " is not a prime power");
        ++m;
    }
    CodeSpec spec;
    spec.field = make_field(p, m);
    spec.nvars = 1;
    spec.order = MonomialOrder::graded_lex(1);
    spec.psi_kind = CodeSpec::PsiKind::nonzero;
    for (std::size_t i = 1; i <= n / 3; ++i) spec.phi.push_back({static_cast<int>(i)});
    return spec;
}

BenchRow bench_code(const Code& code, std::size_t u, std::size_t t, std::uint64_t trials, std::uint64_t seed)
{
    BenchRow row;
    row.n = code.n();
    row.q = code.field().size();
    row.nvars = code.nvars();
    row.d = std::max(code.psi_ideal().basis.size(), code.phi_ideal().basis.size());
    row.u = u;
    row.t = t;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + trial);
        const auto c = systematic_encode(code, random_info(code, rng));
        const auto rep = decode(code, plant(code, c, u, t, rng));
        if (!rep.ok() || !(rep.corrected == c)) throw Error("bench: decoding failed inside the correction radius");
        for (int s = 0; s < 7; ++s) row.measured[s] += static_cast<double>(rep.step_ops[s].total());
    }
    for (auto& m : row.measured) m /= static_cast<double>(trials);
    row.total = std::accumulate(row.measured.begin(), row.measured.end(), 0.0);

    const double n = static_cast<double>(row.n), N = row.nvars, d = static_cast<double>(row.d);
    const double qN = std::pow(static_cast<double>(row.q), N);
    row.bound = {n * N * qN, d * n * n, n * n * N, d * n * n, n * qN, n * N * qN, n};
    return row;
}

BenchReport bench_rs(const std::vector<std::size_t>& sizes, std::uint64_t trials, std::uint64_t seed)
{
    BenchReport report;
    std::vector<double> xs, ys;
    for (auto n : sizes) {
        const Code code(rs_family_spec(n));
        const std::size_t r = code.n() - code.k();
        const std::size_t u = r / 3, t = (r - u) / 2;
        auto row = bench_code(code, u, t, trials, seed);
        for (int s = 0; s < 7; ++s) report.max_ratio[s] = std::max(report.max_ratio[s], row.measured[s] / row.bound[s]);
        xs.push_back(static_cast<double>(row.n));
        ys.push_back(row.total);
        report.rows.push_back(std::move(row));
    }
    report.slope = loglog_slope(xs, ys);
    return report;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) throw Error("slope fit needs at least two points");
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0 || y[i] <= 0) throw Error("slope fit needs positive values");
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    const double k = static_cast<double>(x.size());
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / k;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / k;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    return sxy / sxx;
}

std::string format_bench(const BenchReport& report)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(1);
    for (const auto& row : report.rows) {
        os << "n=" << row.n << " q=" << row.q << " N=" << row.nvars << " d=" << row.d << " u=" << row.u << " t=" << row.t
           << " total=" << row.total << '\n';
        for (int s = 0; s < 7; ++s)
            os << "  step " << s + 1 << ": ops " << row.measured[s] << " bound " << row.bound[s] << " ratio " << std::setprecision(3)
               << row.measured[s] / row.bound[s] << std::setprecision(1) << '\n';
    }
    os << std::setprecision(3);
    os << "max ratio per step:";
    for (double r : report.max_ratio) os << ' ' << r;
    os << '\n' << "slope: " << report.slope << '\n';
    return os.str();
}

} // namespace affvar
