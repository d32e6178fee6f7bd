#pragma once
// bench.hpp - benchmark harness: deterministic instance generation, three-way
// timing with a correctness gate, digit-level memory accounting, power-law
// exponent fitting, CSV and SVG emission.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "packmat/big_int.hpp"
#include "packmat/dense_matrix.hpp"
#include "packmat/generate.hpp"
#include "packmat/packing.hpp"
#include "packmat/reference.hpp"
#include "packmat/signed_multiply.hpp"

namespace packmat {

enum class Algo { packed, schoolbook, strassen };

inline std::string algo_name(Algo a) {
    switch (a) {
        case Algo::packed: return "packed";
        case Algo::schoolbook: return "schoolbook";
        case Algo::strassen: return "strassen";
    }
    throw std::logic_error("algo_name: bad algo");
}

inline std::optional<Algo> algo_from_name(std::string_view s) {
    if (s == "packed") return Algo::packed;
    if (s == "schoolbook") return Algo::schoolbook;
    if (s == "strassen") return Algo::strassen;
    return std::nullopt;
}

struct BenchRecord {
    Algo algo = Algo::packed;
    std::size_t n = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::int64_t wall_ns = 1;
    std::uint64_t paper_digits = 0;
    std::uint64_t impl_digits = 0;
    std::uint64_t radix = 0;        // packed only, else 0
    std::uint32_t m_width = 0;      // M, packed only
    std::uint32_t p_width = 0;      // P, packed only
    std::uint32_t element_digits = 0;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct BenchConfig {
    std::vector<std::size_t> sizes{4, 8, 16, 32, 64, 128, 256};
    std::size_t trials = 5;
    std::uint32_t element_digits = 3;
    std::uint64_t radix = 10;
    std::vector<Algo> algos{Algo::packed, Algo::schoolbook, Algo::strassen};
    std::uint64_t seed = 42;
    bool fixed_example = false;
    std::size_t strassen_cutoff = kDefaultStrassenCutoff;
};

inline BenchConfig default_config() { return {}; }

// The 3x3 instance injected by --fixed-example.
inline DenseMatrix<BigInt> fixed_example_a() {
    DenseMatrix<BigInt> a(3, 3);
    std::int64_t v = 1;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a(i, j) = BigInt(v++);
    return a;
}

inline DenseMatrix<BigInt> fixed_example_b() {
    DenseMatrix<BigInt> b(3, 3);
    std::int64_t v = 9;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) b(i, j) = BigInt(v--);
    return b;
}

struct CrossCheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BenchIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string matrix_dump(const DenseMatrix<BigInt>& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << m(i, j).to_string() << (j + 1 == m.cols() ? '\n' : ' ');
    }
    return out.str();
}

[[noreturn]] inline void throw_cross_check(Algo algo, std::size_t n, std::size_t trial,
                                           std::uint64_t seed_a, std::uint64_t seed_b,
                                           std::uint64_t radix, const DenseMatrix<BigInt>& A,
                                           const DenseMatrix<BigInt>& B,
                                           const DenseMatrix<BigInt>& got,
                                           const DenseMatrix<BigInt>& want) {
    std::ostringstream out;
    out << "cross-check mismatch: algo=" << algo_name(algo) << " n=" << n << " trial=" << trial
        << " seed_a=" << seed_a << " seed_b=" << seed_b << " radix=" << radix << '\n';
    for (std::size_t i = 0; i < got.rows(); ++i) {
        for (std::size_t j = 0; j < got.cols(); ++j) {
            if (!(got(i, j) == want(i, j))) {
                out << "first mismatch at (" << i << "," << j << "): got "
                    << got(i, j).to_string() << ", want " << want(i, j).to_string() << '\n';
                i = got.rows();
                break;
            }
        }
    }
    if (n <= 8) {
        out << "A:\n" << matrix_dump(A) << "B:\n" << matrix_dump(B);
        out << "got:\n" << matrix_dump(got) << "want:\n" << matrix_dump(want);
    }
    throw CrossCheckError(out.str());
}

template <typename T>
T median(std::vector<T> v) {
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.end());
    return v[v.size() / 2];
}

}  // namespace detail

// One record per (algo, size, trial). Every multiply is verified against an
// untimed schoolbook reference before its timing is accepted; the timed
// section covers the multiply call only.
inline std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg) {
    if (cfg.sizes.empty()) throw std::invalid_argument("run_benchmark: no sizes");
    std::vector<BenchRecord> records;
    const std::vector<std::size_t> sizes =
        cfg.fixed_example ? std::vector<std::size_t>{3} : cfg.sizes;
    for (const std::size_t n : sizes) {
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t base = mix64(cfg.seed ^ mix64(static_cast<std::uint64_t>(n)));
            const std::uint64_t seed_a = mix64(base ^ (2 * trial));
            const std::uint64_t seed_b = mix64(base ^ (2 * trial + 1));
            const std::uint32_t element_digits =
                cfg.fixed_example ? 1u : cfg.element_digits;
            const DenseMatrix<BigInt> A = cfg.fixed_example
                                              ? fixed_example_a()
                                              : generate_matrix<BigInt>(n, element_digits, seed_a);
            const DenseMatrix<BigInt> B = cfg.fixed_example
                                              ? fixed_example_b()
                                              : generate_matrix<BigInt>(n, element_digits, seed_b);
            const DenseMatrix<BigInt> reference = schoolbook_multiply(A, B);

            for (const Algo algo : cfg.algos) {
                DenseMatrix<BigInt> result(1, 1);
                const auto t0 = std::chrono::steady_clock::now();
                switch (algo) {
                    case Algo::packed: result = multiply_nonneg(A, B, cfg.radix); break;
                    case Algo::schoolbook: result = schoolbook_multiply(A, B); break;
                    case Algo::strassen:
                        result = strassen_multiply(A, B, cfg.strassen_cutoff);
                        break;
                }
                const auto t1 = std::chrono::steady_clock::now();
                if (!(result == reference))
                    detail::throw_cross_check(algo, n, trial, seed_a, seed_b, cfg.radix, A, B,
                                              result, reference);

                BenchRecord rec;
                rec.algo = algo;
                rec.n = n;
                rec.trial = trial;
                rec.seed = cfg.seed;
                rec.wall_ns = std::max<std::int64_t>(
                    1, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
                rec.element_digits = element_digits;
                switch (algo) {
                    case Algo::packed: {
                        const PackingParams p = compute_params(A, B, cfg.radix);
                        const DigitFootprint f = footprint_digits(A, B, p, result);
                        rec.paper_digits = f.paper_model;
                        rec.impl_digits = f.impl_model;
                        rec.radix = cfg.radix;
                        rec.m_width = p.element_width;
                        rec.p_width = p.packing_width;
                        break;
                    }
                    case Algo::schoolbook: {
                        const std::uint64_t digits = detail::matrix_digits(result);
                        rec.paper_digits = digits;
                        rec.impl_digits = digits;
                        break;
                    }
                    case Algo::strassen: {
                        StrassenStats stats;
                        strassen_multiply(A, B, cfg.strassen_cutoff, &stats);
                        rec.paper_digits = stats.peak_digits;
                        rec.impl_digits = stats.peak_digits;
                        break;
                    }
                }
                records.push_back(rec);
            }
        }
    }
    return records;
}

struct ExponentFit {
    double exponent = 0.0;
    double r_squared = 0.0;
};

// Least-squares slope of log(wall_ns) against log(n); needs three distinct sizes.
inline ExponentFit fit_exponent(const std::vector<BenchRecord>& records) {
    std::vector<std::size_t> sizes;
    for (const BenchRecord& r : records) sizes.push_back(r.n);
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    if (sizes.size() < 3)
        throw std::invalid_argument("fit_exponent: need at least 3 distinct sizes");

    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    const double count = static_cast<double>(records.size());
    for (const BenchRecord& r : records) {
        const double x = std::log(static_cast<double>(r.n));
        const double y = std::log(static_cast<double>(r.wall_ns));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double vxx = sxx - sx * sx / count;
    const double vxy = sxy - sx * sy / count;
    const double vyy = syy - sy * sy / count;
    ExponentFit fit;
    fit.exponent = vxy / vxx;
    fit.r_squared = vyy == 0.0 ? 1.0 : (vxy * vxy) / (vxx * vyy);
    return fit;
}

inline constexpr std::string_view kCsvHeader =
    "algo,n,trial,seed,wall_ns,paper_digits,impl_digits,radix,M,P,element_digits";

inline void emit_csv(const std::vector<BenchRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw BenchIoError("cannot open '" + path + "' for writing");
    out << kCsvHeader << '\n';
    for (const BenchRecord& r : records) {
        out << algo_name(r.algo) << ',' << r.n << ',' << r.trial << ',' << r.seed << ','
            << r.wall_ns << ',' << r.paper_digits << ',' << r.impl_digits << ',' << r.radix << ','
            << r.m_width << ',' << r.p_width << ',' << r.element_digits << '\n';
    }
    out.flush();
    if (!out) throw BenchIoError("write to '" + path + "' failed");
}

inline std::vector<BenchRecord> parse_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BenchIoError("cannot open '" + path + "' for reading");
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw BenchIoError("CSV header mismatch in '" + path + "'");
    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (fields.size() != 11) throw BenchIoError("CSV row field count mismatch");
        const std::optional<Algo> algo = algo_from_name(fields[0]);
        if (!algo) throw BenchIoError("CSV row has unknown algo '" + fields[0] + "'");
        BenchRecord r;
        r.algo = *algo;
        r.n = std::stoull(fields[1]);
        r.trial = std::stoull(fields[2]);
        r.seed = std::stoull(fields[3]);
        r.wall_ns = std::stoll(fields[4]);
        r.paper_digits = std::stoull(fields[5]);
        r.impl_digits = std::stoull(fields[6]);
        r.radix = std::stoull(fields[7]);
        r.m_width = static_cast<std::uint32_t>(std::stoul(fields[8]));
        r.p_width = static_cast<std::uint32_t>(std::stoul(fields[9]));
        r.element_digits = static_cast<std::uint32_t>(std::stoul(fields[10]));
        records.push_back(r);
    }
    return records;
}

enum class PlotMetric { time, memory };

// Self-contained SVG, one polyline series per algorithm (median per size),
// log-scaled y axis. Series colors follow the time/memory figures this
// harness reproduces: packed blue, strassen orange, schoolbook green.
inline void emit_plot(const std::vector<BenchRecord>& records, const std::string& path,
                      PlotMetric metric) {
    if (records.empty()) throw std::invalid_argument("emit_plot: no records");
    const double width = 720, height = 480;
    const double ml = 90, mr = 30, mt = 50, mb = 60;

    std::map<Algo, std::map<std::size_t, std::vector<double>>> by_algo;
    for (const BenchRecord& r : records) {
        const double v = metric == PlotMetric::time ? static_cast<double>(r.wall_ns)
                                                    : static_cast<double>(r.impl_digits);
        by_algo[r.algo][r.n].push_back(std::max(1.0, v));
    }

    double n_min = 1e300, n_max = 0, v_min = 1e300, v_max = 0;
    std::map<Algo, std::vector<std::pair<double, double>>> series;
    for (auto& [algo, per_n] : by_algo) {
        for (auto& [n, vals] : per_n) {
            const double med = detail::median(vals);
            series[algo].emplace_back(static_cast<double>(n), med);
            n_min = std::min(n_min, static_cast<double>(n));
            n_max = std::max(n_max, static_cast<double>(n));
            v_min = std::min(v_min, med);
            v_max = std::max(v_max, med);
        }
    }
    if (n_max == n_min) n_max = n_min + 1;
    const double ly_min = std::floor(std::log10(v_min));
    const double ly_max = std::ceil(std::log10(v_max)) + (v_min == v_max ? 1 : 0);
    auto sx = [&](double n) { return ml + (n - n_min) / (n_max - n_min) * (width - ml - mr); };
    auto sy = [&](double v) {
        return height - mb - (std::log10(v) - ly_min) / (ly_max - ly_min) * (height - mt - mb);
    };

    auto color = [](Algo a) {
        switch (a) {
            case Algo::packed: return "#1f77b4";
            case Algo::strassen: return "#ff7f0e";
            case Algo::schoolbook: return "#2ca02c";
        }
        return "#000000";
    };

    std::ofstream out(path);
    if (!out) throw BenchIoError("cannot open '" + path + "' for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <text x=\"" << width / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
        << (metric == PlotMetric::time ? "wall time vs matrix size"
                                       : "digit footprint vs matrix size")
        << "</text>\n";

    // axes and log ticks
    out << "  <g stroke=\"#444\" stroke-width=\"1\">\n";
    out << "    <line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\"/>\n";
    out << "    <line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\"/>\n";
    out << "  </g>\n";
    for (double e = ly_min; e <= ly_max + 0.5; e += 1.0) {
        const double y = sy(std::pow(10.0, e));
        out << "  <line x1=\"" << ml - 4 << "\" y1=\"" << y << "\" x2=\"" << width - mr
            << "\" y2=\"" << y << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        out << "  <text x=\"" << ml - 8 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-size=\"11\">1e" << static_cast<long>(e)
            << "</text>\n";
    }
    for (const auto& [algo, pts] : series) {
        for (const auto& [n, v] : pts) {
            out << "  <text x=\"" << sx(n) << "\" y=\"" << height - mb + 16
                << "\" text-anchor=\"middle\" font-size=\"11\">" << static_cast<long>(n)
                << "</text>\n";
        }
        break;  // x tick labels once
    }
    out << "  <text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 16
        << "\" text-anchor=\"middle\" font-size=\"13\">matrix size n</text>\n";
    out << "  <text x=\"20\" y=\"" << (mt + height - mb) / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 20 "
        << (mt + height - mb) / 2 << ")\">"
        << (metric == PlotMetric::time ? "wall time (ns, log scale)"
                                       : "retained digits (log scale)")
        << "</text>\n";

    double legend_y = mt + 8;
    for (const auto& [algo, pts] : series) {
        out << "  <polyline id=\"series-" << algo_name(algo) << "\" fill=\"none\" stroke=\""
            << color(algo) << "\" stroke-width=\"2\" points=\"";
        for (const auto& [n, v] : pts) out << sx(n) << ',' << sy(v) << ' ';
        out << "\"/>\n";
        out << "  <line x1=\"" << width - mr - 150 << "\" y1=\"" << legend_y << "\" x2=\""
            << width - mr - 120 << "\" y2=\"" << legend_y << "\" stroke=\"" << color(algo)
            << "\" stroke-width=\"2\"/>\n";
        out << "  <text x=\"" << width - mr - 112 << "\" y=\"" << legend_y + 4
            << "\" font-size=\"12\">" << algo_name(algo) << "</text>\n";
        legend_y += 18;
    }
    out << "</svg>\n";
    out.flush();
    if (!out) throw BenchIoError("write to '" + path + "' failed");
}

}  // namespace packmat
