// packmat CLI: `bench` reproduces the three-algorithm timing/memory
// comparison; `multiply` multiplies two matrix files exactly.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "packmat/packmat.hpp"

namespace {

std::uint64_t radix_value(const std::string& name) {
    return name == "pow2" ? (std::uint64_t{1} << 32) : 10;
}

void report_fits(const std::vector<packmat::BenchRecord>& records) {
    for (const packmat::Algo algo :
         {packmat::Algo::packed, packmat::Algo::schoolbook, packmat::Algo::strassen}) {
        std::vector<packmat::BenchRecord> subset;
        for (const auto& r : records)
            if (r.algo == algo) subset.push_back(r);
        if (subset.empty()) continue;
        try {
            const packmat::ExponentFit fit = packmat::fit_exponent(subset);
            std::cout << "fitted time exponent " << packmat::algo_name(algo) << ": " << std::fixed
                      << std::setprecision(3) << fit.exponent << " (r^2=" << fit.r_squared
                      << ")\n";
        } catch (const std::invalid_argument&) {
            std::cout << "fitted time exponent " << packmat::algo_name(algo)
                      << ": skipped (need 3 distinct sizes)\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matrix multiplication via digit-packed big integers"};
    app.require_subcommand(1);

    auto* bench = app.add_subcommand("bench", "run the benchmark grid with a correctness gate");
    std::vector<std::string> algo_names{"packed", "schoolbook", "strassen"};
    std::vector<std::size_t> sizes{4, 8, 16, 32, 64, 128, 256};
    std::size_t trials = 5;
    std::uint32_t element_digits = 3;
    std::string radix_choice = "both";
    std::uint64_t seed = 42;
    std::size_t cutoff = packmat::kDefaultStrassenCutoff;
    std::string csv_path, plot_time_path, plot_mem_path;
    bool fixed_example = false;
    bench->add_option("--algos", algo_names, "algorithms to time")
        ->delimiter(',')
        ->check(CLI::IsMember({"packed", "schoolbook", "strassen"}));
    bench->add_option("--sizes", sizes, "matrix sizes")->delimiter(',');
    bench->add_option("--trials", trials, "trials per size");
    bench->add_option("--element-digits", element_digits, "decimal digits per generated element");
    bench->add_option("--radix", radix_choice, "packing radix for the packed algorithm")
        ->check(CLI::IsMember({"10", "pow2", "both"}));
    bench->add_option("--seed", seed, "benchmark seed");
    bench->add_option("--strassen-cutoff", cutoff, "strassen recursion cutoff");
    bench->add_option("--csv", csv_path, "write records as CSV");
    bench->add_option("--plot-time", plot_time_path, "write wall-time SVG plot");
    bench->add_option("--plot-mem", plot_mem_path, "write digit-footprint SVG plot");
    bench->add_flag("--fixed-example", fixed_example, "run the documented 3x3 instance");

    auto* multiply = app.add_subcommand("multiply", "multiply two matrix files exactly");
    std::string kind_name_arg, multiply_radix = "10", path_a, path_b, out_path;
    multiply->add_option("--kind", kind_name_arg, "element kind")
        ->required()
        ->check(CLI::IsMember({"int", "decimal", "complex"}));
    multiply->add_option("--radix", multiply_radix, "packing radix")
        ->check(CLI::IsMember({"10", "pow2"}));
    multiply->add_option("a", path_a, "left operand file")->required();
    multiply->add_option("b", path_b, "right operand file")->required();
    multiply->add_option("-o,--output", out_path, "product file")->required();

    CLI11_PARSE(app, argc, argv);

    if (*multiply) {
        return packmat::multiply_file(path_a, path_b, *packmat::kind_from_name(kind_name_arg),
                                      radix_value(multiply_radix), out_path, std::cerr);
    }

    packmat::BenchConfig cfg;
    cfg.sizes = sizes;
    cfg.trials = trials;
    cfg.element_digits = element_digits;
    cfg.seed = seed;
    cfg.fixed_example = fixed_example;
    cfg.strassen_cutoff = cutoff;
    cfg.algos.clear();
    for (const std::string& name : algo_names) cfg.algos.push_back(*packmat::algo_from_name(name));

    std::vector<packmat::BenchRecord> records;
    try {
        if (radix_choice == "both") {
            cfg.radix = 10;
            records = packmat::run_benchmark(cfg);
            const bool has_packed =
                std::find(cfg.algos.begin(), cfg.algos.end(), packmat::Algo::packed) !=
                cfg.algos.end();
            if (has_packed) {
                packmat::BenchConfig pow2_cfg = cfg;
                pow2_cfg.radix = std::uint64_t{1} << 32;
                pow2_cfg.algos = {packmat::Algo::packed};
                const auto pow2_records = packmat::run_benchmark(pow2_cfg);
                records.insert(records.end(), pow2_records.begin(), pow2_records.end());
            }
        } else {
            cfg.radix = radix_value(radix_choice);
            records = packmat::run_benchmark(cfg);
        }
    } catch (const packmat::CrossCheckError& e) {
        std::cerr << e.what();
        return 1;
    }

    try {
        if (!csv_path.empty()) packmat::emit_csv(records, csv_path);
        if (!plot_time_path.empty())
            packmat::emit_plot(records, plot_time_path, packmat::PlotMetric::time);
        if (!plot_mem_path.empty())
            packmat::emit_plot(records, plot_mem_path, packmat::PlotMetric::memory);
    } catch (const packmat::BenchIoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }

    std::cout << records.size() << " records";
    if (!csv_path.empty()) std::cout << " -> " << csv_path;
    std::cout << '\n';
    report_fits(records);
    return 0;
}
