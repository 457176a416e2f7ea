#pragma once

#include <string>

namespace ado {

/// One bench invocation: CSV rows (one per cell and seed) plus a JSON
/// summary carrying fitted build-time exponents. Non-timing columns are
/// deterministic given the scenario; `ok` reports stretch cleanliness.
struct BenchOutput {
    std::string csv;
    std::string json_summary;
    bool ok = true;
};

BenchOutput bench_run(const std::string& scenario_text);
BenchOutput bench_run_file(const std::string& scenario_path);

}  // namespace ado
