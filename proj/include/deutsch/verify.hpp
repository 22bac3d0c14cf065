#pragma once

// Named verification suites run by `deutsch verify`.

#include <deutsch/bigint.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace deutsch::verify {

struct SuiteOptions {
    std::optional<std::size_t> n_max;
    std::optional<std::size_t> order;
    std::optional<std::size_t> height_max;
};

struct Deviation {
    char family;  // 'f' or 'g'
    std::size_t level;
    std::size_t power;
    BigInt printed;
    BigInt computed;

    friend bool operator==(const Deviation&, const Deviation&) = default;
};

std::string describe(const Deviation& d);

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string failure;
    std::vector<std::string> details;
    std::vector<Deviation> deviations;

    /// Records the first failure only.
    void fail(std::string why);
};

/// One printed series: coefficients at z^first, z^(first+2), ...
struct PrintedSeries {
    char family;
    std::size_t level;
    std::size_t first_power;
    std::vector<long> coeffs;
};

/// The f_0..f_6 and g_0..g_6 lists as printed in the source tables.
const std::vector<PrintedSeries>& printed_lists();

/// The known misprints: finite-barrier (h = 7) values in the f lists and
/// the shared g_0 list, and the [z^11] g_3 typo.
const std::vector<Deviation>& documented_deviations();

/// Compares every printed coefficient against the stabilized series.
std::vector<Deviation> compare_printed_lists();

const std::vector<std::string>& suite_names();

/// Throws UsageError for an unknown suite name.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

} // namespace deutsch::verify
