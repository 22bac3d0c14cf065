#include "cli.hpp"

#include <deutsch/closed_forms.hpp>
#include <deutsch/error.hpp>
#include <deutsch/oracle.hpp>
#include <deutsch/output.hpp>
#include <deutsch/series.hpp>
#include <deutsch/strip.hpp>
#include <deutsch/verify.hpp>

#include "CLI11.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>

namespace deutsch::cli {

namespace {

using output::Format;
using output::IntRow;
using output::IntTable;
using output::OutputDoc;
using strip::Direction;
using strip::StripSpec;

constexpr int kDefaultTableBudget = 1000;

int table_budget() {
    return std::max<int>(kDefaultTableBudget, static_cast<int>(oracle::enumeration_budget()));
}

struct Common {
    std::string direction = "lr";
    std::string format = "text";
};

Direction direction_of(const std::string& s) {
    auto d = strip::parse_direction(s);
    if (!d) {
        throw UsageError("--direction must be lr or rl");
    }
    return *d;
}

Format format_of(const std::string& s) {
    auto f = output::parse_format(s);
    if (!f) {
        throw UsageError("--format must be text, csv or json");
    }
    return *f;
}

std::string height_label(const std::optional<int>& h) { return h ? std::to_string(*h) : "unbounded"; }

int cmd_triangle(const Common& c, int n, std::optional<int> height, std::ostream& out) {
    const Direction d = direction_of(c.direction);
    const Format f = format_of(c.format);
    if (n > table_budget()) {
        throw UsageError("--n exceeds the table budget " + std::to_string(table_budget()));
    }
    const StripSpec strip = height ? StripSpec::bounded(static_cast<unsigned>(*height)) : StripSpec::unbounded();
    const auto table = strip::dp_counts(d, static_cast<std::size_t>(n), strip);
    IntTable rows;
    for (std::size_t r = 0; r <= table.n_max(); ++r) {
        const std::size_t top = height ? std::min<std::size_t>(r, static_cast<std::size_t>(*height)) : r;
        const auto& full = table.row(r);
        rows.emplace_back(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(top) + 1);
    }
    OutputDoc doc;
    doc.add("command", std::string("triangle"));
    doc.add("direction", c.direction);
    doc.add("height", height_label(height));
    doc.add("rows", std::move(rows));
    out << output::render(doc, f);
    return kSuccess;
}

int cmd_series(const Common& c, int level, int order, std::optional<int> height, std::ostream& out) {
    const Direction d = direction_of(c.direction);
    const Format f = format_of(c.format);
    if (height && level > *height) {
        throw UsageError("--level " + std::to_string(level) + " exceeds --height " + std::to_string(*height));
    }
    if (order > table_budget()) {
        throw UsageError("--order exceeds the table budget " + std::to_string(table_budget()));
    }
    const auto lv = static_cast<std::size_t>(level);
    const auto ord = static_cast<std::size_t>(order);
    const series::ZSeries s = height ? strip::bounded(d, lv, static_cast<std::size_t>(*height), ord)
                                     : strip::stabilized(d, lv, ord);
    OutputDoc doc;
    doc.add("command", std::string("series"));
    doc.add("direction", c.direction);
    doc.add("level", std::to_string(level));
    doc.add("height", height_label(height));
    doc.add("coefficients", IntRow(s.coeffs().begin(), s.coeffs().end()));
    out << output::render(doc, f);
    return kSuccess;
}

int cmd_area(const Common& c, int n_max, std::ostream& out) {
    const Format f = format_of(c.format);
    if (n_max > table_budget()) {
        throw UsageError("--nmax exceeds the table budget " + std::to_string(table_budget()));
    }
    IntRow ns;
    IntRow sums;
    IntRow extracted;
    const auto gf = closed::area_gf();
    bool agree = true;
    for (int n = 0; n <= n_max; ++n) {
        ns.emplace_back(n);
        sums.push_back(closed::area_coeff(static_cast<std::size_t>(n)));
        extracted.push_back(series::coeff_x(gf, static_cast<std::size_t>(n)));
        agree = agree && sums.back() == extracted.back();
    }
    OutputDoc doc;
    doc.add("n", std::move(ns));
    doc.add("area", std::move(sums));
    doc.add("area_gf", std::move(extracted));
    out << output::render(doc, f);
    return agree ? kSuccess : kMismatch;
}

int cmd_verify(const Common& c, const std::string& suite, const verify::SuiteOptions& opt, std::ostream& out) {
    const Format f = format_of(c.format);
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = verify::suite_names();
    } else {
        const auto& names = verify::suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end()) {
            throw UsageError("unknown suite '" + suite + "'");
        }
        suites.push_back(suite);
    }
    OutputDoc doc;
    doc.add("command", std::string("verify"));
    bool all_passed = true;
    std::string first_failure;
    for (const auto& name : suites) {
        const auto res = verify::run_suite(name, opt);
        doc.add("suite." + name, std::string(res.passed ? "pass" : "fail"));
        for (std::size_t i = 0; i < res.details.size(); ++i) {
            doc.add("detail." + name + "." + std::to_string(i), res.details[i]);
        }
        for (std::size_t i = 0; i < res.deviations.size(); ++i) {
            doc.add("deviation." + std::to_string(i), verify::describe(res.deviations[i]));
        }
        if (!res.passed) {
            doc.add("failure." + name, res.failure);
            if (all_passed) {
                first_failure = name + ": " + res.failure;
            }
            all_passed = false;
        }
    }
    doc.add("result", std::string(all_passed ? "pass" : "fail"));
    if (!all_passed) {
        doc.add("first_failure", first_failure);
    }
    out << output::render(doc, f);
    return all_passed ? kSuccess : kMismatch;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deutsch lattice paths: counts, generating functions and verification"};
    app.name("deutsch");
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub, bool with_direction) {
        if (with_direction) {
            sub->add_option("--direction", common.direction, "lr (left to right) or rl (right to left)")
                ->check(CLI::IsMember({"lr", "rl"}));
        }
        sub->add_option("--format", common.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    };

    int n = 0;
    std::optional<int> height;
    auto* triangle = app.add_subcommand("triangle", "Path counts by length and end level");
    add_common(triangle, true);
    triangle->add_option("--n", n, "Maximum length")->required()->check(CLI::NonNegativeNumber);
    triangle->add_option("--height", height, "Barrier h (unbounded when omitted)")->check(CLI::NonNegativeNumber);

    int level = 0;
    int order = 16;
    auto* series_cmd = app.add_subcommand("series", "Generating function coefficients z^0..z^order");
    add_common(series_cmd, true);
    series_cmd->add_option("--level", level, "End level")->required()->check(CLI::NonNegativeNumber);
    series_cmd->add_option("--order", order, "Truncation order")->check(CLI::NonNegativeNumber);
    series_cmd->add_option("--height", height, "Barrier h (stabilized limit when omitted)")
        ->check(CLI::NonNegativeNumber);

    std::string suite = "all";
    std::optional<int> v_nmax;
    std::optional<int> v_order;
    std::optional<int> v_hmax;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    add_common(verify_cmd, false);
    std::vector<std::string> suite_choices = verify::suite_names();
    suite_choices.insert(suite_choices.begin(), "all");
    verify_cmd->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suite_choices));
    verify_cmd->add_option("--nmax", v_nmax, "Length bound for the suite's sweeps")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--order", v_order, "Series order for the suite's identities")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--hmax", v_hmax, "Largest barrier for strip checks")->check(CLI::NonNegativeNumber);

    int area_nmax = 10;
    auto* area_cmd = app.add_subcommand("area", "Total area of closed paths of length 2n, n = 0..nmax");
    add_common(area_cmd, false);
    area_cmd->add_option("--nmax", area_nmax, "Largest n")->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (*triangle) {
            return cmd_triangle(common, n, height, out);
        }
        if (*series_cmd) {
            return cmd_series(common, level, order, height, out);
        }
        if (*area_cmd) {
            return cmd_area(common, area_nmax, out);
        }
        if (*verify_cmd) {
            verify::SuiteOptions opt;
            auto as_size = [](const std::optional<int>& v) -> std::optional<std::size_t> {
                if (!v) {
                    return std::nullopt;
                }
                return static_cast<std::size_t>(*v);
            };
            opt.n_max = as_size(v_nmax);
            opt.order = as_size(v_order);
            opt.height_max = as_size(v_hmax);
            return cmd_verify(common, suite, opt, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}

} // namespace deutsch::cli
