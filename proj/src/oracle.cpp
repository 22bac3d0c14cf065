#include <deutsch/oracle.hpp>

#include <deutsch/closed_forms.hpp>
#include <deutsch/error.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

namespace deutsch::oracle {

namespace {

constexpr std::size_t kDefaultBudget = 16;
constexpr std::size_t kDefaultReversalLimit = 14;

std::optional<std::size_t> budget_from_env() {
    const char* raw = std::getenv("DEUTSCH_BUDGET");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    char* end = nullptr;
    const unsigned long v = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0') {
        throw UsageError(std::string("DEUTSCH_BUDGET is not a nonnegative integer: ") + raw);
    }
    return static_cast<std::size_t>(v);
}

void check_budget(std::size_t n, std::size_t limit, const char* what) {
    if (n > limit) {
        throw UsageError(std::string(what) + ": length " + std::to_string(n) + " over enumeration budget " +
                         std::to_string(limit) + " (raise with DEUTSCH_BUDGET)");
    }
}

// Depth-first walker. `visit` sees the full ordinate stack of every leaf.
// Without a barrier, right-to-left prefixes that can no longer end at a
// level <= end_cap are cut.
template <typename Visit>
void walk(Direction direction, std::size_t n, StripSpec strip, int end_cap, std::vector<int>& stack,
          Visit& visit) {
    const std::size_t depth = stack.size() - 1;
    if (depth == n) {
        visit(stack);
        return;
    }
    const int c = stack.back();
    const int remaining_after = static_cast<int>(n - depth - 1);
    const int cap = strip.is_bounded() ? static_cast<int>(strip.height()) : -1;
    auto descend = [&](int next) {
        stack.push_back(next);
        walk(direction, n, strip, end_cap, stack, visit);
        stack.pop_back();
    };
    if (direction == Direction::LeftToRight) {
        if (cap < 0 || c + 1 <= cap) {
            descend(c + 1);
        }
        for (int j = 1; c - j >= 0; j += 2) {
            descend(c - j);
        }
    } else {
        const int top = cap >= 0 ? cap : end_cap + remaining_after;
        for (int j = 1; c + j <= top; j += 2) {
            descend(c + j);
        }
        if (c >= 1) {
            descend(c - 1);
        }
    }
}

} // namespace

long LatticePath::area() const {
    long s = 0;
    for (int c : ordinates) {
        s += c;
    }
    return s;
}

bool is_legal_step(Direction direction, int from, int to) {
    const int d = to - from;
    if (direction == Direction::LeftToRight) {
        return d == 1 || (d < 0 && (-d) % 2 == 1);
    }
    return d == -1 || (d > 0 && d % 2 == 1);
}

bool is_valid(const LatticePath& p, Direction direction, StripSpec strip) {
    if (p.ordinates.empty() || p.ordinates.front() != 0) {
        return false;
    }
    for (std::size_t j = 0; j < p.ordinates.size(); ++j) {
        const int c = p.ordinates[j];
        if (c < 0 || (strip.is_bounded() && c > static_cast<int>(strip.height()))) {
            return false;
        }
        if (j > 0 && !is_legal_step(direction, p.ordinates[j - 1], c)) {
            return false;
        }
    }
    return true;
}

LatticePath reversed(const LatticePath& p) {
    return LatticePath{std::vector<int>(p.ordinates.rbegin(), p.ordinates.rend())};
}

std::size_t enumeration_budget() { return budget_from_env().value_or(kDefaultBudget); }

void for_each_path(Direction direction, std::size_t n, StripSpec strip,
                   const std::function<void(const std::vector<int>&)>& visit) {
    check_budget(n, enumeration_budget(), "for_each_path");
    std::vector<int> stack{0};
    stack.reserve(n + 1);
    auto fn = [&](const std::vector<int>& s) { visit(s); };
    walk(direction, n, strip, static_cast<int>(n), stack, fn);
}

OracleReport enumerate(Direction direction, std::size_t n, StripSpec strip) {
    check_budget(n, enumeration_budget(), "enumerate");
    std::vector<std::uint64_t> counts;
    std::uint64_t closed = 0;
    std::uint64_t area = 0;
    std::vector<int> stack{0};
    stack.reserve(n + 1);
    auto tally = [&](const std::vector<int>& s) {
        const auto end = static_cast<std::size_t>(s.back());
        if (end >= counts.size()) {
            counts.resize(end + 1);
        }
        ++counts[end];
        if (end == 0) {
            ++closed;
            for (int c : s) {
                area += static_cast<std::uint64_t>(c);
            }
        }
    };
    walk(direction, n, strip, static_cast<int>(n), stack, tally);

    OracleReport rep;
    rep.n = n;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] != 0) {
            rep.by_level[k] = BigInt(static_cast<unsigned long>(counts[k]));
        }
    }
    rep.closed_count = BigInt(static_cast<unsigned long>(closed));
    rep.total_area = BigInt(static_cast<unsigned long>(area));
    return rep;
}

std::vector<LatticePath> closed_paths(Direction direction, std::size_t n, StripSpec strip) {
    check_budget(n, enumeration_budget(), "closed_paths");
    std::vector<LatticePath> out;
    std::vector<int> stack{0};
    auto keep = [&](const std::vector<int>& s) {
        if (s.back() == 0) {
            out.push_back(LatticePath{s});
        }
    };
    walk(direction, n, strip, 0, stack, keep);
    return out;
}

CheckReport reverse_check(std::size_t n) {
    const std::size_t limit = budget_from_env().value_or(kDefaultReversalLimit);
    check_budget(n, limit, "reverse_check");
    if (n % 2 != 0) {
        throw UsageError("reverse_check: length must be even");
    }
    CheckReport rep;
    auto fail = [&](std::string why) {
        if (rep.passed) {
            rep.passed = false;
            rep.failure = std::move(why);
        }
    };
    const auto lr = closed_paths(Direction::LeftToRight, n, StripSpec::unbounded());
    auto rl = closed_paths(Direction::RightToLeft, n, StripSpec::unbounded());

    std::vector<LatticePath> mapped;
    mapped.reserve(lr.size());
    for (const auto& p : lr) {
        LatticePath r = reversed(p);
        if (!is_valid(r, Direction::RightToLeft, StripSpec::unbounded())) {
            fail("reversal of an lr path is not a legal rl path (n=" + std::to_string(n) + ")");
        }
        if (reversed(r) != p) {
            fail("reversal is not an involution (n=" + std::to_string(n) + ")");
        }
        mapped.push_back(std::move(r));
    }
    std::sort(mapped.begin(), mapped.end());
    std::sort(rl.begin(), rl.end());
    if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) {
        fail("reversal is not injective (n=" + std::to_string(n) + ")");
    }
    if (mapped != rl) {
        fail("reversed lr paths differ from rl paths (n=" + std::to_string(n) + ")");
    }

    std::vector<long> lr_areas;
    std::vector<long> rl_areas;
    for (const auto& p : lr) {
        lr_areas.push_back(p.area());
    }
    for (const auto& p : rl) {
        rl_areas.push_back(p.area());
    }
    std::sort(lr_areas.begin(), lr_areas.end());
    std::sort(rl_areas.begin(), rl_areas.end());
    if (lr_areas != rl_areas) {
        fail("area multisets differ (n=" + std::to_string(n) + ")");
    }
    rep.lines.push_back("n=" + std::to_string(n) + " lr=" + std::to_string(lr.size()) +
                        " rl=" + std::to_string(rl.size()));
    return rep;
}

CheckReport area_check(std::size_t n_max) {
    check_budget(2 * n_max, enumeration_budget(), "area_check");
    CheckReport rep;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const BigInt oracle = enumerate(Direction::LeftToRight, 2 * n, StripSpec::unbounded()).total_area;
        const BigInt closed = closed::area_coeff(n);
        rep.lines.push_back("n=" + std::to_string(n) + " oracle=" + to_decimal(oracle) + " closed=" + to_decimal(closed));
        if (oracle != closed && rep.passed) {
            rep.passed = false;
            rep.failure = "area mismatch at n=" + std::to_string(n) + ": oracle " + to_decimal(oracle) +
                          " vs closed form " + to_decimal(closed);
        }
    }
    return rep;
}

} // namespace deutsch::oracle
