#pragma once

// Exhaustive generation of Deutsch paths: ground truth for the counting,
// reversal and area results.

#include <deutsch/bigint.hpp>
#include <deutsch/strip.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace deutsch::oracle {

using strip::Direction;
using strip::StripSpec;

struct LatticePath {
    std::vector<int> ordinates;  // c_0 = 0, ..., c_n

    std::size_t length() const { return ordinates.size() - 1; }
    int end_level() const { return ordinates.back(); }
    /// Sum of all ordinates c_0 + ... + c_n.
    long area() const;

    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
};

bool is_legal_step(Direction direction, int from, int to);
bool is_valid(const LatticePath& p, Direction direction, StripSpec strip);

/// Reads the path right to left: ordinates reversed.
LatticePath reversed(const LatticePath& p);

struct OracleReport {
    std::size_t n = 0;
    std::map<std::size_t, BigInt> by_level;
    BigInt closed_count = 0;
    BigInt total_area = 0;  // over closed paths
};

/// Maximum enumerable length: 16, or DEUTSCH_BUDGET when set.
std::size_t enumeration_budget();

/// Visits every path of length n in lexicographic step order (ups first,
/// then the shallowest down). Unbounded right-to-left enumeration visits
/// the paths ending at level <= n (the full set is infinite).
void for_each_path(Direction direction, std::size_t n, StripSpec strip,
                   const std::function<void(const std::vector<int>&)>& visit);

OracleReport enumerate(Direction direction, std::size_t n, StripSpec strip);

std::vector<LatticePath> closed_paths(Direction direction, std::size_t n, StripSpec strip);

struct CheckReport {
    bool passed = true;
    std::string failure;
    std::vector<std::string> lines;
};

/// Reversal maps the closed left-to-right paths of length n onto the
/// closed right-to-left paths, preserving area. n even, n <= 14.
CheckReport reverse_check(std::size_t n);

/// Oracle total area of closed paths of length 2n against area_coeff(n)
/// for n = 0..n_max, n_max <= 8.
CheckReport area_check(std::size_t n_max);

} // namespace deutsch::oracle
