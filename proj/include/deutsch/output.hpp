#pragma once

// Machine-readable command output. Integers are always written with all
// their decimal digits.

#include <deutsch/bigint.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace deutsch::output {

enum class Format { Text, Csv, Json };

std::optional<Format> parse_format(std::string_view s);

using IntRow = std::vector<BigInt>;
using IntTable = std::vector<IntRow>;

struct Field {
    std::string key;
    std::variant<std::string, IntRow, IntTable> value;

    friend bool operator==(const Field&, const Field&) = default;
};

/// Ordered list of named fields: strings, integer rows or jagged integer tables.
class OutputDoc {
public:
    void add(std::string key, std::string value);
    void add(std::string key, IntRow row);
    void add(std::string key, IntTable table);

    const std::vector<Field>& fields() const { return fields_; }
    const Field* find(std::string_view key) const;

    friend bool operator==(const OutputDoc&, const OutputDoc&) = default;

private:
    std::vector<Field> fields_;
};

std::string render(const OutputDoc& doc, Format format);

/// Inverses of render for the machine formats. Throw UsageError on
/// malformed input.
OutputDoc parse_json(std::string_view text);
OutputDoc parse_csv(std::string_view text);

} // namespace deutsch::output
