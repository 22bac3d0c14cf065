#include <deutsch/output.hpp>

#include <deutsch/error.hpp>

#include "json.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace deutsch::output {

std::optional<Format> parse_format(std::string_view s) {
    if (s == "text") {
        return Format::Text;
    }
    if (s == "csv") {
        return Format::Csv;
    }
    if (s == "json") {
        return Format::Json;
    }
    return std::nullopt;
}

void OutputDoc::add(std::string key, std::string value) { fields_.push_back({std::move(key), std::move(value)}); }
void OutputDoc::add(std::string key, IntRow row) { fields_.push_back({std::move(key), std::move(row)}); }
void OutputDoc::add(std::string key, IntTable table) { fields_.push_back({std::move(key), std::move(table)}); }

const Field* OutputDoc::find(std::string_view key) const {
    for (const auto& f : fields_) {
        if (f.key == key) {
            return &f;
        }
    }
    return nullptr;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void join_row(std::ostream& os, const IntRow& row, char sep) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) {
            os << sep;
        }
        os << to_decimal(row[i]);
    }
}

void render_text(std::ostream& os, const OutputDoc& doc) {
    for (const auto& f : doc.fields()) {
        std::visit(overloaded{
                       [&](const std::string& s) { os << f.key << ": " << s << '\n'; },
                       [&](const IntRow& r) {
                           os << f.key << ':';
                           for (const auto& v : r) {
                               os << ' ' << to_decimal(v);
                           }
                           os << '\n';
                       },
                       [&](const IntTable& t) {
                           os << f.key << ":\n";
                           for (std::size_t n = 0; n < t.size(); ++n) {
                               os << n << ':';
                               for (const auto& v : t[n]) {
                                   os << ' ' << to_decimal(v);
                               }
                               os << '\n';
                           }
                       },
                   },
                   f.value);
    }
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

void render_csv(std::ostream& os, const OutputDoc& doc) {
    for (const auto& f : doc.fields()) {
        std::visit(overloaded{
                       [&](const std::string& s) { os << f.key << ',' << csv_quote(s) << '\n'; },
                       [&](const IntRow& r) {
                           os << f.key;
                           for (const auto& v : r) {
                               os << ',' << to_decimal(v);
                           }
                           os << '\n';
                       },
                       [&](const IntTable& t) {
                           if (t.empty()) {
                               os << f.key << "[]\n";
                           }
                           for (std::size_t n = 0; n < t.size(); ++n) {
                               os << f.key << '[' << n << ']';
                               for (const auto& v : t[n]) {
                                   os << ',' << to_decimal(v);
                               }
                               os << '\n';
                           }
                       },
                   },
                   f.value);
    }
}

void render_json(std::ostream& os, const OutputDoc& doc) {
    os << '{';
    bool first = true;
    for (const auto& f : doc.fields()) {
        if (!first) {
            os << ',';
        }
        first = false;
        os << nlohmann::json(f.key).dump() << ':';
        std::visit(overloaded{
                       [&](const std::string& s) { os << nlohmann::json(s).dump(); },
                       [&](const IntRow& r) {
                           os << '[';
                           join_row(os, r, ',');
                           os << ']';
                       },
                       [&](const IntTable& t) {
                           os << '[';
                           for (std::size_t n = 0; n < t.size(); ++n) {
                               if (n > 0) {
                                   os << ',';
                               }
                               os << '[';
                               join_row(os, t[n], ',');
                               os << ']';
                           }
                           os << ']';
                       },
                   },
                   f.value);
    }
    os << "}\n";
}

// SAX consumer accepting exactly the shapes render_json produces. Integers
// too large for 64 bits arrive as floats with their raw lexeme.
class DocSax {
public:
    using json = nlohmann::json;

    OutputDoc doc;

    bool null() { return fail("null"); }
    bool boolean(bool) { return fail("boolean"); }
    bool number_integer(json::number_integer_t v) { return number(std::to_string(v)); }
    bool number_unsigned(json::number_unsigned_t v) { return number(std::to_string(v)); }
    bool number_float(json::number_float_t, const std::string& raw) { return number(raw); }
    bool string(std::string& s) {
        if (depth_ != 1 || !pending_key_) {
            return fail("string");
        }
        doc.add(std::move(*pending_key_), std::move(s));
        pending_key_.reset();
        return true;
    }
    bool binary(json::binary_t&) { return fail("binary"); }
    bool start_object(std::size_t) {
        if (depth_ != 0) {
            return fail("nested object");
        }
        ++depth_;
        return true;
    }
    bool end_object() {
        --depth_;
        return true;
    }
    bool key(std::string& k) {
        pending_key_ = std::move(k);
        return true;
    }
    bool start_array(std::size_t) {
        if (depth_ == 1) {
            if (!pending_key_) {
                return fail("array without key");
            }
            row_.clear();
            table_.clear();
            nested_ = false;
        } else if (depth_ == 2) {
            nested_ = true;
            row_.clear();
        } else {
            return fail("array nesting");
        }
        ++depth_;
        return true;
    }
    bool end_array() {
        --depth_;
        if (depth_ == 2) {
            table_.push_back(std::move(row_));
            row_.clear();
            return true;
        }
        if (nested_ || (!table_.empty())) {
            doc.add(std::move(*pending_key_), std::move(table_));
        } else {
            doc.add(std::move(*pending_key_), std::move(row_));
        }
        pending_key_.reset();
        table_.clear();
        row_.clear();
        return true;
    }
    bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e) {
        error_ = "json parse error at " + std::to_string(pos) + ": " + e.what();
        return false;
    }

    const std::string& error() const { return error_; }

private:
    bool number(const std::string& raw) {
        if (raw.empty() || raw.find_first_not_of("-0123456789") != std::string::npos) {
            return fail("non-integer number " + raw);
        }
        if ((depth_ == 2 && !nested_) || depth_ == 3) {
            row_.push_back(from_decimal(raw));
            return true;
        }
        return fail("number outside an array");
    }
    bool fail(const std::string& what) {
        error_ = "unexpected " + what + " in document";
        return false;
    }

    int depth_ = 0;
    bool nested_ = false;
    std::optional<std::string> pending_key_;
    IntRow row_;
    IntTable table_;
    std::string error_;
};

std::vector<std::string> split_csv_line(const std::string& line, std::vector<bool>& quoted) {
    std::vector<std::string> cells;
    quoted.clear();
    std::string cur;
    bool in_quotes = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            in_quotes = true;
            was_quoted = true;
        } else if (c == ',') {
            cells.push_back(std::move(cur));
            quoted.push_back(was_quoted);
            cur.clear();
            was_quoted = false;
        } else {
            cur += c;
        }
    }
    if (in_quotes) {
        throw UsageError("csv: unterminated quote");
    }
    cells.push_back(std::move(cur));
    quoted.push_back(was_quoted);
    return cells;
}

BigInt parse_int_cell(const std::string& cell) {
    if (cell.empty() || cell.find_first_not_of("-0123456789") != std::string::npos) {
        throw UsageError("csv: not an integer: " + cell);
    }
    return from_decimal(cell);
}

} // namespace

std::string render(const OutputDoc& doc, Format format) {
    std::ostringstream os;
    switch (format) {
    case Format::Text:
        render_text(os, doc);
        break;
    case Format::Csv:
        render_csv(os, doc);
        break;
    case Format::Json:
        render_json(os, doc);
        break;
    }
    return os.str();
}

OutputDoc parse_json(std::string_view text) {
    DocSax sax;
    const bool ok = nlohmann::json::sax_parse(text.begin(), text.end(), &sax);
    if (!ok) {
        throw UsageError(sax.error());
    }
    return std::move(sax.doc);
}

OutputDoc parse_csv(std::string_view text) {
    OutputDoc doc;
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::string> table_key;
    IntTable table;
    auto flush_table = [&] {
        if (table_key) {
            doc.add(std::move(*table_key), std::move(table));
            table_key.reset();
            table.clear();
        }
    };
    std::vector<bool> quoted;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto cells = split_csv_line(line, quoted);
        const std::string& head = cells[0];
        const auto bracket = head.find('[');
        if (bracket != std::string::npos && head.back() == ']') {
            std::string key = head.substr(0, bracket);
            const std::string idx = head.substr(bracket + 1, head.size() - bracket - 2);
            if (idx.empty()) {
                flush_table();
                doc.add(std::move(key), IntTable{});
                continue;
            }
            if (!table_key || *table_key != key) {
                flush_table();
                table_key = key;
            }
            if (idx != std::to_string(table.size())) {
                throw UsageError("csv: table rows out of order at " + head);
            }
            IntRow row;
            for (std::size_t i = 1; i < cells.size(); ++i) {
                row.push_back(parse_int_cell(cells[i]));
            }
            table.push_back(std::move(row));
            continue;
        }
        flush_table();
        if (cells.size() == 2 && quoted[1]) {
            doc.add(head, std::move(cells[1]));
            continue;
        }
        IntRow row;
        for (std::size_t i = 1; i < cells.size(); ++i) {
            row.push_back(parse_int_cell(cells[i]));
        }
        doc.add(head, std::move(row));
    }
    flush_table();
    return doc;
}

} // namespace deutsch::output
