#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "waerden/io.hpp"
#include "waerden/problem.hpp"

namespace waerden {

// ---------------------------------------------------------------------------
// Small-value table reproduction: rows are functions, columns are s.  Cells
// render as the value, ">=b" for entries known only as a lower bound, or "?"
// when nothing is known.
// ---------------------------------------------------------------------------

enum class TableFormat { Table, Csv, JsonDoc };

/// A value feeding one table cell.  `exact` false means lower bound only.
struct TableEntry {
    long long value = 0;
    bool exact = true;
};

using TableSource = std::function<std::optional<TableEntry>(const ProblemSpec&)>;

/// The canonical row order, mirroring the published table's layout.
inline const std::vector<std::string>& table_functions() {
    static const std::vector<std::string> fns = {"G", "w", "M", "w1", "wstar", "wdiag"};
    return fns;
}

inline ProblemSpec table_spec(const std::string& function, int k, int s) {
    if (function == "G") return ProblemSpec::g(k, s);
    if (function == "w") return ProblemSpec::mixed({k, s});
    if (function == "M") return ProblemSpec::m(k, s);
    if (function == "w1") return ProblemSpec::w1(k, s);
    if (function == "wstar") return ProblemSpec::star(k, s);
    if (function == "wdiag") return ProblemSpec::diagonal(k, s);
    throw std::invalid_argument("unknown table function '" + function + "'");
}

/// Rendered table: cells hold final text ("5", ">=75", "?"), rows align
/// with `functions`, columns with s = 2..s_max.
struct TableDocument {
    int k = 3;
    int s_max = 2;
    std::vector<std::string> functions;
    std::vector<std::vector<std::string>> cells;

    bool operator==(const TableDocument&) const = default;
};

inline TableDocument build_table(const std::vector<std::string>& functions, int k, int s_max,
                                 const TableSource& source) {
    if (k < 2 || s_max < 2) throw std::invalid_argument("build_table: need k >= 2 and s_max >= 2");
    if (!source) throw std::invalid_argument("build_table: need a value source");
    TableDocument doc;
    doc.k = k;
    doc.s_max = s_max;
    doc.functions = functions;
    for (const auto& fn : functions) {
        std::vector<std::string> row;
        for (int s = 2; s <= s_max; ++s) {
            const auto entry = source(table_spec(fn, k, s));
            if (!entry) {
                row.push_back("?");
            } else if (entry->exact) {
                row.push_back(std::to_string(entry->value));
            } else {
                row.push_back(">=" + std::to_string(entry->value));
            }
        }
        doc.cells.push_back(std::move(row));
    }
    return doc;
}

/// Wraps a plain exact-value lookup as a table source.
inline TableSource table_source_from(const ValueSource& values) {
    return [values](const ProblemSpec& spec) -> std::optional<TableEntry> {
        if (const auto v = values(spec)) return TableEntry{*v, true};
        return std::nullopt;
    };
}

/// The published dataset as a table source, including its lower-bound-only
/// entries.
inline TableSource reference_table_source() {
    return [](const ProblemSpec& spec) -> std::optional<TableEntry> {
        const std::string key = spec.cache_key();
        for (const auto& r : reference_values())
            if (r.spec.cache_key() == key) return TableEntry{r.value, r.exact};
        return std::nullopt;
    };
}

inline std::string render_table_csv(const TableDocument& doc) {
    std::ostringstream os;
    os << "function";
    for (int s = 2; s <= doc.s_max; ++s) os << ",s=" << s;
    os << "\n";
    for (std::size_t r = 0; r < doc.functions.size(); ++r) {
        os << doc.functions[r];
        for (const auto& cell : doc.cells[r]) os << "," << cell;
        os << "\n";
    }
    return os.str();
}

inline std::string render_table_text(const TableDocument& doc) {
    std::vector<std::string> headers{"function"};
    for (int s = 2; s <= doc.s_max; ++s) headers.push_back("s=" + std::to_string(s));
    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
    for (std::size_t r = 0; r < doc.functions.size(); ++r) {
        width[0] = std::max(width[0], doc.functions[r].size());
        for (std::size_t c = 0; c < doc.cells[r].size(); ++c)
            width[c + 1] = std::max(width[c + 1], doc.cells[r][c].size());
    }
    std::ostringstream os;
    const auto pad = [&](const std::string& text, std::size_t w, bool left) {
        if (left)
            os << text << std::string(w - text.size(), ' ');
        else
            os << std::string(w - text.size(), ' ') << text;
    };
    for (std::size_t c = 0; c < headers.size(); ++c) {
        if (c) os << "  ";
        pad(headers[c], width[c], c == 0);
    }
    os << "\n";
    for (std::size_t r = 0; r < doc.functions.size(); ++r) {
        pad(doc.functions[r], width[0], true);
        for (std::size_t c = 0; c < doc.cells[r].size(); ++c) {
            os << "  ";
            pad(doc.cells[r][c], width[c + 1], false);
        }
        os << "\n";
    }
    return os.str();
}

inline std::string render_table_json(const TableDocument& doc) {
    Json j;
    j["k"] = doc.k;
    j["sMax"] = doc.s_max;
    Json rows = Json::array();
    for (std::size_t r = 0; r < doc.functions.size(); ++r) {
        Json row;
        row["function"] = doc.functions[r];
        row["cells"] = doc.cells[r];
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

inline std::string render_table(const TableDocument& doc, TableFormat format) {
    switch (format) {
        case TableFormat::Table: return render_table_text(doc);
        case TableFormat::Csv: return render_table_csv(doc);
        case TableFormat::JsonDoc: return render_table_json(doc);
    }
    throw std::invalid_argument("unknown table format");
}

/// Loads a CSV table back into a document; re-rendering as CSV reproduces the
/// input byte for byte.  The k parameter is not part of the CSV payload and
/// must be supplied by the caller.
inline TableDocument parse_table_csv(const std::string& text, int k) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw StoreError("csv: empty document");
    TableDocument doc;
    doc.k = k;
    std::istringstream head(line);
    std::string tok;
    if (!std::getline(head, tok, ',') || tok != "function")
        throw StoreError("csv: header must start with 'function'");
    int expect = 2;
    while (std::getline(head, tok, ',')) {
        if (tok != "s=" + std::to_string(expect))
            throw StoreError("csv: unexpected header column '" + tok + "'");
        ++expect;
    }
    if (expect == 2) throw StoreError("csv: no s columns");
    doc.s_max = expect - 1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        if (!std::getline(row, tok, ',')) throw StoreError("csv: empty row");
        doc.functions.push_back(tok);
        std::vector<std::string> cells;
        while (std::getline(row, tok, ',')) cells.push_back(tok);
        if (static_cast<int>(cells.size()) != doc.s_max - 1)
            throw StoreError("csv: row width does not match the header");
        doc.cells.push_back(std::move(cells));
    }
    return doc;
}

}  // namespace waerden
