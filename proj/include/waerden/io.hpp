#pragma once

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "waerden/core.hpp"
#include "waerden/problem.hpp"
#include "waerden/reference.hpp"
#include "waerden/relations.hpp"
#include "waerden/solver.hpp"
#include "waerden/verify.hpp"

namespace waerden {

/// Persistent-store failures: unreadable files, torn records, and attempts
/// to overwrite a cached value with a different one.
struct StoreError : std::runtime_error {
    explicit StoreError(const std::string& what) : std::runtime_error(what) {}
};

// Ordered JSON keeps field order stable, so serialized lines are
// byte-reproducible and certificate diffs stay reviewable.
using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Witness codecs.  Colorings are one base-36 digit per position over colors
// 0..s-1; sets are comma-separated integers.  Both are self-delimiting and
// human-auditable.
// ---------------------------------------------------------------------------

namespace detail {

inline char color_digit(int c) {
    return static_cast<char>(c < 10 ? '0' + c : 'a' + (c - 10));
}

inline int digit_color(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'z') return 10 + (ch - 'a');
    return -1;
}

}  // namespace detail

inline std::string encode_coloring(const Coloring& c) {
    if (!c.valid() || c.s > 36)
        throw std::invalid_argument("encode_coloring: invalid coloring or more than 36 colors");
    std::string out;
    out.reserve(c.colors.size());
    for (std::uint8_t col : c.colors) out.push_back(detail::color_digit(col));
    return out;
}

inline Coloring decode_coloring(const std::string& text, int n, int s) {
    if (n < 0 || s < 1 || s > 36) throw std::invalid_argument("decode_coloring: bad shape");
    if (static_cast<int>(text.size()) != n)
        throw std::invalid_argument("decode_coloring: text length does not match n");
    Coloring c(n, s);
    for (int i = 0; i < n; ++i) {
        const int col = detail::digit_color(text[static_cast<std::size_t>(i)]);
        if (col < 0 || col >= s)
            throw std::invalid_argument("decode_coloring: digit outside color range");
        c.colors[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(col);
    }
    return c;
}

inline std::string encode_set(const IntegerSet& x) {
    std::ostringstream os;
    for (std::size_t i = 0; i < x.elements.size(); ++i)
        os << (i ? "," : "") << x.elements[i];
    return os.str();
}

inline IntegerSet decode_set(const std::string& text) {
    IntegerSet x;
    if (text.empty()) return x;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("decode_set: malformed integer '" + tok + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument("decode_set: malformed integer '" + tok + "'");
        x.elements.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (!x.valid())
        throw std::invalid_argument("decode_set: elements must be nonnegative and increasing");
    return x;
}

// ---------------------------------------------------------------------------
// ProblemSpec <-> JSON.
// ---------------------------------------------------------------------------

inline Json spec_to_json(const ProblemSpec& spec) {
    Json j;
    j["family"] = family_name(spec.family);
    switch (spec.family) {
        case Family::WMixed: j["lengths"] = spec.lengths; break;
        case Family::R:
        case Family::Chi:
            j["k"] = spec.k;
            j["interval"] = spec.interval;
            break;
        default:
            j["k"] = spec.k;
            j["s"] = spec.s;
            break;
    }
    return j;
}

inline ProblemSpec spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw std::invalid_argument("spec: missing family");
    const auto fam = family_from_name(j["family"].get<std::string>());
    if (!fam) throw std::invalid_argument("spec: unknown family '" + j["family"].get<std::string>() + "'");
    ProblemSpec spec;
    spec.family = *fam;
    const auto intfield = [&j](const char* name) {
        if (!j.contains(name) || !j[name].is_number_integer())
            throw std::invalid_argument(std::string("spec: missing integer field '") + name + "'");
        return j[name].get<int>();
    };
    switch (*fam) {
        case Family::WMixed:
            if (!j.contains("lengths") || !j["lengths"].is_array())
                throw std::invalid_argument("spec: mixed family needs a lengths array");
            for (const auto& v : j["lengths"]) {
                if (!v.is_number_integer()) throw std::invalid_argument("spec: lengths must be integers");
                spec.lengths.push_back(v.get<int>());
            }
            break;
        case Family::R:
        case Family::Chi:
            spec.k = intfield("k");
            spec.interval = intfield("interval");
            break;
        default:
            spec.k = intfield("k");
            spec.s = intfield("s");
            break;
    }
    if (!spec.valid()) throw std::invalid_argument("spec: parameters out of range");
    return spec;
}

// ---------------------------------------------------------------------------
// Certificate <-> single JSON line.
// ---------------------------------------------------------------------------

inline std::string now_iso8601_utc() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["spec"] = spec_to_json(cert.spec);
    j["n"] = cert.n;
    j["claim"] = cert.claim == ClaimKind::GoodWitness ? "GOOD_WITNESS" : "EXTREMAL_ATTESTED";
    if (cert.claim == ClaimKind::GoodWitness) {
        if (cert.coloring)
            j["witness"] = encode_coloring(*cert.coloring);
        else if (cert.set)
            j["witness"] = encode_set(*cert.set);
        else
            throw CertificateError("certificate: GOOD_WITNESS without a witness");
    } else {
        if (!cert.attestation) throw CertificateError("certificate: EXTREMAL_ATTESTED without attestation");
        Json a;
        a["solverVersion"] = cert.attestation->solver_version;
        a["nodes"] = cert.attestation->nodes_explored;
        a["searchSpaceHash"] = cert.attestation->search_space_hash;
        j["attestation"] = a;
    }
    j["createdAt"] = cert.created_at;
    return j;
}

inline std::string certificate_to_line(const Certificate& cert) {
    return certificate_to_json(cert).dump();
}

inline Certificate certificate_from_json(const Json& j) {
    try {
        if (!j.is_object()) throw std::invalid_argument("certificate: not an object");
        if (!j.contains("spec") || !j.contains("n") || !j.contains("claim"))
            throw std::invalid_argument("certificate: missing spec/n/claim");
        Certificate cert;
        cert.spec = spec_from_json(j["spec"]);
        if (!j["n"].is_number_integer()) throw std::invalid_argument("certificate: n must be an integer");
        cert.n = j["n"].get<int>();
        const std::string claim = j["claim"].get<std::string>();
        if (claim == "GOOD_WITNESS") {
            cert.claim = ClaimKind::GoodWitness;
            if (!j.contains("witness") || !j["witness"].is_string())
                throw std::invalid_argument("certificate: missing witness text");
            const std::string text = j["witness"].get<std::string>();
            if (cert.spec.set_family() || cert.spec.family == Family::R) {
                cert.set = decode_set(text);
            } else if (cert.spec.family == Family::Chi) {
                cert.coloring = decode_coloring(text, cert.spec.interval, cert.n);
            } else {
                cert.coloring = decode_coloring(text, cert.n, cert.spec.color_count());
            }
        } else if (claim == "EXTREMAL_ATTESTED") {
            cert.claim = ClaimKind::ExtremalAttested;
            if (!j.contains("attestation") || !j["attestation"].is_object())
                throw std::invalid_argument("certificate: missing attestation");
            const Json& a = j["attestation"];
            Attestation at;
            if (a.contains("solverVersion")) at.solver_version = a["solverVersion"].get<std::string>();
            if (a.contains("nodes")) at.nodes_explored = a["nodes"].get<std::uint64_t>();
            if (a.contains("searchSpaceHash")) at.search_space_hash = a["searchSpaceHash"].get<std::string>();
            cert.attestation = std::move(at);
        } else {
            throw std::invalid_argument("certificate: unknown claim '" + claim + "'");
        }
        if (j.contains("createdAt") && j["createdAt"].is_string())
            cert.created_at = j["createdAt"].get<std::string>();
        return cert;
    } catch (const CertificateError&) {
        throw;
    } catch (const std::exception& e) {
        throw CertificateError(std::string("malformed certificate: ") + e.what());
    }
}

inline Certificate certificate_from_line(const std::string& line) {
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) throw CertificateError("malformed certificate: not valid JSON");
    return certificate_from_json(j);
}

// ---------------------------------------------------------------------------
// Cache records.
// ---------------------------------------------------------------------------

struct CacheRecord {
    ProblemSpec spec;
    long long value = 0;
    std::string certificate_ref;  // store-relative path, empty when none
    double elapsed_seconds = 0;
    std::string solver_version;

    bool operator==(const CacheRecord&) const = default;
};

inline Json cache_record_to_json(const CacheRecord& rec) {
    Json j;
    j["spec"] = spec_to_json(rec.spec);
    j["value"] = rec.value;
    j["certificateRef"] = rec.certificate_ref;
    j["elapsedSeconds"] = rec.elapsed_seconds;
    j["solverVersion"] = rec.solver_version;
    return j;
}

inline std::string cache_record_to_line(const CacheRecord& rec) {
    return cache_record_to_json(rec).dump();
}

inline CacheRecord cache_record_from_line(const std::string& line) {
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) throw StoreError("cache: line is not valid JSON: " + line);
    try {
        if (!j.is_object() || !j.contains("spec") || !j.contains("value"))
            throw std::invalid_argument("cache: missing spec/value");
        CacheRecord rec;
        rec.spec = spec_from_json(j["spec"]);
        if (!j["value"].is_number_integer()) throw std::invalid_argument("cache: value must be an integer");
        rec.value = j["value"].get<long long>();
        if (rec.value < 1) throw std::invalid_argument("cache: value must be >= 1");
        if (j.contains("certificateRef") && j["certificateRef"].is_string())
            rec.certificate_ref = j["certificateRef"].get<std::string>();
        if (j.contains("elapsedSeconds") && j["elapsedSeconds"].is_number())
            rec.elapsed_seconds = j["elapsedSeconds"].get<double>();
        if (j.contains("solverVersion") && j["solverVersion"].is_string())
            rec.solver_version = j["solverVersion"].get<std::string>();
        return rec;
    } catch (const std::exception& e) {
        throw StoreError(std::string("cache: malformed record: ") + e.what());
    }
}

/// Filesystem-safe name for a spec: family tag plus parameters.  Mixed
/// lengths are sorted, matching cache_key equivalence.
inline std::string spec_filename(const ProblemSpec& spec) {
    std::ostringstream os;
    os << family_name(spec.family);
    switch (spec.family) {
        case Family::WMixed: {
            auto sorted = spec.lengths;
            std::sort(sorted.begin(), sorted.end());
            for (int v : sorted) os << "_" << v;
            break;
        }
        case Family::R:
        case Family::Chi: os << "_" << spec.k << "_" << spec.interval; break;
        default: os << "_" << spec.k << "_" << spec.s; break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// The store: a directory holding cache.jsonl plus certs/<spec>.cert, all in
// line-delimited JSON.  Writes go through a temp file and an atomic rename,
// so concurrent readers see either the old or the new store, never a torn
// record.  Values are mathematical constants: a put that disagrees with the
// cached value for the same spec is a hard error.
// ---------------------------------------------------------------------------

class Store {
public:
    static constexpr const char* kEnvVar = "WAERDEN_STORE";

    explicit Store(std::filesystem::path root) : root_(std::move(root)) {}

    /// Store location from the environment variable, else the fallback.
    static Store from_env_or(const std::filesystem::path& fallback) {
        if (const char* env = std::getenv(kEnvVar); env && *env) return Store(env);
        return Store(fallback);
    }

    const std::filesystem::path& root() const { return root_; }
    std::filesystem::path cache_file() const { return root_ / "cache.jsonl"; }
    std::filesystem::path cert_dir() const { return root_ / "certs"; }

    std::vector<CacheRecord> records() const {
        std::vector<CacheRecord> out;
        std::ifstream in(cache_file());
        if (!in) return out;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            out.push_back(cache_record_from_line(line));
        }
        return out;
    }

    std::optional<CacheRecord> get(const ProblemSpec& spec) const {
        const std::string key = spec.cache_key();
        for (const auto& rec : records())
            if (rec.spec.cache_key() == key) return rec;
        return std::nullopt;
    }

    /// Inserts a record.  Re-putting the identical value is a no-op (returns
    /// false); a different value for the same spec throws, naming both.
    bool put(const CacheRecord& rec) {
        if (rec.value < 1) throw StoreError("cache: value must be >= 1");
        auto all = records();
        for (const auto& old : all) {
            if (old.spec.cache_key() != rec.spec.cache_key()) continue;
            if (old.value == rec.value) return false;
            std::ostringstream os;
            os << "cache conflict for " << rec.spec.key() << ": stored value " << old.value
               << " != new value " << rec.value;
            throw StoreError(os.str());
        }
        all.push_back(rec);
        std::ostringstream body;
        for (const auto& r : all) body << cache_record_to_line(r) << "\n";
        write_atomic(cache_file(), body.str());
        return true;
    }

    /// Writes the certificate under certs/ and returns its store-relative
    /// reference path.
    std::string put_certificate(const Certificate& cert) {
        const std::string name = spec_filename(cert.spec) + ".cert";
        write_atomic(cert_dir() / name, certificate_to_line(cert) + "\n");
        return "certs/" + name;
    }

    std::optional<Certificate> load_certificate(const std::string& ref) const {
        std::ifstream in(root_ / ref);
        if (!in) return std::nullopt;
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return certificate_from_line(line);
        return std::nullopt;
    }

    /// Lookup over the cached records, in the shape relations consume.
    ValueSource value_source() const {
        auto recs = records();
        return [recs = std::move(recs)](const ProblemSpec& spec) -> std::optional<long long> {
            const std::string key = spec.cache_key();
            for (const auto& rec : recs)
                if (rec.spec.cache_key() == key) return rec.value;
            return std::nullopt;
        };
    }

private:
    static void write_atomic(const std::filesystem::path& target, const std::string& content) {
        std::filesystem::create_directories(target.parent_path());
        const std::filesystem::path tmp =
            target.parent_path() / (target.filename().string() + ".tmp");
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) throw StoreError("cannot write " + tmp.string());
            out << content;
            out.flush();
            if (!out) throw StoreError("short write to " + tmp.string());
        }
        std::filesystem::rename(tmp, target);
    }

    std::filesystem::path root_;
};

/// The published small-value dataset as a read-only value source, kept
/// separate from local records so comparisons against it stay explicit.
inline ValueSource reference_source() {
    return [](const ProblemSpec& spec) { return reference_lookup(spec); };
}

/// Cache record for a freshly solved value (certificate already stored).
inline CacheRecord record_for(const ComputedValue& cv, std::string certificate_ref) {
    CacheRecord rec;
    rec.spec = cv.spec;
    rec.value = cv.value;
    rec.certificate_ref = std::move(certificate_ref);
    rec.elapsed_seconds = cv.elapsed_seconds;
    rec.solver_version = cv.solver_version;
    return rec;
}

/// One-line human description of a violation, for verify output.
inline std::string violation_text(const Violation& v) {
    std::ostringstream os;
    switch (v.kind) {
        case Violation::MONO_AP:
            os << "monochromatic progression";
            break;
        case Violation::COLOR_AP:
            os << "progression with arithmetic colors (color diff " << v.color_diff << ")";
            break;
        case Violation::RUN:
            if (v.run_length == 1)
                os << "forbidden occurrence of color " << v.color << " at " << v.run_start;
            else
                os << "run of " << v.run_length << " consecutive integers of color " << v.color
                   << " starting at " << v.run_start;
            return os.str();
        case Violation::SET_AP:
            os << "progression inside the set";
            break;
    }
    if (v.progression) {
        os << ": " << v.progression->first << " +" << v.progression->diff << "*j, length "
           << v.progression->length;
    }
    if (v.kind == Violation::MONO_AP) os << ", color " << v.color;
    return os.str();
}

}  // namespace waerden
