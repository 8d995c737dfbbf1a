#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "waerden/core.hpp"
#include "waerden/problem.hpp"

namespace waerden {

/// Raised when a certificate cannot be checked at all (wrong witness shape
/// for the family, missing fields, out-of-range colors).  Distinct from a
/// dirty Verdict, which means the witness is well-formed but bad.
struct CertificateError : std::runtime_error {
    explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

enum class ClaimKind { GoodWitness, ExtremalAttested };

/// Solver provenance attached to extremal claims.  Extremal claims record
/// an exhausted search; they are attested, not independently re-checkable.
struct Attestation {
    std::string solver_version;
    std::uint64_t nodes_explored = 0;
    std::string search_space_hash;

    bool operator==(const Attestation&) const = default;
};

/// A checkable claim about one family instance.
///
/// GOOD_WITNESS at n: the attached witness avoids every forbidden structure,
/// so the family value exceeds n.  For R the claim is a k-AP-free subset of
/// size n; for Chi it is an n-coloring of [1, m] with no monochromatic k-AP.
///
/// EXTREMAL_ATTESTED at n: an exhaustive search found no witness at n.
struct Certificate {
    ProblemSpec spec;
    int n = 0;
    ClaimKind claim = ClaimKind::GoodWitness;
    std::optional<Coloring> coloring;
    std::optional<IntegerSet> set;
    std::optional<Attestation> attestation;
    std::string created_at;
};

namespace detail {

inline const Coloring& witness_coloring(const Certificate& cert, int want_n, int want_s) {
    if (!cert.coloring || cert.set)
        throw CertificateError(cert.spec.key() + ": expected a coloring witness");
    const Coloring& c = *cert.coloring;
    if (!c.valid()) throw CertificateError(cert.spec.key() + ": malformed coloring");
    if (c.n != want_n || c.s != want_s)
        throw CertificateError(cert.spec.key() + ": witness shape mismatch");
    return c;
}

inline const IntegerSet& witness_set(const Certificate& cert) {
    if (!cert.set || cert.coloring)
        throw CertificateError(cert.spec.key() + ": expected a set witness");
    const IntegerSet& x = *cert.set;
    if (!x.valid()) throw CertificateError(cert.spec.key() + ": malformed set");
    return x;
}

}  // namespace detail

/// Re-checks a GOOD_WITNESS certificate against the raw definitions.
/// Structural defects (wrong shape, elements outside the family's frame)
/// raise CertificateError; forbidden structures produce a dirty Verdict.
inline Verdict verify_certificate(const Certificate& cert) {
    if (cert.claim != ClaimKind::GoodWitness)
        throw CertificateError("only GOOD_WITNESS certificates are re-checkable");
    if (!cert.spec.valid()) throw CertificateError("invalid problem spec");
    if (cert.n < 0) throw CertificateError("negative witness size");

    const ProblemSpec& spec = cert.spec;
    switch (spec.family) {
        case Family::WMixed: {
            const Coloring& c =
                detail::witness_coloring(cert, cert.n, static_cast<int>(spec.lengths.size()));
            if (auto v = find_mixed_violation(c, spec.lengths)) return Verdict::dirty(*v);
            return Verdict::ok();
        }
        case Family::WDiagonal: {
            const Coloring& c = detail::witness_coloring(cert, cert.n, spec.s);
            if (auto v = find_mono_ap(c, spec.k)) return Verdict::dirty(*v);
            return Verdict::ok();
        }
        case Family::W1: {
            const Coloring& c = detail::witness_coloring(cert, cert.n, 2);
            if (auto v = find_w1_violation(c, spec.k, spec.s)) return Verdict::dirty(*v);
            return Verdict::ok();
        }
        case Family::WStar: {
            const Coloring& c = detail::witness_coloring(cert, cert.n, spec.s);
            if (auto v = find_color_ap(c, spec.k)) return Verdict::dirty(*v);
            return Verdict::ok();
        }
        case Family::G: {
            const IntegerSet& x = detail::witness_set(cert);
            if (x.size() != cert.n) throw CertificateError("G: witness size mismatch");
            if (x.size() > 0 && x.elements.front() < 1)
                throw CertificateError("G: elements must be positive");
            for (std::size_t i = 1; i < x.elements.size(); ++i)
                if (x.elements[i] - x.elements[i - 1] > spec.s)
                    throw CertificateError("G: gap exceeds s");
            if (auto p = set_has_ap(x, spec.k)) return Verdict::dirty(Violation::set_ap(*p));
            return Verdict::ok();
        }
        case Family::M: {
            const IntegerSet& x = detail::witness_set(cert);
            if (x.size() != cert.n) throw CertificateError("M: witness size mismatch");
            for (int i = 1; i <= x.size(); ++i) {
                const int e = x.elements[static_cast<std::size_t>(i - 1)];
                if (e < (i - 1) * spec.s || e > i * spec.s - 1)
                    throw CertificateError("M: element outside its block");
            }
            if (auto p = set_has_ap(x, spec.k)) return Verdict::dirty(Violation::set_ap(*p));
            return Verdict::ok();
        }
        case Family::R: {
            const IntegerSet& x = detail::witness_set(cert);
            if (x.size() != cert.n) throw CertificateError("r_k: witness size mismatch");
            if (x.size() > 0 &&
                (x.elements.front() < 1 || x.elements.back() > spec.interval))
                throw CertificateError("r_k: witness not inside [1, n]");
            if (auto p = set_has_ap(x, spec.k)) return Verdict::dirty(Violation::set_ap(*p));
            return Verdict::ok();
        }
        case Family::Chi: {
            if (cert.n < 1) throw CertificateError("chi_k: need at least one color");
            const Coloring& c = detail::witness_coloring(cert, spec.interval, cert.n);
            if (auto v = find_mono_ap(c, spec.k)) return Verdict::dirty(*v);
            return Verdict::ok();
        }
    }
    throw CertificateError("unknown family");
}

}  // namespace waerden
