#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degenlab/graph.hpp"

namespace degenlab {

// Largest connected component (in vertices) that canonical_form will label.
inline constexpr int kExactCanonicalBound = 12;

/**
 * Relabeling-invariant form of a graph without isolated vertices.
 *
 * The certificate is the canonical edge list rendered as "v<n>:a-b,c-d,..."
 * with labels 1..n. Two graphs share a certificate iff they are isomorphic.
 */
struct CanonicalForm {
    std::string certificate;
    int vertex_count = 0;
    std::vector<Edge> edges;
    Int automorphism_count = 1;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.certificate == b.certificate;
    }
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.certificate <=> b.certificate;
    }
};

CanonicalForm canonical_form(const ArrangementGraph& g);

// Same, for an abstract edge list; vertices are the endpoints that occur.
CanonicalForm canonical_form(std::span<const Edge> edges);

// Inverse of the certificate rendering. Throws ParseError.
std::vector<Edge> decode_certificate(std::string_view certificate);

}  // namespace degenlab
