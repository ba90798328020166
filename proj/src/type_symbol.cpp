#include "degenlab/type_symbol.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <tuple>

namespace degenlab {
namespace {

bool component_less(const ComponentSymbol& a, const ComponentSymbol& b) {
    return std::tie(a.edge_count, a.triangle_count, a.valences) <
           std::tie(b.edge_count, b.triangle_count, b.valences);
}

}  // namespace

ComponentSymbol component_symbol(std::span<const Edge> edges) {
    std::map<int, std::vector<int>> adj;
    for (const auto& e : edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    ComponentSymbol out;
    out.edge_count = static_cast<Int>(edges.size());
    for (auto& [v, nbrs] : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        const auto valence = nbrs.size();
        if (out.valences.size() < valence) out.valences.resize(valence, 0);
        ++out.valences[valence - 1];
    }
    for (const auto& e : edges) {
        const auto& a = adj[e.i];
        const auto& b = adj[e.j];
        for (int c : b) {
            if (c > e.j && std::binary_search(a.begin(), a.end(), c)) ++out.triangle_count;
        }
    }
    return out;
}

TypeSymbol type_symbol(std::span<const Edge> edges) {
    TypeSymbol out;
    for (const auto& part : split_components(edges)) {
        out.components.push_back(component_symbol(part));
    }
    std::sort(out.components.begin(), out.components.end(),
              component_less);
    return out;
}

TypeSymbol type_symbol(const ArrangementGraph& g) {
    return type_symbol(std::span<const Edge>(g.edges()));
}

std::string TypeSymbol::to_string() const {
    if (components.empty()) return "()";
    std::string out;
    for (std::size_t k = 0; k < components.size();) {
        std::size_t run = 1;
        while (k + run < components.size() && components[k + run] == components[k]) ++run;
        const auto& c = components[k];
        out += '(';
        for (std::size_t v = 0; v < c.valences.size(); ++v) {
            if (v) out += ',';
            out += std::to_string(c.valences[v]);
        }
        out += '|' + std::to_string(c.edge_count) + ',' + std::to_string(c.triangle_count) + ')';
        if (run > 1) out += '^' + std::to_string(run);
        k += run;
    }
    return out;
}

namespace {

class SymbolParser {
public:
    explicit SymbolParser(std::string_view text) : text_(text) {}

    TypeSymbol parse() {
        skip_space();
        TypeSymbol out;
        if (text_.substr(pos_).starts_with("()")) {
            pos_ += 2;
            skip_space();
            if (pos_ != text_.size()) fail("trailing characters after empty symbol");
            return out;
        }
        if (pos_ == text_.size()) fail("empty symbol; use \"()\" for the empty arrangement");
        while (pos_ < text_.size()) {
            const std::size_t start = pos_;
            ComponentSymbol c = component();
            Int times = 1;
            skip_space();
            if (peek() == '^') {
                ++pos_;
                skip_space();
                times = integer();
                if (times < 1 || times > PlaneCount::kMax) fail("multiplicity out of range", start);
            }
            for (Int t = 0; t < times; ++t) out.components.push_back(c);
            skip_space();
        }
        std::sort(out.components.begin(), out.components.end(),
                  component_less);
        return out;
    }

private:
    ComponentSymbol component() {
        const std::size_t start = pos_;
        expect('(');
        ComponentSymbol c;
        c.valences.push_back(integer());
        skip_space();
        while (peek() == ',') {
            ++pos_;
            c.valences.push_back(integer());
            skip_space();
        }
        expect('|');
        c.edge_count = integer();
        expect(',');
        c.triangle_count = integer();
        expect(')');
        while (!c.valences.empty() && c.valences.back() == 0) c.valences.pop_back();
        Int degree_sum = 0;
        for (std::size_t v = 0; v < c.valences.size(); ++v) {
            if (c.valences[v] < 0) fail("negative vertex count", start);
            degree_sum = checked::add(degree_sum, checked::mul(static_cast<Int>(v + 1), c.valences[v]));
        }
        if (c.edge_count < 1) fail("a component needs at least one edge", start);
        if (c.triangle_count < 0) fail("negative triangle count", start);
        if (degree_sum != checked::mul(2, c.edge_count)) {
            fail("valences sum to " + std::to_string(degree_sum) + " but 2 x edges = " +
                     std::to_string(2 * c.edge_count),
                 start);
        }
        return c;
    }

    Int integer() {
        skip_space();
        Int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc() || ptr == text_.data() + pos_) fail("expected an integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        throw Error(ErrorKind::ParseError, "type symbol: " + what, at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

TypeSymbol parse_type_symbol(std::string_view text) { return SymbolParser(text).parse(); }

}  // namespace degenlab
