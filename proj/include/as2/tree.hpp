#pragma once

/**
 * @file tree.hpp
 * @brief Planar rooted trees with labelled non-root vertices.
 *
 * A PlanarTree is an unlabelled root carrying an ordered forest of labelled
 * vertices. Trees are immutable values; the canonical token code is computed
 * once at construction and drives equality and ordering.
 *
 * Text grammar (canonical form uses single spaces between siblings):
 *
 *     Tree   := "(" Forest ")"
 *     Forest := Node*
 *     Node   := Label | Label "(" Forest ")"
 *     Label  := [A-Za-z][A-Za-z0-9_]*
 */

#include "as2/error.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace as2 {

struct Label {
    std::uint32_t index = 0;
    friend auto operator<=>(const Label&, const Label&) = default;
};

inline bool is_valid_label_name(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

/// Finite ordered label set; order is the order of construction.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::uint32_t i = 0; i < names_.size(); ++i) {
            if (!is_valid_label_name(names_[i]))
                throw std::invalid_argument("invalid label name '" + names_[i] + "'");
            if (!index_.emplace(names_[i], i).second)
                throw std::invalid_argument("repeated label '" + names_[i] + "'");
        }
    }

    /// x1, ..., xk
    static Alphabet numbered(std::size_t k) {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
        return Alphabet(std::move(names));
    }

    /// a, b, c, ... (up to 26 labels)
    static Alphabet letters(std::size_t k) {
        if (k > 26) throw std::invalid_argument("Alphabet::letters supports at most 26 labels");
        std::vector<std::string> names;
        for (std::size_t i = 0; i < k; ++i) names.emplace_back(1, static_cast<char>('a' + i));
        return Alphabet(std::move(names));
    }

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] const std::string& name(Label l) const { return names_.at(l.index); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

    [[nodiscard]] std::vector<Label> labels() const {
        std::vector<Label> out;
        for (std::uint32_t i = 0; i < names_.size(); ++i) out.push_back(Label{i});
        return out;
    }

    [[nodiscard]] std::optional<Label> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return Label{it->second};
    }

    [[nodiscard]] Label label(std::string_view name) const {
        if (auto l = find(name)) return *l;
        throw UnknownLabel("unknown label '" + std::string(name) + "'");
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::uint32_t> index_;
};

/// A labelled non-root vertex with its ordered children.
struct Vertex {
    Label label;
    std::vector<Vertex> children;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Path of 1-based child indices from the root; empty path is the root.
struct VertexAddr {
    std::vector<std::size_t> path;

    [[nodiscard]] bool is_root() const { return path.empty(); }
    [[nodiscard]] std::string str() const {
        if (path.empty()) return "root";
        std::string s = "<";
        for (std::size_t i = 0; i < path.size(); ++i) s += (i ? "," : "") + std::to_string(path[i]);
        return s + ">";
    }
    friend auto operator<=>(const VertexAddr&, const VertexAddr&) = default;
};

class PlanarTree {
public:
    /// Token codes of the canonical rendering, ordered as the characters they stand for.
    enum Token : std::uint32_t { kSpace = 0, kOpen = 1, kClose = 2, kFirstLabel = 3 };

    PlanarTree() { encode(); }
    explicit PlanarTree(std::vector<Vertex> branches) : branches_(std::move(branches)) { encode(); }

    [[nodiscard]] const std::vector<Vertex>& branches() const { return branches_; }
    [[nodiscard]] std::size_t root_arity() const { return branches_.size(); }
    [[nodiscard]] std::size_t degree() const { return degree_; }
    [[nodiscard]] const std::vector<std::uint32_t>& code() const { return code_; }

    friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.code_ == b.code_; }
    friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
        return a.code_ <=> b.code_;
    }

private:
    void encode() {
        code_.clear();
        degree_ = 0;
        code_.push_back(kOpen);
        encode_forest(branches_);
        code_.push_back(kClose);
    }

    void encode_forest(const std::vector<Vertex>& forest) {
        for (std::size_t i = 0; i < forest.size(); ++i) {
            if (i) code_.push_back(kSpace);
            const auto& v = forest[i];
            ++degree_;
            code_.push_back(kFirstLabel + v.label.index);
            if (!v.children.empty()) {
                code_.push_back(kOpen);
                encode_forest(v.children);
                code_.push_back(kClose);
            }
        }
    }

    std::vector<Vertex> branches_;
    std::vector<std::uint32_t> code_;
    std::size_t degree_ = 0;
};

// ---------------------------------------------------------------------------
// Text form

namespace detail {

inline void skip_spaces(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

inline std::string_view read_label(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected label", pos);
    ++pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
    return text.substr(start, pos - start);
}

inline std::vector<Vertex> parse_forest(std::string_view text, std::size_t& pos,
                                        const Alphabet& alphabet) {
    // Caller has consumed "(".
    std::vector<Vertex> forest;
    while (true) {
        skip_spaces(text, pos);
        if (pos >= text.size()) throw ParseError("unterminated '('", pos);
        if (text[pos] == ')') {
            ++pos;
            return forest;
        }
        std::size_t label_pos = pos;
        auto name = read_label(text, pos);
        auto label = alphabet.find(name);
        if (!label)
            throw UnknownLabel("unknown label '" + std::string(name) + "' at position " +
                               std::to_string(label_pos));
        Vertex v{*label, {}};
        skip_spaces(text, pos);
        if (pos < text.size() && text[pos] == '(') {
            ++pos;
            v.children = parse_forest(text, pos, alphabet);
        }
        forest.push_back(std::move(v));
    }
}

inline void render_forest(const std::vector<Vertex>& forest, const Alphabet& alphabet,
                          std::string& out) {
    for (std::size_t i = 0; i < forest.size(); ++i) {
        if (i) out += ' ';
        out += alphabet.name(forest[i].label);
        if (!forest[i].children.empty()) {
            out += '(';
            render_forest(forest[i].children, alphabet, out);
            out += ')';
        }
    }
}

}  // namespace detail

/// Parses one tree starting at `pos` (leading whitespace allowed) and advances `pos`.
inline PlanarTree parse_tree_at(std::string_view text, std::size_t& pos, const Alphabet& alphabet) {
    detail::skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    return PlanarTree(detail::parse_forest(text, pos, alphabet));
}

inline PlanarTree parse_tree(std::string_view text, const Alphabet& alphabet) {
    std::size_t pos = 0;
    auto t = parse_tree_at(text, pos, alphabet);
    detail::skip_spaces(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters after tree", pos);
    return t;
}

inline std::string render_tree(const PlanarTree& t, const Alphabet& alphabet) {
    std::string out = "(";
    detail::render_forest(t.branches(), alphabet, out);
    out += ')';
    return out;
}

// ---------------------------------------------------------------------------
// Vertex taxonomy

namespace detail {

inline void collect_vertices(const std::vector<Vertex>& forest, VertexAddr& addr,
                             std::vector<VertexAddr>& out, bool internal_only) {
    for (std::size_t i = 0; i < forest.size(); ++i) {
        addr.path.push_back(i + 1);
        if (!internal_only || !forest[i].children.empty()) out.push_back(addr);
        collect_vertices(forest[i].children, addr, out, internal_only);
        addr.path.pop_back();
    }
}

/// Preorder flags: true where the vertex has at least one child (index 0 is the root).
inline void collect_internal_flags(const std::vector<Vertex>& forest, std::vector<bool>& out) {
    for (const auto& v : forest) {
        out.push_back(!v.children.empty());
        collect_internal_flags(v.children, out);
    }
}

}  // namespace detail

/// All vertices in preorder, root first.
inline std::vector<VertexAddr> vertices(const PlanarTree& t) {
    std::vector<VertexAddr> out{VertexAddr{}};
    VertexAddr addr;
    detail::collect_vertices(t.branches(), addr, out, false);
    return out;
}

/// Vertices with at least one child, in preorder. The root counts when degree >= 1.
inline std::vector<VertexAddr> internal_vertices(const PlanarTree& t) {
    std::vector<VertexAddr> out;
    if (t.root_arity() > 0) out.push_back(VertexAddr{});
    VertexAddr addr;
    detail::collect_vertices(t.branches(), addr, out, true);
    return out;
}

/// Preorder indices (as in vertices()) of the internal vertices.
inline std::vector<std::size_t> internal_vertex_indices(const PlanarTree& t) {
    std::vector<bool> flags{t.root_arity() > 0};
    detail::collect_internal_flags(t.branches(), flags);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) out.push_back(i);
    return out;
}

/// The vertex at `addr`; throws std::out_of_range for the root or an invalid path.
inline const Vertex& vertex_at(const PlanarTree& t, const VertexAddr& addr) {
    if (addr.path.empty()) throw std::out_of_range("vertex_at: the root is not a labelled vertex");
    const std::vector<Vertex>* forest = &t.branches();
    const Vertex* v = nullptr;
    for (auto idx : addr.path) {
        if (idx == 0 || idx > forest->size())
            throw std::out_of_range("invalid vertex address " + addr.str());
        v = &(*forest)[idx - 1];
        forest = &v->children;
    }
    return *v;
}

inline bool is_valid_addr(const PlanarTree& t, const VertexAddr& addr) {
    const std::vector<Vertex>* forest = &t.branches();
    for (auto idx : addr.path) {
        if (idx == 0 || idx > forest->size()) return false;
        forest = &(*forest)[idx - 1].children;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Root concatenation and branch decomposition

/// Identifies the roots; branches of t1 precede branches of t2.
inline PlanarTree concat(const PlanarTree& t1, const PlanarTree& t2) {
    std::vector<Vertex> b = t1.branches();
    b.insert(b.end(), t2.branches().begin(), t2.branches().end());
    return PlanarTree(std::move(b));
}

/// Single-branch factors T[1], ..., T[k] with T = T[1] . ... . T[k].
inline std::vector<PlanarTree> branch_decomposition(const PlanarTree& t) {
    std::vector<PlanarTree> out;
    out.reserve(t.root_arity());
    for (const auto& v : t.branches()) out.emplace_back(std::vector<Vertex>{v});
    return out;
}

/// The tree with two vertices whose non-root vertex carries `label`.
inline PlanarTree single_vertex_tree(Label label) { return PlanarTree({Vertex{label, {}}}); }

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

inline std::vector<std::vector<Vertex>> forests(std::size_t n, std::size_t labels,
                                                std::vector<std::optional<std::vector<std::vector<Vertex>>>>& memo) {
    if (memo[n]) return *memo[n];
    std::vector<std::vector<Vertex>> out;
    if (n == 0) {
        out.emplace_back();
    } else {
        for (std::size_t first = 1; first <= n; ++first) {
            auto below = forests(first - 1, labels, memo);
            auto rest = forests(n - first, labels, memo);
            for (std::uint32_t l = 0; l < labels; ++l)
                for (const auto& ch : below)
                    for (const auto& r : rest) {
                        std::vector<Vertex> f;
                        f.reserve(r.size() + 1);
                        f.push_back(Vertex{Label{l}, ch});
                        f.insert(f.end(), r.begin(), r.end());
                        out.push_back(std::move(f));
                    }
        }
    }
    memo[n] = out;
    return out;
}

}  // namespace detail

/// Every tree of the given degree over the first `num_labels` labels, in canonical order.
inline std::vector<PlanarTree> enumerate_trees(std::size_t degree, std::size_t num_labels) {
    std::vector<std::optional<std::vector<std::vector<Vertex>>>> memo(degree + 1);
    auto fs = detail::forests(degree, num_labels, memo);
    std::vector<PlanarTree> out;
    out.reserve(fs.size());
    for (auto& f : fs) out.emplace_back(std::move(f));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<PlanarTree> enumerate_trees(std::size_t degree, const Alphabet& alphabet) {
    return enumerate_trees(degree, alphabet.size());
}

/// Label multiset of a tree as a count per label index.
inline std::vector<std::size_t> label_counts(const PlanarTree& t, std::size_t num_labels) {
    std::vector<std::size_t> counts(num_labels, 0);
    for (auto tok : t.code())
        if (tok >= PlanarTree::kFirstLabel) ++counts.at(tok - PlanarTree::kFirstLabel);
    return counts;
}

}  // namespace as2
