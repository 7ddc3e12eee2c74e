#pragma once

/**
 * @file expr.hpp
 * @brief Expressions over two binary products: generators and fully
 *        parenthesized `(x *1 y)` / `(x *2 y)` nodes.
 *
 * Expr is an immutable value with shared subtrees. Ordering is the canonical
 * text order: comparing renderings token by token (labels in alphabet order)
 * is equivalent to ordering nodes before generators, generators by label,
 * and nodes by (left, op, right), because renderings are prefix-free.
 */

#include "as2/error.hpp"
#include "as2/lincomb.hpp"
#include "as2/tree.hpp"
#include "as2/tree_products.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace as2 {

class Expr {
public:
    static Expr generator(Label label) {
        Expr e;
        e.label_ = label;
        return e;
    }

    static Expr node(Product op, Expr left, Expr right);

    [[nodiscard]] bool is_generator() const { return node_ == nullptr; }
    [[nodiscard]] Label label() const { return label_; }
    [[nodiscard]] Product op() const;
    [[nodiscard]] const Expr& left() const;
    [[nodiscard]] const Expr& right() const;
    /// Number of generator leaves.
    [[nodiscard]] std::size_t degree() const { return degree_; }

    friend std::strong_ordering operator<=>(const Expr& a, const Expr& b);
    friend bool operator==(const Expr& a, const Expr& b) { return (a <=> b) == 0; }

private:
    struct Node;

    Expr() = default;

    std::shared_ptr<const Node> node_;
    Label label_{};
    std::size_t degree_ = 1;
};

struct Expr::Node {
    Product op;
    Expr left;
    Expr right;
};

inline Expr Expr::node(Product op, Expr left, Expr right) {
    Expr e;
    e.degree_ = left.degree_ + right.degree_;
    e.node_ = std::make_shared<const Node>(Node{op, std::move(left), std::move(right)});
    return e;
}

inline Product Expr::op() const { return node_->op; }
inline const Expr& Expr::left() const { return node_->left; }
inline const Expr& Expr::right() const { return node_->right; }

inline std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) {
        if (a.node_) return std::strong_ordering::equal;
        return a.label_ <=> b.label_;
    }
    if (a.is_generator() != b.is_generator())
        return a.is_generator() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.is_generator()) return a.label_ <=> b.label_;
    if (auto c = a.left() <=> b.left(); c != 0) return c;
    if (auto c = static_cast<int>(a.op()) <=> static_cast<int>(b.op()); c != 0) return c;
    return a.right() <=> b.right();
}

using ExprLinComb = LinComb<Expr>;

inline Expr mul1(Expr a, Expr b) { return Expr::node(Product::first, std::move(a), std::move(b)); }
inline Expr mul2(Expr a, Expr b) { return Expr::node(Product::second, std::move(a), std::move(b)); }

// ---------------------------------------------------------------------------
// Text form: Expr := Label | "(" Expr ("*1" | "*2") Expr ")"

inline Expr parse_expr_at(std::string_view text, std::size_t& pos, const Alphabet& alphabet) {
    detail::skip_spaces(text, pos);
    if (pos >= text.size()) throw ParseError("expected expression", pos);
    if (text[pos] != '(') {
        std::size_t label_pos = pos;
        auto name = detail::read_label(text, pos);
        auto label = alphabet.find(name);
        if (!label)
            throw UnknownLabel("unknown label '" + std::string(name) + "' at position " +
                               std::to_string(label_pos));
        return Expr::generator(*label);
    }
    ++pos;
    Expr left = parse_expr_at(text, pos, alphabet);
    detail::skip_spaces(text, pos);
    if (pos + 1 >= text.size() || text[pos] != '*' || (text[pos + 1] != '1' && text[pos + 1] != '2'))
        throw ParseError("expected '*1' or '*2'", pos);
    Product op = text[pos + 1] == '1' ? Product::first : Product::second;
    pos += 2;
    Expr right = parse_expr_at(text, pos, alphabet);
    detail::skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    return Expr::node(op, std::move(left), std::move(right));
}

inline Expr parse_expr(std::string_view text, const Alphabet& alphabet) {
    std::size_t pos = 0;
    Expr e = parse_expr_at(text, pos, alphabet);
    detail::skip_spaces(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters after expression", pos);
    return e;
}

inline void render_expr_to(const Expr& e, const Alphabet& alphabet, std::string& out) {
    if (e.is_generator()) {
        out += alphabet.name(e.label());
        return;
    }
    out += '(';
    render_expr_to(e.left(), alphabet, out);
    out += e.op() == Product::first ? " *1 " : " *2 ";
    render_expr_to(e.right(), alphabet, out);
    out += ')';
}

inline std::string render_expr(const Expr& e, const Alphabet& alphabet) {
    std::string out;
    render_expr_to(e, alphabet, out);
    return out;
}

inline std::string render(const ExprLinComb& x, const Alphabet& alphabet) {
    return to_text(x, [&](const Expr& e) { return render_expr(e, alphabet); });
}

inline ExprLinComb parse_expr_lincomb(std::string_view text, const Alphabet& alphabet) {
    return parse_lincomb<Expr>(text, [&](std::string_view s, std::size_t& pos) {
        return parse_expr_at(s, pos, alphabet);
    });
}

/// Leaf labels from left to right.
inline void leaf_labels(const Expr& e, std::vector<Label>& out) {
    if (e.is_generator()) {
        out.push_back(e.label());
        return;
    }
    leaf_labels(e.left(), out);
    leaf_labels(e.right(), out);
}

}  // namespace as2
