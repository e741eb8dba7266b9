#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mostset {

/// Immutable regular-expression syntax tree over a declared alphabet.
///
/// Grammar (loosest to tightest): union `R+S`, concatenation `RS`,
/// Kleene star `R*`. The empty-set and empty-string constants are written
/// `\0` and `\e` in ASCII input; the literal characters ∅ and ε are also
/// accepted.
class Regex {
public:
    enum class Kind { EmptySet, Epsilon, Symbol, Concat, Union, Star };

    static Regex empty_set();
    static Regex epsilon();
    static Regex symbol(char symbol);
    static Regex concat(Regex left, Regex right);
    static Regex alternation(Regex left, Regex right);
    static Regex star(Regex inner);

    Kind kind() const { return node_->kind; }
    char symbol_value() const { return node_->symbol; }
    /// Left operand of Concat/Union, or the operand of Star.
    Regex left() const { return Regex(node_->left); }
    Regex right() const { return Regex(node_->right); }

    /// Re-renders the tree with minimal parentheses, using \0 and \e.
    std::string to_string() const;

private:
    struct Node {
        Kind kind;
        char symbol = '\0';
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
    };

    explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Parses `text` over the given alphabet. Precedence: star binds
/// tightest, then concatenation, then union. Throws ParseError (with the
/// 0-based byte offset) on malformed syntax or a symbol outside the
/// alphabet.
Regex parse_regex(std::string_view text, const std::vector<char>& alphabet);

}  // namespace mostset
