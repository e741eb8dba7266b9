#include "mostset/regex.hpp"

#include <algorithm>

#include "mostset/errors.hpp"

namespace mostset {

Regex Regex::empty_set() {
    return Regex(std::make_shared<Node>(Node{Kind::EmptySet, '\0', nullptr, nullptr}));
}

Regex Regex::epsilon() {
    return Regex(std::make_shared<Node>(Node{Kind::Epsilon, '\0', nullptr, nullptr}));
}

Regex Regex::symbol(char symbol) {
    return Regex(std::make_shared<Node>(Node{Kind::Symbol, symbol, nullptr, nullptr}));
}

Regex Regex::concat(Regex left, Regex right) {
    return Regex(std::make_shared<Node>(
        Node{Kind::Concat, '\0', std::move(left.node_), std::move(right.node_)}));
}

Regex Regex::alternation(Regex left, Regex right) {
    return Regex(std::make_shared<Node>(
        Node{Kind::Union, '\0', std::move(left.node_), std::move(right.node_)}));
}

Regex Regex::star(Regex inner) {
    return Regex(std::make_shared<Node>(
        Node{Kind::Star, '\0', std::move(inner.node_), nullptr}));
}

namespace {

int precedence(Regex::Kind kind) {
    switch (kind) {
        case Regex::Kind::Union: return 0;
        case Regex::Kind::Concat: return 1;
        default: return 2;
    }
}

void render(const Regex& r, int parent_prec, std::string& out) {
    const int prec = precedence(r.kind());
    const bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (r.kind()) {
        case Regex::Kind::EmptySet: out += "\\0"; break;
        case Regex::Kind::Epsilon: out += "\\e"; break;
        case Regex::Kind::Symbol: out += r.symbol_value(); break;
        case Regex::Kind::Union:
            render(r.left(), 0, out);
            out += '+';
            render(r.right(), 0, out);
            break;
        case Regex::Kind::Concat:
            render(r.left(), 1, out);
            render(r.right(), 1, out);
            break;
        case Regex::Kind::Star:
            render(r.left(), 3, out);
            out += '*';
            break;
    }
    if (parens) out += ')';
}

// Recursive-descent parser over bytes; multi-byte ∅ and ε are folded into
// single tokens.
class Parser {
public:
    Parser(std::string_view text, const std::vector<char>& alphabet)
        : text_(text), alphabet_(alphabet) {}

    Regex parse() {
        Regex r = parse_union();
        if (pos_ < text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) +
                                 "' at position " + std::to_string(pos_),
                             pos_);
        return r;
    }

private:
    bool starts_atom() const {
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c != ')' && c != '+' && c != '*';
    }

    Regex parse_union() {
        Regex r = parse_concat();
        while (pos_ < text_.size() && text_[pos_] == '+') {
            ++pos_;
            r = Regex::alternation(std::move(r), parse_concat());
        }
        return r;
    }

    Regex parse_concat() {
        Regex r = parse_star();
        while (starts_atom()) r = Regex::concat(std::move(r), parse_star());
        return r;
    }

    Regex parse_star() {
        Regex r = parse_atom();
        while (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            r = Regex::star(std::move(r));
        }
        return r;
    }

    bool try_consume(std::string_view literal) {
        if (text_.substr(pos_).starts_with(literal)) {
            pos_ += literal.size();
            return true;
        }
        return false;
    }

    Regex parse_atom() {
        if (pos_ >= text_.size())
            throw ParseError("expected expression at position " + std::to_string(pos_), pos_);
        const std::size_t at = pos_;
        if (try_consume("\\0") || try_consume("∅")) return Regex::empty_set();
        if (try_consume("\\e") || try_consume("ε")) return Regex::epsilon();
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Regex inner = parse_union();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw ParseError("missing ')' at position " + std::to_string(pos_), pos_);
            ++pos_;
            return inner;
        }
        if (c == '\\')
            throw ParseError("unknown escape at position " + std::to_string(at), at);
        if (c == ')' || c == '+' || c == '*')
            throw ParseError("expected expression at position " + std::to_string(at), at);
        if (std::find(alphabet_.begin(), alphabet_.end(), c) == alphabet_.end())
            throw ParseError("symbol '" + std::string(1, c) +
                                 "' not in alphabet at position " + std::to_string(at),
                             at);
        ++pos_;
        return Regex::symbol(c);
    }

    std::string_view text_;
    const std::vector<char>& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string Regex::to_string() const {
    std::string out;
    render(*this, 0, out);
    return out;
}

Regex parse_regex(std::string_view text, const std::vector<char>& alphabet) {
    return Parser(text, alphabet).parse();
}

}  // namespace mostset
