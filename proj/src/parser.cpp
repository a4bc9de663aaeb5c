#include "gspmixdom/parser.hpp"

#include <utility>
#include <vector>

namespace gspmixdom {

namespace {

enum class TokenKind { Ident, LParen, RParen, Comma, End };

struct Token {
    TokenKind kind;
    std::string_view text;
    SourceLocation where;
};

std::string describe(const Token& tok) {
    switch (tok.kind) {
        case TokenKind::Ident: return "'" + std::string(tok.text) + "'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Comma: return "','";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_trivia();
        const SourceLocation where = here();
        if (pos_ == src_.size()) return {TokenKind::End, {}, where};
        const char c = src_[pos_];
        switch (c) {
            case '(': advance(); return {TokenKind::LParen, src_.substr(pos_ - 1, 1), where};
            case ')': advance(); return {TokenKind::RParen, src_.substr(pos_ - 1, 1), where};
            case ',': advance(); return {TokenKind::Comma, src_.substr(pos_ - 1, 1), where};
            default: break;
        }
        const std::size_t start = pos_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
        if (pos_ == start)
            throw ParseError({DiagnosticKind::SyntaxError, where, "unexpected character '" + std::string(1, c) + "'"});
        return {TokenKind::Ident, src_.substr(start, pos_ - start), where};
    }

private:
    static bool is_ident_char(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    }

    SourceLocation here() const { return {line_, column_}; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::uint32_t line_ = 1;
    std::uint32_t column_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    ParseTree run() {
        // Explicit frame stack instead of recursion: deep chains like
        // s(e(a,b),s(e(b,c),...)) must not exhaust the call stack.
        struct Frame {
            NodeKind kind;
            SourceLocation where;
            TreeBuilder::Ref left;
            bool has_left;
        };
        std::vector<Frame> frames;

        for (;;) {
            const Token head = lex_.next();
            if (head.kind != TokenKind::Ident || head.text.size() != 1)
                syntax(head, "expected one of e, s, p, g");
            expect(TokenKind::LParen);

            TreeBuilder::Ref done;
            switch (head.text[0]) {
                case 'e': {
                    const Token u = expect(TokenKind::Ident);
                    expect(TokenKind::Comma);
                    const Token v = expect(TokenKind::Ident);
                    expect(TokenKind::RParen);
                    done = builder_.leaf(u.text, v.text, head.where);
                    break;
                }
                case 's': frames.push_back({NodeKind::Series, head.where, {}, false}); continue;
                case 'p': frames.push_back({NodeKind::Parallel, head.where, {}, false}); continue;
                case 'g': frames.push_back({NodeKind::GSeries, head.where, {}, false}); continue;
                default: syntax(head, "expected one of e, s, p, g");
            }

            // Fold the finished subtree into the enclosing frames.
            for (;;) {
                if (frames.empty()) {
                    const Token tail = lex_.next();
                    if (tail.kind != TokenKind::End) syntax(tail, "expected end of input");
                    return std::move(builder_).finish(done);
                }
                Frame& f = frames.back();
                if (!f.has_left) {
                    f.left = done;
                    f.has_left = true;
                    expect(TokenKind::Comma);
                    break;
                }
                expect(TokenKind::RParen);
                done = compose(f.kind, f.left, done, f.where);
                frames.pop_back();
            }
        }
    }

private:
    TreeBuilder::Ref compose(NodeKind kind, TreeBuilder::Ref l, TreeBuilder::Ref r, SourceLocation where) {
        switch (kind) {
            case NodeKind::Series: return builder_.series(l, r, where);
            case NodeKind::Parallel: return builder_.parallel(l, r, where);
            default: return builder_.gseries(l, r, where);
        }
    }

    Token expect(TokenKind kind) {
        Token tok = lex_.next();
        if (tok.kind != kind) {
            static constexpr std::string_view wanted[] = {"a vertex name", "'('", "')'", "','", "end of input"};
            syntax(tok, "expected " + std::string(wanted[static_cast<int>(kind)]));
        }
        return tok;
    }

    [[noreturn]] static void syntax(const Token& at, const std::string& what) {
        throw ParseError({DiagnosticKind::SyntaxError, at.where, what + ", found " + describe(at)});
    }

    Lexer lex_;
    TreeBuilder builder_;
};

}  // namespace

ParseTree parse_expr(std::string_view source) { return Parser(source).run(); }

std::string format_expr(const ParseTree& tree) {
    std::string out;
    out.reserve(tree.leaf_count() * 12);
    // Stage 0: open, 1: between children, 2: close.
    std::vector<std::pair<NodeIndex, int>> stack{{tree.root(), 0}};
    while (!stack.empty()) {
        auto& [i, stage] = stack.back();
        const TreeNode& n = tree.node(i);
        if (n.is_leaf()) {
            out += "e(";
            out += tree.name(n.s);
            out += ',';
            out += tree.name(n.t);
            out += ')';
            stack.pop_back();
            continue;
        }
        if (stage == 0) {
            out += n.kind == NodeKind::Series ? "s(" : n.kind == NodeKind::Parallel ? "p(" : "g(";
            stage = 1;
            stack.emplace_back(n.left, 0);
        } else if (stage == 1) {
            out += ',';
            stage = 2;
            stack.emplace_back(n.right, 0);
        } else {
            out += ')';
            stack.pop_back();
        }
    }
    return out;
}

}  // namespace gspmixdom
