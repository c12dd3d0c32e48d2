#pragma once

/*
 * expr.hpp
 * --------
 * The graph-expression DSL: a small LL(1) language of family atoms and
 * combinators.
 *
 *   expr  := K(n) | Kbar(n) | P(n) | C(n) | Kmulti(item,...) | S(n) | W(n)
 *          | Tri(n) | TriK2(n) | T1 | T2
 *          | graph{n; u-v, ...} | file(path)
 *          | union(e,...) | zykov(e,...) | star(e) | ej(e,u,e2,v) | rep(k,e)
 *   item  := size | size*count        (count copies of a part of that size)
 *
 * Whitespace-insensitive. Parameters are range-checked at parse time and
 * diagnostics carry line:column. Printing an AST and reparsing it yields an
 * equal AST.
 */

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "indpoly/errors.hpp"

namespace indpoly {

constexpr long long dsl_param_max = 5000;

enum class ExprKind {
    complete,
    edgeless,
    path,
    cycle,
    multipartite,
    spider,
    centipede,
    triangle_chain,
    triangle_chain_k2,
    tree1,
    tree2,
    explicit_graph,
    file_graph,
    union_of,
    zykov_of,
    star_of,
    edge_join_of,
    repeat_of,
};

struct GraphExpr {
    ExprKind kind{};
    std::vector<long long> params;  // family n; rep count; ej (u, v)
    std::vector<std::pair<long long, long long>> multi;  // Kmulti (size, count) items
    long long explicit_n = 0;
    std::vector<std::pair<int, int>> edges;  // graph{...} atom
    std::string path;                        // file(...) atom
    std::vector<GraphExpr> children;
    int line = 1, col = 1;

    // Positions are diagnostics, not identity.
    bool operator==(const GraphExpr& o) const {
        return kind == o.kind && params == o.params && multi == o.multi &&
               explicit_n == o.explicit_n && edges == o.edges && path == o.path &&
               children == o.children;
    }
};

namespace detail {

struct Token {
    enum class Kind { ident, number, punct, path, eof } kind = Kind::eof;
    std::string text;
    long long value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) return t;
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                t.text += take();
            t.kind = Token::Kind::ident;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                t.text += take();
            if (t.text.size() > 12)
                fail(t, "integer literal too large");
            t.value = std::stoll(t.text);
            t.kind = Token::Kind::number;
            return t;
        }
        if (std::string("(){},;-*").find(c) != std::string::npos) {
            t.text += take();
            t.kind = Token::Kind::punct;
            return t;
        }
        fail(t, std::string("unexpected character '") + c + "'");
    }

    // Lexes a file path: quoted, or raw up to the closing ')'.
    Token next_path() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        t.kind = Token::Kind::path;
        if (pos_ < src_.size() && src_[pos_] == '"') {
            take();
            while (pos_ < src_.size() && src_[pos_] != '"') t.text += take();
            if (pos_ >= src_.size()) fail(t, "unterminated path string");
            take();
            return t;
        }
        while (pos_ < src_.size() && src_[pos_] != ')') t.text += take();
        while (!t.text.empty() && std::isspace(static_cast<unsigned char>(t.text.back())))
            t.text.pop_back();
        if (t.text.empty()) fail(t, "empty file path");
        return t;
    }

    [[noreturn]] static void fail(const Token& at, const std::string& what) {
        throw_error(ErrorCode::parse, std::to_string(at.line) + ":" +
                                          std::to_string(at.col) + ": " + what);
    }

private:
    char take() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            take();
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lexer_(src) { advance(); }

    GraphExpr parse() {
        GraphExpr e = parse_expr();
        if (cur_.kind != Token::Kind::eof)
            Lexer::fail(cur_, "trailing input after expression");
        return e;
    }

private:
    void advance(bool path_mode = false) {
        cur_ = path_mode ? lexer_.next_path() : lexer_.next();
    }

    bool at_punct(char c) const {
        return cur_.kind == Token::Kind::punct && cur_.text[0] == c;
    }

    void expect_punct(char c) {
        if (!at_punct(c))
            Lexer::fail(cur_, std::string("expected '") + c + "', got '" + describe() + "'");
        advance();
    }

    std::string describe() const {
        return cur_.kind == Token::Kind::eof ? "end of input" : cur_.text;
    }

    long long parse_number() {
        // A leading '-' lexes as punctuation so that edge lists like 0-1 work;
        // fold it into the literal here so range checks see the signed value.
        bool negative = cur_.kind == Token::Kind::punct && cur_.text == "-";
        if (negative) advance();
        if (cur_.kind != Token::Kind::number)
            Lexer::fail(cur_, "expected integer, got '" + describe() + "'");
        long long v = cur_.value;
        advance();
        return negative ? -v : v;
    }

    long long checked_param(const GraphExpr& e, const char* what, long long lo) {
        long long v = parse_number();
        if (v < lo)
            throw_error(ErrorCode::range, std::to_string(e.line) + ":" +
                                              std::to_string(e.col) + ": " + what +
                                              " must be at least " + std::to_string(lo));
        if (v > dsl_param_max)
            throw_error(ErrorCode::range,
                        std::to_string(e.line) + ":" + std::to_string(e.col) + ": " + what +
                            " exceeds the limit of " + std::to_string(dsl_param_max));
        return v;
    }

    GraphExpr parse_one_param(ExprKind kind, const char* what, long long lo) {
        GraphExpr e = start(kind);
        advance();
        expect_punct('(');
        e.params.push_back(checked_param(e, what, lo));
        expect_punct(')');
        return e;
    }

    GraphExpr start(ExprKind kind) {
        GraphExpr e;
        e.kind = kind;
        e.line = cur_.line;
        e.col = cur_.col;
        return e;
    }

    GraphExpr parse_expr() {
        if (cur_.kind != Token::Kind::ident)
            Lexer::fail(cur_, "expected an expression, got '" + describe() + "'");
        const std::string& name = cur_.text;
        if (name == "K") return parse_one_param(ExprKind::complete, "K: n", 0);
        if (name == "Kbar") return parse_one_param(ExprKind::edgeless, "Kbar: n", 0);
        if (name == "P") return parse_one_param(ExprKind::path, "P: n", 1);
        if (name == "C") return parse_one_param(ExprKind::cycle, "C: n", 3);
        if (name == "S") return parse_one_param(ExprKind::spider, "S: n", 2);
        if (name == "W") return parse_one_param(ExprKind::centipede, "W: n", 1);
        if (name == "Tri") return parse_one_param(ExprKind::triangle_chain, "Tri: n", 1);
        if (name == "TriK2")
            return parse_one_param(ExprKind::triangle_chain_k2, "TriK2: n", 1);
        if (name == "Kmulti") return parse_multipartite();
        if (name == "T1" || name == "T2") {
            GraphExpr e = start(name == "T1" ? ExprKind::tree1 : ExprKind::tree2);
            advance();
            return e;
        }
        if (name == "graph") return parse_explicit_graph();
        if (name == "file") return parse_file();
        if (name == "union") return parse_nary(ExprKind::union_of);
        if (name == "zykov") return parse_nary(ExprKind::zykov_of);
        if (name == "star") return parse_star();
        if (name == "ej") return parse_edge_join();
        if (name == "rep") return parse_repeat();
        Lexer::fail(cur_, "unknown name '" + name + "'");
    }

    GraphExpr parse_multipartite() {
        GraphExpr e = start(ExprKind::multipartite);
        advance();
        expect_punct('(');
        for (;;) {
            long long size = checked_param(e, "Kmulti: part size", 1);
            long long count = 1;
            if (at_punct('*')) {
                advance();
                count = checked_param(e, "Kmulti: part count", 1);
            }
            e.multi.emplace_back(size, count);
            if (at_punct(',')) {
                advance();
                continue;
            }
            break;
        }
        expect_punct(')');
        return e;
    }

    GraphExpr parse_explicit_graph() {
        GraphExpr e = start(ExprKind::explicit_graph);
        advance();
        expect_punct('{');
        e.explicit_n = parse_number();
        if (e.explicit_n < 0 || e.explicit_n > 64)
            throw_error(ErrorCode::range, std::to_string(e.line) + ":" +
                                              std::to_string(e.col) +
                                              ": graph: vertex count outside [0, 64]");
        expect_punct(';');
        while (!at_punct('}')) {
            long long u = parse_number();
            expect_punct('-');
            long long v = parse_number();
            if (u < 0 || v < 0 || u >= e.explicit_n || v >= e.explicit_n)
                throw_error(ErrorCode::range,
                            std::to_string(e.line) + ":" + std::to_string(e.col) +
                                ": graph: edge endpoint outside [0, " +
                                std::to_string(e.explicit_n) + ")");
            if (u == v)
                throw_error(ErrorCode::range, std::to_string(e.line) + ":" +
                                                  std::to_string(e.col) +
                                                  ": graph: self-loop at " + std::to_string(u));
            e.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            if (at_punct(',')) advance();
        }
        expect_punct('}');
        return e;
    }

    GraphExpr parse_file() {
        GraphExpr e = start(ExprKind::file_graph);
        advance();
        if (!at_punct('('))
            Lexer::fail(cur_, std::string("expected '(', got '") + describe() + "'");
        advance(/*path_mode=*/true);
        e.path = cur_.text;
        advance();
        expect_punct(')');
        return e;
    }

    GraphExpr parse_nary(ExprKind kind) {
        GraphExpr e = start(kind);
        advance();
        expect_punct('(');
        e.children.push_back(parse_expr());
        while (at_punct(',')) {
            advance();
            e.children.push_back(parse_expr());
        }
        expect_punct(')');
        return e;
    }

    GraphExpr parse_star() {
        GraphExpr e = start(ExprKind::star_of);
        advance();
        expect_punct('(');
        e.children.push_back(parse_expr());
        expect_punct(')');
        return e;
    }

    GraphExpr parse_edge_join() {
        GraphExpr e = start(ExprKind::edge_join_of);
        advance();
        expect_punct('(');
        e.children.push_back(parse_expr());
        expect_punct(',');
        e.params.push_back(checked_param(e, "ej: left vertex", 0));
        expect_punct(',');
        e.children.push_back(parse_expr());
        expect_punct(',');
        e.params.push_back(checked_param(e, "ej: right vertex", 0));
        expect_punct(')');
        return e;
    }

    GraphExpr parse_repeat() {
        GraphExpr e = start(ExprKind::repeat_of);
        advance();
        expect_punct('(');
        e.params.push_back(checked_param(e, "rep: count", 1));
        expect_punct(',');
        e.children.push_back(parse_expr());
        expect_punct(')');
        return e;
    }

    Lexer lexer_;
    Token cur_;
};

}  // namespace detail

inline GraphExpr parse_graph_expr(const std::string& text) {
    return detail::Parser(text).parse();
}

inline std::string to_string(const GraphExpr& e) {
    auto one = [&](const char* name) {
        return std::string(name) + "(" + std::to_string(e.params[0]) + ")";
    };
    switch (e.kind) {
        case ExprKind::complete: return one("K");
        case ExprKind::edgeless: return one("Kbar");
        case ExprKind::path: return one("P");
        case ExprKind::cycle: return one("C");
        case ExprKind::spider: return one("S");
        case ExprKind::centipede: return one("W");
        case ExprKind::triangle_chain: return one("Tri");
        case ExprKind::triangle_chain_k2: return one("TriK2");
        case ExprKind::tree1: return "T1";
        case ExprKind::tree2: return "T2";
        case ExprKind::multipartite: {
            std::string out = "Kmulti(";
            for (std::size_t i = 0; i < e.multi.size(); ++i) {
                if (i) out += ", ";
                out += std::to_string(e.multi[i].first);
                if (e.multi[i].second != 1) out += "*" + std::to_string(e.multi[i].second);
            }
            return out + ")";
        }
        case ExprKind::explicit_graph: {
            std::string out = "graph{" + std::to_string(e.explicit_n) + ";";
            for (std::size_t i = 0; i < e.edges.size(); ++i) {
                out += i ? ", " : " ";
                out += std::to_string(e.edges[i].first) + "-" +
                       std::to_string(e.edges[i].second);
            }
            return out + "}";
        }
        case ExprKind::file_graph: return "file(\"" + e.path + "\")";
        case ExprKind::union_of:
        case ExprKind::zykov_of: {
            std::string out = e.kind == ExprKind::union_of ? "union(" : "zykov(";
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += ", ";
                out += to_string(e.children[i]);
            }
            return out + ")";
        }
        case ExprKind::star_of: return "star(" + to_string(e.children[0]) + ")";
        case ExprKind::edge_join_of:
            return "ej(" + to_string(e.children[0]) + ", " + std::to_string(e.params[0]) +
                   ", " + to_string(e.children[1]) + ", " + std::to_string(e.params[1]) + ")";
        case ExprKind::repeat_of:
            return "rep(" + std::to_string(e.params[0]) + ", " + to_string(e.children[0]) +
                   ")";
    }
    throw std::logic_error("to_string: unhandled expression kind");
}

}  // namespace indpoly
