#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tileguard {

// The fixed token vocabulary: every Java keyword gets its own kind, all
// identifiers collapse to IDENT, literal values collapse to their literal
// kind. Comments and whitespace are never emitted. Each entry carries the
// kind name used in reports/dumps and a canonical lexeme used when token
// sequences are rendered back to compilable-looking text.
#define TILEGUARD_TOKEN_KIND_LIST(X)          \
    X(kw_abstract, "KW_ABSTRACT", "abstract") \
    X(kw_assert, "KW_ASSERT", "assert")       \
    X(kw_boolean, "KW_BOOLEAN", "boolean")    \
    X(kw_break, "KW_BREAK", "break")          \
    X(kw_byte, "KW_BYTE", "byte")             \
    X(kw_case, "KW_CASE", "case")             \
    X(kw_catch, "KW_CATCH", "catch")          \
    X(kw_char, "KW_CHAR", "char")             \
    X(kw_class, "KW_CLASS", "class")          \
    X(kw_const, "KW_CONST", "const")          \
    X(kw_continue, "KW_CONTINUE", "continue") \
    X(kw_default, "KW_DEFAULT", "default")    \
    X(kw_do, "KW_DO", "do")                   \
    X(kw_double, "KW_DOUBLE", "double")       \
    X(kw_else, "KW_ELSE", "else")             \
    X(kw_enum, "KW_ENUM", "enum")             \
    X(kw_extends, "KW_EXTENDS", "extends")    \
    X(kw_final, "KW_FINAL", "final")          \
    X(kw_finally, "KW_FINALLY", "finally")    \
    X(kw_float, "KW_FLOAT", "float")          \
    X(kw_for, "KW_FOR", "for")                \
    X(kw_goto, "KW_GOTO", "goto")             \
    X(kw_if, "KW_IF", "if")                   \
    X(kw_implements, "KW_IMPLEMENTS", "implements") \
    X(kw_import, "KW_IMPORT", "import")       \
    X(kw_instanceof, "KW_INSTANCEOF", "instanceof") \
    X(kw_int, "KW_INT", "int")                \
    X(kw_interface, "KW_INTERFACE", "interface") \
    X(kw_long, "KW_LONG", "long")             \
    X(kw_native, "KW_NATIVE", "native")       \
    X(kw_new, "KW_NEW", "new")                \
    X(kw_package, "KW_PACKAGE", "package")    \
    X(kw_private, "KW_PRIVATE", "private")    \
    X(kw_protected, "KW_PROTECTED", "protected") \
    X(kw_public, "KW_PUBLIC", "public")       \
    X(kw_return, "KW_RETURN", "return")       \
    X(kw_short, "KW_SHORT", "short")          \
    X(kw_static, "KW_STATIC", "static")       \
    X(kw_strictfp, "KW_STRICTFP", "strictfp") \
    X(kw_super, "KW_SUPER", "super")          \
    X(kw_switch, "KW_SWITCH", "switch")       \
    X(kw_synchronized, "KW_SYNCHRONIZED", "synchronized") \
    X(kw_this, "KW_THIS", "this")             \
    X(kw_throw, "KW_THROW", "throw")          \
    X(kw_throws, "KW_THROWS", "throws")       \
    X(kw_transient, "KW_TRANSIENT", "transient") \
    X(kw_try, "KW_TRY", "try")                \
    X(kw_void, "KW_VOID", "void")             \
    X(kw_volatile, "KW_VOLATILE", "volatile") \
    X(kw_while, "KW_WHILE", "while")          \
    X(ident, "IDENT", "id")                   \
    X(int_lit, "INT_LIT", "1")                \
    X(float_lit, "FLOAT_LIT", "1.0")          \
    X(string_lit, "STRING_LIT", "\"s\"")      \
    X(char_lit, "CHAR_LIT", "'c'")            \
    X(bool_lit, "BOOL_LIT", "true")           \
    X(null_lit, "NULL_LIT", "null")           \
    X(lparen, "LPAREN", "(")                  \
    X(rparen, "RPAREN", ")")                  \
    X(lbrace, "LBRACE", "{")                  \
    X(rbrace, "RBRACE", "}")                  \
    X(lbracket, "LBRACKET", "[")              \
    X(rbracket, "RBRACKET", "]")              \
    X(semi, "SEMI", ";")                      \
    X(comma, "COMMA", ",")                    \
    X(dot, "DOT", ".")                        \
    X(ellipsis, "ELLIPSIS", "...")            \
    X(at, "AT", "@")                          \
    X(coloncolon, "COLONCOLON", "::")         \
    X(assign, "ASSIGN", "=")                  \
    X(gt, "GT", ">")                          \
    X(lt, "LT", "<")                          \
    X(bang, "NOT", "!")                       \
    X(tilde, "TILDE", "~")                    \
    X(question, "QUESTION", "?")              \
    X(colon, "COLON", ":")                    \
    X(arrow, "ARROW", "->")                   \
    X(eq, "EQ", "==")                         \
    X(ge, "GE", ">=")                         \
    X(le, "LE", "<=")                         \
    X(ne, "NE", "!=")                         \
    X(and_and, "AND_AND", "&&")               \
    X(or_or, "OR_OR", "||")                   \
    X(incr, "INCR", "++")                     \
    X(decr, "DECR", "--")                     \
    X(plus, "PLUS", "+")                      \
    X(minus, "MINUS", "-")                    \
    X(star, "STAR", "*")                      \
    X(slash, "SLASH", "/")                    \
    X(amp, "AMP", "&")                        \
    X(pipe, "PIPE", "|")                      \
    X(caret, "CARET", "^")                    \
    X(percent, "PERCENT", "%")                \
    X(shl, "SHL", "<<")                       \
    X(shr, "SHR", ">>")                       \
    X(ushr, "USHR", ">>>")                    \
    X(plus_assign, "PLUS_ASSIGN", "+=")       \
    X(minus_assign, "MINUS_ASSIGN", "-=")     \
    X(star_assign, "STAR_ASSIGN", "*=")       \
    X(slash_assign, "SLASH_ASSIGN", "/=")     \
    X(amp_assign, "AMP_ASSIGN", "&=")         \
    X(pipe_assign, "PIPE_ASSIGN", "|=")       \
    X(caret_assign, "CARET_ASSIGN", "^=")     \
    X(percent_assign, "PERCENT_ASSIGN", "%=") \
    X(shl_assign, "SHL_ASSIGN", "<<=")        \
    X(shr_assign, "SHR_ASSIGN", ">>=")        \
    X(ushr_assign, "USHR_ASSIGN", ">>>=")

enum class token_kind : std::uint8_t {
#define TILEGUARD_X(id, name, lexeme) id,
    TILEGUARD_TOKEN_KIND_LIST(TILEGUARD_X)
#undef TILEGUARD_X
};

namespace detail {

#define TILEGUARD_X(id, name, lexeme) std::string_view{name},
inline constexpr std::array kind_names = {TILEGUARD_TOKEN_KIND_LIST(TILEGUARD_X)};
#undef TILEGUARD_X

#define TILEGUARD_X(id, name, lexeme) std::string_view{lexeme},
inline constexpr std::array kind_lexemes = {TILEGUARD_TOKEN_KIND_LIST(TILEGUARD_X)};
#undef TILEGUARD_X

}  // namespace detail

inline constexpr std::size_t token_kind_count = detail::kind_names.size();

constexpr std::string_view kind_name(token_kind k) {
    return detail::kind_names[static_cast<std::size_t>(k)];
}

// Canonical lexeme for a kind; identifiers and literals get a fixed
// representative value.
constexpr std::string_view kind_lexeme(token_kind k) {
    return detail::kind_lexemes[static_cast<std::size_t>(k)];
}

// The full fixed vocabulary in a deterministic order. Defines the dimensions
// of the term-frequency vector space.
inline std::span<const std::string_view> token_vocabulary() {
    return {detail::kind_names.data(), detail::kind_names.size()};
}

constexpr bool is_literal_kind(token_kind k) {
    switch (k) {
        case token_kind::int_lit:
        case token_kind::float_lit:
        case token_kind::string_lit:
        case token_kind::char_lit:
        case token_kind::bool_lit:
        case token_kind::null_lit:
            return true;
        default:
            return false;
    }
}

struct token {
    token_kind kind;
    int line;    // 1-based
    int column;  // 1-based

    bool operator==(const token&) const = default;
};

// Ordered, comment-free lexical tokens of one submission. This is the unit
// both the IR filter and the string matchers operate on.
struct token_sequence {
    std::string submission_id;
    std::vector<token> tokens;

    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }
};

inline std::vector<token_kind> kinds_of(const token_sequence& seq) {
    std::vector<token_kind> ks;
    ks.reserve(seq.tokens.size());
    for (const token& t : seq.tokens) ks.push_back(t.kind);
    return ks;
}

}  // namespace tileguard
