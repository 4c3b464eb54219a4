#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tileguard/error.hpp"
#include "tileguard/token.hpp"

namespace tileguard {

enum class lex_error_kind {
    unterminated_string,
    unterminated_comment,
    illegal_character,
};

struct lex_error : error {
    lex_error(lex_error_kind k, int line, int column, const std::string& what_arg)
        : error(what_arg), kind(k), line(line), column(column) {}

    lex_error_kind kind;
    int line;
    int column;
};

namespace detail {

inline bool is_ident_start(unsigned char c) {
    // Any non-ASCII byte is accepted as part of an identifier so UTF-8
    // letters in real-world sources lex cleanly.
    return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

inline bool is_ident_part(unsigned char c) {
    return is_ident_start(c) || std::isdigit(c);
}

inline bool is_hex_digit(unsigned char c) {
    return std::isxdigit(c);
}

// Keywords plus the word-shaped literals true/false/null.
inline std::optional<token_kind> lookup_word(std::string_view word) {
    struct entry {
        std::string_view text;
        token_kind kind;
    };
    static const auto table = [] {
        std::vector<entry> t;
        for (std::size_t i = 0; i < token_kind_count; ++i) {
            auto k = static_cast<token_kind>(i);
            if (kind_name(k).substr(0, 3) == "KW_") t.push_back({kind_lexeme(k), k});
        }
        t.push_back({"true", token_kind::bool_lit});
        t.push_back({"false", token_kind::bool_lit});
        t.push_back({"null", token_kind::null_lit});
        std::sort(t.begin(), t.end(), [](const entry& a, const entry& b) { return a.text < b.text; });
        return t;
    }();
    auto it = std::lower_bound(table.begin(), table.end(), word,
                               [](const entry& e, std::string_view w) { return e.text < w; });
    if (it != table.end() && it->text == word) return it->kind;
    return std::nullopt;
}

class scanner {
  public:
    scanner(std::string_view src, std::string submission_id)
        : src_(src), seq_{std::move(submission_id), {}} {
        // Swallow a UTF-8 BOM if present.
        if (src_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    }

    token_sequence run() {
        while (!at_end()) {
            skip_ws_and_comments();
            if (at_end()) break;
            scan_token();
        }
        return std::move(seq_);
    }

  private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek(std::size_t k = 0) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    bool match(char expected) {
        if (peek() != expected) return false;
        advance();
        return true;
    }

    void emit(token_kind kind) { seq_.tokens.push_back({kind, tok_line_, tok_column_}); }

    [[noreturn]] void fail(lex_error_kind k, const char* what_of) {
        throw lex_error(k, tok_line_, tok_column_,
                        seq_.submission_id + ":" + std::to_string(tok_line_) + ":" +
                            std::to_string(tok_column_) + ": " + what_of);
    }

    void skip_ws_and_comments() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (!at_end() && peek() != '\n') advance();
            } else if (c == '/' && peek(1) == '*') {
                tok_line_ = line_;
                tok_column_ = column_;
                advance();
                advance();
                while (!(peek() == '*' && peek(1) == '/')) {
                    if (at_end()) fail(lex_error_kind::unterminated_comment, "unterminated block comment");
                    advance();
                }
                advance();
                advance();
            } else {
                break;
            }
        }
    }

    void scan_token() {
        tok_line_ = line_;
        tok_column_ = column_;
        char c = advance();

        if (is_ident_start(static_cast<unsigned char>(c))) {
            scan_word();
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            scan_number(c);
            return;
        }

        switch (c) {
            case '"': scan_string(); return;
            case '\'': scan_char(); return;
            case '(': emit(token_kind::lparen); return;
            case ')': emit(token_kind::rparen); return;
            case '{': emit(token_kind::lbrace); return;
            case '}': emit(token_kind::rbrace); return;
            case '[': emit(token_kind::lbracket); return;
            case ']': emit(token_kind::rbracket); return;
            case ';': emit(token_kind::semi); return;
            case ',': emit(token_kind::comma); return;
            case '@': emit(token_kind::at); return;
            case '~': emit(token_kind::tilde); return;
            case '?': emit(token_kind::question); return;
            case '.':
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    scan_number(c);
                } else if (peek() == '.' && peek(1) == '.') {
                    advance();
                    advance();
                    emit(token_kind::ellipsis);
                } else {
                    emit(token_kind::dot);
                }
                return;
            case ':': emit(match(':') ? token_kind::coloncolon : token_kind::colon); return;
            case '=': emit(match('=') ? token_kind::eq : token_kind::assign); return;
            case '!': emit(match('=') ? token_kind::ne : token_kind::bang); return;
            case '*': emit(match('=') ? token_kind::star_assign : token_kind::star); return;
            case '/': emit(match('=') ? token_kind::slash_assign : token_kind::slash); return;
            case '^': emit(match('=') ? token_kind::caret_assign : token_kind::caret); return;
            case '%': emit(match('=') ? token_kind::percent_assign : token_kind::percent); return;
            case '+':
                if (match('+')) emit(token_kind::incr);
                else if (match('=')) emit(token_kind::plus_assign);
                else emit(token_kind::plus);
                return;
            case '-':
                if (match('-')) emit(token_kind::decr);
                else if (match('=')) emit(token_kind::minus_assign);
                else if (match('>')) emit(token_kind::arrow);
                else emit(token_kind::minus);
                return;
            case '&':
                if (match('&')) emit(token_kind::and_and);
                else if (match('=')) emit(token_kind::amp_assign);
                else emit(token_kind::amp);
                return;
            case '|':
                if (match('|')) emit(token_kind::or_or);
                else if (match('=')) emit(token_kind::pipe_assign);
                else emit(token_kind::pipe);
                return;
            case '<':
                if (match('<')) emit(match('=') ? token_kind::shl_assign : token_kind::shl);
                else if (match('=')) emit(token_kind::le);
                else emit(token_kind::lt);
                return;
            case '>':
                if (peek() == '>' && peek(1) == '>') {
                    advance();
                    advance();
                    emit(match('=') ? token_kind::ushr_assign : token_kind::ushr);
                } else if (match('>')) {
                    emit(match('=') ? token_kind::shr_assign : token_kind::shr);
                } else if (match('=')) {
                    emit(token_kind::ge);
                } else {
                    emit(token_kind::gt);
                }
                return;
            default: fail(lex_error_kind::illegal_character, "illegal character");
        }
    }

    void scan_word() {
        std::size_t start = pos_ - 1;
        while (!at_end() && is_ident_part(static_cast<unsigned char>(peek()))) advance();
        std::string_view word = src_.substr(start, pos_ - start);
        emit(lookup_word(word).value_or(token_kind::ident));
    }

    // Grammar-light Java number scanning: decimal/hex/octal/binary integers,
    // underscores, and the decimal and hex float forms. The lexeme value is
    // discarded, only the INT_LIT/FLOAT_LIT distinction survives.
    void scan_number(char first) {
        bool is_float = first == '.';
        bool hex = false;
        if (first == '0' && (peek() == 'x' || peek() == 'X')) {
            hex = true;
            advance();
            while (is_hex_digit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
        } else if (first == '0' && (peek() == 'b' || peek() == 'B')) {
            advance();
            while (peek() == '0' || peek() == '1' || peek() == '_') advance();
        } else {
            while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
        }

        if (!is_float && peek() == '.' &&
            (hex ? is_hex_digit(static_cast<unsigned char>(peek(1)))
                 : !is_ident_start(static_cast<unsigned char>(peek(1))))) {
            // "1.5", "2.", "0x1.8p3" but not "1.toString()"
            is_float = true;
            advance();
            while ((hex ? is_hex_digit(static_cast<unsigned char>(peek()))
                        : static_cast<bool>(std::isdigit(static_cast<unsigned char>(peek())))) ||
                   peek() == '_')
                advance();
        }
        if (hex ? (peek() == 'p' || peek() == 'P') : (peek() == 'e' || peek() == 'E')) {
            if (std::isdigit(static_cast<unsigned char>(peek(1))) ||
                ((peek(1) == '+' || peek(1) == '-') && std::isdigit(static_cast<unsigned char>(peek(2))))) {
                is_float = true;
                advance();
                if (peek() == '+' || peek() == '-') advance();
                while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
            }
        }
        if (peek() == 'f' || peek() == 'F' || peek() == 'd' || peek() == 'D') {
            if (!hex) is_float = true;  // 0xFF stays an int; the F is a hex digit anyway
            advance();
        } else if (peek() == 'l' || peek() == 'L') {
            advance();
        }
        emit(is_float ? token_kind::float_lit : token_kind::int_lit);
    }

    void scan_string() {
        while (true) {
            if (at_end() || peek() == '\n') fail(lex_error_kind::unterminated_string, "unterminated string literal");
            char c = advance();
            if (c == '"') break;
            if (c == '\\' && !at_end()) advance();
        }
        emit(token_kind::string_lit);
    }

    void scan_char() {
        while (true) {
            if (at_end() || peek() == '\n') fail(lex_error_kind::unterminated_string, "unterminated character literal");
            char c = advance();
            if (c == '\'') break;
            if (c == '\\' && !at_end()) advance();
        }
        emit(token_kind::char_lit);
    }

    std::string_view src_;
    token_sequence seq_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    int tok_line_ = 1;
    int tok_column_ = 1;
};

}  // namespace detail

// Convert Java source text to its comment-free token sequence. The input does
// not have to be a compilable program; lexing is grammar-light. Throws
// lex_error with the offending position on malformed input.
inline token_sequence tokenize(std::string_view source_text, std::string submission_id = "") {
    return detail::scanner(source_text, std::move(submission_id)).run();
}

}  // namespace tileguard
