#pragma once

#include <string>
#include <vector>

namespace cloneseek {

enum class TokenKind {
    Identifier,
    Keyword,
    Number,
    String,     // "..." and '...' literals, quotes included
    Operator,   // +, ==, ->, ...
    Punct,      // ( ) { } [ ] ; , . @
};

struct Token {
    TokenKind kind;
    std::string text;
    int line = 0;  // 1-based line of the token's first character
};

/// Tolerant Java-syntax lexer. Input must already be comment-free;
/// comment delimiters that survive are lexed as operator characters.
std::vector<Token> lex(const std::vector<std::string>& lines);

bool is_java_keyword(const std::string& word);

/// Primitive/void type keywords (int, long, boolean, ...).
bool is_type_keyword(const std::string& word);

}  // namespace cloneseek
