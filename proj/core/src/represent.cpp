#include "cloneseek/represent.hpp"

#include <cassert>

#include "cloneseek/lexer.hpp"

namespace cloneseek {

namespace {

std::vector<std::string> raw_tokens(const std::vector<std::string>& body) {
    std::vector<std::string> out;
    for (const Token& t : lex(body)) out.push_back(t.text);
    return out;
}

bool is_literal(const Token& t) {
    if (t.kind == TokenKind::Number || t.kind == TokenKind::String) return true;
    if (t.kind == TokenKind::Keyword) {
        return t.text == "true" || t.text == "false" || t.text == "null";
    }
    return false;
}

}  // namespace

TokenStream tokenize_r0(const std::vector<std::string>& body) {
    return {Rep::R0, raw_tokens(body)};
}

// Layout differences are already erased by normalize_layout upstream, so the
// Type-1 view coincides with the raw token stream.
TokenStream tokenize_r1(const std::vector<std::string>& body) {
    return {Rep::R1, raw_tokens(body)};
}

TokenStream tokenize_r2(const std::vector<std::string>& body) {
    TokenStream out{Rep::R2, {}};
    for (const Token& t : lex(body)) {
        if (t.kind == TokenKind::Identifier) out.tokens.push_back("ID");
        else if (is_literal(t)) out.tokens.push_back("LIT");
        else out.tokens.push_back(t.text);
    }
    return out;
}

TokenStream tokenize_r3(const std::vector<std::string>& body) {
    std::vector<Token> toks = lex(body);
    TokenStream out{Rep::R3, {}};
    out.tokens.reserve(toks.size());
    for (std::size_t i = 0; i < toks.size(); ++i) {
        const Token& t = toks[i];
        if (t.kind == TokenKind::Keyword && is_type_keyword(t.text)) {
            out.tokens.push_back("TY");
            continue;
        }
        if (t.kind == TokenKind::Identifier) {
            // Type-position heuristic: an identifier directly followed by
            // another identifier sits in declaration position.
            bool type_pos = i + 1 < toks.size() &&
                            toks[i + 1].kind == TokenKind::Identifier;
            out.tokens.push_back(type_pos ? "TY" : "ID");
            continue;
        }
        if (is_literal(t)) {
            out.tokens.push_back("LIT");
            continue;
        }
        out.tokens.push_back(t.text);
    }
    return out;
}

TokenStream tokenize(const std::vector<std::string>& body, Rep rep) {
    switch (rep) {
        case Rep::R0: return tokenize_r0(body);
        case Rep::R1: return tokenize_r1(body);
        case Rep::R2: return tokenize_r2(body);
        case Rep::R3: return tokenize_r3(body);
    }
    return {};
}

NgramSet ngrams(const TokenStream& stream, int n) {
    assert(n >= 1);
    NgramSet out;
    out.representation = stream.representation;
    out.n = n;
    const auto& toks = stream.tokens;
    if (static_cast<int>(toks.size()) < n) return out;
    for (std::size_t i = 0; i + n <= toks.size(); ++i) {
        std::string gram = toks[i];
        for (int k = 1; k < n; ++k) {
            gram += kGramSeparator;
            gram += toks[i + k];
        }
        ++out.grams[gram];
    }
    return out;
}

std::array<NgramSet, kNumReps> all_ngram_sets(const std::vector<std::string>& body,
                                              const std::array<int, kNumReps>& sizes) {
    std::array<NgramSet, kNumReps> out;
    for (int r = 0; r < kNumReps; ++r) {
        out[r] = ngrams(tokenize(body, static_cast<Rep>(r)), sizes[r]);
    }
    return out;
}

}  // namespace cloneseek
