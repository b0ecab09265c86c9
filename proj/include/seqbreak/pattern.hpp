#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "seqbreak/signature.hpp"

namespace seqbreak {

/// Regular expressions over the slope alphabet {P, N, Z}.
///
/// Grammar:   alt := cat ('|' cat)*
///            cat := rep+
///            rep := atom ('*' | '?')?
///            atom := 'P' | 'N' | 'Z' | '(' alt ')'
/// The surface aliases '+' -> P, '-' -> N, '0' -> Z are accepted, so shape
/// queries can be typed literally, e.g. "0*(+)(-)0*(+)(-)0*" for a
/// two-peaks-and-nothing-else signature.
struct PatternAST {
    enum class Kind { kLiteral, kConcat, kAlternate, kStar, kOptional };

    Kind kind = Kind::kLiteral;
    char literal = 'Z';                                   // kLiteral only
    std::vector<std::shared_ptr<const PatternAST>> children;

    static std::shared_ptr<const PatternAST> lit(char c);
    static std::shared_ptr<const PatternAST> concat(std::shared_ptr<const PatternAST> a,
                                                    std::shared_ptr<const PatternAST> b);
    static std::shared_ptr<const PatternAST> alternate(std::shared_ptr<const PatternAST> a,
                                                       std::shared_ptr<const PatternAST> b);
    static std::shared_ptr<const PatternAST> star(std::shared_ptr<const PatternAST> c);
    static std::shared_ptr<const PatternAST> optional(std::shared_ptr<const PatternAST> c);
};

using PatternPtr = std::shared_ptr<const PatternAST>;

/// Throws SyntaxError (with byte offset) on malformed input or empty text.
PatternPtr parse_pattern(const std::string& text);

/// Canonical text for an AST; parse(unparse(p)) denotes the same language.
std::string unparse_pattern(const PatternAST& ast);

/// Thompson construction compiled once; immutable and shareable between
/// concurrent matches.
class CompiledPattern {
public:
    explicit CompiledPattern(const PatternAST& ast);

    using StateSet = std::vector<std::uint64_t>;

    StateSet start_states() const;
    void step(const StateSet& from, char symbol, StateSet& to) const;
    bool accepts(const StateSet& states) const;
    bool any(const StateSet& states) const;
    std::size_t state_count() const { return transitions_.size(); }

    bool full_match(const std::string& symbols) const;

private:
    struct State {
        int sym_edge = -1;  // target on the state's symbol, -1 if none
        char symbol = 0;
        int eps0 = -1, eps1 = -1;
    };
    int add_state();
    std::pair<int, int> build(const PatternAST& ast);
    void eps_closure(StateSet& states) const;

    std::vector<State> transitions_;
    int start_ = 0;
    int accept_ = 0;
};

/// Anchored match of the whole symbol string.
bool full_match(const PatternAST& ast, const SlopeSignature& sig);
bool full_match(const PatternAST& ast, const std::string& symbols);

/// One substring match: symbol positions plus the sample range they cover.
struct Occurrence {
    std::size_t sym_start = 0;
    std::size_t sym_end = 0;  // inclusive
    std::size_t series_start = 0;
    std::size_t series_end = 0;  // inclusive
};

/// The longest non-empty match starting at every position that has one
/// (leftmost-longest per start). Sample ranges come from the signature's
/// segment spans.
std::vector<Occurrence> find_occurrences(const PatternAST& ast, const SlopeSignature& sig);

}  // namespace seqbreak
