#include "seqbreak/pattern.hpp"

#include <algorithm>

#include "seqbreak/errors.hpp"

namespace seqbreak {

std::shared_ptr<const PatternAST> PatternAST::lit(char c) {
    auto node = std::make_shared<PatternAST>();
    node->kind = Kind::kLiteral;
    node->literal = c;
    return node;
}

static std::shared_ptr<const PatternAST> binary(PatternAST::Kind kind, PatternPtr a, PatternPtr b) {
    auto node = std::make_shared<PatternAST>();
    node->kind = kind;
    node->children = {std::move(a), std::move(b)};
    return node;
}

static std::shared_ptr<const PatternAST> unary(PatternAST::Kind kind, PatternPtr c) {
    auto node = std::make_shared<PatternAST>();
    node->kind = kind;
    node->children = {std::move(c)};
    return node;
}

std::shared_ptr<const PatternAST> PatternAST::concat(PatternPtr a, PatternPtr b) {
    return binary(Kind::kConcat, std::move(a), std::move(b));
}
std::shared_ptr<const PatternAST> PatternAST::alternate(PatternPtr a, PatternPtr b) {
    return binary(Kind::kAlternate, std::move(a), std::move(b));
}
std::shared_ptr<const PatternAST> PatternAST::star(PatternPtr c) {
    return unary(Kind::kStar, std::move(c));
}
std::shared_ptr<const PatternAST> PatternAST::optional(PatternPtr c) {
    return unary(Kind::kOptional, std::move(c));
}

namespace {

// Recursive-descent parser for
//   alt := cat ('|' cat)*   cat := rep+   rep := atom ('*'|'?')?
//   atom := 'P'|'N'|'Z'|'+'|'-'|'0'|'(' alt ')'
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    PatternPtr parse() {
        if (text_.empty()) throw SyntaxError("empty pattern", 0);
        PatternPtr ast = parse_alt();
        if (pos_ != text_.size())
            throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return ast;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    static bool is_literal(char c) {
        return c == 'P' || c == 'N' || c == 'Z' || c == '+' || c == '-' || c == '0';
    }
    static char canonical(char c) {
        if (c == '+') return 'P';
        if (c == '-') return 'N';
        if (c == '0') return 'Z';
        return c;
    }

    PatternPtr parse_alt() {
        PatternPtr left = parse_cat();
        while (!at_end() && peek() == '|') {
            ++pos_;
            left = PatternAST::alternate(std::move(left), parse_cat());
        }
        return left;
    }

    PatternPtr parse_cat() {
        PatternPtr left = parse_rep();
        while (!at_end() && (is_literal(peek()) || peek() == '(')) {
            left = PatternAST::concat(std::move(left), parse_rep());
        }
        return left;
    }

    PatternPtr parse_rep() {
        PatternPtr atom = parse_atom();
        if (!at_end() && (peek() == '*' || peek() == '?')) {
            atom = peek() == '*' ? PatternAST::star(std::move(atom))
                                 : PatternAST::optional(std::move(atom));
            ++pos_;
        }
        return atom;
    }

    PatternPtr parse_atom() {
        if (at_end()) throw SyntaxError("expected literal or '('", pos_);
        char c = peek();
        if (is_literal(c)) {
            ++pos_;
            return PatternAST::lit(canonical(c));
        }
        if (c == '(') {
            ++pos_;
            PatternPtr inner = parse_alt();
            if (at_end() || peek() != ')') throw SyntaxError("unbalanced '('", pos_);
            ++pos_;
            return inner;
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

void unparse(const PatternAST& ast, std::string& out) {
    switch (ast.kind) {
        case PatternAST::Kind::kLiteral:
            out.push_back(ast.literal);
            return;
        case PatternAST::Kind::kConcat:
            for (const auto& c : ast.children) {
                const bool parens = c->kind == PatternAST::Kind::kAlternate;
                if (parens) out.push_back('(');
                unparse(*c, out);
                if (parens) out.push_back(')');
            }
            return;
        case PatternAST::Kind::kAlternate:
            for (std::size_t k = 0; k < ast.children.size(); ++k) {
                if (k) out.push_back('|');
                unparse(*ast.children[k], out);
            }
            return;
        case PatternAST::Kind::kStar:
        case PatternAST::Kind::kOptional: {
            const PatternAST& c = *ast.children[0];
            const bool parens = c.kind != PatternAST::Kind::kLiteral;
            if (parens) out.push_back('(');
            unparse(c, out);
            if (parens) out.push_back(')');
            out.push_back(ast.kind == PatternAST::Kind::kStar ? '*' : '?');
            return;
        }
    }
}

}  // namespace

PatternPtr parse_pattern(const std::string& text) { return Parser(text).parse(); }

std::string unparse_pattern(const PatternAST& ast) {
    std::string out;
    unparse(ast, out);
    return out;
}

CompiledPattern::CompiledPattern(const PatternAST& ast) {
    auto [s, a] = build(ast);
    start_ = s;
    accept_ = a;
}

int CompiledPattern::add_state() {
    transitions_.emplace_back();
    return static_cast<int>(transitions_.size()) - 1;
}

// Thompson construction; every fragment has one entry and one exit state.
std::pair<int, int> CompiledPattern::build(const PatternAST& ast) {
    switch (ast.kind) {
        case PatternAST::Kind::kLiteral: {
            int s = add_state();
            int a = add_state();
            transitions_[s].symbol = ast.literal;
            transitions_[s].sym_edge = a;
            return {s, a};
        }
        case PatternAST::Kind::kConcat: {
            auto [s1, a1] = build(*ast.children[0]);
            auto [s2, a2] = build(*ast.children[1]);
            transitions_[a1].eps0 = s2;
            return {s1, a2};
        }
        case PatternAST::Kind::kAlternate: {
            int s = add_state();
            int a = add_state();
            auto [s1, a1] = build(*ast.children[0]);
            auto [s2, a2] = build(*ast.children[1]);
            transitions_[s].eps0 = s1;
            transitions_[s].eps1 = s2;
            transitions_[a1].eps0 = a;
            transitions_[a2].eps0 = a;
            return {s, a};
        }
        case PatternAST::Kind::kStar: {
            int s = add_state();
            int a = add_state();
            auto [cs, ca] = build(*ast.children[0]);
            transitions_[s].eps0 = cs;
            transitions_[s].eps1 = a;
            transitions_[ca].eps0 = cs;
            transitions_[ca].eps1 = a;
            return {s, a};
        }
        case PatternAST::Kind::kOptional: {
            int s = add_state();
            int a = add_state();
            auto [cs, ca] = build(*ast.children[0]);
            transitions_[s].eps0 = cs;
            transitions_[s].eps1 = a;
            transitions_[ca].eps0 = a;
            return {s, a};
        }
    }
    throw Error("unreachable pattern kind");
}

namespace {

inline bool get_bit(const std::vector<std::uint64_t>& set, int i) {
    return (set[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
}
inline void set_bit(std::vector<std::uint64_t>& set, int i) {
    set[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

}  // namespace

void CompiledPattern::eps_closure(StateSet& states) const {
    std::vector<int> work;
    for (std::size_t w = 0; w < states.size(); ++w) {
        std::uint64_t bits = states[w];
        while (bits) {
            int i = static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
            bits &= bits - 1;
            work.push_back(i);
        }
    }
    while (!work.empty()) {
        int i = work.back();
        work.pop_back();
        for (int next : {transitions_[i].eps0, transitions_[i].eps1}) {
            if (next >= 0 && !get_bit(states, next)) {
                set_bit(states, next);
                work.push_back(next);
            }
        }
    }
}

CompiledPattern::StateSet CompiledPattern::start_states() const {
    StateSet states((transitions_.size() + 63) / 64, 0);
    set_bit(states, start_);
    eps_closure(states);
    return states;
}

void CompiledPattern::step(const StateSet& from, char symbol, StateSet& to) const {
    to.assign(from.size(), 0);
    for (std::size_t w = 0; w < from.size(); ++w) {
        std::uint64_t bits = from[w];
        while (bits) {
            int i = static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
            bits &= bits - 1;
            if (transitions_[i].sym_edge >= 0 && transitions_[i].symbol == symbol)
                set_bit(to, transitions_[i].sym_edge);
        }
    }
    eps_closure(to);
}

bool CompiledPattern::accepts(const StateSet& states) const { return get_bit(states, accept_); }

bool CompiledPattern::any(const StateSet& states) const {
    for (std::uint64_t w : states)
        if (w) return true;
    return false;
}

bool CompiledPattern::full_match(const std::string& symbols) const {
    StateSet cur = start_states();
    StateSet next;
    for (char c : symbols) {
        step(cur, c, next);
        cur.swap(next);
        if (!any(cur)) return false;
    }
    return accepts(cur);
}

bool full_match(const PatternAST& ast, const std::string& symbols) {
    return CompiledPattern(ast).full_match(symbols);
}

bool full_match(const PatternAST& ast, const SlopeSignature& sig) {
    return full_match(ast, sig.symbols);
}

std::vector<Occurrence> find_occurrences(const PatternAST& ast, const SlopeSignature& sig) {
    const CompiledPattern nfa(ast);
    const std::string& w = sig.symbols;
    std::vector<Occurrence> out;

    for (std::size_t i = 0; i < w.size(); ++i) {
        CompiledPattern::StateSet cur = nfa.start_states();
        CompiledPattern::StateSet next;
        long long best_end = -1;
        for (std::size_t j = i; j < w.size(); ++j) {
            nfa.step(cur, w[j], next);
            cur.swap(next);
            if (!nfa.any(cur)) break;
            if (nfa.accepts(cur)) best_end = static_cast<long long>(j);
        }
        if (best_end >= 0) {
            const auto end = static_cast<std::size_t>(best_end);
            out.push_back({i, end, sig.segment_spans[i].first, sig.segment_spans[end].second});
        }
    }
    return out;
}

}  // namespace seqbreak
