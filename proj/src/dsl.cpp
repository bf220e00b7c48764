#include "dehn/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dehn {

namespace {

enum class Tok { End, Int, Ident, LParen, RParen, LBrace, RBrace, Comma, Semi, Eq, Slash, Plus, Minus, DotDot };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    Int value;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& msg) const {
        throw SyntaxError(tok_.line, tok_.col, msg);
    }

private:
    const std::string& s_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;

    int take() {
        if (i_ >= s_.size()) return -1;
        char c = s_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    int look(size_t off = 0) const { return i_ + off < s_.size() ? s_[i_ + off] : -1; }

    void advance() {
        while (look() != -1 && std::isspace(look())) take();
        if (look() == '#') {  // comment to end of line
            while (look() != -1 && look() != '\n') take();
            advance();
            return;
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        int c = look();
        if (c == -1) {
            tok_.kind = Tok::End;
            return;
        }
        auto one = [&](Tok k) {
            tok_.kind = k;
            tok_.text = char(take());
        };
        if (std::isdigit(c) || (c == '-' && std::isdigit(look(1)))) {
            std::string num;
            if (c == '-') num += char(take());
            while (std::isdigit(look())) num += char(take());
            tok_.kind = Tok::Int;
            tok_.text = num;
            tok_.value = Int(num);
            return;
        }
        if (std::isalpha(c) || c == '_') {
            std::string id;
            while (std::isalnum(look()) || look() == '_') id += char(take());
            tok_.kind = Tok::Ident;
            tok_.text = id;
            return;
        }
        switch (c) {
            case '(': one(Tok::LParen); return;
            case ')': one(Tok::RParen); return;
            case '{': one(Tok::LBrace); return;
            case '}': one(Tok::RBrace); return;
            case ',': one(Tok::Comma); return;
            case ';': one(Tok::Semi); return;
            case '=': one(Tok::Eq); return;
            case '/': one(Tok::Slash); return;
            case '+': one(Tok::Plus); return;
            case '-': one(Tok::Minus); return;
            case '.':
                if (look(1) == '.') {
                    take();
                    take();
                    tok_.kind = Tok::DotDot;
                    tok_.text = "..";
                    return;
                }
                break;
        }
        throw SyntaxError(line_, col_, std::string("unexpected character '") + char(c) + "'");
    }
};

class Parser {
public:
    Lexer& lex;
    explicit Parser(Lexer& l) : lex(l) {}

    KnotPtr expr() {
        Token t = expect(Tok::Ident, "knot constructor");
        if (t.text == "U") return KnotExpr::unknot();
        if (t.text == "T") return torus();
        if (t.text == "C") return cable();
        if (t.text == "Sat") return satellite();
        if (t.text == "Sum") return sum();
        if (t.text == "Hyp") return hyp();
        throw SyntaxError(t.line, t.col, "expected one of U, T, C, Sat, Sum, Hyp; got '" + t.text + "'");
    }

    Slope slope() {
        Token p = expect(Tok::Int, "slope numerator");
        Int num = p.value, den = 1;
        if (lex.peek().kind == Tok::Slash) {
            lex.next();
            den = expect(Tok::Int, "slope denominator").value;
        }
        if (num == 0 && den == 0) throw SyntaxError(p.line, p.col, "0/0 is not a slope");
        return Slope(num, den);
    }

    void expect_end() {
        if (lex.peek().kind != Tok::End) lex.error("trailing input after expression");
    }

private:
    Token expect(Tok k, const char* what) {
        if (lex.peek().kind != k) lex.error(std::string("expected ") + what);
        return lex.next();
    }

    Int integer() { return expect(Tok::Int, "integer").value; }

    KnotPtr torus() {
        expect(Tok::LParen, "'('");
        Int m = integer();
        expect(Tok::Comma, "','");
        Int n = integer();
        expect(Tok::RParen, "')'");
        return KnotExpr::torus(std::move(m), std::move(n));
    }

    KnotPtr cable() {
        expect(Tok::LParen, "'('");
        Int m = integer();
        expect(Tok::Comma, "','");
        Int n = integer();
        expect(Tok::Semi, "';'");
        KnotPtr c = expr();
        expect(Tok::RParen, "')'");
        return KnotExpr::cable(std::move(m), std::move(n), std::move(c));
    }

    KnotPtr sum() {
        expect(Tok::LParen, "'('");
        std::vector<KnotPtr> parts;
        parts.push_back(expr());
        while (lex.peek().kind == Tok::Comma) {
            lex.next();
            parts.push_back(expr());
        }
        expect(Tok::RParen, "')'");
        return KnotExpr::sum(std::move(parts));
    }

    bool boolean() {
        Token t = expect(Tok::Ident, "true or false");
        if (t.text == "true") return true;
        if (t.text == "false") return false;
        throw SyntaxError(t.line, t.col, "expected true or false");
    }

    std::vector<Slope> slope_set() {
        expect(Tok::LBrace, "'{'");
        std::vector<Slope> out;
        out.push_back(slope());
        while (lex.peek().kind == Tok::Comma) {
            lex.next();
            out.push_back(slope());
        }
        expect(Tok::RBrace, "'}'");
        return out;
    }

    DegeneracyLocus delta_value() {
        Token b = expect(Tok::Int, "degeneracy coefficient");
        Token mu = expect(Tok::Ident, "'mu'");
        if (mu.text != "mu") throw SyntaxError(mu.line, mu.col, "expected 'mu'");
        DegeneracyLocus d;
        d.b = b.value;
        d.form = DegeneracyLocus::Form::BMu;
        if (lex.peek().kind == Tok::Plus) {
            lex.next();
            Token lam = expect(Tok::Ident, "'lambda'");
            if (lam.text != "lambda") throw SyntaxError(lam.line, lam.col, "expected 'lambda'");
            d.form = DegeneracyLocus::Form::BMuPlusLambda;
        }
        return d;
    }

    KnotPtr hyp() {
        expect(Tok::LParen, "'('");
        HypAttrs h;
        std::string name;
        if (lex.peek().kind != Tok::RParen) {
            while (true) {
                Token key = expect(Tok::Ident, "attribute key");
                expect(Tok::Eq, "'='");
                hyp_attr(key, h, name);
                if (lex.peek().kind != Tok::Comma) break;
                lex.next();
            }
        }
        expect(Tok::RParen, "')'");
        return KnotExpr::hyp_atom(std::move(h), std::move(name));
    }

    void hyp_attr(const Token& key, HypAttrs& h, std::string& name) {
        const std::string& k = key.text;
        if (k == "name") {
            name = expect(Tok::Ident, "identifier").text;
        } else if (k == "genus") {
            h.genus = integer();
        } else if (k == "fibred") {
            h.fibred = boolean();
        } else if (k == "fdtc") {
            Token t = lex.next();
            if (t.kind == Tok::Plus) h.fdtc = FdtcSign::Positive;
            else if (t.kind == Tok::Minus) h.fdtc = FdtcSign::Negative;
            else if (t.kind == Tok::Int && t.value == 0) h.fdtc = FdtcSign::Zero;
            else throw SyntaxError(t.line, t.col, "fdtc takes +, - or 0");
        } else if (k == "plsk") {
            Token t = lex.next();
            if (t.kind == Tok::Plus || (t.kind == Tok::Ident && t.text == "true"))
                h.l_space_knot = LSpaceKnotSign::Positive;
            else if (t.kind == Tok::Minus)
                h.l_space_knot = LSpaceKnotSign::Negative;
            else
                throw SyntaxError(t.line, t.col, "plsk takes + or - (the sign of the L-space knot)");
        } else if (k == "alt") {
            h.alternating = boolean();
        } else if (k == "pf") {
            h.persistently_foliar = boolean();
        } else if (k == "delta") {
            h.degeneracy_locus = delta_value();
        } else if (k == "nlobc") {
            h.non_lo_branched_cover = boolean();
        } else if (k == "lo") {
            h.known_lo_slopes = slope_set();
        } else if (k == "nlo") {
            h.known_not_lo_slopes = slope_set();
        } else {
            throw UnknownAttributeError(key.line, key.col,
                                        "unknown atom attribute '" + k + "'");
        }
    }

    KnotPtr satellite() {
        expect(Tok::LParen, "'('");
        PatternAttrs p;
        bool have_w = false;
        while (true) {
            Token key = expect(Tok::Ident, "attribute key");
            expect(Tok::Eq, "'='");
            pattern_attr(key, p, have_w);
            if (lex.peek().kind != Tok::Comma) break;
            lex.next();
        }
        if (!have_w) lex.error("satellite pattern requires the winding number attribute w");
        expect(Tok::Semi, "';'");
        KnotPtr c = expr();
        expect(Tok::RParen, "')'");
        return KnotExpr::satellite(std::move(p), std::move(c));
    }

    void pattern_attr(const Token& key, PatternAttrs& p, bool& have_w) {
        const std::string& k = key.text;
        if (k == "w") {
            p.winding = integer();
            have_w = true;
        } else if (k == "braided") {
            p.braided = boolean();
        } else if (k == "obb") {
            expect(Tok::LParen, "'('");
            ObbTriple o;
            o.w = integer();
            expect(Tok::Comma, "','");
            o.b = integer();
            expect(Tok::Comma, "','");
            o.t = integer();
            expect(Tok::RParen, "')'");
            p.one_bridge_braid = o;
        } else if (k == "sts") {
            p.solid_torus_surgery = boolean();
        } else if (k == "cabled") {
            p.cabled = boolean();
        } else if (k == "atoroidal") {
            p.exterior_atoroidal = boolean();
        } else if (k == "closure") {
            p.pattern_closure = expr();
        } else if (k == "cgenus") {
            p.closure_genus = integer();
        } else {
            throw UnknownAttributeError(key.line, key.col,
                                        "unknown pattern attribute '" + k + "'");
        }
    }
};

}  // namespace

KnotPtr parse_expr(const std::string& text) {
    Lexer lex(text);
    Parser p(lex);
    KnotPtr e = p.expr();
    p.expect_end();
    return validate(e);
}

Slope parse_slope(const std::string& text) {
    Lexer lex(text);
    Parser p(lex);
    Slope s = p.slope();
    p.expect_end();
    return s;
}

const KnotPtr* DslDocument::find(const std::string& name) const {
    for (const auto& [n, k] : definitions)
        if (n == name) return &k;
    return nullptr;
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

}  // namespace

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    Lexer lex(text);
    auto integer = [&]() {
        if (lex.peek().kind != Tok::Int) lex.error("expected integer");
        return lex.next().value;
    };
    while (true) {
        Int a = integer();
        if (lex.peek().kind == Tok::DotDot) {
            lex.next();
            Int b = integer();
            if (b < a) lex.error("descending range");
            for (Int x = a; x <= b; ++x) out.push_back(x);
        } else {
            out.push_back(a);
        }
        if (lex.peek().kind != Tok::Comma) break;
        lex.next();
    }
    if (lex.peek().kind != Tok::End) lex.error("trailing input in integer list");
    return out;
}

std::vector<Slope> slope_grid(const std::vector<Int>& ps, const std::vector<Int>& qs) {
    std::vector<Slope> out;
    for (const Int& p : ps) {
        for (const Int& q : qs) {
            if (q == 0) continue;
            if (boost::multiprecision::gcd(boost::multiprecision::abs(p),
                                           boost::multiprecision::abs(q)) != 1)
                continue;
            Slope s(p, q);
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        }
    }
    return out;
}

DslDocument parse_document(const std::string& text) {
    DslDocument doc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::vector<std::string> words = split_words(line);
        if (words.empty()) continue;
        if (words[0] == "def") {
            // def <name> = <expr...>
            if (words.size() < 4 || words[2] != "=")
                throw SyntaxError(lineno, 1, "expected: def <name> = <expr>");
            if (doc.find(words[1]))
                throw SyntaxError(lineno, 1, "duplicate definition '" + words[1] + "'");
            std::string rest;
            for (size_t i = 3; i < words.size(); ++i) rest += words[i] + " ";
            try {
                doc.definitions.emplace_back(words[1], parse_expr(rest));
            } catch (const ParseError& e) {
                throw SyntaxError(lineno, e.column, e.what());
            }
        } else if (words[0] == "query") {
            if (words.size() < 3) throw SyntaxError(lineno, 1, "expected: query <name> <slopes>");
            QueryLine q;
            q.name = words[1];
            if (!doc.find(q.name))
                throw SyntaxError(lineno, 1, "query references undefined name '" + q.name + "'");
            // words up to the first flag form the slope spec
            std::string spec;
            size_t i = 2;
            for (; i < words.size() && words[i].rfind("--", 0) != 0; ++i) spec += words[i];
            if (spec.empty()) throw SyntaxError(lineno, 1, "missing slope specification");
            try {
                if (spec.rfind("p=", 0) == 0) {
                    auto qpos = spec.find("q=");
                    if (qpos == std::string::npos)
                        throw SyntaxError(lineno, 1, "grid spec requires p=<ints> q=<ints>");
                    auto ps = parse_int_list(spec.substr(2, qpos - 2));
                    auto qs = parse_int_list(spec.substr(qpos + 2));
                    q.slopes = slope_grid(ps, qs);
                } else if (spec.front() == '{') {
                    if (spec.back() != '}') throw SyntaxError(lineno, 1, "unterminated slope list");
                    std::string body = spec.substr(1, spec.size() - 2);
                    std::string item;
                    std::istringstream bs(body);
                    while (std::getline(bs, item, ','))
                        if (!item.empty()) q.slopes.push_back(parse_slope(item));
                } else {
                    q.slopes.push_back(parse_slope(spec));
                }
            } catch (const ParseError& e) {
                throw SyntaxError(lineno, e.column, e.what());
            }
            for (; i < words.size(); ++i) {
                const std::string& f = words[i];
                if (f == "--trace") {
                    q.trace = true;
                } else if (f == "--assume-conjecture-1.6") {
                    q.assume_ctf_conjecture = true;
                } else if (f.rfind("--depth=", 0) == 0) {
                    q.depth = std::stoi(f.substr(8));
                } else {
                    throw SyntaxError(lineno, 1, "unknown query flag '" + f + "'");
                }
            }
            doc.queries.push_back(std::move(q));
        } else {
            throw SyntaxError(lineno, 1, "expected 'def' or 'query', got '" + words[0] + "'");
        }
    }
    return doc;
}

}  // namespace dehn
