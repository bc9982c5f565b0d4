#include "pfaff/document.hpp"

#include "pfaff/error.hpp"

#include <cctype>
#include <cstdio>
#include <map>
#include <set>

namespace pfaff {

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        std::size_t j = i;
        if (std::isalpha(c) || c == '_') {
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\'')) ++j;
            t.kind = Tok::ident;
        } else if (std::isdigit(c)) {
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Tok::number;
        } else if (std::string_view("+-*/^()[],;=").find(static_cast<char>(c)) != std::string_view::npos) {
            j = i + 1;
            t.kind = Tok::punct;
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
        }
        t.text = std::string(src.substr(i, j - i));
        advance(j - i);
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

// Function part plus 1-form part; products of two 1-forms are rejected.
struct Value {
    Polynomial function;
    std::vector<Polynomial> form;

    explicit Value(std::size_t n) : function(n), form(n, Polynomial(n)) {}
    bool has_form() const {
        for (const auto& c : form) {
            if (!c.is_zero()) return true;
        }
        return false;
    }
};

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    SystemDocument run() {
        expect_keyword("chart");
        while (peek().kind == Tok::ident) {
            const Token& t = next();
            declare(t);
            doc_.chart.push_back(t.text);
        }
        if (doc_.chart.empty()) fail(peek(), "chart needs at least one coordinate");
        expect(";");
        const std::set<std::string> chart(doc_.chart.begin(), doc_.chart.end());
        for (const auto& x : doc_.chart) {
            if (chart.count("d" + x)) fail(tokens_[0], "chart name d" + x + " shadows the differential of " + x);
        }
        while (peek().kind != Tok::end) {
            const Token& kw = next();
            if (kw.kind != Tok::ident) fail(kw, "expected a declaration, found '" + kw.text + "'");
            if (kw.text == "form") {
                parse_form();
            } else if (kw.text == "system") {
                parse_system();
            } else if (kw.text == "point") {
                parse_point();
            } else if (kw.text == "seed") {
                parse_seed();
            } else if (kw.text == "chart") {
                fail(kw, "chart declared twice");
            } else {
                fail(kw, "unknown declaration '" + kw.text + "'");
            }
        }
        if (doc_.systems.empty()) fail(peek(), "no system declared");
        return std::move(doc_);
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    SystemDocument doc_;
    std::set<std::string> names_;
    std::map<std::string, std::size_t> forms_;

    std::size_t n() const { return doc_.chart.size(); }
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool accept(std::string_view p) {
        if (peek().kind == Tok::punct && peek().text == p) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }
    static std::string describe(const Token& t) { return t.kind == Tok::end ? "end of input" : "'" + t.text + "'"; }
    void expect(std::string_view p) {
        if (!accept(p)) fail(peek(), "expected '" + std::string(p) + "', found " + describe(peek()));
    }
    void expect_keyword(std::string_view k) {
        if (peek().kind != Tok::ident || peek().text != k) {
            fail(peek(), "expected '" + std::string(k) + "', found " + describe(peek()));
        }
        ++pos_;
    }
    const Token& expect_ident() {
        if (peek().kind != Tok::ident) fail(peek(), "expected a name, found " + describe(peek()));
        return next();
    }
    std::optional<std::size_t> chart_index(const std::string& name) const {
        for (std::size_t i = 0; i < doc_.chart.size(); ++i) {
            if (doc_.chart[i] == name) return i;
        }
        return std::nullopt;
    }
    void declare(const Token& t) {
        if (t.text == "d") fail(t, "'d' is reserved for differentials");
        if (!names_.insert(t.text).second) fail(t, "duplicate name '" + t.text + "'");
        if (t.text.size() > 1 && t.text[0] == 'd' && chart_index(t.text.substr(1))) {
            fail(t, "name '" + t.text + "' shadows a coordinate differential");
        }
    }

    void parse_form() {
        const Token& name = expect_ident();
        declare(name);
        expect("=");
        const Token& start = peek();
        const Value v = expression();
        expect(";");
        if (!v.function.is_zero()) {
            fail(start, v.has_form() ? "expression mixes degrees 0 and 1" : "expression has degree 0, expected a 1-form");
        }
        if (!v.has_form()) fail(start, "form '" + name.text + "' is identically zero");
        forms_[name.text] = doc_.forms.size();
        doc_.forms.push_back({name.text, DifferentialForm::one_form(v.form)});
    }

    void parse_system() {
        const Token& name = expect_ident();
        declare(name);
        expect("=");
        expect("[");
        NamedSystem sys{name.text, {}};
        if (!accept("]")) {
            do {
                const Token& member = expect_ident();
                if (!forms_.count(member.text)) fail(member, "unknown form '" + member.text + "'");
                sys.members.push_back(member.text);
            } while (accept(","));
            expect("]");
        }
        expect(";");
        std::vector<DifferentialForm> gens;
        for (const auto& m : sys.members) gens.push_back(doc_.forms[forms_.at(m)].form);
        try {
            PfaffianSystem(n(), std::move(gens));
        } catch (const Error& e) {
            fail(name, "system '" + name.text + "': " + e.what());
        }
        doc_.systems.push_back(std::move(sys));
    }

    Rational rational_literal() {
        const bool negative = accept("-");
        if (!negative) accept("+");
        const Token& num = peek();
        if (num.kind != Tok::number) fail(num, "expected a rational number, found " + describe(num));
        ++pos_;
        Rational value = Rational::parse(num.text);
        if (accept("/")) {
            const Token& den = peek();
            if (den.kind != Tok::number) fail(den, "expected a denominator, found " + describe(den));
            ++pos_;
            const Rational d = Rational::parse(den.text);
            if (d.is_zero()) fail(den, "zero denominator");
            value = value / d;
        }
        return negative ? -value : value;
    }

    Vector tuple() {
        const Token& open = peek();
        expect("(");
        Vector v;
        do {
            v.push_back(rational_literal());
        } while (accept(","));
        expect(")");
        if (v.size() != n()) {
            fail(open, "expected " + std::to_string(n()) + " components, found " + std::to_string(v.size()));
        }
        return v;
    }

    void parse_point() {
        const Token& name = expect_ident();
        declare(name);
        expect("=");
        doc_.points.push_back({name.text, tuple()});
        expect(";");
    }

    void parse_seed() {
        const Token& name = expect_ident();
        declare(name);
        expect("=");
        expect("[");
        NamedSeed seed{name.text, {}};
        if (!accept("]")) {
            do {
                seed.vectors.push_back(tuple());
            } while (accept(","));
            expect("]");
        }
        expect(";");
        doc_.seeds.push_back(std::move(seed));
    }

    Value expression() {
        Value acc = term();
        for (;;) {
            if (accept("+")) {
                add(acc, term(), false);
            } else if (accept("-")) {
                add(acc, term(), true);
            } else {
                return acc;
            }
        }
    }

    static void add(Value& acc, const Value& v, bool subtract) {
        if (subtract) {
            acc.function -= v.function;
            for (std::size_t i = 0; i < acc.form.size(); ++i) acc.form[i] -= v.form[i];
        } else {
            acc.function += v.function;
            for (std::size_t i = 0; i < acc.form.size(); ++i) acc.form[i] += v.form[i];
        }
    }

    Value term() {
        Value acc = unary();
        for (;;) {
            const Token& op = peek();
            if (accept("*")) {
                acc = multiply(acc, unary(), op);
            } else if (accept("/")) {
                const Token& at = peek();
                const Value d = unary();
                if (d.has_form() || !d.function.is_constant() || d.function.is_zero()) {
                    fail(at, "division is only allowed by a nonzero constant");
                }
                const Rational inv = d.function.constant_value().inverse();
                acc.function *= inv;
                for (auto& c : acc.form) c *= inv;
            } else {
                return acc;
            }
        }
    }

    static Value multiply(const Value& a, const Value& b, const Token& op) {
        if (a.has_form() && b.has_form()) fail(op, "product of two 1-forms has degree 2, expected a 1-form");
        Value out(a.function.nvars());
        out.function = a.function * b.function;
        for (std::size_t i = 0; i < out.form.size(); ++i) out.form[i] = a.function * b.form[i] + b.function * a.form[i];
        return out;
    }

    Value unary() {
        if (accept("-")) {
            Value v = unary();
            v.function = -v.function;
            for (auto& c : v.form) c = -c;
            return v;
        }
        if (accept("+")) return unary();
        return power();
    }

    Value power() {
        Value base = atom();
        const Token& op = peek();
        if (!accept("^")) return base;
        const Token& e = peek();
        if (e.kind != Tok::number) fail(e, "exponent must be a non-negative integer");
        ++pos_;
        if (e.text.size() > 6) fail(e, "exponent too large");
        const unsigned k = static_cast<unsigned>(std::stoul(e.text));
        if (base.has_form()) {
            if (k >= 2) fail(op, "power of a 1-form has degree " + std::to_string(k) + ", expected a 1-form");
            if (k == 1) return base;
            Value one(n());
            one.function = Polynomial::constant(n(), Rational(1));
            return one;
        }
        Value out(n());
        out.function = base.function.pow(k);
        return out;
    }

    Value atom() {
        const Token& t = peek();
        if (t.kind == Tok::number) {
            ++pos_;
            Value v(n());
            v.function = Polynomial::constant(n(), Rational::parse(t.text));
            return v;
        }
        if (accept("(")) {
            Value v = expression();
            expect(")");
            return v;
        }
        if (t.kind != Tok::ident) fail(t, "expected an expression, found " + describe(t));
        ++pos_;
        if (auto i = chart_index(t.text)) {
            Value v(n());
            v.function = Polynomial::variable(n(), *i);
            return v;
        }
        if (t.text == "d" && accept("(")) {
            const Token& x = expect_ident();
            auto i = chart_index(x.text);
            if (!i) fail(x, "unknown coordinate '" + x.text + "'");
            expect(")");
            return differential(*i);
        }
        if (auto f = forms_.find(t.text); f != forms_.end()) {
            Value v(n());
            v.form = doc_.forms[f->second].form.coefficients();
            return v;
        }
        if (t.text.size() > 1 && t.text[0] == 'd') {
            if (auto i = chart_index(t.text.substr(1))) return differential(*i);
        }
        fail(t, "unknown identifier '" + t.text + "'");
    }

    Value differential(std::size_t i) const {
        Value v(n());
        v.form[i] = Polynomial::constant(n(), Rational(1));
        return v;
    }
};

std::string tuple_text(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
    return out + ")";
}

} // namespace

const DifferentialForm& SystemDocument::form(std::string_view name) const {
    for (const auto& f : forms) {
        if (f.name == name) return f.form;
    }
    throw DomainError("unknown form '" + std::string(name) + "'");
}

const NamedSystem& SystemDocument::default_system() const {
    if (systems.empty()) throw DomainError("document declares no system");
    return systems.front();
}

PfaffianSystem SystemDocument::system(std::string_view name) const {
    for (const auto& s : systems) {
        if (s.name != name) continue;
        std::vector<DifferentialForm> gens;
        for (const auto& m : s.members) gens.push_back(form(m));
        return PfaffianSystem(chart.size(), std::move(gens));
    }
    throw DomainError("unknown system '" + std::string(name) + "'");
}

Point SystemDocument::point(std::string_view name) const {
    for (const auto& p : points) {
        if (p.name == name) return p.coordinates;
    }
    if (name == "origin") return origin(chart.size());
    throw DomainError("unknown point '" + std::string(name) + "'");
}

const NamedSeed& SystemDocument::seed(std::string_view name) const {
    for (const auto& s : seeds) {
        if (s.name == name) return s;
    }
    throw DomainError("unknown seed '" + std::string(name) + "'");
}

SystemDocument parse_document(std::string_view text) { return Parser(text).run(); }

std::string render(const SystemDocument& doc) {
    std::string out = "chart";
    for (const auto& x : doc.chart) out += " " + x;
    out += ";\n";
    for (const auto& f : doc.forms) out += "form " + f.name + " = " + f.form.to_string(doc.chart) + ";\n";
    for (const auto& s : doc.systems) {
        out += "system " + s.name + " = [";
        for (std::size_t i = 0; i < s.members.size(); ++i) out += (i ? ", " : "") + s.members[i];
        out += "];\n";
    }
    for (const auto& p : doc.points) out += "point " + p.name + " = " + tuple_text(p.coordinates) + ";\n";
    for (const auto& s : doc.seeds) {
        out += "seed " + s.name + " = [";
        for (std::size_t i = 0; i < s.vectors.size(); ++i) out += (i ? ", " : "") + tuple_text(s.vectors[i]);
        out += "];\n";
    }
    return out;
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace pfaff
