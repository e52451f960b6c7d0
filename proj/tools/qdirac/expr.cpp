#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

namespace qdirac::cli {

Expr::Expr(const Expr& other)
    : kind(other.kind),
      value(other.value),
      imaginary(other.imaginary),
      atom(other.atom),
      index(other.index),
      exponent(other.exponent) {
    for (const auto& a : other.args) args.push_back(std::make_unique<Expr>(*a));
}

Expr& Expr::operator=(const Expr& other) {
    if (this != &other) *this = Expr(other);
    return *this;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.value != b.value || a.imaginary != b.imaginary || a.atom != b.atom ||
        a.index != b.index || a.exponent != b.exponent || a.args.size() != b.args.size())
        return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!(*a.args[i] == *b.args[i])) return false;
    return true;
}

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
    : Error("syntax error at offset " + std::to_string(offset) + ": " + detail +
            (expected.empty() ? "" : " (expected " + join(expected) + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

const std::set<std::string> kAtoms = {"a", "c", "z", "y", "s", "u", "one", "yinv", "uinv"};
const std::vector<std::string> kOperand = {"number", "atom", "'('", "'-'"};

Expr leaf_number(double v, bool imaginary) {
    Expr e;
    e.kind = Expr::Kind::number;
    e.value = v;
    e.imaginary = imaginary;
    return e;
}

Expr node(Expr::Kind kind, Expr a) {
    Expr e;
    e.kind = kind;
    e.args.push_back(std::make_unique<Expr>(std::move(a)));
    return e;
}

Expr node(Expr::Kind kind, Expr a, Expr b) {
    Expr e = node(kind, std::move(a));
    e.args.push_back(std::make_unique<Expr>(std::move(b)));
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Expr run() {
        Expr e = sum();
        skip();
        if (pos_ != s_.size()) fail({"'+'", "'-'", "'*'", "end of input"}, "unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const {
        throw ParseError(pos_, std::move(expected), detail);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_operand() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '(';
    }

    Expr sum() {
        Expr e = product();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                e = node(Expr::Kind::add, std::move(e), product());
            } else if (peek('-')) {
                ++pos_;
                e = node(Expr::Kind::sub, std::move(e), product());
            } else {
                return e;
            }
        }
    }

    Expr product() {
        Expr e = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                e = node(Expr::Kind::mul, std::move(e), unary());
            } else if (starts_operand()) {
                e = node(Expr::Kind::mul, std::move(e), unary());
            } else {
                return e;
            }
        }
    }

    Expr unary() {
        if (peek('-')) {
            ++pos_;
            return node(Expr::Kind::neg, unary());
        }
        return power();
    }

    Expr power() {
        Expr base = postfix();
        if (!peek('^')) return base;
        ++pos_;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        Expr e = node(Expr::Kind::power, std::move(base));
        e.exponent = integer(start, "exponent");
        return e;
    }

    Expr postfix() {
        bool starrable = false;
        Expr e = primary(starrable);
        // A '*' glued to an atom or ')' is the adjoint; "z*z" is z* z.
        if (starrable && pos_ < s_.size() && s_[pos_] == '*') {
            ++pos_;
            e = node(Expr::Kind::star, std::move(e));
        }
        return e;
    }

    Expr primary(bool& starrable) {
        skip();
        if (pos_ >= s_.size()) fail(kOperand, "unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = sum();
            if (!peek(')')) fail({"')'"}, "unbalanced parenthesis");
            ++pos_;
            starrable = true;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string word = s_.substr(start, pos_ - start);
            if (word == "i") return leaf_number(1.0, true);
            if (word == "ind") {
                starrable = true;
                return indicator();
            }
            if (!kAtoms.count(word)) {
                pos_ = start;
                fail({"a", "c", "z", "y", "s", "u", "one", "yinv", "uinv", "ind(k)", "i"},
                     "unknown atom '" + word + "'");
            }
            Expr e;
            e.kind = Expr::Kind::atom;
            e.atom = word;
            starrable = true;
            return e;
        }
        fail(kOperand, "unexpected '" + std::string(1, c) + "'");
    }

    Expr number() {
        const std::size_t start = pos_;
        double v = 0.0;
        const auto res = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (res.ec != std::errc()) fail({"number"}, "malformed number");
        pos_ = static_cast<std::size_t>(res.ptr - s_.data());
        if (!std::isfinite(v)) {
            pos_ = start;
            fail({"finite number"}, "number out of range");
        }
        bool imaginary = false;
        if (pos_ < s_.size() && s_[pos_] == 'i' &&
            !(pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
            imaginary = true;
            ++pos_;
        }
        return leaf_number(v, imaginary);
    }

    int integer(std::size_t start, const char* what) {
        int v = 0;
        const auto res = std::from_chars(s_.data() + start, s_.data() + pos_, v);
        if (start == pos_ || res.ec != std::errc()) {
            pos_ = start;
            fail({"non-negative integer"}, std::string("missing or oversized ") + what);
        }
        return v;
    }

    Expr indicator() {
        if (!peek('(')) fail({"'('"}, "ind needs an index");
        ++pos_;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        Expr e;
        e.kind = Expr::Kind::atom;
        e.atom = "ind";
        e.index = integer(start, "index");
        if (!peek(')')) fail({"')'"}, "unbalanced parenthesis");
        ++pos_;
        return e;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul: return 2;
        case Expr::Kind::neg: return 3;
        case Expr::Kind::power: return 4;
        case Expr::Kind::star: return 5;
        case Expr::Kind::number:
        case Expr::Kind::atom: return 6;
    }
    return 0;
}

std::string wrap(const Expr& e, int min_prec) {
    const std::string s = print(e);
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

Expr parse(const std::string& text) { return Parser(text).run(); }

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string print(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::number:
            if (e.imaginary) return e.value == 1.0 ? "i" : format_double(e.value) + "i";
            return format_double(e.value);
        case Expr::Kind::atom: return e.atom == "ind" ? "ind(" + std::to_string(e.index) + ")" : e.atom;
        case Expr::Kind::star: return wrap(*e.args[0], 6) + "*";
        case Expr::Kind::power: return wrap(*e.args[0], 5) + "^" + std::to_string(e.exponent);
        case Expr::Kind::neg: return "-" + wrap(*e.args[0], 3);
        case Expr::Kind::add: return wrap(*e.args[0], 1) + " + " + wrap(*e.args[1], 2);
        case Expr::Kind::sub: return wrap(*e.args[0], 1) + " - " + wrap(*e.args[1], 2);
        case Expr::Kind::mul: return wrap(*e.args[0], 2) + " * " + wrap(*e.args[1], 3);
    }
    return {};
}

namespace {

SU2Element evaluate(const Expr& e, const DiscGrid& grid) {
    switch (e.kind) {
        case Expr::Kind::number: {
            SU2Element one = su2::one(grid);
            return (e.imaginary ? cplx(0.0, e.value) : cplx(e.value, 0.0)) * one;
        }
        case Expr::Kind::atom: {
            if (e.atom == "a") return su2::a(grid);
            if (e.atom == "c") return su2::c(grid);
            if (e.atom == "u") return su2::u(grid);
            if (e.atom == "uinv") return su2::one(grid).shifted(-1);
            if (e.atom == "one") return su2::one(grid);
            if (e.atom == "z") return SU2Element::from_disc(disc::z(grid));
            if (e.atom == "y") return SU2Element::from_disc(disc::y(grid));
            if (e.atom == "yinv") return SU2Element::from_disc(disc::y_pow(grid, -1.0));
            if (e.atom == "s") return SU2Element::from_disc(disc::s(grid));
            if (e.atom == "ind") return SU2Element::from_disc(disc::indicator(grid, e.index));
            throw ParameterError("unknown atom '" + e.atom + "'");
        }
        case Expr::Kind::star: return star(evaluate(*e.args[0], grid));
        case Expr::Kind::power: {
            const SU2Element base = evaluate(*e.args[0], grid);
            SU2Element out = su2::one(grid);
            for (int i = 0; i < e.exponent; ++i) out = mul(out, base);
            return out;
        }
        case Expr::Kind::neg: return -evaluate(*e.args[0], grid);
        case Expr::Kind::add: return evaluate(*e.args[0], grid) + evaluate(*e.args[1], grid);
        case Expr::Kind::sub: return evaluate(*e.args[0], grid) - evaluate(*e.args[1], grid);
        case Expr::Kind::mul: return mul(evaluate(*e.args[0], grid), evaluate(*e.args[1], grid));
    }
    return SU2Element(grid);
}

}  // namespace

SU2Builder compile(const Expr& e) {
    auto shared = std::make_shared<const Expr>(e);
    return [shared](const DiscGrid& grid) { return evaluate(*shared, grid); };
}

}  // namespace qdirac::cli
