#include "biexact/expr.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace biexact {

namespace {

std::string join_expected(const std::set<std::string>& expected)
{
    std::string s;
    for (const auto& e : expected) {
        if (!s.empty()) {
            s += ", ";
        }
        s += e;
    }
    return s;
}

struct Token {
    enum class Type { Integer, Name, Op, End };
    Type type = Type::End;
    std::string text;
    int line = 1;
    int column = 1;
};

std::vector<Token> tokenize(const std::string& src)
{
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.type = Token::Type::Integer;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                t.text += src[i++];
                ++col;
            }
        } else if (c == 'x' || c == 'y' || c == 'q') {
            t.type = Token::Type::Name;
            t.text = std::string(1, c);
            ++i;
            ++col;
        } else if (std::string("+-*/^()").find(c) != std::string::npos) {
            t.type = Token::Type::Op;
            t.text = std::string(1, c);
            ++i;
            ++col;
        } else {
            throw SyntaxError(line, col, {"integer", "x", "y", "q", "(", "-", "+", "*", "/", "^", ")"},
                              std::string(1, c));
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Expr parse_all()
    {
        Expr e = additive();
        if (peek().type != Token::Type::End) {
            fail({"+", "-", "*", "/", "^", "end of input"});
        }
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    bool is_op(const char* op) const { return peek().type == Token::Type::Op && peek().text == op; }

    [[noreturn]] void fail(std::set<std::string> expected) const
    {
        const Token& t = peek();
        if (depth_ > 0 && expected.count("end of input") != 0) {
            expected.erase("end of input");
            expected.insert(")");
        }
        throw SyntaxError(t.line, t.column, std::move(expected),
                          t.type == Token::Type::End ? "end of input" : t.text);
    }

    static Expr node(Expr::Kind k, Expr a, Expr b)
    {
        Expr e;
        e.kind = k;
        e.args.push_back(std::move(a));
        e.args.push_back(std::move(b));
        return e;
    }

    Expr additive()
    {
        Expr lhs = multiplicative();
        while (is_op("+") || is_op("-")) {
            const bool plus = is_op("+");
            ++pos_;
            lhs = node(plus ? Expr::Kind::Add : Expr::Kind::Sub, std::move(lhs), multiplicative());
        }
        return lhs;
    }

    Expr multiplicative()
    {
        Expr lhs = unary();
        while (is_op("*") || is_op("/")) {
            const bool times = is_op("*");
            ++pos_;
            lhs = node(times ? Expr::Kind::Mul : Expr::Kind::Div, std::move(lhs), unary());
        }
        return lhs;
    }

    Expr unary()
    {
        if (is_op("-")) {
            ++pos_;
            Expr e;
            e.kind = Expr::Kind::Neg;
            e.args.push_back(unary());
            return e;
        }
        return power();
    }

    // Right-associative: a^b^c is a^(b^c), with b^c folded to an integer.
    Expr power()
    {
        Expr base = atom();
        if (!is_op("^")) {
            return base;
        }
        ++pos_;
        long exp = exponent();
        Expr e;
        e.kind = Expr::Kind::Pow;
        e.exponent = exp;
        e.args.push_back(std::move(base));
        return e;
    }

    long exponent()
    {
        int sign = 1;
        while (is_op("-")) {
            sign = -sign;
            ++pos_;
        }
        const Token t = peek();
        long e = 0;
        if (is_op("(")) {
            ++pos_;
            e = exponent();
            if (!is_op(")")) {
                fail({"^", ")"});
            }
            ++pos_;
        } else if (t.type == Token::Type::Integer) {
            const mpz_class v(t.text);
            if (v > std::numeric_limits<int>::max()) {
                throw SyntaxError(t.line, t.column, {"exponent below 2^31"}, t.text);
            }
            e = v.get_si();
            ++pos_;
        } else {
            fail({"integer", "-", "("});
        }
        if (is_op("^")) {
            ++pos_;
            const long rest = exponent();
            if (rest < 0 && e != 1 && e != -1) {
                throw SyntaxError(t.line, t.column, {"integer exponent"}, t.text);
            }
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), mpz_class(e).get_mpz_t(), static_cast<unsigned long>(rest < 0 ? -rest : rest));
            if (abs(p) > std::numeric_limits<int>::max()) {
                throw SyntaxError(t.line, t.column, {"exponent below 2^31"}, t.text);
            }
            e = p.get_si();
        }
        return sign * e;
    }

    Expr atom()
    {
        const Token& t = peek();
        if (t.type == Token::Type::Integer) {
            Expr e;
            e.kind = Expr::Kind::Integer;
            e.value = mpz_class(t.text);
            ++pos_;
            return e;
        }
        if (t.type == Token::Type::Name) {
            Expr e;
            e.kind = Expr::Kind::Variable;
            e.name = t.text[0];
            ++pos_;
            return e;
        }
        if (is_op("(")) {
            ++pos_;
            ++depth_;
            Expr e = additive();
            if (!is_op(")")) {
                fail({"+", "-", "*", "/", "^", ")"});
            }
            --depth_;
            ++pos_;
            return e;
        }
        fail({"integer", "x", "y", "q", "(", "-"});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

}  // namespace

SyntaxError::SyntaxError(int line, int column, std::set<std::string> expected, const std::string& found)
    : std::runtime_error("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column)
                         + ": found " + (found == "end of input" ? found : "'" + found + "'") + ", expected one of "
                         + join_expected(expected)),
      line_(line),
      column_(column),
      expected_(std::move(expected))
{
}

Expr parse(const std::string& text)
{
    return Parser(tokenize(text)).parse_all();
}

std::string to_string(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Integer:
        return e.value.get_str();
    case Expr::Kind::Variable:
        return std::string(1, e.name);
    case Expr::Kind::Neg:
        return "Neg(" + to_string(e.args[0]) + ")";
    case Expr::Kind::Pow:
        return "Pow(" + to_string(e.args[0]) + ", " + std::to_string(e.exponent) + ")";
    default:
        break;
    }
    const char* name = e.kind == Expr::Kind::Add ? "Add" : e.kind == Expr::Kind::Sub ? "Sub" : e.kind == Expr::Kind::Mul ? "Mul" : "Div";
    return std::string(name) + "(" + to_string(e.args[0]) + ", " + to_string(e.args[1]) + ")";
}

}  // namespace biexact
