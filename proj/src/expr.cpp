#include "gauge2d/expr.hpp"

#include "gauge2d/errors.hpp"
#include "gauge2d/system.hpp"

#include <cctype>
#include <utility>

namespace gauge2d {

bool Expr::operator==(const Expr& other) const
{
    if (kind != other.kind)
        return false;
    switch (kind) {
    case Kind::Number: return value == other.value;
    case Kind::Ident: return name == other.name;
    case Kind::Call:
        return name == other.name && power == other.power && args == other.args;
    case Kind::Neg: return args == other.args;
    case Kind::Binary: return op == other.op && args == other.args;
    }
    return false;
}

namespace {

struct Token {
    enum class Type { Number, Ident, Symbol, End };
    Type type = Type::End;
    std::string text;
    int line = 0, col = 0;
};

std::vector<Token> lex(const std::string& text, int start_line)
{
    std::vector<Token> out;
    int line = start_line, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
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
        t.col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.type = Token::Type::Number;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                t.text += text[i++];
                ++col;
            }
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.type = Token::Type::Ident;
            while (i < text.size()
                   && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                t.text += text[i++];
                ++col;
            }
        } else if (std::string("+-*/^()").find(c) != std::string::npos) {
            t.type = Token::Type::Symbol;
            t.text = c;
            ++i;
            ++col;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.col = col;
    out.push_back(std::move(end));
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Expr run()
    {
        Expr e = sum();
        if (!at_end())
            fail("unexpected trailing input");
        return e;
    }

private:
    const Token& peek(int ahead = 0) const
    {
        std::size_t i = pos_ + static_cast<std::size_t>(ahead);
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    bool at_end() const { return peek().type == Token::Type::End; }
    bool is_symbol(const Token& t, char c) const
    {
        return t.type == Token::Type::Symbol && t.text[0] == c;
    }
    const Token& take() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what, peek().line, peek().col);
    }

    Expr sum()
    {
        Expr e = product();
        while (is_symbol(peek(), '+') || is_symbol(peek(), '-')) {
            char op = take().text[0];
            Expr rhs = product();
            Expr node;
            node.kind = Expr::Kind::Binary;
            node.op = op;
            node.line = e.line;
            node.col = e.col;
            node.args = {std::move(e), std::move(rhs)};
            e = std::move(node);
        }
        return e;
    }

    Expr product()
    {
        Expr e = unary();
        while (is_symbol(peek(), '*') || is_symbol(peek(), '/')) {
            char op = take().text[0];
            Expr rhs = unary();
            Expr node;
            node.kind = Expr::Kind::Binary;
            node.op = op;
            node.line = e.line;
            node.col = e.col;
            node.args = {std::move(e), std::move(rhs)};
            e = std::move(node);
        }
        return e;
    }

    Expr unary()
    {
        if (is_symbol(peek(), '-')) {
            const Token& t = take();
            Expr node;
            node.kind = Expr::Kind::Neg;
            node.line = t.line;
            node.col = t.col;
            node.args = {unary()};
            return node;
        }
        return power();
    }

    Expr power()
    {
        Expr base = atom();
        if (is_symbol(peek(), '^')) {
            take();
            Expr node;
            node.kind = Expr::Kind::Binary;
            node.op = '^';
            node.line = base.line;
            node.col = base.col;
            Expr exp = integer();
            node.args = {std::move(base), std::move(exp)};
            return node;
        }
        return base;
    }

    Expr integer()
    {
        if (peek().type != Token::Type::Number)
            fail("expected an integer exponent");
        const Token& t = take();
        Expr e;
        e.kind = Expr::Kind::Number;
        e.value = Rat(t.text, 10);
        e.value.canonicalize();
        e.line = t.line;
        e.col = t.col;
        return e;
    }

    Expr atom()
    {
        const Token& t = peek();
        if (t.type == Token::Type::Number)
            return integer();
        if (is_symbol(t, '(')) {
            take();
            Expr e = sum();
            if (!is_symbol(peek(), ')'))
                fail("expected ')'");
            take();
            return e;
        }
        if (t.type == Token::Type::Ident) {
            // d^2(x) applies the derivative twice; the power belongs to the
            // call when a '(' follows the exponent, to the value otherwise
            bool call_pow = is_symbol(peek(1), '^') && peek(2).type == Token::Type::Number
                            && is_symbol(peek(3), '(');
            bool call = is_symbol(peek(1), '(') || call_pow;
            const Token& name = take();
            if (!call) {
                Expr e;
                e.kind = Expr::Kind::Ident;
                e.name = name.text;
                e.line = name.line;
                e.col = name.col;
                return e;
            }
            if (name.text != "d" && name.text != "dbar")
                throw ParseError("unknown function '" + name.text + "'", name.line, name.col);
            Expr e;
            e.kind = Expr::Kind::Call;
            e.name = name.text;
            e.line = name.line;
            e.col = name.col;
            if (call_pow) {
                take();
                e.power = static_cast<int>(integer().value.get_num().get_si());
                if (e.power < 1)
                    throw ParseError("derivative power must be positive", name.line, name.col);
            }
            take(); // '('
            e.args = {sum()};
            if (!is_symbol(peek(), ')'))
                fail("expected ')'");
            take();
            return e;
        }
        fail("expected an expression");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

int prec(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Binary:
        return e.op == '^' ? 4 : (e.op == '*' || e.op == '/') ? 2 : 1;
    case Expr::Kind::Neg: return 3;
    default: return 5;
    }
}

std::string wrap(const Expr& e, bool parens)
{
    std::string s = print_expr(e);
    return parens ? "(" + s + ")" : s;
}

// Coordinate at the bottom of a d/dbar chain, with the accumulated orders.
JetCoord resolve_jet(const Expr& e, const NameTable& t)
{
    int dp = 0, dq = 0;
    const Expr* cur = &e;
    while (cur->kind == Expr::Kind::Call) {
        (cur->name == "d" ? dp : dq) += cur->power;
        cur = &cur->args.front();
    }
    if (cur->kind != Expr::Kind::Ident)
        throw ParseError("derivative of a non-coordinate expression", cur->line, cur->col);
    for (std::size_t i = 0; i < t.fields.size(); ++i)
        if (t.fields[i] == cur->name) {
            JetKind kind = t.constrained[i] ? JetKind::PhiJ : JetKind::PhiA;
            int index = 0;
            for (std::size_t j = 0; j < i; ++j)
                if (t.constrained[j] == t.constrained[i])
                    ++index;
            try {
                return make_jet(kind, index, dp, dq);
            } catch (const std::invalid_argument& err) {
                throw ParseError(err.what(), cur->line, cur->col);
            }
        }
    for (std::size_t i = 0; i < t.lambdas.size(); ++i)
        if (t.lambdas[i] == cur->name)
            return make_jet(JetKind::Lambda, static_cast<int>(i), dp, dq);
    if (dp + dq > 0) {
        for (const std::string& p : t.params)
            if (p == cur->name)
                throw ParseError("derivative of the parameter '" + cur->name + "'", cur->line,
                                 cur->col);
    }
    throw ParseError("unknown name '" + cur->name + "'", cur->line, cur->col);
}

int exponent_of(const Expr& e)
{
    if (e.kind != Expr::Kind::Number || e.value.get_den() != 1 || e.value < 0)
        throw ParseError("expected a nonnegative integer exponent", e.line, e.col);
    return static_cast<int>(e.value.get_num().get_si());
}

FieldElem eval_field_node(const Expr& e, const NameTable& t)
{
    switch (e.kind) {
    case Expr::Kind::Number: return FieldElem::constant(e.value);
    case Expr::Kind::Ident:
        if (e.name == "D" || e.name == "Dbar")
            throw ParseError("operator symbol '" + e.name + "' in a coefficient", e.line, e.col);
        for (const std::string& p : t.params)
            if (p == e.name)
                return FieldElem::parameter(e.name);
        return FieldElem::coordinate(resolve_jet(e, t));
    case Expr::Kind::Call: return FieldElem::coordinate(resolve_jet(e, t));
    case Expr::Kind::Neg: return -eval_field_node(e.args[0], t);
    case Expr::Kind::Binary: {
        if (e.op == '^')
            return eval_field_node(e.args[0], t).pow(exponent_of(e.args[1]));
        FieldElem a = eval_field_node(e.args[0], t);
        FieldElem b = eval_field_node(e.args[1], t);
        switch (e.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        default: return a / b;
        }
    }
    }
    throw ParseError("malformed expression", e.line, e.col);
}

bool pure_coefficient(const OreOp& op) { return op.degree() <= 0 && op.order() <= 0; }

OreOp eval_op_node(const Expr& e, const SystemPtr& sys, const NameTable& t)
{
    switch (e.kind) {
    case Expr::Kind::Ident:
        if (e.name == "D")
            return OreOp::d(sys);
        if (e.name == "Dbar")
            return OreOp::dbar(sys);
        return OreOp::coeff(eval_field_node(e, t), sys);
    case Expr::Kind::Number:
    case Expr::Kind::Call: return OreOp::coeff(eval_field_node(e, t), sys);
    case Expr::Kind::Neg: return -eval_op_node(e.args[0], sys, t);
    case Expr::Kind::Binary: {
        if (e.op == '^') {
            OreOp base = eval_op_node(e.args[0], sys, t);
            int n = exponent_of(e.args[1]);
            OreOp acc = OreOp::identity(sys);
            for (int i = 0; i < n; ++i)
                acc = acc * base;
            return acc;
        }
        OreOp a = eval_op_node(e.args[0], sys, t);
        OreOp b = eval_op_node(e.args[1], sys, t);
        switch (e.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        default:
            if (!pure_coefficient(a) || !pure_coefficient(b))
                throw ParseError("division needs coefficient operands", e.line, e.col);
            return OreOp::coeff(a.coefficient(0, 0) / b.coefficient(0, 0), sys);
        }
    }
    }
    throw ParseError("malformed expression", e.line, e.col);
}

} // namespace

Expr parse_expr(const std::string& text, int line)
{
    return Parser(lex(text, line)).run();
}

std::string print_expr(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Number: return e.value.get_str();
    case Expr::Kind::Ident: return e.name;
    case Expr::Kind::Call:
        return e.name + (e.power != 1 ? "^" + std::to_string(e.power) : "") + "("
               + print_expr(e.args[0]) + ")";
    case Expr::Kind::Neg: return "-" + wrap(e.args[0], prec(e.args[0]) < 3);
    case Expr::Kind::Binary: {
        int p = prec(e);
        std::string l = wrap(e.args[0], prec(e.args[0]) < p);
        std::string r =
            wrap(e.args[1], prec(e.args[1]) < p
                                || (prec(e.args[1]) == p && (e.op == '-' || e.op == '/')));
        if (e.op == '+' || e.op == '-')
            return l + " " + e.op + " " + r;
        return l + e.op + r;
    }
    }
    return "";
}

FieldElem eval_field(const Expr& e, const NameTable& names)
{
    return eval_field_node(e, names);
}

OreOp eval_operator(const Expr& e, SystemPtr sys)
{
    return eval_op_node(e, sys, table_for(*sys));
}

NameTable table_for(const CartanSystem& sys)
{
    NameTable t;
    for (const CartanSystem::Field& f : sys.fields()) {
        t.fields.push_back(f.name);
        t.constrained.push_back(f.constrained);
    }
    t.lambdas = sys.lambdas();
    t.params = sys.params();
    return t;
}

} // namespace gauge2d
