#include "toro/expression.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace toro {

namespace {

enum class Op { Constant, Var, Neg, Add, Sub, Mul, Div, Sin, Cos, Sqrt, Pow };

} // namespace

struct Expression::Node {
    Op op = Op::Constant;
    double value = 0.0;  // Constant payload, or the Pow exponent
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;

    bool depends_on_t() const {
        if (op == Op::Var) return true;
        if (lhs && lhs->depends_on_t()) return true;
        if (rhs && rhs->depends_on_t()) return true;
        return false;
    }

    Jet eval(double t, int order) const {
        switch (op) {
            case Op::Constant: return Jet::constant(value, order);
            case Op::Var: return Jet::variable(t, order);
            case Op::Neg: return -lhs->eval(t, order);
            case Op::Add: return lhs->eval(t, order) + rhs->eval(t, order);
            case Op::Sub: return lhs->eval(t, order) - rhs->eval(t, order);
            case Op::Mul: return lhs->eval(t, order) * rhs->eval(t, order);
            case Op::Div: return lhs->eval(t, order) / rhs->eval(t, order);
            case Op::Sin: return sin(lhs->eval(t, order));
            case Op::Cos: return cos(lhs->eval(t, order));
            case Op::Sqrt: return sqrt(lhs->eval(t, order));
            case Op::Pow: {
                Jet base = lhs->eval(t, order);
                double e = value;
                double rounded = std::round(e);
                if (std::abs(e - rounded) < 1e-12 && std::abs(rounded) <= 32.0) {
                    // integer powers by repeated multiplication: valid
                    // for any base, including negative and zero
                    int n = static_cast<int>(rounded);
                    Jet acc = Jet::constant(1.0, order);
                    for (int i = 0; i < std::abs(n); ++i) acc = acc * base;
                    return n >= 0 ? acc : Jet::constant(1.0, order) / acc;
                }
                return pow(base, e);
            }
        }
        throw InvalidArgument("corrupt expression node");
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

NodePtr make_node(Op op, double value, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Expression::Node>();
    n->op = op;
    n->value = value;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    NodePtr run() {
        NodePtr root = parse_expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return root;
    }

private:
    NodePtr parse_expr() {
        NodePtr node = parse_term();
        for (;;) {
            skip_space();
            if (consume('+'))
                node = make_node(Op::Add, 0.0, node, parse_term());
            else if (consume('-'))
                node = make_node(Op::Sub, 0.0, node, parse_term());
            else
                return node;
        }
    }

    NodePtr parse_term() {
        NodePtr node = parse_unary();
        for (;;) {
            skip_space();
            if (consume('*'))
                node = make_node(Op::Mul, 0.0, node, parse_unary());
            else if (consume('/'))
                node = make_node(Op::Div, 0.0, node, parse_unary());
            else
                return node;
        }
    }

    NodePtr parse_unary() {
        skip_space();
        if (consume('-')) return make_node(Op::Neg, 0.0, parse_unary());
        if (consume('+')) return parse_unary();
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        skip_space();
        if (!consume('^')) return base;
        NodePtr exponent = parse_unary();
        if (exponent->depends_on_t()) fail("exponent must be a constant expression");
        double e = exponent->eval(0.0, 0).value();
        return make_node(Op::Pow, e, base);
    }

    NodePtr parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        if (consume('(')) {
            NodePtr inner = parse_expr();
            skip_space();
            if (!consume(')')) fail("missing closing parenthesis");
            return inner;
        }
        fail("unexpected character");
        return nullptr;
    }

    NodePtr parse_number() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            size_t mark = pos_++;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            } else {
                pos_ = mark;  // the 'e' was not an exponent
            }
        }
        std::string token = text_.substr(start, pos_ - start);
        try {
            size_t used = 0;
            double value = std::stod(token, &used);
            if (used != token.size()) {
                fail("malformed number '" + token + "'");
                return nullptr;
            }
            return make_node(Op::Constant, value);
        } catch (const std::exception&) {
            fail("malformed number '" + token + "'");
            return nullptr;
        }
    }

    NodePtr parse_name() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "t") return make_node(Op::Var, 0.0);
        if (name == "pi") return make_node(Op::Constant, 3.14159265358979323846);
        Op op;
        if (name == "sin")
            op = Op::Sin;
        else if (name == "cos")
            op = Op::Cos;
        else if (name == "sqrt")
            op = Op::Sqrt;
        else {
            fail("unknown name '" + name + "'");
            return nullptr;
        }
        skip_space();
        if (!consume('(')) fail("expected '(' after function name");
        NodePtr arg = parse_expr();
        skip_space();
        if (!consume(')')) fail("missing closing parenthesis after function argument");
        return make_node(op, 0.0, arg);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        std::ostringstream msg;
        msg << "expression error at offset " << pos_ << ": " << why;
        throw InvalidArgument(msg.str());
    }

    const std::string& text_;
    size_t pos_ = 0;
};

} // namespace

Expression Expression::parse(const std::string& text) {
    Expression e;
    e.root_ = Parser(text).run();
    e.text_ = text;
    return e;
}

Jet Expression::eval(double t, int order) const {
    if (!root_) throw InvalidArgument("evaluating an empty expression");
    return root_->eval(t, order);
}

PlaneCurve expression_curve(const std::string& x_text, const std::string& y_text, double t_min,
                            double t_max, std::optional<double> period) {
    Expression x = Expression::parse(x_text);
    Expression y = Expression::parse(y_text);
    auto eval = [x, y](double t, int order) { return Jet2{x.eval(t, order), y.eval(t, order)}; };
    return PlaneCurve(eval, t_min, t_max, period, "expr");
}

} // namespace toro
