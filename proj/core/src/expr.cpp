#include "varlab/expr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace varlab {

const char* fn_name(Fn f) {
    switch (f) {
        case Fn::Sin: return "sin";
        case Fn::Cos: return "cos";
        case Fn::Exp: return "exp";
        case Fn::Log: return "log";
        case Fn::Sqrt: return "sqrt";
        case Fn::Tanh: return "tanh";
    }
    return "?";
}

Var Var::x(int i) {
    Var v;
    v.tag = Tag::X;
    v.i = i;
    return v;
}
Var Var::u() {
    Var v;
    v.tag = Tag::U;
    return v;
}
Var Var::z(int i) {
    Var v;
    v.tag = Tag::Z;
    v.i = i;
    return v;
}
Var Var::w(int i, int j) {
    Var v;
    v.tag = Tag::W;
    v.i = std::min(i, j);
    v.j = std::max(i, j);
    return v;
}
Var Var::param(std::string name) {
    Var v;
    v.tag = Tag::Param;
    v.name = std::move(name);
    return v;
}

std::string Var::str() const {
    switch (tag) {
        case Tag::X: return "x" + std::to_string(i);
        case Tag::U: return "u";
        case Tag::Z: return "z" + std::to_string(i);
        case Tag::W: return "w" + std::to_string(i) + std::to_string(j);
        case Tag::Param: return name;
    }
    return "?";
}

namespace {

std::shared_ptr<Expr> node(NodeKind k) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    return e;
}

}  // namespace

ExprPtr constant(Number n) {
    auto e = node(NodeKind::Constant);
    e->value = n;
    return e;
}
ExprPtr constant(double d) { return constant(Number::real(d)); }
ExprPtr integer(std::int64_t i) { return constant(Number::integer(i)); }
ExprPtr rational(std::int64_t num, std::int64_t den) {
    return constant(Number::exact(Rational(num, den)));
}
ExprPtr variable(Var v) {
    auto e = node(NodeKind::Variable);
    e->var = std::move(v);
    return e;
}

ExprPtr x_(int i) { return variable(Var::x(i)); }
ExprPtr u_() { return variable(Var::u()); }
ExprPtr z_(int i) { return variable(Var::z(i)); }
ExprPtr w_(int i, int j) { return variable(Var::w(i, j)); }
ExprPtr param(const std::string& name) { return variable(Var::param(name)); }

ExprPtr sum(std::vector<ExprPtr> kids) {
    if (kids.empty()) return integer(0);
    if (kids.size() == 1) return kids.front();
    auto e = node(NodeKind::Sum);
    e->kids = std::move(kids);
    return e;
}
ExprPtr product(std::vector<ExprPtr> kids) {
    if (kids.empty()) return integer(1);
    if (kids.size() == 1) return kids.front();
    auto e = node(NodeKind::Product);
    e->kids = std::move(kids);
    return e;
}
ExprPtr power(ExprPtr base, int exponent) {
    auto e = node(NodeKind::Power);
    e->kids.push_back(std::move(base));
    e->exponent = exponent;
    return e;
}
ExprPtr quotient(ExprPtr num, ExprPtr den) {
    auto e = node(NodeKind::Quotient);
    e->kids.push_back(std::move(num));
    e->kids.push_back(std::move(den));
    return e;
}
ExprPtr unary(Fn f, ExprPtr arg) {
    auto e = node(NodeKind::UnaryFn);
    e->fn = f;
    e->kids.push_back(std::move(arg));
    return e;
}

ExprPtr sin_(ExprPtr e) { return unary(Fn::Sin, std::move(e)); }
ExprPtr cos_(ExprPtr e) { return unary(Fn::Cos, std::move(e)); }
ExprPtr exp_(ExprPtr e) { return unary(Fn::Exp, std::move(e)); }
ExprPtr log_(ExprPtr e) { return unary(Fn::Log, std::move(e)); }
ExprPtr sqrt_(ExprPtr e) { return unary(Fn::Sqrt, std::move(e)); }
ExprPtr tanh_(ExprPtr e) { return unary(Fn::Tanh, std::move(e)); }

ExprPtr add(ExprPtr a, ExprPtr b) {
    if (a->is_zero()) return b;
    if (b->is_zero()) return a;
    if (a->is_constant() && b->is_constant()) return constant(a->value + b->value);
    std::vector<ExprPtr> kids;
    if (a->kind == NodeKind::Sum) kids = a->kids;
    else kids.push_back(a);
    if (b->kind == NodeKind::Sum) kids.insert(kids.end(), b->kids.begin(), b->kids.end());
    else kids.push_back(b);
    return sum(std::move(kids));
}

ExprPtr mul(ExprPtr a, ExprPtr b) {
    if (a->is_zero() || b->is_zero()) return integer(0);
    if (a->is_one()) return b;
    if (b->is_one()) return a;
    if (a->is_constant() && b->is_constant()) return constant(a->value * b->value);
    std::vector<ExprPtr> kids;
    if (a->kind == NodeKind::Product) kids = a->kids;
    else kids.push_back(a);
    if (b->kind == NodeKind::Product) kids.insert(kids.end(), b->kids.begin(), b->kids.end());
    else kids.push_back(b);
    return product(std::move(kids));
}

ExprPtr neg(ExprPtr a) {
    if (a->is_constant()) return constant(a->value.negated());
    return mul(integer(-1), std::move(a));
}

ExprPtr sub(ExprPtr a, ExprPtr b) { return add(std::move(a), neg(std::move(b))); }

ExprPtr div(ExprPtr a, ExprPtr b) {
    if (b->is_one()) return a;
    if (a->is_zero() && !b->is_zero()) return a;
    if (a->is_constant() && b->is_constant()) {
        if (auto r = b->value.reciprocal()) return constant(a->value * *r);
    }
    return quotient(std::move(a), std::move(b));
}

// ---- structural order ------------------------------------------------------

namespace {

int kind_rank(NodeKind k) {
    switch (k) {
        case NodeKind::Constant: return 0;
        case NodeKind::Variable: return 1;
        case NodeKind::UnaryFn: return 2;
        case NodeKind::Power: return 3;
        case NodeKind::Product: return 4;
        case NodeKind::Quotient: return 5;
        case NodeKind::Sum: return 6;
    }
    return 7;
}

int compare_var(const Var& a, const Var& b) {
    if (a.tag != b.tag) return a.tag < b.tag ? -1 : 1;
    if (a.i != b.i) return a.i < b.i ? -1 : 1;
    if (a.j != b.j) return a.j < b.j ? -1 : 1;
    return a.name.compare(b.name);
}

}  // namespace

int compare(const ExprPtr& a, const ExprPtr& b) {
    if (a.get() == b.get()) return 0;
    int ra = kind_rank(a->kind);
    int rb = kind_rank(b->kind);
    if (ra != rb) return ra < rb ? -1 : 1;
    switch (a->kind) {
        case NodeKind::Constant:
            return a->value.compare(b->value);
        case NodeKind::Variable:
            return compare_var(a->var, b->var);
        case NodeKind::UnaryFn: {
            if (a->fn != b->fn) return a->fn < b->fn ? -1 : 1;
            return compare(a->kids[0], b->kids[0]);
        }
        case NodeKind::Power: {
            int c = compare(a->kids[0], b->kids[0]);
            if (c != 0) return c;
            if (a->exponent != b->exponent) return a->exponent < b->exponent ? -1 : 1;
            return 0;
        }
        case NodeKind::Sum:
        case NodeKind::Product:
        case NodeKind::Quotient: {
            std::size_t n = std::min(a->kids.size(), b->kids.size());
            for (std::size_t k = 0; k < n; ++k) {
                int c = compare(a->kids[k], b->kids[k]);
                if (c != 0) return c;
            }
            if (a->kids.size() != b->kids.size())
                return a->kids.size() < b->kids.size() ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

bool structural_equal(const ExprPtr& a, const ExprPtr& b) { return compare(a, b) == 0; }

namespace {

void collect_vars(const ExprPtr& e, std::set<Var>& out) {
    if (e->kind == NodeKind::Variable) {
        out.insert(e->var);
        return;
    }
    for (const auto& k : e->kids) collect_vars(k, out);
}

}  // namespace

std::set<Var> variables_of(const ExprPtr& e) {
    std::set<Var> out;
    collect_vars(e, out);
    return out;
}

bool contains_var(const ExprPtr& e, const Var& v) {
    if (e->kind == NodeKind::Variable) return e->var == v;
    for (const auto& k : e->kids)
        if (contains_var(k, v)) return true;
    return false;
}

bool contains_tag(const ExprPtr& e, Var::Tag tag) {
    if (e->kind == NodeKind::Variable) return e->var.tag == tag;
    for (const auto& k : e->kids)
        if (contains_tag(k, tag)) return true;
    return false;
}

ExprPtr substitute(const ExprPtr& e, const std::map<Var, ExprPtr>& repl) {
    switch (e->kind) {
        case NodeKind::Constant:
            return e;
        case NodeKind::Variable: {
            auto it = repl.find(e->var);
            return it == repl.end() ? e : it->second;
        }
        case NodeKind::Sum: {
            ExprPtr acc = integer(0);
            for (const auto& k : e->kids) acc = add(acc, substitute(k, repl));
            return acc;
        }
        case NodeKind::Product: {
            ExprPtr acc = integer(1);
            for (const auto& k : e->kids) acc = mul(acc, substitute(k, repl));
            return acc;
        }
        case NodeKind::Power:
            return power(substitute(e->kids[0], repl), e->exponent);
        case NodeKind::Quotient:
            return div(substitute(e->kids[0], repl), substitute(e->kids[1], repl));
        case NodeKind::UnaryFn:
            return unary(e->fn, substitute(e->kids[0], repl));
    }
    return e;
}

// ---- differentiation -------------------------------------------------------

ExprPtr differentiate(const ExprPtr& e, const Var& v) {
    switch (e->kind) {
        case NodeKind::Constant:
            return integer(0);
        case NodeKind::Variable:
            return e->var == v ? integer(1) : integer(0);
        case NodeKind::Sum: {
            ExprPtr acc = integer(0);
            for (const auto& k : e->kids) acc = add(acc, differentiate(k, v));
            return acc;
        }
        case NodeKind::Product: {
            ExprPtr acc = integer(0);
            for (std::size_t i = 0; i < e->kids.size(); ++i) {
                ExprPtr di = differentiate(e->kids[i], v);
                if (di->is_zero()) continue;
                ExprPtr term = di;
                for (std::size_t j = 0; j < e->kids.size(); ++j)
                    if (j != i) term = mul(term, e->kids[j]);
                acc = add(acc, term);
            }
            return acc;
        }
        case NodeKind::Power: {
            ExprPtr db = differentiate(e->kids[0], v);
            if (db->is_zero() || e->exponent == 0) return integer(0);
            return mul(mul(integer(e->exponent), power(e->kids[0], e->exponent - 1)), db);
        }
        case NodeKind::Quotient: {
            const ExprPtr& p = e->kids[0];
            const ExprPtr& q = e->kids[1];
            ExprPtr dp = differentiate(p, v);
            ExprPtr dq = differentiate(q, v);
            if (dq->is_zero()) return div(dp, q);
            return div(sub(mul(dp, q), mul(p, dq)), power(q, 2));
        }
        case NodeKind::UnaryFn: {
            const ExprPtr& a = e->kids[0];
            ExprPtr da = differentiate(a, v);
            if (da->is_zero()) return integer(0);
            ExprPtr outer;
            switch (e->fn) {
                case Fn::Sin: outer = cos_(a); break;
                case Fn::Cos: outer = neg(sin_(a)); break;
                case Fn::Exp: outer = exp_(a); break;
                case Fn::Log: outer = div(integer(1), a); break;
                case Fn::Sqrt: outer = div(integer(1), mul(integer(2), sqrt_(a))); break;
                case Fn::Tanh: outer = sub(integer(1), power(tanh_(a), 2)); break;
            }
            return mul(outer, da);
        }
    }
    return integer(0);
}

// ---- evaluation ------------------------------------------------------------

namespace {

double check_finite(double v) {
    if (!std::isfinite(v)) throw DomainError("non-finite value");
    return v;
}

}  // namespace

double evaluate(const ExprPtr& e, const Binding& b) {
    switch (e->kind) {
        case NodeKind::Constant:
            return e->value.value();
        case NodeKind::Variable: {
            auto it = b.find(e->var);
            if (it == b.end()) throw UnboundVariable(e->var.str());
            return it->second;
        }
        case NodeKind::Sum: {
            double acc = 0.0;
            for (const auto& k : e->kids) acc += evaluate(k, b);
            return check_finite(acc);
        }
        case NodeKind::Product: {
            double acc = 1.0;
            for (const auto& k : e->kids) acc *= evaluate(k, b);
            return check_finite(acc);
        }
        case NodeKind::Power: {
            double base = evaluate(e->kids[0], b);
            if (base == 0.0 && e->exponent < 0) throw DomainError("zero to negative power");
            return check_finite(std::pow(base, e->exponent));
        }
        case NodeKind::Quotient: {
            double num = evaluate(e->kids[0], b);
            double den = evaluate(e->kids[1], b);
            if (den == 0.0) throw DomainError("division by zero");
            return check_finite(num / den);
        }
        case NodeKind::UnaryFn: {
            double a = evaluate(e->kids[0], b);
            switch (e->fn) {
                case Fn::Sin: return std::sin(a);
                case Fn::Cos: return std::cos(a);
                case Fn::Exp: return check_finite(std::exp(a));
                case Fn::Log:
                    if (a <= 0.0) throw DomainError("log of non-positive argument");
                    return std::log(a);
                case Fn::Sqrt:
                    if (a < 0.0) throw DomainError("sqrt of negative argument");
                    return std::sqrt(a);
                case Fn::Tanh: return std::tanh(a);
            }
            break;
        }
    }
    throw DomainError("malformed expression");
}

// ---- printing --------------------------------------------------------------

namespace {

// precedence levels: sum 1, product/quotient 2, power 3, atom 4
void print(const ExprPtr& e, int parent_prec, std::ostringstream& os);

void print_wrapped(int prec, int parent_prec, std::ostringstream& os, const std::string& body) {
    if (prec < parent_prec) os << "(" << body << ")";
    else os << body;
}

std::string render(const ExprPtr& e, int parent_prec) {
    std::ostringstream os;
    print(e, parent_prec, os);
    return os.str();
}

void print(const ExprPtr& e, int parent_prec, std::ostringstream& os) {
    switch (e->kind) {
        case NodeKind::Constant: {
            std::string s = e->value.str();
            bool negative = !s.empty() && s[0] == '-';
            bool fractional = s.find('/') != std::string::npos;
            int prec = negative ? 1 : (fractional ? 2 : 4);
            print_wrapped(prec, parent_prec, os, s);
            return;
        }
        case NodeKind::Variable:
            os << e->var.str();
            return;
        case NodeKind::Sum: {
            std::ostringstream body;
            for (std::size_t k = 0; k < e->kids.size(); ++k) {
                std::string term = render(e->kids[k], 1);
                if (k == 0) {
                    body << term;
                } else if (!term.empty() && term[0] == '-') {
                    body << " - " << term.substr(1);
                } else {
                    body << " + " << term;
                }
            }
            print_wrapped(1, parent_prec, os, body.str());
            return;
        }
        case NodeKind::Product: {
            std::vector<ExprPtr> kids = e->kids;
            bool negate = false;
            if (kids[0]->is_constant() && kids[0]->value.is_negative()) {
                negate = true;
                Number absv = kids[0]->value.negated();
                if (absv.is_one() && kids.size() > 1) kids.erase(kids.begin());
                else kids[0] = constant(absv);
            }
            std::ostringstream body;
            if (negate) body << "-";
            for (std::size_t k = 0; k < kids.size(); ++k) {
                if (k) body << "*";
                body << render(kids[k], 3);  // force parens around sums and quotients
            }
            print_wrapped(negate ? 1 : 2, parent_prec, os, body.str());
            return;
        }
        case NodeKind::Quotient: {
            std::ostringstream body;
            body << render(e->kids[0], 3) << "/" << render(e->kids[1], 4);
            print_wrapped(2, parent_prec, os, body.str());
            return;
        }
        case NodeKind::Power: {
            std::ostringstream body;
            body << render(e->kids[0], 4) << "^";
            if (e->exponent < 0) body << "(" << e->exponent << ")";
            else body << e->exponent;
            print_wrapped(3, parent_prec, os, body.str());
            return;
        }
        case NodeKind::UnaryFn:
            os << fn_name(e->fn) << "(" << render(e->kids[0], 0) << ")";
            return;
    }
}

}  // namespace

std::string to_string(const ExprPtr& e) { return render(e, 0); }

}  // namespace varlab
