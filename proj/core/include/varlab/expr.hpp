#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "varlab/number.hpp"

namespace varlab {

/// Evaluation hit a genuine singularity (log of non-positive argument,
/// division by zero, non-finite result).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A variable required by evaluation was missing from the binding.
class UnboundVariable : public std::runtime_error {
public:
    explicit UnboundVariable(const std::string& name)
        : std::runtime_error("unbound variable: " + name) {}
};

/// Variable slot of the variational calculus: spatial coordinate x_i, field
/// value u, gradient slot z_i, Hessian slot w_ij (symmetric, stored with
/// i <= j), or a named parameter.
struct Var {
    enum class Tag { X, U, Z, W, Param };

    Tag tag = Tag::U;
    int i = 0;
    int j = 0;
    std::string name;

    static Var x(int i);
    static Var u();
    static Var z(int i);
    static Var w(int i, int j);  // normalizes to i <= j
    static Var param(std::string name);

    std::string str() const;

    friend bool operator==(const Var& a, const Var& b) {
        return a.tag == b.tag && a.i == b.i && a.j == b.j && a.name == b.name;
    }
    friend bool operator<(const Var& a, const Var& b) {
        if (a.tag != b.tag) return a.tag < b.tag;
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.name < b.name;
    }
};

enum class NodeKind { Constant, Variable, Sum, Product, Power, Quotient, UnaryFn };

enum class Fn { Sin, Cos, Exp, Log, Sqrt, Tanh };

const char* fn_name(Fn f);

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression node. Construct through the factory functions below;
/// shared subtrees are safe to alias across threads.
class Expr {
public:
    NodeKind kind;
    Number value;               // Constant
    Var var;                    // Variable
    std::vector<ExprPtr> kids;  // Sum/Product: n children; Quotient: {num, den};
                                // Power/UnaryFn: {operand}
    int exponent = 0;           // Power
    Fn fn = Fn::Sin;            // UnaryFn

    bool is_constant() const { return kind == NodeKind::Constant; }
    bool is_zero() const { return is_constant() && value.is_zero(); }
    bool is_one() const { return is_constant() && value.is_one(); }
};

// ---- node factories ------------------------------------------------------

ExprPtr constant(Number n);
ExprPtr constant(double d);
ExprPtr integer(std::int64_t i);
ExprPtr rational(std::int64_t num, std::int64_t den);
ExprPtr variable(Var v);

ExprPtr x_(int i);
ExprPtr u_();
ExprPtr z_(int i);
ExprPtr w_(int i, int j);
ExprPtr param(const std::string& name);

/// n-ary nodes; children lists must be non-empty.
ExprPtr sum(std::vector<ExprPtr> kids);
ExprPtr product(std::vector<ExprPtr> kids);
ExprPtr power(ExprPtr base, int exponent);
ExprPtr quotient(ExprPtr num, ExprPtr den);
ExprPtr unary(Fn f, ExprPtr arg);

ExprPtr sin_(ExprPtr e);
ExprPtr cos_(ExprPtr e);
ExprPtr exp_(ExprPtr e);
ExprPtr log_(ExprPtr e);
ExprPtr sqrt_(ExprPtr e);
ExprPtr tanh_(ExprPtr e);

// Arithmetic builders with light constant folding (0 + e -> e, 1 * e -> e,
// constant * constant folds). Full canonicalization is simplify()'s job.
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr div(ExprPtr a, ExprPtr b);
ExprPtr neg(ExprPtr a);

inline ExprPtr operator+(ExprPtr a, ExprPtr b) { return add(std::move(a), std::move(b)); }
inline ExprPtr operator-(ExprPtr a, ExprPtr b) { return sub(std::move(a), std::move(b)); }
inline ExprPtr operator*(ExprPtr a, ExprPtr b) { return mul(std::move(a), std::move(b)); }
inline ExprPtr operator/(ExprPtr a, ExprPtr b) { return div(std::move(a), std::move(b)); }
inline ExprPtr operator-(ExprPtr a) { return neg(std::move(a)); }

// ---- structural queries --------------------------------------------------

/// Deterministic total order on expression trees; 0 means structurally equal.
int compare(const ExprPtr& a, const ExprPtr& b);
bool structural_equal(const ExprPtr& a, const ExprPtr& b);

struct ExprLess {
    bool operator()(const ExprPtr& a, const ExprPtr& b) const { return compare(a, b) < 0; }
};

std::set<Var> variables_of(const ExprPtr& e);
bool contains_var(const ExprPtr& e, const Var& v);
bool contains_tag(const ExprPtr& e, Var::Tag tag);

/// Replace each occurrence of a variable by the mapped expression.
ExprPtr substitute(const ExprPtr& e, const std::map<Var, ExprPtr>& repl);

// ---- calculus and evaluation ----------------------------------------------

/// Exact symbolic partial derivative; W slots are treated symmetrically
/// (d/dw12 sees every w21 occurrence, which is stored as w12).
ExprPtr differentiate(const ExprPtr& e, const Var& v);

using Binding = std::map<Var, double>;

/// Floating-point value of e at b. Throws UnboundVariable for missing
/// variables and DomainError at singularities or non-finite results.
double evaluate(const ExprPtr& e, const Binding& b);

/// Grammar-compatible rendering (reparses to an equivalent tree).
std::string to_string(const ExprPtr& e);

}  // namespace varlab
