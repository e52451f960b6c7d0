#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qdirac/errors.hpp"
#include "qdirac/su2q.hpp"

namespace qdirac::cli {

/// Syntax tree for algebra expressions such as "a* * c - 0.5 * c * a*" or "z*z + y^2".
///
/// Grammar:
///     sum     := product (('+' | '-') product)*
///     product := unary (['*'] unary)*          juxtaposition multiplies
///     unary   := '-' unary | power
///     power   := postfix ['^' integer]
///     postfix := primary ['*']                 '*' glued to an atom or ')' is the adjoint
///     primary := number ['i'] | 'i' | atom | 'ind' '(' integer ')' | '(' sum ')'
///
/// Atoms: a c z y s u one yinv uinv; the starred forms a* c* z* s* come from the postfix.
struct Expr {
    enum class Kind { number, atom, star, power, neg, add, sub, mul };

    Kind kind = Kind::number;
    double value = 0.0;
    bool imaginary = false;
    std::string atom;
    int index = 0;     // ind(k)
    int exponent = 0;  // power
    std::vector<std::unique_ptr<Expr>> args;

    Expr() = default;
    Expr(const Expr& other);
    Expr& operator=(const Expr& other);
    Expr(Expr&&) noexcept = default;
    Expr& operator=(Expr&&) noexcept = default;

    friend bool operator==(const Expr& a, const Expr& b);
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail);

    /// Byte offset of the offending position.
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

Expr parse(const std::string& text);

/// Canonical text form; parse(print(e)) == e.
std::string print(const Expr& e);

/// Evaluates on any grid, so the same expression can be swept over K.
SU2Builder compile(const Expr& e);

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

}  // namespace qdirac::cli
