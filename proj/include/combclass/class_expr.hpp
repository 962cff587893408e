#pragma once

#include "combclass/egf.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace combclass {

/// Abstract syntax of a class expression:
///   Expr := "X" | ("Set"|"Seq"|"Cyc") "(" Expr ["+"] ")"
///         | "Point" "(" Expr ")" | "R" | "W" | "NPT"
/// The "+" marks restriction to positive degree (drops the degree-0
/// element), which Set/Seq/Cyc arguments must end up with.
struct ClassExpr {
    enum class Kind { Atom, Set, Seq, Cyc, Point, BuiltinR, BuiltinW, BuiltinNpt };

    Kind kind = Kind::Atom;
    bool restrict_positive = false; // "+" on the argument, Set/Seq/Cyc only
    std::unique_ptr<ClassExpr> arg;
};

/// Parse error with its 1-based byte offset into the input.
class ClassExprError : public std::runtime_error {
  public:
    ClassExprError(const std::string &message, std::size_t offset)
        : std::runtime_error(message + " at offset " + std::to_string(offset)),
          offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

namespace detail {

class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ClassExpr parse()
    {
        ClassExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ClassExprError("unexpected trailing input", pos_ + 1);
        return e;
    }

  private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string read_name()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ClassExprError("expected a class name", pos_ + 1);
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ClassExprError(std::string("expected '") + c + "'", pos_ + 1);
        ++pos_;
    }

    ClassExpr parse_expr()
    {
        const std::size_t name_at = pos_;
        const std::string name = read_name();
        ClassExpr e;
        if (name == "X") {
            e.kind = ClassExpr::Kind::Atom;
            return e;
        }
        if (name == "R") {
            e.kind = ClassExpr::Kind::BuiltinR;
            return e;
        }
        if (name == "W") {
            e.kind = ClassExpr::Kind::BuiltinW;
            return e;
        }
        if (name == "NPT") {
            e.kind = ClassExpr::Kind::BuiltinNpt;
            return e;
        }
        if (name == "Set")
            e.kind = ClassExpr::Kind::Set;
        else if (name == "Seq")
            e.kind = ClassExpr::Kind::Seq;
        else if (name == "Cyc")
            e.kind = ClassExpr::Kind::Cyc;
        else if (name == "Point")
            e.kind = ClassExpr::Kind::Point;
        else
            throw ClassExprError("unknown name '" + name + "'", name_at + 1);
        expect('(');
        e.arg = std::make_unique<ClassExpr>(parse_expr());
        skip_ws();
        if (e.kind != ClassExpr::Kind::Point && pos_ < text_.size() && text_[pos_] == '+') {
            e.restrict_positive = true;
            ++pos_;
        }
        expect(')');
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ClassExpr parse_class_expr(std::string_view text)
{
    return detail::ExprParser(text).parse();
}

/// Bottom-up evaluation to a truncated count sequence. The builtins R, W
/// and NPT dispatch to their fixed-point solvers.
inline CountSeq eval_class_expr(const ClassExpr &e, int order)
{
    if (order < 0)
        throw std::invalid_argument("eval_class_expr: negative order");
    switch (e.kind) {
    case ClassExpr::Kind::Atom:
        return CountSeq::atom(order);
    case ClassExpr::Kind::BuiltinR:
        return solve_catalan_class(order);
    case ClassExpr::Kind::BuiltinW:
        return solve_windmill(order);
    case ClassExpr::Kind::BuiltinNpt:
        return solve_npt(order);
    case ClassExpr::Kind::Point:
        return point(eval_class_expr(*e.arg, order));
    case ClassExpr::Kind::Set:
    case ClassExpr::Kind::Seq:
    case ClassExpr::Kind::Cyc: {
        CountSeq a = eval_class_expr(*e.arg, order);
        if (e.restrict_positive) {
            std::vector<Bigint> c = a.counts();
            c[0] = 0;
            a = CountSeq(std::move(c));
        }
        if (a[0] != 0)
            throw std::invalid_argument(
                "Set/Seq/Cyc argument has a degree-0 element; restrict it with '+'");
        if (e.kind == ClassExpr::Kind::Set)
            return egf_exp(a);
        if (e.kind == ClassExpr::Kind::Seq)
            return egf_seq(a);
        return egf_log(a);
    }
    }
    throw std::logic_error("eval_class_expr: unreachable");
}

inline CountSeq eval_class_expr(std::string_view text, int order)
{
    return eval_class_expr(parse_class_expr(text), order);
}

} // namespace combclass
