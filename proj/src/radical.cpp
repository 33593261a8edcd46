#include "trigsum/radical.hpp"

#include <cmath>
#include <stdexcept>

namespace trigsum {

struct Radical::Node {
  enum class Op { rational, sqrt, add, mul, div };
  Op op = Op::rational;
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

Radical Radical::integer(std::int64_t v) { return rational(v, 1); }

Radical Radical::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Radical: zero denominator");
  auto n = std::make_shared<Node>();
  n->op = Node::Op::rational;
  n->num = num;
  n->den = den;
  return Radical(std::move(n));
}

Radical sqrt(const Radical& x) {
  auto n = std::make_shared<Radical::Node>();
  n->op = Radical::Node::Op::sqrt;
  n->lhs = x.node_;
  return Radical(std::move(n));
}

namespace {

template <typename NodeT, typename OpT>
std::shared_ptr<NodeT> binary(OpT op, std::shared_ptr<const NodeT> a, std::shared_ptr<const NodeT> b) {
  auto n = std::make_shared<NodeT>();
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

}  // namespace

Radical operator+(const Radical& a, const Radical& b) {
  return Radical(binary(Radical::Node::Op::add, a.node_, b.node_));
}

Radical operator*(const Radical& a, const Radical& b) {
  return Radical(binary(Radical::Node::Op::mul, a.node_, b.node_));
}

Radical operator/(const Radical& a, const Radical& b) {
  return Radical(binary(Radical::Node::Op::div, a.node_, b.node_));
}

namespace {

long double eval(const Radical::Node& n);
std::string print(const Radical::Node& n);

}  // namespace

long double Radical::evaluate() const { return eval(*node_); }
std::string Radical::to_string() const { return print(*node_); }

namespace {

long double eval(const Radical::Node& n) {
  using Op = Radical::Node::Op;
  switch (n.op) {
    case Op::rational:
      return static_cast<long double>(n.num) / static_cast<long double>(n.den);
    case Op::sqrt: {
      const long double x = eval(*n.lhs);
      if (x < 0.0L) throw std::domain_error("Radical: square root of a negative value");
      return std::sqrt(x);
    }
    case Op::add: return eval(*n.lhs) + eval(*n.rhs);
    case Op::mul: return eval(*n.lhs) * eval(*n.rhs);
    case Op::div: return eval(*n.lhs) / eval(*n.rhs);
  }
  return 0.0L;
}

bool is_atom(const Radical::Node& n) {
  using Op = Radical::Node::Op;
  return n.op == Op::sqrt || (n.op == Op::rational && n.den == 1 && n.num >= 0);
}

std::string wrap(const Radical::Node& n) {
  return is_atom(n) ? print(n) : "(" + print(n) + ")";
}

std::string print(const Radical::Node& n) {
  using Op = Radical::Node::Op;
  switch (n.op) {
    case Op::rational:
      return n.den == 1 ? std::to_string(n.num)
                        : std::to_string(n.num) + "/" + std::to_string(n.den);
    case Op::sqrt: return "sqrt(" + print(*n.lhs) + ")";
    case Op::add: return print(*n.lhs) + " + " + print(*n.rhs);
    case Op::mul: return wrap(*n.lhs) + "*" + wrap(*n.rhs);
    case Op::div: return wrap(*n.lhs) + "/" + wrap(*n.rhs);
  }
  return "?";
}

}  // namespace
}  // namespace trigsum
