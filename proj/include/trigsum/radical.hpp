#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace trigsum {

/// Small expression tree over rationals and square roots, e.g. sqrt((1 + sqrt(2)) / 2).
/// Evaluated in extended precision; printed in a plain infix form.
class Radical {
 public:
  static Radical integer(std::int64_t v);
  static Radical rational(std::int64_t num, std::int64_t den);

  friend Radical sqrt(const Radical& x);
  friend Radical operator+(const Radical& a, const Radical& b);
  friend Radical operator*(const Radical& a, const Radical& b);
  friend Radical operator/(const Radical& a, const Radical& b);

  long double evaluate() const;
  std::string to_string() const;

  struct Node;

 private:
  explicit Radical(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace trigsum
