#include "mcs/group_spec.hpp"

#include <cctype>

namespace mcs {

namespace {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpecAst parse() {
    GroupSpecAst ast = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      throw SpecError("unexpected trailing input", pos_);
    return ast;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() { return text_[pos_]; }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // The product separator is 'x' or the multiplication sign (UTF-8 C3 97).
  bool eat_product_sign() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      return true;
    }
    if (pos_ + 1 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xC3 &&
        static_cast<unsigned char>(text_[pos_ + 1]) == 0x97) {
      pos_ += 2;
      return true;
    }
    return false;
  }

  int parse_int() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SpecError("expected a number", pos_);
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000) throw SpecError("number too large", pos_);
      ++pos_;
    }
    return static_cast<int>(value);
  }

  bool eat_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  GroupSpecAst parse_term() {
    skip_ws();
    if (at_end()) throw SpecError("expected a group term", pos_);
    std::size_t start = pos_;
    if (eat('(')) {
      GroupSpecAst inner = parse_expr();
      if (!eat(')')) throw SpecError("expected ')'", pos_);
      return inner;
    }
    if (eat_word("Heis")) {
      if (!eat('(')) throw SpecError("expected '(' after Heis", pos_);
      int p = parse_int();
      if (!eat(')')) throw SpecError("expected ')'", pos_);
      if (!is_odd_prime(p))
        throw SpecError("Heis(" + std::to_string(p) + "): parameter must be an odd prime", start);
      return leaf(GroupSpecAst::Kind::kHeisenberg, p);
    }
    if (eat('M')) {
      if (!eat('(')) throw SpecError("expected '(' after M", pos_);
      int p = parse_int();
      if (!eat(')')) throw SpecError("expected ')'", pos_);
      if (!is_odd_prime(p))
        throw SpecError("M(" + std::to_string(p) + "): parameter must be an odd prime", start);
      return leaf(GroupSpecAst::Kind::kModularExtraspecial, p);
    }
    if (eat('C')) {
      int n = parse_int();
      if (n < 1)
        throw SpecError("C" + std::to_string(n) + ": order must be >= 1", start);
      return leaf(GroupSpecAst::Kind::kCyclic, n);
    }
    if (eat('S')) {
      int n = parse_int();
      if (n < 1 || n > 5)
        throw SpecError("S" + std::to_string(n) + ": supported for 1 <= n <= 5", start);
      return leaf(GroupSpecAst::Kind::kSymmetric, n);
    }
    throw SpecError("expected C<n>, S<n>, Heis(p), M(p), or '('", pos_);
  }

  GroupSpecAst parse_expr() {
    GroupSpecAst acc = parse_term();
    while (eat_product_sign()) {
      GroupSpecAst rhs = parse_term();
      GroupSpecAst product;
      product.kind = GroupSpecAst::Kind::kProduct;
      product.left = std::make_unique<GroupSpecAst>(std::move(acc));
      product.right = std::make_unique<GroupSpecAst>(std::move(rhs));
      acc = std::move(product);
    }
    return acc;
  }

  static GroupSpecAst leaf(GroupSpecAst::Kind kind, int n) {
    GroupSpecAst ast;
    ast.kind = kind;
    ast.n = n;
    return ast;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpecAst parse_group_spec(std::string_view text) {
  return Parser(text).parse();
}

std::string render_spec(const GroupSpecAst& ast) {
  switch (ast.kind) {
    case GroupSpecAst::Kind::kCyclic:
      return "C" + std::to_string(ast.n);
    case GroupSpecAst::Kind::kSymmetric:
      return "S" + std::to_string(ast.n);
    case GroupSpecAst::Kind::kHeisenberg:
      return "Heis(" + std::to_string(ast.n) + ")";
    case GroupSpecAst::Kind::kModularExtraspecial:
      return "M(" + std::to_string(ast.n) + ")";
    case GroupSpecAst::Kind::kProduct: {
      std::string left = render_spec(*ast.left);
      std::string right = render_spec(*ast.right);
      if (ast.right->kind == GroupSpecAst::Kind::kProduct) right = "(" + right + ")";
      return left + " x " + right;
    }
  }
  throw std::logic_error("unhandled spec node");
}

FiniteGroup build_group(const GroupSpecAst& ast) {
  switch (ast.kind) {
    case GroupSpecAst::Kind::kCyclic:
      return make_cyclic(ast.n);
    case GroupSpecAst::Kind::kSymmetric:
      return make_symmetric(ast.n);
    case GroupSpecAst::Kind::kHeisenberg:
      return make_heisenberg(ast.n);
    case GroupSpecAst::Kind::kModularExtraspecial:
      return make_modular_extraspecial(ast.n);
    case GroupSpecAst::Kind::kProduct:
      return direct_product(build_group(*ast.left), build_group(*ast.right));
  }
  throw std::logic_error("unhandled spec node");
}

FiniteGroup group_from_spec(std::string_view text) {
  return build_group(parse_group_spec(text));
}

}  // namespace mcs
