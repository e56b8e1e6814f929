#include "icx/low_defect_poly.hpp"

#include <numeric>
#include <string>

#include "icx/error.hpp"

namespace icx {

struct LowDefectPoly::Node {
  enum class Kind { constant, tensor, affine_step };

  Kind kind;
  std::uint64_t c = 0;  // constant value, or the added constant of an affine step
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  unsigned degree = 0;
};

namespace {

using Node = LowDefectPoly::Node;

Natural evaluate_node(const Node& node, std::span<const unsigned> e) {
  switch (node.kind) {
    case Node::Kind::constant:
      return to_natural(node.c);
    case Node::Kind::tensor: {
      const unsigned split = node.lhs->degree;
      return evaluate_node(*node.lhs, e.first(split)) * evaluate_node(*node.rhs, e.subspan(split));
    }
    case Node::Kind::affine_step: {
      const unsigned split = node.lhs->degree;
      Natural v = evaluate_node(*node.lhs, e.first(split));
      mul_pow3(v, e[split]);
      return v + to_natural(node.c);
    }
  }
  return 0;
}

using CoefficientMap = std::map<std::uint64_t, Natural>;

CoefficientMap expand(const Node& node) {
  switch (node.kind) {
    case Node::Kind::constant:
      return {{0, to_natural(node.c)}};
    case Node::Kind::tensor: {
      const CoefficientMap left = expand(*node.lhs);
      const CoefficientMap right = expand(*node.rhs);
      CoefficientMap out;
      for (const auto& [lm, lc] : left) {
        for (const auto& [rm, rc] : right) out[lm | (rm << node.lhs->degree)] += lc * rc;
      }
      return out;
    }
    case Node::Kind::affine_step: {
      CoefficientMap out;
      for (const auto& [m, c] : expand(*node.lhs)) out[m | (std::uint64_t{1} << node.lhs->degree)] = c;
      out[0] += to_natural(node.c);
      return out;
    }
  }
  return {};
}

std::string render(const Node& node, unsigned offset) {
  switch (node.kind) {
    case Node::Kind::constant:
      return std::to_string(node.c);
    case Node::Kind::tensor:
      return "(" + render(*node.lhs, offset) + ")*(" + render(*node.rhs, offset + node.lhs->degree) + ")";
    case Node::Kind::affine_step:
      return "(" + render(*node.lhs, offset) + ")*x" + std::to_string(offset + node.lhs->degree + 1) + "+" +
             std::to_string(node.c);
  }
  return {};
}

void require_arity(std::size_t got, std::size_t want) {
  if (got != want) {
    throw Error(ErrorKind::arity, "expected " + std::to_string(want) + " exponents, got " + std::to_string(got));
  }
}

}  // namespace

LowDefectPoly::LowDefectPoly(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

LowDefectPoly LowDefectPoly::constant(std::uint64_t c, const ComplexityTable& table) {
  if (c == 0) throw Error(ErrorKind::invalid_argument, "low-defect constants must be at least 1");
  auto node = std::make_shared<Node>(Node{Node::Kind::constant, c, nullptr, nullptr, 0});
  LowDefectPoly f(std::move(node));
  f.base_complexity_ = table.at(c);
  f.leading_ = to_natural(c);
  f.constant_ = f.leading_;
  return f;
}

LowDefectPoly LowDefectPoly::tensor(const LowDefectPoly& f, const LowDefectPoly& g) {
  const unsigned degree = f.degree_ + g.degree_;
  auto node = std::make_shared<Node>(Node{Node::Kind::tensor, 0, f.root_, g.root_, degree});
  LowDefectPoly out(std::move(node));
  out.degree_ = degree;
  out.base_complexity_ = f.base_complexity_ + g.base_complexity_;
  out.leading_ = f.leading_ * g.leading_;
  out.constant_ = f.constant_ * g.constant_;
  return out;
}

LowDefectPoly LowDefectPoly::affine_step(const LowDefectPoly& f, std::uint64_t c, const ComplexityTable& table) {
  if (c == 0) throw Error(ErrorKind::invalid_argument, "affine step constant must be at least 1");
  const unsigned cost = table.at(c);
  auto node = std::make_shared<Node>(Node{Node::Kind::affine_step, c, f.root_, nullptr, f.degree_ + 1});
  LowDefectPoly out(std::move(node));
  out.degree_ = f.degree_ + 1;
  out.base_complexity_ = f.base_complexity_ + cost;
  out.leading_ = f.leading_;
  out.constant_ = to_natural(c);
  return out;
}

std::map<std::uint64_t, Natural> LowDefectPoly::coefficients() const {
  if (degree_ > 63) throw Error(ErrorKind::invalid_argument, "coefficient expansion supports degree <= 63");
  return expand(*root_);
}

Natural LowDefectPoly::evaluate(std::span<const unsigned> exponents) const {
  require_arity(exponents.size(), degree_);
  return evaluate_node(*root_, exponents);
}

Natural LowDefectPoly::evaluate_augmented(std::span<const unsigned> exponents) const {
  require_arity(exponents.size(), degree_ + 1);
  Natural v = evaluate_node(*root_, exponents.first(degree_));
  mul_pow3(v, exponents[degree_]);
  return v;
}

std::string LowDefectPoly::to_string() const { return render(*root_, 0); }

Defect poly_defect(const LowDefectPoly& f) { return Defect(f.base_complexity(), f.leading_coefficient()); }

Defect defect_at(const LowDefectPoly& f, std::span<const unsigned> exponents) {
  const unsigned sum = std::accumulate(exponents.begin(), exponents.end(), 0u);
  return Defect(f.base_complexity() + 3 * sum, f.evaluate(exponents));
}

LowDefectPoly witness_family(unsigned residue, unsigned k, const ComplexityTable& table) {
  if (k == 0) throw Error(ErrorKind::invalid_argument, "witness family needs k >= 1");
  static constexpr std::uint64_t kLeading[3] = {3, 2, 4};
  LowDefectPoly f = LowDefectPoly::constant(kLeading[(k % 3 + 3 - residue % 3) % 3], table);
  for (unsigned i = 0; i < k; ++i) f = LowDefectPoly::affine_step(f, 1, table);
  return f;
}

namespace {

bool efficient(const Natural& value, unsigned claimed, const ComplexityTable& table) {
  if (!fits_u64(value)) return false;
  const std::uint64_t n = to_u64(value);
  return table.contains(n) && table[n] == claimed;
}

}  // namespace

bool efficiently_represents(const LowDefectPoly& f, std::span<const unsigned> exponents,
                            const ComplexityTable& table) {
  const unsigned sum = std::accumulate(exponents.begin(), exponents.end(), 0u);
  return efficient(f.evaluate(exponents), f.base_complexity() + 3 * sum, table);
}

bool efficiently_represents_augmented(const LowDefectPoly& f, std::span<const unsigned> exponents,
                                      const ComplexityTable& table) {
  const unsigned sum = std::accumulate(exponents.begin(), exponents.end(), 0u);
  return efficient(f.evaluate_augmented(exponents), f.base_complexity() + 3 * sum, table);
}

}  // namespace icx
