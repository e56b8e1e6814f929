#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>

#include "icx/complexity_table.hpp"
#include "icx/defect.hpp"
#include "icx/natural.hpp"

namespace icx {

/// A multilinear polynomial built only from constants, the tensor product
/// (multiply with disjoint variables) and the affine step f -> f * x + c,
/// together with its base complexity. Stored as its construction tree so the
/// complexity bookkeeping stays attached to how the polynomial was made.
///
/// Variables are numbered 0..degree()-1 in construction order: in
/// tensor(f, g) the variables of f come first, and affine_step appends one
/// new variable after those of f.
class LowDefectPoly {
 public:
  /// The constant c >= 1, with base complexity ||c||.
  static LowDefectPoly constant(std::uint64_t c, const ComplexityTable& table);
  /// f(x_0..x_{d-1}) * g(x_d..), base complexities added.
  static LowDefectPoly tensor(const LowDefectPoly& f, const LowDefectPoly& g);
  /// f * x_new + c for c >= 1, base complexity ||f|| + ||c||.
  static LowDefectPoly affine_step(const LowDefectPoly& f, std::uint64_t c, const ComplexityTable& table);

  unsigned degree() const noexcept { return degree_; }
  unsigned base_complexity() const noexcept { return base_complexity_; }
  const Natural& leading_coefficient() const noexcept { return leading_; }
  const Natural& constant_term() const noexcept { return constant_; }

  /// Coefficients keyed by the bitmask of variables in each monomial.
  /// Requires degree() <= 63.
  std::map<std::uint64_t, Natural> coefficients() const;

  /// Value at x_i = 3^{exponents[i]}; throws arity when the length differs from degree().
  Natural evaluate(std::span<const unsigned> exponents) const;

  /// The augmented polynomial f * x_d at x_i = 3^{exponents[i]}; needs degree() + 1 exponents.
  Natural evaluate_augmented(std::span<const unsigned> exponents) const;

  std::string to_string() const;

  struct Node;  // construction tree; defined in the implementation

 private:
  explicit LowDefectPoly(std::shared_ptr<const Node> root);

  std::shared_ptr<const Node> root_;
  unsigned degree_ = 0;
  unsigned base_complexity_ = 0;
  Natural leading_;
  Natural constant_;
};

/// delta(f) = ||f|| - 3 log_3 (leading coefficient).
Defect poly_defect(const LowDefectPoly& f);

/// delta_f(n) = ||f|| + 3 sum(n) - 3 log_3 f(3^n).
Defect defect_at(const LowDefectPoly& f, std::span<const unsigned> exponents);

/// (...((m x_0 + 1) x_1 + 1) ...) x_{k-1} + 1 with m = 3, 2, 4 for
/// k - a = 0, 1, 2 (mod 3). Its defect is exactly threshold(a, k). k >= 1.
LowDefectPoly witness_family(unsigned residue, unsigned k, const ComplexityTable& table);

/// f(3^n) lies in the table and has complexity exactly ||f|| + 3 sum(n).
bool efficiently_represents(const LowDefectPoly& f, std::span<const unsigned> exponents,
                            const ComplexityTable& table);
bool efficiently_represents_augmented(const LowDefectPoly& f, std::span<const unsigned> exponents,
                                      const ComplexityTable& table);

}  // namespace icx
