#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "birkhoff/pcc_function.hpp"
#include "birkhoff/symbol_function.hpp"
#include "birkhoff/word.hpp"

namespace birkhoff {

/// f = 1 on [1], 0 on [0].
PccFunction example_indicator();

/// Depth 3: f(000) = f(010) = -2, f(001) = -3, f(100) = -1, odd under
/// conjugation.
PccFunction example23();

/// The perturbation h = f + g with S_h(α*_{h,max}) > 0.
struct ConstructionT41 {
  PccFunction base;
  double eps;
  BinaryWord a;  // maximizing period, length k_A a multiple of base depth
  BinaryWord b;  // 0^{k_A}, or 1^{k_A} when a is all zeros
  std::size_t k_a;
  std::size_t ell;
  std::size_t m;  // ell + 7
  BinaryWord x;   // A^{2ℓ+2} B A A
  BinaryWord y;   // A^{2ℓ+1} B A A A
  double alpha_star_max;  // of the base
  double alpha_min;       // of the base
  double b_star;
  SymbolFunction h;

  std::size_t block_length() const noexcept { return x.size(); }
  /// dim_H {X,Y}^∞ = 1/((2ℓ+5)k_A).
  double dimension() const noexcept { return 1.0 / static_cast<double>(x.size()); }
  /// α*_{f,max} + ε/(32 k_A).
  double threshold() const noexcept { return alpha_star_max + eps / (32.0 * static_cast<double>(k_a)); }
  /// Whether the perturbation g is ε/4 (rather than 0) on [w].
  bool perturbed(BitSpan w) const;
};

/// Both inequalities on ℓ, for a given k_A and spread α*_{f,max} - α_{f,min}.
bool ell_feasible(std::size_t ell, std::size_t k_a, double spread, double eps);

ConstructionT41 theorem41(const PccFunction& f, double eps, std::optional<std::size_t> ell_override = std::nullopt);

/// ω built from `choices` (letters 'X' / 'Y', repeated cyclically as needed).
BinaryWord t41_point(const ConstructionT41& c, const std::string& choices, std::size_t length);

struct Sp7aReport {
  bool pass;         // exceeds && constant
  bool exceeds;      // every window > α*_{f,max} + ε/(32k_A)
  bool constant;     // every window equals b* within 1e-12
  double margin;     // min window - threshold
  std::vector<double> windows;
};

/// Averages of h over the blocks t = 0..t_max of ω.
Sp7aReport verify_sp7a(const ConstructionT41& c, const std::string& choices, std::size_t t_max);

/// refine(f, m) - ε g₀ + ε∫g₀, where g₀ is the distance to the orbit of the
/// maximizing periodic point, truncated at depth m.
PccFunction lemma45(const PccFunction& f, double eps, std::size_t m);

/// b on [1^L], a elsewhere.
PccFunction lemma53(double a, double b, std::size_t l);

struct StaircaseParams {
  std::vector<std::size_t> lengths;  // L_1 < ... < L_J, L_1 > 5
  std::optional<double> tau;

  std::size_t levels() const noexcept { return lengths.size(); }
  static double threshold(std::size_t j);  // t_j = 1 - 2^{-j}
  void validate() const;
};

/// Truncated staircase: ±t_j by the length of the leading run.
SymbolFunction theorem52(const StaircaseParams& params);
/// The same function as a table; requires L_J <= 16.
PccFunction theorem52_table(const StaircaseParams& params);

inline constexpr std::size_t kStaircaseTableCap = 16;

/// Smallest L > 5 with (eL/2)^{2/L} < 2^{τ/4^n}.
std::uint64_t lchoice_selector(std::size_t n, double tau);
bool lchoice_holds(std::uint64_t l, std::size_t n, double tau);

/// Depth 2k+1: +1 on majority-ones cylinders, -1 otherwise.
PccFunction remark55_majority(std::size_t k);
/// Depth k: -1 on 0^k, 1/(2^k - 1) elsewhere.
PccFunction remark55_biased(std::size_t k);

struct Derevealed {
  PccFunction g;
  BinaryWord bumped;  // the cylinder A that received +ε
  bool constant_case; // A = 1^k0 or 0^k1
};

Derevealed derevealize_detail(const PccFunction& f, double eps);
PccFunction derevealize(const PccFunction& f, double eps);

}  // namespace birkhoff
