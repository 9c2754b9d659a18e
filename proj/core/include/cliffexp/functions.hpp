#pragma once

#include "cliffexp/exp.hpp"
#include "cliffexp/multivector.hpp"

namespace cliffexp {

enum class TrigKind { Sin, Cos };
enum class HyperbolicKind { Sinh, Cosh };
enum class RatioKind { Tan, Tanh };

/// sin A = (I/2)(e^{−IA} − e^{IA}), cos A = ½(e^{−IA} + e^{IA}).
/// Only Cl30 and Cl12, where I² = −1; others throw UnsupportedSignature.
Multivector trig_exact(const Multivector& x, TrigKind which, const ExpOptions& options = {});

/// sinh A = ½(e^A − e^{−A}), cosh A = ½(e^A + e^{−A}). All four algebras.
Multivector hyperbolic_exact(const Multivector& x, HyperbolicKind which,
                             const ExpOptions& options = {});

/// tanh A = sinh A · (cosh A)⁻¹ and tan A = sin A · (cos A)⁻¹. Throws
/// NonInvertible when the denominator is singular; tan throws
/// UnsupportedSignature outside Cl30/Cl12.
Multivector ratio_exact(const Multivector& x, RatioKind which, const ExpOptions& options = {});

/// Scaling applied before a series evaluation.
struct NormalizePolicy {
  enum class Kind { CeilInt, Exact, Factor };
  Kind kind = Kind::CeilInt;
  double factor = 1.0;  // used by Factor only

  static NormalizePolicy ceil_int() { return {Kind::CeilInt, 1.0}; }
  static NormalizePolicy exact() { return {Kind::Exact, 1.0}; }
  static NormalizePolicy by(double n) { return {Kind::Factor, n}; }
};

struct Normalized {
  Multivector value;
  double scale = 1.0;
};

/// CeilInt divides by max(1, ⌈det_norm(x)⌉), Exact by det_norm(x) and Factor
/// by the given number. NormUndefined propagates from det_norm.
Normalized normalize(const Multivector& x, const NormalizePolicy& policy);

}  // namespace cliffexp
