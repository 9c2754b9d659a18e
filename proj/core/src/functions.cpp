#include "cliffexp/functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cliffexp/algebra.hpp"
#include "cliffexp/errors.hpp"

namespace cliffexp {

namespace {

void require_complex_center(const Multivector& x, const char* what) {
  if (pseudoscalar_square(x.signature()) != -1) throw UnsupportedSignature(what, x.signature());
}

}  // namespace

Multivector trig_exact(const Multivector& x, TrigKind which, const ExpOptions& options) {
  require_complex_center(x, "closed-form sin/cos");
  const Multivector unit_i = Multivector::basis(x.signature(), Blade::E123);
  const Multivector ix = unit_i * x;
  const Multivector e_minus = exp(-ix, options);
  const Multivector e_plus = exp(ix, options);
  if (which == TrigKind::Cos) return 0.5 * (e_minus + e_plus);
  return 0.5 * (unit_i * (e_minus - e_plus));
}

Multivector hyperbolic_exact(const Multivector& x, HyperbolicKind which,
                             const ExpOptions& options) {
  const Multivector e_plus = exp(x, options);
  const Multivector e_minus = exp(-x, options);
  if (which == HyperbolicKind::Cosh) return 0.5 * (e_plus + e_minus);
  return 0.5 * (e_plus - e_minus);
}

Multivector ratio_exact(const Multivector& x, RatioKind which, const ExpOptions& options) {
  if (which == RatioKind::Tanh) {
    const Multivector den = hyperbolic_exact(x, HyperbolicKind::Cosh, options);
    return hyperbolic_exact(x, HyperbolicKind::Sinh, options) * inverse(den).inverse;
  }
  require_complex_center(x, "closed-form tan");
  const Multivector den = trig_exact(x, TrigKind::Cos, options);
  return trig_exact(x, TrigKind::Sin, options) * inverse(den).inverse;
}

Normalized normalize(const Multivector& x, const NormalizePolicy& policy) {
  double scale = 1.0;
  switch (policy.kind) {
    case NormalizePolicy::Kind::CeilInt: scale = std::max(1.0, std::ceil(det_norm(x))); break;
    case NormalizePolicy::Kind::Exact: scale = det_norm(x); break;
    case NormalizePolicy::Kind::Factor: scale = policy.factor; break;
  }
  if (!(scale != 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("normalization scale must be finite and nonzero");
  }
  return Normalized{x / scale, scale};
}

}  // namespace cliffexp
