#include "cliffexp/errors.hpp"

#include <string>

namespace cliffexp {

SignatureMismatch::SignatureMismatch(Signature lhs, Signature rhs)
    : Error("signature mismatch: " + std::string(signature_name(lhs)) + " vs " +
            std::string(signature_name(rhs))) {}

NonInvertible::NonInvertible(Multivector adjugate, double det)
    : Error("multivector is not invertible (determinant " + std::to_string(det) + ")"),
      adjugate_(adjugate),
      det_(det) {}

UnsupportedSignature::UnsupportedSignature(std::string_view what, Signature sig)
    : Error(std::string(what) + " is not available in " + std::string(signature_name(sig))) {}

SeriesOrderExceeded::SeriesOrderExceeded(int requested, int maximum)
    : Error("series order " + std::to_string(requested) + " exceeds the precomputed maximum " +
            std::to_string(maximum)),
      maximum_(maximum) {}

}  // namespace cliffexp
