#pragma once

namespace linpot {

struct AiryValue {
  double ai;
  double ai_prime;
};

// Airy function Ai and its derivative for real argument.
// Relative error <= 1e-12 on [-30, 8]; for x > 8 the exponentially
// decaying asymptotic form is used, underflowing gracefully to 0.
// Throws EvaluationError for non-finite input.
AiryValue airy_ai(double x);

// Argmax of Ai on the real line (the first zero of Ai', frozen from a
// high-precision offline computation; accurate to full double precision).
double airy_peak_offset();

}  // namespace linpot
