#pragma once

#include "uaw/ratfunc.hpp"

#include <random>

namespace uaw::testing {

inline LaurentQ qp(int e, const QRational& c = 1) { return LaurentQ::q_power(e, c); }
inline RatFuncQ rq(int e, const QRational& c = 1) { return RatFuncQ::q_power(e, c); }

// q^a - q^b
inline LaurentQ qdiff(int a, int b) { return qp(a) - qp(b); }

// nonzero with probability ~1; coefficients and exponents kept small
inline LaurentQ random_laurent(std::mt19937_64& rng, int max_terms = 4, int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  std::uniform_int_distribution<int> coef(-5, 5);
  LaurentQ x;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) x.add_term(exp(rng), coef(rng));
  return x;
}

inline LaurentQ random_laurent_nonzero(std::mt19937_64& rng, int max_terms = 4, int max_exp = 3) {
  for (;;) {
    LaurentQ x = random_laurent(rng, max_terms, max_exp);
    if (!x.is_zero()) return x;
  }
}

inline RatFuncQ random_ratfunc(std::mt19937_64& rng) {
  return RatFuncQ(random_laurent(rng), random_laurent_nonzero(rng));
}

}  // namespace uaw::testing
