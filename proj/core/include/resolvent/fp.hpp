#pragma once
#include <cstdint>
#include <stdexcept>

namespace resolvent::fp {

/* Session-wide prime modulus. Set once at startup (CLI flag --p); all matrix
   arithmetic in the library reduces modulo this value. */
uint32_t modulus();
void set_modulus(uint32_t p);

inline uint32_t normalize(int64_t v, uint32_t p) {
  int64_t r = v % static_cast<int64_t>(p);
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

inline uint32_t add(uint32_t a, uint32_t b) { uint32_t p = modulus(); uint32_t s = a + b; return s >= p ? s - p : s; }
inline uint32_t sub(uint32_t a, uint32_t b) { uint32_t p = modulus(); return a >= b ? a - b : a + p - b; }
inline uint32_t mul(uint32_t a, uint32_t b) { return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % modulus()); }
inline uint32_t neg(uint32_t a) { return a == 0 ? 0 : modulus() - a; }

uint32_t inv(uint32_t a);  // throws on 0

}  // namespace resolvent::fp
