#pragma once

namespace klab {

// Arithmetic "modulo [n]": results live in 1..n, with n standing for 0.
constexpr int mod_n(long long x, int n) {
  long long r = x % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

// Ordinary residue in 0..n-1.
constexpr int residue(long long x, int n) {
  long long r = x % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

}  // namespace klab
