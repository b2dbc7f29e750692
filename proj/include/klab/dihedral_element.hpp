#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace klab {

enum class DihedralKind { Rotation, ReflRho, ReflDelta };

// An element of the dihedral group D_2n acting on [n].
//
//   Rotation(i), 0 <= i < n        x -> x + i
//   ReflRho(i)                     x -> 2i - x      (fixes i, and i + n/2 when n is even)
//   ReflDelta(i), n even only      x -> 2i - 1 - x  (fixed-point free)
//
// ReflRho indices run over 1..n for odd n and 1..n/2 for even n; ReflDelta over 1..n/2.
// All arithmetic is modulo [n]. Elements are always held in this canonical form, so
// equality of elements is equality of permutations.
class DihedralElement {
public:
  DihedralElement() = default;
  DihedralElement(DihedralKind kind, int index, int n);

  static DihedralElement rotation(int i, int n);
  static DihedralElement rho(int i, int n);
  static DihedralElement delta(int i, int n);
  static DihedralElement identity(int n) { return rotation(0, n); }

  // Reads the canonical form off the images of 1 and 2 under `perm` (perm[x-1] = image of x).
  static DihedralElement from_images(int image_of_1, int image_of_2, int n);

  DihedralKind kind() const { return kind_; }
  int index() const { return index_; }
  int ambient() const { return n_; }
  bool is_rotation() const { return kind_ == DihedralKind::Rotation; }
  bool is_identity() const { return is_rotation() && index_ == 0; }

  int apply(int x) const;
  std::vector<int> permutation() const;  // images of 1..n

  std::string to_string() const;  // "r3", "p1", "d2"
  // Accepts the text form; n supplies the ambient.
  static DihedralElement parse(std::string_view text, int n);

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;

private:
  DihedralKind kind_ = DihedralKind::Rotation;
  int index_ = 0;
  int n_ = 0;
};

// x -> a(b(x)), normalised.
DihedralElement compose(const DihedralElement& a, const DihedralElement& b);
DihedralElement inverse(const DihedralElement& a);

// Closed-form product sigma^j * rho_i from the reflexion parity rules. Kept separate from
// compose() so the two routes can be checked against each other.
DihedralElement rotation_times_rho(int j, int i, int n);

// All 2n elements: rotations r0..r(n-1), then rho's, then delta's (even n).
std::vector<DihedralElement> all_elements(int n);

}  // namespace klab
