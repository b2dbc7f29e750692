#include "klab/dihedral_element.hpp"

#include <charconv>
#include <stdexcept>

#include "klab/modular.hpp"

namespace klab {

DihedralElement::DihedralElement(DihedralKind kind, int index, int n) : kind_(kind), index_(index), n_(n) {
  if (n < 3) throw std::invalid_argument("dihedral element: n must be at least 3");
  switch (kind) {
    case DihedralKind::Rotation:
      if (index < 0 || index >= n) throw std::invalid_argument("rotation index out of range");
      break;
    case DihedralKind::ReflRho:
      if (index < 1 || index > (n % 2 ? n : n / 2)) throw std::invalid_argument("rho index out of range");
      break;
    case DihedralKind::ReflDelta:
      if (n % 2) throw std::invalid_argument("delta reflexions exist only for even n");
      if (index < 1 || index > n / 2) throw std::invalid_argument("delta index out of range");
      break;
  }
}

DihedralElement DihedralElement::rotation(int i, int n) { return {DihedralKind::Rotation, residue(i, n), n}; }
DihedralElement DihedralElement::rho(int i, int n) { return {DihedralKind::ReflRho, i, n}; }
DihedralElement DihedralElement::delta(int i, int n) { return {DihedralKind::ReflDelta, i, n}; }

DihedralElement DihedralElement::from_images(int image_of_1, int image_of_2, int n) {
  if (mod_n(image_of_1 + 1, n) == mod_n(image_of_2, n)) return rotation(image_of_1 - 1, n);
  // reflexion x -> c - x
  int c = residue(image_of_1 + 1, n);
  if (n % 2) {
    // 2i = c (mod n)
    int i = mod_n(static_cast<long long>(c) * ((n + 1) / 2), n);
    return rho(i, n);
  }
  if (c % 2 == 0) return rho(c == 0 ? n / 2 : c / 2, n);
  return delta((c + 1) / 2, n);
}

int DihedralElement::apply(int x) const {
  if (x < 1 || x > n_) throw std::out_of_range("dihedral apply: point outside [n]");
  switch (kind_) {
    case DihedralKind::Rotation: return mod_n(x + index_, n_);
    case DihedralKind::ReflRho: return mod_n(2 * index_ - x, n_);
    case DihedralKind::ReflDelta: return mod_n(2 * index_ - 1 - x, n_);
  }
  return x;
}

std::vector<int> DihedralElement::permutation() const {
  std::vector<int> out(n_);
  for (int x = 1; x <= n_; ++x) out[x - 1] = apply(x);
  return out;
}

std::string DihedralElement::to_string() const {
  char c = kind_ == DihedralKind::Rotation ? 'r' : kind_ == DihedralKind::ReflRho ? 'p' : 'd';
  return c + std::to_string(index_);
}

DihedralElement DihedralElement::parse(std::string_view text, int n) {
  if (text.size() < 2) throw std::invalid_argument("bad dihedral element '" + std::string(text) + "'");
  int idx = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), idx);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("bad dihedral element '" + std::string(text) + "'");
  switch (text[0]) {
    case 'r': return {DihedralKind::Rotation, idx, n};
    case 'p': return {DihedralKind::ReflRho, idx, n};
    case 'd': return {DihedralKind::ReflDelta, idx, n};
  }
  throw std::invalid_argument("bad dihedral element '" + std::string(text) + "'");
}

DihedralElement compose(const DihedralElement& a, const DihedralElement& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("compose: mismatched ambients");
  return DihedralElement::from_images(a.apply(b.apply(1)), a.apply(b.apply(2)), a.ambient());
}

DihedralElement inverse(const DihedralElement& a) {
  if (a.is_rotation()) return DihedralElement::rotation(-a.index(), a.ambient());
  return a;
}

DihedralElement rotation_times_rho(int j, int i, int n) {
  if (n % 2) {
    int m = (j % 2) ? i + (n - 1) / 2 + (j + 1) / 2 : i + j / 2;
    return DihedralElement::rho(mod_n(m, n), n);
  }
  int half = n / 2;
  if (j % 2) return DihedralElement::delta(mod_n(i + (j + 1) / 2, half), n);
  return DihedralElement::rho(mod_n(i + j / 2, half), n);
}

std::vector<DihedralElement> all_elements(int n) {
  std::vector<DihedralElement> out;
  out.reserve(2 * n);
  for (int i = 0; i < n; ++i) out.push_back(DihedralElement::rotation(i, n));
  int rhos = n % 2 ? n : n / 2;
  for (int i = 1; i <= rhos; ++i) out.push_back(DihedralElement::rho(i, n));
  if (n % 2 == 0)
    for (int i = 1; i <= n / 2; ++i) out.push_back(DihedralElement::delta(i, n));
  return out;
}

}  // namespace klab
