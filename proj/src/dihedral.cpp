#include "klab/dihedral.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <sstream>

#include "klab/families.hpp"
#include "klab/modular.hpp"

namespace klab {

KSubset act_on_vertex(const DihedralElement& e, const KSubset& v) {
  if (e.ambient() != v.ambient()) throw std::invalid_argument("act_on_vertex: ambient mismatch");
  std::vector<int> img;
  img.reserve(v.elements().size());
  for (int x : v.elements()) img.push_back(e.apply(x));
  return KSubset(std::move(img), v.ambient());
}

namespace {

std::vector<int> induced_permutation(const DihedralElement& e, const Graph& g, const std::map<KSubset, int>& index) {
  std::vector<int> perm(g.order());
  for (int v = 0; v < g.order(); ++v) {
    const KSubset* label = g.label(v).subset();
    if (!label) throw std::invalid_argument("induced_automorphism: graph lacks subset labels");
    auto it = index.find(act_on_vertex(e, *label));
    if (it == index.end())
      throw std::logic_error("induced_automorphism: " + e.to_string() + " maps " + label->to_string() + " outside V(G)");
    perm[v] = it->second;
  }
  if (!check_isomorphism(g, g, perm))
    throw std::logic_error("induced_automorphism: " + e.to_string() + " does not preserve adjacency");
  return perm;
}

ShiftCheck shift_check(const Graph& g, const std::vector<int>& perm) {
  for (int u = 0; u < g.order(); ++u)
    if (!g.adjacent(u, perm[u])) return {false, u};
  return {true, std::nullopt};
}

ShiftSet make_set(StableParameters p, std::vector<DihedralElement> members, ShiftProvenance prov) {
  std::sort(members.begin(), members.end());
  return ShiftSet{p.n, p.k, p.s, std::move(members), prov};
}

}  // namespace

std::vector<int> induced_automorphism(const DihedralElement& e, const Graph& g) {
  if (g.order() > 0 && g.label(0).subset() && g.label(0).subset()->ambient() != e.ambient())
    throw std::invalid_argument("induced_automorphism: ambient mismatch");
  return induced_permutation(e, g, subset_index(g));
}

ShiftCheck is_shift(const DihedralElement& e, const Graph& g) { return shift_check(g, induced_automorphism(e, g)); }

std::string ShiftSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members.size(); ++i) os << (i ? ", " : "") << members[i].to_string();
  os << '}';
  return os.str();
}

std::vector<std::string> ShiftSet::texts() const {
  std::vector<std::string> out;
  for (const auto& e : members) out.push_back(e.to_string());
  return out;
}

StableParameters stable_parameters(const Graph& g) {
  if (g.order() == 0 || !g.has_labels()) throw std::invalid_argument("expected a non-empty subset-labelled graph");
  StableParameters p;
  p.s = std::numeric_limits<int>::max();
  for (const auto& l : g.labels()) {
    const KSubset* v = l.subset();
    if (!v) throw std::invalid_argument("expected subset labels");
    if (p.n == 0) {
      p.n = v->ambient();
      p.k = v->k();
    } else if (p.n != v->ambient() || p.k != v->k()) {
      throw std::invalid_argument("inconsistent subset labels");
    }
    auto gaps = v->gaps();
    p.s = std::min(p.s, *std::min_element(gaps.begin(), gaps.end()));
  }
  return p;
}

ShiftSet enumerate_shifts_serial(const Graph& g) {
  auto p = stable_parameters(g);
  auto index = subset_index(g);
  std::vector<DihedralElement> members;
  for (const auto& e : all_elements(p.n))
    if (shift_check(g, induced_permutation(e, g, index)).shift) members.push_back(e);
  return make_set(p, std::move(members), ShiftProvenance::BruteForce);
}

ShiftSet enumerate_shifts(const Graph& g) {
  auto p = stable_parameters(g);
  auto index = subset_index(g);
  const auto elems = all_elements(p.n);
  const int m = static_cast<int>(elems.size());
  std::vector<char> hit(m, 0);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < m; ++i) {
    try {
      hit[i] = shift_check(g, induced_permutation(elems[i], g, index)).shift;
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<DihedralElement> members;
  for (int i = 0; i < m; ++i)
    if (hit[i]) members.push_back(elems[i]);
  return make_set(p, std::move(members), ShiftProvenance::BruteForce);
}

ShiftSet predicted_shifts(int n, int k, int s) {
  if (s < 2 || k < 2) throw std::invalid_argument("predicted_shifts requires s,k >= 2");
  if (n <= s * k)
    throw std::invalid_argument("predicted_shifts: no characterisation for n <= sk (n=" + std::to_string(n) + ")");
  std::vector<int> idx;
  for (int i = 1; i <= s - 1; ++i) idx.push_back(i);
  for (int i = n - s + 1; i <= n - 1; ++i) idx.push_back(i);
  if (n <= (k + 1) * s - 2) {
    const int r = n - s * k;
    for (int m = 1; m <= k - 2; ++m)  // empty for k = 2
      for (int i = m * s + r + 1; i <= (m + 1) * s - 1; ++i) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<DihedralElement> members;
  for (int i : idx) members.push_back(DihedralElement::rotation(i, n));
  return make_set({n, k, s}, std::move(members), ShiftProvenance::LemmaFormula);
}

KSubset non_shift_witness(const DihedralElement& e, int n, int k, int s) {
  if (e.ambient() != n) throw std::invalid_argument("non_shift_witness: ambient mismatch");
  if (e.is_identity()) throw std::invalid_argument("non_shift_witness: the identity has no witness");
  auto predicted = predicted_shifts(n, k, s);
  if (std::find(predicted.members.begin(), predicted.members.end(), e) != predicted.members.end())
    throw std::invalid_argument("non_shift_witness: " + e.to_string() + " is predicted to be a shift");

  const int i = e.index();
  std::vector<int> elems;
  auto at = [n](long long x) { return mod_n(x, n); };
  switch (e.kind()) {
    case DihedralKind::ReflRho:
      // contains the fixed point i
      elems.push_back(at(i - s));
      for (int t = 0; t <= k - 2; ++t) elems.push_back(at(i + t * s));
      break;
    case DihedralKind::ReflDelta:
      if (k == 2) {
        // {i+t, i-1-t} is fixed by delta_i; its gaps are 2t+1 in {s, s+1} and n-2t-1 >= s
        const int t = s / 2;
        elems = {at(i + t), at(i - 1 - t)};
        break;
      }
      // {i, i+s, ..., i+(k-2)s, i-s-1}: delta_i swaps i+s and i-s-1
      for (int t = 0; t <= k - 2; ++t) elems.push_back(at(i + t * s));
      elems.push_back(at(i - s - 1));
      break;
    case DihedralKind::Rotation:
      if (n >= (k + 1) * s - 1) {
        // 1 and 1+i both in v
        if (i <= k * s - 1) {
          const int j = i / s;
          for (int t = 0; t <= j - 1; ++t) elems.push_back(1 + t * s);
          for (int t = 0; t <= k - j - 1; ++t) elems.push_back(at(1 + i + t * s));
        } else {
          for (int t = 0; t <= k - 2; ++t) elems.push_back(1 + t * s);
          elems.push_back(at(1 + i));
        }
      } else {
        // i lies in a block {ds, ..., ds+r}
        const int r = n - s * k;
        const int d = i / s, t = i - d * s;
        if (d < 1 || d > k - 1 || t > r) throw std::logic_error("non_shift_witness: rotation outside the witness blocks");
        elems.push_back(1);
        for (int m = 1; m <= k - 1; ++m) elems.push_back(1 + m * s + t);
      }
      break;
  }
  KSubset v(std::move(elems), n);
  if (v.k() != k || !is_s_stable(v, s))
    throw std::logic_error("non_shift_witness: constructed " + v.to_string() + " is not an s-stable k-subset");
  if (!v.intersects(act_on_vertex(e, v)))
    throw std::logic_error("non_shift_witness: " + v.to_string() + " does not witness " + e.to_string());
  return v;
}

}  // namespace klab
