#include "courant/calc/alt_tensor.hpp"

#include <algorithm>
#include <string>

#include "courant/errors.hpp"

namespace courant {

std::vector<std::size_t> mask_indices(IndexMask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

IndexMask mask_of(std::span<const std::size_t> indices) {
  IndexMask m = 0;
  for (auto i : indices) {
    if (i >= 32) throw DimensionMismatch("frame index exceeds 31");
    if (m & (IndexMask(1) << i)) throw std::invalid_argument("repeated index in mask");
    m |= IndexMask(1) << i;
  }
  return m;
}

int wedge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  int inversions = 0;
  IndexMask bb = b;
  while (bb) {
    const int j = std::countr_zero(bb);
    bb &= bb - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

namespace {

const Poly& zero_poly() {
  static const Poly zero;
  return zero;
}

// Sign of the permutation sorting `indices`, or 0 on a repeat.
int sort_sign(std::span<const std::size_t> indices, IndexMask& mask) {
  mask = 0;
  int inversions = 0;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    const IndexMask bit = IndexMask(1) << indices[a];
    if (mask & bit) return 0;
    // Count earlier indices larger than this one.
    inversions += std::popcount(mask >> (indices[a] + 1));
    mask |= bit;
  }
  return (inversions & 1) ? -1 : 1;
}

}  // namespace

AltTensor::AltTensor(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
  if (dim > 32) throw DimensionMismatch("frames are limited to 32 elements");
}

AltTensor AltTensor::scalar(std::size_t dim, const Poly& f) {
  AltTensor t(dim, 0);
  t.add(0, f);
  return t;
}

AltTensor AltTensor::from_vector(std::span<const Poly> coeffs) {
  AltTensor t(coeffs.size(), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) t.add(IndexMask(1) << i, coeffs[i]);
  return t;
}

AltTensor AltTensor::basis(std::size_t dim, IndexMask mask, const Poly& coeff) {
  AltTensor t(dim, mask_degree(mask));
  t.add(mask, coeff);
  return t;
}

const Poly& AltTensor::operator[](IndexMask mask) const {
  auto it = comps_.find(mask);
  return it == comps_.end() ? zero_poly() : it->second;
}

Poly AltTensor::on_sequence(std::span<const std::size_t> indices) const {
  IndexMask m = 0;
  const int s = sort_sign(indices, m);
  if (s == 0) return Poly();
  const Poly& v = (*this)[m];
  return s > 0 ? v : -v;
}

void AltTensor::add(IndexMask mask, const Poly& value) {
  if (value.is_zero()) return;
  if (mask_degree(mask) != degree_ || (dim_ < 32 && (mask >> dim_) != 0)) {
    throw DimensionMismatch("component index does not fit the tensor's degree/rank");
  }
  auto [it, inserted] = comps_.try_emplace(mask, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

void AltTensor::add_sequence(std::span<const std::size_t> indices, const Poly& value) {
  IndexMask m = 0;
  const int s = sort_sign(indices, m);
  if (s == 0) return;
  add(m, s > 0 ? value : -value);
}

std::vector<Poly> AltTensor::as_vector() const {
  if (degree_ != 1) throw DimensionMismatch("as_vector needs a degree-1 tensor");
  std::vector<Poly> v(dim_);
  for (const auto& [m, p] : comps_) v[static_cast<std::size_t>(std::countr_zero(m))] = p;
  return v;
}

unsigned AltTensor::max_coeff_degree() const {
  unsigned d = 0;
  for (const auto& [m, p] : comps_) d = std::max(d, p.degree());
  return d;
}

void AltTensor::require_compatible(const AltTensor& rhs, const char* what) const {
  if (dim_ != rhs.dim_ || degree_ != rhs.degree_) {
    throw DimensionMismatch(std::string(what) + ": tensors of shape (" + std::to_string(dim_) + "," +
                            std::to_string(degree_) + ") and (" + std::to_string(rhs.dim_) + "," +
                            std::to_string(rhs.degree_) + ")");
  }
}

AltTensor& AltTensor::operator+=(const AltTensor& rhs) {
  require_compatible(rhs, "tensor sum");
  for (const auto& [m, p] : rhs.comps_) add(m, p);
  return *this;
}

AltTensor& AltTensor::operator-=(const AltTensor& rhs) {
  require_compatible(rhs, "tensor difference");
  for (const auto& [m, p] : rhs.comps_) add(m, -p);
  return *this;
}

AltTensor& AltTensor::operator*=(const Poly& f) {
  if (f.is_zero()) {
    comps_.clear();
    return *this;
  }
  for (auto it = comps_.begin(); it != comps_.end();) {
    it->second *= f;
    it = it->second.is_zero() ? comps_.erase(it) : std::next(it);
  }
  return *this;
}

AltTensor AltTensor::operator-() const {
  AltTensor t = *this;
  for (auto& [m, p] : t.comps_) p = -p;
  return t;
}

bool AltTensor::operator==(const AltTensor& rhs) const {
  if (dim_ != rhs.dim_ || degree_ != rhs.degree_ || comps_.size() != rhs.comps_.size()) return false;
  auto a = comps_.begin();
  auto b = rhs.comps_.begin();
  for (; a != comps_.end(); ++a, ++b)
    if (a->first != b->first || !(a->second == b->second)) return false;
  return true;
}

AltTensor wedge(const AltTensor& a, const AltTensor& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge of tensors over different ranks");
  AltTensor out(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, pa] : a.components())
    for (const auto& [mb, pb] : b.components()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Poly v = pa * pb;
      out.add(ma | mb, s > 0 ? v : -v);
    }
  return out;
}

AltTensor contract(const AltTensor& covector, const AltTensor& t) {
  if (covector.degree() != 1) throw DimensionMismatch("contraction needs a degree-1 element");
  if (covector.dim() != t.dim()) throw DimensionMismatch("contraction over different ranks");
  if (t.degree() == 0) throw DimensionMismatch("contraction into a degree-0 element");
  AltTensor out(t.dim(), t.degree() - 1);
  for (const auto& [mc, c] : covector.components()) {
    for (const auto& [m, p] : t.components()) {
      if (!(m & mc)) continue;
      const int pos = std::popcount(m & (mc - 1));
      Poly v = c * p;
      out.add(m & ~mc, (pos & 1) ? -v : v);
    }
  }
  return out;
}

Poly pair(const AltTensor& a, const AltTensor& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) throw DimensionMismatch("pairing of mismatched tensors");
  Poly acc;
  for (const auto& [m, p] : a.components()) {
    const Poly& q = b[m];
    if (!q.is_zero()) acc += p * q;
  }
  return acc;
}

AltTensor right_derivative(const AltTensor& t, std::size_t i) {
  if (t.degree() == 0) return AltTensor(t.dim(), 0);
  AltTensor out(t.dim(), t.degree() - 1);
  const IndexMask bit = IndexMask(1) << i;
  for (const auto& [m, p] : t.components()) {
    if (!(m & bit)) continue;
    const int after = std::popcount(m >> (i + 1));
    out.add(m & ~bit, (after & 1) ? -p : p);
  }
  return out;
}

AltTensor partial(const AltTensor& t, std::size_t var) {
  AltTensor out(t.dim(), t.degree());
  for (const auto& [m, p] : t.components()) out.add(m, p.derivative(var));
  return out;
}

}  // namespace courant
