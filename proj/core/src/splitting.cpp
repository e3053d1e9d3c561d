#include "recip/splitting.hpp"

#include <algorithm>
#include <sstream>

#include "recip/errors.hpp"

namespace recip {

namespace {

bool shape_before(const FactorShape& a, const FactorShape& b) {
  if (a.f != b.f) return a.f > b.f;
  return a.e > b.e;
}

void canonicalize(SplittingType& st) {
  auto begin = st.parts.begin();
  if (st.marked != MarkAt::none && !st.parts.empty()) ++begin;
  std::sort(begin, st.parts.end(), shape_before);
}

}  // namespace

int SplittingType::degree() const {
  if (degenerate) throw DomainError("degree of identically-zero reduction");
  int d = 0;
  for (const auto& s : parts) d += s.e * s.f;
  return d;
}

int SplittingType::index() const {
  if (degenerate) throw DomainError("index of identically-zero reduction");
  int k = 0;
  for (const auto& s : parts) k += (s.e - 1) * s.f;
  return k;
}

bool SplittingType::separable() const {
  if (degenerate) return false;
  for (const auto& s : parts)
    if (s.e != 1) return false;
  return true;
}

std::vector<int> SplittingType::cycle_type() const {
  if (!separable()) throw DomainError("cycle type requires a separable reduction");
  std::vector<int> out;
  out.reserve(parts.size());
  for (const auto& s : parts) out.push_back(s.f);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string SplittingType::str() const {
  if (degenerate) return "0";
  if (parts.empty()) return "()";
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ' ';
    if (i == 0 && marked != MarkAt::none) os << '@';
    os << parts[i].f;
    if (parts[i].e != 1) os << '^' << parts[i].e;
  }
  return os.str();
}

SplittingType SplittingType::of(std::vector<FactorShape> shapes) {
  SplittingType st;
  st.parts = std::move(shapes);
  canonicalize(st);
  return st;
}

bool SplittingType::operator==(const SplittingType& o) const {
  return degenerate == o.degenerate && marked == o.marked && parts == o.parts;
}

bool SplittingType::operator<(const SplittingType& o) const {
  if (degenerate != o.degenerate) return degenerate < o.degenerate;
  if (marked != o.marked) return marked < o.marked;
  if (parts.size() != o.parts.size()) return parts.size() < o.parts.size();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].f != o.parts[i].f) return parts[i].f < o.parts[i].f;
    if (parts[i].e != o.parts[i].e) return parts[i].e < o.parts[i].e;
  }
  return false;
}

namespace {

// shapes of a nonzero reduction, plus the multiplicity of the root `t` when
// requested (0 when t is not a root); d=1 shapes at t are emitted separately
std::vector<FactorShape> shapes_of(const FpPoly& Pp, bool want_root,
                                   std::uint64_t t, int* root_mult) {
  std::vector<FactorShape> shapes;
  if (root_mult) *root_mult = 0;
  for (const auto& [layer, e] : fp_squarefree(Pp)) {
    bool hits_t = want_root && fp_eval(layer, t) == 0;
    if (hits_t && root_mult) *root_mult = e;
    for (const auto& [d, prod] : fp_distinct_degree(layer)) {
      int count = prod.degree() / d;
      if (d == 1 && hits_t) --count;  // the marked root is reported separately
      for (int i = 0; i < count; ++i) shapes.push_back({d, e});
    }
  }
  return shapes;
}

}  // namespace

SplittingType splitting_type_mod_p(const IntPoly& P, std::uint64_t p, MarkAt mark) {
  SplittingType st;
  FpPoly Pp = reduce_mod_p(P, p);
  if (Pp.is_zero()) {
    st.degenerate = true;
    return st;
  }
  bool want = mark != MarkAt::none;
  std::uint64_t t = 0;
  if (want) t = (mark == MarkAt::plus_two) ? 2 % p : (p - 2 % p) % p;
  int root_mult = 0;
  st.parts = shapes_of(Pp, want, t, &root_mult);
  if (want && root_mult > 0) {
    st.marked = mark;
    st.parts.insert(st.parts.begin(), FactorShape{1, root_mult});
  }
  canonicalize(st);
  return st;
}

SplittingType form_splitting_type_mod_p(const IntPoly& P, int form_degree,
                                        std::uint64_t p) {
  if (form_degree < P.degree())
    throw ShapeError("form degree below polynomial degree");
  SplittingType st;
  FpPoly Pp = reduce_mod_p(P, p);
  if (Pp.is_zero()) {
    st.degenerate = true;
    return st;
  }
  st.parts = shapes_of(Pp, false, 0, nullptr);
  int drop = form_degree - Pp.degree();
  if (drop > 0) st.parts.push_back({1, drop});  // the cluster at infinity
  canonicalize(st);
  return st;
}

namespace {

mpz_class aut_of_range(const std::vector<FactorShape>& parts, size_t first_movable) {
  mpz_class out = 1;
  for (const auto& s : parts) out *= s.f;
  // runs of identical shapes among the movable tail contribute factorials
  size_t i = first_movable;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    for (size_t m = 2; m <= j - i; ++m) out *= static_cast<unsigned long>(m);
    i = j;
  }
  return out;
}

}  // namespace

mpz_class aut_count(const SplittingType& sigma) {
  if (sigma.degenerate) throw DomainError("aut count of identically-zero reduction");
  // ignore the pin: sort a copy fully so identical shapes group together
  std::vector<FactorShape> all = sigma.parts;
  std::sort(all.begin(), all.end(), shape_before);
  return aut_of_range(all, 0);
}

mpz_class aut_count_pinned(const SplittingType& sigma) {
  if (sigma.degenerate) throw DomainError("aut count of identically-zero reduction");
  if (sigma.marked == MarkAt::none || sigma.parts.empty()) return aut_count(sigma);
  return aut_of_range(sigma.parts, 1);
}

IndexValuationReport index_valuation_check(const IntPoly& g, std::uint64_t p) {
  IndexValuationReport rep{IndexValuationReport::Status::skipped, 0, 0};
  SplittingType st = splitting_type_mod_p(g, p);
  if (st.degenerate) return rep;
  mpz_class disc = discriminant(g);
  if (disc == 0) return rep;
  rep.index = st.index();
  mpz_class pz(static_cast<unsigned long>(p));
  int v = 0;
  while (mpz_divisible_p(disc.get_mpz_t(), pz.get_mpz_t())) {
    disc /= pz;
    ++v;
  }
  rep.valuation = v;
  rep.status = rep.index <= rep.valuation ? IndexValuationReport::Status::ok
                                          : IndexValuationReport::Status::violated;
  return rep;
}

}  // namespace recip
