#include "recip/wreath.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "recip/errors.hpp"

namespace recip {

int popcount_bits(std::uint32_t v) { return std::popcount(v); }

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(static_cast<size_t>(n));
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Perm Perm::transposition(int n, int a, int b) {
  Perm p = identity(n);
  std::swap(p.img[static_cast<size_t>(a)], p.img[static_cast<size_t>(b)]);
  return p;
}

Perm Perm::full_cycle(int n) {
  Perm p;
  p.img.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p.img[static_cast<size_t>(i)] = (i + 1) % n;
  return p;
}

Perm Perm::compose(const Perm& other) const {
  if (n() != other.n()) throw ShapeError("composing permutations of different sizes");
  Perm r;
  r.img.resize(img.size());
  for (int i = 0; i < n(); ++i)
    r.img[static_cast<size_t>(i)] = img[static_cast<size_t>(other.img[static_cast<size_t>(i)])];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (int i = 0; i < n(); ++i) r.img[static_cast<size_t>(img[static_cast<size_t>(i)])] = i;
  return r;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img[static_cast<size_t>(i)] != i) return false;
  return true;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> lens;
  std::vector<bool> seen(img.size(), false);
  for (int i = 0; i < n(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      j = img[static_cast<size_t>(j)];
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

int Perm::sign() const {
  int s = 1;
  for (int len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

std::string Perm::str() const {
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (i) out += ',';
    out += std::to_string(img[static_cast<size_t>(i)]);
  }
  return out;
}

std::uint32_t perm_act(const Perm& sigma, std::uint32_t v) {
  std::uint32_t out = 0;
  for (int i = 0; i < sigma.n(); ++i)
    if (v >> i & 1u) out |= 1u << sigma(i);
  return out;
}

WreathElement wreath_identity(int n) { return WreathElement{0, Perm::identity(n)}; }

WreathElement multiply(const WreathElement& a, const WreathElement& b) {
  if (a.n() != b.n()) throw ShapeError("multiplying wreath elements of different sizes");
  return WreathElement{a.v ^ perm_act(a.sigma, b.v), a.sigma.compose(b.sigma)};
}

WreathElement inverse(const WreathElement& a) {
  Perm si = a.sigma.inverse();
  return WreathElement{perm_act(si, a.v), si};
}

Perm embed_2n(const WreathElement& e) {
  int n = e.n();
  Perm p;
  p.img.resize(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    int ti = e.sigma(i);
    std::uint32_t flip = e.v >> ti & 1u;
    for (int b = 0; b < 2; ++b)
      p.img[static_cast<size_t>(2 * i + b)] = 2 * ti + (b ^ static_cast<int>(flip));
  }
  return p;
}

Perm embed_3n(const WreathElement& e) {
  int n = e.n();
  Perm two = embed_2n(e);
  Perm p;
  p.img.resize(static_cast<size_t>(3 * n));
  for (int i = 0; i < 2 * n; ++i) p.img[static_cast<size_t>(i)] = two.img[static_cast<size_t>(i)];
  for (int i = 0; i < n; ++i) p.img[static_cast<size_t>(2 * n + i)] = 2 * n + e.sigma(i);
  return p;
}

}  // namespace recip
