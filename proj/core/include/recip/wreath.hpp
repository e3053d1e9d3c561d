#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace recip {

// permutation of {0..n-1} stored as an image array: img[i] is where i goes
struct Perm {
  std::vector<int> img;

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<size_t>(i)]; }

  static Perm identity(int n);
  static Perm transposition(int n, int a, int b);
  static Perm full_cycle(int n);  // 0 -> 1 -> ... -> n-1 -> 0

  Perm compose(const Perm& other) const;  // apply `other` first, then this
  Perm inverse() const;
  int sign() const;                       // +1 or -1
  bool is_identity() const;
  std::vector<int> cycle_type() const;    // cycle lengths, descending
  std::string str() const;                // one-line image notation "2,0,1"

  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& o) const { return img < o.img; }
};

// element (v, sigma) of the hyperoctahedral group F2^n ⋊ S_n, with
// (v,s)(w,t) = (v ⊕ s·w, s∘t) and the coordinate action (s·w)_{s(i)} = w_i
struct WreathElement {
  std::uint32_t v = 0;
  Perm sigma;

  int n() const { return sigma.n(); }
  bool operator==(const WreathElement&) const = default;
  bool operator<(const WreathElement& o) const {
    return v != o.v ? v < o.v : sigma < o.sigma;
  }
};

std::uint32_t perm_act(const Perm& sigma, std::uint32_t v);

WreathElement wreath_identity(int n);
WreathElement multiply(const WreathElement& a, const WreathElement& b);
WreathElement inverse(const WreathElement& a);

// action on 2n points grouped in pairs (2i, 2i+1): within-pair flips from v,
// pair shuffling from sigma
Perm embed_2n(const WreathElement& e);

// same on the first 2n points, plus the plain sigma action on n extra points
Perm embed_3n(const WreathElement& e);

int popcount_bits(std::uint32_t v);

}  // namespace recip
