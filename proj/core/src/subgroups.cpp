#include "recip/subgroups.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "recip/errors.hpp"

namespace recip {

namespace {

int top_bit(std::uint32_t v) {
  int b = -1;
  while (v) {
    ++b;
    v >>= 1;
  }
  return b;
}

}  // namespace

std::uint32_t Subspace::reduce(std::uint32_t v) const {
  for (std::uint32_t b : basis)
    if (v >> top_bit(b) & 1u) v ^= b;
  return v;
}

std::vector<std::uint32_t> Subspace::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(1u << dim());
  for (std::uint32_t m = 0; m < (1u << dim()); ++m) {
    std::uint32_t v = 0;
    for (int i = 0; i < dim(); ++i)
      if (m >> i & 1u) v ^= basis[static_cast<size_t>(i)];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace make_subspace(int n, const std::vector<std::uint32_t>& gens) {
  Subspace s;
  s.n = n;
  for (std::uint32_t g : gens) {
    std::uint32_t r = s.reduce(g);
    if (r == 0) continue;
    s.basis.push_back(r);
    std::sort(s.basis.begin(), s.basis.end(),
              [](std::uint32_t a, std::uint32_t b) { return top_bit(a) > top_bit(b); });
  }
  // back-substitute so every pivot bit appears in exactly one basis vector
  for (size_t i = 0; i < s.basis.size(); ++i) {
    int p = top_bit(s.basis[i]);
    for (size_t j = 0; j < s.basis.size(); ++j)
      if (j != i && (s.basis[j] >> p & 1u)) s.basis[j] ^= s.basis[i];
  }
  std::sort(s.basis.begin(), s.basis.end(),
            [](std::uint32_t a, std::uint32_t b) { return top_bit(a) > top_bit(b); });
  return s;
}

std::vector<Subspace> invariant_subspaces(int n) {
  if (n < 1) throw ShapeError("invariant_subspaces needs n >= 1");
  if (n > 20) throw ResourceError("invariant_subspaces capped at n = 20");
  Perm s = n >= 2 ? Perm::transposition(n, 0, 1) : Perm::identity(n);
  Perm t = Perm::full_cycle(n);

  // smallest stable subspace containing one vector of each weight
  std::vector<Subspace> pool;
  for (int w = 0; w <= n; ++w) {
    std::uint32_t rep = w == 0 ? 0u : (1u << w) - 1u;
    Subspace sp = make_subspace(n, {rep});
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint32_t b : std::vector<std::uint32_t>(sp.basis)) {
        for (const Perm* g : {&s, &t}) {
          std::uint32_t im = perm_act(*g, b);
          if (!sp.contains(im)) {
            std::vector<std::uint32_t> gens = sp.basis;
            gens.push_back(im);
            sp = make_subspace(n, gens);
            grew = true;
          }
        }
      }
    }
    pool.push_back(sp);
  }

  // close the collection under sums of subspaces
  std::set<std::vector<std::uint32_t>> seen;
  std::deque<Subspace> work(pool.begin(), pool.end());
  std::vector<Subspace> out;
  while (!work.empty()) {
    Subspace sp = work.front();
    work.pop_front();
    if (!seen.insert(sp.basis).second) continue;
    out.push_back(sp);
    for (const Subspace& other : out) {
      std::vector<std::uint32_t> gens = sp.basis;
      gens.insert(gens.end(), other.basis.begin(), other.basis.end());
      Subspace join = make_subspace(n, gens);
      if (!seen.count(join.basis)) work.push_back(join);
    }
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis < b.basis;
  });
  return out;
}

std::string tag_name(SubgroupTag t) {
  switch (t) {
    case SubgroupTag::FULL: return "FULL";
    case SubgroupTag::G1: return "G1";
    case SubgroupTag::G2: return "G2";
    case SubgroupTag::G3: return "G3";
    case SubgroupTag::SN_PLAIN: return "SN_PLAIN";
    case SubgroupTag::SN_TWISTED: return "SN_TWISTED";
    case SubgroupTag::EXC_2S4: return "EXC_2S4";
    case SubgroupTag::OTHER: return "OTHER";
  }
  return "OTHER";
}

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm{img});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// dense multiplication table for F2^n ⋊ S_n, element id = perm_rank * 2^n + v
struct GroupTable {
  int n = 0;
  long size = 0;
  std::vector<Perm> perms;
  std::map<std::vector<int>, int> prank;
  std::vector<int> mult;  // size x size
  std::vector<int> inv;

  explicit GroupTable(int nn) : n(nn) {
    perms = all_perms(n);
    for (size_t i = 0; i < perms.size(); ++i) prank[perms[i].img] = static_cast<int>(i);
    size = static_cast<long>(perms.size()) << n;
    mult.assign(static_cast<size_t>(size) * static_cast<size_t>(size), 0);
    inv.assign(static_cast<size_t>(size), 0);
    for (long a = 0; a < size; ++a) {
      WreathElement ea = el(a);
      inv[static_cast<size_t>(a)] = id(inverse(ea));
      for (long b = 0; b < size; ++b)
        mult[static_cast<size_t>(a * size + b)] = id(multiply(ea, el(b)));
    }
  }

  int id(const WreathElement& e) const {
    return (prank.at(e.sigma.img) << n) | static_cast<int>(e.v);
  }
  WreathElement el(long i) const {
    return WreathElement{static_cast<std::uint32_t>(i & ((1 << n) - 1)),
                         perms[static_cast<size_t>(i >> n)]};
  }
  int mul(int a, int b) const { return mult[static_cast<size_t>(a) * static_cast<size_t>(size) + static_cast<size_t>(b)]; }
};

std::vector<int> closure_ids(const GroupTable& tab, const std::vector<int>& gens) {
  std::vector<char> in(static_cast<size_t>(tab.size), 0);
  std::vector<int> elems;
  std::deque<int> work;
  auto push = [&](int x) {
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = 1;
      work.push_back(x);
    }
  };
  push(tab.id(wreath_identity(tab.n)));
  for (int g : gens) push(g);
  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    for (int y : elems) {
      push(tab.mul(x, y));
      push(tab.mul(y, x));
    }
    push(tab.mul(x, x));
    elems.push_back(x);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// literal defining predicates, as sorted id sets
std::vector<int> predicate_ids(const GroupTable& tab, SubgroupTag t) {
  std::vector<int> out;
  std::uint32_t ones = (1u << tab.n) - 1u;
  for (long i = 0; i < tab.size; ++i) {
    WreathElement e = tab.el(i);
    int wt = popcount_bits(e.v);
    bool keep = false;
    switch (t) {
      case SubgroupTag::FULL: keep = true; break;
      case SubgroupTag::G1: keep = wt % 2 == 0; break;
      case SubgroupTag::G2: keep = (wt % 2) == (e.sigma.sign() < 0 ? 1 : 0); break;
      case SubgroupTag::G3: keep = e.v == 0 || e.v == ones; break;
      case SubgroupTag::SN_PLAIN: keep = e.v == 0; break;
      case SubgroupTag::SN_TWISTED:
        keep = e.v == (e.sigma.sign() < 0 ? ones : 0u);
        break;
      default: keep = false;
    }
    if (keep) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

std::vector<SubgroupClass> overgroup_census(int n) {
  if (n < 1) throw ShapeError("overgroup_census needs n >= 1");
  if (n > 4) throw ResourceError("overgroup_census capped at n = 4");
  GroupTable tab(n);
  Perm s = n >= 2 ? Perm::transposition(n, 0, 1) : Perm::identity(n);
  Perm t = Perm::full_cycle(n);

  // distinct subgroups, keyed by sorted element ids, with construction data
  std::map<std::vector<int>, std::vector<WreathElement>> distinct;
  for (const Subspace& y : invariant_subspaces(n)) {
    for (std::uint32_t xs = 0; xs < (1u << n); ++xs) {
      if (y.reduce(xs) != xs) continue;  // generators only need coset reps
      for (std::uint32_t xt = 0; xt < (1u << n); ++xt) {
        if (y.reduce(xt) != xt) continue;
        std::vector<WreathElement> gens;
        for (std::uint32_t b : y.basis) gens.push_back({b, Perm::identity(n)});
        gens.push_back({xs, s});
        gens.push_back({xt, t});
        std::vector<int> ids;
        for (const WreathElement& g : gens) ids.push_back(tab.id(g));
        std::vector<int> h = closure_ids(tab, ids);
        distinct.emplace(std::move(h), gens);
      }
    }
  }

  std::vector<int> g2set = predicate_ids(tab, SubgroupTag::G2);
  std::vector<std::pair<SubgroupTag, std::vector<int>>> literals;
  for (SubgroupTag tg : {SubgroupTag::FULL, SubgroupTag::G1, SubgroupTag::G2,
                         SubgroupTag::G3, SubgroupTag::SN_PLAIN, SubgroupTag::SN_TWISTED})
    literals.emplace_back(tg, predicate_ids(tab, tg));

  std::vector<SubgroupClass> classes;
  std::set<std::vector<int>> assigned;
  for (const auto& [h, gens] : distinct) {
    if (assigned.count(h)) continue;
    // conjugacy orbit of h inside the whole wreath product
    std::set<std::vector<int>> orbit;
    for (long w = 0; w < tab.size; ++w) {
      int wi = static_cast<int>(w);
      std::vector<int> conj;
      conj.reserve(h.size());
      for (int x : h) conj.push_back(tab.mul(tab.mul(wi, x), tab.inv[static_cast<size_t>(w)]));
      std::sort(conj.begin(), conj.end());
      orbit.insert(std::move(conj));
    }
    for (const auto& member : orbit) {
      assert(distinct.count(member));
      assigned.insert(member);
    }

    SubgroupClass cls;
    cls.order = static_cast<long>(h.size());
    cls.index = tab.size / cls.order;
    cls.class_size = static_cast<int>(orbit.size());
    cls.tag = SubgroupTag::OTHER;
    const std::vector<int>* rep = nullptr;
    for (const auto& [tg, lit] : literals) {
      if (orbit.count(lit)) {
        cls.tag = tg;
        rep = &*orbit.find(lit);
        break;
      }
    }
    if (cls.tag == SubgroupTag::OTHER && n == 4 && cls.order == 48) {
      for (const auto& member : orbit) {
        if (subset_of(member, g2set)) {
          cls.tag = SubgroupTag::EXC_2S4;
          rep = &member;
          break;
        }
      }
    }
    if (!rep) rep = &*orbit.begin();
    cls.generators = distinct.at(*rep);
    classes.push_back(std::move(cls));
  }

  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order != b.order) return a.order > b.order;
    return static_cast<int>(a.tag) < static_cast<int>(b.tag);
  });
  return classes;
}

std::vector<WreathElement> close_generators(const std::vector<WreathElement>& gens) {
  if (gens.empty()) throw ShapeError("closing an empty generator list");
  int n = gens.front().n();
  for (const WreathElement& g : gens)
    if (g.n() != n) throw ShapeError("mixed sizes in generator list");
  std::set<WreathElement> elems;
  std::deque<WreathElement> work;
  auto push = [&](const WreathElement& x) {
    if (!elems.count(x)) work.push_back(x);
  };
  push(wreath_identity(n));
  for (const WreathElement& g : gens) push(g);
  std::vector<WreathElement> done;
  while (!work.empty()) {
    WreathElement x = work.front();
    work.pop_front();
    if (!elems.insert(x).second) continue;
    for (const WreathElement& y : done) {
      push(multiply(x, y));
      push(multiply(y, x));
    }
    push(multiply(x, x));
    done.push_back(x);
  }
  return std::vector<WreathElement>(elems.begin(), elems.end());
}

std::vector<WreathElement> tag_members(SubgroupTag t, int n) {
  if (n < 1) throw ShapeError("tag_members needs n >= 1");
  if (n > 6) throw ResourceError("tag_members capped at n = 6");
  if (t == SubgroupTag::OTHER) throw ShapeError("OTHER has no defining member set");
  if (t == SubgroupTag::EXC_2S4) {
    if (n != 4) throw ShapeError("EXC_2S4 exists only at n = 4");
    for (const SubgroupClass& cls : overgroup_census(4))
      if (cls.tag == SubgroupTag::EXC_2S4) return close_generators(cls.generators);
    throw ShapeError("census did not produce an EXC_2S4 class");
  }
  std::uint32_t ones = (1u << n) - 1u;
  std::vector<WreathElement> out;
  for (const Perm& p : all_perms(n)) {
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
      int wt = popcount_bits(v);
      bool keep = false;
      switch (t) {
        case SubgroupTag::FULL: keep = true; break;
        case SubgroupTag::G1: keep = wt % 2 == 0; break;
        case SubgroupTag::G2: keep = (wt % 2) == (p.sign() < 0 ? 1 : 0); break;
        case SubgroupTag::G3: keep = v == 0 || v == ones; break;
        case SubgroupTag::SN_PLAIN: keep = v == 0; break;
        case SubgroupTag::SN_TWISTED: keep = v == (p.sign() < 0 ? ones : 0u); break;
        default: keep = false;
      }
      if (keep) out.push_back({v, p});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::vector<int>, mpq_class> cycle_type_distribution(
    const std::vector<WreathElement>& members, int n) {
  if (members.empty()) throw ShapeError("cycle type distribution of an empty set");
  std::map<std::vector<int>, long> counts;
  for (const WreathElement& e : members) {
    if (e.n() != n) throw ShapeError("member size mismatch in cycle type distribution");
    ++counts[embed_2n(e).cycle_type()];
  }
  std::map<std::vector<int>, mpq_class> out;
  for (const auto& [type, c] : counts) {
    mpq_class q(c, static_cast<long>(members.size()));
    q.canonicalize();
    out.emplace(type, q);
  }
  return out;
}

CocycleCount cocycle_count(int n, CoeffModule m) {
  if (n < 2) throw ShapeError("cocycle_count needs n >= 2");
  if (n > 5) throw ResourceError("cocycle_count capped at n = 5");
  std::vector<Perm> perms = all_perms(n);
  std::map<std::vector<int>, int> prank;
  for (size_t i = 0; i < perms.size(); ++i) prank[perms[i].img] = static_cast<int>(i);
  Perm s = Perm::transposition(n, 0, 1);
  Perm t = Perm::full_cycle(n);
  int np = static_cast<int>(perms.size());

  std::uint32_t ones = (1u << n) - 1u;
  auto red = [&](std::uint32_t v) -> std::uint32_t {
    switch (m) {
      case CoeffModule::full: return v;
      case CoeffModule::mod_diagonal: return (v >> (n - 1) & 1u) ? v ^ ones : v;
      case CoeffModule::mod_diagonal_perp:
        return static_cast<std::uint32_t>(popcount_bits(v) & 1);
    }
    return v;
  };
  std::vector<std::uint32_t> reps;
  for (std::uint32_t v = 0; v < (1u << n); ++v)
    if (red(v) == v) reps.push_back(v);

  // left-multiplication tables on S_n and generator actions on the module
  std::vector<int> ls(static_cast<size_t>(np)), lt(static_cast<size_t>(np));
  for (int i = 0; i < np; ++i) {
    ls[static_cast<size_t>(i)] = prank.at(s.compose(perms[static_cast<size_t>(i)]).img);
    lt[static_cast<size_t>(i)] = prank.at(t.compose(perms[static_cast<size_t>(i)]).img);
  }
  auto act_s = [&](std::uint32_t r) { return red(perm_act(s, r)); };
  auto act_t = [&](std::uint32_t r) { return red(perm_act(t, r)); };

  int id_e = prank.at(Perm::identity(n).img);
  long z1 = 0;
  std::vector<int> val(static_cast<size_t>(np));
  for (std::uint32_t a : reps) {
    for (std::uint32_t b : reps) {
      // propagate eps(g h) = eps(g) + g.eps(h) from eps(e) = 0 over the
      // Cayley graph; any inconsistent non-tree edge kills the candidate
      std::fill(val.begin(), val.end(), -1);
      val[static_cast<size_t>(id_e)] = 0;
      std::deque<int> work{id_e};
      bool ok = true;
      while (ok && !work.empty()) {
        int g = work.front();
        work.pop_front();
        std::uint32_t vg = static_cast<std::uint32_t>(val[static_cast<size_t>(g)]);
        struct Step { int to; std::uint32_t value; };
        Step steps[2] = {{ls[static_cast<size_t>(g)], red(a ^ act_s(vg))},
                         {lt[static_cast<size_t>(g)], red(b ^ act_t(vg))}};
        for (const Step& st : steps) {
          int& slot = val[static_cast<size_t>(st.to)];
          if (slot < 0) {
            slot = static_cast<int>(st.value);
            work.push_back(st.to);
          } else if (static_cast<std::uint32_t>(slot) != st.value) {
            ok = false;
            break;
          }
        }
      }
      if (ok) ++z1;
    }
  }

  long fixed = 0;
  for (std::uint32_t r : reps)
    if (act_s(r) == r && act_t(r) == r) ++fixed;
  CocycleCount out;
  out.z1 = z1;
  out.b1 = static_cast<long>(reps.size()) / fixed;
  assert(z1 % out.b1 == 0);
  out.h1 = z1 / out.b1;
  return out;
}

}  // namespace recip
