#include "su2branch/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace su2b {

RootPermutation RootPermutation::identity(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
  return RootPermutation(std::move(img));
}

RootPermutation RootPermutation::after(const RootPermutation& other) const {
  std::vector<std::uint32_t> img(other.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = image_[other.image_[i]];
  return RootPermutation(std::move(img));
}

RootPermutation RootPermutation::power(int k) const {
  if (k < 0) throw std::invalid_argument("negative permutation power");
  RootPermutation result = identity(size());
  RootPermutation base = *this;
  while (k > 0) {
    if (k & 1) result = base.after(result);
    base = base.after(base);
    k >>= 1;
  }
  return result;
}

bool RootPermutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Bipartition bipartition(const RootSystem& rs) {
  const int l = rs.rank();
  const auto ul = static_cast<std::size_t>(l);
  std::vector<int> color(ul, -1);
  color[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : rs.neighbors(u)) {
      if (color[static_cast<std::size_t>(v)] < 0) {
        color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
        queue.push_back(v);
      }
    }
  }
  int psi_color = -1;
  for (int i = 0; i < l; ++i) {
    if (rs.inner_product(rs.highest_root(), Root::simple(ul, i)) <= 0) continue;
    const int c = color[static_cast<std::size_t>(i)];
    if (psi_color >= 0 && psi_color != c)
      throw std::logic_error("bipartition: nodes pairing with psi fall in both color classes");
    psi_color = c;
  }
  Bipartition bp;
  bp.part.resize(ul);
  for (int i = 0; i < l; ++i) {
    const bool first = color[static_cast<std::size_t>(i)] == psi_color;
    bp.part[static_cast<std::size_t>(i)] = first ? 1 : 2;
    (first ? bp.I1 : bp.I2).push_back(i);
  }
  return bp;
}

RootPermutation reflection_permutation(const RootSystem& rs, int i) {
  const auto& roots = rs.roots();
  std::vector<std::uint32_t> img(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    auto idx = rs.index_of(rs.reflect(i, roots[k]));
    if (!idx) throw std::logic_error("reflection left the root system");
    img[k] = static_cast<std::uint32_t>(*idx);
  }
  return RootPermutation(std::move(img));
}

CoxeterAction coxeter_element(const RootSystem& rs, const Bipartition& bp) {
  const std::size_t n = rs.roots().size();
  auto product = [&](const std::vector<int>& nodes) {
    RootPermutation p = RootPermutation::identity(n);
    for (int i : nodes) p = reflection_permutation(rs, i).after(p);
    return p;
  };
  CoxeterAction cox;
  cox.tau1 = product(bp.I1);
  cox.tau2 = product(bp.I2);
  cox.sigma = cox.tau2.after(cox.tau1);

  RootPermutation p = cox.sigma;
  int order = 1;
  while (!p.is_identity()) {
    p = cox.sigma.after(p);
    ++order;
    if (order > static_cast<int>(n)) throw std::logic_error("Coxeter element order exceeds card(Delta)");
  }
  cox.order = order;
  return cox;
}

OrbitTable::OrbitTable(const RootSystem& rs, const CoxeterAction& cox, const Bipartition& bp)
    : num_positive_(rs.num_positive()) {
  const int l = rs.rank();
  const int h = rs.coxeter_number();
  const int g = h / 2;
  const std::size_t n = rs.roots().size();
  orbit_of_.assign(n, -1);
  entries_.assign(num_positive_, {});

  for (int i = 0; i < l; ++i) {
    Root b = Root::simple(static_cast<std::size_t>(l), i);
    if (bp.part_of(i) == 2) b = -b;
    beta_.push_back(b);
  }

  for (int i = 0; i < l; ++i) {
    const std::size_t start = *rs.index_of(beta_[static_cast<std::size_t>(i)]);
    std::vector<std::size_t> orb{start};
    for (std::size_t cur = cox.sigma(start); cur != start; cur = cox.sigma(cur)) {
      orb.push_back(cur);
      if (orb.size() > n) throw std::logic_error("sigma orbit does not close");
    }
    if (static_cast<int>(orb.size()) != h)
      throw std::logic_error("orbit of beta_" + std::to_string(i) + " has " + std::to_string(orb.size()) +
                             " elements, expected h = " + std::to_string(h));
    for (std::size_t idx : orb) {
      if (orbit_of_[idx] >= 0) throw std::logic_error("sigma orbits overlap");
      orbit_of_[idx] = i;
    }
    orbits_.push_back(std::move(orb));
  }
  for (std::size_t idx = 0; idx < n; ++idx)
    if (orbit_of_[idx] < 0) throw std::logic_error("root not covered by any orbit: " + rs.roots()[idx].to_string());

  // Exactly one signed simple root per orbit.
  std::vector<int> beta_hits(static_cast<std::size_t>(l), 0);
  for (const Root& b : beta_) ++beta_hits[static_cast<std::size_t>(orbit_of_[*rs.index_of(b)])];
  for (int hits : beta_hits)
    if (hits != 1) throw std::logic_error("orbit does not contain exactly one signed simple root");

  // orbit[j] = sigma^j(beta_i), so sigma^m(orbit[j]) = beta_i for m = (h - j) mod h.
  for (int i = 0; i < l; ++i) {
    const auto& orb = orbits_[static_cast<std::size_t>(i)];
    const int k = bp.part_of(i);
    std::set<int> images;
    for (std::size_t j = 0; j < orb.size(); ++j) {
      if (orb[j] >= num_positive_) continue;
      const int m = static_cast<int>((h - static_cast<int>(j)) % h);
      OrbitEntry& e = entries_[orb[j]];
      e.orbit = i;
      e.k = k;
      e.steps = m;
      e.n = k == 1 ? 2 * m + 1 : 2 * m;
      if (e.n < 1 || e.n > h)
        throw std::logic_error("exponent n(phi) = " + std::to_string(e.n) + " outside [1, h] for " +
                               rs.roots()[orb[j]].to_string());
      images.insert(k == 1 ? (e.n - 1) / 2 : e.n / 2);
    }
    // Bijection onto {0..g-1} (k = 1) or {1..g} (k = 2).
    const int lo = k == 1 ? 0 : 1;
    const bool ok = static_cast<int>(images.size()) == g && *images.begin() == lo && *images.rbegin() == lo + g - 1;
    if (!ok || static_cast<int>(positive_part(i).size()) != g)
      throw std::logic_error("exponent map of orbit " + std::to_string(i) + " is not a bijection");
  }
}

std::vector<std::size_t> OrbitTable::positive_part(int i) const {
  std::vector<std::size_t> out;
  for (std::size_t idx : orbit(i))
    if (idx < num_positive_) out.push_back(idx);
  std::ranges::sort(out);
  return out;
}

std::vector<Check> longest_element_checks(const RootSystem& rs, const CoxeterAction& cox, const Bipartition& bp) {
  std::vector<Check> out;
  const int h = rs.coxeter_number();
  const int g = h / 2;
  const auto ul = static_cast<std::size_t>(rs.rank());
  const std::size_t np = rs.num_positive();
  const auto& roots = rs.roots();
  const RootPermutation kappa = cox.sigma.power(g);

  {
    Check c{"sigma^g maps Delta_+ to Delta_-", true, ""};
    for (std::size_t idx = 0; idx < np && c.passed; ++idx) {
      if (kappa(idx) < np) {
        c.passed = false;
        c.detail = "sigma^g" + roots[idx].to_string() + " = " + roots[kappa(idx)].to_string();
      }
    }
    out.push_back(c);
  }

  for (int k : {1, 2}) {
    Check c{"sigma^g(Pi_" + std::to_string(k) + ") = -Pi_" + std::to_string(k), true, ""};
    const auto& nodes = k == 1 ? bp.I1 : bp.I2;
    std::set<std::size_t> target, image;
    for (int i : nodes) {
      const std::size_t s = rs.simple_index(i);
      target.insert(rs.negate_index(s));
      image.insert(kappa(s));
    }
    if (image != target) {
      c.passed = false;
      for (int i : nodes) {
        const std::size_t s = rs.simple_index(i);
        if (!target.contains(kappa(s))) {
          c.detail = "sigma^g" + roots[s].to_string() + " = " + roots[kappa(s)].to_string();
          break;
        }
      }
    }
    out.push_back(c);
  }

  const int istar = special_index(rs);
  const std::size_t astar = rs.simple_index(istar);
  {
    Check c{"sigma^g(alpha_i*) = -alpha_i*", kappa(astar) == rs.negate_index(astar), ""};
    if (!c.passed) c.detail = "sigma^g" + roots[astar].to_string() + " = " + roots[kappa(astar)].to_string();
    out.push_back(c);
  }

  {
    const int want = g % 2 == 1 ? 1 : 2;
    Check c{"alpha_i* lies in Pi_1 iff g is odd", bp.part_of(istar) == want, ""};
    if (!c.passed) c.detail = "i* = " + std::to_string(istar) + " in part " + std::to_string(bp.part_of(istar));
    out.push_back(c);
  }

  const std::size_t psi = np - 1;
  {
    // psi and alpha_i* share an orbit.
    std::set<std::size_t> orb;
    std::size_t cur = psi;
    do {
      orb.insert(cur);
      cur = cox.sigma(cur);
    } while (cur != psi);
    Check c{"psi and alpha_i* lie in the same sigma-orbit", orb.contains(astar), ""};
    if (!c.passed) c.detail = "alpha_i* = " + roots[astar].to_string();
    out.push_back(c);
  }

  {
    const int steps = g % 2 == 1 ? (g - 1) / 2 : g / 2;
    Root beta = Root::simple(ul, istar);
    if (g % 2 == 0) beta = -beta;
    const std::size_t reached = cox.sigma.power(steps)(psi);
    Check c{"sigma^" + std::to_string(steps) + "(psi) = beta_i*", reached == *rs.index_of(beta), ""};
    if (!c.passed) c.detail = "reached " + roots[reached].to_string() + ", expected " + beta.to_string();
    out.push_back(c);
  }

  out.push_back({"sigma^(2g) = identity", cox.sigma.power(2 * g).is_identity(), ""});
  out.push_back({"sigma^g is an involution", kappa.after(kappa).is_identity(), ""});
  out.push_back({"sigma commutes with sigma^g", cox.sigma.after(kappa) == kappa.after(cox.sigma), ""});
  out.push_back({"tau1 commutes with sigma^g", cox.tau1.after(kappa) == kappa.after(cox.tau1), ""});
  out.push_back({"tau2 commutes with sigma^g", cox.tau2.after(kappa) == kappa.after(cox.tau2), ""});
  out.push_back({"tau1^2 = tau2^2 = identity",
                 cox.tau1.after(cox.tau1).is_identity() && cox.tau2.after(cox.tau2).is_identity(), ""});
  out.push_back({"sigma has order h", cox.order == h,
                 "order " + std::to_string(cox.order) + ", h = " + std::to_string(h)});
  return out;
}

}  // namespace su2b
