#include "propclust/audit_rank.hpp"

#include <algorithm>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "propclust/error.hpp"

namespace propclust {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<double> distinct(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double v : values) {
    if (out.empty() || v > out.back() + kTolerance) out.push_back(v);
  }
  return out;
}

/// Calls f(combo) for each size-`size` subset of 0..m-1 in lex order; stops when f returns true.
template <typename F>
bool any_combination(std::size_t m, std::size_t size, F&& f) {
  if (size > m) return false;
  std::vector<std::size_t> combo(size);
  std::iota(combo.begin(), combo.end(), std::size_t{0});
  for (;;) {
    if (f(combo)) return true;
    std::size_t i = size;
    while (i > 0 && combo[i - 1] == m - size + i - 1) --i;
    if (i == 0) return false;
    ++combo[i - 1];
    for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
  }
}

std::vector<std::size_t> members(const Bits& bits) {
  std::vector<std::size_t> out;
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) out.push_back(i);
  return out;
}

/// Winners within y of any agent of the group.
std::vector<PointId> covered_winners(const Instance& inst, const Outcome& w,
                                     const std::vector<std::size_t>& group, double y) {
  std::vector<PointId> out;
  for (PointId c : w.centers) {
    for (std::size_t i : group) {
      if (leq(inst.metric().dist(inst.agents[i], c), y)) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

/// Per-threshold state shared by the PJR-style searches.
struct Profile {
  std::vector<Bits> winners_of;    // agent -> winners (by position in W) within y
  std::vector<Bits> supporters;    // candidate position -> agents within y
};

Profile profile_at(const Instance& inst, const Outcome& w, double y) {
  const MetricSpace& space = inst.metric();
  const std::size_t n = inst.n();
  Profile p;
  p.winners_of.assign(n, Bits(w.size()));
  p.supporters.assign(inst.candidates.size(), Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (leq(space.dist(inst.agents[i], w.centers[j]), y)) p.winners_of[i].set(j);
    }
    for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
      if (leq(space.dist(inst.agents[i], inst.candidates[c]), y)) p.supporters[c].set(i);
    }
  }
  return p;
}

Bits eligible_agents(const Profile& p, const Bits& cover, std::size_t n) {
  Bits out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.winners_of[i].is_subset_of(cover)) out.set(i);
  }
  return out;
}

Bits cover_bits(const std::vector<std::size_t>& combo, std::size_t size) {
  Bits out(size);
  for (std::size_t j : combo) out.set(j);
  return out;
}

AuditReport violation(Notion notion, const Instance& inst, const Outcome& w, Bits group_bits,
                      std::vector<PointId> target, double y, std::size_t ell) {
  AuditReport report;
  report.notion = notion;
  report.passed = false;
  Witness wit;
  wit.agents = members(group_bits);
  wit.candidates = std::move(target);
  wit.covered = covered_winners(inst, w, wit.agents, y);
  wit.threshold = y;
  wit.ell = ell;
  report.witness = std::move(wit);
  return report;
}

AuditReport verdict(Notion notion, bool exhausted) {
  AuditReport report;
  report.notion = notion;
  if (exhausted) {
    report.status = AuditStatus::CapExhausted;
  } else {
    report.passed = true;
  }
  return report;
}

/// DFS over cohesive sets T of size `ell` (candidate positions ascending), keeping the agents
/// that approve every member of T. Returns true once T is complete with >= need supporters.
struct CohesiveSearch {
  const Profile& profile;
  std::size_t ell;
  std::size_t need;
  std::size_t& nodes;
  std::size_t budget;
  bool exhausted = false;
  std::vector<std::size_t> chosen;
  Bits found;

  bool run(const Bits& support, std::size_t next) {
    if (chosen.size() == ell) {
      found = support;
      return true;
    }
    const std::size_t m = profile.supporters.size();
    for (std::size_t c = next; c + (ell - chosen.size()) <= m; ++c) {
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      Bits narrowed = support & profile.supporters[c];
      if (narrowed.count() < need) continue;
      chosen.push_back(c);
      if (run(narrowed, c + 1)) return true;
      chosen.pop_back();
      if (exhausted) return false;
    }
    return false;
  }
};

AuditReport pjr_search(Notion notion, const Instance& inst, const Outcome& w, const RankCaps& caps) {
  const std::size_t n = inst.n();
  const std::size_t max_ell = std::min({inst.k, caps.max_ell, inst.candidates.size()});
  bool exhausted = std::min(inst.k, inst.candidates.size()) > max_ell;
  std::size_t nodes = 0;
  for (double y : thresholds(inst)) {
    const Profile profile = profile_at(inst, w, y);
    for (std::size_t ell = 1; ell <= max_ell; ++ell) {
      const std::size_t need = quota(n, inst.k, ell);
      if (need > n) break;
      std::optional<AuditReport> hit;
      any_combination(w.size(), std::min(ell - 1, w.size()), [&](const std::vector<std::size_t>& combo) {
        const Bits eligible = eligible_agents(profile, cover_bits(combo, w.size()), n);
        if (eligible.count() < need) return false;
        CohesiveSearch search{profile, ell, need, nodes, caps.node_budget, false, {}, {}};
        if (search.run(eligible, 0)) {
          std::vector<PointId> target;
          for (std::size_t c : search.chosen) target.push_back(inst.candidates[c]);
          hit = violation(notion, inst, w, search.found, std::move(target), y, ell);
          return true;
        }
        if (search.exhausted) {
          exhausted = true;
          return true;
        }
        return false;
      });
      if (hit) return *hit;
      if (nodes > caps.node_budget) return verdict(notion, true);
    }
  }
  return verdict(notion, exhausted);
}

/// Vertices of `vertices` ordered by repeatedly removing one of minimum remaining degree.
std::vector<std::size_t> degeneracy_order(const std::vector<Bits>& adj, const Bits& vertices) {
  Bits left = vertices;
  std::vector<std::size_t> order;
  while (left.any()) {
    std::size_t pick = Bits::npos;
    std::size_t best = 0;
    for (auto v = left.find_first(); v != Bits::npos; v = left.find_next(v)) {
      const std::size_t deg = (adj[v] & left).count();
      if (pick == Bits::npos || deg < best) {
        pick = v;
        best = deg;
      }
    }
    order.push_back(pick);
    left.reset(pick);
  }
  return order;
}

struct CliqueSearch {
  const std::vector<Bits>& adj;
  std::size_t need;
  std::size_t& nodes;
  std::size_t budget;
  bool exhausted = false;
  Bits clique;

  bool extend(Bits& current, Bits candidates) {
    if (current.count() >= need) {
      clique = current;
      return true;
    }
    if (current.count() + candidates.count() < need) return false;
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      if (current.count() + candidates.count() < need) return false;
      current.set(v);
      if (extend(current, candidates & adj[v])) return true;
      current.reset(v);
      if (exhausted) return false;
      candidates.reset(v);
    }
    return false;
  }
};

}  // namespace

std::vector<double> thresholds(const Instance& inst) {
  std::vector<double> values;
  values.reserve(inst.n() * inst.candidates.size());
  for (PointId a : inst.agents) {
    for (PointId c : inst.candidates) values.push_back(inst.metric().dist(a, c));
  }
  return distinct(std::move(values));
}

std::vector<double> agent_thresholds(const Instance& inst) {
  std::vector<double> values{0.0};
  for (std::size_t i = 0; i < inst.n(); ++i) {
    for (std::size_t j = i + 1; j < inst.n(); ++j) {
      values.push_back(inst.metric().dist(inst.agents[i], inst.agents[j]));
    }
  }
  return distinct(std::move(values));
}

AuditReport rank_jr_check(const Instance& inst, const Outcome& w) {
  const MetricSpace& space = inst.metric();
  const std::size_t n = inst.n();
  const std::size_t need = quota(n, inst.k, 1);
  std::vector<double> served(n);
  for (std::size_t i = 0; i < n; ++i) served[i] = dist_to_set(space, inst.agents[i], w.centers);

  for (double y : thresholds(inst)) {
    Bits unserved(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq(served[i], y)) unserved.set(i);
    }
    if (unserved.count() < need) continue;
    for (PointId c : inst.candidates) {
      Bits group(n);
      for (auto i = unserved.find_first(); i != Bits::npos; i = unserved.find_next(i)) {
        if (leq(space.dist(inst.agents[i], c), y)) group.set(i);
      }
      if (group.count() >= need) return violation(Notion::RankJR, inst, w, group, {c}, y, 1);
    }
  }
  return verdict(Notion::RankJR, false);
}

AuditReport rank_pjr_check(const Instance& inst, const Outcome& w, const RankCaps& caps) {
  return pjr_search(Notion::RankPJR, inst, w, caps);
}

AuditReport dprf_check(const Instance& inst, const Outcome& w, const RankCaps& caps) {
  return pjr_search(Notion::DPRF, inst, w, caps);
}

AuditReport rank_pjr_plus_check(const Instance& inst, const Outcome& w, const RankCaps& caps) {
  const std::size_t n = inst.n();
  const std::size_t max_ell = std::min(inst.k, caps.max_ell);
  const bool exhausted = inst.k > max_ell;
  for (double y : thresholds(inst)) {
    const Profile profile = profile_at(inst, w, y);
    for (std::size_t ell = 1; ell <= max_ell; ++ell) {
      const std::size_t need = quota(n, inst.k, ell);
      if (need > n) break;
      std::optional<AuditReport> hit;
      any_combination(w.size(), std::min(ell - 1, w.size()), [&](const std::vector<std::size_t>& combo) {
        const Bits eligible = eligible_agents(profile, cover_bits(combo, w.size()), n);
        if (eligible.count() < need) return false;
        for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
          if (w.contains(inst.candidates[c])) continue;
          Bits group = eligible & profile.supporters[c];
          if (group.count() >= need) {
            hit = violation(Notion::RankPJRPlus, inst, w, group, {inst.candidates[c]}, y, ell);
            return true;
          }
        }
        return false;
      });
      if (hit) return *hit;
    }
  }
  return verdict(Notion::RankPJRPlus, exhausted);
}

AuditReport uprf_check(const Instance& inst, const Outcome& w, const RankCaps& caps) {
  const MetricSpace& space = inst.metric();
  const std::size_t n = inst.n();
  const std::size_t max_ell = std::min(inst.k, caps.max_ell);
  bool exhausted = inst.k > max_ell;
  std::size_t nodes = 0;
  for (double y : agent_thresholds(inst)) {
    std::vector<Bits> adj(n, Bits(n));
    std::vector<Bits> winners_of(n, Bits(w.size()));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && leq(space.dist(inst.agents[i], inst.agents[j]), y)) adj[i].set(j);
      }
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (leq(space.dist(inst.agents[i], w.centers[j]), y)) winners_of[i].set(j);
      }
    }
    for (std::size_t ell = 1; ell <= max_ell; ++ell) {
      const std::size_t need = quota(n, inst.k, ell);
      if (need > n) break;
      std::optional<AuditReport> hit;
      any_combination(w.size(), std::min(ell - 1, w.size()), [&](const std::vector<std::size_t>& combo) {
        const Bits cover = cover_bits(combo, w.size());
        Bits eligible(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (winners_of[i].is_subset_of(cover)) eligible.set(i);
        }
        if (eligible.count() < need) return false;
        CliqueSearch search{adj, need, nodes, caps.node_budget, false, {}};
        Bits later = eligible;
        for (std::size_t v : degeneracy_order(adj, eligible)) {
          later.reset(v);
          Bits current(n);
          current.set(v);
          if (search.extend(current, later & adj[v])) {
            hit = violation(Notion::UPRF, inst, w, search.clique, {}, y, ell);
            return true;
          }
          if (search.exhausted) {
            exhausted = true;
            return true;
          }
        }
        return false;
      });
      if (hit) return *hit;
      if (nodes > caps.node_budget) return verdict(Notion::UPRF, true);
    }
  }
  return verdict(Notion::UPRF, exhausted);
}

bool confirms_violation(const Instance& inst, const Outcome& w, const AuditReport& report) {
  if (report.passed != false || !report.witness) return false;
  const Witness& wit = *report.witness;
  if (!wit.threshold || !wit.ell) return false;
  const MetricSpace& space = inst.metric();
  const double y = *wit.threshold;
  const std::size_t ell = *wit.ell;
  if (wit.agents.size() < quota(inst.n(), inst.k, ell)) return false;
  if (covered_winners(inst, w, wit.agents, y).size() >= ell) return false;
  auto all_within = [&](PointId c) {
    return std::all_of(wit.agents.begin(), wit.agents.end(),
                       [&](std::size_t i) { return leq(space.dist(inst.agents.at(i), c), y); });
  };
  switch (report.notion) {
    case Notion::RankJR:
    case Notion::RankPJRPlus:
      if (wit.candidates.size() != 1 || !inst.is_candidate(wit.candidates[0])) return false;
      if (report.notion == Notion::RankPJRPlus && w.contains(wit.candidates[0])) return false;
      return all_within(wit.candidates[0]);
    case Notion::RankPJR:
    case Notion::DPRF:
      if (wit.candidates.size() < ell) return false;
      return std::all_of(wit.candidates.begin(), wit.candidates.end(),
                         [&](PointId c) { return inst.is_candidate(c) && all_within(c); });
    case Notion::UPRF:
      for (std::size_t a : wit.agents) {
        for (std::size_t b : wit.agents) {
          if (!leq(space.dist(inst.agents.at(a), inst.agents.at(b)), y)) return false;
        }
      }
      return true;
    default:
      return false;
  }
}

}  // namespace propclust
