#pragma once

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oddramsey/cycle.hpp"
#include "oddramsey/even_cycle.hpp"
#include "oddramsey/gf2.hpp"
#include "oddramsey/structure.hpp"
#include "oddramsey/switch.hpp"

namespace oddramsey {

/// One cycle of the 2-factor together with the monochromatic path of the
/// starter cycle it grew from (mono_path[0..2r]).
struct SpicyComponent {
  std::vector<Vertex> cycle;
  std::vector<Vertex> mono_path;
};

struct AttachmentEdge {
  Vertex a = -1, b = -1;
  int component = -1;
};

struct EmbeddedSwitch {
  Switch sw;
  int component = -1;
  int round = 0;
};

struct RoundRecord {
  int round = 0;
  int live_before = 0;
  int live_after = 0;
  std::vector<Switch> found;
  std::vector<int> dependency;  // J, indices into `found`
  bool parity_zero = false;     // 2-factor even-coloured under merged colours after the round
  std::size_t spicy_size = 0;
};

struct StarterInfo {
  int t = 0;
  Vertex set_aside = -1;
  std::size_t size = 0;
  std::size_t size_before_shortening = 0;
  int shortenings = 0;
};

struct SpicyState {
  int r = 0;
  std::vector<SpicyComponent> components;
  std::vector<AttachmentEdge> attachment_edges;
  std::vector<EmbeddedSwitch> switches;
  MergeRegister reg;
  ColourMap colours;
  int live_colours = 0;
  std::vector<RoundRecord> rounds;
  std::vector<bool> member;  // vertex -> lies on the 2-factor
  StarterInfo starter;

  std::size_t size() const {
    std::size_t total = 0;
    for (const auto& c : components) total += c.cycle.size();
    return total;
  }

  std::vector<CyclePath> two_factor() const {
    std::vector<CyclePath> out;
    for (const auto& c : components) out.push_back({c.cycle, true});
    return out;
  }
};

/// Growth stopped: fewer than s vertex-disjoint switches exist outside the
/// SPICy, and `switches` is a maximal disjoint family.
struct MaximalSwitchSet {
  std::vector<Switch> switches;
};

inline double spicy_size_bound(int r, int s) {
  return 2.0 * r * r + 10.0 * std::pow(r, 1.5) - 2.0 * s * s;
}
inline double grove_bound(int r) { return 9.0 * std::pow(r, 1.5); }
inline double solve_threshold(int r) { return 2.0 * r * r + 40.0 * std::pow(r, 1.5); }

namespace detail {

inline void note(std::vector<std::string>* trace, std::string line) {
  if (trace) trace->push_back(std::move(line));
}

inline std::string join(const std::vector<Vertex>& vs) { return format_cycle({vs, false}); }

template <ColourView V>
ParityVector union_parity(const V& g, const std::vector<SpicyComponent>& comps) {
  ParityVector p(g.r());
  for (const auto& c : comps) p ^= cycle_parity(g, CyclePath{c.cycle, true});
  return p;
}

/// Shortens `cycle` (protected prefix cycle[0..2r]) by replacing an
/// even-coloured stretch cycle[p..q] with a cherry through an outside
/// vertex, until its length is at most 8r. Returns the number of cuts.
inline int shorten_starter(const ColouredGraph& g, std::vector<Vertex>& cycle, int r, Vertex set_aside,
                           std::vector<std::string>* trace) {
  int cuts = 0;
  std::vector<Vertex> discarded;
  while (static_cast<int>(cycle.size()) > 8 * r) {
    const int len = static_cast<int>(cycle.size());
    std::vector<bool> on(static_cast<std::size_t>(g.n()), false);
    for (Vertex v : cycle) on[v] = true;
    std::vector<Vertex> xs;
    if (!on[set_aside]) xs.push_back(set_aside);
    for (auto it = discarded.rbegin(); it != discarded.rend(); ++it)
      if (!on[*it] && std::find(xs.begin(), xs.end(), *it) == xs.end()) xs.push_back(*it);
    for (Vertex v = 0; v < g.n(); ++v)
      if (!on[v] && std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);

    // prefix[i] = parity of edges cycle[0..i]
    std::vector<ParityVector> prefix(static_cast<std::size_t>(len) + 1, ParityVector(g.r()));
    for (int i = 0; i < len; ++i) {
      prefix[i + 1] = prefix[i];
      prefix[i + 1].flip(g.colour(cycle[i], cycle[(i + 1) % len]));
    }
    bool done = false;
    for (Vertex x : xs) {
      int best_p = -1, best_q = -1, best_len = -1;
      bool best_in_range = false;
      for (int p = 2 * r; p < len; ++p) {
        const Colour cp = g.colour(x, cycle[p]);
        for (int q = p + 2; q <= len; q += 2) {
          if (g.colour(x, cycle[q % len]) != cp) continue;
          if (!(prefix[q] == prefix[p])) continue;
          const int new_len = len - (q - p) + 2;
          if (new_len < 4 * r) continue;
          const bool in_range = new_len <= 8 * r;
          bool better;
          if (best_p < 0) better = true;
          else if (in_range != best_in_range) better = in_range;
          else if (in_range) better = new_len > best_len;
          else better = new_len < best_len;
          if (better) {
            best_p = p;
            best_q = q;
            best_len = new_len;
            best_in_range = in_range;
          }
        }
      }
      if (best_p < 0) continue;
      std::vector<Vertex> next(cycle.begin(), cycle.begin() + best_p + 1);
      next.push_back(x);
      for (int i = best_q; i < len; ++i) next.push_back(cycle[i]);
      std::vector<Vertex> removed(cycle.begin() + best_p + 1, cycle.begin() + best_q);
      discarded.insert(discarded.end(), removed.begin(), removed.end());
      note(trace, "shorten x=" + std::to_string(x) + " cut=" + join(removed) + " length " + std::to_string(len) +
                      "->" + std::to_string(next.size()));
      cycle = std::move(next);
      ++cuts;
      done = true;
      break;
    }
    if (!done) throw SearchFailure("no cherry shortens the starter cycle");
  }
  return cuts;
}

}  // namespace detail

/// Vertex-disjoint even-coloured cycles, each with a monochromatic path of
/// length 2r, of total size in [2rt + 2r, 2rt + 6r] for some t <= ceil(sqrt r).
/// Also fixes the initial attachment edges off the monochromatic paths.
inline SpicyState build_spicy_starter(const ColouredGraph& g, std::vector<std::string>* trace = nullptr) {
  const int r = g.r();
  if (r < 2) throw ParameterError("the SPICy builder needs r >= 2");
  if (!g.is_complete()) throw InvalidGraphError("the SPICy builder needs a complete graph");
  const int n = g.n();
  const Vertex set_aside = 0;
  int min_len = static_cast<int>(std::ceil(2.0 * r + 2.0 * std::sqrt(static_cast<double>(r)) - 1e-9));
  if (min_len % 2) ++min_len;
  const int t_max = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(r)) - 1e-9));

  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  taken[set_aside] = true;
  std::vector<std::vector<Vertex>> cycles;
  int cap = INT_MAX;
  long long total = 0;
  int t = 0;
  for (;;) {
    std::vector<Vertex> avail;
    for (Vertex v = 0; v < n; ++v)
      if (!taken[v]) avail.push_back(v);
    auto c = find_long_even_mono_cycle(g, avail, min_len, cap);
    for (Vertex v : c.vertices) taken[v] = true;
    cap = static_cast<int>(c.size());
    total += static_cast<long long>(c.size());
    cycles.push_back(std::move(c.vertices));
    t = static_cast<int>(cycles.size());
    detail::note(trace, "starter-cycle " + std::to_string(t - 1) + " length " + std::to_string(cap));
    if (total >= 2ll * r * t + 2 * r) break;
    if (t >= t_max + 1) throw InternalError("starter loop exceeded ceil(sqrt r) cycles");
  }

  SpicyState st;
  st.r = r;
  st.starter.t = t;
  st.starter.set_aside = set_aside;
  st.starter.size_before_shortening = static_cast<std::size_t>(total);
  if (total > 2ll * r * t + 6 * r) {
    if (t != 1) throw InternalError("oversized starter with more than one cycle");
    st.starter.shortenings = detail::shorten_starter(g, cycles[0], r, set_aside, trace);
  }
  st.member.assign(static_cast<std::size_t>(n), false);
  for (auto& c : cycles) {
    SpicyComponent comp;
    comp.mono_path.assign(c.begin(), c.begin() + 2 * r + 1);
    comp.cycle = c;
    for (Vertex v : c) st.member[v] = true;
    st.components.push_back(std::move(comp));
  }
  st.starter.size = st.size();

  // Attachment edges: cycle edges (c[i], c[i+1]) with i >= 2r.
  for (int l = 0; l < t && static_cast<int>(st.attachment_edges.size()) < r; ++l) {
    const auto& c = st.components[l].cycle;
    const int len = static_cast<int>(c.size());
    for (int i = 2 * r; i < len && static_cast<int>(st.attachment_edges.size()) < r; ++i)
      st.attachment_edges.push_back({c[i], c[(i + 1) % len], l});
  }
  if (static_cast<int>(st.attachment_edges.size()) < r) throw InternalError("starter too small for r attachment edges");
  st.colours = ColourMap(r);
  st.live_colours = r;
  detail::note(trace, "starter t=" + std::to_string(t) + " size=" + std::to_string(st.size()) +
                          " set_aside=" + std::to_string(set_aside));
  for (int l = 0; l < t; ++l) {
    detail::note(trace, "cycle " + std::to_string(l) + ": " + detail::join(st.components[l].cycle));
    detail::note(trace, "mono_path " + std::to_string(l) + ": " + detail::join(st.components[l].mono_path));
  }
  return st;
}

/// Checks the starter claims: sizes, count, even colouring, monochromatic
/// paths. Empty string when all hold.
inline std::string check_starter(const ColouredGraph& g, const SpicyState& st) {
  const int r = st.r;
  const int t = static_cast<int>(st.components.size());
  const long long size = static_cast<long long>(st.size());
  if (t > static_cast<int>(std::ceil(std::sqrt(static_cast<double>(r)) - 1e-9))) return "too many starter cycles";
  if (size < 2ll * r * t + 2 * r || size > 2ll * r * t + 6 * r)
    return "starter size " + std::to_string(size) + " outside [2rt+2r, 2rt+6r]";
  std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
  for (const auto& c : st.components) {
    CyclePath cyc{c.cycle, true};
    if (!is_valid_cycle(g, cyc)) return "starter cycle invalid";
    if (!is_even_coloured(g, cyc)) return "starter cycle not even-coloured";
    if (static_cast<int>(c.mono_path.size()) != 2 * r + 1) return "mono path has wrong length";
    if (!std::equal(c.mono_path.begin(), c.mono_path.end(), c.cycle.begin())) return "mono path not on its cycle";
    Colour c0 = g.colour(c.mono_path[0], c.mono_path[1]);
    for (std::size_t i = 0; i + 1 < c.mono_path.size(); ++i)
      if (g.colour(c.mono_path[i], c.mono_path[i + 1]) != c0) return "mono path not monochromatic";
    for (Vertex v : c.cycle) {
      if (seen[v]) return "starter cycles overlap";
      seen[v] = true;
    }
  }
  return {};
}

/// One growth round. With s live colours: if s vertex-disjoint switches exist
/// outside the SPICy, embeds a nonempty subset J whose six-edge vectors sum to
/// zero and merges their colour pairs; otherwise reports a maximal family.
inline std::variant<SpicyState, MaximalSwitchSet> grow_spicy(SpicyState st, const ColouredGraph& g,
                                                              std::vector<std::string>* trace = nullptr) {
  const int s = st.live_colours;
  const ColourTable view(MergedView<ColouredGraph>(g, st.colours));
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!st.member[v]) outside.push_back(v);
  auto found = pack_switches(view, outside, static_cast<std::size_t>(std::max(s, 0)));
  if (s < 2 || static_cast<int>(found.size()) < s) return MaximalSwitchSet{std::move(found)};

  RoundRecord rec;
  rec.round = static_cast<int>(st.rounds.size()) + 1;
  rec.live_before = s;
  rec.found = found;
  std::vector<ParityVector> w;
  for (int j = 0; j < s; ++j) {
    const auto& e = st.attachment_edges[j];
    const Switch& sw = found[j];
    const VertexPair six[] = {{e.a, e.b}, {sw.u, e.a}, {sw.x, e.b}, {sw.u, sw.v}, {sw.v, sw.y}, {sw.x, sw.y}};
    w.push_back(parity_vector(view, std::span<const VertexPair>(six)));
  }
  auto dep = find_dependency(w);
  if (!dep) throw InternalError("no dependency among the switch vectors");
  rec.dependency = *dep;
  detail::note(trace, "round " + std::to_string(rec.round) + " live=" + std::to_string(s));
  for (int j = 0; j < s; ++j) {
    const Switch& sw = found[j];
    detail::note(trace, "switch " + std::to_string(j) + ": " + std::to_string(sw.u) + " " + std::to_string(sw.v) +
                            " " + std::to_string(sw.x) + " " + std::to_string(sw.y) + " colours " +
                            std::to_string(sw.c1) + " " + std::to_string(sw.c2));
  }
  {
    std::string line = "J";
    for (int j : *dep) line += " " + std::to_string(j);
    detail::note(trace, line);
  }

  for (int j : *dep) {
    auto& e = st.attachment_edges[j];
    const Switch& sw = found[j];
    auto& cyc = st.components[e.component].cycle;
    const std::size_t len = cyc.size();
    const std::size_t ia = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), e.a) - cyc.begin());
    if (ia == len) throw InternalError("attachment edge left the 2-factor");
    if (cyc[(ia + 1) % len] == e.b) {
      cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(ia + 1), {sw.u, sw.v, sw.y, sw.x});
    } else if (cyc[(ia + len - 1) % len] == e.b) {
      cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(ia), {sw.x, sw.y, sw.v, sw.u});
    } else {
      throw InternalError("attachment edge left the 2-factor");
    }
    for (Vertex v : sw.vertices()) st.member[v] = true;
    st.switches.push_back({sw, e.component, rec.round});
    e = {sw.v, sw.y, e.component};
    // Colours are the round-start roots; they may have merged earlier in
    // this round with other members of J.
    if (auto m = st.colours.merge(sw.c1, sw.c2)) {
      st.reg.entries.push_back({m->first, m->second, sw});
      detail::note(trace, "merge " + std::to_string(m->first) + " " + std::to_string(m->second));
    }
  }
  st.live_colours = st.colours.live();
  rec.live_after = st.live_colours;
  rec.parity_zero = detail::union_parity(MergedView<ColouredGraph>(g, st.colours), st.components).none();
  rec.spicy_size = st.size();
  if (!rec.parity_zero) throw InternalError("2-factor lost its even colouring after a growth round");
  st.rounds.push_back(std::move(rec));
  return st;
}

struct Bridge {
  Vertex a = -1, b = -1;          // MaMa edge
  Vertex end_a = -1, end_b = -1;  // outer endpoints joined to a and b
  Colour colour = 0;              // common colour of end_a-a and end_b-b (merged)
  int component = -1;             // SPICy component, or -1 for a GROVe
  Vertex grove = -1;
  int j = -1, j2 = -1;            // mono path indices z_{2j}, z_{2j2}
};

struct AttachmentPlan {
  std::vector<VertexPair> mama;
  std::vector<Bridge> bridges;  // bridges[i] belongs to mama[i]
  std::vector<Vertex> groves;
  std::vector<Vertex> used;
  std::vector<Vertex> connectors;  // w_i per big part
  Colour internal_colour = 0;
  std::size_t groves_after_spicy = 0;
};

struct AssemblyResult {
  CyclePath cycle;
  AttachmentPlan plan;
};

/// Builds the MaMa, bridges and GROVe absorption on the structured leftover
/// and assembles a Hamilton cycle whose odd classes (merged colours) lie in
/// {internal colour}.
inline AssemblyResult attach_and_assemble(const SpicyState& st, const MaximalSwitchSet& maximal,
                                          const LeftoverStructure& leftover, const ColouredGraph& g,
                                          std::vector<std::string>* trace = nullptr) {
  const MergedView<ColouredGraph> merged(g, st.colours);
  const ColourTable view(merged);
  const int s = st.live_colours;
  AttachmentPlan plan;
  plan.internal_colour = leftover.internal_colour;

  std::vector<std::vector<Vertex>> parts;
  std::vector<Vertex> singletons;
  for (const auto& p : leftover.parts) {
    if (p.size() >= 2) parts.push_back(p);
    else if (p.size() == 1) singletons.push_back(p[0]);
  }
  if (parts.empty()) throw CapacityError("the leftover has no part with two or more vertices");

  for (const auto& sw : maximal.switches)
    for (Vertex v : sw.vertices()) plan.groves.push_back(v);
  plan.groves.push_back(leftover.v0);

  std::vector<bool> used(static_cast<std::size_t>(g.n()), false);
  auto draw = [&](std::size_t want) -> std::pair<int, std::vector<Vertex>> {
    for (std::size_t k = 0; k < parts.size(); ++k) {
      std::vector<Vertex> free;
      for (Vertex v : parts[k])
        if (!used[v]) free.push_back(v);
      if (free.size() >= want) {
        free.resize(want);
        return {static_cast<int>(k), free};
      }
    }
    throw CapacityError("no leftover part has " + std::to_string(want) + " unused vertices");
  };
  auto add_mama = [&](Bridge br) {
    used[br.a] = used[br.b] = true;
    plan.used.push_back(br.a);
    plan.used.push_back(br.b);
    plan.mama.emplace_back(br.a, br.b);
    plan.bridges.push_back(br);
  };

  // Attach each SPICy component through its monochromatic path.
  for (std::size_t l = 0; l < st.components.size(); ++l) {
    const auto& z = st.components[l].mono_path;
    if (static_cast<int>(z.size()) < 2 * s + 1) throw CapacityError("monochromatic path shorter than 2s");
    auto [k, cand] = draw(static_cast<std::size_t>(s) + 1);
    bool found = false;
    for (int j2 = 1; j2 <= s && !found; ++j2)
      for (int j = 0; j < j2 && !found; ++j) {
        Colour c = view.colour(z[2 * j], cand[j]);
        if (c != view.colour(z[2 * j2], cand[j2])) continue;
        Bridge br;
        br.a = cand[j];
        br.b = cand[j2];
        br.end_a = z[2 * j];
        br.end_b = z[2 * j2];
        br.colour = c;
        br.component = static_cast<int>(l);
        br.j = j;
        br.j2 = j2;
        add_mama(br);
        for (int q = 2 * j + 1; q <= 2 * j2 - 1; ++q) plan.groves.push_back(z[q]);
        detail::note(trace, "bridge spicy " + std::to_string(l) + " " + std::to_string(br.end_a) + "-" +
                                std::to_string(br.a) + " " + std::to_string(br.end_b) + "-" + std::to_string(br.b) +
                                " colour " + std::to_string(c) + " part " + std::to_string(k));
        found = true;
      }
    if (!found) throw InternalError("pigeonhole failed on a monochromatic path");
  }
  for (Vertex v : singletons) plan.groves.push_back(v);
  plan.groves_after_spicy = plan.groves.size();

  // Absorb every GROVe through a monochromatic cherry.
  for (Vertex x : plan.groves) {
    auto [k, cand] = draw(static_cast<std::size_t>(s) + 1);
    bool found = false;
    for (std::size_t i2 = 1; i2 < cand.size() && !found; ++i2)
      for (std::size_t i = 0; i < i2 && !found; ++i) {
        Colour c = view.colour(x, cand[i]);
        if (c != view.colour(x, cand[i2])) continue;
        Bridge br;
        br.a = cand[i];
        br.b = cand[i2];
        br.end_a = br.end_b = br.grove = x;
        br.colour = c;
        add_mama(br);
        detail::note(trace, "bridge grove " + std::to_string(x) + " " + std::to_string(br.a) + " " +
                                std::to_string(br.b) + " colour " + std::to_string(c) + " part " + std::to_string(k));
        found = true;
      }
    if (!found) throw InternalError("pigeonhole failed on a GROVe star");
  }

  // C' = Q_1 .. Q_s' w_1 .. w_s'.
  std::vector<int> part_of(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (Vertex v : parts[k]) part_of[v] = static_cast<int>(k);
  std::vector<Vertex> base;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    Vertex w = -1;
    for (Vertex v : parts[k])
      if (!used[v]) {
        w = v;
        break;
      }
    if (w < 0) throw CapacityError("a part has no vertex outside the MaMa");
    plan.connectors.push_back(w);
    for (const auto& [a, b] : plan.mama)
      if (part_of[a] == static_cast<int>(k)) {
        base.push_back(a);
        base.push_back(b);
      }
    for (Vertex v : parts[k])
      if (!used[v] && v != w) base.push_back(v);
  }
  for (Vertex w : plan.connectors) base.push_back(w);
  if (base.size() < 3) throw CapacityError("the structured part is too small to carry a cycle");

  std::map<Vertex, std::size_t> mama_at;
  for (std::size_t i = 0; i < plan.mama.size(); ++i) mama_at[plan.mama[i].first] = i;

  CyclePath out;
  out.vertices.reserve(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Vertex a = base[i];
    out.vertices.push_back(a);
    auto it = mama_at.find(a);
    if (it == mama_at.end()) continue;
    const Bridge& br = plan.bridges[it->second];
    if (br.component < 0) {
      out.vertices.push_back(br.grove);
    } else {
      // Walk the 2-factor cycle from z_{2j} away from z_{2j+1} to z_{2j2}.
      const auto& cyc = st.components[br.component].cycle;
      const auto& z = st.components[br.component].mono_path;
      const std::size_t len = cyc.size();
      const std::size_t p = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), br.end_a) - cyc.begin());
      const bool forward_is_path = cyc[(p + 1) % len] == z[2 * br.j + 1];
      for (std::size_t step = 0; step < len; ++step) {
        Vertex v = cyc[forward_is_path ? (p + len - step) % len : (p + step) % len];
        out.vertices.push_back(v);
        if (v == br.end_b) break;
      }
    }
  }
  detail::note(trace, "assembled " + std::to_string(out.size()) + " vertices; internal colour " +
                          std::to_string(plan.internal_colour));
  return {std::move(out), std::move(plan)};
}

/// Hamilton cycle when growth ended with a single live colour: the outside
/// vertices in order, then each 2-factor cycle opened at its mono path edge.
inline CyclePath assemble_single_colour(const SpicyState& st, int n) {
  CyclePath out;
  for (Vertex v = 0; v < n; ++v)
    if (!st.member[v]) out.vertices.push_back(v);
  for (const auto& comp : st.components) {
    const auto& cyc = comp.cycle;
    const std::size_t len = cyc.size();
    const std::size_t p1 = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), comp.mono_path[1]) - cyc.begin());
    const bool forward = cyc[(p1 + 1) % len] == comp.mono_path[2];
    for (std::size_t step = 0; step < len; ++step) out.vertices.push_back(cyc[forward ? (p1 + step) % len : (p1 + len - step) % len]);
  }
  return out;
}

/// Replays the merge register backwards. Before undoing each merge the two
/// classes are inspected; if both are odd the registered switch is flipped.
inline CyclePath unmerge_and_flip(CyclePath h, const MergeRegister& reg, const ColouredGraph& g,
                                  std::vector<std::string>* trace = nullptr, int* flips = nullptr) {
  for (std::size_t k = reg.entries.size(); k-- > 0;) {
    ColourMap before(g.r());
    for (std::size_t i = 0; i < k; ++i) before.merge(reg.entries[i].kept, reg.entries[i].merged);
    const auto& e = reg.entries[k];
    const ParityVector raw = cycle_parity(g, h);
    bool kept_odd = false, merged_odd = false;
    for (Colour c : raw.set_colours()) {
      Colour root = before.find(c);
      if (root == e.kept) kept_odd = !kept_odd;
      if (root == e.merged) merged_odd = !merged_odd;
    }
    const bool flip = kept_odd && merged_odd;
    if (flip) {
      h = flip_switch_in_cycle(h, e.sw);
      if (flips) ++*flips;
    }
    detail::note(trace, "unmerge " + std::to_string(e.kept) + " " + std::to_string(e.merged) +
                            (flip ? " flip" : " keep"));
  }
  return h;
}

struct AuditEntry {
  std::string check;
  bool ok = true;
  std::string detail;
};

struct SolveOptions {
  bool best_effort = false;
};

struct SolveReport {
  CyclePath cycle;
  std::vector<Colour> odd_classes;
  std::vector<std::string> trace;
  std::vector<AuditEntry> audit;
  bool trivial = false;         // at most one colour used
  bool single_colour = false;   // growth merged everything
  int rounds = 0;
  int merges = 0;
  int flips = 0;
  int final_live = 0;
  std::size_t starter_size = 0;
  int starter_cycles = 0;
  std::size_t spicy_size = 0;
  std::size_t groves = 0;
  std::optional<AttachmentPlan> plan;

  std::size_t violations() const {
    return static_cast<std::size_t>(std::count_if(audit.begin(), audit.end(), [](const AuditEntry& e) { return !e.ok; }));
  }
};

/// Hamilton cycle of a complete r-coloured graph with at most one odd colour
/// class, built by the switch/SPICy construction. Requires
/// n >= 2r^2 + 40 r^{3/2} unless options.best_effort is set.
inline SolveReport solve_complete_report(const ColouredGraph& g, SolveOptions options = {}) {
  require_valid(g);
  if (!g.is_complete()) throw InvalidGraphError("solve needs a complete colouring");
  const int n = g.n();
  if (n < 3) throw ParameterError("solve needs at least 3 vertices");
  SolveReport rep;
  auto audit = [&](std::string check, bool ok, std::string detail = {}) {
    rep.audit.push_back({std::move(check), ok, std::move(detail)});
  };
  auto finish = [&](CyclePath h) {
    if (!is_hamilton_cycle(g, h)) throw InternalError("pipeline produced a non-Hamilton cycle");
    rep.odd_classes = odd_colour_classes(g, h);
    audit("final-odd-classes", rep.odd_classes.size() <= 1, std::to_string(rep.odd_classes.size()) + " odd classes");
    if (rep.odd_classes.size() > 1) throw InternalError("pipeline output has more than one odd colour class");
    rep.cycle = std::move(h);
    return rep;
  };

  const int r = g.r();
  if (g.used_colours().size() <= 1) {
    rep.trivial = true;
    CyclePath h;
    for (Vertex v = 0; v < n; ++v) h.vertices.push_back(v);
    rep.trace.push_back("trivial: at most one colour used");
    return finish(std::move(h));
  }
  if (static_cast<double>(n) < solve_threshold(r) && !options.best_effort)
    throw ThresholdError("n = " + std::to_string(n) + " is below 2r^2 + 40r^{3/2} = " +
                         std::to_string(solve_threshold(r)) + " for r = " + std::to_string(r));
  auto* trace = &rep.trace;

  SpicyState st = build_spicy_starter(g, trace);
  rep.starter_size = st.size();
  rep.starter_cycles = static_cast<int>(st.components.size());
  {
    auto msg = check_starter(g, st);
    audit("starter", msg.empty(), msg.empty() ? "t=" + std::to_string(rep.starter_cycles) + " size=" + std::to_string(rep.starter_size) : msg);
  }
  audit("spicy-size", static_cast<double>(st.size()) <= spicy_size_bound(r, st.live_colours),
        std::to_string(st.size()) + " <= " + std::to_string(spicy_size_bound(r, st.live_colours)));

  std::optional<MaximalSwitchSet> maximal;
  while (st.live_colours >= 2) {
    auto next = grow_spicy(st, g, trace);
    if (auto* m = std::get_if<MaximalSwitchSet>(&next)) {
      maximal = std::move(*m);
      break;
    }
    st = std::move(std::get<SpicyState>(next));
    const auto& rec = st.rounds.back();
    audit("round-parity", rec.parity_zero, "round " + std::to_string(rec.round));
    audit("spicy-size", static_cast<double>(rec.spicy_size) <= spicy_size_bound(r, st.live_colours),
          std::to_string(rec.spicy_size) + " <= " + std::to_string(spicy_size_bound(r, st.live_colours)));
  }
  rep.rounds = static_cast<int>(st.rounds.size());
  rep.merges = static_cast<int>(st.reg.size());
  rep.final_live = st.live_colours;
  rep.spicy_size = st.size();

  CyclePath merged_cycle;
  const MergedView<ColouredGraph> merged(g, st.colours);
  if (!maximal) {
    rep.single_colour = true;
    detail::note(trace, "single live colour: direct assembly");
    merged_cycle = assemble_single_colour(st, n);
  } else {
    std::vector<bool> blocked = st.member;
    for (const auto& sw : maximal->switches)
      for (Vertex v : sw.vertices()) {
        audit("disjoint", !blocked[v], "switch vertex " + std::to_string(v));
        blocked[v] = true;
      }
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (!blocked[v]) rest.push_back(v);
    if (rest.empty()) throw CapacityError("nothing left outside the SPICy and the switches");
    detail::note(trace, "case2 switches=" + std::to_string(maximal->switches.size()) +
                            " leftover=" + std::to_string(rest.size()) + " v0=" + std::to_string(rest.front()));
    const ColourTable view(merged);
    auto split = structure_or_switch(view, rest, rest.front());
    if (std::holds_alternative<Switch>(split)) throw InternalError("switch left behind by a maximal switch family");
    const auto& leftover = std::get<LeftoverStructure>(split);
    {
      auto msg = check_structure(view, rest, leftover);
      audit("structure", msg.empty(), msg);
    }
    auto assembled = attach_and_assemble(st, *maximal, leftover, g, trace);
    const auto& plan = assembled.plan;
    for (const auto& br : plan.bridges) {
      const bool mono = merged.colour(br.end_a, br.a) == merged.colour(br.end_b, br.b);
      audit("bridge-mono", mono, std::to_string(br.a) + "-" + std::to_string(br.b));
    }
    audit("groves-size", static_cast<double>(plan.groves_after_spicy) <= grove_bound(r),
          std::to_string(plan.groves_after_spicy) + " <= " + std::to_string(grove_bound(r)));
    std::vector<int> role(static_cast<std::size_t>(n), 0);
    bool roles_ok = true;
    for (Vertex v : plan.groves) roles_ok &= role[v]++ == 0;
    for (Vertex v : plan.used) roles_ok &= role[v]++ == 0;
    audit("disjoint", roles_ok, "GROVes and MaMa vertices");
    rep.groves = plan.groves.size();
    if (!is_hamilton_cycle(g, assembled.cycle)) throw InternalError("assembly did not produce a Hamilton cycle");
    auto odd = odd_colour_classes(merged, assembled.cycle);
    const bool within = odd.empty() || (odd.size() == 1 && odd[0] == plan.internal_colour);
    audit("assembled-odd", within, std::to_string(odd.size()) + " odd merged classes");
    if (!within) throw InternalError("assembled cycle has odd classes besides the internal colour");
    merged_cycle = std::move(assembled.cycle);
    rep.plan = plan;
  }
  auto odd_merged = odd_colour_classes(merged, merged_cycle);
  audit("merged-odd", odd_merged.size() <= 1, std::to_string(odd_merged.size()) + " odd merged classes");
  return finish(unmerge_and_flip(std::move(merged_cycle), st.reg, g, trace, &rep.flips));
}

inline CyclePath solve_complete(const ColouredGraph& g, SolveOptions options = {}) {
  return solve_complete_report(g, options).cycle;
}

}  // namespace oddramsey
