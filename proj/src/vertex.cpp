#include "torvex/vertex.hpp"

#include "torvex/rng.hpp"

namespace torvex {

namespace {

Mono t1t2(int ex, int ey) { return Mono::var(VT1, 2 * ex) * Mono::var(VT2, 2 * ey); }
Mono hbar(int e = 1) { return t1t2(e, e); }   // hbar = t1 t2
Mono qpow(int e) { return Mono::var(VQ, 2 * e); }

// sum_{i=0}^{d-1} q^i per box, weighted by phi(box): the exact geometric
// splitting of (V(d)-V(0))/(q-1).
Character geometric_u(const MultiPartition& mp, const DegreeData& dd, int off) {
  Character u;
  for (const auto& b : boxes_of(mp)) {
    Mono phi = box_weight(mp, b, off);
    for (int i = 0; i < dd.at(b); ++i) u.add(phi * qpow(i), 1);
  }
  return u;
}

void check_shape(const MultiPartition& mp, const DegreeData& dd) {
  if ((int)dd.d.size() != mp.rank()) throw ShapeMismatch();
  for (int n = 0; n < mp.rank(); ++n) {
    if ((int)dd.d[n].size() != mp.comp[n].length()) throw ShapeMismatch();
    for (int y = 0; y < mp.comp[n].length(); ++y)
      if ((int)dd.d[n][y].size() != mp.comp[n].parts[y]) throw ShapeMismatch();
  }
}

}  // namespace

Mono box_weight(const MultiPartition& mp, const Box& b, int off) {
  if (!contains(mp, b)) throw BoxOutsideShape();
  return Mono::var(var_a(off + b.n + 1), 2) * t1t2(b.x, b.y);
}

Character framing_character(int rank, int off) {
  Character w;
  for (int i = 1; i <= rank; ++i) w.add(Mono::var(var_a(off + i), 2), 1);
  return w;
}

Character taut_character(const MultiPartition& mp, const DegreeData& dd, int off) {
  check_shape(mp, dd);
  Character v;
  for (const auto& b : boxes_of(mp)) v.add(box_weight(mp, b, off) * qpow(dd.at(b)), 1);
  return v;
}

Character s_character(const MultiPartition& mp, const DegreeData& dd, int off) {
  Character v = taut_character(mp, dd, off);
  Character w = framing_character(mp.rank(), off);
  Character edge = Character::weight(Mono::one())
                 - Character::weight(t1t2(-1, 0))
                 - Character::weight(t1t2(0, -1))
                 + Character::weight(hbar(-1));  // (1-1/t1)(1-1/t2)
  return w.dual() * v + (w * v.dual()).mul_mono(hbar(-1)) - v.dual() * v * edge;
}

Character tangent_character(const MultiPartition& mp, int off) {
  return s_character(mp, DegreeData::zero(mp), off);
}

Character tvir_character(const MultiPartition& mp, const DegreeData& dd, int off,
                         const VertexConv& conv) {
  check_shape(mp, dd);
  Character s0 = s_character(mp, DegreeData::zero(mp), off);
  if (dd.is_zero()) return s0;
  Character v0 = taut_character(mp, DegreeData::zero(mp), off);
  Character vd = taut_character(mp, dd, off);
  Character w = framing_character(mp.rank(), off);
  Character u = geometric_u(mp, dd, off);
  Character edge = Character::weight(Mono::one())
                 - Character::weight(t1t2(-1, 0))
                 - Character::weight(t1t2(0, -1))
                 + Character::weight(hbar(-1));
  // T^vir = S(0) + q*(S(d)-S(0))/(q-1), expanded exactly:
  //   q W* U  -  W U* / hbar  -  (q Vd* U - U* V0) (1-1/t1)(1-1/t2)
  Character moving = (w.dual() * u).mul_mono(qpow(1)) - (w * u.dual()).mul_mono(hbar(-1)) -
                     ((vd.dual() * u).mul_mono(qpow(1)) - u.dual() * v0) * edge;
  if (conv.tvir_mirror) {
    // the q -> 1/q mirror of the moving part
    Character mirrored;
    for (const auto& [m, k] : moving.terms()) {
      Mono mm = m;
      mm.e[VQ] = -mm.e[VQ];
      mirrored.add(mm, k);
    }
    moving = mirrored;
  }
  return s0 + moving;
}

RatFun descendent_eval(const Descendent& tau, const MultiPartition& mp, const DegreeData& dd,
                       int off) {
  check_shape(mp, dd);
  std::vector<RatFun> roots;
  for (const auto& b : boxes_of(mp))
    roots.push_back(RatFun::monomial(box_weight(mp, b, off) * qpow(dd.at(b))));
  return tau.eval(roots);
}

RatFun bare_vertex_coeff(const MultiPartition& mp, const Descendent& tau, int d, int off,
                         const VertexConv& conv) {
  int r = mp.rank();
  RatFun acc;
  for (const auto& dd : enumerate_degree_data(mp, d)) {
    RatFun term = roof_hat(tvir_character(mp, dd, off, conv)) * descendent_eval(tau, mp, dd, off);
    Rat sign = (d * r) % 2 ? Rat(-1) : Rat(1);
    term *= RatFun::monomial(Mono::var(VQ, conv.polarization_sign * r * d), sign);
    acc += term;
  }
  return acc;
}

SeriesF bare_vertex(const MultiPartition& mp, const Descendent& tau, int D, int off,
                    const VertexConv& conv) {
  SeriesF s(D);
  for (int d = 0; d <= D; ++d) s.c[d] = bare_vertex_coeff(mp, tau, d, off, conv);
  return s;
}

Report facver_check(const Descendent& tau, int n, int r1, int r2, int D, bool specialized,
                    uint64_t seed, const VertexConv& conv) {
  Report rep;
  rep.title = "facver n=" + std::to_string(n) + " split (" + std::to_string(r1) + "," +
              std::to_string(r2) + ") tau=" + tau.str() + (specialized ? " [specialized]" : "");
  if (!tau.is_polynomial()) {
    rep.add("descendent is polynomial", false, tau.str());
    return rep;
  }
  int r = r1 + r2;
  // splitting substitution a_j -> a*a_j for j > r1
  std::array<Mono, NVAR> split;
  for (int v = 0; v < NVAR; ++v) split[v] = Mono::var(v);
  for (int j = r1 + 1; j <= r; ++j) split[var_a(j)] = Mono::var(var_a(j)) * Mono::var(VAAUX);

  std::array<Rat, NVAR> vals;
  vals.fill(Rat(1));
  if (specialized) {
    SpecDraw draw(seed);
    vals = draw.draw_params(r);
  }

  // Kähler shifts: z hbar^{r2/2} on factor 1, z hbar^{-r1/2} q^{-r1} on factor 2
  Mono shift1 = (Mono::var(VT1) * Mono::var(VT2)).pow(r2);  // hbar^{r2/2}
  Mono shift2 = (Mono::var(VT1, -1) * Mono::var(VT2, -1) * Mono::var(VQ, -2)).pow(r1);

  Descendent tau1 = Descendent::one();
  for (const auto& mp : enumerate_multipartitions(n, r)) {
    // split the fixed point
    MultiPartition l1(std::vector<Partition>(mp.comp.begin(), mp.comp.begin() + r1));
    MultiPartition l2(std::vector<Partition>(mp.comp.begin() + r1, mp.comp.end()));
    // factor vertices (factor 2 uses framing block offset r1)
    SeriesF v1 = bare_vertex(l1, tau, D, 0, conv);
    SeriesF v2 = bare_vertex(l2, tau1, D, r1, conv);
    for (int d = 0; d <= D; ++d) {
      std::string name = "lim V" + mp.str() + " z^" + std::to_string(d);
      RatFun full = bare_vertex_coeff(mp, tau, d, 0, conv).remap(split);
      RatFun rhs;
      for (int d1 = 0; d1 <= d; ++d1) {
        int d2 = d - d1;
        rhs += v1.c[d1] * RatFun::monomial(shift1.pow(d1)) * v2.c[d2] *
               RatFun::monomial(shift2.pow(d2));
      }
      if (full.is_zero()) {
        rep.add(name, rhs.is_zero(), "lhs = 0");
        continue;
      }
      auto [e, g] = full.lowest_term(VAAUX);
      if (e != 0) {
        rep.add(name, false, "leading splitting exponent " + std::to_string(e));
        continue;
      }
      bool ok;
      std::string wit;
      if (specialized) {
        Rat lg, rg;
        try {
          lg = g.specialize(vals);
          rg = rhs.specialize(vals);
        } catch (const DenominatorVanishes&) {
          rep.add(name, false, "specialization hit a pole (re-seed)");
          continue;
        }
        ok = lg == rg;
        if (!ok) wit = rat_str(lg) + " != " + rat_str(rg);
      } else {
        ok = g.equals(rhs);
        if (!ok) wit = "symbolic mismatch";
      }
      rep.add(name, ok, wit);
    }
  }
  return rep;
}

}  // namespace torvex
