// Equivariant localization data of quasimap fixed points and the bare
// descendent vertex, computed entirely from the explicit character formulas.
#pragma once

#include "torvex/character.hpp"
#include "torvex/descendent.hpp"
#include "torvex/report.hpp"
#include "torvex/series.hpp"

namespace torvex {

struct BoxOutsideShape : std::runtime_error {
  BoxOutsideShape() : std::runtime_error("box lies outside the multipartition") {}
};
struct ShapeMismatch : std::runtime_error {
  ShapeMismatch() : std::runtime_error("degree data shape does not match the multipartition") {}
};
struct NonzeroLeadingExponent : std::runtime_error {
  explicit NonzeroLeadingExponent(int e)
      : std::runtime_error("leading exponent in the splitting parameter is " + std::to_string(e)) {}
};

// Vertex-side convention knobs, arbitrated by the classical-capped-vertex
// acceptance test (criterion 8).
struct VertexConv {
  // Moving part of the virtual tangent space: q*(S(d)-S(0))/(q-1) when
  // false (basedization at p2), the q -> 1/q mirror when true.
  bool tvir_mirror = false;
  // Sign of the exponent in the polarization factor q^{+- r|d|/2}.
  int polarization_sign = +1;
};

// phi(box) = a_{n} t1^x t2^y, with framing variables A_{offset+1}..;
// offset shifts the framing block (used by the rank-r2 factor vertex).
Mono box_weight(const MultiPartition& mp, const Box& b, int framing_offset = 0);

Character framing_character(int rank, int framing_offset = 0);  // W
// V(lb,dd) = sum phi(box) q^{d_box}
Character taut_character(const MultiPartition& mp, const DegreeData& dd, int framing_offset = 0);
// S = W* V + W V* /hbar - V* V (1-1/t1)(1-1/t2)
Character s_character(const MultiPartition& mp, const DegreeData& dd, int framing_offset = 0);
// Tangent character of the instanton moduli space at the fixed point.
Character tangent_character(const MultiPartition& mp, int framing_offset = 0);
// Virtual tangent character; exact geometric q-splitting per box.
Character tvir_character(const MultiPartition& mp, const DegreeData& dd, int framing_offset = 0,
                         const VertexConv& conv = {});

// tau evaluated at x_box = phi(box) q^{d_box}.
RatFun descendent_eval(const Descendent& tau, const MultiPartition& mp, const DegreeData& dd,
                       int framing_offset = 0);

// One coefficient of the bare vertex: sum over stable degree data of total d.
RatFun bare_vertex_coeff(const MultiPartition& mp, const Descendent& tau, int d,
                         int framing_offset = 0, const VertexConv& conv = {});
// The bare vertex series for the fixed point mp, to order D.
SeriesF bare_vertex(const MultiPartition& mp, const Descendent& tau, int D,
                    int framing_offset = 0, const VertexConv& conv = {});

// Checks the a->0 factorization of the bare vertex for all fixed points of
// total size n under the splitting r = r1 + a*r2, through z-order D.
// When specialized is true, compares at a seeded random specialization of
// t1,t2,q,a_i instead of fully symbolically.
Report facver_check(const Descendent& tau, int n, int r1, int r2, int D,
                    bool specialized = false, uint64_t seed = 1,
                    const VertexConv& conv = {});

}  // namespace torvex
