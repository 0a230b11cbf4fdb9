// Chmutov-Varchenko style rewriting: reduces any share to its normal form in
// C[c1,c2,x], where c_i is the value of an arch on strand i and x the value
// of a bridge.
//
// The reduction is driven by three local relations of the universal
// enveloping algebra picture, each exact for sl2 with the form 2 tr(uv):
//
//   * an arch of length 0 contributes a central Casimir factor c_i;
//   * an arch of length 1 contributes (c_i - 1) (leaf removal);
//   * transposing two adjacent chord ends on a strand leaves a commutator
//     defect. For sl2 the defect is a trivalent epsilon-vertex whose legs
//     can be slid along the strands and contracted back into plain chords
//     (the structure-constant contraction eps.eps = delta.delta - delta.delta).
//
// Shrinking the minimal arch resolves into the six-term relations; removing
// a bridge crossing resolves into the four-term relation. Every step
// strictly decreases the well-order (chords, minimal arch length, crossings),
// which is asserted at each reduction.
#pragma once

#include <sl2w/diagrams.hpp>
#include <sl2w/poly.hpp>

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>

namespace sl2w {

class RewriteEngine {
 public:
  // w_sl2 of a share as an exact polynomial in c1, c2, x.
  PolyC1C2X normal_form(const Share& s);

  // Value on a chord diagram: the diagram seen as a one-strand share,
  // with c1 renamed c. Monic of degree n in c.
  PolyC wsl2_diagram(const ChordDiagram& d);

  // Normal form with c1 = c2 = c, as coefficients over powers of x.
  PolyCY wsl2_share_in_x(const Share& s);

  size_t cache_size() const;
  void clear_cache();

  // Line-delimited JSON cache persistence, versioned by a format tag.
  void load_cache(const std::string& path);
  void save_cache(const std::string& path) const;

 private:
  PolyC1C2X reduce(const Share& s);

  // The cache behaves as one logical map under concurrent use; single
  // threaded use pays one uncontended lock per lookup.
  mutable std::mutex mutex_;
  std::unordered_map<std::string, PolyC1C2X> cache_;
};

}  // namespace sl2w
