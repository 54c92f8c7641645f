#ifndef EQUIHH_SPAN_HPP
#define EQUIHH_SPAN_HPP

#include "equihh/gset.hpp"

namespace equihh {

// A Burnside-category morphism source -> target, represented by an actual
// span [source <- apex -> target]; equality is span isomorphism.
struct SpanMorphism {
  FiniteGSet source;
  FiniteGSet target;
  FiniteGSet apex;
  std::vector<int> left;   // apex -> source
  std::vector<int> right;  // apex -> target

  void validate() const;
};

SpanMorphism identity_span(const FiniteGSet& x);

// j applied to the equivariant map f: X -> Y, i.e. the span [Y <-f- X = X]
// regarded as a Burnside morphism Y -> X.
SpanMorphism j_embed(const FiniteGSet& x, const FiniteGSet& y, const std::vector<int>& f);

// The transfer-type span [X = X -f-> Y] : X -> Y.
SpanMorphism transfer_span(const FiniteGSet& x, const FiniteGSet& y, const std::vector<int>& f);

// Pullback composition s2 after s1 (target of s1 must equal source of s2).
SpanMorphism compose_spans(const SpanMorphism& s2, const SpanMorphism& s1);

// Isomorphism of spans over identical boundary G-sets, by brute-force search
// over equivariant apex bijections.
bool spans_isomorphic(const SpanMorphism& a, const SpanMorphism& b);

// Split the apex into orbits.
std::vector<SpanMorphism> decompose_span(const SpanMorphism& s);

// All isomorphism classes of spans with transitive apex from X to Y (orbits
// of the ambient group), in a deterministic order.
std::vector<SpanMorphism> all_orbit_spans(const GroupPtr& g, const FiniteGSet& x,
                                          const FiniteGSet& y);

// Index of s in the list (up to isomorphism), or -1.
int find_span(const std::vector<SpanMorphism>& list, const SpanMorphism& s);

}  // namespace equihh

#endif
