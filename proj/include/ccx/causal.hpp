#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ccx/cobordism.hpp"

namespace ccx {

enum class StateKind { Connecting, Slice };

// A bra or ket labelled by three closed complexes of equal rank. Both kinds
// carry a five node fragment [l0, t0, l1, t1, l2] with arrows l0->t0, l1->t0,
// l1->t1, l2->t1, always stored in that order. Slice states <l0,l1,l2|
// reduce their outer labels onto the transitions and collapse the middle;
// connecting states |l0,l1,l2> do the opposite.
struct State {
  StateKind kind = StateKind::Slice;
  std::array<ComplexPtr, 3> labels{};
  GeometricSequence fragment;  // empty for units
  // The formal identity at a boundary: no fragment, every label the same
  // complex, transparent in sequences and realized as a unit cobordism.
  bool unit = false;
};

// maps = the four fragment arrows in storage order. The transitions are
// taken from their codomains.
State make_state(StateKind kind, std::array<ComplexPtr, 3> labels,
                 std::vector<CcMap> maps);

State slice_state(const SliceSequence& q);
State unit_state(const CellComplex& j);

// The connecting state between two adjacent slice states: the left one's
// outgoing half glued to the right one's ingoing half.
State connecting_state(const State& left, const State& right);

// Structural equality: the two diagrams match under some relabeling of the
// end and middle labels that carries the arrows into each other. Monotone
// dense relabeling is tried first, then an isomorphism search.
bool state_equal(const State& a, const State& b);

// states.front() is the image of the expression, states.back() its domain.
struct StateSequenceExpr {
  std::vector<State> states;
};

// Checks the junction conditions: kinds alternate, adjacent states agree on
// the shared half fragment, units force both neighbours to coincide.
StateSequenceExpr make_sequence(std::vector<State> states);

const State& image_of(const StateSequenceExpr& q);
const State& domain_of(const StateSequenceExpr& q);
// Endpoint kinds as (domain, image).
std::pair<StateKind, StateKind> hom_kinds(const StateSequenceExpr& q);

// First and last non-unit slice states of the expression.
const State& outgoing_slice(const StateSequenceExpr& q);
const State& ingoing_slice(const StateSequenceExpr& q);

// Concatenation sharing one state: the domain of s must equal the image of
// g, and the shared state is kept once.
StateSequenceExpr compose_sequences(const StateSequenceExpr& s,
                                    const StateSequenceExpr& g);

// Folds the slice states into a cobordism, gluing neighbours along their
// shared boundary label from the domain end outward. The ingoing boundary
// of the result is the last slice's third label.
Cobordism realize(const StateSequenceExpr& q);

enum class Functor { C, T, P };

// C dualizes every label and fragment, flips kinds, reverses each state's
// labels and the whole expression; T only reverses; P only dualizes and
// flips. All three are involutions and C composes as P after T.
StateSequenceExpr apply_functor(Functor f, const StateSequenceExpr& q);

}  // namespace ccx
