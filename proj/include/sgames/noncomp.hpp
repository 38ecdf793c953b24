#pragma once

#include <vector>

#include "sgames/detgame.hpp"

namespace sgames {

// Games that agree with a finite determining-string game everywhere except
// at one distinguished coalition A (and, in two-sided mode, at its
// complement). A is picked so that the game has a winning coalition whose
// every determining prefix says "losing", which is exactly what strips the
// game of any evaluation procedure reading finitely many bits.
enum class ExceptionMode {
  TwoSided,     // A wins, A^c loses, everything else follows the base sets
  WinSideOnly,  // only A is overridden (used for the type-5 game)
};

struct ExceptionGame {
  int type_id = 0;
  SetSpec a;
  DeterminingSets base;
  ExceptionMode mode = ExceptionMode::TwoSided;
};

const std::vector<int>& exception_type_ids();  // {1,3,4,5,7,9,11,12,13,15}

// base = the finite example of the type; A = the least string of T0 extended
// by an all-ones tail (for type 7 the least such string other than 0100).
ExceptionGame build_noncomputable(int type_id);

Verdict eval_exception(const ExceptionGame& g, const SetSpec& coalition,
                       std::size_t depth);

struct ExtremalWitnesses {
  SetSpec finite_winning;
  SetSpec cofinite_losing;
};

// A finite winning coalition and a cofinite losing one, obtained by stepping
// one bit past a winning (resp. losing) determining string in the direction
// that dodges A^c (resp. A). Two-sided mode only.
ExtremalWitnesses extremal_witnesses(const ExceptionGame& g);

// The structural condition that makes the exception bite: A infinite with a
// losing-determining initial segment, or A^c infinite with a winning one.
bool noncomputability_precondition(const SetSpec& a, const DeterminingSets& base);
bool noncomputability_precondition(const ExceptionGame& g);

}  // namespace sgames
