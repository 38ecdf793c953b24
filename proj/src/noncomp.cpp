#include "sgames/noncomp.hpp"

#include <stdexcept>

namespace sgames {

const std::vector<int>& exception_type_ids() {
  static const std::vector<int> ids = {1, 3, 4, 5, 7, 9, 11, 12, 13, 15};
  return ids;
}

ExceptionGame build_noncomputable(int type_id) {
  bool listed = false;
  for (int t : exception_type_ids()) listed = listed || t == type_id;
  if (!listed) {
    throw std::invalid_argument(
        "no noncomputable game of this type (type 2 games are dictatorial, "
        "the others are empty)");
  }
  ExceptionGame g;
  g.type_id = type_id;
  g.base = finite_example(type_id);
  g.mode = type_id == 5 ? ExceptionMode::WinSideOnly : ExceptionMode::TwoSided;
  const BitString excluded("0100");
  for (const BitString& tau : g.base.t0) {  // std::set iterates in order
    if (type_id == 7 && tau == excluded) continue;
    g.a = SetSpec(tau, 1);
    return g;
  }
  throw std::logic_error("finite example with empty T0");
}

Verdict eval_exception(const ExceptionGame& g, const SetSpec& coalition,
                       std::size_t depth) {
  if (coalition == g.a) return Verdict::Winning;
  if (g.mode == ExceptionMode::TwoSided && coalition == g.a.complemented()) {
    return Verdict::Losing;
  }
  return eval(g.base, coalition, depth);
}

ExtremalWitnesses extremal_witnesses(const ExceptionGame& g) {
  if (g.mode != ExceptionMode::TwoSided) {
    throw std::invalid_argument("witnesses are defined for two-sided games");
  }
  ExtremalWitnesses w;
  const BitString& win = *g.base.t1.begin();
  w.finite_winning = SetSpec(win.append(g.a.bit(win.size())), 0);
  const BitString& lose = *g.base.t0.begin();
  w.cofinite_losing = SetSpec(lose.append(1 - g.a.bit(lose.size())), 1);
  return w;
}

bool noncomputability_precondition(const SetSpec& a, const DeterminingSets& base) {
  auto has_segment_in = [&](const SetSpec& s, const std::set<BitString>& strings) {
    for (std::size_t len = 1; len <= base.max_length(); ++len) {
      if (strings.count(s.characteristic_prefix(len))) return true;
    }
    return false;
  };
  if (a.is_cofinite() && has_segment_in(a, base.t0)) return true;
  SetSpec ac = a.complemented();
  return ac.is_cofinite() && has_segment_in(ac, base.t1);
}

bool noncomputability_precondition(const ExceptionGame& g) {
  return noncomputability_precondition(g.a, g.base);
}

}  // namespace sgames
