#pragma once

#include <memory>
#include <optional>
#include <variant>

#include <json.hpp>

#include "sgames/axioms.hpp"
#include "sgames/noncomp.hpp"
#include "sgames/variants.hpp"

namespace sgames {

// A game description as it travels through the CLI and files: one of the
// finite catalogue-style games, the staged game for a set A, a typed
// variant, an exception game, or an intersection/union of two descriptions.
struct GameSpec;
using GameSpecPtr = std::shared_ptr<GameSpec>;

struct FiniteNode {
  DeterminingSets sets;
};
struct OmegaNode {
  SetSpec a;
  std::optional<std::size_t> stages;  // overrides the context cap
};
struct VariantNode {
  int type_id = 0;
  std::optional<std::size_t> stages;
};
struct ExceptionNode {
  int type_id = 0;
  std::optional<SetSpec> a;  // defaults to the built one
};
struct CompositeNode {
  bool intersect = true;
  GameSpecPtr left, right;
};

struct GameSpec {
  std::variant<FiniteNode, OmegaNode, VariantNode, ExceptionNode, CompositeNode> node;
};

struct EvalContext {
  std::size_t stages = 10;
  std::uint64_t budget = 100000;
  Numbering numbering = Numbering::Test;
};

GameSpec parse_game(const nlohmann::json& j);
nlohmann::json game_to_json(const GameSpec& g);

Verdict eval_spec(const GameSpec& g, const SetSpec& coalition, std::size_t depth,
                  const EvalContext& ctx);

// JSON forms used across the CLI:
//   bit strings        "0110"
//   SetSpec            {"prefix":"10","tail":1}
//   determining sets   {"kind":"finite","T0":[...],"T1":[...]}
//   snapshots          {"T0":[...],"T1":[...],"stages":N}
//   finite games       {"carrier":3,"winning":["110","111"]}
//   programs           ["decjz r2 4","halt r1",...]
nlohmann::json to_json(const SetSpec& s);
SetSpec setspec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DeterminingSets& sets);
DeterminingSets sets_from_json(const nlohmann::json& j);
nlohmann::json snapshot_json(const DeterminingSets& sets, std::size_t stages);
nlohmann::json to_json(const FiniteGame& g);
FiniteGame finite_game_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Program& p);
Program program_from_json(const nlohmann::json& j);

// CLI shorthand for sets: "10:1" (prefix:tail), ":0", "empty", "full".
SetSpec parse_setspec_arg(const std::string& text);

}  // namespace sgames
