#include "sgames/gamespec.hpp"

#include <stdexcept>

namespace sgames {

using nlohmann::json;

json to_json(const SetSpec& s) {
  return json{{"prefix", s.prefix().str()}, {"tail", s.tail()}};
}

SetSpec setspec_from_json(const json& j) {
  return SetSpec(BitString(j.at("prefix").get<std::string>()), j.at("tail").get<int>());
}

json to_json(const DeterminingSets& sets) {
  json j;
  j["kind"] = "finite";
  j["T0"] = json::array();
  j["T1"] = json::array();
  for (const BitString& s : sets.t0) j["T0"].push_back(s.str());
  for (const BitString& s : sets.t1) j["T1"].push_back(s.str());
  return j;
}

DeterminingSets sets_from_json(const json& j) {
  DeterminingSets sets;
  for (const auto& s : j.at("T0")) sets.t0.insert(BitString(s.get<std::string>()));
  for (const auto& s : j.at("T1")) sets.t1.insert(BitString(s.get<std::string>()));
  return sets;
}

json snapshot_json(const DeterminingSets& sets, std::size_t stages) {
  json j;
  j["T0"] = json::array();
  j["T1"] = json::array();
  for (const BitString& s : sets.t0) j["T0"].push_back(s.str());
  for (const BitString& s : sets.t1) j["T1"].push_back(s.str());
  j["stages"] = stages;
  return j;
}

json to_json(const FiniteGame& g) {
  json j;
  j["carrier"] = g.carrier;
  j["winning"] = json::array();
  for (std::uint32_t m = 0; m < g.mask_count(); ++m) {
    if (g.wins(m)) j["winning"].push_back(BitString::from_mask(m, g.carrier).str());
  }
  return j;
}

FiniteGame finite_game_from_json(const json& j) {
  FiniteGame g;
  g.carrier = j.at("carrier").get<int>();
  if (g.carrier < 0 || g.carrier > FiniteGame::kMaxCarrier) {
    throw std::invalid_argument("carrier size out of range");
  }
  for (const auto& s : j.at("winning")) {
    BitString mask(s.get<std::string>());
    if (mask.size() != static_cast<std::size_t>(g.carrier)) {
      throw std::invalid_argument("winning mask length must equal the carrier size");
    }
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask.bit(i)) m |= 1u << i;
    }
    g.winning |= 1u << m;
  }
  return g;
}

json to_json(const Program& p) {
  json j = json::array();
  for (const Instr& i : p) j.push_back(mnemonic(i));
  return j;
}

Program program_from_json(const json& j) {
  Program p;
  for (const auto& s : j) p.push_back(parse_mnemonic(s.get<std::string>()));
  return p;
}

SetSpec parse_setspec_arg(const std::string& text) {
  if (text == "empty") return SetSpec::empty_set();
  if (text == "full") return SetSpec::full_set();
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument(
        "set spec must be 'empty', 'full' or '<prefix>:<tail>' (e.g. 10:1)");
  }
  const std::string prefix = text.substr(0, colon);
  const std::string tail = text.substr(colon + 1);
  if (tail != "0" && tail != "1") {
    throw std::invalid_argument("tail bit must be 0 or 1");
  }
  return SetSpec(BitString(prefix), tail[0] - '0');
}

GameSpec parse_game(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  GameSpec g;
  if (kind == "finite") {
    g.node = FiniteNode{sets_from_json(j)};
  } else if (kind == "omega") {
    OmegaNode n;
    n.a = setspec_from_json(j.at("A"));
    if (j.contains("stages")) n.stages = j.at("stages").get<std::size_t>();
    g.node = n;
  } else if (kind == "variant") {
    VariantNode n;
    n.type_id = j.at("type").get<int>();
    if (j.contains("stages")) n.stages = j.at("stages").get<std::size_t>();
    g.node = n;
  } else if (kind == "exception") {
    ExceptionNode n;
    n.type_id = j.at("type").get<int>();
    if (j.contains("A")) n.a = setspec_from_json(j.at("A"));
    g.node = n;
  } else if (kind == "intersection" || kind == "union") {
    CompositeNode n;
    n.intersect = kind == "intersection";
    n.left = std::make_shared<GameSpec>(parse_game(j.at("left")));
    n.right = std::make_shared<GameSpec>(parse_game(j.at("right")));
    g.node = n;
  } else {
    throw std::invalid_argument("unknown game kind: " + kind);
  }
  return g;
}

json game_to_json(const GameSpec& g) {
  return std::visit(
      [](const auto& node) -> json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FiniteNode>) {
          return to_json(node.sets);
        } else if constexpr (std::is_same_v<T, OmegaNode>) {
          json j{{"kind", "omega"}, {"A", to_json(node.a)}};
          if (node.stages) j["stages"] = *node.stages;
          return j;
        } else if constexpr (std::is_same_v<T, VariantNode>) {
          json j{{"kind", "variant"}, {"type", node.type_id}};
          if (node.stages) j["stages"] = *node.stages;
          return j;
        } else if constexpr (std::is_same_v<T, ExceptionNode>) {
          json j{{"kind", "exception"}, {"type", node.type_id}};
          if (node.a) j["A"] = to_json(*node.a);
          return j;
        } else {
          json j{{"kind", node.intersect ? "intersection" : "union"}};
          j["left"] = game_to_json(*node.left);
          j["right"] = game_to_json(*node.right);
          return j;
        }
      },
      g.node);
}

Verdict eval_spec(const GameSpec& g, const SetSpec& coalition, std::size_t depth,
                  const EvalContext& ctx) {
  return std::visit(
      [&](const auto& node) -> Verdict {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FiniteNode>) {
          return eval(node.sets, coalition, depth);
        } else if constexpr (std::is_same_v<T, OmegaNode>) {
          auto stages = compute_stages_shared(ctx.numbering, node.stages.value_or(ctx.stages),
                                              ctx.budget);
          return eval_omega(make_omega(stages, node.a), coalition, depth);
        } else if constexpr (std::is_same_v<T, VariantNode>) {
          auto stages = compute_stages_shared(ctx.numbering, node.stages.value_or(ctx.stages),
                                              ctx.budget);
          return eval_variant(build_variant(node.type_id, stages), coalition, depth);
        } else if constexpr (std::is_same_v<T, ExceptionNode>) {
          ExceptionGame eg = build_noncomputable(node.type_id);
          if (node.a) eg.a = *node.a;
          return eval_exception(eg, coalition, depth);
        } else {
          Verdict a = eval_spec(*node.left, coalition, depth, ctx);
          Verdict b = eval_spec(*node.right, coalition, depth, ctx);
          return node.intersect ? verdict_and(a, b) : verdict_or(a, b);
        }
      },
      g.node);
}

}  // namespace sgames
