#include "sgames/machine.hpp"

#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sgames {

namespace {

// Token alphabet for the canonical numbering, values 1..22:
//   1..3    inc r          (r = value - 1)
//   4..6    halt r         (r = value - 4)
//   7..18   decjz r, d0    (r = (value-7)/4, first target digit d0 = (value-7)%4 + 1)
//   19..22  continuation target digit (d = value - 18)
// Jump targets are written as target+1 in bijective base 4, least significant
// digit first, the first digit riding inside the decjz token itself.
constexpr std::uint64_t kAlphabet = 22;

std::vector<std::uint64_t> target_digits(std::uint64_t target) {
  std::vector<std::uint64_t> digits;
  std::uint64_t n = target + 1;
  while (n > 0) {
    digits.push_back((n - 1) % 4 + 1);
    n = (n - 1) / 4;
  }
  return digits;
}

std::vector<std::uint64_t> tokenize(const Program& p) {
  std::vector<std::uint64_t> tokens;
  for (const Instr& ins : p) {
    if (ins.reg < 0 || ins.reg > 2) throw std::invalid_argument("register out of range");
    switch (ins.op) {
      case Op::Inc:
        tokens.push_back(1 + ins.reg);
        break;
      case Op::Halt:
        tokens.push_back(4 + ins.reg);
        break;
      case Op::DecJz: {
        auto digits = target_digits(ins.target);
        tokens.push_back(7 + 4 * ins.reg + (digits[0] - 1));
        for (std::size_t i = 1; i < digits.size(); ++i) tokens.push_back(18 + digits[i]);
        break;
      }
    }
  }
  return tokens;
}

}  // namespace

std::string mnemonic(const Instr& i) {
  std::ostringstream os;
  switch (i.op) {
    case Op::Inc: os << "inc r" << i.reg; break;
    case Op::Halt: os << "halt r" << i.reg; break;
    case Op::DecJz: os << "decjz r" << i.reg << " " << i.target; break;
  }
  return os.str();
}

Instr parse_mnemonic(const std::string& text) {
  std::istringstream is(text);
  std::string op, reg;
  is >> op >> reg;
  if (reg.size() != 2 || reg[0] != 'r' || reg[1] < '0' || reg[1] > '2') {
    throw std::invalid_argument("bad register in instruction: " + text);
  }
  int r = reg[1] - '0';
  if (op == "inc") return inc(r);
  if (op == "halt") return halt(r);
  if (op == "decjz") {
    std::uint64_t t = 0;
    if (!(is >> t)) throw std::invalid_argument("decjz needs a target: " + text);
    return decjz(r, t);
  }
  throw std::invalid_argument("unknown instruction: " + text);
}

RunResult run_program(const Program& p, std::uint64_t input, std::uint64_t budget) {
  std::array<std::uint64_t, 3> reg{input, 0, 0};
  std::uint64_t pc = 0;
  RunResult res;
  while (res.steps_used < budget) {
    if (pc >= p.size()) return res;  // stuck: runs forever
    const Instr& ins = p[pc];
    ++res.steps_used;
    switch (ins.op) {
      case Op::Inc:
        ++reg[ins.reg];
        ++pc;
        break;
      case Op::Halt:
        res.output = reg[ins.reg];
        return res;
      case Op::DecJz:
        if (reg[ins.reg] == 0) {
          pc = ins.target;
        } else {
          --reg[ins.reg];
          ++pc;
        }
        break;
    }
  }
  return res;
}

CodeNumber encode_program(const Program& p) {
  auto tokens = tokenize(p);
  unsigned __int128 code = 0;
  unsigned __int128 place = 1;
  for (std::uint64_t t : tokens) {
    code += place * t;
    if (code > UINT64_MAX) throw std::length_error("program too long for a 64-bit code");
    place *= kAlphabet;
  }
  return static_cast<CodeNumber>(code);
}

std::optional<Program> decode_program(CodeNumber code) {
  if (code == 0) {
    return Program{decjz(2, 0)};  // reserved: a one-instruction diverging loop
  }
  std::vector<std::uint64_t> tokens;
  std::uint64_t n = code;
  while (n > 0) {
    tokens.push_back((n - 1) % kAlphabet + 1);
    n = (n - 1) / kAlphabet;
  }
  Program p;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::uint64_t t = tokens[i];
    if (t <= 3) {
      p.push_back(inc(static_cast<int>(t - 1)));
      ++i;
    } else if (t <= 6) {
      p.push_back(halt(static_cast<int>(t - 4)));
      ++i;
    } else if (t <= 18) {
      int r = static_cast<int>((t - 7) / 4);
      std::uint64_t value = (t - 7) % 4 + 1;
      std::uint64_t place = 4;
      ++i;
      while (i < tokens.size() && tokens[i] >= 19) {
        value += (tokens[i] - 18) * place;
        place *= 4;
        ++i;
      }
      p.push_back(decjz(r, value - 1));
    } else {
      return std::nullopt;  // continuation digit with no decjz to attach to
    }
  }
  return p;
}

namespace {

const std::vector<Program>& test_table() {
  static const std::vector<Program> table = {
      /* 0 */ {decjz(1, 0)},                                  // diverges
      /* 1 */ {halt(1)},                                      // 0
      /* 2 */ {inc(1), halt(1)},                              // 1
      /* 3 */ {inc(2), halt(1)},                              // 0
      /* 4 */ {inc(1), inc(2), halt(1)},                      // 1
      /* 5 */ {inc(2), inc(2), halt(1)},                      // 0
      /* 6 */ {inc(1), inc(1), halt(1)},                      // 2: inadmissible
      /* 7 */ {inc(0), decjz(2, 1)},                          // diverges
      /* 8 */ {inc(1), inc(2), inc(2), halt(1)},              // 1
      /* 9 */ {inc(2), inc(2), inc(2), halt(1)},              // 0
      /* 10 */ {halt(0)},                                     // identity: inadmissible
      /* 11 */ {inc(1), inc(2), inc(2), inc(2), inc(2), inc(2), inc(2), inc(2), inc(2),
                inc(2), inc(2), inc(2), halt(1)},             // 1, but only after 13 steps
      /* 12 */ {inc(1), inc(2), inc(2), inc(2), halt(1)},     // 1
      /* 13 */ {inc(2), inc(2), inc(2), inc(2), halt(1)},     // 0
      /* 14 */ {inc(1), inc(1), decjz(1, 3), halt(1)},        // 1
  };
  return table;
}

}  // namespace

std::size_t test_table_size() { return test_table().size(); }

std::optional<Program> program_of(Numbering nb, CodeNumber code) {
  if (nb == Numbering::Canonical) return decode_program(code);
  const auto& table = test_table();
  if (code < table.size()) return table[code];
  return decode_program(code - table.size());
}

RunResult run(Numbering nb, CodeNumber k, std::uint64_t input, std::uint64_t budget) {
  auto p = program_of(nb, k);
  if (!p) return {};  // undecodable codes diverge
  return run_program(*p, input, budget);
}

AdmissibleStream enumerate_admissible(Numbering nb, std::size_t count,
                                      std::uint64_t step_budget) {
  AdmissibleStream out;
  std::set<CodeNumber> seen;
  for (std::uint64_t round = 1; out.codes.size() < count; ++round) {
    for (CodeNumber k = 0; k <= round && out.codes.size() < count; ++k) {
      if (seen.count(k)) continue;
      if (out.steps_used >= step_budget) {
        out.budget_exhausted = true;
        return out;
      }
      RunResult r = run(nb, k, 2 * k, round);
      out.steps_used += r.steps_used;
      if (r.halted() && (*r.output == 0 || *r.output == 1)) {
        seen.insert(k);
        out.codes.push_back(k);
        out.values.push_back(static_cast<int>(*r.output));
      }
    }
  }
  return out;
}

Program characteristic_program(const SetSpec& s) {
  const BitString& prefix = s.prefix();
  if (prefix.empty()) {
    return s.tail() == 0 ? Program{halt(1)} : Program{inc(1), halt(1)};
  }
  // Exits first so every jump lands at a one-digit target:
  //   0:          jump over the exits to the test chain
  //   1:          halt with 0
  //   2,3:        halt with 1
  //   4..4+n-1:   one decjz per prefix bit, dispatching input j to its exit
  //   4+n:        dispatch every larger input to the tail's exit
  Program p;
  p.push_back(decjz(2, 4));
  p.push_back(halt(1));
  p.push_back(inc(1));
  p.push_back(halt(1));
  for (std::size_t j = 0; j < prefix.size(); ++j) {
    p.push_back(decjz(0, prefix.bit(j) ? 2 : 1));
  }
  p.push_back(decjz(2, s.tail() ? 2 : 1));
  return p;
}

CodeNumber index_of(Numbering nb, const SetSpec& s) {
  if (nb == Numbering::Test) {
    if (s == SetSpec::empty_set()) return 1;
    if (s == SetSpec::full_set()) return 2;
    return test_table().size() + encode_program(characteristic_program(s));
  }
  return encode_program(characteristic_program(s));
}

}  // namespace sgames
