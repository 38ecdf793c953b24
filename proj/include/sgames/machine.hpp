#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgames/setspec.hpp"

namespace sgames {

using CodeNumber = std::uint64_t;

// Deterministic register machine with three registers. Register 0 holds the
// input; `halt r` stops and yields the content of register r. `decjz r t`
// jumps to address t when register r is zero and otherwise decrements it and
// falls through. A program counter outside the program makes the machine run
// forever.
enum class Op { Inc, DecJz, Halt };

struct Instr {
  Op op;
  int reg = 0;          // 0..2
  std::uint64_t target = 0;  // DecJz only

  bool operator==(const Instr&) const = default;
};

using Program = std::vector<Instr>;

inline Instr inc(int r) { return {Op::Inc, r, 0}; }
inline Instr halt(int r) { return {Op::Halt, r, 0}; }
inline Instr decjz(int r, std::uint64_t t) { return {Op::DecJz, r, t}; }

// Mnemonic form, e.g. "decjz r0 4".
std::string mnemonic(const Instr& i);
Instr parse_mnemonic(const std::string& text);

struct RunResult {
  std::optional<std::uint64_t> output;  // nullopt: still running at the budget
  std::uint64_t steps_used = 0;

  bool halted() const { return output.has_value(); }
};

RunResult run_program(const Program& p, std::uint64_t input, std::uint64_t budget);

// Injective numbering of programs. Instructions are spelled as tokens over a
// 22-letter alphabet (inc/halt per register, decjz per register carrying the
// first digit of the target, continuation digits), and the token sequence is
// read as a bijective base-22 numeral. Every program has exactly one code;
// not every code spells a program.
CodeNumber encode_program(const Program& p);  // throws std::length_error past 64 bits
std::optional<Program> decode_program(CodeNumber code);

// Two numberings of the partial functions realized by the machine. Canonical
// is the raw program numbering above. Test places a small curated table of
// programs at codes 0..14 and shifts the canonical numbering above them; it
// exists so the staged constructions downstream see small admissible codes.
enum class Numbering { Canonical, Test };

std::optional<Program> program_of(Numbering nb, CodeNumber code);

// phi_k(input) under the given numbering, capped at `budget` machine steps.
// A code that does not spell a program behaves as a diverging one.
RunResult run(Numbering nb, CodeNumber k, std::uint64_t input, std::uint64_t budget);

struct AdmissibleStream {
  std::vector<CodeNumber> codes;   // k_s in discovery order
  std::vector<int> values;         // phi_{k_s}(2 k_s), each 0 or 1
  std::uint64_t steps_used = 0;
  bool budget_exhausted = false;   // fewer codes than requested
};

// Dovetailed enumeration of { k : phi_k(2k) in {0,1} }: round n runs codes
// 0..n for n steps each and reports first-time halts in code order. The
// stream is deterministic and prefix-stable in `count`.
AdmissibleStream enumerate_admissible(Numbering nb, std::size_t count,
                                      std::uint64_t step_budget);

// A total program computing the characteristic function of the given set,
// and its code. Throws std::length_error when the prefix is too long for a
// 64-bit code (around nine prefix bits under the canonical alphabet).
Program characteristic_program(const SetSpec& s);
CodeNumber index_of(Numbering nb, const SetSpec& s);

std::size_t test_table_size();

}  // namespace sgames
