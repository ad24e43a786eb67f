#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmn/gmn_groups.hpp"

namespace gmn {

enum class FactorTag { A, B };

// An element of A or B carried as its canonical normal form; the syllable
// type of the G-level engine.
using FactorElem = GEngine::Syllable;

inline FactorTag tag_of(const FactorElem& x) {
  return std::holds_alternative<ANormal>(x) ? FactorTag::A : FactorTag::B;
}

// The exponents of a double-coset membership x = c^alpha d^beta y c^gamma
// d^delta. Canonical choice: gamma = 0 for the A factor (alpha carries
// alpha+gamma), delta = 0 for B (beta carries beta+delta); the remaining
// entries are the uniquely determined ones.
struct DoubleCosetWitness {
  FactorTag tag;
  Int alpha;
  Int beta;
  Int gamma;
  Int delta;

  bool operator==(const DoubleCosetWitness&) const = default;
};

// The unique solution h_0, ..., h_r of x_i = h_{i-1}^-1 y_i h_i.
struct HSequence {
  std::vector<HElem> elements;
};

// Diagnostic result of the H-conjugacy equation solver; the witness module
// consumes the failure details.
struct HSeqAnalysis {
  enum class Kind {
    FactorMismatch,   // some x_i, y_i in different factors
    DoubleCosetFail,  // x_i not in H y_i H
    ConditionFail,    // interior compatibility sum nonzero
    Solved,
  };
  Kind kind = Kind::Solved;
  size_t index = 0;         // offending component, 1-based
  Int violated_sum = 0;     // ConditionFail only (reduced mod t when finite)
  std::vector<DoubleCosetWitness> witnesses;
  std::vector<HElem> h;     // Solved only: h_0..h_r
};

struct Certificate {
  enum class Kind {
    LengthMismatch,
    FactorCoreMismatch,   // cyclic cores in different factors (or H vs non-H)
    FactorNotConjugate,   // same factor, not conjugate inside it
    NotHConjugate,        // length > 1, every rotation fails
    ModulusWitness,       // filled in by the witness module
  };
  Kind kind = Kind::LengthMismatch;
  Int l_f = 0;  // LengthMismatch
  Int l_g = 0;
  Int t = 0;               // ModulusWitness
  std::string trace;       // ModulusWitness (JSON text)

  bool operator==(const Certificate&) const = default;
};

struct Verdict {
  bool conjugate = false;
  Word conjugator;          // conjugate: normal(conjugator^-1 f conjugator) = normal(g)
  Certificate certificate;  // non-conjugate
};

// Whether x lies in H y H (resp. H(t) y H(t)); x, y must be in the same
// factor and outside H. The returned witness is re-verified by multiplication.
std::optional<DoubleCosetWitness> double_coset_decompose(const GroupContext& ctx,
                                                         const FactorElem& x,
                                                         const FactorElem& y);

// Full diagnostic pass over the componentwise equations; components must
// alternate factors and have r > 1.
HSeqAnalysis analyze_h_sequence(const GroupContext& ctx,
                                const std::vector<FactorElem>& xs,
                                const std::vector<FactorElem>& ys);

std::optional<HSequence> solve_h_sequence(const GroupContext& ctx,
                                          const std::vector<FactorElem>& xs,
                                          const std::vector<FactorElem>& ys);

// H-conjugacy for canonical forms of equal length r > 1: returns h with
// h^-1 g h = f when it exists.
std::optional<HElem> h_conjugate(const GroupContext& ctx, const GNormal& f,
                                 const GNormal& g);

// The factor-conjugacy class data of a length-1 element: which factor its
// syllable sits in, the cyclic core inside that factor, and whether that core
// lies in H (with its value when it does).
struct LengthOneCore {
  FactorTag tag = FactorTag::A;
  FactorElem core;
  bool in_h = false;
  HElem h;
};

// Requires length(u) = 1.
LengthOneCore length_one_core(const GroupContext& ctx, const GNormal& u);

// Conjugacy inside a single factor A or B; returns z with z^-1 x z = y.
std::optional<FactorElem> factor_conjugacy(const GroupContext& ctx,
                                           const FactorElem& x,
                                           const FactorElem& y);

Verdict decide_conjugacy(const GroupContext& ctx, const GNormal& f,
                         const GNormal& g);

}  // namespace gmn
