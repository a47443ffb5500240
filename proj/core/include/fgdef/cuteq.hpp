#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fgdef/symbols.hpp"
#include "fgdef/word.hpp"

namespace fgdef {

/// Closed interval [left, right] of boundaries, 1-based, left < right.
struct BoundarySpan {
  std::size_t left = 1;
  std::size_t right = 2;

  friend bool operator==(const BoundarySpan&, const BoundarySpan&) = default;
};

/// A base of a generalized equation: spans [left, right], carries an
/// orientation, and is either paired with a dual base or labelled by a
/// constant word.
struct Base {
  std::string name;
  BoundarySpan span;
  int orientation = 1;
  std::optional<std::size_t> dual;  // index into GeneralizedEquation::bases
  std::optional<Word> constant;
};

/// Items h_1..h_rho sit between consecutive boundaries 1..rho+1.
struct GeneralizedEquation {
  std::size_t items = 1;
  std::vector<Base> bases;
  // Closed sections partitioning [1, rho+1]. Empty means one section.
  std::vector<BoundarySpan> sections;

  std::vector<BoundarySpan> closed_sections() const;
  // Throws InputError on a malformed equation.
  void validate() const;
};

/// A solution assigns each item a non-empty word such that every closed
/// section reads as a reduced word, U[mu]^e(mu) = U[dual]^e(dual) for paired
/// bases, and U[mu]^e(mu) equals the label of a constant base.
bool is_solution(const GeneralizedEquation& ge, std::span<const Word> items);

/// Word covered by a span under an item assignment, concatenated as written.
Word segment(std::span<const Word> items, const BoundarySpan& span);

using ParamWord = std::vector<std::pair<std::size_t, bool>>;  // (parameter, inverted)

struct CutInterval {
  ParamWord fx;  // f_X(sigma)
  SymbolWord fm;  // f_M(sigma), the partition
  std::optional<BoundarySpan> span;  // set for equations built from a GE
};

struct CutEquation {
  std::vector<std::string> params;  // X
  std::vector<std::string> vars;    // M
  std::vector<CutInterval> intervals;  // E

  void validate() const;
  std::string render(const CutInterval& interval) const;
  std::string render(const SymbolWord& word) const;
};

/// Result of the interval-partition construction, with the bookkeeping
/// needed to move solutions between the two sides.
struct CutEquationBuild {
  CutEquation equation;
  std::vector<std::size_t> item_vars;  // h_i -> variable index
  std::vector<std::optional<std::size_t>> base_vars;  // base -> representative variable
  std::vector<BoundarySpan> parameter_spans;  // X, in parameter order
};

/// Every tiling of each sigma in `partition` by items and bases becomes one
/// interval. Each sigma must be a union of closed sections; the members of
/// `partition` must be consecutive and cover [1, rho+1].
CutEquationBuild build_cut_equation(const GeneralizedEquation& ge, std::span<const BoundarySpan> partition);
CutEquationBuild build_cut_equation(const GeneralizedEquation& ge);  // partition = closed sections

struct InducedSolution {
  std::vector<Word> beta;   // per parameter
  std::vector<Word> alpha;  // per variable
};

/// beta(sigma) = the word over sigma; alpha(h_i) = U_i; a representative
/// base variable gets U[mu]^e(mu).
InducedSolution induced_solution(const CutEquationBuild& build, const GeneralizedEquation& ge,
                                 std::span<const Word> items);

enum class SolutionMode { kGraphical, kGroup };

struct SolutionCheck {
  SolutionMode mode = SolutionMode::kGraphical;
  std::vector<bool> interval_ok;
  bool ok = false;
};

/// Graphical: substituting alpha into f_M(sigma) reads, without
/// cancellation, exactly the reduced form of beta(f_X(sigma)). Group: the
/// two sides agree after reduction. Wrong-sized assignments, and empty
/// variable values in graphical mode, are input errors.
SolutionCheck check_solution(const CutEquation& eq, std::span<const Word> beta, std::span<const Word> alpha,
                             SolutionMode mode);

/// Total occurrences of each variable over all intervals, either orientation.
std::vector<std::size_t> occurrence_counts(const CutEquation& eq);

struct EliminationStep {
  std::size_t interval = 0;  // index in the original equation
  std::size_t variable = 0;
  std::size_t symbol = 0;  // position of the lone occurrence in f_M
  std::string identity;    // e.g. "h4 = (h1 h2 h3)^-1 p (h5)^-1"
};

struct EliminationResult {
  CutEquation reduced;
  std::vector<std::size_t> kept;  // original indices of surviving intervals
  std::vector<EliminationStep> trace;
  std::vector<std::size_t> unconstrained_params;
};

/// Repeatedly drops the lowest-index interval containing a variable that
/// occurs exactly once in the whole equation, picking the lowest-index such
/// variable. A parameter all of whose intervals are dropped is reported as
/// unconstrained.
EliminationResult eliminate_single_occurrence(const CutEquation& eq);

/// Extends a group solution of the reduced equation to one of the original
/// by replaying the trace backwards. `alpha` covers all variables of the
/// original; entries of eliminated variables are overwritten.
std::vector<Word> extend_group_solution(const CutEquation& original, const EliminationResult& result,
                                        std::span<const Word> beta, std::vector<Word> alpha);

}  // namespace fgdef
