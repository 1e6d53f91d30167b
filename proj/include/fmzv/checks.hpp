#pragma once

// One named checker per identity family; each returns structured verdicts
// over a deterministic parameter grid.

#include "fmzv/config.hpp"
#include "fmzv/verdict.hpp"
#include "fmzv/wordops.hpp"

namespace fmzv::checks {

std::vector<Verdict> stuffle_character(const RunConfig&);
std::vector<Verdict> shuffle_symbolic(const RunConfig&);
std::vector<Verdict> shuffle_finite(const RunConfig&);
std::vector<Verdict> regularization(const RunConfig&);
std::vector<Verdict> duality(const RunConfig&);
std::vector<Verdict> residues(const RunConfig&);
std::vector<Verdict> depth_drop(const RunConfig&);
std::vector<Verdict> lift(const RunConfig&);
std::vector<Verdict> words_invariants(const RunConfig&);
std::vector<Verdict> harmonic_laws(const RunConfig&);

using CheckFn = std::vector<Verdict> (*)(const RunConfig&);
const std::vector<std::pair<std::string, CheckFn>>& registry();

// weight-graded lift table w_n^N(s); built by the exact recursion
YLinQ lift_word(int n, int N, int s);

} // namespace fmzv::checks
