#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace hsgas {

// Vertex degrees (d_1, ..., d_n) of a labeled tree on n >= 2 vertices:
// each d_i >= 1 and sum d_i = 2n - 2.
using DegreeSequence = std::vector<int>;

// Throws std::invalid_argument when the sequence violates the constraints
// above.
void validate_degree_sequence(const DegreeSequence& degrees);

// Number of labeled trees on {1..n} with exactly these vertex degrees:
// (n-2)! / prod_i (d_i - 1)!. Evaluated as a product of binomial
// coefficients so every intermediate is an exact integer; throws
// std::overflow_error if the count exceeds 64 bits.
std::uint64_t cayley_count(const DegreeSequence& degrees);

// Exhaustive enumeration of all n^(n-2) Prufer sequences, histogrammed by
// the degree sequence of the corresponding tree (degree of v = 1 +
// occurrences of v). Supported for 2 <= n <= 9; throws std::out_of_range
// otherwise.
std::map<DegreeSequence, std::uint64_t> prufer_enumerate(int n);

}  // namespace hsgas
