#ifndef GMET_IO_HPP
#define GMET_IO_HPP

#include <iosfwd>
#include <string>

#include "gmet/canonical.hpp"
#include "gmet/digraph.hpp"
#include "gmet/fq.hpp"
#include "gmet/macwilliams.hpp"
#include "gmet/metric.hpp"

namespace gmet {

// Graph text format: "n m", then m lines "u v". '#' lines are comments.
// Duplicate edges and self-loops are format errors.
Digraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Digraph& g);

// Code text format: "q n k", then k rows of n residues; normalized to RREF on load.
LinearCode read_code(std::istream& in);
void write_code(std::ostream& out, const LinearCode& c);

// Weight table: lines "bitmask weight", bitmask as a binary string of length n,
// least significant (rightmost) character = vertex 0. Partial tables allowed.
WeightTable read_weight_table(std::istream& in);
void write_weight_table(std::ostream& out, const WeightTable& t);

// Reduced form: "m h", m lines "v L level", edge count, edges, then n lines of pi.
ReducedForm read_reduced_form(std::istream& in);
void write_reduced_form(std::ostream& out, const ReducedForm& r);

// Linear map: "q n", then n rows of n residues (row i = image of e_i).
LinearMap read_linear_map(std::istream& in);
void write_linear_map(std::ostream& out, const LinearMap& t);

std::string enumerator_to_json(const WeightEnumerator& w, int q, int n);
WeightEnumerator enumerator_from_json(const std::string& text);

Digraph load_graph(const std::string& path);
LinearCode load_code(const std::string& path);
WeightTable load_weight_table(const std::string& path);
LinearMap load_linear_map(const std::string& path);

std::string support_to_bitstring(std::uint64_t mask, int n);
std::uint64_t bitstring_to_mask(const std::string& s);

}  // namespace gmet

#endif
