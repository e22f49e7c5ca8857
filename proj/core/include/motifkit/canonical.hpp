#pragma once

#include <cstddef>
#include <string>

#include "motifkit/motif.hpp"

namespace motifkit {

// Relabeling-invariant byte label: two queries that differ only by
// template-vertex renaming get identical labels, structurally different
// queries (including differing attribute predicates or induced flag) get
// different labels. Minimization over vertex permutations, restricted to
// permutations that respect per-vertex invariants, which keeps motifs up
// to the size cap of 8 cheap.
std::string canonical_form(const MotifQuery& q);

// Number of vertex permutations mapping the constraint structure onto
// itself. Attribute predicates are ignored (structure only).
std::size_t automorphism_count(const MotifQuery& q);

// Short stable hex digest of a canonical label, for file names.
std::string label_digest_hex(const std::string& label);

} // namespace motifkit
