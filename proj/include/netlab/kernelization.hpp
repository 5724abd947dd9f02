#pragma once

#include "netlab/graph.hpp"

#include <cstdint>
#include <vector>

namespace netlab {

struct KernelResult {
    std::uint32_t kernel_size = 0;  ///< c
    double relative_size = 0.0;     ///< c / n of the input
    double exponent = 0.0;          ///< ln(max(c,1)) / ln(n)
    std::vector<Vertex> forced_vertices; ///< vertex-cover rule only, in order taken
    /// Input vertex set with only the surviving edges; deleted vertices stay
    /// as isolated ids so the numbering matches the input.
    Graph residual;
};

/// Exhaustive vertex-cover dominance rule: while some adjacent pair has
/// N[v] ⊆ N[u], take u into the cover and delete it. Candidates v are
/// processed smallest id first; when u is deleted its remaining neighbors
/// are re-queued since their closed neighborhoods shrank. The kernel size
/// is the largest component after dropping isolated vertices.
KernelResult vc_dominance_kernel(const Graph &g);

/// Minimum vertex cover size by exhaustive search; n <= 24.
std::uint32_t minimum_vertex_cover_size(const Graph &g);

/// min-VC(g) == |forced| + min-VC(residual). Requires n <= 18.
bool vc_kernel_soundness_check(const Graph &g);

/// Core peeling at threshold omega: repeatedly delete vertices of degree
/// below omega. The kernel size is the number of surviving vertices.
KernelResult omega_core_kernel(const Graph &g, std::uint32_t omega);

} // namespace netlab
