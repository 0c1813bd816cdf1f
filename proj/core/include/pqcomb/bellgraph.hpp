#pragma once

#include "pqcomb/deformation.hpp"
#include "pqcomb/report.hpp"
#include "pqcomb/scalar.hpp"

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pqcomb {

// Simple graph on vertices 1..n. Edges are stored as (min, max) pairs.
class Graph {
public:
    // Throws DomainViolation for self-loops or endpoints outside 1..n.
    Graph(long n, const std::vector<std::pair<long, long>>& edges);

    long vertex_count() const { return n_; }
    const std::set<std::pair<long, long>>& edges() const { return edges_; }
    bool adjacent(long a, long b) const;

private:
    long n_;
    std::set<std::pair<long, long>> edges_;
};

// {"n": int, "edges": [[i, k], ...]}. Throws ParseError for malformed input
// and DomainViolation for edges the constructor rejects.
Graph parse_graph_json(std::string_view text);

// Complement of the path 1-2-...-n: {i, k} is an edge iff |i - k| >= 2.
Graph dual_path_graph(long n);

// Blocks hold ascending vertex labels and are ordered by their minimum.
struct IndependentPartition {
    std::vector<std::vector<long>> blocks;
};

bool operator==(const IndependentPartition& a, const IndependentPartition& b);

// Calls `visit` for every partition of 1..n into exactly k independent
// blocks, in lexicographic order of restricted-growth strings.
void for_each_independent_partition(const Graph& g, long k, const std::function<void(const IndependentPartition&)>& visit);
std::vector<IndependentPartition> independent_partitions(const Graph& g, long k);

// sum over blocks of (index - 1) * |block|, with 1-based block indices.
long weight_exponent(const IndependentPartition& p);

// (eps2/eps1)^{weight_exponent(p)}.
Scalar partition_weight(const Deformation& d, const IndependentPartition& p);

// Sum of partition weights over independent k-block partitions; 0 for k = 0.
Scalar graph_stirling_second(const Deformation& d, const Graph& g, long k);
Scalar graph_bell(const Deformation& d, const Graph& g);

// The same sums with the weight base eps2/eps1 replaced by `ratio`. At
// ratio 1 the Bell sum counts independent partitions.
Scalar graph_stirling_second_at_ratio(const Scalar& ratio, const Graph& g, long k);
Scalar graph_bell_at_ratio(const Scalar& ratio, const Graph& g);

// Closed form for the dual path graph, with E = C(n,2) - k(n-k):
//   CERTIFIED: (eps2/eps1)^E eps1^{-(n-k)(2k-n)} [k over n-k]
//   DISPLAYED: eps2^E / eps1^{E+k-1} [k over n-k]
// Requires n >= 1 and 0 <= k <= n.
Scalar dual_path_closed_form(const Deformation& d, long n, long k, ClosedForm form = ClosedForm::CERTIFIED);

// Dual-path theorem over n <= 9 and the five-vertex worked example.
std::vector<CheckReport> bellgraph_audit(const Deformation& d);

}  // namespace pqcomb
