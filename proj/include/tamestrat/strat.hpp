#ifndef TAMESTRAT_STRAT_HPP
#define TAMESTRAT_STRAT_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tamestrat/quiver.hpp"
#include "tamestrat/ring_descriptor.hpp"

namespace tamestrat {

// Iterated-recollement tree. Every inner edge names the rewrite rule that
// produced it and the mathematical fact it leans on; every leaf carries its
// entry in the derived-simple registry.
struct TreeNode;
using TreePtr = std::shared_ptr<const TreeNode>;

enum class NodeStatus { Leaf, Expanded, Normalized };

struct TreeNode {
    RingPtr ring;
    NodeStatus status = NodeStatus::Leaf;
    std::string rule;        // Expanded / Normalized
    std::string citation;    // fact the rule leans on
    std::string leaf_reason; // registry key for leaves
    TreePtr left;            // Expanded: left child; Normalized: only child
    TreePtr right;           // Expanded: right child
};

// registry of derived-simple leaf classes; key -> fact
const std::map<std::string, std::string>& derived_simple_registry();

// --- individual rewrite rules (usable on their own) ---

// the recollement of the tilting endomorphism ring: left the adele ring
// over the full cliques of the selection, right the tame hereditary
// algebra itself. EmptyU on an empty selection. With no full clique the
// left term is the zero ring (degenerate branch).
std::pair<RingPtr, RingPtr> rule_tilting(const RingDescriptor& node, bool alg_closed);

// triangular ring: first diagonal block | rest; SingleBlock for one block
std::pair<RingPtr, RingPtr> rule_triangular(const RingDescriptor& node);

// Matrix(n, inner) and singleton products strip to the inner ring
RingPtr rule_morita_normalize(const RingDescriptor& node);

// Gamma(m) rewrites to the lower triangular ring with corner k[[x]] and
// m-1 copies of k (Gamma(1) directly to k[[x]])
RingPtr rule_gamma(const RingDescriptor& node);

// tame hereditary path algebra rewrites to an upper triangular ring with
// r diagonal copies of k
RingPtr rule_hereditary(const RingDescriptor& node);

// --- the engine ---

// deterministic full expansion: fixed rule priority, leftmost-first
TreePtr expand(RingPtr ring, bool alg_closed = true);

std::vector<TreePtr> leaves(const TreePtr& tree);

struct StratReport {
    std::string schema = "tamestrat/1";
    std::string type;
    int r = 0;
    CliqueSelection selection;
    char route = 'A';
    int length = 0;
    std::map<std::string, int> factors; // factor key -> multiplicity
    TreePtr tree;
    std::vector<std::string> citations;
    bool alg_closed = true;
};

// route A: the tilting recollement, then both sides to their field factors;
// length r + s with factors {k: r, k((x)): s}
StratReport stratify_A(const AffineQuiver& q, const CliqueSelection& selection);

// route B: the triangular presentation of the endomorphism ring; length
// r + s - 1 with factors {k: r-2, k[[x]]: s, dedekind: 1}
StratReport stratify_B(const AffineQuiver& q, const CliqueSelection& selection);

// re-checks a report against the closed formulas, the clique identity
// sum(c - 1) = r - 2 and the leaf registry; returns failed checks
std::vector<std::string> verify_report(const StratReport& rep);

// selections must consume available tube ranks; homogeneous cliques (rank
// 1) are unlimited. OutOfRange when a requested rank has no tube.
void validate_selection(const AffineQuiver& q, const CliqueSelection& selection);

std::string report_to_json_text(const StratReport& rep);
StratReport report_from_json_text(const std::string& text);
std::string report_to_text(const StratReport& rep);

// every nonempty subset of the non-homogeneous tubes, each augmented with
// 0..max_homogeneous extra homogeneous cliques
std::vector<CliqueSelection> full_clique_selections(const AffineQuiver& q,
                                                    int max_homogeneous = 2);

} // namespace tamestrat

#endif
