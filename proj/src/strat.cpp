#include "tamestrat/strat.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tamestrat {

namespace cite {
const char* tilting =
    "tilting recollement: D(End T_U) glues D(adele ring of U) and D(R)";
const char* tilting_degenerate =
    "no full clique: the localized side vanishes and the recollement degenerates";
const char* tilting_triangular =
    "End T_U is upper triangular over R_U and End(R_U/R); R_U is upper triangular "
    "over M_2(Dedekind) and a product of upper triangular corner rings; End(R_U/R) "
    "is Morita equivalent to the product of the Gamma rings of the chosen cliques";
const char* adele_finite = "a restricted product over finitely many places is the plain product";
const char* triangular = "a triangular matrix ring glues the derived categories of its diagonal";
const char* morita = "Morita equivalent rings have equivalent derived categories";
const char* product_split = "a product ring splits off each factor as a trivial recollement";
const char* gamma =
    "Gamma(m) is derived equivalent to the lower triangular m x m corner ring with "
    "k[[x]] in the corner and k elsewhere on the diagonal";
const char* hereditary =
    "an acyclic path algebra is triangular over its vertex fields: r simple factors k";
} // namespace cite

const std::map<std::string, std::string>& derived_simple_registry() {
    static const std::map<std::string, std::string> registry = {
        {"k", "fields are derived simple"},
        {"field-ext", "fields are derived simple"},
        {"k((x))", "fields are derived simple"},
        {"k(x)", "fields are derived simple"},
        {"k[[x]]", "k[[x]] is a local Dedekind domain; Dedekind domains are derived simple"},
        {"dedekind", "Dedekind domains are derived simple"},
        {"division", "division rings are derived simple"},
    };
    return registry;
}

// ------------------------------------------------------------------ rules

std::pair<RingPtr, RingPtr> rule_tilting(const RingDescriptor& node, bool alg_closed) {
    if (node.kind != RingKind::TiltingEnd)
        throw Error("OutOfRange", "rule_tilting applies to tilting endomorphism nodes");
    if (node.selection.s() == 0 && node.selection.partial_simples == 0)
        throw Error("EmptyU", "the localizing set must be nonempty");
    RingPtr right = RingDescriptor::tame_hereditary(node.tag);
    if (node.selection.s() == 0)
        return {RingDescriptor::zero_ring(), right};
    std::vector<RingPtr> comps;
    for (int rank : node.selection.full_clique_ranks) {
        if (alg_closed)
            comps.push_back(RingDescriptor::laurent_series());
        else
            comps.push_back(RingDescriptor::division_ring_symbol(
                "clique rank " + std::to_string(rank)));
    }
    return {RingDescriptor::adele(std::move(comps)), right};
}

std::pair<RingPtr, RingPtr> rule_triangular(const RingDescriptor& node) {
    if (node.kind != RingKind::UpperTriangular && node.kind != RingKind::LowerTriangular)
        throw Error("OutOfRange", "rule_triangular applies to triangular nodes");
    if (node.parts.size() < 2)
        throw Error("SingleBlock", "one diagonal block is already its own ring");
    RingPtr first = node.parts[0];
    RingPtr rest;
    if (node.parts.size() == 2) {
        rest = node.parts[1];
    } else {
        std::vector<RingPtr> tail(node.parts.begin() + 1, node.parts.end());
        rest = node.kind == RingKind::UpperTriangular
                   ? RingDescriptor::upper_triangular(std::move(tail))
                   : RingDescriptor::lower_triangular(std::move(tail));
    }
    return {first, rest};
}

RingPtr rule_morita_normalize(const RingDescriptor& node) {
    if (node.kind == RingKind::Matrix) return node.parts[0];
    if (node.kind == RingKind::Product && node.parts.size() == 1) return node.parts[0];
    throw Error("OutOfRange", "rule_morita_normalize strips matrix wrappers and "
                              "singleton products");
}

RingPtr rule_gamma(const RingDescriptor& node) {
    if (node.kind != RingKind::Gamma)
        throw Error("OutOfRange", "rule_gamma applies to Gamma nodes");
    if (node.n == 1) return RingDescriptor::power_series();
    std::vector<RingPtr> diag;
    diag.push_back(RingDescriptor::power_series());
    for (int i = 1; i < node.n; ++i) diag.push_back(RingDescriptor::base_field());
    return RingDescriptor::lower_triangular(std::move(diag));
}

RingPtr rule_hereditary(const RingDescriptor& node) {
    if (node.kind != RingKind::TameHereditary)
        throw Error("OutOfRange", "rule_hereditary applies to tame hereditary nodes");
    AffineQuiver q = AffineQuiver::from_name(node.tag);
    if (q.r == 1) return RingDescriptor::base_field();
    std::vector<RingPtr> diag;
    for (int i = 0; i < q.r; ++i) diag.push_back(RingDescriptor::base_field());
    return RingDescriptor::upper_triangular(std::move(diag));
}

// ----------------------------------------------------------------- engine

namespace {

TreePtr make_leaf(RingPtr ring) {
    auto& registry = derived_simple_registry();
    auto it = registry.find(ring->factor_key());
    if (it == registry.end())
        throw Error("OutOfRange",
                    "ring " + ring->str() + " is not in the derived-simple registry");
    auto node = std::make_shared<TreeNode>();
    node->ring = std::move(ring);
    node->status = NodeStatus::Leaf;
    node->leaf_reason = it->second;
    return node;
}

TreePtr make_normalized(RingPtr ring, std::string rule, std::string citation, TreePtr child) {
    auto node = std::make_shared<TreeNode>();
    node->ring = std::move(ring);
    node->status = NodeStatus::Normalized;
    node->rule = std::move(rule);
    node->citation = std::move(citation);
    node->left = std::move(child);
    return node;
}

TreePtr make_expanded(RingPtr ring, std::string rule, std::string citation, TreePtr left,
                      TreePtr right) {
    auto node = std::make_shared<TreeNode>();
    node->ring = std::move(ring);
    node->status = NodeStatus::Expanded;
    node->rule = std::move(rule);
    node->citation = std::move(citation);
    node->left = std::move(left);
    node->right = std::move(right);
    return node;
}

} // namespace

TreePtr expand(RingPtr ring, bool alg_closed) {
    switch (ring->kind) {
    case RingKind::BaseField:
    case RingKind::ExtField:
    case RingKind::PowerSeries:
    case RingKind::LaurentSeries:
    case RingKind::Dedekind:
    case RingKind::FractionField:
    case RingKind::DivisionRingSymbol:
        return make_leaf(ring);
    case RingKind::TiltingEnd: {
        auto [left, right] = rule_tilting(*ring, alg_closed);
        if (left->kind == RingKind::ZeroRing)
            return make_normalized(ring, "tilting_degenerate", cite::tilting_degenerate,
                                   expand(right, alg_closed));
        return make_expanded(ring, "tilting", cite::tilting, expand(left, alg_closed),
                             expand(right, alg_closed));
    }
    case RingKind::Adele: {
        if (ring->parts.empty())
            throw Error("EmptyU", "adele descriptor over the empty index set");
        RingPtr prod = ring->parts.size() == 1
                           ? ring->parts[0]
                           : RingDescriptor::product(ring->parts);
        return make_normalized(ring, "adele_finite_product", cite::adele_finite,
                               expand(prod, alg_closed));
    }
    case RingKind::TameHereditary:
        return make_normalized(ring, "hereditary_triangular", cite::hereditary,
                               expand(rule_hereditary(*ring), alg_closed));
    case RingKind::Gamma:
        return make_normalized(ring, "gamma_corner", cite::gamma,
                               expand(rule_gamma(*ring), alg_closed));
    case RingKind::Matrix:
        return make_normalized(ring, "morita", cite::morita,
                               expand(rule_morita_normalize(*ring), alg_closed));
    case RingKind::UpperTriangular:
    case RingKind::LowerTriangular: {
        if (ring->parts.size() == 1)
            return make_normalized(ring, "triangular_singleton", cite::triangular,
                                   expand(ring->parts[0], alg_closed));
        auto [first, rest] = rule_triangular(*ring);
        return make_expanded(ring, "triangular", cite::triangular,
                             expand(first, alg_closed), expand(rest, alg_closed));
    }
    case RingKind::Product: {
        if (ring->parts.size() == 1)
            return make_normalized(ring, "morita", cite::morita,
                                   expand(rule_morita_normalize(*ring), alg_closed));
        RingPtr first = ring->parts[0];
        std::vector<RingPtr> tail(ring->parts.begin() + 1, ring->parts.end());
        RingPtr rest = tail.size() == 1 ? tail[0] : RingDescriptor::product(std::move(tail));
        return make_expanded(ring, "product_split", cite::product_split,
                             expand(first, alg_closed), expand(rest, alg_closed));
    }
    case RingKind::ZeroRing:
        throw Error("OutOfRange", "the zero ring has an empty derived category; "
                                  "it never enters a tree");
    }
    throw Error("OutOfRange", "unhandled ring kind");
}

std::vector<TreePtr> leaves(const TreePtr& tree) {
    std::vector<TreePtr> out;
    if (!tree) return out;
    if (tree->status == NodeStatus::Leaf) {
        out.push_back(tree);
        return out;
    }
    auto l = leaves(tree->left);
    out.insert(out.end(), l.begin(), l.end());
    if (tree->status == NodeStatus::Expanded) {
        auto r = leaves(tree->right);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

// ----------------------------------------------------------- stratify A/B

void validate_selection(const AffineQuiver& q, const CliqueSelection& selection) {
    if (selection.partial_simples != 0)
        throw Error("PartialClique",
                    "stratification routes need full cliques only");
    if (selection.s() == 0)
        throw Error("EmptyU", "select at least one clique");
    std::vector<int> avail = tube_ranks(q);
    for (int rank : selection.full_clique_ranks) {
        if (rank == 1) continue; // homogeneous; unlimited supply
        auto it = std::find(avail.begin(), avail.end(), rank);
        if (it == avail.end())
            throw Error("OutOfRange",
                        "no unused tube of rank " + std::to_string(rank) + " in " + q.name);
        avail.erase(it);
    }
}

namespace {

void finish_report(StratReport& rep) {
    auto ls = leaves(rep.tree);
    rep.length = (int)ls.size();
    rep.factors.clear();
    std::set<std::string> cites;
    for (auto& l : ls) rep.factors[l->ring->factor_key()] += 1;
    std::function<void(const TreePtr&)> collect = [&](const TreePtr& t) {
        if (!t) return;
        if (!t->citation.empty()) cites.insert(t->citation);
        if (t->status == NodeStatus::Leaf) cites.insert(t->leaf_reason);
        collect(t->left);
        collect(t->right);
    };
    collect(rep.tree);
    rep.citations.assign(cites.begin(), cites.end());
}

CliqueSelection canonical(CliqueSelection sel) {
    std::sort(sel.full_clique_ranks.rbegin(), sel.full_clique_ranks.rend());
    return sel;
}

} // namespace

StratReport stratify_A(const AffineQuiver& q, const CliqueSelection& selection_in) {
    CliqueSelection selection = canonical(selection_in);
    validate_selection(q, selection);
    StratReport rep;
    rep.type = q.name;
    rep.r = q.r;
    rep.selection = selection;
    rep.route = 'A';
    rep.tree = expand(RingDescriptor::tilting_end(q.name, selection), true);
    finish_report(rep);
    return rep;
}

StratReport stratify_B(const AffineQuiver& q, const CliqueSelection& selection_in) {
    CliqueSelection selection = canonical(selection_in);
    validate_selection(q, selection);

    // unchosen non-homogeneous tubes contribute the corner rings
    // T_{c-1}(k); chosen cliques contribute their Gamma rings
    std::vector<int> avail = tube_ranks(q);
    for (int rank : selection.full_clique_ranks) {
        if (rank == 1) continue;
        avail.erase(std::find(avail.begin(), avail.end(), rank));
    }

    RingPtr two_simple_core = RingDescriptor::matrix(
        2, RingDescriptor::dedekind({}, "canonical complement choice"));
    std::vector<RingPtr> corner_rings;
    for (int c : avail) {
        if (c - 1 < 1) continue; // rank-1 tubes leave nothing behind
        if (c - 1 == 1)
            corner_rings.push_back(RingDescriptor::base_field());
        else {
            std::vector<RingPtr> diag;
            for (int i = 0; i + 1 < c; ++i) diag.push_back(RingDescriptor::base_field());
            corner_rings.push_back(RingDescriptor::upper_triangular(std::move(diag)));
        }
    }
    RingPtr localized_side =
        corner_rings.empty()
            ? two_simple_core
            : RingDescriptor::upper_triangular(
                  {two_simple_core, corner_rings.size() == 1
                                        ? corner_rings[0]
                                        : RingDescriptor::product(corner_rings)});

    std::vector<RingPtr> gammas;
    for (int rank : selection.full_clique_ranks)
        gammas.push_back(RingDescriptor::gamma(rank));
    RingPtr quotient_side =
        gammas.size() == 1 ? gammas[0] : RingDescriptor::product(std::move(gammas));

    RingPtr root_ring = RingDescriptor::tilting_end(q.name, selection);
    RingPtr presented =
        RingDescriptor::upper_triangular({localized_side, quotient_side});

    StratReport rep;
    rep.type = q.name;
    rep.r = q.r;
    rep.selection = selection;
    rep.route = 'B';
    rep.tree = make_normalized(root_ring, "tilting_triangular", cite::tilting_triangular,
                               expand(presented, true));
    finish_report(rep);
    return rep;
}

std::vector<std::string> verify_report(const StratReport& rep) {
    std::vector<std::string> failures;
    auto ls = leaves(rep.tree);
    if ((int)ls.size() != rep.length)
        failures.push_back("length field differs from the leaf count");

    std::map<std::string, int> counted;
    for (auto& l : ls) counted[l->ring->factor_key()] += 1;
    if (counted != rep.factors)
        failures.push_back("factor multiset differs from the leaves");

    AffineQuiver q = AffineQuiver::from_name(rep.type);
    int s = rep.selection.s();
    std::map<std::string, int> expected;
    if (rep.route == 'A') {
        expected["k"] = q.r;
        if (s > 0) expected["k((x))"] = s;
        if (rep.length != q.r + s)
            failures.push_back("route A length differs from r + s");
    } else {
        if (q.r > 2) expected["k"] = q.r - 2;
        if (s > 0) expected["k[[x]]"] = s;
        expected["dedekind"] = 1;
        if (rep.length != q.r + s - 1)
            failures.push_back("route B length differs from r + s - 1");
    }
    if (counted != expected)
        failures.push_back("factor multiset differs from the closed formula");

    // the clique identity: sum over tubes of (rank - 1) = r - 2
    int64_t sum = 0;
    for (int rank : tube_ranks(q)) sum += rank - 1;
    if (sum != q.r - 2)
        failures.push_back("tube table violates sum(c - 1) = r - 2");

    auto& registry = derived_simple_registry();
    for (auto& l : ls) {
        auto it = registry.find(l->ring->factor_key());
        if (it == registry.end())
            failures.push_back("leaf " + l->ring->str() + " missing from the registry");
        else if (l->leaf_reason != it->second)
            failures.push_back("leaf " + l->ring->str() + " cites the wrong registry entry");
    }
    return failures;
}

std::vector<CliqueSelection> full_clique_selections(const AffineQuiver& q,
                                                    int max_homogeneous) {
    std::vector<int> table = tube_ranks(q);
    std::vector<CliqueSelection> out;
    for (size_t mask = 0; mask < (size_t(1) << table.size()); ++mask) {
        std::vector<int> ranks;
        for (size_t i = 0; i < table.size(); ++i)
            if (mask & (size_t(1) << i)) ranks.push_back(table[i]);
        for (int hom = 0; hom <= max_homogeneous; ++hom) {
            CliqueSelection sel;
            sel.full_clique_ranks = ranks;
            for (int i = 0; i < hom; ++i) sel.full_clique_ranks.push_back(1);
            if (sel.s() == 0) continue;
            std::sort(sel.full_clique_ranks.rbegin(), sel.full_clique_ranks.rend());
            out.push_back(std::move(sel));
        }
    }
    std::sort(out.begin(), out.end(), [](const CliqueSelection& a, const CliqueSelection& b) {
        return a.full_clique_ranks < b.full_clique_ranks;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const CliqueSelection& a, const CliqueSelection& b) {
                              return a.full_clique_ranks == b.full_clique_ranks;
                          }),
              out.end());
    return out;
}

// ------------------------------------------------------------------ JSON

namespace {

using nlohmann::ordered_json;

ordered_json ring_to_json(const RingPtr& r);

ordered_json selection_to_json(const CliqueSelection& sel) {
    ordered_json j;
    j["full_clique_ranks"] = sel.full_clique_ranks;
    j["partial_simples"] = sel.partial_simples;
    return j;
}

ordered_json ring_to_json(const RingPtr& r) {
    ordered_json j;
    static const std::map<RingKind, std::string> names = {
        {RingKind::BaseField, "k"},
        {RingKind::ExtField, "ext-field"},
        {RingKind::PowerSeries, "power-series"},
        {RingKind::LaurentSeries, "laurent-series"},
        {RingKind::Dedekind, "dedekind"},
        {RingKind::FractionField, "fraction-field"},
        {RingKind::Matrix, "matrix"},
        {RingKind::UpperTriangular, "upper-triangular"},
        {RingKind::LowerTriangular, "lower-triangular"},
        {RingKind::Product, "product"},
        {RingKind::Gamma, "gamma"},
        {RingKind::Adele, "adele"},
        {RingKind::TameHereditary, "tame-hereditary"},
        {RingKind::TiltingEnd, "tilting-end"},
        {RingKind::DivisionRingSymbol, "division-ring"},
        {RingKind::ZeroRing, "zero"},
    };
    j["kind"] = names.at(r->kind);
    if (r->n) j["n"] = r->n;
    if (!r->tag.empty()) j["tag"] = r->tag;
    if (!r->delta.empty()) j["delta"] = r->delta;
    if (r->kind == RingKind::TiltingEnd) j["selection"] = selection_to_json(r->selection);
    if (!r->parts.empty()) {
        ordered_json parts = ordered_json::array();
        for (auto& p : r->parts) parts.push_back(ring_to_json(p));
        j["parts"] = std::move(parts);
    }
    j["text"] = r->str();
    return j;
}

RingPtr ring_from_json(const nlohmann::json& j) {
    static const std::map<std::string, RingKind> kinds = {
        {"k", RingKind::BaseField},
        {"ext-field", RingKind::ExtField},
        {"power-series", RingKind::PowerSeries},
        {"laurent-series", RingKind::LaurentSeries},
        {"dedekind", RingKind::Dedekind},
        {"fraction-field", RingKind::FractionField},
        {"matrix", RingKind::Matrix},
        {"upper-triangular", RingKind::UpperTriangular},
        {"lower-triangular", RingKind::LowerTriangular},
        {"product", RingKind::Product},
        {"gamma", RingKind::Gamma},
        {"adele", RingKind::Adele},
        {"tame-hereditary", RingKind::TameHereditary},
        {"tilting-end", RingKind::TiltingEnd},
        {"division-ring", RingKind::DivisionRingSymbol},
        {"zero", RingKind::ZeroRing},
    };
    auto r = std::make_shared<RingDescriptor>();
    r->kind = kinds.at(j.at("kind").get<std::string>());
    r->n = j.value("n", 0);
    r->tag = j.value("tag", std::string{});
    if (j.contains("delta")) r->delta = j.at("delta").get<std::vector<std::string>>();
    if (j.contains("selection")) {
        r->selection.full_clique_ranks =
            j.at("selection").at("full_clique_ranks").get<std::vector<int>>();
        r->selection.partial_simples = j.at("selection").at("partial_simples").get<int>();
    }
    if (j.contains("parts"))
        for (auto& p : j.at("parts")) r->parts.push_back(ring_from_json(p));
    return r;
}

ordered_json tree_to_json(const TreePtr& t) {
    ordered_json j;
    j["ring"] = ring_to_json(t->ring);
    switch (t->status) {
    case NodeStatus::Leaf:
        j["status"] = "leaf";
        j["reason"] = t->leaf_reason;
        break;
    case NodeStatus::Normalized:
        j["status"] = "normalized";
        j["rule"] = t->rule;
        j["citation"] = t->citation;
        j["child"] = tree_to_json(t->left);
        break;
    case NodeStatus::Expanded:
        j["status"] = "expanded";
        j["rule"] = t->rule;
        j["citation"] = t->citation;
        j["left"] = tree_to_json(t->left);
        j["right"] = tree_to_json(t->right);
        break;
    }
    return j;
}

TreePtr tree_from_json(const nlohmann::json& j) {
    auto node = std::make_shared<TreeNode>();
    node->ring = ring_from_json(j.at("ring"));
    std::string status = j.at("status").get<std::string>();
    if (status == "leaf") {
        node->status = NodeStatus::Leaf;
        node->leaf_reason = j.at("reason").get<std::string>();
    } else if (status == "normalized") {
        node->status = NodeStatus::Normalized;
        node->rule = j.at("rule").get<std::string>();
        node->citation = j.at("citation").get<std::string>();
        node->left = tree_from_json(j.at("child"));
    } else {
        node->status = NodeStatus::Expanded;
        node->rule = j.at("rule").get<std::string>();
        node->citation = j.at("citation").get<std::string>();
        node->left = tree_from_json(j.at("left"));
        node->right = tree_from_json(j.at("right"));
    }
    return node;
}

} // namespace

std::string report_to_json_text(const StratReport& rep) {
    ordered_json j;
    j["schema"] = rep.schema;
    j["type"] = rep.type;
    j["r"] = rep.r;
    j["cliques"] = rep.selection.full_clique_ranks;
    j["partial_simples"] = rep.selection.partial_simples;
    j["route"] = std::string(1, rep.route);
    j["length"] = rep.length;
    ordered_json factors;
    for (auto& [key, count] : rep.factors) factors[key] = count;
    j["factors"] = std::move(factors);
    j["alg_closed"] = rep.alg_closed;
    j["tree"] = tree_to_json(rep.tree);
    j["citations"] = rep.citations;
    // symbols tracked but never computed: kept visible so downstream
    // consumers know what the tree does not decide
    j["scope_notes"] = ordered_json::array(
        {"the generic module and its multiplicity over its endomorphism ring are not modeled",
         "connecting bimodules of triangular presentations are placeholders",
         "whether other composition factors can occur is not decided here"});
    return j.dump(2);
}

StratReport report_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    StratReport rep;
    rep.schema = j.at("schema").get<std::string>();
    rep.type = j.at("type").get<std::string>();
    rep.r = j.at("r").get<int>();
    rep.selection.full_clique_ranks = j.at("cliques").get<std::vector<int>>();
    rep.selection.partial_simples = j.at("partial_simples").get<int>();
    rep.route = j.at("route").get<std::string>()[0];
    rep.length = j.at("length").get<int>();
    for (auto& [key, value] : j.at("factors").items())
        rep.factors[key] = value.get<int>();
    rep.alg_closed = j.at("alg_closed").get<bool>();
    rep.tree = tree_from_json(j.at("tree"));
    rep.citations = j.at("citations").get<std::vector<std::string>>();
    return rep;
}

namespace {

void tree_to_text(const TreePtr& t, int depth, std::ostringstream& os) {
    os << std::string((size_t)depth * 2, ' ');
    switch (t->status) {
    case NodeStatus::Leaf:
        os << "leaf " << t->ring->str() << "   [" << t->leaf_reason << "]\n";
        break;
    case NodeStatus::Normalized:
        os << t->ring->str() << "  ~" << t->rule << "\n";
        tree_to_text(t->left, depth + 1, os);
        break;
    case NodeStatus::Expanded:
        os << t->ring->str() << "  |" << t->rule << "\n";
        tree_to_text(t->left, depth + 1, os);
        tree_to_text(t->right, depth + 1, os);
        break;
    }
}

} // namespace

std::string report_to_text(const StratReport& rep) {
    std::ostringstream os;
    os << "type " << rep.type << "  r=" << rep.r << "  route " << rep.route << "  s="
       << rep.selection.s() << "\n";
    os << "length " << rep.length << "  factors:";
    for (auto& [key, count] : rep.factors) os << " " << key << " x" << count;
    os << "\n";
    tree_to_text(rep.tree, 0, os);
    return os.str();
}

} // namespace tamestrat
