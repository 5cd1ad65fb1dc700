#include "tamestrat/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tamestrat/linalg.hpp"

namespace tamestrat {

namespace {

// orient every edge of a tree toward vertex 1
std::vector<std::pair<int, int>> orient_to_root(int r,
                                                const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(r + 1);
    for (auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> parent(r + 1, 0), order;
    std::vector<bool> seen(r + 1, false);
    order.push_back(1);
    seen[1] = true;
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                order.push_back(w);
            }
    }
    std::vector<std::pair<int, int>> arrows;
    for (int v = 2; v <= r; ++v) arrows.push_back({v, parent[v]});
    std::sort(arrows.begin(), arrows.end());
    return arrows;
}

} // namespace

AffineQuiver AffineQuiver::kronecker() {
    AffineQuiver q;
    q.name = "kronecker";
    q.r = 2;
    q.arrows = {{2, 1}, {2, 1}};
    return q;
}

AffineQuiver AffineQuiver::a_tilde(int p, int q_arm) {
    if (p < 1 || q_arm < 1)
        throw Error("NotAffine", "A~(p,q) needs p,q >= 1");
    AffineQuiver q;
    q.name = "A~(" + std::to_string(p) + "," + std::to_string(q_arm) + ")";
    q.r = p + q_arm;
    // clockwise path 1 -> 2 -> ... -> p+1, counterclockwise 1 -> p+2 -> ... -> p+1
    for (int i = 1; i <= p; ++i) q.arrows.push_back({i, i + 1});
    if (q_arm == 1) {
        q.arrows.push_back({1, p + 1});
    } else {
        q.arrows.push_back({1, p + 2});
        for (int i = p + 2; i < p + q_arm; ++i) q.arrows.push_back({i, i + 1});
        q.arrows.push_back({p + q_arm, p + 1});
    }
    return q;
}

AffineQuiver AffineQuiver::d_tilde(int n) {
    if (n < 4)
        throw Error("NotAffine", "D~n needs n >= 4");
    AffineQuiver q;
    q.name = "D~" + std::to_string(n);
    q.r = n + 1;
    // vertices 1,2 fork into spine 3..n-1, vertices n,n+1 fork off the far end
    std::vector<std::pair<int, int>> edges = {{1, 3}, {2, 3}};
    for (int v = 3; v < n - 1; ++v) edges.push_back({v, v + 1});
    edges.push_back({n - 1, n});
    edges.push_back({n - 1, n + 1});
    q.arrows = orient_to_root(q.r, edges);
    return q;
}

AffineQuiver AffineQuiver::e_tilde(int which) {
    AffineQuiver q;
    q.name = "E~" + std::to_string(which);
    std::vector<std::pair<int, int>> edges;
    switch (which) {
    case 6:
        // arms of length 2 from the center 7: (1,2), (3,4), (5,6)
        q.r = 7;
        edges = {{1, 2}, {2, 7}, {3, 4}, {4, 7}, {5, 6}, {6, 7}};
        break;
    case 7:
        // path 1-2-3-4-5-6-7 with 8 attached to the middle vertex 4
        q.r = 8;
        edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {4, 8}};
        break;
    case 8:
        // path 1-2-3-4-5-6-7-8 with 9 attached to vertex 6
        q.r = 9;
        edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {6, 9}};
        break;
    default:
        throw Error("NotAffine", "E~ type must be 6, 7 or 8");
    }
    q.arrows = orient_to_root(q.r, edges);
    return q;
}

AffineQuiver AffineQuiver::from_name(const std::string& text) {
    if (text == "kronecker") return kronecker();
    if (text.rfind("A~(", 0) == 0 && text.back() == ')') {
        auto comma = text.find(',');
        if (comma == std::string::npos)
            throw Error("ParseError", "A~ type needs (p,q)");
        int p = std::stoi(text.substr(3, comma - 3));
        int qq = std::stoi(text.substr(comma + 1, text.size() - comma - 2));
        return a_tilde(p, qq);
    }
    if (text.rfind("D~", 0) == 0) return d_tilde(std::stoi(text.substr(2)));
    if (text.rfind("E~", 0) == 0) return e_tilde(std::stoi(text.substr(2)));
    throw Error("ParseError", "unknown quiver type '" + text + "'");
}

std::vector<AffineQuiver> builtin_affine_types() {
    std::vector<AffineQuiver> out;
    out.push_back(AffineQuiver::kronecker());
    for (int p = 1; p <= 5; ++p)
        for (int qa = p; p + qa <= 6; ++qa) out.push_back(AffineQuiver::a_tilde(p, qa));
    for (int n = 4; n <= 6; ++n) out.push_back(AffineQuiver::d_tilde(n));
    for (int e = 6; e <= 8; ++e) out.push_back(AffineQuiver::e_tilde(e));
    return out;
}

int64_t euler_form(const DimVector& d, const DimVector& e, const AffineQuiver& q) {
    if ((int)d.size() != q.r || (int)e.size() != q.r)
        throw Error("LengthMismatch", "dimension vector length differs from vertex count");
    int64_t sum = 0;
    for (int i = 0; i < q.r; ++i) sum += d[i] * e[i];
    for (auto& [s, t] : q.arrows) sum -= d[s - 1] * e[t - 1];
    return sum;
}

int64_t quadratic_form(const DimVector& d, const AffineQuiver& q) {
    return euler_form(d, d, q);
}

DimVector radical_vector(const AffineQuiver& q) {
    // kernel of the symmetrized Euler matrix C + C^T over Q
    auto f = Field::rationals();
    Matrix s(f, (size_t)q.r, (size_t)q.r);
    for (int i = 0; i < q.r; ++i) s.at(i, i) = f->from_int(2);
    for (auto& [a, b] : q.arrows) {
        s.at(a - 1, b - 1) -= f->one();
        s.at(b - 1, a - 1) -= f->one();
    }
    auto basis = s.nullspace();
    if (basis.size() != 1)
        throw Error("NotAffine", "radical of the symmetrized form is not one-dimensional");
    // clear denominators, divide by gcd, fix sign, demand positivity
    int64_t lcm = 1;
    for (auto& c : basis[0]) lcm = std::lcm(lcm, c.scalar().den());
    std::vector<int64_t> h;
    for (auto& c : basis[0]) {
        Rational v = c.scalar() * Rational(lcm);
        h.push_back(v.num());
    }
    int64_t g = 0;
    for (int64_t v : h) g = std::gcd(g, v < 0 ? -v : v);
    if (g > 1)
        for (auto& v : h) v /= g;
    bool all_neg = std::all_of(h.begin(), h.end(), [](int64_t v) { return v < 0; });
    if (all_neg)
        for (auto& v : h) v = -v;
    for (int64_t v : h)
        if (v <= 0)
            throw Error("NotAffine", "radical vector is not strictly positive");
    return h;
}

int64_t defect(const DimVector& d, const AffineQuiver& q) {
    return euler_form(radical_vector(q), d, q);
}

std::vector<int> tube_ranks(const AffineQuiver& q) {
    if (q.name == "kronecker") return {};
    if (q.name[0] == 'A') {
        auto comma = q.name.find(',');
        int p = std::stoi(q.name.substr(3, comma - 3));
        int qq = std::stoi(q.name.substr(comma + 1, q.name.size() - comma - 2));
        std::vector<int> out = {p, qq};
        std::sort(out.rbegin(), out.rend());
        return out;
    }
    if (q.name[0] == 'D') {
        int n = std::stoi(q.name.substr(2));
        std::vector<int> out = {n - 2, 2, 2};
        std::sort(out.rbegin(), out.rend());
        return out;
    }
    int which = std::stoi(q.name.substr(2));
    if (which == 6) return {3, 3, 2};
    if (which == 7) return {4, 3, 2};
    return {5, 3, 2};
}

DimVector dim_projective(const AffineQuiver& q, int vertex) {
    // path counts out of `vertex`; the orientation is acyclic, so a plain
    // walk over all directed paths terminates
    std::vector<std::vector<int>> out_arrows(q.r + 1);
    for (auto& [s, t] : q.arrows) out_arrows[s].push_back(t);
    std::vector<int64_t> count(q.r + 1, 0);
    struct Walker {
        const std::vector<std::vector<int>>& out;
        std::vector<int64_t>& count;
        void walk(int v) {
            count[v] += 1;
            for (int w : out[v]) walk(w);
        }
    } walker{out_arrows, count};
    walker.walk(vertex);
    DimVector result(q.r, 0);
    for (int w = 1; w <= q.r; ++w) result[w - 1] = count[w];
    return result;
}

DimVector dim_algebra(const AffineQuiver& q) {
    DimVector total(q.r, 0);
    for (int v = 1; v <= q.r; ++v) {
        DimVector p = dim_projective(q, v);
        for (int i = 0; i < q.r; ++i) total[i] += p[i];
    }
    return total;
}

int64_t delta_multiplicity(const DimVector& u, const AffineQuiver& q) {
    bool zero = std::all_of(u.begin(), u.end(), [](int64_t v) { return v == 0; });
    if (zero)
        throw Error("NotRegular", "zero dimension vector is not a simple regular");
    if (defect(u, q) != 0)
        throw Error("NotRegular", "dimension vector has nonzero defect");
    return -euler_form(u, dim_algebra(q), q);
}

int64_t delta_bound(const AffineQuiver& q) {
    DimVector h = radical_vector(q);
    int64_t sum = std::accumulate(h.begin(), h.end(), (int64_t)0);
    return sum * q.r; // every simple has k-dimension 1 over one base field
}

std::vector<std::vector<int64_t>> coxeter_matrix(const AffineQuiver& q) {
    auto f = Field::rationals();
    Matrix c(f, (size_t)q.r, (size_t)q.r);
    for (int i = 0; i < q.r; ++i) c.at(i, i) = f->one();
    for (auto& [s, t] : q.arrows) c.at(s - 1, t - 1) -= f->one();
    // Phi = -C^{-1} C^T; C is unimodular for an acyclic orientation
    Matrix aug = c.hstack(Matrix::identity(f, (size_t)q.r));
    Matrix red = aug.rref();
    Matrix cinv(f, (size_t)q.r, (size_t)q.r);
    for (int i = 0; i < q.r; ++i)
        for (int j = 0; j < q.r; ++j) cinv.at(i, j) = red.at(i, (size_t)(q.r + j));
    Matrix phi = (cinv * c.transpose()).scaled(f->from_int(-1));
    std::vector<std::vector<int64_t>> out((size_t)q.r, std::vector<int64_t>((size_t)q.r, 0));
    for (int i = 0; i < q.r; ++i)
        for (int j = 0; j < q.r; ++j) {
            Rational v = phi.at(i, j).scalar();
            if (!v.is_integer())
                throw Error("NotAffine", "Coxeter matrix is not integral");
            out[i][j] = v.num();
        }
    return out;
}

DimVector apply_matrix(const std::vector<std::vector<int64_t>>& m, const DimVector& v) {
    DimVector out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

SimpleRegularData simple_regular_vectors(const AffineQuiver& q) {
    SimpleRegularData data;
    data.h = radical_vector(q);

    // candidates: regular real roots strictly below h
    std::vector<DimVector> candidates;
    DimVector u(q.r, 0);
    while (true) {
        bool nonzero = std::any_of(u.begin(), u.end(), [](int64_t v) { return v != 0; });
        if (nonzero && quadratic_form(u, q) == 1 && euler_form(data.h, u, q) == 0)
            candidates.push_back(u);
        int pos = 0;
        while (pos < q.r && ++u[pos] > data.h[pos]) u[pos++] = 0;
        if (pos == q.r) break;
    }

    // The candidate set is the union, over exceptional tubes, of the
    // dimension vectors of the regulars of quasi-length < rank. Peel one
    // tube at a time: the candidate of smallest total dimension must be
    // quasi-simple (a longer ray module dominates its own socle, which is
    // also a candidate), its tau-orbit is that tube's clique, and the
    // cyclically consecutive orbit sums are the rest of the tube's family.
    auto phi = coxeter_matrix(q);
    std::set<DimVector> pool(candidates.begin(), candidates.end());
    std::vector<std::vector<DimVector>> orbits;
    auto dim_sum = [](const DimVector& v) {
        return std::accumulate(v.begin(), v.end(), (int64_t)0);
    };
    while (!pool.empty()) {
        DimVector start = *std::min_element(
            pool.begin(), pool.end(),
            [&](const DimVector& a, const DimVector& b) { return dim_sum(a) < dim_sum(b); });
        std::vector<DimVector> orbit;
        DimVector cur = start;
        while (true) {
            if (!pool.count(cur))
                throw Error("NotAffine", "tau does not permute the quasi-simple candidates");
            orbit.push_back(cur);
            cur = apply_matrix(phi, cur);
            if (cur == start) break;
            if (orbit.size() > (size_t)(2 * q.r))
                throw Error("NotAffine", "runaway tau orbit among quasi-simple candidates");
        }
        const size_t m = orbit.size();
        DimVector sum(q.r, 0);
        for (auto& v : orbit)
            for (int i = 0; i < q.r; ++i) sum[i] += v[i];
        if (sum != data.h)
            throw Error("NotAffine", "tau orbit does not sum to the radical vector");
        // remove the whole tube family: sums of j consecutive orbit members
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 1; j < m; ++j) {
                DimVector ray(q.r, 0);
                for (size_t t = 0; t < j; ++t)
                    for (int v = 0; v < q.r; ++v) ray[v] += orbit[(i + t) % m][v];
                if (!pool.erase(ray))
                    throw Error("NotAffine", "tube family member missing from candidates");
            }
        orbits.push_back(std::move(orbit));
    }
    std::vector<int> sizes;
    for (auto& o : orbits) sizes.push_back((int)o.size());
    std::sort(sizes.rbegin(), sizes.rend());
    std::vector<int> expected;
    for (int rank : tube_ranks(q))
        if (rank > 1) expected.push_back(rank);
    if (sizes != expected)
        throw Error("NotAffine", "exceptional orbit ranks disagree with the tube table");
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
    data.exceptional_orbits = std::move(orbits);
    return data;
}

} // namespace tamestrat
