#ifndef TAMESTRAT_TUBE_HPP
#define TAMESTRAT_TUBE_HPP

#include <string>
#include <vector>

#include "tamestrat/series.hpp"

namespace tamestrat {

// The simple regulars of one tube with their tau^- successor ordering:
// labels U_1 .. U_m, subscripts modulo m, tau^-(U_i) = U_{i+1}.
struct Clique {
    int rank = 1;

    explicit Clique(int m) : rank(m) {
        if (m < 1)
            throw Error("OutOfRange", "clique rank must be >= 1");
    }
    int normalize(int i) const { return (i - 1) % rank + 1; } // 1-based index mod m
    int tau_minus(int i) const { return normalize(i) % rank + 1; } // successor
    std::string label(int i) const { return "U" + std::to_string(normalize(i)); }
};

// Canonical epimorphism between Prufer modules of a rank-m tube in normal
// form (source, shift): the map U_source[inf] -> U_target[inf] whose kernel
// is the ray of length `shift` over U_source. Subscripts live modulo m;
// target = source + shift reduced into 1..m. There is no shift-0 symbol.
struct PruferMapSymbol {
    int m = 1;
    int source = 1;   // 1..m
    int64_t shift = 1; // >= 1

    int target() const { return (int)((source - 1 + shift) % m) + 1; }

    friend bool operator==(const PruferMapSymbol& a, const PruferMapSymbol& b) {
        return a.m == b.m && a.source == b.source && a.shift == b.shift;
    }
    friend bool operator!=(const PruferMapSymbol& a, const PruferMapSymbol& b) {
        return !(a == b);
    }
    std::string str() const;
};

// symbol for the map U_i[inf] -> U_j[inf] with raw indices j > i >= 1;
// invariant under shifting both indices by m
PruferMapSymbol make_epsilon(int i, int j, int m);

// composition (f then g); requires target(f) = source(g), shifts add
PruferMapSymbol epsilon_compose(const PruferMapSymbol& f, const PruferMapSymbol& g);

// Delta_{r,s} = 0 if r < s, 1 if r >= s
int delta_winding(int r, int s);

// pi_{r,s} = epsilon_{r, s + Delta_{r,s} m}; pi_{r,r} has shift m and is
// the prime element of the tube's valuation ring
PruferMapSymbol pi(int r, int s, int m);

// pi_{r,s} pi_{s,t} equals pi_{r,t} (Direct) or pi_{r,r} pi_{r,t} (Wound);
// exactly one case holds
enum class PiLaw { Direct, Wound };
PiLaw pi_law_check(int r, int s, int t, int m);

struct RayModule {
    int start = 1;  // 1..m
    int length = 1; // regular length >= 1
    std::string str() const {
        return "U" + std::to_string(start) + "[" + std::to_string(length) + "]";
    }
    friend bool operator==(const RayModule& a, const RayModule& b) {
        return a.start == b.start && a.length == b.length;
    }
};

// regular composition factors of U_start[length]: U_start, U_start+1, ...
// upward along the ray, subscripts modulo the clique rank
std::vector<int> ray_composition_factors(const RayModule& ray, const Clique& clique);

// 0 -> U_i[j-i] -> U_i[n] -> U_j[n-(j-i)] -> 0 for i < j, n > j - i
struct RaySequence {
    RayModule kernel;
    std::string map; // epsilon symbol label
    RayModule image;
};
RaySequence ray_exact_sequence(int i, int j, int n, int m);

// m x m matrices of truncated power series whose strictly lower entries
// have zero constant term: the endomorphism ring of the direct sum of the
// m Prufer modules of a rank-m tube, concretized over k[[x]]
using SeriesMatrix = std::vector<std::vector<TruncatedSeries>>;

struct GammaRing {
    int m = 1;
    int precision = 1;
    FieldPtr k;

    SeriesMatrix zero() const;
    SeriesMatrix identity() const;
    // J = sum of E_{r,r+1} plus E_{m,1}(x); satisfies J^m = x I
    SeriesMatrix cyclic_generator() const;
    SeriesMatrix unit_matrix(int i, int j, const TruncatedSeries& entry) const; // 1-based
    bool member(const SeriesMatrix& a) const;
    SeriesMatrix add(const SeriesMatrix& a, const SeriesMatrix& b) const;
    SeriesMatrix mul(const SeriesMatrix& a, const SeriesMatrix& b) const;
    SeriesMatrix random_member(Rng& rng) const;
    bool equal(const SeriesMatrix& a, const SeriesMatrix& b) const;
    std::string str(const SeriesMatrix& a) const;
};

GammaRing gamma_ring(int m, int precision, FieldPtr k);

// Laurent matrices support the localization witness: J becomes invertible
// with J^{-1} = x^{-1} J^{m-1}
using LaurentMatrix = std::vector<std::vector<LaurentElem>>;

struct GammaWitnessReport {
    int m = 1;
    int precision = 1;
    bool jm_equals_x_identity = false;
    bool j_inverse_two_sided = false; // J J^{-1} = J^{-1} J = 1
    struct Sample {
        int i, j, z;
        bool matches; // E_{i,j}(x^z) == J^{j-i+mz} E_{j,j}
    };
    std::vector<Sample> witness;   // all pairs (i,j), z in {-1,0,1}
    bool all_witnesses_match = false;
};

// PrecisionTooLow unless precision >= m
GammaWitnessReport gamma_localization_witness(int m, int precision, FieldPtr k);

} // namespace tamestrat

#endif
