#pragma once

#include <vector>

#include "crr/types.hpp"

namespace crr {

enum class RootLength { Short, Long };
enum class CrystalRootKind { AllRoots, ShortRootsOnly };

// Static data of one affine type: the finite Cartan matrix left after
// deleting node 0, its symmetrizer, and the affine layer on top of it.
struct TypeConfig {
    AffineType type;
    std::vector<std::vector<int>> cartan;  // a[i][j] = <alpha_j, alpha_i^vee>
    std::vector<int> symmetrizer;          // d_i with diag(d) * A symmetric
    std::vector<int> delta_coeffs;         // null root over (alpha_0 .. alpha_n)
    AffineType dual;                       // Langlands dual
    CrystalRootKind crystal_root_kind;
    // Real long roots repeat every long_spacing * delta in the twisted types
    // (3 for D4_3, 2 for E6_2); 1 means the untwisted pattern.
    int long_spacing;

    int rank() const { return static_cast<int>(cartan.size()); }
    int ht_delta() const { return ht(delta_coeffs); }
};

const TypeConfig& affine_config(AffineType t);

struct ClassifiedRoot {
    Coeffs coeffs;
    RootLength length;
};

// All positive roots of the finite Cartan matrix, generated by closing the
// simple roots under simple reflections. Lengths come from the symmetrized
// norm; a system with a single root length classifies everything as Long.
std::vector<ClassifiedRoot> finite_positive_roots(
    const std::vector<std::vector<int>>& cartan,
    const std::vector<int>& symmetrizer);

struct CrystalRootData {
    std::vector<Coeffs> rplus;  // roots coloring the crystal
    std::vector<int> sigma;     // 1-based indices of participating simple roots
    Coeffs theta;               // the ht-maximal element of rplus
};

// Root data feeding the crystal: every positive root for AllRoots types, the
// short ones only for ShortRootsOnly types.
CrystalRootData crystal_root_data(const TypeConfig& config);

struct AffineRootHeight {
    long long height;  // ht_s of the root
    int mult;          // root multiplicity
    bool imaginary;
};

// Heights of every affine positive root of dual_type with ht_s <= cutoff,
// sorted ascending. s has one entry per affine node (node 0 first), all >= 1.
// Real roots follow the per-family delta spacing, imaginary roots r*delta the
// divisibility multiplicity pattern of the type.
std::vector<AffineRootHeight> affine_positive_root_heights(
    const TypeConfig& dual_config, const std::vector<int>& s, long long cutoff);

}  // namespace crr
