#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkage/module.hpp"

namespace linkage {

/// A subquotient H = Z / B of a presented module A, presented on its own
/// generators. `generators` has one column per generator of `module`, giving
/// its representative in the free cover of A.
struct Subquotient {
  ModulePresentation module;
  Matrix generators;
};

/// Homology of C --beta--> A --alpha--> B at A. beta and alpha act on
/// generators: beta is num_gens(A) x num_gens(C), alpha is num_gens(B) x num_gens(A).
Subquotient homology(const ModulePresentation& c, const ModulePresentation& a, const ModulePresentation& b,
                     const Matrix& beta, const Matrix& alpha);
/// Kernel of alpha: A -> B.
Subquotient kernel_of(const ModulePresentation& a, const ModulePresentation& b, const Matrix& alpha);
/// Image of alpha: A -> B, on the images of the generators of A.
ModulePresentation image_of(const ModulePresentation& a, const ModulePresentation& b, const Matrix& alpha);
/// Cokernel of alpha: A -> B.
ModulePresentation cokernel_of(const ModulePresentation& a, const ModulePresentation& b, const Matrix& alpha);

/// Expresses each target column (an element of F) through the generator
/// columns modulo the relation columns and I*F. Returns one coefficient
/// column per target (length = number of generators), or nullopt when some
/// target is not in the span.
std::optional<std::vector<std::vector<Poly>>> lift(const GradedRing& r, const std::vector<int>& twists,
                                                   const Matrix& gens, const std::vector<int>& gen_degrees,
                                                   const Matrix& rels, const std::vector<int>& rel_degrees,
                                                   const Matrix& targets, const std::vector<int>& target_degrees);

/// Hom(F, N) for F free with the given twists: the direct sum of N(a_k).
ModulePresentation hom_free(const std::vector<int>& free_twists, const ModulePresentation& n);
/// Matrix of Hom(d, N): Hom(F, N) -> Hom(F', N) for d: F' -> F.
Matrix hom_free_map(const Matrix& d, std::size_t n_gens);
/// F tensor N for F free: the direct sum of N(-a_k).
ModulePresentation tensor_free(const std::vector<int>& free_twists, const ModulePresentation& n);
/// Matrix of d tensor N: F' tensor N -> F tensor N.
Matrix tensor_free_map(const Matrix& d, std::size_t n_gens);

/// Hom_R(M, N) with generators given as maps: column k lists, for each
/// generator e_i of M, the image f_k(e_i) in the free cover of N (block i).
Subquotient hom(const ModulePresentation& m, const ModulePresentation& n);
ModulePresentation hom_module(const ModulePresentation& m, const ModulePresentation& n);
/// Generator k of a Hom subquotient as a num_gens(N) x num_gens(M) matrix.
Matrix hom_generator_map(const Subquotient& h, std::size_t k, std::size_t m_gens, std::size_t n_gens);
/// M^* = Hom(M, R).
ModulePresentation dual(const ModulePresentation& m);

ModulePresentation tensor(const ModulePresentation& m, const ModulePresentation& n);
ModulePresentation tor(const ModulePresentation& m, const ModulePresentation& n, int i);
ModulePresentation ext(const ModulePresentation& m, const ModulePresentation& n, int i);
/// Hilbert series of Ext^i(M, N) and Tor_i(M, N), computed from cokernels of
/// the complex maps only (no kernel computation). Exact.
HilbertSeries ext_hilbert_series(const ModulePresentation& m, const ModulePresentation& n, int i);
HilbertSeries tor_hilbert_series(const ModulePresentation& m, const ModulePresentation& n, int i);
bool ext_is_zero(const ModulePresentation& m, const ModulePresentation& n, int i);
bool tor_is_zero(const ModulePresentation& m, const ModulePresentation& n, int i);

/// Ext^i_S(M, S) over the ambient polynomial ring, as an S-module.
ModulePresentation ext_to_ambient(const ModulePresentation& m, int i);
/// M viewed as a module over the ambient polynomial ring.
ModulePresentation restrict_to_ambient(const ModulePresentation& m);
/// A module over S annihilated by I, re-presented over R = S/I.
ModulePresentation extend_to_ring(const ModulePresentation& m, const GradedRing& r);

/// Tr M = coker of the dual of the minimal presentation.
ModulePresentation transpose(const ModulePresentation& m);
/// Tr_C M = coker Hom(f, C) for the minimal presentation f of M.
ModulePresentation transpose_wrt(const ModulePresentation& m, const ModulePresentation& c);
/// i-th syzygy in the minimal resolution; syzygy(M, 0) = minimalize(M).
ModulePresentation syzygy(const ModulePresentation& m, int i);
/// lambda M = syzygy(Tr M, 1).
ModulePresentation lambda(const ModulePresentation& m);

struct BidualityDefect {
  ModulePresentation kernel_module;    // Ext^1(Tr_C M, C)
  ModulePresentation cokernel_module;  // Ext^2(Tr_C M, C)
  bool vanishes() const { return kernel_module.is_zero() && cokernel_module.is_zero(); }
};
BidualityDefect biduality_defect(const ModulePresentation& m, const ModulePresentation& c);

struct Pushforward {
  Matrix map_matrix;          // f: M -> C^m on generators of minimalize(M)
  ModulePresentation source;  // minimalize(M)
  ModulePresentation target;  // C^m (twisted copies)
  ModulePresentation cokernel;
  std::size_t m = 0;
  bool injective = false;
  bool ext1_vanishes = false;
};
/// Universal pushforward 0 -> M -> C^m -> N -> 0 built from minimal
/// generators of Hom(M, C). Throws Inapplicable when Ext^1(Tr_C M, C) != 0.
Pushforward universal_pushforward(const ModulePresentation& m, const ModulePresentation& c);

}  // namespace linkage
