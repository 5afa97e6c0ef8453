#ifndef MAPGLUE_COUNTING_HPP
#define MAPGLUE_COUNTING_HPP

#include <vector>

#include "mapglue/bigint.hpp"
#include "mapglue/bijection.hpp"

namespace mapglue {

// n!! with (-1)!! = 0!! = 1. Throws Infeasible for n < -1.
BigInt double_factorial(long n);

// Oriented edges of a q-angulation with f faces: q*f.
long oriented_edges(int q, int f);
// Vertices of a q-angulation with f faces: f/2 + 2 (q = 3), f + 2 (q = 4).
long q_vertices(int q, int f);

// Throws Infeasible unless q in {3, 4}, f >= 1 (even for q = 3) and
// 1 <= m <= f/2 + 1 (q = 3), 1 <= m <= f + 1 (q = 4).
BigInt count_tree_decorated(int q, int f, int m, RootMode mode);

// Spanning trees have f/2 + 1 (q = 3) or f + 1 (q = 4) edges.
BigInt count_spanning(int q, int f, RootMode mode);
// The closed form printed for spanning-tree decorated triangulations rooted
// anywhere; half of count_spanning(3, f, Anywhere).
Rational count_spanning_tri_printed(int f);

// Simple boundary of perimeter 2*m1, tree of m2 edges meeting it at the root
// vertex. Either size may be 0.
BigInt count_boundary_decorated(int q, int f, int m1, int m2);
// Printed triangulation variant, with 2*m2 + 1 in place of m2 + 1.
Rational count_boundary_decorated_printed(int q, int f, int m1, int m2);

// Forests of r vertex-disjoint trees with the given sizes. Unlabeled: rooted
// map, unordered trees. Labeled: tree i of size m_i rooted, tree 1 rooted at
// the map root. Closed forms as printed; Rational when not integral.
Rational count_forest_exact(int q, int f, const std::vector<int>& sizes, bool labeled);
// Labeled: the closed form. Unlabeled: count_forest_from_labeled. Throws
// NonIntegral if the value is not an integer.
BigInt count_forest(int q, int f, const std::vector<int>& sizes, bool labeled);
// Unlabeled count implied by the labeled closed form through double counting
// of (forest, marked oriented edge): unlabeled * prod c_k! * prod 2m_i =
// labeled * qf.
Rational count_forest_from_labeled(int q, int f, const std::vector<int>& sizes);

// Unlabeled spanning forests: sum m_i + r = vertex count.
BigInt count_spanning_forest(int q, int f, const std::vector<int>& sizes);
// Printed spanning-forest closed forms.
Rational count_spanning_forest_printed(int q, int f, const std::vector<int>& sizes);

// Non-crossing circuit decorated bubble-maps, e + m edges, circuit 2m, root
// anywhere. Throws Infeasible for m < 1 or e < 0.
BigInt count_bubble(int e, int m);

// catalan(e) * catalan(e + 1).
BigInt mullin_count(int e);

// labeled * qf == unlabeled * r! * prod 2m_i / prod c_k!, on the closed forms.
bool reroot_check(int q, int f, const std::vector<int>& sizes);

// multinomial((m+1)n; n, ..., n) / binom(m+n, n). Throws NonIntegral.
BigInt catalan_ext(int m, int n);
// sum_i floor(k / p^i), the exponent of p in k!.
long legendre_valuation(long p, long k);
// Every prime p <= (m+1)n has non-negative valuation in C_{m,n}, term by term.
bool verify_integrality(int m, int n);

} // namespace mapglue

#endif // MAPGLUE_COUNTING_HPP
