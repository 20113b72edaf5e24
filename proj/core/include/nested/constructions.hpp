#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nested/group.hpp"
#include "nested/pc.hpp"

namespace nested {

/// Square matrix over F_p, row-major rows.
using Matrix = std::vector<std::vector<std::uint32_t>>;

/// Class-2 p-group on x_1..x_{2 n_m}, z_1..z_m with [x_i, x_{i+n_j}] = z_j
/// for 1 <= i <= n_j, all other generator commutators trivial.
struct Example1Spec {
  std::uint32_t p = 2;
  /// 0 < n_1 < ... < n_m
  std::vector<std::uint32_t> n;
};

/// Levels i = 1..r of sizes m_i with 2 m_i <= m_{i+1}. Level i contributes
/// central generators z_{i,1..m_i}; for k <= m_i < l <= 2 m_i,
/// [x_k, x_l] = prod_j z_{i,j}^{B_{i,j}[k][l - m_i]}.
struct Example4Spec {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> m;
  /// blocks[i][j] is the m_i x m_i block B_{i,j}. Empty selects the
  /// multiplication tables of F_{p^{m_i}}.
  std::vector<std::vector<Matrix>> blocks;
};

PcPresentation example1_pc(const Example1Spec& spec);
GroupTable example1(const Example1Spec& spec, std::size_t order_cap = kDefaultOrderCap);

/// C_{p^{n+1}} x| C_{p^n} with x^y = x^{1+p}; p odd.
GroupTable example3(std::uint32_t p, std::uint32_t n, std::size_t order_cap = kDefaultOrderCap);

PcPresentation example4_pc(const Example4Spec& spec);
GroupTable example4(const Example4Spec& spec, std::size_t order_cap = kDefaultOrderCap);

/// B_j[k][l] = coefficient of e_j in e_k e_l over F_{p^m} (polynomial basis
/// for the lexicographically first monic irreducible of degree m).
std::vector<Matrix> field_multiplication_blocks(std::uint32_t p, std::uint32_t m);

/// A nonzero singular member of span(blocks), or an empty matrix.
Matrix singular_span_member(const std::vector<Matrix>& blocks, std::uint32_t p);

GroupTable cyclic(std::size_t n);
/// Direct product of cyclic groups of the given orders.
GroupTable abelian(const std::vector<std::size_t>& type, std::size_t order_cap = kDefaultOrderCap);
/// Dihedral group of the given (even) order.
GroupTable dihedral(std::size_t order);
/// Generalized quaternion group of order 2^k, k >= 3.
GroupTable quaternion(std::size_t order);
/// Semidihedral group of order 2^k, k >= 4.
GroupTable semidihedral(std::size_t order);

enum class ExtraspecialVariant { Plus, Minus };
/// Extraspecial group of order p^{1+2n}. Plus: exponent p (p odd) or central
/// product of dihedral groups (p = 2). Minus: exponent p^2, or containing Q_8.
PcPresentation extraspecial_pc(std::uint32_t p, std::uint32_t n, ExtraspecialVariant v);
GroupTable extraspecial(std::uint32_t p, std::uint32_t n, ExtraspecialVariant v,
                        std::size_t order_cap = kDefaultOrderCap);

/// Upper unitriangular 3x3 matrices over F_{p^m}; order p^{3m}.
PcPresentation heisenberg_pc(std::uint32_t p, std::uint32_t m);
GroupTable heisenberg(std::uint32_t p, std::uint32_t m, std::size_t order_cap = kDefaultOrderCap);

/// SL(2, 3), from its 24 matrices.
GroupTable sl_2_3();

/// (C_q x C_r) x| C_p, the complement acting by the smallest units of order p.
GroupTable frobenius_pqr(std::uint32_t p, std::uint32_t q, std::uint32_t r);

}  // namespace nested
