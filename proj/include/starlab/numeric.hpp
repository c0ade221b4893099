#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace starlab::numeric {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Which involution A -> A* to use on M_n(C).
enum class Involution { Transpose, ConjugateTranspose };

const char* to_string(Involution mode) noexcept;
Involution involution_from_name(std::string_view name);  ///< "transpose" | "conjugate-transpose"

Matrix adjoint(const Matrix& a, Involution mode);

/// Singular-value rank with the threshold tol * n * sigma_1 plus a floating-point noise
/// floor. Throws IllConditioned when a singular value lies within 10x of the threshold.
struct RankDecision {
  std::size_t rank = 0;
  double threshold = 0.0;
  std::vector<double> singular_values;
};
RankDecision decide_rank(const Matrix& a, double tol, double noise_floor = 0.0);

/// Smallest k >= 0 with rank(A^k) = rank(A^(k+1)).
std::size_t matrix_index(const Matrix& a, double tol = 1e-8);

struct DrazinResult {
  Matrix inverse;      ///< B
  std::size_t index = 0;
  std::size_t rank = 0;  ///< rank of A^k
  Matrix core_basis;     ///< orthonormal basis of range(A^k), n x rank
  Matrix nil_basis;      ///< orthonormal basis of ker(A^k), n x (n - rank)
  double commute_residual = 0.0;    ///< |AB - BA| / max(1, |A||B|)
  double reflexive_residual = 0.0;  ///< |BAB - B| / max(1, |A||B|^2)
  double nilpotent_residual = 0.0;  ///< |(A - A^2 B)^n| / max(1, |A - A^2 B|)^n
};

/// Drazin inverse from the core-nilpotent split of A^k.
DrazinResult drazin_inverse(const Matrix& a, double tol = 1e-8);

enum class Verdict { True, False, IllConditioned };
const char* to_string(Verdict v) noexcept;

struct SpsrDiagnostics {
  Verdict verdict = Verdict::IllConditioned;
  bool self_adjoint_test = false;  ///< |AB - (AB)*| <= tol * max(1, |AB|)
  bool cross_gram_test = false;    ///< max |e_i* e_j| over core/nil pairs <= tol
  double self_adjoint_residual = 0.0;
  double cross_gram = 0.0;
  DrazinResult drazin;
  std::string note;  ///< reason for IllConditioned
};

/// A is strongly pi-*-regular in M_n(C) iff (AB)* = AB for its Drazin inverse B. Never throws
/// IllConditioned; ambiguity is reported as Verdict::IllConditioned instead.
SpsrDiagnostics is_spsr_matrix(const Matrix& a, Involution mode = Involution::Transpose, double tol = 1e-8);

/// One complex entry: "1", "-2.5", "3i", "-i", "1+2i", "1.5e-3-4i".
Complex parse_complex(std::string_view text);
/// Rows on lines, entries separated by commas. Blank lines and lines starting with '#' are skipped.
Matrix parse_matrix_csv(std::string_view text);
/// [[...], ...] with entries as numbers, complex strings, or [re, im] pairs.
Matrix parse_matrix_json(std::string_view text);
/// JSON if the first non-blank character is '[', CSV otherwise.
Matrix parse_matrix(std::string_view text);
Matrix read_matrix_file(const std::string& path);

}  // namespace starlab::numeric
