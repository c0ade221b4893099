#include "starlab/numeric.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "starlab/error.hpp"

namespace starlab::numeric {

const char* to_string(Involution mode) noexcept {
  return mode == Involution::Transpose ? "transpose" : "conjugate-transpose";
}

Involution involution_from_name(std::string_view name) {
  if (name == "transpose") return Involution::Transpose;
  if (name == "conjugate-transpose") return Involution::ConjugateTranspose;
  throw Error(ErrorKind::ValidationError, "unknown matrix involution '" + std::string(name) + "'");
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::IllConditioned: return "ill-conditioned";
  }
  return "?";
}

Matrix adjoint(const Matrix& a, Involution mode) {
  return mode == Involution::Transpose ? Matrix(a.transpose()) : Matrix(a.adjoint());
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kBand = 10.0;

RankDecision decide(const Eigen::VectorXd& sv, std::size_t n, double tol, double noise_floor) {
  RankDecision d;
  d.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double sigma1 = sv.size() ? sv(0) : 0.0;
  d.threshold = tol * static_cast<double>(n) * sigma1 + noise_floor;
  for (double s : d.singular_values) {
    if (s > d.threshold / kBand && s < d.threshold * kBand)
      throw Error(ErrorKind::IllConditioned, "singular value " + std::to_string(s) + " within 10x of rank threshold " +
                                                 std::to_string(d.threshold));
    if (s > d.threshold) ++d.rank;
  }
  return d;
}

/// Rounding noise expected in A^k computed by repeated products.
double power_noise(std::size_t n, std::size_t k, double sigma1) {
  return 64.0 * static_cast<double>((k + 1) * n) * kEps * std::pow(sigma1, static_cast<double>(k));
}

void require_square(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw Error(ErrorKind::MalformedMatrix, "matrix must be square and nonempty");
}

struct IndexData {
  std::size_t index = 0;
  Matrix power;  ///< A^index
  std::size_t rank = 0;
};

IndexData index_data(const Matrix& a, double tol) {
  require_square(a);
  const auto n = static_cast<std::size_t>(a.rows());
  const double sigma1 = Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
  Matrix power = Matrix::Identity(a.rows(), a.cols());
  std::size_t rank = n;
  for (std::size_t k = 0;; ++k) {
    Matrix next = power * a;
    const auto d = decide(Eigen::JacobiSVD<Matrix>(next).singularValues(), n, tol, power_noise(n, k + 1, sigma1));
    if (d.rank == rank || k >= n) return {k, power, rank};
    power = std::move(next);
    rank = d.rank;
  }
}

double fro(const Matrix& m) { return m.size() ? m.norm() : 0.0; }

}  // namespace

RankDecision decide_rank(const Matrix& a, double tol, double noise_floor) {
  return decide(Eigen::JacobiSVD<Matrix>(a).singularValues(), static_cast<std::size_t>(a.rows()), tol, noise_floor);
}

std::size_t matrix_index(const Matrix& a, double tol) { return index_data(a, tol).index; }

DrazinResult drazin_inverse(const Matrix& a, double tol) {
  const auto data = index_data(a, tol);
  const auto n = a.rows();
  const auto r = static_cast<Eigen::Index>(data.rank);
  DrazinResult out;
  out.index = data.index;
  out.rank = data.rank;

  Eigen::JacobiSVD<Matrix> svd(data.power, Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.core_basis = svd.matrixU().leftCols(r);
  out.nil_basis = svd.matrixV().rightCols(n - r);

  if (r == 0) {
    out.inverse = Matrix::Zero(n, n);
  } else {
    Matrix p(n, n);
    p.leftCols(r) = out.core_basis;
    p.rightCols(n - r) = out.nil_basis;
    const Eigen::PartialPivLU<Matrix> lu(p);
    const Matrix p_inv = lu.inverse();
    const Matrix core = (p_inv * a * p).topLeftCorner(r, r);
    const Eigen::FullPivLU<Matrix> core_lu(core);
    if (!core_lu.isInvertible()) throw Error(ErrorKind::IllConditioned, "core block is numerically singular");
    out.inverse = out.core_basis * core_lu.inverse() * p_inv.topRows(r);
  }

  const Matrix& b = out.inverse;
  const double na = fro(a), nb = fro(b);
  out.commute_residual = fro(a * b - b * a) / std::max(1.0, na * nb);
  out.reflexive_residual = fro(b * a * b - b) / std::max(1.0, na * nb * nb);
  const Matrix m = a - a * a * b;
  Matrix mp = Matrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) mp = mp * m;
  out.nilpotent_residual = fro(mp) / std::pow(std::max(1.0, fro(m)), static_cast<double>(n));
  return out;
}

SpsrDiagnostics is_spsr_matrix(const Matrix& a, Involution mode, double tol) {
  require_square(a);
  SpsrDiagnostics out;
  try {
    out.drazin = drazin_inverse(a, tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IllConditioned) throw;
    out.note = e.what();
    return out;
  }
  const Matrix ab = a * out.drazin.inverse;
  out.self_adjoint_residual = fro(ab - adjoint(ab, mode)) / std::max(1.0, fro(ab));
  const auto& e1 = out.drazin.core_basis;
  const auto& e2 = out.drazin.nil_basis;
  out.cross_gram = (e1.cols() && e2.cols()) ? (adjoint(e1, mode) * e2).cwiseAbs().maxCoeff() : 0.0;
  out.self_adjoint_test = out.self_adjoint_residual <= tol;
  out.cross_gram_test = out.cross_gram <= tol;

  auto ambiguous = [&](double x) { return x > tol / kBand && x < tol * kBand; };
  if (ambiguous(out.self_adjoint_residual) || ambiguous(out.cross_gram)) {
    out.note = "a verdict residual lies within 10x of the tolerance";
    return out;
  }
  out.verdict = out.self_adjoint_test ? Verdict::True : Verdict::False;
  if (out.self_adjoint_test != out.cross_gram_test) out.note = "self-adjoint and cross-Gram tests disagree";
  return out;
}

// ---- parsing ------------------------------------------------------------------------------

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedMatrix, what); }

double parse_real(const std::string& text, const std::string& whole) {
  if (text.empty()) malformed("empty number in '" + whole + "'");
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(x)) malformed("bad number '" + whole + "'");
  return x;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) malformed("empty matrix entry");
  if (t.back() != 'i') return {parse_real(t, t), 0.0};

  const std::string body = t.substr(0, t.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;)
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  const std::string im = split == std::string::npos ? body : body.substr(split);
  double imag;
  if (im.empty() || im == "+") imag = 1.0;
  else if (im == "-") imag = -1.0;
  else imag = parse_real(im, t);
  return {re.empty() ? 0.0 : parse_real(re, t), imag};
}

namespace {

Matrix from_rows(const std::vector<std::vector<Complex>>& rows) {
  if (rows.empty()) malformed("matrix has no rows");
  const auto n = rows.size();
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i].size() != n)
      malformed("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) + " entries, expected " +
                std::to_string(n));
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

}  // namespace

Matrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Complex>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<Complex> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_complex(cell));
    if (!line.empty() && line.back() == ',') malformed("trailing comma");
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

Matrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) malformed("JSON matrix must be an array of rows");
  std::vector<std::vector<Complex>> rows;
  for (const auto& jrow : doc) {
    if (!jrow.is_array()) malformed("JSON matrix row must be an array");
    std::vector<Complex> row;
    for (const auto& v : jrow) {
      if (v.is_number()) {
        row.emplace_back(v.get<double>(), 0.0);
      } else if (v.is_string()) {
        row.push_back(parse_complex(v.get<std::string>()));
      } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        row.emplace_back(v[0].get<double>(), v[1].get<double>());
      } else {
        malformed("unsupported JSON matrix entry " + v.dump());
      }
      if (!std::isfinite(row.back().real()) || !std::isfinite(row.back().imag())) malformed("non-finite entry");
    }
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

Matrix parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') return parse_matrix_json(text);
  return parse_matrix_csv(text);
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

}  // namespace starlab::numeric
