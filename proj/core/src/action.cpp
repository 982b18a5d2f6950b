#include "plectic/action.hpp"

#include "plectic/error.hpp"

namespace plectic {

namespace {

Matrix mat_zero(int n) { return Matrix(n, std::vector<Rational>(n, Rational(0))); }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  Matrix out = mat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (is_zero(a[i][k])) continue;
      for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace

LinearAction::LinearAction(LieAlgebra g, std::vector<Matrix> matrices)
    : algebra_(std::move(g)), matrices_(std::move(matrices)) {
  if (static_cast<int>(matrices_.size()) != algebra_.dim())
    throw Error(ErrorKind::SizeMismatch, "one matrix per basis element is required");
  size_ = matrices_.empty() ? 0 : static_cast<int>(matrices_[0].size());
  for (const auto& m : matrices_) {
    if (static_cast<int>(m.size()) != size_) throw Error(ErrorKind::SizeMismatch, "matrices differ in size");
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != size_) throw Error(ErrorKind::SizeMismatch, "matrix is not square");
  }
  const int d = algebra_.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix ab = mat_mul(matrices_[i], matrices_[j]);
      Matrix ba = mat_mul(matrices_[j], matrices_[i]);
      Matrix br = matrix_of(algebra_.bracket_basis(i, j));
      for (int r = 0; r < size_; ++r)
        for (int c = 0; c < size_; ++c)
          if (ab[r][c] - ba[r][c] != br[r][c])
            throw Error(ErrorKind::InvalidInput,
                        "not a representation at (" + algebra_.name(i) + ", " + algebra_.name(j) + ")");
    }
}

Matrix LinearAction::matrix_of(const LieVector& x) const {
  Matrix out = mat_zero(size_);
  for (std::size_t b = 0; b < matrices_.size(); ++b) {
    if (is_zero(x[b])) continue;
    for (int r = 0; r < size_; ++r)
      for (int c = 0; c < size_; ++c) out[r][c] += x[b] * matrices_[b][r][c];
  }
  return out;
}

std::optional<std::array<int, 2>> morphism_violation(const LieAlgebra& g, const std::vector<PolyMultiVec>& fields) {
  const int d = g.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      PolyMultiVec lhs = schouten(fields[i], fields[j]);
      PolyMultiVec rhs(fields[i].chart(), 1);
      const auto& br = g.bracket_basis(i, j);
      for (int k = 0; k < d; ++k)
        if (!is_zero(br[k])) rhs += br[k] * fields[k];
      if (!(lhs == rhs)) return std::array<int, 2>{i, j};
    }
  return std::nullopt;
}

ActionData::ActionData(LieAlgebra g, Chart chart, std::vector<PolyMultiVec> fields)
    : algebra_(std::move(g)), chart_(std::move(chart)), fields_(std::move(fields)) {
  if (static_cast<int>(fields_.size()) != algebra_.dim())
    throw Error(ErrorKind::SizeMismatch, "one vector field per basis element is required");
  for (const auto& v : fields_) {
    if (v.degree() != 1) throw Error(ErrorKind::DegreeError, "fundamental fields must have degree 1");
    if (!(v.chart() == chart_)) throw Error(ErrorKind::ChartMismatch, "field lives on another chart");
  }
  if (auto bad = morphism_violation(algebra_, fields_))
    throw Error(ErrorKind::MorphismCheckFailed, "[v_" + algebra_.name((*bad)[0]) + ", v_" + algebra_.name((*bad)[1]) +
                                                    "] differs from the field of the bracket");
}

PolyMultiVec ActionData::field_of(const LieVector& x) const {
  PolyMultiVec out(chart_, 1);
  for (int i = 0; i < dim(); ++i)
    if (!is_zero(x[i])) out += x[i] * fields_[i];
  return out;
}

ActionData fundamental_fields_linear(const LinearAction& action, const Chart& chart) {
  if (chart.size() != action.size()) throw Error(ErrorKind::ChartMismatch, "chart size differs from the representation");
  std::vector<PolyMultiVec> fields;
  for (const auto& m : action.matrices()) {
    Matrix neg = m;
    for (auto& row : neg)
      for (auto& c : row) c = -c;
    fields.push_back(linear_field(chart, neg));
  }
  return ActionData(action.algebra(), chart, std::move(fields));
}

ActionData fundamental_fields_linear(const LinearAction& action) {
  return fundamental_fields_linear(action, Chart::numbered("x", action.size()));
}

PolyForm contract(const ActionData& action, std::span<const int> basis, const PolyForm& a) {
  PolyForm out = a;
  for (int i : basis) {
    if (out.degree() == 0) return PolyForm(a.chart(), 0);
    out = interior(action.field(i), out);
  }
  return out;
}

PolyForm contract_vectors(const ActionData& action, std::span<const LieVector> xs, const PolyForm& a) {
  PolyForm out = a;
  for (const auto& x : xs) {
    if (out.degree() == 0) return PolyForm(a.chart(), 0);
    out = interior(action.field_of(x), out);
  }
  return out;
}

FormCochain insert_g_k(const PolyForm& omega, const ActionData& action, int k) {
  if (k > omega.degree()) return FormCochain(action.dim(), k, PolyForm(omega.chart(), 0));
  FormCochain out(action.dim(), k, PolyForm(omega.chart(), omega.degree() - k));
  for (const auto& tuple : increasing_subsets(action.dim(), k))
    out.set(make_index_set(tuple), contract(action, tuple, omega));
  return out;
}

std::optional<int> invariance_violation(const ActionData& action, const PolyForm& a, const Domain& domain) {
  for (int i = 0; i < action.dim(); ++i)
    if (!domain.form_is_zero(lie_derivative(action.field(i), a))) return i;
  return std::nullopt;
}

CotangentLift cotangent_lift(const LinearAction& base, int n) {
  const int m = base.size();
  if (n < 1 || n > m) throw Error(ErrorKind::UnsupportedDimension, "need 1 <= n <= m for the cotangent lift");
  auto subsets = increasing_subsets(m, n);
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("q" + std::to_string(i));
  for (const auto& s : subsets) {
    std::string nm = "p";
    for (int i : s) nm += std::to_string(i + 1);
    names.push_back(nm);
  }
  Chart chart(names);
  const int dim = chart.size();
  auto p_index = [&](IndexSet s) {
    for (std::size_t t = 0; t < subsets.size(); ++t)
      if (make_index_set(subsets[t]) == s) return m + static_cast<int>(t);
    throw Error(ErrorKind::InvalidInput, "missing momentum coordinate");
  };
  Chart qchart = Chart::numbered("q", m);
  std::vector<PolyMultiVec> fields;
  for (const auto& phi : base.matrices()) {
    Matrix neg = phi;
    for (auto& row : neg)
      for (auto& c : row) c = -c;
    PolyMultiVec x = linear_field(qchart, neg);
    PolyMultiVec v = x.embed(chart, 0);
    // L_X dq_I has constant coefficients; the momentum part cancels it against p_I.
    for (const auto& s : subsets) {
      PolyForm dq = PolyForm::basis(qchart, s, MultiPoly::constant(m, 1));
      PolyForm ld = lie_derivative(x, dq);
      MultiPoly p = MultiPoly::variable(dim, p_index(make_index_set(s)));
      for (const auto& [j, c] : ld.terms()) {
        MultiPoly coeff = -(c.embed(dim, 0) * p);
        v.add_term(IndexSet(1) << p_index(j), coeff);
      }
    }
    fields.push_back(v);
  }
  PolyForm alpha(chart, n);
  for (const auto& s : subsets) {
    std::vector<int> idx = s;
    alpha += PolyForm::basis(chart, idx, MultiPoly::variable(dim, p_index(make_index_set(s))));
  }
  return {ActionData(base.algebra(), chart, std::move(fields)), alpha};
}

ActionData translation_action(int d) {
  Chart chart = Chart::numbered("x", d);
  std::vector<PolyMultiVec> fields;
  for (int i = 0; i < d; ++i) fields.push_back(PolyMultiVec::basis(chart, {i}));
  return ActionData(abelian_algebra(d), chart, std::move(fields));
}

}  // namespace plectic
