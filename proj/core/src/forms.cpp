#include "plectic/forms.hpp"

#include <bit>

namespace plectic {

IndexSet make_index_set(std::span<const int> indices) {
  IndexSet s = 0;
  for (int i : indices) {
    if (i < 0 || i >= 32) throw Error(ErrorKind::InvalidInput, "index out of range");
    IndexSet bit = IndexSet{1} << i;
    if (s & bit) throw Error(ErrorKind::InvalidInput, "repeated index");
    s |= bit;
  }
  return s;
}

std::vector<int> indices_of(IndexSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

int popcount(IndexSet s) { return std::popcount(s); }

bool IndexSetLess::operator()(IndexSet a, IndexSet b) const {
  if (a == b) return false;
  IndexSet diff = a ^ b;
  IndexSet low = diff & (~diff + 1);
  IndexSet above = ~(low | (low - 1));
  // The set owning the smallest differing element is smaller unless the other
  // set ends right there (then the other is a proper prefix).
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

int merge_sign(IndexSet a, IndexSet b) {
  if (a & b) return 0;
  int inversions = 0;
  for (IndexSet t = b; t; t &= t - 1) {
    int j = std::countr_zero(t);
    IndexSet greater = j >= 31 ? 0 : (~IndexSet{0} << (j + 1));
    inversions += std::popcount(a & greater);
  }
  return (inversions & 1) ? -1 : 1;
}

Chart::Chart(std::vector<std::string> names) {
  if (names.size() > static_cast<std::size_t>(kMaxVars))
    throw Error(ErrorKind::UnsupportedDimension, "charts support at most 16 coordinates");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw Error(ErrorKind::InvalidInput, "duplicate coordinate name " + names[i]);
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Chart Chart::numbered(const std::string& prefix, int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return Chart(std::move(names));
}

const std::vector<std::string>& Chart::names() const {
  static const std::vector<std::string> empty;
  return names_ ? *names_ : empty;
}

std::optional<int> Chart::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

Chart Chart::concat(const Chart& other) const {
  std::vector<std::string> all = names();
  for (const auto& n : other.names()) all.push_back(n);
  return Chart(std::move(all));
}

bool Chart::operator==(const Chart& other) const {
  if (names_ == other.names_) return true;
  return names() == other.names();
}

template <class Tag>
GradedPoly<Tag>::GradedPoly(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  if (degree < 0) throw Error(ErrorKind::DegreeError, "negative degree");
}

template <class Tag>
GradedPoly<Tag> GradedPoly<Tag>::scalar(const Chart& chart, MultiPoly f) {
  GradedPoly out(chart, 0);
  out.add_term(0, f);
  return out;
}

template <class Tag>
GradedPoly<Tag> GradedPoly<Tag>::basis(const Chart& chart, std::span<const int> indices, const MultiPoly& coeff) {
  std::vector<int> sorted(indices.begin(), indices.end());
  GradedPoly out(chart, static_cast<int>(sorted.size()));
  int s = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[i] == sorted[j]) return out;
      if (sorted[i] > sorted[j]) s = -s;
    }
  MultiPoly c = coeff;
  if (s < 0) c = -c;
  out.add_term(make_index_set(sorted), c);
  return out;
}

template <class Tag>
GradedPoly<Tag> GradedPoly<Tag>::basis(const Chart& chart, std::initializer_list<int> indices, const Rational& c) {
  std::vector<int> idx(indices);
  return basis(chart, idx, MultiPoly::constant(chart.size(), c));
}

template <class Tag>
void GradedPoly<Tag>::add_term(IndexSet set, const MultiPoly& coeff) {
  if (coeff.is_zero()) return;
  if (popcount(set) != degree_) throw Error(ErrorKind::DegreeError, "term degree differs from element degree");
  if (coeff.nvars() != chart_.size()) throw Error(ErrorKind::ChartMismatch, "coefficient over wrong chart");
  auto [it, inserted] = terms_.try_emplace(set, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class Tag>
MultiPoly GradedPoly<Tag>::coefficient(IndexSet set) const {
  auto it = terms_.find(set);
  return it == terms_.end() ? MultiPoly(chart_.size()) : it->second;
}

template <class Tag>
void GradedPoly<Tag>::require_compatible(const GradedPoly& other) const {
  if (!(chart_ == other.chart_)) throw Error(ErrorKind::ChartMismatch, "operands live on different charts");
  if (degree_ != other.degree_) throw Error(ErrorKind::DegreeError, "adding elements of different degree");
}

template <class Tag>
GradedPoly<Tag>& GradedPoly<Tag>::operator+=(const GradedPoly& other) {
  require_compatible(other);
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

template <class Tag>
GradedPoly<Tag>& GradedPoly<Tag>::operator-=(const GradedPoly& other) {
  require_compatible(other);
  for (const auto& [s, c] : other.terms_) add_term(s, -c);
  return *this;
}

template <class Tag>
GradedPoly<Tag>& GradedPoly<Tag>::operator*=(const Rational& c) {
  if (plectic::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, f] : terms_) f *= c;
  return *this;
}

template <class Tag>
GradedPoly<Tag>& GradedPoly<Tag>::operator*=(const MultiPoly& f) {
  Terms out;
  for (auto& [s, g] : terms_) {
    MultiPoly p = g * f;
    if (!p.is_zero()) out.emplace(s, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

template <class Tag>
GradedPoly<Tag> GradedPoly<Tag>::operator-() const {
  GradedPoly out = *this;
  for (auto& [s, f] : out.terms_) f = -f;
  return out;
}

template <class Tag>
bool GradedPoly<Tag>::operator==(const GradedPoly& other) const {
  return chart_ == other.chart_ && degree_ == other.degree_ && terms_ == other.terms_;
}

template <class Tag>
GradedPoly<Tag> GradedPoly<Tag>::embed(const Chart& target, int offset) const {
  GradedPoly out(target, degree_);
  for (const auto& [s, f] : terms_) out.add_term(s << offset, f.embed(target.size(), offset));
  return out;
}

template <class Tag>
GradedPoly<Tag> wedge(const GradedPoly<Tag>& a, const GradedPoly<Tag>& b) {
  if (!(a.chart() == b.chart())) throw Error(ErrorKind::ChartMismatch, "wedge of elements on different charts");
  GradedPoly<Tag> out(a.chart(), a.degree() + b.degree());
  for (const auto& [sa, fa] : a.terms()) {
    for (const auto& [sb, fb] : b.terms()) {
      int s = merge_sign(sa, sb);
      if (s == 0) continue;
      MultiPoly c = fa * fb;
      if (s < 0) c = -c;
      out.add_term(sa | sb, c);
    }
  }
  return out;
}

template class GradedPoly<FormTag>;
template class GradedPoly<FieldTag>;
template PolyForm wedge(const PolyForm&, const PolyForm&);
template PolyMultiVec wedge(const PolyMultiVec&, const PolyMultiVec&);

PolyForm exterior_d(const PolyForm& a) {
  const int n = a.nvars();
  PolyForm out(a.chart(), a.degree() + 1);
  for (const auto& [s, f] : a.terms()) {
    for (int j = 0; j < n; ++j) {
      IndexSet bit = IndexSet{1} << j;
      if (s & bit) continue;
      MultiPoly df = f.derivative(j);
      if (df.is_zero()) continue;
      if (merge_sign(bit, s) < 0) df = -df;
      out.add_term(s | bit, df);
    }
  }
  return out;
}

namespace {

// Sign of iota_{d_{j_m}} ... iota_{d_{j_1}} dx_I for J = {j_1 < ... < j_m} inside I.
int contraction_sign(IndexSet j_set, IndexSet i_set) {
  int s = 1;
  IndexSet remaining = i_set;
  for (IndexSet t = j_set; t; t &= t - 1) {
    int j = std::countr_zero(t);
    IndexSet below = (IndexSet{1} << j) - 1;
    if (std::popcount(remaining & below) & 1) s = -s;
    remaining &= ~(IndexSet{1} << j);
  }
  return s;
}

}  // namespace

PolyForm interior(const PolyMultiVec& v, const PolyForm& a) {
  if (!(v.chart() == a.chart())) throw Error(ErrorKind::ChartMismatch, "interior product across charts");
  if (v.degree() > a.degree()) throw Error(ErrorKind::DegreeError, "interior product of a field of higher degree");
  PolyForm out(a.chart(), a.degree() - v.degree());
  for (const auto& [sv, g] : v.terms()) {
    for (const auto& [sa, f] : a.terms()) {
      if ((sv & sa) != sv) continue;
      MultiPoly c = g * f;
      if (contraction_sign(sv, sa) < 0) c = -c;
      out.add_term(sa & ~sv, c);
    }
  }
  return out;
}

PolyForm lie_derivative(const PolyMultiVec& v, const PolyForm& a) {
  const int result_degree = a.degree() - v.degree() + 1;
  if (result_degree < 0) throw Error(ErrorKind::DegreeError, "Lie derivative of negative degree");
  PolyForm out(a.chart(), result_degree);
  if (v.degree() <= a.degree()) out += exterior_d(interior(v, a));
  if (v.degree() <= a.degree() + 1) {
    PolyForm second = interior(v, exterior_d(a));
    if (v.degree() % 2 == 0) out -= second;
    else out += second;
  }
  return out;
}

PolyMultiVec field_bracket(const PolyMultiVec& x, const PolyMultiVec& y) {
  if (x.degree() != 1 || y.degree() != 1) throw Error(ErrorKind::DegreeError, "field_bracket needs vector fields");
  if (!(x.chart() == y.chart())) throw Error(ErrorKind::ChartMismatch, "bracket across charts");
  PolyMultiVec out(x.chart(), 1);
  for (const auto& [sx, fx] : x.terms()) {
    int j = std::countr_zero(sx);
    for (const auto& [sy, fy] : y.terms()) {
      int i = std::countr_zero(sy);
      // X^j d_j (Y^i) d_i - Y^i d_i (X^j) d_j
      out.add_term(sy, fx * fy.derivative(j));
      out.add_term(sx, -(fy * fx.derivative(i)));
    }
  }
  return out;
}

PolyMultiVec schouten(const PolyMultiVec& u, const PolyMultiVec& v) {
  if (u.degree() < 1 || v.degree() < 1) throw Error(ErrorKind::DegreeError, "Schouten bracket needs degree >= 1");
  if (!(u.chart() == v.chart())) throw Error(ErrorKind::ChartMismatch, "bracket across charts");
  const Chart& chart = u.chart();
  const int n = chart.size();
  const int m = u.degree(), k = v.degree();
  PolyMultiVec out(chart, m + k - 1);
  const MultiPoly one = MultiPoly::constant(n, 1);
  for (const auto& [su, g] : u.terms()) {
    auto iu = indices_of(su);
    for (const auto& [sv, h] : v.terms()) {
      auto iv = indices_of(sv);
      // u = (g d_{iu[0]}) ^ d_{iu[1]} ^ ..., likewise v.
      for (int a = 0; a < m; ++a) {
        PolyMultiVec ua = PolyMultiVec::basis(chart, {iu[a]});
        if (a == 0) ua *= g;
        PolyMultiVec rest_u = PolyMultiVec(chart, m - 1);
        rest_u.add_term(su & ~(IndexSet{1} << iu[a]), a == 0 ? one : g);
        for (int b = 0; b < k; ++b) {
          PolyMultiVec vb = PolyMultiVec::basis(chart, {iv[b]});
          if (b == 0) vb *= h;
          PolyMultiVec br = field_bracket(ua, vb);
          if (br.is_zero()) continue;
          PolyMultiVec rest_v = PolyMultiVec(chart, k - 1);
          rest_v.add_term(sv & ~(IndexSet{1} << iv[b]), b == 0 ? one : h);
          PolyMultiVec term = wedge(wedge(br, rest_u), rest_v);
          if ((a + b) % 2) out -= term;
          else out += term;
        }
      }
    }
  }
  return out;
}

PolyForm poincare_homotopy(const PolyForm& a) {
  if (a.degree() < 1) throw Error(ErrorKind::DegreeError, "Poincare operator needs degree >= 1");
  const int n = a.nvars();
  const int k = a.degree();
  PolyForm out(a.chart(), k - 1);
  for (const auto& [s, f] : a.terms()) {
    auto idx = indices_of(s);
    for (const auto& [e, c] : f.terms()) {
      Rational w = c / Rational(total_degree(e) + k);
      for (int p = 0; p < k; ++p) {
        Exponents e2 = e;
        e2[idx[p]] += 1;
        out.add_term(s & ~(IndexSet{1} << idx[p]), MultiPoly::monomial(n, e2, (p % 2) ? -w : w));
      }
    }
  }
  return out;
}

std::vector<Rational> evaluate_field(const PolyMultiVec& v, std::span<const Rational> point) {
  if (v.degree() != 1) throw Error(ErrorKind::DegreeError, "evaluate_field needs a vector field");
  std::vector<Rational> out(v.nvars(), Rational(0));
  for (const auto& [s, f] : v.terms()) out[std::countr_zero(s)] = f.evaluate(point);
  return out;
}

namespace {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!is_zero(m[r][c])) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (is_zero(m[r][c])) continue;
      Rational f = m[r][c] / m[c][c];
      for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace

Rational evaluate_on_frame(const PolyForm& a, std::span<const Rational> point,
                           const std::vector<std::vector<Rational>>& vectors) {
  const int k = a.degree();
  if (static_cast<int>(vectors.size()) != k) throw Error(ErrorKind::SizeMismatch, "frame size differs from form degree");
  Rational sum = 0;
  for (const auto& [s, f] : a.terms()) {
    auto idx = indices_of(s);
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) m[r][c] = vectors[c][idx[r]];
    Rational det = determinant(std::move(m));
    if (is_zero(det)) continue;
    sum += f.evaluate(point) * det;
  }
  return sum;
}

PolyMultiVec euler_field(const Chart& chart) {
  PolyMultiVec out(chart, 1);
  for (int i = 0; i < chart.size(); ++i) out.add_term(IndexSet{1} << i, MultiPoly::variable(chart.size(), i));
  return out;
}

PolyMultiVec linear_field(const Chart& chart, const std::vector<std::vector<Rational>>& a) {
  const int n = chart.size();
  PolyMultiVec out(chart, 1);
  for (int i = 0; i < n; ++i) {
    MultiPoly c(n);
    for (int j = 0; j < n; ++j)
      if (!is_zero(a[i][j])) c += MultiPoly::variable(n, j) * a[i][j];
    out.add_term(IndexSet{1} << i, c);
  }
  return out;
}

PolyForm volume_form(const Chart& chart) {
  std::vector<int> all(chart.size());
  for (int i = 0; i < chart.size(); ++i) all[i] = i;
  return PolyForm::basis(chart, all, MultiPoly::constant(chart.size(), 1));
}

PolyForm volume_primitive(const Chart& chart) {
  return Rational(1, chart.size()) * interior(euler_field(chart), volume_form(chart));
}

}  // namespace plectic
