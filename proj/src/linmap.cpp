#include "paracyc/linmap.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace paracyc {

FinSpace FinSpace::named(const std::string& prefix, int n) {
  FinSpace s;
  s.labels.reserve(n);
  for (int i = 0; i < n; ++i) s.labels.push_back(prefix + std::to_string(i));
  return s;
}

FinSpace tensor_space(const FinSpace& a, const FinSpace& b) {
  FinSpace s;
  s.labels.reserve(static_cast<size_t>(a.dim()) * b.dim());
  for (const auto& x : a.labels)
    for (const auto& y : b.labels) s.labels.push_back(x + "|" + y);
  return s;
}

FinSpace tensor_space(const std::vector<FinSpace>& fs) {
  if (fs.empty()) return FinSpace::line();
  FinSpace s = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) s = tensor_space(s, fs[i]);
  return s;
}

FinSpace hom_space(const FinSpace& u, const FinSpace& v) {
  FinSpace s;
  s.labels.reserve(static_cast<size_t>(u.dim()) * v.dim());
  for (const auto& y : v.labels)
    for (const auto& x : u.labels) s.labels.push_back(y + "@" + x);
  return s;
}

namespace {

// r + c*s for sorted sparse rows.
LinMap::Row row_axpy(const LinMap::Row& r, const Scalar& c, const LinMap::Row& s) {
  LinMap::Row out;
  out.reserve(r.size() + s.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || s[j].first < r[i].first) {
      Scalar v = c * s[j].second;
      if (!v.is_zero()) out.emplace_back(s[j].first, v);
      ++j;
    } else {
      Scalar v = r[i].second + c * s[j].second;
      if (!v.is_zero()) out.emplace_back(r[i].first, v);
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

LinMap::LinMap(Field f, FinSpace dom, FinSpace cod)
    : fld_(f), dom_(std::move(dom)), cod_(std::move(cod)), rows_(cod_.dim()) {}

LinMap LinMap::identity(Field f, const FinSpace& s) {
  LinMap m(f, s, s);
  for (int i = 0; i < s.dim(); ++i) m.rows_[i] = {{i, Scalar::one(f)}};
  return m;
}

LinMap LinMap::zero(Field f, const FinSpace& dom, const FinSpace& cod) {
  return LinMap(f, dom, cod);
}

LinMap LinMap::from_entries(Field f, const FinSpace& dom, const FinSpace& cod,
                            const std::vector<std::tuple<int, int, Scalar>>& es) {
  std::vector<std::tuple<int, int, Scalar>> sorted = es;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::pair(std::get<0>(a), std::get<1>(a)) < std::pair(std::get<0>(b), std::get<1>(b));
  });
  LinMap m(f, dom, cod);
  for (const auto& [i, j, v] : sorted) {
    if (i < 0 || i >= m.rows() || j < 0 || j >= m.cols()) throw ShapeMismatch("entry out of range");
    auto& row = m.rows_[i];
    if (!row.empty() && row.back().first == j) {
      row.back().second = row.back().second + v;
      if (row.back().second.is_zero()) row.pop_back();
    } else if (!v.is_zero()) {
      row.emplace_back(j, v);
    }
  }
  return m;
}

Scalar LinMap::at(int i, int j) const {
  const Row& r = rows_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& e, int c) { return e.first < c; });
  if (it != r.end() && it->first == j) return it->second;
  return Scalar::zero(fld_);
}

int LinMap::nnz() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

bool LinMap::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

bool LinMap::is_identity() const {
  if (rows() != cols()) return false;
  for (int i = 0; i < rows(); ++i)
    if (!(rows_[i].size() == 1 && rows_[i][0].first == i && rows_[i][0].second.is_one()))
      return false;
  return true;
}

void LinMap::add_to(int i, int j, const Scalar& v) {
  if (v.is_zero()) return;
  Row& r = rows_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& e, int c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    it->second = it->second + v;
    if (it->second.is_zero()) r.erase(it);
  } else {
    r.insert(it, {j, v});
  }
}

void LinMap::check_same_shape(const LinMap& o) const {
  if (fld_ != o.fld_) throw FieldMismatch("map arithmetic across fields");
  if (rows() != o.rows() || cols() != o.cols()) throw ShapeMismatch("shape mismatch in map sum");
}

LinMap LinMap::operator+(const LinMap& o) const {
  check_same_shape(o);
  LinMap m(fld_, dom_, cod_);
  for (int i = 0; i < rows(); ++i) m.rows_[i] = row_axpy(rows_[i], Scalar::one(fld_), o.rows_[i]);
  return m;
}

LinMap LinMap::operator-(const LinMap& o) const {
  check_same_shape(o);
  LinMap m(fld_, dom_, cod_);
  for (int i = 0; i < rows(); ++i)
    m.rows_[i] = row_axpy(rows_[i], -Scalar::one(fld_), o.rows_[i]);
  return m;
}

LinMap LinMap::operator*(const LinMap& o) const {
  if (fld_ != o.fld_) throw FieldMismatch("composing maps over different fields");
  if (cols() != o.rows())
    throw ShapeMismatch("composition shape mismatch: " + std::to_string(cols()) + " vs " +
                        std::to_string(o.rows()));
  LinMap m(fld_, o.dom_, cod_);
  for (int i = 0; i < rows(); ++i) {
    std::map<int, Scalar> acc;
    for (const auto& [k, a] : rows_[i]) {
      for (const auto& [j, b] : o.rows_[k]) {
        Scalar v = a * b;
        auto it = acc.find(j);
        if (it == acc.end())
          acc.emplace(j, v);
        else
          it->second = it->second + v;
      }
    }
    Row r;
    r.reserve(acc.size());
    for (auto& [j, v] : acc)
      if (!v.is_zero()) r.emplace_back(j, v);
    m.rows_[i] = std::move(r);
  }
  return m;
}

LinMap LinMap::scale(const Scalar& c) const {
  LinMap m(fld_, dom_, cod_);
  if (c.is_zero()) return m;
  for (int i = 0; i < rows(); ++i) {
    m.rows_[i] = rows_[i];
    for (auto& e : m.rows_[i]) e.second = e.second * c;
  }
  return m;
}

LinMap LinMap::transpose() const {
  LinMap m(fld_, cod_, dom_);
  for (int i = 0; i < rows(); ++i)
    for (const auto& [j, v] : rows_[i]) m.rows_[j].emplace_back(i, v);
  return m;  // rows come out sorted because i is increasing
}

bool LinMap::operator==(const LinMap& o) const {
  if (fld_ != o.fld_ || rows() != o.rows() || cols() != o.cols()) return false;
  for (int i = 0; i < rows(); ++i) {
    if (rows_[i].size() != o.rows_[i].size()) return false;
    for (size_t k = 0; k < rows_[i].size(); ++k)
      if (rows_[i][k].first != o.rows_[i][k].first ||
          !(rows_[i][k].second == o.rows_[i][k].second))
        return false;
  }
  return true;
}

std::vector<Scalar> LinMap::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols()) throw ShapeMismatch("apply: bad vector length");
  std::vector<Scalar> out(rows(), Scalar::zero(fld_));
  for (int i = 0; i < rows(); ++i)
    for (const auto& [j, a] : rows_[i]) out[i] = out[i] + a * v[j];
  return out;
}

LinMap LinMap::with_spaces(FinSpace dom, FinSpace cod) const {
  if (dom.dim() != dom_.dim() || cod.dim() != cod_.dim())
    throw ShapeMismatch("with_spaces: dimension change");
  LinMap m = *this;
  m.dom_ = std::move(dom);
  m.cod_ = std::move(cod);
  return m;
}

LinMap kron(const LinMap& a, const LinMap& b) {
  if (a.field() != b.field()) throw FieldMismatch("kron across fields");
  LinMap m(a.field(), tensor_space(a.dom(), b.dom()), tensor_space(a.cod(), b.cod()));
  const int bc = b.cols();
  for (int i1 = 0; i1 < a.rows(); ++i1) {
    for (int i2 = 0; i2 < b.rows(); ++i2) {
      if (a.row(i1).empty() || b.row(i2).empty()) continue;
      LinMap::Row r;
      r.reserve(a.row(i1).size() * b.row(i2).size());
      for (const auto& [j1, va] : a.row(i1))
        for (const auto& [j2, vb] : b.row(i2)) r.emplace_back(j1 * bc + j2, va * vb);
      // assemble directly: kron of sorted rows is sorted
      for (const auto& e : r) m.add_to(i1 * b.rows() + i2, e.first, e.second);
    }
  }
  return m;
}

LinMap kron(const std::vector<LinMap>& ms) {
  if (ms.empty()) throw ShapeMismatch("kron of nothing");
  LinMap m = ms[0];
  for (size_t i = 1; i < ms.size(); ++i) m = kron(m, ms[i]);
  return m;
}

LinMap reorder(Field f, const std::vector<FinSpace>& factors, const std::vector<int>& perm) {
  const int k = static_cast<int>(factors.size());
  if (static_cast<int>(perm.size()) != k) throw ShapeMismatch("reorder: bad permutation size");
  std::vector<bool> seen(k, false);
  for (int p : perm) {
    if (p < 0 || p >= k || seen[p]) throw ShapeMismatch("reorder: not a permutation");
    seen[p] = true;
  }
  std::vector<int> d(k);
  long total = 1;
  for (int j = 0; j < k; ++j) {
    d[j] = factors[j].dim();
    total *= d[j];
  }
  std::vector<FinSpace> nf(k);
  for (int j = 0; j < k; ++j) nf[j] = factors[perm[j]];
  LinMap m(f, tensor_space(factors), tensor_space(nf));
  std::vector<int> idx(k);
  for (long s = 0; s < total; ++s) {
    long rem = s;
    for (int j = k - 1; j >= 0; --j) {
      idx[j] = static_cast<int>(rem % d[j]);
      rem /= d[j];
    }
    long t = 0;
    for (int j = 0; j < k; ++j) t = t * d[perm[j]] + idx[perm[j]];
    m.add_to(static_cast<int>(t), static_cast<int>(s), Scalar::one(f));
  }
  return m;
}

LinMap hstack(const std::vector<LinMap>& ms) {
  if (ms.empty()) throw ShapeMismatch("hstack of nothing");
  FinSpace dom;
  for (const auto& m : ms) {
    if (m.field() != ms[0].field()) throw FieldMismatch("hstack across fields");
    if (m.rows() != ms[0].rows()) throw ShapeMismatch("hstack: codomain mismatch");
    for (const auto& l : m.dom().labels) dom.labels.push_back(l);
  }
  LinMap out(ms[0].field(), dom, ms[0].cod());
  int off = 0;
  for (const auto& m : ms) {
    for (int i = 0; i < m.rows(); ++i)
      for (const auto& [j, v] : m.row(i)) out.add_to(i, off + j, v);
    off += m.cols();
  }
  return out;
}

// --- elimination ------------------------------------------------------------

namespace {

// Incremental sparse reduction to the (unique) reduced row echelon form.
struct Reducer {
  Field fld;
  std::map<int, LinMap::Row> piv;  // leading column -> normalized row

  void insert(LinMap::Row r) {
    while (!r.empty()) {
      const int lead = r[0].first;
      auto it = piv.find(lead);
      if (it == piv.end()) {
        Scalar c = r[0].second.inv();
        for (auto& e : r) e.second = e.second * c;
        piv.emplace(lead, std::move(r));
        return;
      }
      r = row_axpy(r, -r[0].second, it->second);
    }
  }

  // Back-substitute so each pivot column appears in exactly one row.
  void finalize() {
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
      LinMap::Row r = it->second;
      std::vector<std::pair<int, Scalar>> elim;
      for (size_t k = 1; k < r.size(); ++k)
        if (piv.count(r[k].first)) elim.push_back(r[k]);
      for (const auto& [j, v] : elim) r = row_axpy(r, -v, piv.at(j));
      it->second = std::move(r);
    }
  }
};

Reducer reduce_rows(const LinMap& f) {
  Reducer red{f.field(), {}};
  for (int i = 0; i < f.rows(); ++i)
    if (!f.row(i).empty()) red.insert(f.row(i));
  red.finalize();
  return red;
}

}  // namespace

int rank(const LinMap& f) {
  Reducer red{f.field(), {}};
  for (int i = 0; i < f.rows(); ++i)
    if (!f.row(i).empty()) red.insert(f.row(i));
  return static_cast<int>(red.piv.size());
}

std::pair<LinMap, LinMap> kernel_pair(const LinMap& f) {
  Reducer red = reduce_rows(f);
  std::vector<int> free_cols;
  for (int j = 0; j < f.cols(); ++j)
    if (!red.piv.count(j)) free_cols.push_back(j);
  FinSpace ker;
  ker.labels.reserve(free_cols.size());
  for (int j : free_cols) ker.labels.push_back(f.dom().labels[j]);
  std::vector<std::tuple<int, int, Scalar>> inc_es, ret_es;
  std::map<int, int> free_idx;
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    free_idx[free_cols[k]] = k;
    inc_es.emplace_back(free_cols[k], k, Scalar::one(f.field()));
    ret_es.emplace_back(k, free_cols[k], Scalar::one(f.field()));
  }
  for (const auto& [p, row] : red.piv)
    for (const auto& [j, v] : row)
      if (j != p) inc_es.emplace_back(p, free_idx.at(j), -v);
  LinMap incl = LinMap::from_entries(f.field(), ker, f.dom(), inc_es);
  LinMap retr = LinMap::from_entries(f.field(), f.dom(), ker, ret_es);
  return {incl, retr};
}

LinMap kernel(const LinMap& f) { return kernel_pair(f).first; }

std::pair<LinMap, LinMap> cokernel_pair(const LinMap& f) {
  Reducer red = reduce_rows(f.transpose());
  std::vector<int> qcoords;
  for (int j = 0; j < f.rows(); ++j)
    if (!red.piv.count(j)) qcoords.push_back(j);
  FinSpace cok;
  cok.labels.reserve(qcoords.size());
  for (int j : qcoords) cok.labels.push_back(f.cod().labels[j]);
  std::map<int, int> qidx;
  std::vector<std::tuple<int, int, Scalar>> proj_es, sect_es;
  for (int k = 0; k < static_cast<int>(qcoords.size()); ++k) {
    qidx[qcoords[k]] = k;
    proj_es.emplace_back(k, qcoords[k], Scalar::one(f.field()));
    sect_es.emplace_back(qcoords[k], k, Scalar::one(f.field()));
  }
  for (const auto& [p, row] : red.piv)
    for (const auto& [j, v] : row)
      if (j != p) proj_es.emplace_back(qidx.at(j), p, -v);
  LinMap proj = LinMap::from_entries(f.field(), f.cod(), cok, proj_es);
  LinMap sect = LinMap::from_entries(f.field(), cok, f.cod(), sect_es);
  return {proj, sect};
}

LinMap inverse(const LinMap& f) {
  const int n = f.rows();
  if (n != f.cols()) throw SingularMap("inverse of a non-square map");
  Reducer red{f.field(), {}};
  for (int i = 0; i < n; ++i) {
    LinMap::Row r = f.row(i);
    r.emplace_back(n + i, Scalar::one(f.field()));
    red.insert(std::move(r));
  }
  red.finalize();
  std::vector<std::tuple<int, int, Scalar>> es;
  for (int i = 0; i < n; ++i) {
    auto it = red.piv.find(i);
    if (it == red.piv.end()) throw SingularMap("map is singular");
    for (const auto& [j, v] : it->second)
      if (j >= n) es.emplace_back(i, j - n, v);
  }
  return LinMap::from_entries(f.field(), f.cod(), f.dom(), es);
}

std::vector<Scalar> solve(const LinMap& f, const std::vector<Scalar>& rhs) {
  if (static_cast<int>(rhs.size()) != f.rows()) throw ShapeMismatch("solve: bad rhs length");
  const int n = f.cols();
  Reducer red{f.field(), {}};
  for (int i = 0; i < f.rows(); ++i) {
    LinMap::Row r = f.row(i);
    if (!rhs[i].is_zero()) r.emplace_back(n, rhs[i]);
    if (!r.empty()) red.insert(std::move(r));
  }
  red.finalize();
  if (red.piv.count(n)) throw SingularMap("solve: inconsistent system");
  std::vector<Scalar> x(n, Scalar::zero(f.field()));
  for (const auto& [p, row] : red.piv)
    for (const auto& [j, v] : row)
      if (j == n) x[p] = v;
  return x;
}

// --- hom coordinate games ----------------------------------------------------

LinMap hom_pre(const LinMap& g, const FinSpace& v) {
  LinMap m = kron(LinMap::identity(g.field(), v), g.transpose());
  return m.with_spaces(hom_space(g.cod(), v), hom_space(g.dom(), v));
}

LinMap hom_post(const LinMap& h, const FinSpace& u) {
  LinMap m = kron(h, LinMap::identity(h.field(), u));
  return m.with_spaces(hom_space(u, h.dom()), hom_space(u, h.cod()));
}

LinMap hom_flatten_r(Field f, const FinSpace& c, const FinSpace& d, const FinSpace& q) {
  const int dc = c.dim(), dd = d.dim(), dq = q.dim();
  std::vector<std::tuple<int, int, Scalar>> es;
  es.reserve(static_cast<size_t>(dc) * dd * dq);
  for (int iq = 0; iq < dq; ++iq)
    for (int id = 0; id < dd; ++id)
      for (int ic = 0; ic < dc; ++ic)
        es.emplace_back(iq * dc * dd + ic * dd + id, (iq * dd + id) * dc + ic, Scalar::one(f));
  return LinMap::from_entries(f, hom_space(c, hom_space(d, q)), hom_space(tensor_space(c, d), q),
                              es);
}

LinMap hom_flatten_l(Field f, const FinSpace& c, const FinSpace& d, const FinSpace& q) {
  const int dc = c.dim(), dd = d.dim(), dq = q.dim();
  std::vector<std::tuple<int, int, Scalar>> es;
  es.reserve(static_cast<size_t>(dc) * dd * dq);
  for (int iq = 0; iq < dq; ++iq)
    for (int id = 0; id < dd; ++id)
      for (int ic = 0; ic < dc; ++ic)
        es.emplace_back(iq * dd * dc + id * dc + ic, (iq * dd + id) * dc + ic, Scalar::one(f));
  return LinMap::from_entries(f, hom_space(c, hom_space(d, q)), hom_space(tensor_space(d, c), q),
                              es);
}

LinMap hom_unflatten_r(Field f, const FinSpace& c, const FinSpace& d, const FinSpace& q) {
  return hom_flatten_r(f, c, d, q).transpose();
}

LinMap hom_unflatten_l(Field f, const FinSpace& c, const FinSpace& d, const FinSpace& q) {
  return hom_flatten_l(f, c, d, q).transpose();
}

LinMap hom_arg_switch(Field f, const FinSpace& u, const FinSpace& w, const FinSpace& v) {
  const int du = u.dim(), dw = w.dim(), dv = v.dim();
  std::vector<std::tuple<int, int, Scalar>> es;
  es.reserve(static_cast<size_t>(du) * dw * dv);
  for (int iv = 0; iv < dv; ++iv)
    for (int iw = 0; iw < dw; ++iw)
      for (int iu = 0; iu < du; ++iu)
        es.emplace_back((iv * du + iu) * dw + iw, (iv * dw + iw) * du + iu, Scalar::one(f));
  return LinMap::from_entries(f, hom_space(u, hom_space(w, v)), hom_space(w, hom_space(u, v)), es);
}

LinMap hom_conj_r(const LinMap& P, const LinMap& Q, const FinSpace& u, const FinSpace& v,
                  const FinSpace& w) {
  if (P.field() != Q.field()) throw FieldMismatch("hom_conj_r across fields");
  const int dU = u.dim(), dW = w.dim();
  if (P.rows() != dU * dW || Q.cols() != v.dim() * dW)
    throw ShapeMismatch("hom_conj_r: factor shape mismatch");
  const int dUp = P.cols();
  std::vector<std::tuple<int, int, Scalar>> es;
  for (int vp = 0; vp < Q.rows(); ++vp) {
    for (const auto& [cq, qv] : Q.row(vp)) {
      const int vv = cq / dW, ww = cq % dW;
      for (int uu = 0; uu < dU; ++uu)
        for (const auto& [up, pv] : P.row(uu * dW + ww))
          es.emplace_back(vp * dUp + up, vv * dU + uu, qv * pv);
    }
  }
  return LinMap::from_entries(P.field(), hom_space(u, v), hom_space(P.dom(), Q.cod()), es);
}

LinMap hom_conj_l(const LinMap& P, const LinMap& Q, const FinSpace& u, const FinSpace& v,
                  const FinSpace& w) {
  if (P.field() != Q.field()) throw FieldMismatch("hom_conj_l across fields");
  const int dU = u.dim(), dV = v.dim(), dW = w.dim();
  if (P.rows() != dW * dU || Q.cols() != dW * dV)
    throw ShapeMismatch("hom_conj_l: factor shape mismatch");
  const int dUp = P.cols();
  std::vector<std::tuple<int, int, Scalar>> es;
  for (int vp = 0; vp < Q.rows(); ++vp) {
    for (const auto& [cq, qv] : Q.row(vp)) {
      const int ww = cq / dV, vv = cq % dV;
      for (int uu = 0; uu < dU; ++uu)
        for (const auto& [up, pv] : P.row(ww * dU + uu))
          es.emplace_back(vp * dUp + up, vv * dU + uu, qv * pv);
    }
  }
  return LinMap::from_entries(P.field(), hom_space(u, v), hom_space(P.dom(), Q.cod()), es);
}

LinMap curry_right(const LinMap& act, const FinSpace& x, const FinSpace& u, const FinSpace& y) {
  const int dU = u.dim();
  if (act.cols() != x.dim() * dU || act.rows() != y.dim())
    throw ShapeMismatch("curry_right: shape mismatch");
  std::vector<std::tuple<int, int, Scalar>> es;
  for (int iy = 0; iy < act.rows(); ++iy)
    for (const auto& [c, val] : act.row(iy)) es.emplace_back(iy * dU + c % dU, c / dU, val);
  return LinMap::from_entries(act.field(), x, hom_space(u, y), es);
}

LinMap curry_left(const LinMap& act, const FinSpace& u, const FinSpace& x, const FinSpace& y) {
  const int dU = u.dim(), dX = x.dim();
  if (act.cols() != dX * dU || act.rows() != y.dim())
    throw ShapeMismatch("curry_left: shape mismatch");
  std::vector<std::tuple<int, int, Scalar>> es;
  for (int iy = 0; iy < act.rows(); ++iy)
    for (const auto& [c, val] : act.row(iy)) es.emplace_back(iy * dU + c / dX, c % dX, val);
  return LinMap::from_entries(act.field(), x, hom_space(u, y), es);
}

}  // namespace paracyc
