#include "lagloci/series.hpp"

#include <algorithm>
#include <vector>

namespace lagloci {

namespace {

// Dense scratch layout for monomials of total degree <= order.
struct DenseIndex {
  int order;
  int index(int i, int j) const {
    const int d = i + j;
    return d * (d + 1) / 2 + j;
  }
  int size() const { return (order + 1) * (order + 2) / 2; }
};

BiSeries from_dense(const std::vector<GaussianRational>& dense, int order) {
  BiSeries out(order);
  DenseIndex idx{order};
  for (int d = 0; d <= order; ++d) {
    for (int j = 0; j <= d; ++j) {
      const auto& c = dense[idx.index(d - j, j)];
      if (!c.is_zero()) out.set_coeff(d - j, j, c);
    }
  }
  return out;
}

}  // namespace

GaussianRational unit_inverse(const GaussianRational& x) {
  if (x.is_zero()) throw Error(ErrorCode::NotAUnit, "zero is not a unit");
  return inverse(x);
}

// ---------------------------------------------------------------- BiSeries

BiSeries::BiSeries(int order) : order_(order) {
  if (order < 0) throw Error(ErrorCode::OrderExhausted, "negative truncation order");
}

BiSeries BiSeries::constant(const GaussianRational& c, int order) {
  BiSeries s(order);
  s.set_coeff(0, 0, c);
  return s;
}

BiSeries BiSeries::variable(Var v, int order) {
  return v == Var::u1 ? monomial(1, 0, 1, order) : monomial(0, 1, 1, order);
}

BiSeries BiSeries::monomial(int i, int j, const GaussianRational& c, int order) {
  BiSeries s(order);
  s.set_coeff(i, j, c);
  return s;
}

GaussianRational BiSeries::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void BiSeries::set_coeff(int i, int j, const GaussianRational& c) {
  if (i < 0 || j < 0 || i + j > order_) return;
  if (c.is_zero()) {
    terms_.erase({i, j});
  } else {
    terms_[{i, j}] = c;
  }
}

void BiSeries::add_to_coeff(int i, int j, const GaussianRational& c) {
  if (i < 0 || j < 0 || i + j > order_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> BiSeries::valuation() const {
  std::optional<int> best;
  for (const auto& [e, c] : terms_) {
    const int d = e.first + e.second;
    if (!best || d < *best) best = d;
  }
  return best;
}

BiSeries BiSeries::truncated(int n) const {
  if (n > order_) {
    throw Error(ErrorCode::OrderMismatch, "cannot truncate order " + std::to_string(order_) + " series to order " +
                                              std::to_string(n));
  }
  return with_order(n);
}

BiSeries BiSeries::with_order(int n) const {
  BiSeries out(n);
  for (const auto& [e, c] : terms_) {
    if (e.first + e.second <= n) out.terms_.emplace(e, c);
  }
  return out;
}

BiSeries BiSeries::operator-() const {
  BiSeries out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BiSeries& BiSeries::operator+=(const BiSeries& rhs) {
  if (rhs.order_ < order_) *this = with_order(rhs.order_);
  for (const auto& [e, c] : rhs.terms_) add_to_coeff(e.first, e.second, c);
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& rhs) {
  if (rhs.order_ < order_) *this = with_order(rhs.order_);
  for (const auto& [e, c] : rhs.terms_) add_to_coeff(e.first, e.second, -c);
  return *this;
}

BiSeries& BiSeries::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs) {
  const int order = std::min(lhs.order_, rhs.order_);
  if (lhs.terms_.empty() || rhs.terms_.empty()) return BiSeries(order);
  DenseIndex idx{order};
  std::vector<GaussianRational> acc(idx.size());
  for (const auto& [ea, ca] : lhs.terms_) {
    const int da = ea.first + ea.second;
    if (da > order) continue;
    for (const auto& [eb, cb] : rhs.terms_) {
      if (da + eb.first + eb.second > order) continue;
      acc[idx.index(ea.first + eb.first, ea.second + eb.second)] += ca * cb;
    }
  }
  return from_dense(acc, order);
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  const int order = std::min(a.order_, b.order_);
  return a.with_order(order).terms_ == b.with_order(order).terms_;
}

std::map<int, GaussianRational> BiSeries::restrict_u2_zero() const {
  std::map<int, GaussianRational> out;
  for (const auto& [e, c] : terms_) {
    if (e.second == 0) out.emplace(e.first, c);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BiSeries& s) {
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (e.first > 0) os << "*u1^" << e.first;
    if (e.second > 0) os << "*u2^" << e.second;
  }
  if (first) os << "0";
  return os << " + O(" << s.order() + 1 << ")";
}

// ---------------------------------------------------------------- UniSeries

UniSeries::UniSeries(int order) : order_(order) {
  if (order < 0) throw Error(ErrorCode::OrderExhausted, "negative truncation order");
}

UniSeries UniSeries::constant(const GaussianRational& c, int order) { return monomial(0, c, order); }

UniSeries UniSeries::monomial(int i, const GaussianRational& c, int order) {
  UniSeries s(order);
  s.set_coeff(i, c);
  return s;
}

GaussianRational UniSeries::coeff(int i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void UniSeries::set_coeff(int i, const GaussianRational& c) {
  if (i < 0 || i > order_) return;
  if (c.is_zero()) {
    terms_.erase(i);
  } else {
    terms_[i] = c;
  }
}

std::optional<int> UniSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

UniSeries UniSeries::truncated(int n) const {
  if (n > order_) throw Error(ErrorCode::OrderMismatch, "cannot raise the order of a series by truncation");
  return with_order(n);
}

UniSeries UniSeries::with_order(int n) const {
  UniSeries out(n);
  for (const auto& [i, c] : terms_) {
    if (i <= n) out.terms_.emplace(i, c);
  }
  return out;
}

UniSeries UniSeries::derivative() const {
  if (order_ < 1) throw Error(ErrorCode::OrderExhausted, "derivative of an order-0 series");
  UniSeries out(order_ - 1);
  for (const auto& [i, c] : terms_) {
    if (i > 0) out.set_coeff(i - 1, c * GaussianRational(i));
  }
  return out;
}

BiSeries UniSeries::as_bi(Var v) const {
  BiSeries out(order_);
  for (const auto& [i, c] : terms_) {
    if (v == Var::u1) {
      out.set_coeff(i, 0, c);
    } else {
      out.set_coeff(0, i, c);
    }
  }
  return out;
}

UniSeries UniSeries::operator-() const {
  UniSeries out(*this);
  for (auto& [i, c] : out.terms_) c = -c;
  return out;
}

UniSeries& UniSeries::operator+=(const UniSeries& rhs) {
  if (rhs.order_ < order_) *this = with_order(rhs.order_);
  for (const auto& [i, c] : rhs.terms_) {
    if (i <= order_) set_coeff(i, coeff(i) + c);
  }
  return *this;
}

UniSeries& UniSeries::operator-=(const UniSeries& rhs) { return *this += -rhs; }

UniSeries& UniSeries::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, v] : terms_) v *= c;
  return *this;
}

UniSeries operator*(const UniSeries& lhs, const UniSeries& rhs) {
  const int order = std::min(lhs.order_, rhs.order_);
  std::vector<GaussianRational> acc(order + 1);
  for (const auto& [i, a] : lhs.terms_) {
    for (const auto& [j, b] : rhs.terms_) {
      if (i + j <= order) acc[i + j] += a * b;
    }
  }
  UniSeries out(order);
  for (int k = 0; k <= order; ++k) out.set_coeff(k, acc[k]);
  return out;
}

bool operator==(const UniSeries& a, const UniSeries& b) {
  const int order = std::min(a.order_, b.order_);
  return a.with_order(order).terms_ == b.with_order(order).terms_;
}

// ---------------------------------------------------------------- free ops

BiSeries series_arith(const BiSeries& lhs, const BiSeries& rhs, SeriesOp op) {
  if (lhs.order() != rhs.order()) {
    throw Error(ErrorCode::OrderMismatch,
                "orders " + std::to_string(lhs.order()) + " and " + std::to_string(rhs.order()) + " differ");
  }
  switch (op) {
    case SeriesOp::add: return lhs + rhs;
    case SeriesOp::sub: return lhs - rhs;
    case SeriesOp::mul: return lhs * rhs;
  }
  return BiSeries(lhs.order());
}

BiSeries series_invert(const BiSeries& s) {
  const GaussianRational c0 = s.constant_term();
  if (c0.is_zero()) throw Error(ErrorCode::NotAUnit, "series has zero constant term");
  const int order = s.order();
  const GaussianRational inv0 = inverse(c0);
  DenseIndex idx{order};
  std::vector<GaussianRational> r(idx.size());
  r[0] = inv0;
  // r_(i,j) = -(1/c0) * sum_{(p,q) != 0} s_(p,q) r_(i-p, j-q), by increasing degree.
  for (int d = 1; d <= order; ++d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      GaussianRational acc;
      for (const auto& [e, c] : s.terms()) {
        const auto [p, q] = e;
        if ((p == 0 && q == 0) || p > i || q > j) continue;
        const auto& prev = r[idx.index(i - p, j - q)];
        if (!prev.is_zero()) acc += c * prev;
      }
      if (!acc.is_zero()) r[idx.index(i, j)] = -(acc * inv0);
    }
  }
  return from_dense(r, order);
}

BiSeries series_diff(const BiSeries& s, Var v) {
  if (s.order() < 1) throw Error(ErrorCode::OrderExhausted, "derivative of an order-0 series");
  BiSeries out(s.order() - 1);
  for (const auto& [e, c] : s.terms()) {
    const auto [i, j] = e;
    if (v == Var::u1 && i > 0) out.set_coeff(i - 1, j, c * GaussianRational(i));
    if (v == Var::u2 && j > 0) out.set_coeff(i, j - 1, c * GaussianRational(j));
  }
  return out;
}

BiSeries linear_substitute(const BiSeries& s, const GaussianRational& l11, const GaussianRational& l12,
                           const GaussianRational& l21, const GaussianRational& l22) {
  const int order = s.order();
  BiSeries x(order);
  x.set_coeff(1, 0, l11);
  x.set_coeff(0, 1, l12);
  BiSeries y(order);
  y.set_coeff(1, 0, l21);
  y.set_coeff(0, 1, l22);
  std::vector<BiSeries> xp{BiSeries::constant(1, order)};
  std::vector<BiSeries> yp{BiSeries::constant(1, order)};
  for (int k = 1; k <= order; ++k) {
    xp.push_back(xp.back() * x);
    yp.push_back(yp.back() * y);
  }
  BiSeries out(order);
  for (const auto& [e, c] : s.terms()) {
    out += c * (xp[e.first] * yp[e.second]);
  }
  return out;
}

}  // namespace lagloci
