#pragma once

// Exact scalars of the constructible subfield of the reals.
//
// A Scalar is an immutable expression DAG whose leaves are reduced rationals
// and whose interior nodes are +, -, *, /, unary minus and sqrt. Each node
// caches a dyadic enclosure (an MPFR interval with outward rounding) that is
// refined on demand by doubling the working precision. sign() is exact: it
// either separates the enclosure from zero or declares zero once the
// enclosure is narrower than the BFMSS separation bound of the expression.
//
// Sub-expressions whose operands are all rational are folded eagerly into
// rational leaves, so sqrt-free arithmetic never builds a graph. Likewise,
// arithmetic inside a single quadratic field Q(sqrt d) is carried out on the
// exact form a + b sqrt(d), whose sign needs no enclosure at all.
//
// Thread safety: enclosure refinement mutates per-node caches without
// locking. A Scalar (and anything sharing nodes with it) must only be
// queried from one thread at a time.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hypc {

/// Raised for operations outside the domain of the field operation
/// (division by zero, square root of a negative number, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Syntax error in the scalar text grammar; `position` is a byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Double-precision approximation, used by the float oracle and the renderer.
struct FloatScalar {
  double value = 0.0;
};

namespace detail {

enum class Op : std::uint8_t { Leaf, Neg, Add, Sub, Mul, Div, Sqrt };

/// One MPFR endpoint. Nodes own two of these; they are never copied.
class Endpoint {
 public:
  Endpoint() { mpfr_init2(v_, MPFR_PREC_MIN); }
  ~Endpoint() { mpfr_clear(v_); }
  Endpoint(const Endpoint&) = delete;
  Endpoint& operator=(const Endpoint&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct Node {
  Op op = Op::Leaf;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  mpq_class value;  // leaves only

  // Improved BFMSS parameters in log2 scale: the value is U/L with U, L
  // algebraic integers whose conjugates are bounded by 2^log_u and 2^log_l.
  double log_u = 0.0;
  double log_l = 0.0;

  mutable mpfr_prec_t prec = 0;  // 0 until the first refinement
  mutable Endpoint lo;
  mutable Endpoint hi;
  mutable int sign_cache = 2;  // 2 = unknown
  mutable double separation_bits = -1.0;

  // Exact form qa + qb sqrt(qd) when known; leaves have qb = 0.
  bool quad = false;
  mpq_class qa;
  mpq_class qb;
  mpz_class qd;
};

using NodePtr = std::shared_ptr<const Node>;

inline double log2_upper(const mpz_class& z) {
  if (z == 0) return 0.0;
  return static_cast<double>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

inline NodePtr make_leaf(mpq_class q) {
  q.canonicalize();
  auto n = std::make_shared<Node>();
  n->op = Op::Leaf;
  n->log_u = log2_upper(q.get_num());
  n->log_l = log2_upper(q.get_den());
  n->quad = true;
  n->qa = q;
  n->value = std::move(q);
  return n;
}

inline std::shared_ptr<Node> make_node(Op op, NodePtr lhs, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  const double ul = lhs->log_u, ll = lhs->log_l;
  const double ur = rhs ? rhs->log_u : 0.0, lr = rhs ? rhs->log_l : 0.0;
  switch (op) {
    case Op::Neg:
      n->log_u = ul;
      n->log_l = ll;
      break;
    case Op::Add:
    case Op::Sub:
      n->log_u = std::max(ul + lr, ll + ur) + 1.0;
      n->log_l = ll + lr;
      break;
    case Op::Mul:
      n->log_u = ul + ur;
      n->log_l = ll + lr;
      break;
    case Op::Div:
      n->log_u = ul + lr;
      n->log_l = ll + ur;
      break;
    case Op::Sqrt:
      if (ul >= ll) {
        n->log_u = (ul + ll) / 2.0;
        n->log_l = ll;
      } else {
        n->log_u = ul;
        n->log_l = (ul + ll) / 2.0;
      }
      break;
    case Op::Leaf:
      throw std::logic_error("make_node: leaf");
  }
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

inline int sgn_q(const mpq_class& q) { return sgn(q); }

/// Node for a + b sqrt(d), d > 1 not a perfect square.
inline NodePtr make_quad(mpq_class a, mpq_class b, const mpz_class& d) {
  a.canonicalize();
  b.canonicalize();
  if (b == 0) return make_leaf(std::move(a));
  const NodePtr radical = make_node(Op::Sqrt, make_leaf(mpq_class(d)));
  const mpq_class mag = abs(b);
  NodePtr term = mag == 1 ? radical : NodePtr(make_node(Op::Mul, make_leaf(mag), radical));
  std::shared_ptr<Node> n;
  if (a == 0)
    n = b < 0 ? make_node(Op::Neg, term) : std::const_pointer_cast<Node>(term);
  else
    n = make_node(b < 0 ? Op::Sub : Op::Add, make_leaf(a), term);
  const int sa = sgn_q(a), sb = sgn_q(b);
  if (sa == 0 || sa == sb) {
    n->sign_cache = sb;
  } else {
    const mpq_class lhs = a * a, rhs = b * b * mpq_class(d);
    n->sign_cache = lhs > rhs ? sa : sb;
  }
  n->quad = true;
  n->qa = std::move(a);
  n->qb = b;
  n->qd = d;
  return n;
}

/// x op y computed in Q(sqrt d) when both operands live there.
inline std::optional<NodePtr> quad_combine(Op op, const Node& x, const Node& y) {
  if (!x.quad || !y.quad) return std::nullopt;
  const bool xr = x.qb == 0, yr = y.qb == 0;
  if (!xr && !yr && x.qd != y.qd) return std::nullopt;
  const mpz_class d = xr ? y.qd : x.qd;
  const mpq_class dq(d);
  switch (op) {
    case Op::Add:
      return make_quad(x.qa + y.qa, x.qb + y.qb, d);
    case Op::Sub:
      return make_quad(x.qa - y.qa, x.qb - y.qb, d);
    case Op::Mul:
      return make_quad(x.qa * y.qa + x.qb * y.qb * dq, x.qa * y.qb + x.qb * y.qa, d);
    case Op::Div: {
      const mpq_class den = y.qa * y.qa - y.qb * y.qb * dq;
      const mpq_class a = x.qa * y.qa - x.qb * y.qb * dq;
      const mpq_class b = x.qb * y.qa - x.qa * y.qb;
      return make_quad(a / den, b / den, d);
    }
    default:
      return std::nullopt;
  }
}

inline bool rational_square_root(const mpq_class& q, mpq_class& root) {
  if (q < 0) return false;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = mpq_class(rn, rd);
  return true;
}

/// sqrt(a + b sqrt d) as x + y sqrt d when that denests.
inline std::optional<NodePtr> quad_sqrt(const Node& x) {
  if (!x.quad || x.qb == 0) return std::nullopt;
  const mpq_class dq(x.qd);
  mpq_class r;
  if (!rational_square_root(x.qa * x.qa - x.qb * x.qb * dq, r)) return std::nullopt;
  for (const mpq_class& cand : {mpq_class((x.qa + r) / 2), mpq_class((x.qa - r) / 2)}) {
    mpq_class u;
    if (cand == 0 || !rational_square_root(cand, u)) continue;
    mpq_class v = x.qb / (2 * u);
    // (u + v sqrt d)^2 = a + b sqrt d; pick the nonnegative root.
    if (u * u + v * v * dq != x.qa) continue;
    NodePtr out = make_quad(u, v, x.qd);
    if (out->sign_cache < 0) out = make_quad(-u, -v, x.qd);
    return out;
  }
  return std::nullopt;
}

inline mpfr_prec_t start_precision() {
  static const mpfr_prec_t value = [] {
    if (const char* env = std::getenv("HYPC_PRECISION_START")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 24) return static_cast<mpfr_prec_t>(v);
    }
    return static_cast<mpfr_prec_t>(64);
  }();
  return value;
}

inline bool unbounded(mpfr_srcptr lo, mpfr_srcptr hi) {
  return !mpfr_number_p(lo) || !mpfr_number_p(hi);
}

inline void set_whole_line(mpfr_ptr lo, mpfr_ptr hi) {
  mpfr_set_inf(lo, -1);
  mpfr_set_inf(hi, 1);
}

// [lo, hi] := [a_lo, a_hi] * [b_lo, b_hi], outward rounded.
inline void interval_mul(mpfr_ptr lo, mpfr_ptr hi, mpfr_srcptr alo, mpfr_srcptr ahi,
                         mpfr_srcptr blo, mpfr_srcptr bhi) {
  if (unbounded(alo, ahi) || unbounded(blo, bhi)) {
    set_whole_line(lo, hi);
    return;
  }
  const mpfr_prec_t p = mpfr_get_prec(lo);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_srcptr as[2] = {alo, ahi};
  mpfr_srcptr bs[2] = {blo, bhi};
  bool first = true;
  for (auto a : as) {
    for (auto b : bs) {
      mpfr_mul(t, a, b, MPFR_RNDD);
      if (first || mpfr_less_p(t, lo)) mpfr_set(lo, t, MPFR_RNDD);
      mpfr_mul(t, a, b, MPFR_RNDU);
      if (first || mpfr_greater_p(t, hi)) mpfr_set(hi, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
}

inline void interval_div(mpfr_ptr lo, mpfr_ptr hi, mpfr_srcptr alo, mpfr_srcptr ahi,
                         mpfr_srcptr blo, mpfr_srcptr bhi) {
  if (unbounded(alo, ahi) || unbounded(blo, bhi) || (mpfr_sgn(blo) <= 0 && mpfr_sgn(bhi) >= 0)) {
    set_whole_line(lo, hi);
    return;
  }
  const mpfr_prec_t p = mpfr_get_prec(lo);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_srcptr as[2] = {alo, ahi};
  mpfr_srcptr bs[2] = {blo, bhi};
  bool first = true;
  for (auto a : as) {
    for (auto b : bs) {
      mpfr_div(t, a, b, MPFR_RNDD);
      if (first || mpfr_less_p(t, lo)) mpfr_set(lo, t, MPFR_RNDD);
      mpfr_div(t, a, b, MPFR_RNDU);
      if (first || mpfr_greater_p(t, hi)) mpfr_set(hi, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
}

/// Ensures node `n` holds an enclosure computed at precision >= prec.
inline void refine(const Node& n, mpfr_prec_t prec) {
  if (n.prec >= prec) return;
  if (n.lhs) refine(*n.lhs, prec);
  if (n.rhs) refine(*n.rhs, prec);

  mpfr_t lo, hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  switch (n.op) {
    case Op::Leaf:
      mpfr_set_q(lo, n.value.get_mpq_t(), MPFR_RNDD);
      mpfr_set_q(hi, n.value.get_mpq_t(), MPFR_RNDU);
      break;
    case Op::Neg:
      mpfr_neg(lo, n.lhs->hi.get(), MPFR_RNDD);
      mpfr_neg(hi, n.lhs->lo.get(), MPFR_RNDU);
      break;
    case Op::Add:
      mpfr_add(lo, n.lhs->lo.get(), n.rhs->lo.get(), MPFR_RNDD);
      mpfr_add(hi, n.lhs->hi.get(), n.rhs->hi.get(), MPFR_RNDU);
      break;
    case Op::Sub:
      mpfr_sub(lo, n.lhs->lo.get(), n.rhs->hi.get(), MPFR_RNDD);
      mpfr_sub(hi, n.lhs->hi.get(), n.rhs->lo.get(), MPFR_RNDU);
      break;
    case Op::Mul:
      interval_mul(lo, hi, n.lhs->lo.get(), n.lhs->hi.get(), n.rhs->lo.get(), n.rhs->hi.get());
      break;
    case Op::Div:
      interval_div(lo, hi, n.lhs->lo.get(), n.lhs->hi.get(), n.rhs->lo.get(), n.rhs->hi.get());
      break;
    case Op::Sqrt:
      // The operand is known to be >= 0, so a negative lower end is clamped.
      if (mpfr_sgn(n.lhs->lo.get()) <= 0)
        mpfr_set_zero(lo, 1);
      else
        mpfr_sqrt(lo, n.lhs->lo.get(), MPFR_RNDD);
      if (mpfr_sgn(n.lhs->hi.get()) <= 0)
        mpfr_set_zero(hi, 1);
      else
        mpfr_sqrt(hi, n.lhs->hi.get(), MPFR_RNDU);
      break;
  }
  if (n.prec > 0) {
    // Never widen: intersect with the previous enclosure.
    if (mpfr_less_p(lo, n.lo.get())) mpfr_set(lo, n.lo.get(), MPFR_RNDD);
    if (mpfr_greater_p(hi, n.hi.get())) mpfr_set(hi, n.hi.get(), MPFR_RNDU);
  }
  mpfr_swap(n.lo.get(), lo);
  mpfr_swap(n.hi.get(), hi);
  mpfr_clear(lo);
  mpfr_clear(hi);
  n.prec = prec;
}

/// Number of distinct radicals reachable from `root`. Radicals over equal
/// rational radicands are counted once.
inline int count_radicals(const Node& root) {
  std::unordered_set<const Node*> seen;
  std::set<mpq_class> rational_radicands;
  int other = 0;
  std::vector<const Node*> stack{&root};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->op == Op::Sqrt) {
      if (n->lhs->op == Op::Leaf)
        rational_radicands.insert(n->lhs->value);
      else
        ++other;
    }
    if (n->lhs) stack.push_back(n->lhs.get());
    if (n->rhs) stack.push_back(n->rhs.get());
  }
  return other + static_cast<int>(rational_radicands.size());
}

/// If the value of `n` is nonzero then |value| >= 2^-separation_bits(n).
inline double separation_bits(const Node& n) {
  if (n.separation_bits < 0) {
    const int k = count_radicals(n);
    const double degree = std::ldexp(1.0, k);
    const double bits = (degree - 1.0) * n.log_u + n.log_l;
    n.separation_bits = std::ceil(bits * (1.0 + 1e-12)) + 2.0;
  }
  return n.separation_bits;
}

// |x| < 2^-bits, via the binary exponent of x.
inline bool below(mpfr_srcptr x, double bits) {
  if (mpfr_zero_p(x)) return true;
  if (!mpfr_number_p(x)) return false;
  return static_cast<double>(mpfr_get_exp(x)) <= -bits;
}

inline int node_sign(const Node& n) {
  if (n.op == Op::Leaf) return sgn(n.value);
  if (n.sign_cache != 2) return n.sign_cache;
  mpfr_prec_t prec = std::max(n.prec, start_precision());
  for (;;) {
    refine(n, prec);
    if (mpfr_sgn(n.lo.get()) > 0) return n.sign_cache = 1;
    if (mpfr_sgn(n.hi.get()) < 0) return n.sign_cache = -1;
    const double bits = separation_bits(n);
    if (below(n.lo.get(), bits) && below(n.hi.get(), bits)) return n.sign_cache = 0;
    prec *= 2;
  }
}

}  // namespace detail

class Scalar {
 public:
  Scalar() : node_(zero_node()) {}
  Scalar(long v) : node_(detail::make_leaf(mpq_class(v))) {}  // NOLINT: implicit by design of a field type
  Scalar(int v) : Scalar(static_cast<long>(v)) {}             // NOLINT
  explicit Scalar(const mpq_class& q) : node_(detail::make_leaf(q)) {}
  explicit Scalar(const mpz_class& z) : node_(detail::make_leaf(mpq_class(z))) {}

  static Scalar from_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    return Scalar(mpq_class(num, den));
  }
  static Scalar from_rational(long num, long den) {
    return from_rational(mpz_class(num), mpz_class(den));
  }

  /// Exact sign: -1, 0 or +1.
  int sign() const { return detail::node_sign(*node_); }
  bool is_zero() const { return sign() == 0; }

  bool is_rational() const { return node_->op == detail::Op::Leaf; }
  /// The exact rational value when the expression was folded to a leaf.
  std::optional<mpq_class> rational() const {
    if (!is_rational()) return std::nullopt;
    return node_->value;
  }

  /// Approximation with relative error at most 2^-precision_bits
  /// (before the final rounding to double).
  FloatScalar to_float(unsigned precision_bits = 53) const {
    if (precision_bits < 24) throw DomainError("to_float needs at least 24 bits");
    if (is_rational()) return {node_->value.get_d()};
    if (sign() == 0) return {0.0};
    mpfr_prec_t prec = std::max<mpfr_prec_t>(node_->prec, precision_bits + 8);
    mpfr_t width, mid;
    mpfr_init2(width, 64);
    mpfr_init2(mid, 64);
    for (;;) {
      detail::refine(*node_, prec);
      const auto lo = node_->lo.get(), hi = node_->hi.get();
      if (mpfr_number_p(lo) && mpfr_number_p(hi)) {
        mpfr_sub(width, hi, lo, MPFR_RNDU);
        mpfr_set_prec(mid, prec);
        mpfr_add(mid, lo, hi, MPFR_RNDN);
        mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
        mpfr_t rel;
        mpfr_init2(rel, 64);
        mpfr_abs(rel, mid, MPFR_RNDD);
        mpfr_mul_2si(rel, rel, -static_cast<long>(precision_bits), MPFR_RNDD);
        const bool done = mpfr_lessequal_p(width, rel);
        mpfr_clear(rel);
        if (done) break;
      }
      prec *= 2;
    }
    const double out = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_clear(width);
    mpfr_clear(mid);
    return {out};
  }

  double to_double() const { return to_float(53).value; }

  /// Text form in the scalar grammar; parse(format()) is equal to *this.
  std::string format() const;
  static Scalar parse(std::string_view text);

  friend Scalar operator-(const Scalar& x) {
    using detail::Op;
    if (x.is_rational()) return Scalar(mpq_class(-x.node_->value));
    if (x.node_->quad) return Scalar(detail::make_quad(-x.node_->qa, -x.node_->qb, x.node_->qd));
    if (x.node_->op == Op::Neg) return Scalar(x.node_->lhs);
    return Scalar(detail::make_node(Op::Neg, x.node_));
  }
  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    using detail::Op;
    if (x.is_rational() && y.is_rational()) return Scalar(mpq_class(x.node_->value + y.node_->value));
    if (x.is_rational() && x.node_->value == 0) return y;
    if (y.is_rational() && y.node_->value == 0) return x;
    if (auto q = detail::quad_combine(Op::Add, *x.node_, *y.node_)) return Scalar(*q);
    return Scalar(detail::make_node(Op::Add, x.node_, y.node_));
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    using detail::Op;
    if (x.node_ == y.node_) return Scalar();
    if (x.is_rational() && y.is_rational()) return Scalar(mpq_class(x.node_->value - y.node_->value));
    if (y.is_rational() && y.node_->value == 0) return x;
    if (x.is_rational() && x.node_->value == 0) return -y;
    if (auto q = detail::quad_combine(Op::Sub, *x.node_, *y.node_)) return Scalar(*q);
    return Scalar(detail::make_node(Op::Sub, x.node_, y.node_));
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    using detail::Op;
    if (x.is_rational() && y.is_rational()) return Scalar(mpq_class(x.node_->value * y.node_->value));
    if (x.is_rational()) {
      if (x.node_->value == 0) return Scalar();
      if (x.node_->value == 1) return y;
      if (x.node_->value == -1) return -y;
    }
    if (y.is_rational()) {
      if (y.node_->value == 0) return Scalar();
      if (y.node_->value == 1) return x;
      if (y.node_->value == -1) return -x;
    }
    if (auto q = detail::quad_combine(Op::Mul, *x.node_, *y.node_)) return Scalar(*q);
    return Scalar(detail::make_node(Op::Mul, x.node_, y.node_));
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) {
    using detail::Op;
    if (y.sign() == 0) throw DomainError("division by zero");
    if (x.node_ == y.node_) return Scalar(1);
    if (x.is_rational() && y.is_rational()) return Scalar(mpq_class(x.node_->value / y.node_->value));
    if (x.is_rational() && x.node_->value == 0) return Scalar();
    if (y.is_rational() && y.node_->value == 1) return x;
    if (auto q = detail::quad_combine(Op::Div, *x.node_, *y.node_)) return Scalar(*q);
    return Scalar(detail::make_node(Op::Div, x.node_, y.node_));
  }
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  friend Scalar sqrt(const Scalar& x);

  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const Scalar& x, const Scalar& y) { return (x - y).sign() == 0; }

  /// Number of distinct radicals in the expression; degree bound is 2^this.
  int radical_count() const { return detail::count_radicals(*node_); }
  double separation_bits() const { return detail::separation_bits(*node_); }

  const detail::Node& node() const { return *node_; }

 private:
  explicit Scalar(detail::NodePtr n) : node_(std::move(n)) {}

  static const detail::NodePtr& zero_node() {
    static const detail::NodePtr z = detail::make_leaf(mpq_class(0));
    return z;
  }

  detail::NodePtr node_;
};

inline int compare(const Scalar& x, const Scalar& y) { return (x - y).sign(); }
inline bool eq(const Scalar& x, const Scalar& y) { return x == y; }
inline Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

namespace detail {

inline const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<unsigned> out;
    for (unsigned n = 2; n < 1000; ++n) {
      bool prime = true;
      for (unsigned d : out) {
        if (d * d > n) break;
        if (n % d == 0) {
          prime = false;
          break;
        }
      }
      if (prime) out.push_back(n);
    }
    return out;
  }();
  return primes;
}

// n = square * rest, pulling out square factors of small primes.
inline void split_square(mpz_class n, mpz_class& square_root, mpz_class& rest) {
  square_root = 1;
  for (unsigned p : small_primes()) {
    const mpz_class pp = mpz_class(p) * p;
    if (pp > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p * p)) {
      n /= pp;
      square_root *= p;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    square_root *= r;
    n = 1;
  }
  rest = n;
}

}  // namespace detail

/// Nonnegative square root. Rational radicands are reduced to c*sqrt(r)
/// with r an integer free of small square factors.
inline Scalar sqrt(const Scalar& x) {
  using detail::Op;
  const int s = x.sign();
  if (s < 0) throw DomainError("square root of a negative number");
  if (s == 0) return Scalar();
  if (x.is_rational()) {
    const mpq_class& q = x.node_->value;
    mpz_class root, rest;
    detail::split_square(q.get_num() * q.get_den(), root, rest);
    const Scalar coeff(mpq_class(root, q.get_den()));
    if (rest == 1) return coeff;
    return Scalar(detail::make_quad(mpq_class(0), mpq_class(root, q.get_den()), rest));
  }
  if (auto r = detail::quad_sqrt(*x.node_)) return Scalar(*r);
  return Scalar(detail::make_node(Op::Sqrt, x.node_));
}

// ---------------------------------------------------------------------------
// Text form.

namespace detail {

// Binding strength: 1 sum, 2 product, 3 unary minus, 4 atom.
inline int level(const Node& n) {
  switch (n.op) {
    case Op::Leaf:
      if (n.value.get_den() != 1) return 2;
      return n.value < 0 ? 3 : 4;
    case Op::Add:
    case Op::Sub:
      return 1;
    case Op::Mul:
    case Op::Div:
      return 2;
    case Op::Neg:
      return 3;
    case Op::Sqrt:
      return 4;
  }
  return 4;
}

inline void format_node(const Node& n, std::string& out);

inline void format_child(const Node& n, int required, std::string& out) {
  if (level(n) < required) {
    out += '(';
    format_node(n, out);
    out += ')';
  } else {
    format_node(n, out);
  }
}

inline void format_node(const Node& n, std::string& out) {
  switch (n.op) {
    case Op::Leaf:
      out += n.value.get_str();
      return;
    case Op::Neg:
      out += '-';
      format_child(*n.lhs, 3, out);
      return;
    case Op::Add:
      format_child(*n.lhs, 1, out);
      out += '+';
      format_child(*n.rhs, 1, out);
      return;
    case Op::Sub:
      format_child(*n.lhs, 1, out);
      out += '-';
      format_child(*n.rhs, 2, out);
      return;
    case Op::Mul:
      format_child(*n.lhs, 2, out);
      out += '*';
      format_child(*n.rhs, 3, out);
      return;
    case Op::Div:
      format_child(*n.lhs, 2, out);
      out += '/';
      format_child(*n.rhs, 3, out);
      return;
    case Op::Sqrt:
      out += "sqrt(";
      format_node(*n.lhs, out);
      out += ')';
      return;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scalar run() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+'))
        v = v + term();
      else if (accept('-'))
        v = v - term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*')) {
        v = v * factor();
      } else if (accept('/')) {
        Scalar d = factor();
        if (d.sign() == 0) throw ParseError("division by zero", at);
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      mpz_class z(std::string(text_.substr(pos_, end - pos_)), 10);
      pos_ = end;
      return Scalar(z);
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!accept('(')) throw ParseError("expected '(' after sqrt", pos_);
      Scalar v = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      if (v.sign() < 0) throw ParseError("square root of a negative number", at);
      return sqrt(v);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string Scalar::format() const {
  std::string out;
  detail::format_node(*node_, out);
  return out;
}

inline Scalar Scalar::parse(std::string_view text) { return detail::Parser(text).run(); }

}  // namespace hypc
