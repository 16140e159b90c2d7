#include "gefstab/local.hpp"

#include "gefstab/error.hpp"

namespace gefstab {

LocalElem::LocalElem(Polynomial num, unsigned exp, Polynomial f, RingModel ring)
    : num_(std::move(num)), exp_(exp), f_(std::move(f)), ring_(std::move(ring)) {
  if (f_.is_zero()) throw InputError("localization at zero");
  normalize();
}

void LocalElem::normalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  Polynomial q;
  while (exp_ > 0 && divides(f_, num_, &q) && membership(q, ring_)) {
    num_ = std::move(q);
    --exp_;
  }
}

Polynomial LocalElem::times_f_power(unsigned k) const {
  if (k >= exp_) return num_ * pow(f_, k - exp_);
  Polynomial q = num_;
  for (unsigned i = k; i < exp_; ++i) {
    Polynomial next;
    if (!divides(f_, q, &next)) throw InternalError("localized entry is not over A after scaling");
    q = std::move(next);
  }
  if (!membership(q, ring_)) throw InternalError("localized entry is not over A after scaling");
  return q;
}

LocalElem LocalElem::over_f_power(unsigned k) const { return LocalElem(num_, exp_ + k, f_, ring_); }

LocalElem LocalElem::operator-() const { return LocalElem(-num_, exp_, f_, ring_); }

namespace {

void check_same_base(const LocalElem& a, const LocalElem& b) {
  if (a.f() != b.f()) throw InternalError("localized elements over different bases");
}

}  // namespace

LocalElem operator+(const LocalElem& a, const LocalElem& b) {
  check_same_base(a, b);
  const unsigned e = std::max(a.exp_, b.exp_);
  Polynomial n = a.num_ * pow(a.f_, e - a.exp_) + b.num_ * pow(a.f_, e - b.exp_);
  return LocalElem(std::move(n), e, a.f_, a.ring_);
}

LocalElem operator-(const LocalElem& a, const LocalElem& b) { return a + (-b); }

LocalElem operator*(const LocalElem& a, const LocalElem& b) {
  check_same_base(a, b);
  return LocalElem(a.num_ * b.num_, a.exp_ + b.exp_, a.f_, a.ring_);
}

bool operator==(const LocalElem& a, const LocalElem& b) {
  if (a.f_ != b.f_) return false;
  const unsigned e = std::max(a.exp_, b.exp_);
  return a.num_ * pow(a.f_, e - a.exp_) == b.num_ * pow(a.f_, e - b.exp_);
}

std::string format_local(const LocalElem& x) {
  if (x.exp() == 0) return format_canonical(x.num());
  std::string s = "(" + format_canonical(x.num()) + ")/(" + format_canonical(x.f()) + ")";
  if (x.exp() > 1) s += "^" + std::to_string(x.exp());
  return s;
}

}  // namespace gefstab
