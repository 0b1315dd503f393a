#include "qcat/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace qcat {

WeylGroup::WeylGroup(const Quiver& q) : q_(q), cartan_(cartan_matrix(q)) {
  refl_.reserve(q_.n);
  for (int i = 0; i < q_.n; ++i) {
    IntMatrix s = IntMatrix::identity(q_.n);
    for (int j = 0; j < q_.n; ++j) s.at(i, j) -= cartan_.at(i, j);
    refl_.push_back(s);  // column j is s_i(alpha_j) = alpha_j - A_ij alpha_i
  }
}

const IntMatrix& WeylGroup::simple_reflection_matrix(int i) const {
  if (i < 1 || i > q_.n) throw InvalidIndex("generator index out of range");
  return refl_[i - 1];
}

WeylElement WeylGroup::identity() const {
  WeylElement e;
  e.mat = IntMatrix::identity(q_.n);
  e.inv = e.mat;
  e.len = 0;
  return e;
}

bool WeylGroup::is_positive(const Vec& v) {
  for (i64 x : v)
    if (x < 0) return false;
  return true;
}

bool WeylGroup::is_negative(const Vec& v) {
  for (i64 x : v)
    if (x > 0) return false;
  return true;
}

namespace {

// column j of m is sign-definite for group elements: w(alpha_j) is a root
inline bool column_negative(const IntMatrix& m, int j) {
  for (int i = 0; i < m.n; ++i)
    if (m.at(i, j) > 0) return false;
  return true;
}

// Root coordinates of infinite-type elements grow exponentially with
// length.  Keeping every matrix entry below 2^30 guarantees the next
// product cannot overflow int64, so exactness never degrades silently.
constexpr i64 kCoordCap = i64{1} << 30;

inline void check_exact_range(const IntMatrix& m) {
  for (i64 v : m.a)
    if (v >= kCoordCap || v <= -kCoordCap)
      throw CapExceeded(
          "element coordinates exceed the exact integer range");
}

}  // namespace

int WeylGroup::peel_length(IntMatrix m) const {
  int n = q_.n;
  int len = 0;
  while (!m.is_identity()) {
    int d = -1;
    for (int j = 0; j < n; ++j)
      if (column_negative(m, j)) {
        d = j;
        break;
      }
    if (d < 0) throw InternalError("non-identity element without descent");
    m = m.mul(refl_[d]);  // strip right descent: m <- m s_d
    ++len;
  }
  return len;
}

WeylElement WeylGroup::mul_gen_left(int i, const WeylElement& w) const {
  const IntMatrix& s = refl_[i - 1];
  WeylElement out;
  out.mat = s.mul(w.mat);
  out.inv = w.inv.mul(s);
  out.len = left_descent(w, i) ? w.len - 1 : w.len + 1;
  check_exact_range(out.mat);
  return out;
}

WeylElement WeylGroup::mul_gen_right(const WeylElement& w, int i) const {
  const IntMatrix& s = refl_[i - 1];
  WeylElement out;
  out.mat = w.mat.mul(s);
  out.inv = s.mul(w.inv);
  out.len = right_descent(w, i) ? w.len - 1 : w.len + 1;
  check_exact_range(out.mat);
  return out;
}

WeylElement WeylGroup::mul(const WeylElement& v, const WeylElement& w) const {
  WeylElement out;
  out.mat = v.mat.mul(w.mat);
  out.inv = w.inv.mul(v.inv);
  out.len = peel_length(out.mat);
  check_exact_range(out.mat);
  return out;
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  WeylElement out;
  out.mat = w.inv;
  out.inv = w.mat;
  out.len = w.len;
  return out;
}

bool WeylGroup::left_descent(const WeylElement& w, int i) const {
  // l(s_i w) < l(w) iff w^{-1}(alpha_i) is negative
  return column_negative(w.inv, i - 1);
}

bool WeylGroup::right_descent(const WeylElement& w, int i) const {
  // l(w s_i) < l(w) iff w(alpha_i) is negative
  return column_negative(w.mat, i - 1);
}

WeylElement WeylGroup::evaluate_word(const Word& w) const {
  WeylElement cur = identity();
  for (int letter : w) {
    if (letter < 1 || letter > q_.n)
      throw InvalidIndex("word letter out of range");
    cur = mul_gen_right(cur, letter);
  }
  // mul_gen_right already tracked length via descents, which is exactly
  // descent peeling; a non-reduced word lowers len along the way.
  return cur;
}

bool WeylGroup::is_reduced(const Word& w) const {
  return evaluate_word(w).len == static_cast<int>(w.size());
}

Word WeylGroup::canonical_word(const WeylElement& w) const {
  Word out;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    int d = -1;
    for (int i = 1; i <= q_.n; ++i)
      if (left_descent(cur, i)) {
        d = i;
        break;
      }
    if (d < 0) throw InternalError("non-identity element without descent");
    out.push_back(d);
    cur = mul_gen_left(d, cur);
  }
  return out;
}

std::vector<Word> WeylGroup::reduced_words(const WeylElement& w) const {
  if (w.is_identity()) return {Word{}};
  std::vector<Word> out;
  for (int i = 1; i <= q_.n; ++i) {
    if (!left_descent(w, i)) continue;
    for (Word tail : reduced_words(mul_gen_left(i, w))) {
      Word full{i};
      full.insert(full.end(), tail.begin(), tail.end());
      out.push_back(std::move(full));
    }
  }
  return out;
}

bool WeylGroup::bruhat_leq(const WeylElement& v, const WeylElement& w) const {
  if (v.len > w.len) return false;
  if (v.len == 0) return true;
  if (v.len == w.len) return v == w;
  std::string memo_key = v.key() + w.key();
  {
    std::lock_guard<std::mutex> lock(bruhat_mu_);
    auto it = bruhat_memo_.find(memo_key);
    if (it != bruhat_memo_.end()) return it->second;
  }
  int s = -1;
  for (int i = 1; i <= q_.n; ++i)
    if (left_descent(w, i)) {
      s = i;
      break;
    }
  // lifting property: for s with sw < w,
  //   v <= w  iff  (sv <= sw if sv < v, else v <= sw)
  WeylElement sw = mul_gen_left(s, w);
  bool res = left_descent(v, s) ? bruhat_leq(mul_gen_left(s, v), sw)
                                : bruhat_leq(v, sw);
  {
    std::lock_guard<std::mutex> lock(bruhat_mu_);
    bruhat_memo_.emplace(std::move(memo_key), res);
  }
  return res;
}

bool WeylGroup::weak_leq_right(const WeylElement& v,
                               const WeylElement& w) const {
  if (v.len > w.len) return false;
  WeylElement rest = mul(inverse(v), w);
  return v.len + rest.len == w.len;
}

WeylElement WeylGroup::longest_element() const {
  if (!q_.dynkin) throw NotFiniteType("longest element needs Dynkin type");
  WeylElement cur = identity();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= q_.n; ++i)
      if (!right_descent(cur, i)) {
        cur = mul_gen_right(cur, i);
        moved = true;
        break;
      }
  }
  return cur;
}

std::vector<WeylElement> WeylGroup::enumerate_group(size_t cap) const {
  std::vector<WeylElement> out;
  std::unordered_set<std::string> seen;
  std::deque<WeylElement> queue;
  queue.push_back(identity());
  seen.insert(queue.front().key());
  while (!queue.empty()) {
    WeylElement cur = std::move(queue.front());
    queue.pop_front();
    out.push_back(cur);
    if (out.size() + queue.size() > cap)
      throw CapExceeded("group enumeration exceeded cap");
    for (int i = 1; i <= q_.n; ++i) {
      WeylElement nxt = mul_gen_right(out.back(), i);
      if (seen.insert(nxt.key()).second) {
        if (seen.size() > cap)
          throw CapExceeded("group enumeration exceeded cap");
        queue.push_back(std::move(nxt));
      }
    }
  }
  return out;
}

std::vector<Root> WeylGroup::positive_roots() const {
  if (!q_.dynkin) throw NotFiniteType("root enumeration needs Dynkin type");
  std::vector<Root> out;
  std::unordered_set<std::string> seen;
  std::deque<Root> queue;
  auto push = [&](const Root& r) {
    std::string k(reinterpret_cast<const char*>(r.data()),
                  r.size() * sizeof(i64));
    if (seen.insert(k).second) {
      out.push_back(r);
      queue.push_back(r);
    }
  };
  for (int i = 0; i < q_.n; ++i) {
    Root a(q_.n, 0);
    a[i] = 1;
    push(a);
  }
  while (!queue.empty()) {
    Root r = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < q_.n; ++i) {
      Root img = refl_[i].apply(r);
      if (is_positive(img)) push(img);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qcat
