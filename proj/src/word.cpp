#include "mihailova/word.hpp"

#include <algorithm>
#include <string>

#include "mihailova/errors.hpp"

namespace mihailova {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw AlphabetError("rank must be positive, got " + std::to_string(rank));
}

void check_letter(Letter l, int rank) {
  if (l.signed_value() == 0 || l.generator() > rank) {
    throw AlphabetError("generator index " + std::to_string(l.generator()) +
                        " outside [1, " + std::to_string(rank) + "]");
  }
}

void check_same_rank(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) {
    throw AlphabetError("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  }
}

// Stack-based free reduction; `out` is reduced before and after each push.
void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && cancels(out.back(), l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank) {
  check_rank(rank);
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(l, rank);
    push_reduced(letters_, l);
  }
}

Word::Word(int rank, std::initializer_list<int> signed_letters) : rank_(rank) {
  check_rank(rank);
  for (int v : signed_letters) {
    Letter l = Letter::from_signed(v);
    check_letter(l, rank);
    push_reduced(letters_, l);
  }
}

Word Word::generator(int rank, int index, int sign) { return Word(rank, {Letter(index, sign)}); }

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(rank_, std::move(out), Trusted{});
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return Word(rank_, std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len), Trusted{});
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

Word reduce(std::span<const Letter> letters, int rank) {
  return Word(rank, std::vector<Letter>(letters.begin(), letters.end()));
}

Word multiply(const Word& a, const Word& b) {
  check_same_rank(a, b);
  const auto& x = a.letters_;
  const auto& y = b.letters_;
  std::size_t k = 0;
  while (k < x.size() && k < y.size() && cancels(x[x.size() - 1 - k], y[k])) ++k;
  std::vector<Letter> out;
  out.reserve(x.size() + y.size() - 2 * k);
  out.insert(out.end(), x.begin(), x.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(k), y.end());
  return Word(a.rank_, std::move(out), Word::Trusted{});
}

Word invert(const Word& a) { return a.inverse(); }

Word conjugate(const Word& a, const Word& by) { return by.inverse() * a * by; }

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word power(const Word& a, long exponent) {
  Word base = exponent < 0 ? a.inverse() : a;
  long n = exponent < 0 ? -exponent : exponent;
  Word result(a.rank());
  for (long i = 0; i < n; ++i) result = result * base;
  return result;
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t n = w.length();
  std::size_t k = 0;
  while (2 * k + 1 < n && cancels(w[k], w[n - 1 - k])) ++k;
  return {w.slice(k, n - 2 * k), w.slice(0, k)};
}

bool is_cyclically_reduced(const Word& w) { return w.length() < 2 || !cancels(w.front(), w.back()); }

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.length();
  if (k == 0) return w;
  return w.slice(k, w.length() - k) * w.slice(0, k);
}

Word least_rotation(const Word& cyclic_word) {
  // Two-candidate minimum rotation scan, linear time.
  auto s = cyclic_word.letters();
  std::size_t n = s.size();
  if (n < 2) return cyclic_word;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter a = s[(i + k) % n];
    Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return rotate(cyclic_word, std::min(i, j));
}

bool are_conjugate(const Word& a, const Word& b) {
  check_same_rank(a, b);
  Word ca = cyclic_reduce(a).core;
  Word cb = cyclic_reduce(b).core;
  if (ca.length() != cb.length()) return false;
  return least_rotation(ca) == least_rotation(cb);
}

RootDecomposition root(const Word& w) {
  if (w.empty()) throw UndefinedRootError("root of the trivial word is undefined");
  auto [core, conj] = cyclic_reduce(w);
  std::size_t n = core.length();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + p < n && periodic; ++i) periodic = core[i] == core[i + p];
    if (periodic) {
      return {conj * core.slice(0, p) * conj.inverse(), static_cast<long>(n / p)};
    }
  }
  return {w, 1};  // unreachable: p == n is always a period
}

std::optional<long> power_exponent(const Word& w, const Word& base) {
  check_same_rank(w, base);
  if (base.empty()) throw UndefinedRootError("power_exponent: trivial base");
  if (w.empty()) return 0L;
  RootDecomposition rw = root(w);
  RootDecomposition rb = root(base);
  long sign = 0;
  if (rw.root == rb.root) {
    sign = 1;
  } else if (rw.root == rb.root.inverse()) {
    sign = -1;
  } else {
    return std::nullopt;
  }
  if (rw.exponent % rb.exponent != 0) return std::nullopt;
  return sign * (rw.exponent / rb.exponent);
}

bool commute(const Word& a, const Word& b) { return a * b == b * a; }

std::vector<std::int64_t> abelianize(const Word& w) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(w.rank()), 0);
  for (Letter l : w.letters()) v[static_cast<std::size_t>(l.generator() - 1)] += l.sign();
  return v;
}

std::vector<Word> ball(int rank, std::size_t max_length) {
  check_rank(rank);
  std::vector<Word> out{Word(rank)};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t idx = layer_begin; idx < layer_end; ++idx) {
      for (int key = 0; key < 2 * rank; ++key) {
        Letter l(key / 2 + 1, key % 2 == 0 ? 1 : -1);
        const Word& prefix = out[idx];
        if (!prefix.empty() && cancels(prefix.back(), l)) continue;
        out.push_back(prefix * Word(rank, {l.signed_value()}));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

std::uint64_t ball_size(int rank, std::size_t max_length) {
  std::uint64_t total = 1;
  std::uint64_t sphere = 2 * static_cast<std::uint64_t>(rank);
  for (std::size_t len = 1; len <= max_length; ++len) {
    total += sphere;
    sphere *= 2 * static_cast<std::uint64_t>(rank) - 1;
  }
  return total;
}

Word relabel(const Word& w, int new_rank, const std::function<int(int)>& map) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (Letter l : w.letters()) out.emplace_back(map(l.generator()), l.sign());
  return Word(new_rank, std::move(out));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9e3779b97f4a7c15ULL;
  for (Letter l : w.letters()) {
    h ^= static_cast<std::size_t>(l.signed_value() + 0x4000) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace mihailova
