#pragma once

// Reference product in the Carlitz ring by word rewriting: swap the leftmost
// out-of-order adjacent pair of generators until every word is sorted.

#include <utility>
#include <vector>

#include "carlitz/ring.hpp"
#include "carlitz/special.hpp"

namespace carlitz::testing {

// Letters: 0 = tau, 1 = d_s, 2 + j = Delta_{j+1}.
using Word = std::vector<std::uint32_t>;

// Scalar lam written right after `prefix`, moved to the far left.
inline PerfectRational move_left(const Word& prefix, std::size_t len, PerfectRational lam) {
  for (std::size_t i = len; i-- > 0;) {
    if (prefix[i] == 0) lam = lam.frobenius();
    else if (prefix[i] == 1) lam = lam.qth_root();
  }
  return lam;
}

inline Word word_of(const OpMonomial& m) {
  Word w(m.l, 0);
  w.insert(w.end(), m.mu, 1);
  for (std::size_t j = 0; j < m.is.size(); ++j) w.insert(w.end(), m.is[j], static_cast<std::uint32_t>(2 + j));
  return w;
}

inline RingElem normalize_words(const Field& f, std::uint32_t n, std::vector<std::pair<PerfectRational, Word>> work) {
  const PerfectRational b1 = bracket(f, 1);
  const PerfectRational b1r = b1.qth_root();
  RingElem out(f, n);
  while (!work.empty()) {
    auto [c, w] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      OpMonomial m{0, 0, std::vector<std::uint32_t>(n, 0)};
      for (auto a : w) {
        if (a == 0) ++m.l;
        else if (a == 1) ++m.mu;
        else ++m.is[a - 2];
      }
      out.add_term(m, c);
      continue;
    }
    const std::uint32_t a = w[i], b = w[i + 1];
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    work.emplace_back(c, swapped);
    if (a >= 2 && b >= 2) continue;
    // Lower-order correction term.
    Word lower(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    PerfectRational lam(f);
    if (a == 1 && b == 0) {
      lam = b1r;  // d tau = tau d + [1]^{1/q}
    } else if (b == 0) {
      lam = b1;  // Delta tau = tau Delta + [1] tau
      lower.push_back(0);
    } else {
      lam = -b1r;  // Delta d = d Delta - [1]^{1/q} d
      lower.push_back(1);
    }
    lower.insert(lower.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
    work.emplace_back(c * move_left(w, i, lam), lower);
  }
  return out;
}

inline RingElem word_ring_mul(const RingElem& x, const RingElem& y) {
  std::vector<std::pair<PerfectRational, Word>> work;
  for (const auto& [m1, c1] : x.terms()) {
    const Word w1 = word_of(m1);
    for (const auto& [m2, c2] : y.terms()) {
      Word w = w1;
      const Word w2 = word_of(m2);
      w.insert(w.end(), w2.begin(), w2.end());
      work.emplace_back(c1 * move_left(w1, w1.size(), c2), w);
    }
  }
  return normalize_words(x.field(), x.n(), std::move(work));
}

}  // namespace carlitz::testing
