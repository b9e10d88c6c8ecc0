#pragma once

// Porter's suffix-stripping stemmer (the classic 1980 rule set). Operates on
// lowercase ASCII tokens; anything shorter than three letters is returned
// untouched, matching the original algorithm's behaviour.

#include <string>
#include <string_view>

namespace sentinel {

namespace porter_detail {

// Indices are signed on purpose: rules can shrink the stem to nothing, and
// the bookkeeping below relies on k_/j_ briefly holding -1.
class Stemmer {
 public:
  explicit Stemmer(std::string word)
      : b_(std::move(word)), k_(static_cast<int>(b_.size()) - 1) {}

  std::string run() {
    if (b_.size() < 3) return b_;
    step1a();
    step1b();
    step1c();
    step2();
    step3();
    step4();
    step5a();
    step5b();
    return b_.substr(0, static_cast<size_t>(k_ + 1));
  }

 private:
  std::string b_;  // working buffer
  int k_;          // index of last letter of the current stem
  int j_ = 0;      // index of last letter of the stem left by the rule match

  bool cons(int i) const {
    switch (b_[static_cast<size_t>(i)]) {
      case 'a': case 'e': case 'i': case 'o': case 'u': return false;
      case 'y': return i == 0 ? true : !cons(i - 1);
      default: return true;
    }
  }

  char at(int i) const { return b_[static_cast<size_t>(i)]; }

  // Measure of the stem b_[0..j_]: the m in [C](VC)^m[V].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i)
      if (!cons(i)) return true;
    return false;
  }

  bool double_cons(int i) const {
    if (i < 1) return false;
    if (at(i) != at(i - 1)) return false;
    return cons(i);
  }

  // cvc at i where the final c is not w, x or y; used to restore a trailing
  // e (hop-ing -> hop vs. fil-ing -> file).
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    char c = at(i);
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view s) {
    int len = static_cast<int>(s.size());
    if (len > k_ + 1) return false;
    if (b_.compare(static_cast<size_t>(k_ + 1 - len), s.size(), s) != 0) return false;
    j_ = k_ - len;
    return true;
  }

  void set_to(std::string_view s) {
    b_.replace(static_cast<size_t>(j_ + 1), static_cast<size_t>(k_ - j_), s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void replace_if_m_gt0(std::string_view s) {
    if (m() > 0) set_to(s);
  }

  void step1a() {
    if (at(k_) != 's') return;
    if (ends("sses")) k_ -= 2;
    else if (ends("ies")) set_to("i");
    else if (at(k_ - 1) != 's') --k_;
  }

  void step1b() {
    if (ends("eed")) {
      if (m() > 0) --k_;
      return;
    }
    if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) set_to("ate");
      else if (ends("bl")) set_to("ble");
      else if (ends("iz")) set_to("ize");
      else if (double_cons(k_)) {
        char c = at(k_);
        if (c != 'l' && c != 's' && c != 'z') --k_;
      } else {
        j_ = k_;
        if (m() == 1 && cvc(k_)) set_to("e");
      }
    }
  }

  void step1c() {
    if (k_ >= 0 && ends("y") && vowel_in_stem()) b_[static_cast<size_t>(k_)] = 'i';
  }

  void step2() {
    if (k_ < 1) return;
    switch (at(k_ - 1)) {
      case 'a':
        if (ends("ational")) { replace_if_m_gt0("ate"); break; }
        if (ends("tional")) { replace_if_m_gt0("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { replace_if_m_gt0("ence"); break; }
        if (ends("anci")) { replace_if_m_gt0("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { replace_if_m_gt0("ize"); break; }
        break;
      case 'l':
        if (ends("abli")) { replace_if_m_gt0("able"); break; }
        if (ends("alli")) { replace_if_m_gt0("al"); break; }
        if (ends("entli")) { replace_if_m_gt0("ent"); break; }
        if (ends("eli")) { replace_if_m_gt0("e"); break; }
        if (ends("ousli")) { replace_if_m_gt0("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { replace_if_m_gt0("ize"); break; }
        if (ends("ation")) { replace_if_m_gt0("ate"); break; }
        if (ends("ator")) { replace_if_m_gt0("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { replace_if_m_gt0("al"); break; }
        if (ends("iveness")) { replace_if_m_gt0("ive"); break; }
        if (ends("fulness")) { replace_if_m_gt0("ful"); break; }
        if (ends("ousness")) { replace_if_m_gt0("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { replace_if_m_gt0("al"); break; }
        if (ends("iviti")) { replace_if_m_gt0("ive"); break; }
        if (ends("biliti")) { replace_if_m_gt0("ble"); break; }
        break;
      default:
        break;
    }
  }

  void step3() {
    if (k_ < 0) return;
    switch (at(k_)) {
      case 'e':
        if (ends("icate")) { replace_if_m_gt0("ic"); break; }
        if (ends("ative")) { replace_if_m_gt0(""); break; }
        if (ends("alize")) { replace_if_m_gt0("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { replace_if_m_gt0("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { replace_if_m_gt0("ic"); break; }
        if (ends("ful")) { replace_if_m_gt0(""); break; }
        break;
      case 's':
        if (ends("ness")) { replace_if_m_gt0(""); break; }
        break;
      default:
        break;
    }
  }

  void step4() {
    if (k_ < 1) return;
    switch (at(k_ - 1)) {
      case 'a': if (ends("al")) break; return;
      case 'c': if (ends("ance") || ends("ence")) break; return;
      case 'e': if (ends("er")) break; return;
      case 'i': if (ends("ic")) break; return;
      case 'l': if (ends("able") || ends("ible")) break; return;
      case 'n':
        if (ends("ant") || ends("ement") || ends("ment") || ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j_ >= 0 && (at(j_) == 's' || at(j_) == 't')) break;
        if (ends("ou")) break;
        return;
      case 's': if (ends("ism")) break; return;
      case 't': if (ends("ate") || ends("iti")) break; return;
      case 'u': if (ends("ous")) break; return;
      case 'v': if (ends("ive")) break; return;
      case 'z': if (ends("ize")) break; return;
      default: return;
    }
    if (m() > 1) k_ = j_;
  }

  void step5a() {
    if (k_ < 0) return;
    j_ = k_;
    if (at(k_) != 'e') return;
    int a = m();
    if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
  }

  void step5b() {
    if (k_ < 1) return;
    j_ = k_;
    if (at(k_) == 'l' && double_cons(k_) && m() > 1) --k_;
  }
};

}  // namespace porter_detail

// Stems one lowercase ASCII token.
inline std::string stem_token(std::string_view token) {
  return porter_detail::Stemmer(std::string(token)).run();
}

}  // namespace sentinel
