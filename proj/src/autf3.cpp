#include "mihailova/autf3.hpp"

#include <sstream>

#include "mihailova/errors.hpp"
#include "mihailova/subgroup.hpp"
#include "mihailova/text.hpp"

namespace mihailova {

Endomorphism3::Endomorphism3(Word image_q, Word image_a, Word image_b)
    : images_{std::move(image_q), std::move(image_a), std::move(image_b)} {
  for (const Word& w : images_) {
    if (w.rank() != 3) throw AlphabetError("endomorphism images must be words in q, a, b");
  }
}

Endomorphism3 Endomorphism3::identity() {
  return {Word::generator(3, kQ), Word::generator(3, kA3), Word::generator(3, kB3)};
}

Word Endomorphism3::apply(const Word& w) const {
  if (w.rank() != 3) throw AlphabetError("endomorphism applied to a word outside F_3");
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const Word& img = image(l.generator());
    if (l.sign() > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(it->inverse());
    }
  }
  return Word(3, std::move(out));
}

Endomorphism3 compose(const Endomorphism3& e1, const Endomorphism3& e2) {
  return {e2.apply(e1.image_q()), e2.apply(e1.image_a()), e2.apply(e1.image_b())};
}

Word lift_to_f3(const Word& f2_word) {
  if (f2_word.rank() != 2) throw AlphabetError("expected a word in a, b");
  return relabel(f2_word, 3, [](int k) { return k + 1; });
}

Endomorphism3 theta_uv(const Word& u, const Word& v) {
  return {lift_to_f3(u) * Word::generator(3, kQ) * lift_to_f3(v), Word::generator(3, kA3),
          Word::generator(3, kB3)};
}

Endomorphism3 theta(const Word& u, const Word& v) { return theta_uv(u.inverse(), v); }

std::vector<Endomorphism3> b_generators() {
  const Word a = Word::generator(2, kA2);
  const Word b = Word::generator(2, kB2);
  const Word one(2);
  return {theta_uv(a.inverse(), one), theta_uv(b.inverse(), one), theta_uv(one, a), theta_uv(one, b)};
}

EmbeddingTable::EmbeddingTable(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty()) throw PreconditionError("embedding table needs at least one image");
  for (const Word& w : images_) {
    if (w.rank() != 2) throw AlphabetError("embedding images must be words in a, b");
  }
}

Word EmbeddingTable::apply(const Word& w) const {
  if (w.rank() != n()) throw AlphabetError("embedding applied to a word of the wrong rank");
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const Word& img = images_[static_cast<std::size_t>(l.generator() - 1)];
    if (l.sign() > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(it->inverse());
    }
  }
  return Word(2, std::move(out));
}

EmbeddingTable fn_into_f2(int n) {
  if (n < 2) throw PreconditionError("fn_into_f2 needs n >= 2, got " + std::to_string(n));
  const Word a = Word::generator(2, kA2);
  const Word b = Word::generator(2, kB2);
  std::vector<Word> images;
  for (int k = 1; k < n; ++k) {
    Word ak = power(a, k - 1);
    images.push_back(ak * b * ak.inverse());
  }
  images.push_back(power(a, n - 1));
  return EmbeddingTable(std::move(images));
}

std::vector<Endomorphism3> orbit_undecidable_subgroup(const Presentation& p) {
  const EmbeddingTable table = fn_into_f2(p.rank());
  std::vector<Endomorphism3> out;
  for (const PairWord& g : mihailova_generators(p)) out.push_back(theta(table.apply(g.left), table.apply(g.right)));
  return out;
}

std::optional<std::pair<Word, Word>> theta_parameters(const Endomorphism3& e) {
  if (e.image_a() != Word::generator(3, kA3) || e.image_b() != Word::generator(3, kB3)) return std::nullopt;
  const Word& img = e.image_q();
  std::optional<std::size_t> q_at;
  for (std::size_t i = 0; i < img.length(); ++i) {
    if (img[i].generator() != kQ) continue;
    if (q_at || img[i].sign() < 0) return std::nullopt;
    q_at = i;
  }
  if (!q_at) return std::nullopt;
  auto lower = [](int k) { return k - 1; };
  Word prefix = relabel(img.slice(0, *q_at), 2, lower);
  Word suffix = relabel(img.slice(*q_at + 1, img.length()), 2, lower);
  return std::make_pair(prefix.inverse(), suffix);
}

std::string format_endomorphism(const Endomorphism3& e) {
  const Alphabet f3 = Alphabet::f3();
  return "q -> " + format_word(e.image_q(), f3) + "\na -> " + format_word(e.image_a(), f3) + "\nb -> " +
         format_word(e.image_b(), f3) + "\n";
}

Endomorphism3 parse_endomorphism(std::string_view text) {
  const Alphabet f3 = Alphabet::f3();
  std::vector<std::optional<Word>> images(3);
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError("expected '<generator> -> <word>'", line_no);
    int g = 0;
    try {
      g = f3.lookup(trim(line.substr(0, arrow)));
      auto& slot = images[static_cast<std::size_t>(g - 1)];
      if (slot) throw ParseError("generator given twice");
      slot = parse_word(line.substr(arrow + 2), f3);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  for (const auto& img : images) {
    if (!img) throw ParseError("endomorphism must give images of q, a and b");
  }
  return {*images[0], *images[1], *images[2]};
}

std::string format_endomorphisms(const std::vector<Endomorphism3>& list) {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i > 0) out += "\n";
    out += format_endomorphism(list[i]);
  }
  return out;
}

std::vector<Endomorphism3> parse_endomorphisms(std::string_view text) {
  std::vector<Endomorphism3> out;
  std::string block;
  std::istringstream in{std::string(text)};
  std::string raw;
  auto flush = [&] {
    if (!trim(block).empty()) out.push_back(parse_endomorphism(block));
    block.clear();
  };
  while (std::getline(in, raw)) {
    if (trim(raw).empty()) {
      flush();
    } else {
      block += raw + "\n";
    }
  }
  flush();
  return out;
}

}  // namespace mihailova
