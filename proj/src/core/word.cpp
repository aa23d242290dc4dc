#include "core/word.hpp"

#include <sstream>

#include "core/errors.hpp"

namespace permdiam {

void GenSet::add(std::string label, Perm p) {
  if (p.degree() != degree_)
    throw DomainError("generator \"" + label + "\" has degree " +
                      std::to_string(p.degree()) + ", expected " + std::to_string(degree_));
  if (index_.count(label)) throw DomainError("duplicate generator label \"" + label + "\"");
  index_.emplace(label, gens_.size());
  gens_.emplace_back(std::move(label), std::move(p));
}

const Perm* GenSet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  return it == index_.end() ? nullptr : &gens_[it->second].second;
}

std::optional<std::size_t> GenSet::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Perm> GenSet::perms() const {
  std::vector<Perm> out;
  out.reserve(gens_.size());
  for (const auto& [_, p] : gens_) out.push_back(p);
  return out;
}

std::string GenSet::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ',';
    os << gens_[i].first << '=' << gens_[i].second.cycle_string();
  }
  return os.str();
}

GenSet genset_from_perms(std::size_t degree, const std::vector<Perm>& perms,
                         const std::string& prefix) {
  GenSet X(degree);
  for (std::size_t i = 0; i < perms.size(); ++i) X.add(prefix + std::to_string(i), perms[i]);
  return X;
}

Word Word::single(std::string label, int sign) {
  Word w;
  w.append(std::move(label), sign);
  return w;
}

void Word::append(std::string label, int sign) {
  letters_.push_back(Letter{std::move(label), sign});
}

void Word::append(const Word& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back(Letter{it->label, -it->sign});
  return r;
}

Word Word::operator+(const Word& w) const {
  Word r = *this;
  r.append(w);
  return r;
}

Word Word::freely_reduced() const {
  std::vector<Letter> stack;
  for (const auto& l : letters_) {
    if (!stack.empty() && stack.back().label == l.label && stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

Word Word::substituted(const std::map<std::string, Word>& table) const {
  Word r;
  for (const auto& l : letters_) {
    auto it = table.find(l.label);
    if (it == table.end()) throw DomainError("no substitution for label \"" + l.label + "\"");
    r.append(l.sign > 0 ? it->second : it->second.inverse());
  }
  return r;
}

Word Word::pow(std::int64_t e) const {
  Word base = e < 0 ? inverse() : *this;
  std::int64_t k = e < 0 ? -e : e;
  Word r;
  for (std::int64_t i = 0; i < k; ++i) r.append(base);
  return r;
}

Word Word::conjugate(const Word& y, const Word& g) { return g.inverse() + y + g; }

Word Word::commutator(const Word& a, const Word& b) {
  return a.inverse() + b.inverse() + a + b;
}

Perm Word::evaluate(const GenSet& X) const {
  Perm r(X.degree());
  for (const auto& l : letters_) {
    const Perm* p = X.find(l.label);
    if (!p) throw DomainError("word uses label \"" + l.label + "\" not in the generating set");
    r = l.sign > 0 ? r * *p : r * p->inverse();
  }
  return r;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << letters_[i].label;
    if (letters_[i].sign < 0) os << "^-1";
  }
  return os.str();
}

Word Word::parse(std::string_view text) {
  Word w;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "1" && w.empty() && is.peek() == EOF) break;
    int sign = 1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      std::string e = tok.substr(pos + 1);
      if (e != "-1" && e != "1") throw ParseError("bad exponent in word token \"" + tok + "\"");
      if (e == "-1") sign = -1;
      tok = tok.substr(0, pos);
    }
    if (tok.empty()) throw ParseError("empty label in word");
    w.append(tok, sign);
  }
  return w;
}

GenSet parse_genset(std::string_view text, std::size_t degree) {
  GenSet X(degree);
  std::size_t i = 0, auto_idx = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    std::string label;
    skip_ws();
    if (i < text.size() && text[i] != '(') {
      std::size_t start = i;
      while (i < text.size() && text[i] != '=' && text[i] != '(' && text[i] != ',') ++i;
      if (i >= text.size() || text[i] != '=')
        throw ParseError("expected '=' after generator label at \"" +
                         std::string(text.substr(start, 12)) + "\"");
      label = std::string(text.substr(start, i - start));
      while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back())))
        label.pop_back();
      if (label.empty()) throw ParseError("empty generator label");
      ++i;  // '='
    } else {
      label = "g" + std::to_string(auto_idx);
    }
    ++auto_idx;
    skip_ws();
    std::size_t start = i;
    int depth = 0;
    while (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (text[i] == ',' && depth == 0) break;
      ++i;
    }
    X.add(label, parse_cycles(text.substr(start, i - start), degree));
    if (i < text.size() && text[i] == ',') ++i;
    skip_ws();
  }
  return X;
}

}  // namespace permdiam
