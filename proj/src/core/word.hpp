#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core/perm.hpp"

namespace permdiam {

/// An ordered, labelled generating set of a fixed degree. Labels are unique.
class GenSet {
 public:
  explicit GenSet(std::size_t degree) : degree_(degree) {}

  void add(std::string label, Perm p);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return gens_.size(); }
  const std::string& label(std::size_t i) const { return gens_[i].first; }
  const Perm& perm(std::size_t i) const { return gens_[i].second; }
  const std::vector<std::pair<std::string, Perm>>& entries() const { return gens_; }

  const Perm* find(std::string_view label) const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  std::vector<Perm> perms() const;

  /// "a=(0 1 2),b=(0 1)" — round-trips through parse_genset.
  std::string describe() const;

 private:
  std::size_t degree_;
  std::vector<std::pair<std::string, Perm>> gens_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Builds a GenSet with labels g0, g1, ... (or a custom prefix).
GenSet genset_from_perms(std::size_t degree, const std::vector<Perm>& perms,
                         const std::string& prefix = "g");

struct Letter {
  std::string label;
  int sign = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

/// A signed sequence of generator labels. The empty word evaluates to the
/// identity. Words do not own a generating set; evaluation takes one.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word single(std::string label, int sign = 1);

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  void append(std::string label, int sign);
  void append(const Word& w);

  /// Reverse with flipped signs; evaluates to the inverse.
  Word inverse() const;

  /// Cancels adjacent letter/inverse pairs.
  Word freely_reduced() const;

  Word operator+(const Word& w) const;

  /// Replaces every letter by the word mapped to its label (inverted for
  /// negative letters). Throws DomainError on a missing label.
  Word substituted(const std::map<std::string, Word>& table) const;

  Word pow(std::int64_t e) const;

  static Word conjugate(const Word& y, const Word& g);   // g^-1 y g
  static Word commutator(const Word& a, const Word& b);  // a^-1 b^-1 a b

  /// Left-to-right composition of the signed generators.
  /// Throws DomainError on a label missing from X.
  Perm evaluate(const GenSet& X) const;

  /// "a b^-1 c"; empty word renders as "1".
  std::string str() const;

  /// Parses the str() format (whitespace-separated tokens, "^-1" suffix).
  static Word parse(std::string_view text);

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Parses "a=(0 1 2),b=(3 4)" or unlabelled "(0 1 2),(3 4)" (labels g0,g1,...).
/// Degree must be supplied; use parse_group_description for the full grammar.
GenSet parse_genset(std::string_view text, std::size_t degree);

}  // namespace permdiam
