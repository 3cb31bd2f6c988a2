#ifndef SUBLAT_SPEC_PARSE_HPP_
#define SUBLAT_SPEC_PARSE_HPP_

#include <cctype>
#include <cstddef>
#include <string>

#include "exceptions.hpp"
#include "semigroup.hpp"

namespace sublat {

//! Inline constructor strings, one line each:
//!   spec  := name [":" args]
//!   name  := left_zero | right_zero | chain_semilattice | chain
//!          | rectangular_band | cyclic_group | null_semigroup
//!          | direct_product
//!   args  := int ["," int]            for the scalar constructors
//!   args  := "(" spec "),(" spec ")"  for direct_product
//! `chain` abbreviates chain_semilattice. Whitespace is allowed around
//! tokens. Malformed input raises InvalidEntry with the offending text.

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string const& text) : s_(text) {}

  SemigroupSpec parse_all() {
    SemigroupSpec spec = parse_spec();
    skip_ws();
    if (pos_ != s_.size()) {
      throw InvalidEntry("trailing text in spec: `" + s_.substr(pos_) + "`");
    }
    return spec;
  }

 private:
  SemigroupSpec parse_spec() {
    using K = SemigroupSpec::Kind;
    skip_ws();
    std::string   name = parse_ident();
    SemigroupSpec spec;
    int           arity = 1;
    if (name == "left_zero") {
      spec.kind = K::left_zero;
    } else if (name == "right_zero") {
      spec.kind = K::right_zero;
    } else if (name == "chain_semilattice" || name == "chain") {
      spec.kind = K::chain_semilattice;
    } else if (name == "rectangular_band") {
      spec.kind  = K::rectangular_band;
      arity      = 2;
    } else if (name == "cyclic_group") {
      spec.kind = K::cyclic_group;
    } else if (name == "null_semigroup") {
      spec.kind = K::null_semigroup;
    } else if (name == "direct_product") {
      spec.kind = K::direct_product;
      expect(':');
      expect('(');
      spec.parts.push_back(parse_spec());
      expect(')');
      expect(',');
      expect('(');
      spec.parts.push_back(parse_spec());
      expect(')');
      return spec;
    } else {
      throw InvalidEntry("unknown constructor: `" + name + "`");
    }
    expect(':');
    spec.args.push_back(parse_int());
    for (int i = 1; i < arity; ++i) {
      expect(',');
      spec.args.push_back(parse_int());
    }
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ',') {
      throw InvalidEntry("`" + name + "` takes " + std::to_string(arity)
                         + (arity == 1 ? " argument" : " arguments"));
    }
    return spec;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size()
           && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) {
      throw InvalidEntry("expected a constructor name in spec: `" + s_ + "`");
    }
    return s_.substr(start, pos_ - start);
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) {
      throw InvalidEntry("expected an integer at `" + s_.substr(start) + "`");
    }
    long v = std::stol(s_.substr(start, pos_ - start));
    if (v > 1 << 20) {
      throw InvalidEntry("argument out of range: " + std::to_string(v));
    }
    return static_cast<int>(v);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) {
      throw InvalidEntry(std::string("expected `") + c + "` at `"
                         + (pos_ < s_.size() ? s_.substr(pos_) : std::string("<end>"))
                         + "`");
    }
    ++pos_;
  }

  std::string const& s_;
  std::size_t        pos_ = 0;
};

}  // namespace detail

inline SemigroupSpec parse_spec(std::string const& text) {
  return detail::SpecParser(text).parse_all();
}

inline FiniteSemigroup construct(std::string const& text) {
  return construct(parse_spec(text));
}

}  // namespace sublat

#endif  // SUBLAT_SPEC_PARSE_HPP_
