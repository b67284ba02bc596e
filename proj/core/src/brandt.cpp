#include "ans/brandt.hpp"

#include <charconv>

#include "ans/config.hpp"
#include "ans/exception.hpp"

namespace ans {

  namespace {
    std::size_t parse_index(std::string_view text, std::string_view whole) {
      std::size_t value = 0;
      auto const* first = text.data();
      auto const* last  = text.data() + text.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || text.empty()) {
        throw Error("cannot parse Brandt element \"" + std::string(whole)
                    + "\"");
      }
      return value;
    }
  }  // namespace

  BrandtElem BrandtElem::pair(std::size_t i, std::size_t j) {
    if (i == 0 || j == 0 || i > max_representable_degree
        || j > max_representable_degree) {
      throw Error("Brandt pair index out of range: (" + std::to_string(i) + ","
                  + std::to_string(j) + ")");
    }
    return BrandtElem(static_cast<std::uint8_t>(i),
                      static_cast<std::uint8_t>(j));
  }

  std::size_t BrandtElem::row() const {
    if (is_zero()) {
      throw Error("the zero of B_n has no first coordinate");
    }
    return _row;
  }

  std::size_t BrandtElem::col() const {
    if (is_zero()) {
      throw Error("the zero of B_n has no second coordinate");
    }
    return _col;
  }

  std::string BrandtElem::to_string() const {
    if (is_zero()) {
      return "theta";
    }
    return "(" + std::to_string(_row) + "," + std::to_string(_col) + ")";
  }

  BrandtElem BrandtElem::parse(std::string_view text) {
    if (text == "theta") {
      return zero();
    }
    if (text.size() < 5 || text.front() != '(' || text.back() != ')') {
      throw Error("cannot parse Brandt element \"" + std::string(text) + "\"");
    }
    auto const inner = text.substr(1, text.size() - 2);
    auto const comma = inner.find(',');
    if (comma == std::string_view::npos) {
      throw Error("cannot parse Brandt element \"" + std::string(text) + "\"");
    }
    return pair(parse_index(inner.substr(0, comma), text),
                parse_index(inner.substr(comma + 1), text));
  }

  Brandt::Brandt(std::size_t n) : _n(n) {
    if (n == 0 || n > max_representable_degree) {
      throw Error("Brandt semigroup degree must be in [1, "
                  + std::to_string(max_representable_degree) + "], got "
                  + std::to_string(n));
    }
  }

  bool Brandt::contains(BrandtElem x) const noexcept {
    return x.is_zero() || (x.row() <= _n && x.col() <= _n);
  }

  BrandtElem Brandt::at(std::size_t index) const {
    if (index >= size()) {
      throw Error("index " + std::to_string(index) + " out of range for B_"
                  + std::to_string(_n));
    }
    if (index == 0) {
      return BrandtElem::zero();
    }
    return BrandtElem::pair((index - 1) / _n + 1, (index - 1) % _n + 1);
  }

  std::size_t Brandt::index_of(BrandtElem x) const {
    if (!contains(x)) {
      throw Error(x.to_string() + " is not an element of B_"
                  + std::to_string(_n));
    }
    if (x.is_zero()) {
      return 0;
    }
    return 1 + (x.row() - 1) * _n + (x.col() - 1);
  }

  BrandtElem Brandt::add(BrandtElem a, BrandtElem b) const {
    return at(add_index(index_of(a), index_of(b)));
  }

  std::vector<BrandtElem> Brandt::elements() const {
    std::vector<BrandtElem> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      out.push_back(at(i));
    }
    return out;
  }

  std::vector<BrandtElem> Brandt::idempotents() const {
    std::vector<BrandtElem> out{BrandtElem::zero()};
    for (std::size_t k = 1; k <= _n; ++k) {
      out.push_back(BrandtElem::pair(k, k));
    }
    return out;
  }

  BrandtElem brandt_add(BrandtElem a, BrandtElem b, std::size_t n) {
    return Brandt(n).add(a, b);
  }

  std::vector<BrandtElem> brandt_idempotents(std::size_t n) {
    return Brandt(n).idempotents();
  }

}  // namespace ans
