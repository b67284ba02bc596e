#include "ans/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "ans/config.hpp"
#include "ans/exception.hpp"

namespace ans {

  Perm::Perm(std::vector<std::size_t> const& images) {
    std::size_t const n = images.size();
    if (n == 0 || n > max_representable_degree) {
      throw Error("permutation degree must be in [1, "
                  + std::to_string(max_representable_degree) + "]");
    }
    std::vector<bool> seen(n, false);
    for (auto x : images) {
      if (x == 0 || x > n || seen[x - 1]) {
        throw Error("not a permutation of [" + std::to_string(n) + "]");
      }
      seen[x - 1] = true;
    }
    _images.assign(images.begin(), images.end());
  }

  Perm Perm::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t(1));
    return Perm(images);
  }

  Perm Perm::inverse() const {
    std::vector<std::size_t> inv(degree());
    for (std::size_t i = 0; i < degree(); ++i) {
      inv[_images[i] - 1] = i + 1;
    }
    return Perm(inv);
  }

  bool Perm::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i + 1) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::size_t> Perm::images() const {
    return {_images.begin(), _images.end()};
  }

  std::string Perm::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(_images[i]);
    }
    return out + "]";
  }

  Perm Perm::parse(std::string const& text) {
    if (text.size() < 3 || text.front() != '[' || text.back() != ']') {
      throw Error("cannot parse permutation \"" + text + "\"");
    }
    std::vector<std::size_t> images;
    char const*              it   = text.data() + 1;
    char const*              last = text.data() + text.size() - 1;
    while (it < last) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(it, last, value);
      if (ec != std::errc() || (ptr != last && *ptr != ',')) {
        throw Error("cannot parse permutation \"" + text + "\"");
      }
      images.push_back(value);
      it = (ptr == last) ? last : ptr + 1;
    }
    return Perm(images);
  }

  Perm operator*(Perm const& p, Perm const& q) {
    if (p.degree() != q.degree()) {
      throw Error("cannot compose permutations of degree "
                  + std::to_string(p.degree()) + " and "
                  + std::to_string(q.degree()));
    }
    std::vector<std::size_t> images(p.degree());
    for (std::size_t i = 1; i <= p.degree(); ++i) {
      images[i - 1] = q(p(i));
    }
    return Perm(images);
  }

  std::vector<Perm> enumerate_sn(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t(1));
    std::vector<Perm> out;
    out.reserve(factorial(n));
    do {
      out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }

  std::size_t factorial(std::size_t n) {
    std::size_t out = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      out *= i;
    }
    return out;
  }

}  // namespace ans
