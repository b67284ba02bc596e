#ifndef ANS_GREEN_HPP_
#define ANS_GREEN_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ans/semigroup.hpp"

namespace ans {

  enum class GreenRelation { R, L, D, J, H };

  std::string   to_string(GreenRelation rel);
  GreenRelation green_relation_from_string(std::string const& name);

  //! A partition of {0, .., size-1}.  Classes are sorted internally and
  //! ordered by their least element, so equal partitions compare equal.
  class Partition {
   public:
    Partition() = default;

    // Builds from a class label per element (labels arbitrary).
    template <typename Label>
    static Partition from_labels(std::vector<Label> const& labels);

    std::size_t size() const noexcept {
      return _classes.size();
    }
    std::vector<std::vector<element_index>> const& classes() const noexcept {
      return _classes;
    }
    std::size_t class_of(std::size_t x) const {
      return _class_of.at(x);
    }
    bool related(std::size_t x, std::size_t y) const {
      return class_of(x) == class_of(y);
    }

    // Every class of *this is contained in a class of `coarser`.
    bool refines(Partition const& coarser) const;

    // sizes of the classes, sorted ascending
    std::vector<std::size_t> class_sizes() const;

    bool operator==(Partition const& other) const {
      return _classes == other._classes;
    }

   private:
    std::vector<std::vector<element_index>> _classes;
    std::vector<std::size_t>                _class_of;
  };

  //! Green's relations of a finite semigroup together with idempotent and
  //! regular flags and the eventual-regularity index of every element.
  struct GreenStructure {
    Partition r;
    Partition l;
    Partition d;
    Partition j;
    Partition h;

    std::vector<bool> idempotent;
    std::vector<bool> regular;
    // least m >= 1 with x^m regular (0 if none within |S|)
    std::vector<std::size_t> eventual_index;

    Partition const& partition(GreenRelation rel) const;
  };

  //! Green's relations from principal ideals with the identity adjoined:
  //! a R b iff aS^1 = bS^1, a L b iff S^1a = S^1b, a J b iff
  //! S^1aS^1 = S^1bS^1.  D is the join of R and L (union-find), H = R n L.
  //! Throws ans::Error if D != J, which cannot happen for a finite
  //! associative table.
  GreenStructure green_brute(FiniteSemigroup const& sg, std::size_t jobs = 1);

  std::vector<element_index> idempotents(FiniteSemigroup const& sg);

  // x with x y x = x for some y
  std::vector<element_index> regular_elements(FiniteSemigroup const& sg);

  std::vector<std::size_t> eventual_regularity(FiniteSemigroup const& sg);

  struct CountsRecord {
    std::size_t r           = 0;
    std::size_t l           = 0;
    std::size_t d           = 0;
    std::size_t j           = 0;
    std::size_t h           = 0;
    std::size_t idempotents = 0;
    std::size_t regular     = 0;
    // relation name -> sorted class sizes
    std::map<std::string, std::vector<std::size_t>> class_sizes;
  };

  CountsRecord class_counts(GreenStructure const& gs);

  template <typename Label>
  Partition Partition::from_labels(std::vector<Label> const& labels) {
    Partition                        p;
    std::map<Label, std::size_t>     id;
    p._class_of.resize(labels.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto [it, inserted] = id.emplace(labels[x], p._classes.size());
      if (inserted) {
        p._classes.emplace_back();
      }
      p._classes[it->second].push_back(static_cast<element_index>(x));
      p._class_of[x] = it->second;
    }
    // classes were created in order of their least element
    return p;
  }

}  // namespace ans

#endif  // ANS_GREEN_HPP_
