#include "ans/analytic.hpp"

#include "ans/exception.hpp"

namespace ans {

  namespace {
    void check_degrees(CanonicalElem const& f, CanonicalElem const& g) {
      if (f.degree() != g.degree()) {
        throw Error("cannot relate elements of A^+(B_"
                    + std::to_string(f.degree()) + ") and A^+(B_"
                    + std::to_string(g.degree()) + ")");
      }
    }

    bool is_constant(CanonicalElem const& f) {
      return f.shape() == Shape::zero || f.shape() == Shape::constant;
    }

    bool additive_r(CanonicalElem const& f, CanonicalElem const& g) {
      if (f.shape() != g.shape()) {
        return false;
      }
      switch (f.shape()) {
        case Shape::zero:
          return true;
        case Shape::constant:
          return f.get<ConstantMap>().value.row()
                 == g.get<ConstantMap>().value.row();
        case Shape::singleton: {
          auto const& a = f.get<SingletonMap>();
          auto const& b = g.get<SingletonMap>();
          return a.source == b.source && a.target.row() == b.target.row();
        }
        case Shape::n_support: {
          auto const& a = f.get<NSupportMap>();
          auto const& b = g.get<NSupportMap>();
          return a.column_in == b.column_in && a.row_action == b.row_action;
        }
      }
      return false;
    }

    bool additive_l(CanonicalElem const& f, CanonicalElem const& g) {
      if (f.shape() != g.shape()) {
        return false;
      }
      switch (f.shape()) {
        case Shape::zero:
          return true;
        case Shape::constant:
          return f.get<ConstantMap>().value.col()
                 == g.get<ConstantMap>().value.col();
        case Shape::singleton: {
          auto const& a = f.get<SingletonMap>();
          auto const& b = g.get<SingletonMap>();
          return a.source == b.source && a.target.col() == b.target.col();
        }
        case Shape::n_support:
          return f == g;
      }
      return false;
    }

    bool additive_d(CanonicalElem const& f, CanonicalElem const& g) {
      if (f.shape() != g.shape()) {
        return false;
      }
      switch (f.shape()) {
        case Shape::zero:
        case Shape::constant:
          return true;
        case Shape::singleton:
          return f.get<SingletonMap>().source == g.get<SingletonMap>().source;
        case Shape::n_support:
          return additive_r(f, g);
      }
      return false;
    }

    bool multiplicative_r(CanonicalElem const& f, CanonicalElem const& g) {
      if (is_constant(f) || is_constant(g)) {
        return is_constant(f) && is_constant(g);
      }
      return f.support() == g.support();
    }

    bool multiplicative_l(CanonicalElem const& f, CanonicalElem const& g) {
      return f.image() == g.image();
    }

    bool multiplicative_d(CanonicalElem const& f, CanonicalElem const& g) {
      return f.support_size() == g.support_size()
             || (is_constant(f) && is_constant(g));
    }
  }  // namespace

  bool green_analytic_additive(CanonicalElem const& f,
                               CanonicalElem const& g,
                               GreenRelation        rel) {
    check_degrees(f, g);
    switch (rel) {
      case GreenRelation::R:
        return additive_r(f, g);
      case GreenRelation::L:
        return additive_l(f, g);
      case GreenRelation::D:
      case GreenRelation::J:
        return additive_d(f, g);
      case GreenRelation::H:
        return additive_r(f, g) && additive_l(f, g);
    }
    return false;
  }

  bool green_analytic_multiplicative(CanonicalElem const& f,
                                     CanonicalElem const& g,
                                     GreenRelation        rel) {
    check_degrees(f, g);
    switch (rel) {
      case GreenRelation::R:
        return multiplicative_r(f, g);
      case GreenRelation::L:
        return multiplicative_l(f, g);
      case GreenRelation::D:
      case GreenRelation::J:
        return multiplicative_d(f, g);
      case GreenRelation::H:
        return multiplicative_r(f, g) && multiplicative_l(f, g);
    }
    return false;
  }

}  // namespace ans
